#include "helpenum/help_engine.hpp"

#include <numeric>
#include <stdexcept>

namespace helpenum {

const AugmentationTuple& PowerAssignment::at(long long e) const {
    auto it = by_order.find(e);
    if (it == by_order.end())
        throw std::logic_error("power assignment missing order " + std::to_string(e));
    return it->second;
}

const Cyclotomic& CharacterView::value_at(std::size_t cls) const {
    if (table_) return table_->characters().at(row_).at(cls);
    std::size_t col = brauer_->column_of(cls);
    if (col == static_cast<std::size_t>(-1))
        throw std::logic_error("Brauer character evaluated on a " + std::to_string(brauer_->prime) +
                               "-singular class (index " + std::to_string(cls) + ")");
    return brauer_->characters.at(row_).at(col);
}

Rational CharacterView::degree() const {
    auto q = value_at(0).as_rational();
    if (!q) throw ValidationError("character degree is not rational");
    return *q;
}

std::string CharacterView::table_id() const {
    return table_ ? table_->name() : brauer_->name;
}

bool CharacterView::is_trivial() const {
    const auto& row = table_ ? table_->characters().at(row_) : brauer_->characters.at(row_);
    for (std::size_t i = 1; i < row.size(); ++i)
        if (!row[i].equals(row[0])) return false;
    return true;
}

std::vector<std::size_t> admissible_classes(const CharacterTable& table, long long k) {
    if (k < 2) throw std::invalid_argument("admissible_classes: k must be at least 2");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < table.class_count(); ++i)
        if (k % table.classes()[i].element_order == 0) out.push_back(i);
    return out;
}

std::vector<Congruence> prime_power_divisibility(const CharacterTable& table, long long k) {
    std::vector<Congruence> out;
    long long p = 0, n = 0, kk = k;
    for (long long q = 2; q * q <= kk; ++q) {
        if (kk % q == 0) { p = q; break; }
    }
    if (p == 0) p = kk;
    while (kk % p == 0) { kk /= p; ++n; }
    if (kk != 1) return out;  // not a prime power; the rule is stated for p^n only
    long long pm = p;
    for (long long m = 1; m < n; ++m, pm *= p) {
        Congruence c;
        c.classes = table.classes_of_order(pm);
        if (c.classes.empty()) continue;
        c.modulus = p;
        c.tag = "divisibility:order" + std::to_string(pm) + ":mod" + std::to_string(p);
        out.push_back(std::move(c));
    }
    return out;
}

Cyclotomic chi_on_unit(const CharacterView& chi, const AugmentationTuple& t) {
    Cyclotomic acc;
    for (const auto& [cls, nu] : t.entries) {
        if (nu == 0) continue;
        acc = acc + chi.value_at(cls).scaled(Rational(nu));
    }
    return acc;
}

LinearForm mu_linear_form(const CharacterView& chi, long long k, long long l,
                          const PowerAssignment& pa, const CharacterTable& base) {
    if (k < 1) throw std::invalid_argument("mu_linear_form: k must be positive");
    if (chi.prime() != 0 && k % chi.prime() == 0)
        throw std::invalid_argument("mu_linear_form: Brauer table mod " + std::to_string(chi.prime()) +
                                    " is not applicable to units of order " + std::to_string(k));
    LinearForm f;
    f.constant = 0;
    for (long long d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        long long e = k / d;
        // z^{-dl} where z = e(1/k); the product with chi(u^d) lies in Q(zeta_e)
        // and the trace is taken over that field, whatever the storage order.
        Cyclotomic zf = Cyclotomic::root(k, -(d * l) % k);
        if (d == 1) {
            for (std::size_t i : admissible_classes(base, k)) {
                Rational c = (chi.value_at(i) * zf).trace_over(k);
                if (c != 0) f.coeffs[i] += c;
            }
        } else {
            Cyclotomic val = chi_on_unit(chi, pa.at(e));
            f.constant += (val * zf).trace_over(e);
        }
    }
    for (auto it = f.coeffs.begin(); it != f.coeffs.end();) {
        if (it->second == 0) it = f.coeffs.erase(it);
        else ++it;
    }
    return f;
}

ConstraintSystem build_system(const CharacterTable& base,
                              std::span<const BrauerTable* const> brauers,
                              bool include_ordinary,
                              long long k, const PowerAssignment& pa) {
    ConstraintSystem sys;
    sys.order = k;
    sys.variables = admissible_classes(base, k);
    sys.congruences = prime_power_divisibility(base, k);

    std::size_t group = 0;
    auto add_rows = [&](auto&& make_view, std::size_t nrows) {
        for (std::size_t r = 0; r < nrows; ++r) {
            CharacterView chi = make_view(r);
            if (chi.is_trivial()) continue;
            ++group;
            for (long long l = 0; l < k; ++l) {
                TaggedForm tf;
                tf.form = mu_linear_form(chi, k, l, pa, base);
                tf.tag = chi.table_id() + ":chi" + std::to_string(r + 1) + ":l" + std::to_string(l);
                tf.group = group;
                tf.degree = chi.degree();
                sys.forms.push_back(std::move(tf));
            }
        }
    };

    if (include_ordinary)
        add_rows([&](std::size_t r) { return CharacterView(base, r); }, base.character_count());
    for (const BrauerTable* b : brauers) {
        if (k % b->prime == 0) continue;  // applicable only when p does not divide k
        add_rows([&](std::size_t r) { return CharacterView(*b, r); }, b->character_count());
    }
    return sys;
}

}  // namespace helpenum
