#pragma once

#include "helpenum/grouptable.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace helpenum {

/// Partial-augmentation vector of a torsion unit of a given order: integer
/// entries over class indices, all other partial augmentations being zero.
/// The identity unit (order 1) is the tuple {identity class -> 1}.
struct AugmentationTuple {
    long long order = 1;
    std::map<std::size_t, long long> entries;  // class index -> nu, zeros omitted

    static AugmentationTuple identity() { return {1, {{0, 1}}}; }

    long long at(std::size_t cls) const {
        auto it = entries.find(cls);
        return it == entries.end() ? 0 : it->second;
    }
    long long sum() const {
        long long s = 0;
        for (const auto& [c, v] : entries) s += v;
        return s;
    }
    /// Exactly one nonzero partial augmentation (the trivial pattern).
    bool single_nonzero() const { return entries.size() == 1; }

    bool operator==(const AugmentationTuple& o) const {
        return order == o.order && entries == o.entries;
    }
    bool operator<(const AugmentationTuple& o) const {
        if (order != o.order) return order < o.order;
        return entries < o.entries;
    }
};

/// Consistent choice of augmentation tuples for all proper powers u^d of a
/// candidate unit, keyed by the power's order e = k/d.  Order 1 always maps
/// to the identity tuple.
struct PowerAssignment {
    std::map<long long, AugmentationTuple> by_order;

    const AugmentationTuple& at(long long e) const;
    bool operator==(const PowerAssignment& o) const { return by_order == o.by_order; }
};

/// Integer-scaled linear form k*mu_l as a function of the top-level nu
/// variables: constant + sum coeffs[i] * nu_i.  The HeLP constraint is
/// value >= 0 and value == 0 (mod k).
struct LinearForm {
    Rational constant;
    std::map<std::size_t, Rational> coeffs;

    Rational eval(const AugmentationTuple& t) const {
        Rational v = constant;
        for (const auto& [i, c] : coeffs) v += c * t.at(i);
        return v;
    }
};

/// A character row of either the ordinary table or a Brauer table, addressed
/// by base-table class indices.
class CharacterView {
public:
    CharacterView(const CharacterTable& t, std::size_t row) : table_(&t), row_(row) {}
    CharacterView(const BrauerTable& b, std::size_t row) : brauer_(&b), row_(row) {}

    /// Value at a base-table class; throws for a p-singular class of a Brauer row.
    const Cyclotomic& value_at(std::size_t cls) const;
    Rational degree() const;
    std::string table_id() const;
    /// 0 for ordinary rows, the prime for Brauer rows.
    long long prime() const { return brauer_ ? brauer_->prime : 0; }
    std::size_t row() const { return row_; }
    /// Constant rows (the trivial character and its scalar multiples) carry no
    /// information about a normalized unit and are skipped by build_system.
    bool is_trivial() const;

private:
    const CharacterTable* table_ = nullptr;
    const BrauerTable* brauer_ = nullptr;
    std::size_t row_ = 0;
};

struct Congruence {
    std::vector<std::size_t> classes;  // admissible classes the sum ranges over
    long long modulus = 1;
    std::string tag;
};

struct TaggedForm {
    LinearForm form;
    std::string tag;     // "<table>:chi<j>:l<l>", 1-based character index
    std::size_t group = 0;  // forms with equal group share a character row
    Rational degree;     // chi(1), the upper bound k*chi(1) divides through
};

/// Everything enumerate() needs for one unit order and one power assignment:
/// mu-forms for all l and all informative rows of the participating tables,
/// the Berman equality (sum of variables = 1) and any prime-power congruences.
struct ConstraintSystem {
    long long order = 1;
    std::vector<std::size_t> variables;  // admissible class indices, table order
    std::vector<TaggedForm> forms;
    std::vector<Congruence> congruences;
};

/// Non-identity classes whose element order divides k: every other partial
/// augmentation vanishes by the order-divisibility constraints.
std::vector<std::size_t> admissible_classes(const CharacterTable& table, long long k);

/// For k = p^n: the sum of partial augmentations over classes of order p^m is
/// divisible by p for each m != n.  Empty for non-prime-power k.
std::vector<Congruence> prime_power_divisibility(const CharacterTable& table, long long k);

/// chi(u) = sum nu_i chi(h_i), evaluated exactly.
Cyclotomic chi_on_unit(const CharacterView& chi, const AugmentationTuple& t);

/// The integer-scaled form k*mu_l(u, chi) for a unit of order k, given the
/// tuples assigned to every proper power of u.  The d = 1 term contributes the
/// variable coefficients; every d > 1 term contributes to the constant.
/// Brauer rows require p coprime to k.
LinearForm mu_linear_form(const CharacterView& chi, long long k, long long l,
                          const PowerAssignment& pa, const CharacterTable& base);

/// Assemble the full constraint system for order k: all l in 0..k-1 over every
/// informative row of the ordinary table (if included) and of every Brauer
/// table whose prime does not divide k, plus Berman and divisibility
/// congruences.
ConstraintSystem build_system(const CharacterTable& base,
                              std::span<const BrauerTable* const> brauers,
                              bool include_ordinary,
                              long long k, const PowerAssignment& pa);

}  // namespace helpenum
