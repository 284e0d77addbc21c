#include "helpenum/grouptable.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace helpenum {

using nlohmann::json;

namespace {

Cyclotomic parse_value(const json& v, const char* where) {
    if (v.is_number_integer())
        return Cyclotomic(Rational(v.get<long long>()));
    if (v.is_object()) {
        if (!v.contains("n") || !v.contains("terms"))
            throw ValidationError(std::string(where) + ": value object needs \"n\" and \"terms\"");
        long long n = v.at("n").get<long long>();
        if (n < 1) throw ValidationError(std::string(where) + ": value order must be positive");
        Cyclotomic acc(Rational(0), n);
        for (const auto& t : v.at("terms")) {
            if (!t.is_array() || t.size() != 3)
                throw ValidationError(std::string(where) + ": term must be [num, den, exp]");
            long long num = t[0].get<long long>();
            long long den = t[1].get<long long>();
            long long exp = t[2].get<long long>();
            if (den <= 0) throw ValidationError(std::string(where) + ": term denominator must be positive");
            acc = acc + Cyclotomic::root(n, exp).scaled(Rational(num, den));
        }
        return acc;
    }
    throw ValidationError(std::string(where) + ": value must be an integer or {n, terms}");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ValidationError("document is not valid JSON");
    if (!doc.is_object()) throw ValidationError("document root must be an object");
    return doc;
}

std::vector<long long> primes_dividing(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

std::size_t CharacterTable::class_index(const std::string& name) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == name) return i;
    throw ValidationError("unknown class name: " + name);
}

std::size_t CharacterTable::power_class(std::size_t c, long long m) const {
    if (c >= classes_.size()) throw std::out_of_range("power_class: class index");
    if (m < 0) throw std::invalid_argument("power_class: m must be non-negative");
    long long mm = m % classes_[c].element_order;  // x^m = x^(m mod |x|)
    if (mm == 0) return 0;
    std::size_t cur = c;
    for (long long p = 2; mm > 1; ++p) {
        while (mm % p == 0) {
            mm /= p;
            auto it = power_maps_.find(p);
            if (it == power_maps_.end())
                throw ValidationError("power_class: no power map for prime " + std::to_string(p));
            cur = it->second[cur];
        }
    }
    return cur;
}

std::vector<std::size_t> CharacterTable::classes_of_order(long long k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].element_order == k) out.push_back(i);
    return out;
}

Rational CharacterTable::degree(std::size_t row) const {
    auto q = characters_.at(row).at(0).as_rational();
    if (!q) throw ValidationError("character " + std::to_string(row) + ": degree is not rational");
    return *q;
}

CharacterTable CharacterTable::load_file(const std::string& path) {
    return load(slurp(path));
}

CharacterTable CharacterTable::load(const std::string& text) {
    json doc = parse_document(text);
    CharacterTable t;
    try {
        t.name_ = doc.at("name").get<std::string>();
        t.group_order_ = doc.at("order").get<long long>();
        for (const auto& c : doc.at("classes")) {
            ConjugacyClass cc;
            cc.name = c.at("name").get<std::string>();
            cc.element_order = c.at("order").get<long long>();
            cc.size = c.at("size").get<long long>();
            t.classes_.push_back(cc);
        }
        for (auto it = doc.at("powermaps").begin(); it != doc.at("powermaps").end(); ++it) {
            long long p = std::stoll(it.key());
            t.power_maps_[p] = it.value().get<std::vector<std::size_t>>();
        }
        std::size_t ri = 0;
        for (const auto& row : doc.at("characters")) {
            std::vector<Cyclotomic> r;
            std::size_t ci = 0;
            for (const auto& v : row) {
                std::string where = "character " + std::to_string(ri) + ", class " + std::to_string(ci);
                r.push_back(parse_value(v, where.c_str()));
                ++ci;
            }
            t.characters_.push_back(std::move(r));
            ++ri;
        }
        if (doc.contains("report_order")) {
            for (const auto& n : doc.at("report_order"))
                t.report_order_.push_back(t.class_index(n.get<std::string>()));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("schema violation: ") + e.what());
    }
    t.validate();
    return t;
}

void CharacterTable::validate() {
    if (classes_.empty()) throw ValidationError("table has no classes");
    if (group_order_ < 1) throw ValidationError("group order must be positive");

    // identity class: exactly one of order 1, and it comes first
    std::size_t n_id = 0;
    for (const auto& c : classes_)
        if (c.element_order == 1) ++n_id;
    if (n_id != 1 || classes_[0].element_order != 1)
        throw ValidationError("exactly one class of element order 1 is required, in first position");

    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].element_order < 1)
            throw ValidationError("class " + std::to_string(i) + " ('" + classes_[i].name + "'): element order must be positive");
        if (classes_[i].size < 1)
            throw ValidationError("class " + std::to_string(i) + " ('" + classes_[i].name + "'): size must be positive");
        for (std::size_t j = i + 1; j < classes_.size(); ++j)
            if (classes_[i].name == classes_[j].name)
                throw ValidationError("duplicate class name '" + classes_[i].name + "' at positions " +
                                      std::to_string(i) + " and " + std::to_string(j));
    }

    long long sum = 0;
    for (const auto& c : classes_) sum += c.size;
    if (sum != group_order_)
        throw ValidationError("class sizes sum to " + std::to_string(sum) + ", expected group order " +
                              std::to_string(group_order_));

    exponent_ = 1;
    for (const auto& c : classes_) exponent_ = std::lcm(exponent_, c.element_order);

    for (long long p : primes_dividing(exponent_))
        if (!power_maps_.count(p))
            throw ValidationError("missing power map for prime " + std::to_string(p));

    for (const auto& [p, pm] : power_maps_) {
        if (p < 2) throw ValidationError("power map key must be a prime, got " + std::to_string(p));
        if (pm.size() != classes_.size())
            throw ValidationError("power map for prime " + std::to_string(p) + " has " +
                                  std::to_string(pm.size()) + " entries, expected " + std::to_string(classes_.size()));
        for (std::size_t i = 0; i < pm.size(); ++i) {
            if (pm[i] >= classes_.size())
                throw ValidationError("power map for prime " + std::to_string(p) + ", class " + std::to_string(i) +
                                      ": image index out of range");
            long long o = classes_[i].element_order;
            long long want = o / std::gcd(o, p);
            if (classes_[pm[i]].element_order != want)
                throw ValidationError("power map for prime " + std::to_string(p) + ", class " + std::to_string(i) +
                                      " ('" + classes_[i].name + "'): image has order " +
                                      std::to_string(classes_[pm[i]].element_order) + ", expected " + std::to_string(want));
        }
    }

    if (characters_.empty()) throw ValidationError("table has no character rows");
    for (std::size_t r = 0; r < characters_.size(); ++r) {
        if (characters_[r].size() != classes_.size())
            throw ValidationError("character " + std::to_string(r) + " has " + std::to_string(characters_[r].size()) +
                                  " values, expected " + std::to_string(classes_.size()));
        auto q = characters_[r][0].as_rational();
        if (!q || *q <= 0 || denominator(*q) != 1)
            throw ValidationError("character " + std::to_string(r) + ": degree must be a positive rational integer");
    }

    if (report_order_.empty()) {
        for (std::size_t i = 1; i < classes_.size(); ++i) report_order_.push_back(i);
    } else {
        if (report_order_.size() != classes_.size() - 1)
            throw ValidationError("report_order must list every non-identity class exactly once");
        std::vector<bool> seen(classes_.size(), false);
        for (std::size_t i : report_order_) {
            if (i == 0 || seen[i]) throw ValidationError("report_order must list every non-identity class exactly once");
            seen[i] = true;
        }
    }
}

std::size_t BrauerTable::column_of(std::size_t c) const {
    for (std::size_t j = 0; j < class_indices.size(); ++j)
        if (class_indices[j] == c) return j;
    return static_cast<std::size_t>(-1);
}

BrauerTable BrauerTable::load_file(const std::string& path, const CharacterTable& base) {
    return load(slurp(path), base);
}

BrauerTable BrauerTable::load(const std::string& text, const CharacterTable& base) {
    json doc = parse_document(text);
    BrauerTable b;
    b.base = &base;
    try {
        b.name = doc.at("name").get<std::string>();
        b.prime = doc.at("prime").get<long long>();
        for (const auto& n : doc.at("classes")) {
            std::size_t i = base.class_index(n.get<std::string>());
            if (base.classes()[i].element_order % b.prime == 0)
                throw ValidationError("class '" + n.get<std::string>() + "' is " + std::to_string(b.prime) +
                                      "-singular and cannot appear in a mod-" + std::to_string(b.prime) + " table");
            b.class_indices.push_back(i);
        }
        std::size_t ri = 0;
        for (const auto& row : doc.at("characters")) {
            std::vector<Cyclotomic> r;
            std::size_t ci = 0;
            for (const auto& v : row) {
                std::string where = "character " + std::to_string(ri) + ", class " + std::to_string(ci);
                r.push_back(parse_value(v, where.c_str()));
                ++ci;
            }
            if (r.size() != b.class_indices.size())
                throw ValidationError("character " + std::to_string(ri) + " has " + std::to_string(r.size()) +
                                      " values, expected " + std::to_string(b.class_indices.size()));
            b.characters.push_back(std::move(r));
            ++ri;
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("schema violation: ") + e.what());
    }
    if (b.prime < 2) throw ValidationError("brauer table prime must be at least 2");
    if (b.class_indices.empty() || b.class_indices[0] != 0)
        throw ValidationError("brauer table must list the identity class first");
    if (b.characters.empty()) throw ValidationError("brauer table has no character rows");
    for (std::size_t r = 0; r < b.characters.size(); ++r) {
        auto q = b.characters[r][0].as_rational();
        if (!q || *q <= 0 || denominator(*q) != 1)
            throw ValidationError("character " + std::to_string(r) + ": degree must be a positive rational integer");
    }
    return b;
}

std::vector<OrthogonalityViolation> validate_orthogonality(const CharacterTable& table) {
    std::vector<OrthogonalityViolation> out;
    const auto& rows = table.characters();
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a; b < rows.size(); ++b) {
            Cyclotomic acc;
            for (std::size_t i = 0; i < table.class_count(); ++i) {
                Cyclotomic term = rows[a][i] * rows[b][i].conjugate();
                acc = acc + term.scaled(Rational(table.classes()[i].size));
            }
            Cyclotomic want(Rational(a == b ? table.group_order() : 0));
            if (!acc.equals(want)) {
                OrthogonalityViolation v;
                v.row_a = a;
                v.row_b = b;
                std::ostringstream ss;
                ss << "rows " << a << " and " << b << ": inner product is not "
                   << (a == b ? "the group order" : "zero");
                v.detail = ss.str();
                out.push_back(v);
            }
        }
    }
    return out;
}

}  // namespace helpenum
