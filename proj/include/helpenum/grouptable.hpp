#pragma once

#include "helpenum/cyclo.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace helpenum {

/// Errors raised while loading or validating table documents.  Messages carry
/// class/character coordinates where applicable.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ConjugacyClass {
    std::string name;
    long long element_order = 1;
    long long size = 1;
};

/// Ordinary character table with power maps, loaded from a JSON document and
/// immutable afterwards.
class CharacterTable {
public:
    const std::string& name() const { return name_; }
    long long group_order() const { return group_order_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    const std::vector<std::vector<Cyclotomic>>& characters() const { return characters_; }
    const std::map<long long, std::vector<std::size_t>>& power_maps() const { return power_maps_; }

    /// lcm of the class element orders.
    long long exponent() const { return exponent_; }

    std::size_t class_count() const { return classes_.size(); }
    std::size_t character_count() const { return characters_.size(); }

    /// Index of the class with the given name; throws if absent.
    std::size_t class_index(const std::string& name) const;

    /// Image of class c under the m-th power map, by composing the stored
    /// prime maps along any factorization of m.  m = 0 gives the identity class.
    std::size_t power_class(std::size_t c, long long m) const;

    /// All classes of element order exactly k, in table order.
    std::vector<std::size_t> classes_of_order(long long k) const;

    /// Non-identity class indices in the order used for tuple reporting
    /// (the fixture's "report_order" if present, table order otherwise).
    const std::vector<std::size_t>& report_order() const { return report_order_; }

    /// Degree of a character row (its value at the identity class).
    Rational degree(std::size_t row) const;

    /// Parse and validate a table document (see the fixture format in the README).
    static CharacterTable load(const std::string& json_text);
    static CharacterTable load_file(const std::string& path);

private:
    std::string name_;
    long long group_order_ = 1;
    long long exponent_ = 1;
    std::vector<ConjugacyClass> classes_;
    std::map<long long, std::vector<std::size_t>> power_maps_;
    std::vector<std::vector<Cyclotomic>> characters_;
    std::vector<std::size_t> report_order_;

    void validate();
};

/// Brauer character table modulo a prime: rows over the p-regular classes of
/// a base ordinary table.  Holds a pointer to the base, which must outlive it.
struct BrauerTable {
    std::string name;
    long long prime = 0;
    const CharacterTable* base = nullptr;
    std::vector<std::size_t> class_indices;          // into base->classes()
    std::vector<std::vector<Cyclotomic>> characters; // one column per class_indices entry

    std::size_t character_count() const { return characters.size(); }

    /// Column for base class index c, or npos when c is p-singular.
    std::size_t column_of(std::size_t c) const;

    static BrauerTable load(const std::string& json_text, const CharacterTable& base);
    static BrauerTable load_file(const std::string& path, const CharacterTable& base);
};

struct OrthogonalityViolation {
    std::size_t row_a = 0;
    std::size_t row_b = 0;
    std::string detail;
};

/// First row-orthogonality relation, checked exactly for every pair of rows:
/// sum_i |C_i| chi(h_i) conj(psi(h_i)) is |G| on the diagonal and 0 otherwise.
std::vector<OrthogonalityViolation> validate_orthogonality(const CharacterTable& table);

}  // namespace helpenum
