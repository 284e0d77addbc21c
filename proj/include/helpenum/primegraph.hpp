#pragma once

#include "helpenum/solver.hpp"

#include <set>
#include <utility>

namespace helpenum {

/// Gruenberg-Kegel graph: primes dividing the group order, with p and q
/// adjacent iff an element (or torsion unit) of order pq exists.
struct PrimeGraph {
    std::set<long long> vertices;
    std::set<std::pair<long long, long long>> edges;  // ordered pairs p < q

    bool operator==(const PrimeGraph& o) const = default;
};

/// Graph of the group itself: edge {p, q} iff some class order is divisible
/// by p*q (such an element powers to one of order exactly pq).
PrimeGraph group_prime_graph(const CharacterTable& table);

/// Graph of the normalized unit group, read off the solver verdicts: edge
/// {p, q} iff order p*q is realized or survives nontrivially.  Throws when a
/// verdict for an unpruned order pq is missing.
PrimeGraph unit_prime_graph(const CharacterTable& table,
                            const std::map<long long, OrderResult>& results);

struct GraphDiff {
    std::set<long long> vertices_only_left, vertices_only_right;
    std::set<std::pair<long long, long long>> edges_only_left, edges_only_right;
    bool empty() const {
        return vertices_only_left.empty() && vertices_only_right.empty() &&
               edges_only_left.empty() && edges_only_right.empty();
    }
};

/// Equality of vertex and edge sets, with the symmetric difference on failure.
bool kimmerle_check(const PrimeGraph& a, const PrimeGraph& b, GraphDiff* diff = nullptr);

}  // namespace helpenum
