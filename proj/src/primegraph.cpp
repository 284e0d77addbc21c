#include "helpenum/primegraph.hpp"

namespace helpenum {

namespace {

std::set<long long> primes_dividing(long long n) {
    std::set<long long> ps;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.insert(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.insert(n);
    return ps;
}

}  // namespace

PrimeGraph group_prime_graph(const CharacterTable& table) {
    PrimeGraph g;
    g.vertices = primes_dividing(table.group_order());
    for (long long p : g.vertices)
        for (long long q : g.vertices) {
            if (p >= q) continue;
            for (const auto& c : table.classes())
                if (c.element_order % (p * q) == 0) {
                    g.edges.emplace(p, q);
                    break;
                }
        }
    return g;
}

PrimeGraph unit_prime_graph(const CharacterTable& table,
                            const std::map<long long, OrderResult>& results) {
    PrimeGraph g;
    g.vertices = primes_dividing(table.group_order());
    for (long long p : g.vertices)
        for (long long q : g.vertices) {
            if (p >= q) continue;
            long long pq = p * q;
            auto it = results.find(pq);
            if (it == results.end()) {
                // legitimate only if pq was pruned, i.e. some proper power
                // order was excluded; p and q themselves are always realized
                bool p_ok = results.count(p) && results.at(p).verdict.status != OrderStatus::Excluded;
                bool q_ok = results.count(q) && results.at(q).verdict.status != OrderStatus::Excluded;
                if (p_ok && q_ok)
                    throw ValidationError("missing verdict for unpruned order " + std::to_string(pq));
                continue;
            }
            if (it->second.verdict.status != OrderStatus::Excluded) g.edges.emplace(p, q);
        }
    return g;
}

bool kimmerle_check(const PrimeGraph& a, const PrimeGraph& b, GraphDiff* diff) {
    bool equal = a == b;
    if (diff) {
        *diff = GraphDiff{};
        for (long long v : a.vertices)
            if (!b.vertices.count(v)) diff->vertices_only_left.insert(v);
        for (long long v : b.vertices)
            if (!a.vertices.count(v)) diff->vertices_only_right.insert(v);
        for (const auto& e : a.edges)
            if (!b.edges.count(e)) diff->edges_only_left.insert(e);
        for (const auto& e : b.edges)
            if (!a.edges.count(e)) diff->edges_only_right.insert(e);
    }
    return equal;
}

}  // namespace helpenum
