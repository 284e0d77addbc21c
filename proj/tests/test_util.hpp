#pragma once

#include "helpenum/solver.hpp"

#include <string>
#include <vector>

namespace testutil {

using namespace helpenum;

inline std::string fixture(const char* name) {
    return std::string(HELPENUM_FIXTURES_DIR) + "/" + name;
}

struct M11Data {
    CharacterTable table;
    BrauerTable bct2, bct3, bct5, bct11;

    M11Data()
        : table(CharacterTable::load_file(fixture("m11.json"))),
          bct2(BrauerTable::load_file(fixture("m11_mod2.json"), table)),
          bct3(BrauerTable::load_file(fixture("m11_mod3.json"), table)),
          bct5(BrauerTable::load_file(fixture("m11_mod5.json"), table)),
          bct11(BrauerTable::load_file(fixture("m11_mod11.json"), table)) {}

    TableSet all_tables() const {
        TableSet ts;
        ts.base = &table;
        ts.brauers = {&bct2, &bct3, &bct5, &bct11};
        return ts;
    }
    TableSet only(const BrauerTable& b) const {
        TableSet ts;
        ts.base = &table;
        ts.brauers = {&b};
        ts.include_ordinary = false;
        return ts;
    }
    TableSet ordinary_only() const {
        TableSet ts;
        ts.base = &table;
        return ts;
    }

    std::size_t idx(const char* name) const { return table.class_index(name); }

    AugmentationTuple tuple(long long order,
                            std::initializer_list<std::pair<const char*, long long>> vals) const {
        AugmentationTuple t;
        t.order = order;
        for (const auto& [n, v] : vals)
            if (v != 0) t.entries[idx(n)] = v;
        return t;
    }

    /// Power assignment of a genuine group element from class c of order k.
    PowerAssignment genuine(std::size_t c, long long k) const {
        PowerAssignment pa;
        pa.by_order[1] = AugmentationTuple::identity();
        for (long long e = 2; e < k; ++e) {
            if (k % e != 0) continue;
            AugmentationTuple t;
            t.order = e;
            t.entries[table.power_class(c, k / e)] = 1;
            pa.by_order[e] = t;
        }
        return pa;
    }
};

inline const M11Data& m11() {
    static M11Data d;
    return d;
}

/// Projection of a solution set onto the given classes, as sorted vectors.
inline std::vector<std::vector<long long>> projection(const M11Data& d,
                                                      const std::vector<AugmentationTuple>& tuples,
                                                      std::initializer_list<const char*> classes) {
    std::vector<std::vector<long long>> out;
    for (const auto& t : tuples) {
        std::vector<long long> v;
        for (const char* n : classes) v.push_back(t.at(d.idx(n)));
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Solve orders 1..k bottom-up with the given tables (no pruning shortcuts).
inline std::map<long long, OrderResult> solve_up_to(const TableSet& ts, long long k,
                                                    const SolveOptions& opts = {}) {
    std::map<long long, OrderResult> solved;
    for (long long e = 1; e <= k; ++e) {
        if (k % e != 0) continue;
        solved.emplace(e, solve_order(e, ts, solved, opts));
    }
    return solved;
}

}  // namespace testutil
