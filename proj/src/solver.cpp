#include "helpenum/solver.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace helpenum {

namespace {

struct IntForm {
    std::vector<long long> coeffs;  // per variable slot
    long long constant = 0;
    const std::string* tag = nullptr;
    bool is_constant = true;
};

// Rational -> long long with an integrality check; generated forms are always
// integral for valid table data (algebraic-integer traces of rationals).
long long to_ll(const Rational& q, const std::string& where) {
    if (denominator(q) != 1)
        throw ValidationError("non-integer coefficient in " + where + " (corrupted table data?)");
    Int n = numerator(q);
    return static_cast<long long>(n);
}

std::vector<IntForm> integer_forms(const ConstraintSystem& sys) {
    std::vector<IntForm> out;
    out.reserve(sys.forms.size());
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t s = 0; s < sys.variables.size(); ++s) slot[sys.variables[s]] = s;
    for (const auto& tf : sys.forms) {
        IntForm f;
        f.coeffs.assign(sys.variables.size(), 0);
        f.constant = to_ll(tf.form.constant, tf.tag);
        f.tag = &tf.tag;
        for (const auto& [cls, c] : tf.form.coeffs) {
            f.coeffs[slot.at(cls)] = to_ll(c, tf.tag);
            f.is_constant = false;
        }
        out.push_back(std::move(f));
    }
    return out;
}

// ---- bounds machinery ----------------------------------------------------

struct Ineq {                       // sum coeffs*x + c >= 0
    std::vector<long long> a;
    long long c = 0;
};

void normalize(Ineq& q) {
    long long g = std::abs(q.c);
    for (long long v : q.a) g = std::gcd(g, std::abs(v));
    if (g > 1) {
        for (long long& v : q.a) v /= g;
        q.c /= g;
    }
}

struct Bound {
    bool has_lo = false, has_hi = false;
    long long lo = 0, hi = 0;
};

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

Box derive_bounds(const ConstraintSystem& sys, long long cap) {
    Box box;
    const std::size_t n = sys.variables.size();
    box.lo.assign(n, 0);
    box.hi.assign(n, 0);

    auto iforms = integer_forms(sys);

    // A constant form refutes the whole system when it is negative or not
    // divisible by the order.
    for (const auto& f : iforms) {
        if (!f.is_constant) continue;
        if (f.constant < 0 || f.constant % sys.order != 0) {
            box.infeasible = true;
            box.infeasible_tag = *f.tag;
            return box;
        }
    }

    // Deduplicate inequalities, keeping the tightest constant per coefficient
    // pattern.  Each form yields F >= 0 and, via the sum identity
    // sum_l k*mu_l = k*chi(1), the complement k*chi(1) - F >= 0.
    std::map<std::vector<long long>, long long> tight;
    auto add = [&](Ineq q) {
        bool all0 = std::all_of(q.a.begin(), q.a.end(), [](long long v) { return v == 0; });
        if (all0) return;
        normalize(q);
        auto it = tight.find(q.a);
        if (it == tight.end()) tight.emplace(q.a, q.c);
        else it->second = std::min(it->second, q.c);
    };

    std::map<std::size_t, long long> group_total;  // group -> k*chi(1)
    for (std::size_t i = 0; i < iforms.size(); ++i)
        group_total[sys.forms[i].group] += iforms[i].constant;
    for (std::size_t i = 0; i < iforms.size(); ++i) {
        if (iforms[i].is_constant) continue;
        add({iforms[i].coeffs, iforms[i].constant});
        Ineq upper;
        upper.a.reserve(n);
        for (long long v : iforms[i].coeffs) upper.a.push_back(-v);
        upper.c = group_total.at(sys.forms[i].group) - iforms[i].constant;
        add(std::move(upper));
    }

    // One Fourier-Motzkin round: for every variable, combine each pair of
    // inequalities with opposite sign so the variable cancels.  This is what
    // turns difference/sum pairs into individual bounds.
    {
        std::vector<Ineq> base;
        base.reserve(tight.size());
        for (const auto& [a, c] : tight) base.push_back({a, c});
        for (std::size_t v = 0; v < n; ++v) {
            for (const auto& p : base) {
                if (p.a[v] <= 0) continue;
                for (const auto& q : base) {
                    if (q.a[v] >= 0) continue;
                    long long g = std::gcd(p.a[v], -q.a[v]);
                    long long mp = -q.a[v] / g, mq = p.a[v] / g;
                    Ineq r;
                    r.a.resize(n);
                    for (std::size_t i = 0; i < n; ++i) r.a[i] = mp * p.a[i] + mq * q.a[i];
                    r.c = mp * p.c + mq * q.c;
                    add(std::move(r));
                }
            }
        }
    }

    std::vector<Ineq> ineqs;
    ineqs.reserve(tight.size());
    for (const auto& [a, c] : tight) ineqs.push_back({a, c});

    // Interval propagation to a fixpoint, Berman equality included.
    std::vector<Bound> b(n);
    bool changed = true;
    int rounds = 0;
    while (changed && rounds < 256) {
        changed = false;
        ++rounds;
        for (const auto& q : ineqs) {
            for (std::size_t v = 0; v < n; ++v) {
                if (q.a[v] == 0) continue;
                long long s = -q.c;
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    if (i == v || q.a[i] == 0) continue;
                    if (q.a[i] > 0) {
                        if (!b[i].has_hi) ok = false;
                        else s -= q.a[i] * b[i].hi;
                    } else {
                        if (!b[i].has_lo) ok = false;
                        else s -= q.a[i] * b[i].lo;
                    }
                }
                if (!ok) continue;
                if (q.a[v] > 0) {
                    long long nb = ceil_div(s, q.a[v]);
                    if (!b[v].has_lo || nb > b[v].lo) { b[v].has_lo = true; b[v].lo = nb; changed = true; }
                } else {
                    long long nb = floor_div(s, q.a[v]);
                    if (!b[v].has_hi || nb < b[v].hi) { b[v].has_hi = true; b[v].hi = nb; changed = true; }
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            long long shi = 0, slo = 0;
            bool okhi = true, oklo = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == v) continue;
                if (b[i].has_hi) shi += b[i].hi; else oklo = false;
                if (b[i].has_lo) slo += b[i].lo; else okhi = false;
            }
            if (oklo) {
                long long nb = 1 - shi;
                if (!b[v].has_lo || nb > b[v].lo) { b[v].has_lo = true; b[v].lo = nb; changed = true; }
            }
            if (okhi) {
                long long nb = 1 - slo;
                if (!b[v].has_hi || nb < b[v].hi) { b[v].has_hi = true; b[v].hi = nb; changed = true; }
            }
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (!b[v].has_lo) { b[v].lo = -cap; box.capped = true; }
        if (!b[v].has_hi) { b[v].hi = cap; box.capped = true; }
        box.lo[v] = std::max(b[v].lo, -cap);
        box.hi[v] = std::min(b[v].hi, cap);
        if (box.lo[v] > box.hi[v]) {
            box.infeasible = true;
            box.infeasible_tag = "empty bounds for variable " + std::to_string(sys.variables[v]);
            return box;
        }
    }
    return box;
}

std::vector<AugmentationTuple> enumerate_box(const ConstraintSystem& sys, const Box& box,
                                             EnumerationStats* stats) {
    std::vector<AugmentationTuple> out;
    if (box.infeasible) {
        if (stats) stats->top_rejector = box.infeasible_tag;
        return out;
    }
    const std::size_t n = sys.variables.size();
    if (n == 0) return out;
    auto iforms = integer_forms(sys);

    std::map<std::size_t, std::size_t> slot;
    for (std::size_t s = 0; s < n; ++s) slot[sys.variables[s]] = s;
    struct ICong {
        std::vector<std::size_t> slots;
        long long modulus;
        const std::string* tag;
    };
    std::vector<ICong> icongs;
    for (const auto& c : sys.congruences) {
        ICong ic;
        ic.modulus = c.modulus;
        ic.tag = &c.tag;
        for (std::size_t cls : c.classes) {
            auto it = slot.find(cls);
            if (it != slot.end()) ic.slots.push_back(it->second);
        }
        if (!ic.slots.empty()) icongs.push_back(std::move(ic));
    }

    // guard against pathological capped boxes
    double volume = 1;
    for (std::size_t v = 0; v + 1 < n; ++v) volume *= double(box.hi[v] - box.lo[v] + 1);
    if (volume > 5e8)
        throw ValidationError("enumeration box too large (" + std::to_string((long long)volume) +
                              " candidate points); bounds did not close");

    std::map<const std::string*, long long> rejections;
    std::vector<long long> x(n);
    // iterate the first n-1 coordinates; the last is forced by Berman
    std::vector<long long> cur(box.lo.begin(), box.lo.end());
    while (true) {
        long long s = 0;
        for (std::size_t v = 0; v + 1 < n; ++v) s += cur[v];
        long long last = 1 - s;
        if (last >= box.lo[n - 1] && last <= box.hi[n - 1]) {
            for (std::size_t v = 0; v + 1 < n; ++v) x[v] = cur[v];
            x[n - 1] = last;
            if (stats) ++stats->points_scanned;
            const std::string* fail = nullptr;
            for (const auto& ic : icongs) {
                long long t = 0;
                for (std::size_t sl : ic.slots) t += x[sl];
                if (((t % ic.modulus) + ic.modulus) % ic.modulus != 0) { fail = ic.tag; break; }
            }
            if (!fail) {
                for (const auto& f : iforms) {
                    long long val = f.constant;
                    for (std::size_t v = 0; v < n; ++v) val += f.coeffs[v] * x[v];
                    if (val < 0 || val % sys.order != 0) { fail = f.tag; break; }
                }
            }
            if (!fail) {
                AugmentationTuple t;
                t.order = sys.order;
                for (std::size_t v = 0; v < n; ++v)
                    if (x[v] != 0) t.entries[sys.variables[v]] = x[v];
                out.push_back(std::move(t));
            } else {
                ++rejections[fail];
            }
        }
        // odometer over the first n-1 coordinates
        std::size_t v = 0;
        for (; v + 1 < n; ++v) {
            if (cur[v] < box.hi[v]) { ++cur[v]; break; }
            cur[v] = box.lo[v];
        }
        if (v + 1 >= n) break;
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (stats && out.empty() && !rejections.empty()) {
        const std::string* best = nullptr;
        long long most = -1;
        for (const auto& f : iforms)
            if (auto it = rejections.find(f.tag); it != rejections.end() && it->second > most) {
                most = it->second;
                best = f.tag;
            }
        for (const auto& ic : icongs)
            if (auto it = rejections.find(ic.tag); it != rejections.end() && it->second > most) {
                most = it->second;
                best = ic.tag;
            }
        if (best) stats->top_rejector = *best;
    }
    return out;
}

const char* to_string(OrderStatus s) {
    switch (s) {
        case OrderStatus::Realized: return "realized";
        case OrderStatus::Excluded: return "excluded";
        case OrderStatus::SurvivesNontrivially: return "survives-nontrivially";
    }
    return "?";
}

std::vector<long long> report_vector(const CharacterTable& table, const AugmentationTuple& t) {
    std::vector<long long> v;
    v.reserve(table.report_order().size());
    for (std::size_t cls : table.report_order()) v.push_back(t.at(cls));
    return v;
}

namespace {

std::vector<long long> proper_divisor_orders(long long k) {
    std::vector<long long> out;
    for (long long e = 2; e < k; ++e)
        if (k % e == 0) out.push_back(e);
    return out;
}

std::vector<long long> prime_factors(long long k) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= k; ++p)
        if (k % p == 0) {
            ps.push_back(p);
            while (k % p == 0) k /= p;
        }
    if (k > 1) ps.push_back(k);
    return ps;
}

}  // namespace

std::vector<PowerAssignment> branch_assignments(long long k,
                                                const std::map<long long, OrderResult>& solved,
                                                std::vector<std::string>* inconsistent) {
    std::vector<long long> E = proper_divisor_orders(k);
    for (long long e : E) {
        auto it = solved.find(e);
        if (it == solved.end() || it->second.set.tuples.empty())
            throw std::logic_error("branch_assignments: order " + std::to_string(e) +
                                   " unsolved or excluded; order " + std::to_string(k) + " should be pruned");
    }
    std::vector<PowerAssignment> out;
    if (E.empty()) {
        PowerAssignment pa;
        pa.by_order[1] = AugmentationTuple::identity();
        out.push_back(std::move(pa));
        return out;
    }

    std::vector<long long> maximal;
    for (long long e : E) {
        bool max = true;
        for (long long f : E)
            if (f != e && f % e == 0) max = false;
        if (max) maximal.push_back(e);
    }
    // Orders reachable from a single maximal chain are chosen freely from their
    // solution sets; orders where two chains meet are forced to agree with the
    // provenance branches of every chosen maximal tuple above them.
    std::vector<long long> free_orders, meet_orders;
    for (long long e : E) {
        std::size_t chains = 0;
        for (long long m : maximal)
            if (m % e == 0 && m != e) ++chains;
        if (std::find(maximal.begin(), maximal.end(), e) != maximal.end()) free_orders.push_back(e);
        else if (chains >= 2) meet_orders.push_back(e);
        else free_orders.push_back(e);
    }
    std::sort(free_orders.begin(), free_orders.end());
    std::sort(meet_orders.begin(), meet_orders.end(), std::greater<>());

    // allowed sub-tuples at order m for the branch that admitted tuple `ti` at order e
    auto allowed_at = [&](long long e, std::size_t ti, long long m) {
        std::vector<AugmentationTuple> vals;
        const OrderResult& r = solved.at(e);
        for (std::size_t bid : r.set.provenance[ti]) {
            const AugmentationTuple& v = r.branches[bid].assignment.at(m);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        return vals;
    };

    std::vector<std::size_t> choice(free_orders.size(), 0);
    while (true) {
        PowerAssignment pa;
        pa.by_order[1] = AugmentationTuple::identity();
        for (std::size_t i = 0; i < free_orders.size(); ++i)
            pa.by_order[free_orders[i]] = solved.at(free_orders[i]).set.tuples[choice[i]];

        // resolve meet orders from provenance intersections of the maximal picks
        std::vector<std::pair<long long, std::vector<AugmentationTuple>>> meet_opts;
        bool ok = true;
        for (long long m : meet_orders) {
            std::vector<AugmentationTuple> allowed;
            bool first = true;
            for (long long e : maximal) {
                if (e % m != 0) continue;
                const OrderResult& r = solved.at(e);
                std::size_t ti =
                    std::find(r.set.tuples.begin(), r.set.tuples.end(), pa.by_order.at(e)) - r.set.tuples.begin();
                auto vals = allowed_at(e, ti, m);
                if (first) {
                    allowed = vals;
                    first = false;
                } else {
                    std::vector<AugmentationTuple> inter;
                    for (const auto& v : allowed)
                        if (std::find(vals.begin(), vals.end(), v) != vals.end()) inter.push_back(v);
                    allowed = inter;
                }
            }
            if (allowed.empty()) {
                ok = false;
                if (inconsistent)
                    inconsistent->push_back("no consistent tuple at order " + std::to_string(m));
                break;
            }
            meet_opts.emplace_back(m, std::move(allowed));
        }
        if (ok) {
            std::vector<std::size_t> mi(meet_opts.size(), 0);
            while (true) {
                PowerAssignment full = pa;
                for (std::size_t i = 0; i < meet_opts.size(); ++i)
                    full.by_order[meet_opts[i].first] = meet_opts[i].second[mi[i]];
                out.push_back(std::move(full));
                std::size_t i = 0;
                for (; i < meet_opts.size(); ++i) {
                    if (mi[i] + 1 < meet_opts[i].second.size()) { ++mi[i]; break; }
                    mi[i] = 0;
                }
                if (i >= meet_opts.size()) break;
            }
        }
        std::size_t i = 0;
        for (; i < free_orders.size(); ++i) {
            if (choice[i] + 1 < solved.at(free_orders[i]).set.tuples.size()) { ++choice[i]; break; }
            choice[i] = 0;
        }
        if (i >= free_orders.size()) break;
    }
    return out;
}

OrderResult solve_order(long long k, const TableSet& tables,
                        const std::map<long long, OrderResult>& solved,
                        const SolveOptions& opts) {
    if (!tables.base) throw std::invalid_argument("solve_order: no base table");
    const CharacterTable& base = *tables.base;
    OrderResult res;
    res.set.k = k;
    res.verdict.k = k;

    if (k == 1) {
        BranchOutcome b;
        b.assignment.by_order[1] = AugmentationTuple::identity();
        b.tuples = {AugmentationTuple::identity()};
        res.branches.push_back(std::move(b));
        res.set.tuples = {AugmentationTuple::identity()};
        res.set.provenance = {{0}};
        res.verdict.status = OrderStatus::Realized;
        res.verdict.rationally_conjugate = true;
        return res;
    }

    auto pas = branch_assignments(k, solved, &res.inconsistent_combos);
    res.branches.resize(pas.size());

    auto run_branch = [&](std::size_t bi) {
        BranchOutcome out;
        out.assignment = pas[bi];
        ConstraintSystem sys = build_system(
            base, std::span<const BrauerTable* const>(tables.brauers.data(), tables.brauers.size()),
            tables.include_ordinary, k, pas[bi]);
        Box box = derive_bounds(sys, opts.max_coeff);
        out.capped = box.capped;
        EnumerationStats stats;
        out.tuples = enumerate_box(sys, box, &stats);
        if (out.tuples.empty()) {
            out.eliminated_by =
                stats.top_rejector.value_or("no integer point in bounds");
        }
        return out;
    };

    if (opts.jobs > 1 && pas.size() > 1) {
        std::vector<std::future<BranchOutcome>> futs;
        futs.reserve(pas.size());
        for (std::size_t bi = 0; bi < pas.size(); ++bi)
            futs.push_back(std::async(std::launch::async, run_branch, bi));
        for (std::size_t bi = 0; bi < pas.size(); ++bi) res.branches[bi] = futs[bi].get();
    } else {
        for (std::size_t bi = 0; bi < pas.size(); ++bi) res.branches[bi] = run_branch(bi);
    }

    for (std::size_t bi = 0; bi < res.branches.size(); ++bi) {
        res.capped = res.capped || res.branches[bi].capped;
        for (const auto& t : res.branches[bi].tuples) {
            auto it = std::find(res.set.tuples.begin(), res.set.tuples.end(), t);
            if (it == res.set.tuples.end()) {
                res.set.tuples.push_back(t);
                res.set.provenance.push_back({bi});
            } else {
                res.set.provenance[it - res.set.tuples.begin()].push_back(bi);
            }
        }
    }

    // deterministic order: lexicographic in the reporting coordinates
    std::vector<std::size_t> perm(res.set.tuples.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return report_vector(base, res.set.tuples[a]) < report_vector(base, res.set.tuples[b]);
    });
    SolutionSet sorted;
    sorted.k = k;
    for (std::size_t i : perm) {
        sorted.tuples.push_back(res.set.tuples[i]);
        sorted.provenance.push_back(res.set.provenance[i]);
    }
    res.set = std::move(sorted);

    if (res.set.tuples.empty()) {
        res.verdict.status = OrderStatus::Excluded;
        res.verdict.rationally_conjugate = false;
        return res;
    }
    res.verdict.status = base.classes_of_order(k).empty() ? OrderStatus::SurvivesNontrivially
                                                          : OrderStatus::Realized;

    // Rational conjugacy: every surviving tuple, and every tuple its admitting
    // branches assign to every proper power, has exactly one nonzero entry.
    bool rc = true;
    for (std::size_t ti = 0; ti < res.set.tuples.size() && rc; ++ti) {
        if (!res.set.tuples[ti].single_nonzero()) rc = false;
        for (std::size_t bid : res.set.provenance[ti]) {
            for (const auto& [e, t] : res.branches[bid].assignment.by_order)
                if (!t.single_nonzero()) rc = false;
        }
    }
    res.verdict.rationally_conjugate = rc;
    return res;
}

std::map<long long, OrderResult> solve_all(const TableSet& tables, const SolveOptions& opts,
                                           std::vector<long long>* pruned, long long max_order) {
    if (!tables.base) throw std::invalid_argument("solve_all: no base table");
    const CharacterTable& base = *tables.base;
    long long N = max_order > 0 ? max_order : base.exponent();

    std::map<long long, OrderResult> solved;
    for (long long k = 1; k <= N; ++k) {
        if (N % k != 0) continue;
        if (k == 1) {
            solved.emplace(1, solve_order(1, tables, solved, opts));
            continue;
        }
        bool viable = true;
        for (long long p : prime_factors(k)) {
            auto it = solved.find(k / p);
            if (it == solved.end() || it->second.verdict.status == OrderStatus::Excluded) viable = false;
        }
        if (!viable) {
            if (pruned) pruned->push_back(k);
            continue;
        }
        solved.emplace(k, solve_order(k, tables, solved, opts));
    }
    return solved;
}

}  // namespace helpenum
