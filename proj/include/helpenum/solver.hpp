#pragma once

#include "helpenum/help_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace helpenum {

/// Finite per-variable integer bounds.  `infeasible` marks a system refuted
/// before enumeration (a constant form with a sign or divisibility violation);
/// `capped` marks bounds that interval reasoning could not close and that were
/// clamped to the configured cap.
struct Box {
    std::vector<long long> lo, hi;  // parallel to ConstraintSystem::variables
    bool infeasible = false;
    std::string infeasible_tag;
    bool capped = false;
};

struct EnumerationStats {
    long long points_scanned = 0;
    // index into forms / congruences of the constraint rejecting the most
    // points (first-failing per point); used to tag eliminated branches.
    std::optional<std::string> top_rejector;
};

/// Per-variable bounds by interval propagation to a fixpoint over the
/// deduplicated form inequalities (0 <= F <= k*chi(1)), one Fourier-Motzkin
/// combination round, and the Berman equality.  Unclosable directions fall
/// back to [-cap, cap] and set `capped`.
Box derive_bounds(const ConstraintSystem& sys, long long cap);

/// Exhaustive scan of the integer points of `box` restricted to the Berman
/// hyperplane; keeps points satisfying every congruence and every form
/// (value >= 0 and divisible by the order).  Output sorted and deduplicated.
std::vector<AugmentationTuple> enumerate_box(const ConstraintSystem& sys, const Box& box,
                                             EnumerationStats* stats = nullptr);

enum class OrderStatus { Realized, Excluded, SurvivesNontrivially };

const char* to_string(OrderStatus s);

struct OrderVerdict {
    long long k = 1;
    OrderStatus status = OrderStatus::Excluded;
    bool rationally_conjugate = false;
};

struct BranchOutcome {
    PowerAssignment assignment;
    std::vector<AugmentationTuple> tuples;       // sorted survivors of this branch
    std::optional<std::string> eliminated_by;    // violated constraint tag when empty
    bool capped = false;
};

struct SolutionSet {
    long long k = 1;
    std::vector<AugmentationTuple> tuples;              // merged, sorted, deduplicated
    std::vector<std::vector<std::size_t>> provenance;   // per tuple: admitting branch ids
};

struct OrderResult {
    SolutionSet set;
    OrderVerdict verdict;
    std::vector<BranchOutcome> branches;
    std::vector<std::string> inconsistent_combos;  // eliminated before system build
    bool capped = false;
};

/// Tables participating in a run: the ordinary table is also the source of
/// classes, power maps and admissibility, and its rows can be excluded to
/// study a single Brauer table in isolation.
struct TableSet {
    const CharacterTable* base = nullptr;
    std::vector<const BrauerTable*> brauers;
    bool include_ordinary = true;
};

struct SolveOptions {
    long long max_coeff = 128;  // fallback cap for unbounded directions
    int jobs = 1;               // branch-level parallelism
};

/// All consistency-closed power assignments for order k.  One tuple is chosen
/// freely per maximal proper power order and per order reachable from a single
/// maximal chain; orders where two chains meet are forced to the intersection
/// of the provenance branches of the chosen tuples, and an empty intersection
/// eliminates the combination (recorded in `inconsistent`).
std::vector<PowerAssignment> branch_assignments(long long k,
                                                const std::map<long long, OrderResult>& solved,
                                                std::vector<std::string>* inconsistent = nullptr);

/// Solve one order given results for every proper divisor order.
OrderResult solve_order(long long k, const TableSet& tables,
                        const std::map<long long, OrderResult>& solved,
                        const SolveOptions& opts = {});

/// Process the divisors of exp(G) in increasing order, pruning every order
/// with an excluded (or pruned) proper power.  Returns results for processed
/// orders; `pruned` collects the skipped ones.
std::map<long long, OrderResult> solve_all(const TableSet& tables,
                                           const SolveOptions& opts = {},
                                           std::vector<long long>* pruned = nullptr,
                                           long long max_order = 0);

/// Sort key for tuples: the projection onto the table's reporting order.
std::vector<long long> report_vector(const CharacterTable& table, const AugmentationTuple& t);

}  // namespace helpenum
