#include "helpenum/report.hpp"

#include <json.hpp>

#include <sstream>

namespace helpenum {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json tuple_json(const CharacterTable& base, const AugmentationTuple& t) {
    ordered_json by_class = ordered_json::object();
    for (std::size_t cls : base.report_order()) {
        long long v = t.at(cls);
        if (v != 0) by_class[base.classes()[cls].name] = v;
    }
    if (t.order == 1) by_class[base.classes()[0].name] = t.at(0);
    ordered_json j;
    j["by_class"] = by_class;
    j["vector"] = report_vector(base, t);
    return j;
}

ordered_json assignment_json(const CharacterTable& base, const PowerAssignment& pa) {
    ordered_json j = ordered_json::object();
    for (const auto& [e, t] : pa.by_order) {
        ordered_json entry = ordered_json::object();
        for (const auto& [cls, v] : t.entries) entry[base.classes()[cls].name] = v;
        j[std::to_string(e)] = entry;
    }
    return j;
}

ordered_json order_json(const RunReport& r, long long k) {
    const CharacterTable& base = *r.base;
    const OrderResult& res = r.orders.at(k);
    ordered_json j;
    j["k"] = k;
    j["status"] = to_string(res.verdict.status);
    j["rationally_conjugate"] = res.verdict.rationally_conjugate;
    if (k > 1) {
        ordered_json vars = ordered_json::array();
        for (std::size_t cls : admissible_classes(base, k)) vars.push_back(base.classes()[cls].name);
        j["variables"] = vars;
    } else {
        j["variables"] = ordered_json::array();
    }
    ordered_json sols = ordered_json::array();
    for (std::size_t i = 0; i < res.set.tuples.size(); ++i) {
        ordered_json s = tuple_json(base, res.set.tuples[i]);
        s["branches"] = res.set.provenance[i];
        sols.push_back(s);
    }
    j["solutions"] = sols;
    ordered_json branches = ordered_json::array();
    for (std::size_t bi = 0; bi < res.branches.size(); ++bi) {
        const BranchOutcome& b = res.branches[bi];
        ordered_json bj;
        bj["index"] = bi;
        bj["assignment"] = assignment_json(base, b.assignment);
        bj["solution_count"] = b.tuples.size();
        if (b.eliminated_by) bj["eliminated_by"] = *b.eliminated_by;
        if (b.capped) bj["capped"] = true;
        branches.push_back(bj);
    }
    j["branches"] = branches;
    if (!res.inconsistent_combos.empty()) j["inconsistent_combos"] = res.inconsistent_combos;
    return j;
}

ordered_json graph_json(const PrimeGraph& g) {
    ordered_json j;
    j["vertices"] = g.vertices;
    ordered_json edges = ordered_json::array();
    for (const auto& [p, q] : g.edges) edges.push_back(ordered_json::array({p, q}));
    j["edges"] = edges;
    return j;
}

ordered_json report_json(const RunReport& r) {
    ordered_json j;
    j["schema_version"] = RunReport::schema_version;
    j["group"] = r.group;
    ordered_json cfg;
    cfg["tables"] = r.tables_used;
    cfg["max_coeff"] = r.max_coeff;
    j["config"] = cfg;
    ordered_json orders = ordered_json::array();
    for (const auto& [k, res] : r.orders) orders.push_back(order_json(r, k));
    j["orders"] = orders;
    j["pruned"] = r.pruned;
    j["prime_graph_group"] = graph_json(r.graph_group);
    j["prime_graph_units"] = graph_json(r.graph_units);
    ordered_json kc;
    kc["equal"] = r.kimmerle;
    if (!r.kimmerle) {
        ordered_json d;
        d["vertices_only_group"] = r.kimmerle_diff.vertices_only_left;
        d["vertices_only_units"] = r.kimmerle_diff.vertices_only_right;
        ordered_json el = ordered_json::array(), er = ordered_json::array();
        for (const auto& [p, q] : r.kimmerle_diff.edges_only_left) el.push_back({p, q});
        for (const auto& [p, q] : r.kimmerle_diff.edges_only_right) er.push_back({p, q});
        d["edges_only_group"] = el;
        d["edges_only_units"] = er;
        kc["diff"] = d;
    }
    j["kimmerle"] = kc;
    return j;
}

std::string render_tuple_line(const RunReport& r, long long k, std::size_t i) {
    const CharacterTable& base = *r.base;
    const OrderResult& res = r.orders.at(k);
    std::ostringstream ss;
    ss << "    (";
    auto vec = report_vector(base, res.set.tuples[i]);
    for (std::size_t v = 0; v < vec.size(); ++v) ss << (v ? "," : "") << vec[v];
    ss << ")  branches";
    for (std::size_t b : res.set.provenance[i]) ss << " " << b;
    return ss.str();
}

}  // namespace

std::string report_to_json(const RunReport& r) {
    return report_json(r).dump(2) + "\n";
}

std::string order_to_json(const RunReport& r, long long k) {
    return order_json(r, k).dump(2) + "\n";
}

std::string order_to_text(const RunReport& r, long long k) {
    const CharacterTable& base = *r.base;
    const OrderResult& res = r.orders.at(k);
    std::ostringstream ss;
    ss << "order " << k << ": " << to_string(res.verdict.status);
    if (res.verdict.status != OrderStatus::Excluded)
        ss << ", rationally conjugate: " << (res.verdict.rationally_conjugate ? "yes" : "no");
    ss << "\n  branches: " << res.branches.size() << ", solutions: " << res.set.tuples.size() << "\n";
    if (k > 1) {
        ss << "  variables:";
        for (std::size_t cls : admissible_classes(base, k)) ss << " " << base.classes()[cls].name;
        ss << "\n";
    }
    if (!res.set.tuples.empty()) {
        ss << "  tuples over (";
        const auto& ro = base.report_order();
        for (std::size_t v = 0; v < ro.size(); ++v) ss << (v ? "," : "") << base.classes()[ro[v]].name;
        ss << "):\n";
        for (std::size_t i = 0; i < res.set.tuples.size(); ++i) ss << render_tuple_line(r, k, i) << "\n";
    }
    for (std::size_t bi = 0; bi < res.branches.size(); ++bi) {
        const auto& b = res.branches[bi];
        if (b.eliminated_by)
            ss << "  branch " << bi << " eliminated by " << *b.eliminated_by << "\n";
    }
    return ss.str();
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream ss;
    ss << "group " << r.group << " (order " << r.base->group_order() << ", exponent "
       << r.base->exponent() << ")\n";
    ss << "tables:";
    for (const auto& t : r.tables_used) ss << " " << t;
    ss << "\n\n";
    std::vector<long long> realized, survives, excluded;
    for (const auto& [k, res] : r.orders) {
        switch (res.verdict.status) {
            case OrderStatus::Realized: realized.push_back(k); break;
            case OrderStatus::SurvivesNontrivially: survives.push_back(k); break;
            case OrderStatus::Excluded: excluded.push_back(k); break;
        }
    }
    auto list = [&](const char* label, const std::vector<long long>& v) {
        ss << label << ":";
        for (long long k : v) ss << " " << k;
        ss << "\n";
    };
    list("realized orders", realized);
    list("surviving non-element orders", survives);
    list("excluded orders", excluded);
    list("pruned orders", r.pruned);
    ss << "\n";
    for (const auto& [k, res] : r.orders) ss << order_to_text(r, k);
    auto graph_line = [&](const char* label, const PrimeGraph& g) {
        ss << label << ": vertices {";
        bool first = true;
        for (long long v : g.vertices) { ss << (first ? "" : ",") << v; first = false; }
        ss << "}, edges {";
        first = true;
        for (const auto& [p, q] : g.edges) { ss << (first ? "" : ",") << "{" << p << "," << q << "}"; first = false; }
        ss << "}\n";
    };
    ss << "\n";
    graph_line("prime graph of the group", r.graph_group);
    graph_line("prime graph of the unit group", r.graph_units);
    ss << "Kimmerle (prime graphs equal): " << (r.kimmerle ? "true" : "false") << "\n";
    ss << "elapsed: " << r.elapsed_seconds << " s\n";
    return ss.str();
}

namespace {

void collect_diffs(const nlohmann::json& a, const nlohmann::json& b, const std::string& path,
                   std::vector<std::string>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (a.type() != b.type()) {
        out.push_back(path + ": type differs");
        return;
    }
    if (a.is_object()) {
        for (auto it = a.begin(); it != a.end(); ++it) {
            if (!b.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing on right");
                if (out.size() >= limit) return;
            } else {
                collect_diffs(it.value(), b.at(it.key()), path + "/" + it.key(), out, limit);
            }
        }
        for (auto it = b.begin(); it != b.end(); ++it)
            if (!a.contains(it.key())) {
                out.push_back(path + "/" + it.key() + ": missing on left");
                if (out.size() >= limit) return;
            }
        return;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            out.push_back(path + ": array size " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
            return;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            collect_diffs(a[i], b[i], path + "/" + std::to_string(i), out, limit);
        return;
    }
    if (a != b) out.push_back(path + ": " + a.dump() + " vs " + b.dump());
}

}  // namespace

std::vector<std::string> diff_against_golden(const std::string& produced_json,
                                             const std::string& golden_json, std::size_t limit) {
    nlohmann::json a = nlohmann::json::parse(produced_json, nullptr, false);
    nlohmann::json b = nlohmann::json::parse(golden_json, nullptr, false);
    std::vector<std::string> out;
    if (a.is_discarded() || b.is_discarded()) {
        out.push_back("not valid JSON");
        return out;
    }
    collect_diffs(a, b, "", out, limit);
    return out;
}

}  // namespace helpenum
