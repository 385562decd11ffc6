#include "regkit/report.hpp"

#include "regkit/errors.hpp"

#include <fstream>

namespace regkit {

Json rational_json(const Rational& r) {
    return rational_str(r);
}

Json bigint_json(const BigInt& n) {
    return n.str();
}

Json vertex_set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : s) {
        arr.push_back(v);
    }
    return arr;
}

Json partition_json(const VertexPartition& p) {
    Json parts = Json::array();
    for (const VertexSet& part : p.parts()) {
        parts.push_back(vertex_set_json(part));
    }
    return Json{{"part_count", p.size()}, {"parts", parts}};
}

Json graph_summary_json(const UGraph& g) {
    return Json{{"edges", g.edge_count()},
                {"vertices", g.vertex_count()},
                {"density", rational_json(edge_density(g.vertices(), g.vertices(), g))}};
}

Json regularity_json(const RegularityOutcome& out) {
    Json j{{"regular", out.regular}};
    if (out.witness.has_value()) {
        j["witness"] = Json{{"a", vertex_set_json(out.witness->a)},
                            {"b", vertex_set_json(out.witness->b)},
                            {"deviation", rational_json(out.witness->deviation)}};
    }
    return j;
}

Json partition_regularity_json(const PartitionRegularity& out) {
    return Json{{"regular", out.regular},
                {"defect", rational_json(out.defect)},
                {"budget", rational_json(out.budget)}};
}

Json tower_json(const TowerBound& b) {
    return Json{{"rounds", bigint_json(b.rounds)},
                {"exact", b.exact},
                {"value", bigint_json(b.value)},
                {"steps_done", bigint_json(b.steps_done)},
                {"digit_limit", b.digit_limit}};
}

Json srl_json(const SrlResult& r) {
    Json energies = Json::array();
    for (const Rational& e : r.energy_trajectory) {
        energies.push_back(rational_json(e));
    }
    return Json{{"partition", partition_json(r.partition)},
                {"iterations", r.iterations},
                {"energy_trajectory", energies},
                {"final_defect", rational_json(r.final_defect)},
                {"part_bound", tower_json(r.part_bound)},
                {"certified", r.certified}};
}

Json counting_json(const CountingBound& b) {
    return Json{{"hypotheses_ok", b.hypotheses_ok},
                {"d_xy", rational_json(b.dxy)},
                {"d_xz", rational_json(b.dxz)},
                {"d_yz", rational_json(b.dyz)},
                {"bound", rational_json(b.bound)},
                {"actual", bigint_json(b.actual)}};
}

Json clean_json(const CleanResult& c) {
    return Json{{"cleaned", graph_summary_json(c.cleaned)},
                {"partition", partition_json(c.partition)},
                {"srl_iterations", c.srl.iterations},
                {"eps", rational_json(c.eps)},
                {"eps_prime", rational_json(c.eps_prime)},
                {"density_floor", rational_json(c.density_floor)},
                {"size_floor", rational_json(c.size_floor)},
                {"removed_irregular", c.removed_irregular.size()},
                {"removed_sparse", c.removed_sparse.size()},
                {"removed_small", c.removed_small.size()}};
}

Json removal_json(const RemovalResult& r) {
    Json j{{"cleaned", graph_summary_json(r.cleaned)},
           {"removed_edges", bigint_json(r.removed_edges)},
           {"removal_budget", rational_json(r.removal_budget)},
           {"cleaned_triangle_free", r.cleaned_triangle_free}};
    j["delta"] = r.delta.has_value() ? rational_json(*r.delta) : Json(nullptr);
    if (r.certificate.has_value()) {
        j["certificate"] = Json{{"parts", Json::array({r.certificate->parts[0],
                                                       r.certificate->parts[1],
                                                       r.certificate->parts[2]})},
                                {"counting", counting_json(r.certificate->counting)}};
    }
    if (r.clean.has_value()) {
        j["clean"] = clean_json(*r.clean);
    }
    return j;
}

Json unique_triangles_json(const UniqueTriangles& u) {
    Json j{{"holds", u.holds}, {"triangle_count", bigint_json(u.triangle_count)}};
    if (u.counterexample.has_value()) {
        j["counterexample"] = Json::array({u.counterexample->u, u.counterexample->v});
    }
    return j;
}

Json diamond_json(const DiamondFreeBound& d) {
    return Json{{"edge_count", bigint_json(d.edge_count)},
                {"triangle_count", bigint_json(d.triangle_count)},
                {"identity_holds", d.identity_holds},
                {"budget", rational_json(d.budget)},
                {"within_budget", d.within_budget}};
}

Json roth_instance_json(const RothInstance& inst) {
    Json a = Json::array();
    for (std::uint64_t v : inst.a) {
        a.push_back(v);
    }
    return Json{{"n", inst.n},
                {"m", inst.m},
                {"a", a},
                {"graph", graph_summary_json(inst.graph)},
                {"edges_per_class", inst.edges_xy.size()}};
}

Json roth_audit_json(const RothAudit& a) {
    Json w = Json::array();
    for (std::uint64_t v : a.max_witness) {
        w.push_back(v);
    }
    return Json{{"n", a.n},
                {"eps", rational_json(a.eps)},
                {"subsets_checked", a.subsets_checked},
                {"ap_free_count", a.ap_free_count},
                {"max_ap_free_size", a.max_ap_free_size},
                {"max_witness", w},
                {"eps_times_n", rational_json(a.eps_times_n)},
                {"all_ok", a.all_ok}};
}

Json make_report(const std::string& command, Json params, Json results, double timing_ms) {
    return Json{{"schema", kReportSchema},
                {"command", command},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"timing_ms", timing_ms}};
}

bool validate_report(const Json& report) {
    return report.is_object() && report.contains("schema") &&
           report["schema"] == kReportSchema && report.contains("command") &&
           report["command"].is_string() && report.contains("params") &&
           report["params"].is_object() && report.contains("results") &&
           report.contains("timing_ms") && report["timing_ms"].is_number();
}

void write_report_file(const std::filesystem::path& path, const Json& report) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write report file: " + path.string());
    }
    out << report.dump(2) << '\n';
    if (!out) {
        throw IoError("failed writing report file: " + path.string());
    }
}

} // namespace regkit
