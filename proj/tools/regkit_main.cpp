// regkit: exact-arithmetic toolkit for graph regularity, triangle counting
// and removal, and the tripartite difference-set construction.
//
// One subcommand per run; every run prints a structured JSON report to stdout
// (and optionally to --report). All numeric inputs are exact rationals; the
// only nondeterministic report field is timing_ms.

#include "regkit/energy.hpp"
#include "regkit/errors.hpp"
#include "regkit/generate.hpp"
#include "regkit/graph.hpp"
#include "regkit/io.hpp"
#include "regkit/oracles.hpp"
#include "regkit/partition.hpp"
#include "regkit/rational.hpp"
#include "regkit/regularity.hpp"
#include "regkit/removal.hpp"
#include "regkit/report.hpp"
#include "regkit/roth.hpp"
#include "regkit/srl.hpp"
#include "regkit/tower.hpp"
#include "regkit/triangles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace regkit;
using Clock = std::chrono::steady_clock;

// Relative --report paths land in $REGKIT_REPORT_DIR when it is set.
std::filesystem::path resolve_report_path(const std::string& given) {
    std::filesystem::path path(given);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("REGKIT_REPORT_DIR")) {
            return std::filesystem::path(dir) / path;
        }
    }
    return path;
}

void emit(const Json& report, const std::string& report_path) {
    if (!validate_report(report)) {
        throw std::logic_error("constructed report fails schema validation");
    }
    std::cout << report.dump(2) << '\n';
    if (!report_path.empty()) {
        write_report_file(resolve_report_path(report_path), report);
    }
}

std::uint64_t parse_u64(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw DomainError("expected an unsigned integer, got '" + tok + "'");
    }
    std::uint64_t value = 0;
    for (char c : tok) {
        if (value > (std::uint64_t(-1) - (c - '0')) / 10) {
            throw DomainError("integer out of range: '" + tok + "'");
        }
        value = value * 10 + std::uint64_t(c - '0');
    }
    return value;
}

std::vector<std::uint64_t> split_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        const auto a = tok.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) {
            continue; // tolerate empty fields from trailing commas
        }
        const auto b = tok.find_last_not_of(" \t\r\n");
        out.push_back(parse_u64(tok.substr(a, b - a + 1)));
    }
    return out;
}

// "0,1,3" or "file:<path>" with whitespace/comma separated naturals.
std::vector<std::uint64_t> parse_set_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) {
            throw IoError("cannot open set file '" + path + "'");
        }
        std::vector<std::uint64_t> out;
        std::string tok;
        while (in >> tok) {
            for (std::uint64_t v : split_u64_list(tok)) {
                out.push_back(v);
            }
        }
        return out;
    }
    return split_u64_list(spec);
}

VertexSet parse_vertex_set(const std::string& spec) {
    return VertexSet(parse_set_spec(spec));
}

Json error_report(const std::string& kind, const std::string& message) {
    Json err;
    err["schema"] = kReportSchema;
    err["error"] = Json{{"kind", kind}, {"message", message}};
    return err;
}

// Runs one command body, mapping failures onto the exit-code contract:
// 0 success, 1 domain/cap violation, 2 I/O failure.
template <typename F>
int run_guarded(F&& body) {
    try {
        body();
        return 0;
    } catch (const CapError& e) {
        std::cout << error_report("cap", e.what()).dump(2) << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cout << error_report("domain", e.what()).dump(2) << '\n';
        return 1;
    } catch (const IoError& e) {
        std::cout << error_report("io", e.what()).dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_report("internal", e.what()).dump(2) << '\n';
        return 1;
    }
}

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json census_json(const UGraph& g) {
    const std::vector<Triangle> tris = triangle_set(g);
    Json list = Json::array();
    for (const Triangle& t : tris) {
        list.push_back(Json::array({t[0], t[1], t[2]}));
    }
    Json out;
    out["graph"] = graph_summary_json(g);
    out["triangle_free"] = tris.empty();
    out["triangles"] = std::move(list);
    out["unordered_count"] = bigint_json(BigInt(tris.size()));
    out["ordered_count"] =
        bigint_json(count_triangle_triples(g.vertices(), g.vertices(), g.vertices(), g));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph regularity, triangle removal, and difference-set toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph and write it as an edge list");
    std::string gen_kind;
    std::uint64_t gen_n = 0, gen_a = 0, gen_b = 0, gen_c = 0, gen_seed = 0;
    std::string gen_p = "1/2", gen_out, gen_report, gen_dot;
    gen->add_option("kind", gen_kind, "complete | random | tripartite | half")
        ->required()
        ->check(CLI::IsMember({"complete", "random", "tripartite", "half"}));
    gen->add_option("--n", gen_n, "vertex count (complete, random, half)");
    gen->add_option("--a", gen_a, "first part size (tripartite)");
    gen->add_option("--b", gen_b, "second part size (tripartite)");
    gen->add_option("--c", gen_c, "third part size (tripartite)");
    gen->add_option("--p", gen_p, "edge probability as an exact rational (random)");
    gen->add_option("--seed", gen_seed, "RNG seed (random)");
    gen->add_option("--out", gen_out, "edge-list output path")->required();
    gen->add_option("--report", gen_report, "also write the JSON report here");
    gen->add_option("--dot", gen_dot, "write a DOT rendering of the graph");
    gen->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            UGraph g;
            Json params;
            params["kind"] = gen_kind;
            params["out"] = gen_out;
            if (gen_kind == "complete") {
                g = complete_graph(gen_n);
                params["n"] = gen_n;
            } else if (gen_kind == "random") {
                const Rational p = parse_rational(gen_p);
                g = random_graph(gen_n, p, gen_seed);
                params["n"] = gen_n;
                params["p"] = rational_json(p);
                params["seed"] = gen_seed;
            } else if (gen_kind == "tripartite") {
                g = complete_tripartite(gen_a, gen_b, gen_c);
                params["a"] = gen_a;
                params["b"] = gen_b;
                params["c"] = gen_c;
            } else {
                g = bipartite_half(gen_n);
                params["n"] = gen_n;
            }
            write_edge_list_file(gen_out, g);
            if (!gen_dot.empty()) {
                write_dot_file(gen_dot, g);
            }
            Json results;
            results["graph"] = graph_summary_json(g);
            results["path"] = gen_out;
            emit(make_report("gen", params, results, elapsed_ms(t0)), gen_report);
        });
    });

    // ---- partition -------------------------------------------------------
    auto* part = app.add_subcommand(
        "partition", "iterate witness refinement until the partition is eps-regular");
    std::string part_graph, part_eps, part_initial, part_out, part_report, part_dot;
    std::size_t part_cap = kPairSizeCap;
    part->add_option("--graph", part_graph, "edge-list input path")->required();
    part->add_option("--eps", part_eps, "regularity parameter, exact rational")->required();
    part->add_option("--initial", part_initial, "starting partition file (default: one part)");
    part->add_option("--out", part_out, "write the final partition here");
    part->add_option("--cap-pair", part_cap, "largest part size the exact checker accepts");
    part->add_option("--report", part_report, "also write the JSON report here");
    part->add_option("--dot", part_dot, "write a DOT rendering of graph + final partition");
    part->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(part_graph);
            const Rational eps = parse_rational(part_eps);
            std::optional<VertexPartition> initial;
            Json params;
            params["graph"] = part_graph;
            params["eps"] = rational_json(eps);
            params["size_cap"] = part_cap;
            if (!part_initial.empty()) {
                initial = read_partition_file(part_initial, g);
                params["initial"] = part_initial;
            }
            const SrlResult r = szemeredi_partition(g, eps, initial, part_cap);
            if (!part_out.empty()) {
                write_partition_file(part_out, r.partition);
            }
            if (!part_dot.empty()) {
                write_dot_file(part_dot, g, &r.partition);
            }
            Json results;
            results["graph"] = graph_summary_json(g);
            results["srl"] = srl_json(r);
            emit(make_report("partition", params, results, elapsed_ms(t0)), part_report);
        });
    });

    // ---- check -----------------------------------------------------------
    auto* check = app.add_subcommand("check", "test a given partition for eps-regularity");
    std::string check_graph, check_partition, check_eps, check_report;
    std::size_t check_cap = kPairSizeCap;
    check->add_option("--graph", check_graph, "edge-list input path")->required();
    check->add_option("--partition", check_partition, "partition input path")->required();
    check->add_option("--eps", check_eps, "regularity parameter, exact rational")->required();
    check->add_option("--cap-pair", check_cap, "largest part size the exact checker accepts");
    check->add_option("--report", check_report, "also write the JSON report here");
    check->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(check_graph);
            const VertexPartition p = read_partition_file(check_partition, g);
            const Rational eps = parse_rational(check_eps);
            const PartitionRegularity pr = is_regular_partition(eps, g, p, check_cap);
            Json params;
            params["eps"] = rational_json(eps);
            params["graph"] = check_graph;
            params["partition"] = check_partition;
            params["size_cap"] = check_cap;
            Json results;
            results["check"] = partition_regularity_json(pr);
            results["energy"] = rational_json(mean_square_density(g, p));
            results["partition"] = partition_json(p);
            emit(make_report("check", params, results, elapsed_ms(t0)), check_report);
        });
    });

    // ---- triangles ---------------------------------------------------------
    auto* tri = app.add_subcommand("triangles", "enumerate the triangles of a graph");
    std::string tri_graph, tri_report;
    tri->add_option("--graph", tri_graph, "edge-list input path")->required();
    tri->add_option("--report", tri_report, "also write the JSON report here");
    tri->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(tri_graph);
            Json params;
            params["graph"] = tri_graph;
            emit(make_report("triangles", params, census_json(g), elapsed_ms(t0)), tri_report);
        });
    });

    // ---- clean -------------------------------------------------------------
    auto* clean = app.add_subcommand(
        "clean", "remove edges in irregular, sparse, and small-part pairs; report the result");
    std::string clean_graph_path, clean_eps, clean_out, clean_report, clean_dot;
    std::size_t clean_cap = kPairSizeCap;
    clean->add_option("--graph", clean_graph_path, "edge-list input path")->required();
    clean->add_option("--eps", clean_eps, "removal parameter, exact rational")->required();
    clean->add_option("--out", clean_out, "write the cleaned graph's edge list here");
    clean->add_option("--cap-pair", clean_cap, "largest part size the exact checker accepts");
    clean->add_option("--report", clean_report, "also write the JSON report here");
    clean->add_option("--dot", clean_dot, "write a DOT rendering of the cleaned graph");
    clean->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(clean_graph_path);
            const Rational eps = parse_rational(clean_eps);
            const RemovalResult res = triangle_removal(g, eps, clean_cap);
            if (!clean_out.empty()) {
                write_edge_list_file(clean_out, res.cleaned);
            }
            if (!clean_dot.empty()) {
                if (res.clean.has_value()) {
                    write_dot_file(clean_dot, res.cleaned, &res.clean->partition);
                } else {
                    write_dot_file(clean_dot, res.cleaned);
                }
            }
            Json params;
            params["eps"] = rational_json(eps);
            params["graph"] = clean_graph_path;
            params["size_cap"] = clean_cap;
            Json results;
            results["input"] = graph_summary_json(g);
            results["removal"] = removal_json(res);
            emit(make_report("clean", params, results, elapsed_ms(t0)), clean_report);
        });
    });

    // ---- roth ---------------------------------------------------------------
    auto* roth = app.add_subcommand(
        "roth", "build the tripartite difference-set graph, or audit all AP-free sets");
    std::uint64_t roth_n = 0, roth_audit_cap = 14;
    std::string roth_set, roth_eps, roth_out, roth_report, roth_dot;
    bool roth_do_audit = false;
    roth->add_option("--n", roth_n, "difference-set universe is {0..N-1}")->required();
    roth->add_option("--set", roth_set, "difference set: comma list or file:<path>");
    roth->add_flag("--audit", roth_do_audit, "check every AP-free subset of {0..N-1}");
    roth->add_option("--eps", roth_eps, "edge-budget parameter for --audit, exact rational");
    roth->add_option("--cap-audit", roth_audit_cap, "largest N --audit accepts");
    roth->add_option("--out", roth_out, "write the constructed graph's edge list here");
    roth->add_option("--report", roth_report, "also write the JSON report here");
    roth->add_option("--dot", roth_dot, "write a DOT rendering of the constructed graph");
    roth->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            Json params;
            params["n"] = roth_n;
            if (roth_do_audit) {
                if (roth_eps.empty()) {
                    throw DomainError("roth --audit needs --eps");
                }
                const Rational eps = parse_rational(roth_eps);
                params["audit"] = true;
                params["eps"] = rational_json(eps);
                const RothAudit audit = roth_audit(roth_n, eps, roth_audit_cap);
                Json results;
                results["audit"] = roth_audit_json(audit);
                emit(make_report("roth", params, results, elapsed_ms(t0)), roth_report);
                return;
            }
            const std::vector<std::uint64_t> a = parse_set_spec(roth_set);
            params["set"] = roth_set;
            const RothInstance inst = build_roth_graph(roth_n, a);
            if (!roth_out.empty()) {
                write_edge_list_file(roth_out, inst.graph);
            }
            if (!roth_dot.empty()) {
                const VertexPartition copies(inst.graph.vertices(),
                                             {inst.part_x, inst.part_y, inst.part_z});
                write_dot_file(roth_dot, inst.graph, &copies);
            }
            Json results;
            results["instance"] = roth_instance_json(inst);
            emit(make_report("roth", params, results, elapsed_ms(t0)), roth_report);
        });
    });

    // ---- oracle ---------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force reference implementations");
    oracle->require_subcommand(1);

    auto* opair = oracle->add_subcommand("pair", "regularity of (X, Y) by full enumeration");
    std::string opair_graph, opair_x, opair_y, opair_eps, opair_report;
    bool opair_strict = false;
    std::size_t opair_cap = OracleConfig{}.subset_cap;
    opair->add_option("--graph", opair_graph, "edge-list input path")->required();
    opair->add_option("--x", opair_x, "left side, comma list of vertices")->required();
    opair->add_option("--y", opair_y, "right side, comma list of vertices")->required();
    opair->add_option("--eps", opair_eps, "regularity parameter, exact rational")->required();
    opair->add_flag("--strict", opair_strict, "admit only proper subsets as witnesses");
    opair->add_option("--cap-subset", opair_cap, "largest side the oracle accepts");
    opair->add_option("--report", opair_report, "also write the JSON report here");
    opair->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(opair_graph);
            const VertexSet x = parse_vertex_set(opair_x);
            const VertexSet y = parse_vertex_set(opair_y);
            const Rational eps = parse_rational(opair_eps);
            OracleConfig cfg;
            cfg.subset_cap = opair_cap;
            const RegularityOutcome out = brute_regular_pair(x, y, g, eps, opair_strict, cfg);
            Json params;
            params["eps"] = rational_json(eps);
            params["graph"] = opair_graph;
            params["strict"] = opair_strict;
            params["x"] = vertex_set_json(x);
            params["y"] = vertex_set_json(y);
            Json results;
            results["outcome"] = regularity_json(out);
            emit(make_report("oracle.pair", params, results, elapsed_ms(t0)), opair_report);
        });
    });

    auto* oparts = oracle->add_subcommand("partitions", "every set partition of {0..n-1}");
    std::uint64_t oparts_n = 0;
    std::size_t oparts_cap = OracleConfig{}.partition_cap;
    std::string oparts_report;
    oparts->add_option("--n", oparts_n, "ground set is {0..n-1}")->required();
    oparts->add_option("--cap-partition", oparts_cap, "largest ground set the oracle accepts");
    oparts->add_option("--report", oparts_report, "also write the JSON report here");
    oparts->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            OracleConfig cfg;
            cfg.partition_cap = oparts_cap;
            const std::vector<VertexPartition> all =
                all_partitions(VertexSet::range(oparts_n), cfg);
            Json params;
            params["n"] = oparts_n;
            Json list = Json::array();
            for (const VertexPartition& p : all) {
                list.push_back(partition_json(p));
            }
            Json results;
            results["count"] = all.size();
            results["partitions"] = std::move(list);
            emit(make_report("oracle.partitions", params, results, elapsed_ms(t0)),
                 oparts_report);
        });
    });

    auto* otri = oracle->add_subcommand("triangles", "triangle enumeration by triple loop");
    std::string otri_graph, otri_report;
    otri->add_option("--graph", otri_graph, "edge-list input path")->required();
    otri->add_option("--report", otri_report, "also write the JSON report here");
    otri->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            const UGraph g = read_edge_list_file(otri_graph);
            const std::vector<Triangle> tris = brute_triangles(g);
            Json params;
            params["graph"] = otri_graph;
            Json list = Json::array();
            for (const Triangle& t : tris) {
                list.push_back(Json::array({t[0], t[1], t[2]}));
            }
            Json results;
            results["count"] = tris.size();
            results["triangles"] = std::move(list);
            emit(make_report("oracle.triangles", params, results, elapsed_ms(t0)), otri_report);
        });
    });

    auto* oap = oracle->add_subcommand("max-ap-free",
                                       "largest progression-free subset of {0..n-1}");
    std::uint64_t oap_n = 0;
    std::uint64_t oap_cap = OracleConfig{}.ap_cap;
    std::string oap_report;
    oap->add_option("--n", oap_n, "universe is {0..n-1}")->required();
    oap->add_option("--cap-ap", oap_cap, "largest universe the oracle accepts");
    oap->add_option("--report", oap_report, "also write the JSON report here");
    oap->callback([&] {
        exit_code = run_guarded([&] {
            const auto t0 = Clock::now();
            OracleConfig cfg;
            cfg.ap_cap = oap_cap;
            const ApFreeExtremum ext = max_ap_free(oap_n, cfg);
            Json params;
            params["n"] = oap_n;
            Json results;
            results["size"] = ext.size;
            results["witness"] = Json(ext.witness);
            emit(make_report("oracle.max-ap-free", params, results, elapsed_ms(t0)), oap_report);
        });
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}
