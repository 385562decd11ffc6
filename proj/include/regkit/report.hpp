#pragma once

#include "regkit/oracles.hpp"
#include "regkit/removal.hpp"
#include "regkit/roth.hpp"
#include "regkit/srl.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace regkit {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "regkit-report/1";

// Rationals are serialized as canonical "p" / "p/q" strings, big integers as
// decimal strings; nothing in a report passes through floating point except
// the timing, which is measurement noise by definition.
Json rational_json(const Rational& r);
Json bigint_json(const BigInt& n);
Json vertex_set_json(const VertexSet& s);
Json partition_json(const VertexPartition& p);
Json graph_summary_json(const UGraph& g);
Json regularity_json(const RegularityOutcome& out);
Json partition_regularity_json(const PartitionRegularity& out);
Json tower_json(const TowerBound& b);
Json srl_json(const SrlResult& r);
Json counting_json(const CountingBound& b);
Json clean_json(const CleanResult& c);
Json removal_json(const RemovalResult& r);
Json unique_triangles_json(const UniqueTriangles& u);
Json diamond_json(const DiamondFreeBound& d);
Json roth_instance_json(const RothInstance& inst);
Json roth_audit_json(const RothAudit& a);

// Report envelope: schema marker, the command that ran, its parameters, the
// results, and wall time. Key order is alphabetical (library default), so two
// reports with equal content are byte-identical.
Json make_report(const std::string& command, Json params, Json results, double timing_ms);
bool validate_report(const Json& report);

void write_report_file(const std::filesystem::path& path, const Json& report);

} // namespace regkit
