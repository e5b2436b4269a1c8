#pragma once

#include <json.hpp>

#include "genusdist/analysis.hpp"
#include "genusdist/digraph.hpp"
#include "genusdist/genus.hpp"
#include "genusdist/oracle.hpp"

namespace genusdist {

// Integers travel as decimal strings so payloads round-trip exactly.

nlohmann::json to_json(const GenusPolynomial& gamma);
GenusPolynomial genus_polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenusHistogram& hist);
GenusHistogram histogram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MomentReport& report);
MomentReport moment_report_from_json(const nlohmann::json& j);

/// {"vertices": k, "edges": [[tail, head], ...]} with 0-based vertex ids;
/// edge ids are array positions.
nlohmann::json to_json(const EulerianDigraph& d);
EulerianDigraph digraph_from_json(const nlohmann::json& j);
EulerianDigraph load_digraph(const std::string& path);

}  // namespace genusdist
