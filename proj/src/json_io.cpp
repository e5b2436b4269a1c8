#include "genusdist/json_io.hpp"

#include <fstream>

namespace genusdist {

using nlohmann::json;

namespace {

json lambda_to_json(const Partition& lambda) {
    json arr = json::array();
    for (int p : lambda.parts()) arr.push_back(p);
    return arr;
}

Partition lambda_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

}  // namespace

json to_json(const GenusPolynomial& gamma) {
    json coeffs = json::array();
    for (const Int& c : gamma.coeffs) coeffs.push_back(c.str());
    return json{{"family", std::string(family_name(gamma.family))},
                {"m", gamma.m},
                {"n", gamma.n},
                {"lambda", lambda_to_json(gamma.lambda)},
                {"coeffs", coeffs}};
}

GenusPolynomial genus_polynomial_from_json(const json& j) {
    GenusPolynomial gamma;
    gamma.family = family_from_name(j.at("family").get<std::string>());
    gamma.m = j.at("m").get<int>();
    gamma.n = j.at("n").get<int>();
    gamma.lambda = lambda_from_json(j.at("lambda"));
    for (const auto& c : j.at("coeffs")) gamma.coeffs.emplace_back(c.get<std::string>());
    return gamma;
}

json to_json(const GenusHistogram& hist) {
    json counts = json::object();
    for (const auto& [g, c] : hist.counts) counts[std::to_string(g)] = c.str();
    return json{{"histogram", counts}};
}

GenusHistogram histogram_from_json(const json& j) {
    GenusHistogram hist;
    for (const auto& [key, value] : j.at("histogram").items()) {
        hist.counts[std::stoi(key)] = Int(value.get<std::string>());
    }
    return hist;
}

json to_json(const MomentReport& report) {
    return json{{"m", report.m},
                {"n", report.n},
                {"lambda", lambda_to_json(report.lambda)},
                {"E_X", rat_to_string(report.mean_x)},
                {"Var_X", rat_to_string(report.var_x)},
                {"E_g", rat_to_string(report.mean_genus)},
                {"Var_g", rat_to_string(report.var_genus)},
                {"mu", report.mu.str(report.digits)},
                {"sigma2", report.sigma_sq.str(report.digits)},
                {"digits", report.digits}};
}

MomentReport moment_report_from_json(const json& j) {
    MomentReport rep;
    rep.m = j.at("m").get<int>();
    rep.n = j.at("n").get<int>();
    rep.lambda = lambda_from_json(j.at("lambda"));
    rep.mean_x = rat_from_string(j.at("E_X").get<std::string>());
    rep.var_x = rat_from_string(j.at("Var_X").get<std::string>());
    rep.mean_genus = rat_from_string(j.at("E_g").get<std::string>());
    rep.var_genus = rat_from_string(j.at("Var_g").get<std::string>());
    rep.mu = Dec(j.at("mu").get<std::string>());
    rep.sigma_sq = Dec(j.at("sigma2").get<std::string>());
    rep.digits = j.at("digits").get<int>();
    return rep;
}

json to_json(const EulerianDigraph& d) {
    json edges = json::array();
    for (const auto& [tail, head] : d.edges()) edges.push_back(json::array({tail, head}));
    return json{{"vertices", d.vertex_count()}, {"edges", edges}};
}

EulerianDigraph digraph_from_json(const json& j) {
    const int vertices = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("digraph edge must be a [tail, head] pair");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return EulerianDigraph::create(vertices, std::move(edges));
}

EulerianDigraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open digraph file: " + path);
    json j;
    in >> j;
    return digraph_from_json(j);
}

}  // namespace genusdist
