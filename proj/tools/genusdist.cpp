#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "genusdist/analysis.hpp"
#include "genusdist/characters.hpp"
#include "genusdist/genus.hpp"
#include "genusdist/json_io.hpp"
#include "genusdist/oracle.hpp"

namespace {

using namespace genusdist;
using nlohmann::json;

constexpr int kDefaultCap = 12;
constexpr unsigned long long kDefaultBudget = 100000000ULL;

struct Options {
    std::string format = "text";
    int threads = 1;
    unsigned long long budget = kDefaultBudget;
    int cap = kDefaultCap;
    bool force = false;

    std::string family;
    int m = 3;
    int n = 0;
    std::string lambda_text;
    bool all_lambda = false;
    std::string route = "operator";
    int max_n = 0;
    std::string mode;
    std::string input;
    int handle = 0;
    int k = 2;
    int digits = 50;
    std::string theta_text;
    std::string mu_text;
};

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

void add_threads(CLI::App* cmd, Options& o) {
    cmd->add_option("--threads", o.threads, "worker count (result independent of it)")
        ->envname("GENUSDIST_THREADS")
        ->check(CLI::PositiveNumber);
}

void add_budget(CLI::App* cmd, Options& o) {
    cmd->add_option("--budget", o.budget, "max tuples an oracle may enumerate")
        ->capture_default_str();
}

void add_cap(CLI::App* cmd, Options& o) {
    cmd->add_option("--cap", o.cap, "max n accepted by formula commands")->capture_default_str();
}

void add_force(CLI::App* cmd, Options& o) {
    cmd->add_flag("--force", o.force, "acknowledge raising --cap/--budget beyond the defaults");
}

void check_limits(const Options& o) {
    if (!o.force && o.cap > kDefaultCap) {
        throw std::invalid_argument("--cap above " + std::to_string(kDefaultCap) +
                                    " requires --force");
    }
    if (!o.force && o.budget > kDefaultBudget) {
        throw std::invalid_argument("--budget above " + std::to_string(kDefaultBudget) +
                                    " requires --force");
    }
}

void check_cap(const Options& o, int n) {
    check_limits(o);
    if (n > o.cap) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(o.cap) + " (raise with --cap ... --force)");
    }
}

OracleOptions oracle_options(const Options& o) {
    check_limits(o);
    return OracleOptions{Int(o.budget), o.threads};
}

void emit_record(const std::string& command, json inputs, json result) {
    json record{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"format", "json"}};
    std::cout << record.dump() << "\n";
}

std::string csv_coeffs(const GenusPolynomial& g) {
    std::ostringstream out;
    for (int i = 0; i <= g.degree(); ++i) {
        if (i) out << ",";
        out << g.coeffs[i].str();
    }
    return out.str();
}

std::vector<Partition> lambda_selection(const Options& o) {
    if (o.all_lambda) return partitions_of(o.n);
    if (o.lambda_text.empty()) {
        throw std::invalid_argument("need --lambda or --all-lambda");
    }
    return {Partition::parse(o.lambda_text)};
}

PRoute route_from(const Options& o) {
    return o.route == "character" ? PRoute::character : PRoute::shift_operator;
}

int cmd_genus(const Options& o) {
    check_cap(o, o.n);
    GenusPolynomial gamma;
    json inputs{{"family", o.family}, {"n", o.n}};
    if (o.family == "constellation") {
        if (o.lambda_text.empty()) throw std::invalid_argument("constellation needs --lambda");
        gamma = gamma_constellation(o.m, o.n, Partition::parse(o.lambda_text), route_from(o));
        inputs["m"] = o.m;
        inputs["lambda"] = o.lambda_text;
    } else if (o.family == "digraph") {
        if (o.lambda_text.empty()) throw std::invalid_argument("digraph needs --lambda");
        gamma = gamma_digraph(o.n, Partition::parse(o.lambda_text));
        inputs["lambda"] = o.lambda_text;
    } else if (o.family == "bouquet") {
        gamma = bouquet_gamma(o.n);
    } else if (o.family == "dipole") {
        gamma = dipole_gamma(o.n);
    } else if (o.family == "fan") {
        throw std::invalid_argument("fans take a digraph file; use the fan subcommand");
    } else {
        throw std::invalid_argument("unknown family \"" + o.family + "\"");
    }

    if (o.format == "json") {
        emit_record("genus", inputs, to_json(gamma));
    } else if (o.format == "csv") {
        std::cout << csv_coeffs(gamma) << "\n";
    } else {
        std::cout << gamma.pretty() << "\n";
    }
    return 0;
}

int cmd_table(const Options& o) {
    check_cap(o, o.max_n);
    if (o.family != "bouquet" && o.family != "dipole") {
        throw std::invalid_argument("table family must be bouquet or dipole");
    }
    std::vector<GenusPolynomial> rows;
    for (int n = 1; n <= o.max_n; ++n) {
        rows.push_back(o.family == "bouquet" ? bouquet_gamma(n) : dipole_gamma(n));
    }
    if (o.format == "json") {
        json result = json::array();
        for (const auto& g : rows) result.push_back(to_json(g));
        emit_record("table", json{{"family", o.family}, {"max_n", o.max_n}},
                    json{{"rows", result}});
    } else if (o.format == "csv") {
        for (int n = 1; n <= o.max_n; ++n) {
            std::cout << n << "," << csv_coeffs(rows[n - 1]) << "\n";
        }
    } else {
        for (int n = 1; n <= o.max_n; ++n) {
            std::cout << n << "\t" << rows[n - 1].pretty() << "\n";
        }
    }
    return 0;
}

struct VerifyLine {
    std::string label;
    bool ok = false;
    std::string detail;
};

int emit_verify(const Options& o, const std::string& mode, json inputs,
                const std::vector<VerifyLine>& lines) {
    bool all = true;
    for (const auto& line : lines) all = all && line.ok;
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& line : lines) {
            rows.push_back(json{{"case", line.label}, {"ok", line.ok}, {"detail", line.detail}});
        }
        emit_record("verify", std::move(inputs),
                    json{{"mode", mode}, {"pass", all}, {"cases", rows}});
    } else if (o.format == "csv") {
        for (const auto& line : lines) {
            std::cout << line.label << "," << (line.ok ? "ok" : "mismatch") << "\n";
        }
    } else {
        for (const auto& line : lines) {
            std::cout << line.label << (line.ok ? " ok" : " MISMATCH " + line.detail) << "\n";
        }
        std::cout << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_verify(const Options& o) {
    const OracleOptions oracle = oracle_options(o);
    std::vector<VerifyLine> lines;

    if (o.mode == "factorizations") {
        for (const Partition& lambda : lambda_selection(o)) {
            const GenusHistogram hist = enumerate_factorizations(o.m, o.n, lambda, oracle);
            const GenusPolynomial character =
                gamma_constellation(o.m, o.n, lambda, PRoute::character);
            const GenusPolynomial shifted =
                gamma_constellation(o.m, o.n, lambda, PRoute::shift_operator);
            const bool ok = hist.matches(character) && character.coeffs == shifted.coeffs;
            lines.push_back({"lambda=" + lambda.to_string(), ok,
                             "oracle=" + hist.pretty() + " formula=" + character.pretty()});
        }
        return emit_verify(o, o.mode,
                           json{{"m", o.m}, {"n", o.n}, {"all_lambda", o.all_lambda}}, lines);
    }

    if (o.mode == "embeddings") {
        json inputs;
        if (!o.input.empty()) {
            const EulerianDigraph d = load_digraph(o.input);
            const GenusHistogram hist = enumerate_embeddings(d, oracle);
            const bool total_ok = hist.total() == d.total_embeddings();
            lines.push_back({"total-count", total_ok, "oracle=" + hist.pretty()});
            // Compare against the fan formula when some handle qualifies.
            for (int v = 0; v < d.vertex_count(); ++v) {
                try {
                    const GenusPolynomial gamma = fan_gamma(d, v);
                    lines.push_back({"fan-handle=" + std::to_string(v), hist.matches(gamma),
                                     "oracle=" + hist.pretty() + " formula=" + gamma.pretty()});
                    break;
                } catch (const not_fan_error&) {
                    continue;
                }
            }
            inputs = json{{"input", o.input}};
        } else {
            const Partition lambda = Partition::parse(o.lambda_text);
            const EulerianDigraph d = EulerianDigraph::one_black(lambda);
            const GenusHistogram hist = enumerate_embeddings(d, oracle);
            const GenusPolynomial gamma = gamma_digraph(o.n, lambda);
            lines.push_back({"total-count", hist.total() == d.total_embeddings(),
                             "oracle-total=" + hist.total().str()});
            lines.push_back({"lambda=" + lambda.to_string(), hist.matches(gamma),
                             "oracle=" + hist.pretty() + " formula=" + gamma.pretty()});
            inputs = json{{"n", o.n}, {"lambda", o.lambda_text}};
        }
        return emit_verify(o, o.mode, std::move(inputs), lines);
    }

    if (o.mode == "frobenius") {
        if (o.k < 1) throw std::invalid_argument("--k must be at least 1");
        const auto mus = partitions_of(o.n);
        std::vector<Partition> tuple(o.k, mus.front());
        std::vector<std::size_t> idx(o.k, 0);
        for (;;) {
            for (int i = 0; i < o.k; ++i) tuple[i] = mus[idx[i]];
            const Int formula = frobenius_count(tuple);
            const Int brute = count_identity_products(tuple, oracle);
            std::string label;
            for (int i = 0; i < o.k; ++i) label += (i ? ";" : "") + tuple[i].to_string();
            lines.push_back({label, formula == brute,
                             "formula=" + formula.str() + " brute=" + brute.str()});
            int pos = o.k - 1;
            while (pos >= 0 && ++idx[pos] == mus.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
        return emit_verify(o, o.mode, json{{"n", o.n}, {"k", o.k}}, lines);
    }

    throw std::invalid_argument("verify mode must be factorizations, embeddings or frobenius");
}

int cmd_check(const Options& o) {
    check_cap(o, o.n);
    bool all = true;
    std::vector<json> rows;
    std::ostringstream text;
    for (const Partition& lambda : lambda_selection(o)) {
        const GenusPolynomial gamma = gamma_constellation(o.m, o.n, lambda);
        const RealRootCertificate cert = certify_real_rooted_nonpositive(gamma);
        const LogConcavityReport lc = is_log_concave(gamma.coeffs);
        const bool ok =
            cert.real_rooted && cert.all_roots_nonpositive && lc.verdict == LogConcavity::yes;
        all = all && ok;
        rows.push_back(json{{"lambda", lambda.to_string()},
                            {"real_rooted", cert.real_rooted},
                            {"nonpositive_roots", cert.all_roots_nonpositive},
                            {"log_concave", lc.verdict == LogConcavity::yes}});
        text << "lambda=" << lambda.to_string() << " real_rooted=" << (cert.real_rooted ? "yes" : "no")
             << " nonpositive_roots=" << (cert.all_roots_nonpositive ? "yes" : "no")
             << " log_concave=" << (lc.verdict == LogConcavity::yes ? "yes" : "no") << "\n";
    }
    const json inputs{{"m", o.m}, {"n", o.n}, {"all_lambda", o.all_lambda}};
    if (o.format == "json") {
        emit_record("check", inputs, json{{"pass", all}, {"cases", rows}});
    } else if (o.format == "csv") {
        for (const auto& row : rows) {
            std::cout << row["lambda"].get<std::string>() << ","
                      << (row["real_rooted"].get<bool>() ? "yes" : "no") << ","
                      << (row["nonpositive_roots"].get<bool>() ? "yes" : "no") << ","
                      << (row["log_concave"].get<bool>() ? "yes" : "no") << "\n";
        }
    } else {
        std::cout << text.str() << (all ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_moments(const Options& o) {
    check_cap(o, o.n);
    const Partition lambda = Partition::parse(o.lambda_text);
    const MomentReport rep = moment_report(o.m, o.n, lambda, o.digits);
    if (o.format == "json") {
        emit_record("moments",
                    json{{"m", o.m}, {"n", o.n}, {"lambda", o.lambda_text}, {"digits", o.digits}},
                    to_json(rep));
    } else if (o.format == "csv") {
        std::cout << "E_X," << rat_to_string(rep.mean_x) << "\n"
                  << "Var_X," << rat_to_string(rep.var_x) << "\n"
                  << "E_g," << rat_to_string(rep.mean_genus) << "\n"
                  << "Var_g," << rat_to_string(rep.var_genus) << "\n"
                  << "mu," << rep.mu.str(o.digits) << "\n"
                  << "sigma2," << rep.sigma_sq.str(o.digits) << "\n";
    } else {
        std::cout << "E[X] = " << rat_to_string(rep.mean_x) << "\n"
                  << "Var[X] = " << rat_to_string(rep.var_x) << "\n"
                  << "E[g] = " << rat_to_string(rep.mean_genus) << "\n"
                  << "Var[g] = " << rat_to_string(rep.var_genus) << "\n"
                  << "mu = " << rep.mu.str(o.digits) << "\n"
                  << "sigma2 = " << rep.sigma_sq.str(o.digits) << "\n";
    }
    return 0;
}

int cmd_char(const Options& o) {
    const Partition theta = Partition::parse(o.theta_text);
    const Partition mu = Partition::parse(o.mu_text);
    check_cap(o, theta.weight());
    const Int chi = mn_character(theta, mu);
    if (o.format == "json") {
        emit_record("char", json{{"theta", o.theta_text}, {"mu", o.mu_text}},
                    json{{"value", chi.str()}});
    } else {
        std::cout << chi.str() << "\n";
    }
    return 0;
}

int cmd_fan(const Options& o) {
    const EulerianDigraph d = load_digraph(o.input);
    const GenusPolynomial gamma = fan_gamma(d, o.handle);
    if (o.format == "json") {
        emit_record("fan", json{{"input", o.input}, {"handle", o.handle}}, to_json(gamma));
    } else if (o.format == "csv") {
        std::cout << csv_coeffs(gamma) << "\n";
    } else {
        std::cout << gamma.pretty() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus distributions of face-oriented embeddings of Eulerian digraphs"};
    app.require_subcommand(1);
    Options o;

    CLI::App* genus = app.add_subcommand("genus", "genus polynomial of one object");
    genus->add_option("--family", o.family, "constellation|digraph|bouquet|dipole")->required();
    genus->add_option("--m", o.m, "number of free factors plus one (constellations)");
    genus->add_option("--n", o.n, "weight / half-degree")->required();
    genus->add_option("--lambda", o.lambda_text, "partition, e.g. 3,2,1");
    genus->add_option("--route", o.route, "evaluation route")
        ->check(CLI::IsMember({"character", "operator"}));
    add_format(genus, o);
    add_cap(genus, o);
    add_force(genus, o);

    CLI::App* table = app.add_subcommand("table", "genus polynomials for n = 1..max-n");
    table->add_option("family", o.family, "bouquet|dipole")->required();
    table->add_option("--max-n", o.max_n, "last row")->required();
    add_format(table, o);
    add_cap(table, o);
    add_force(table, o);
    table->add_option("--threads", o.threads)->envname("GENUSDIST_THREADS");

    CLI::App* verify = app.add_subcommand("verify", "formula against exhaustive oracle");
    verify->add_option("mode", o.mode, "factorizations|embeddings|frobenius")->required();
    verify->add_option("--m", o.m);
    verify->add_option("--n", o.n);
    verify->add_option("--k", o.k, "number of classes (frobenius)");
    verify->add_option("--lambda", o.lambda_text);
    verify->add_flag("--all-lambda", o.all_lambda);
    verify->add_option("--input", o.input, "digraph JSON file (embeddings)");
    add_format(verify, o);
    add_threads(verify, o);
    add_budget(verify, o);
    add_force(verify, o);

    CLI::App* check = app.add_subcommand("check", "real-rootedness / log-concavity certificates");
    check->add_option("--m", o.m)->required();
    check->add_option("--n", o.n)->required();
    check->add_option("--lambda", o.lambda_text);
    check->add_flag("--all-lambda", o.all_lambda);
    add_format(check, o);
    add_cap(check, o);
    add_force(check, o);

    CLI::App* moments = app.add_subcommand("moments", "exact and asymptotic genus moments");
    moments->add_option("--m", o.m)->required();
    moments->add_option("--n", o.n)->required();
    moments->add_option("--lambda", o.lambda_text)->required();
    moments->add_option("--digits", o.digits, "printed decimal digits")->capture_default_str();
    add_format(moments, o);
    add_cap(moments, o);
    add_force(moments, o);

    CLI::App* chr = app.add_subcommand("char", "irreducible character value chi^theta_mu");
    chr->add_option("--theta", o.theta_text)->required();
    chr->add_option("--mu", o.mu_text)->required();
    add_format(chr, o);
    add_cap(chr, o);
    add_force(chr, o);

    CLI::App* fan = app.add_subcommand("fan", "genus polynomial of an Eulerian fan");
    fan->add_option("--input", o.input, "digraph JSON file")->required();
    fan->add_option("--handle", o.handle, "handle vertex id")->required();
    add_format(fan, o);
    add_cap(fan, o);
    add_force(fan, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(genus)) return cmd_genus(o);
        if (app.got_subcommand(table)) return cmd_table(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        if (app.got_subcommand(check)) return cmd_check(o);
        if (app.got_subcommand(moments)) return cmd_moments(o);
        if (app.got_subcommand(chr)) return cmd_char(o);
        if (app.got_subcommand(fan)) return cmd_fan(o);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const not_fan_error& e) {
        std::cerr << "error: not a fan: " << e.what() << "\n";
        return 5;
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
