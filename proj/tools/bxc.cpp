// Command-line front end. Every subcommand prints JSON Lines (one record per
// line, keys sorted, numbers with 17 significant digits) or CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "besselcross/bounds.hpp"
#include "besselcross/config.hpp"
#include "besselcross/errors.hpp"
#include "besselcross/hyperbolicity.hpp"
#include "besselcross/radii.hpp"
#include "besselcross/rayleigh.hpp"
#include "besselcross/special_fn.hpp"
#include "besselcross/thresholds.hpp"
#include "besselcross/verify.hpp"
#include "besselcross/zero_finder.hpp"

using nlohmann::json;

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

std::string number(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// nlohmann objects are ordered maps, so keys come out sorted; numbers are
// written by hand to fix the digit count.
std::string dump(const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            std::string s = "{";
            bool first = true;
            for (const auto& [k, v] : j.items()) {
                if (!first) s += ",";
                first = false;
                s += json(k).dump() + ":" + dump(v);
            }
            return s + "}";
        }
        case json::value_t::array: {
            std::string s = "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) s += ",";
                s += dump(j[i]);
            }
            return s + "]";
        }
        case json::value_t::number_float: return number(j.get<double>());
        default: return j.dump();
    }
}

std::string csv_cell(const json& v) {
    if (v.is_number_float()) return number(v.get<double>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
        return s;
    }
    return v.dump();
}

class Printer {
public:
    explicit Printer(bool csv) : csv_(csv) {}

    void record(const std::string& command, const json& inputs, const json& outputs,
                const std::vector<std::string>& provenance) {
        json r;
        r["command"] = command;
        r["inputs"] = inputs;
        r["outputs"] = outputs;
        r["provenance"] = provenance;
        if (!csv_) {
            std::cout << dump(r) << "\n";
            return;
        }
        std::vector<std::string> keys{"command"};
        std::vector<std::string> cells{command};
        for (const auto& [k, v] : inputs.items()) {
            keys.push_back(k);
            cells.push_back(csv_cell(v));
        }
        for (const auto& [k, v] : outputs.items()) {
            keys.push_back(k);
            cells.push_back(csv_cell(v));
        }
        if (!header_) {
            print_row(keys);
            header_ = true;
        }
        print_row(cells);
    }

private:
    static void print_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << cells[i];
        std::cout << "\n";
    }
    bool csv_;
    bool header_ = false;
};

json bracket_json(const bxc::Bracket& b) { return json::array({b.lo, b.hi}); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bessel cross-product and product toolkit: series, zeros, Rayleigh sums, radii, bounds, "
                 "thresholds and hyperbolicity certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string config_path;
    std::string seed = "none";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--config", config_path, "Config file of key = value lines")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Accepted for interface uniformity; the tool is deterministic")
        ->check(CLI::IsMember({"none"}));

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one family at z");
    std::string family;
    double nu = 0, z = 0, alpha = 0;
    eval_cmd->add_option("--family", family, "PHI, PI, PHI_D1, ..., F, G, H, U, V, W, ROT_*")->required();
    eval_cmd->add_option("--nu", nu, "Order")->required();
    eval_cmd->add_option("--z", z, "Argument")->required();

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "Positive zeros of one family");
    int n = 0;
    zeros_cmd->add_option("--family", family, "J, GAMMA, GAMMA_PRIME, T, ZETA, XI, THETA_CAP, OMEGA, CONVEX_*")
        ->required();
    zeros_cmd->add_option("--nu", nu, "Order")->required();
    zeros_cmd->add_option("--n", n, "Number of zeros")->required();

    // rayleigh
    auto* ray_cmd = app.add_subcommand("rayleigh", "Euler-Rayleigh power sums");
    int k = 1;
    int terms = 0;
    std::string method = "closed";
    ray_cmd->add_option("--family", family, "TAU, SIGMA, RHO, ETA, VARRHO, Q, KAPPA, ALPHA_H, EPSILON, IOTA, J4, GAMMA4")
        ->required();
    ray_cmd->add_option("--nu", nu, "Order")->required();
    ray_cmd->add_option("--k", k, "Power index")->required();
    ray_cmd->add_option("--method", method, "closed, newton or direct")
        ->check(CLI::IsMember({"closed", "newton", "direct"}));
    ray_cmd->add_option("--terms", terms, "Explicit zeros for the direct method (default from config)");

    // radii
    auto* radii_cmd = app.add_subcommand("radii", "Radius of starlikeness or convexity of order alpha");
    std::string kind, mode, branch = "auto";
    radii_cmd->add_option("--kind", kind, "f, g, h, u, v or w")->required();
    radii_cmd->add_option("--mode", mode, "starlike or convex")->required();
    radii_cmd->add_option("--nu", nu, "Order")->required();
    radii_cmd->add_option("--alpha", alpha, "Order of starlikeness or convexity")->required();
    radii_cmd->add_option("--branch", branch, "auto, principal or rotated")
        ->check(CLI::IsMember({"auto", "principal", "rotated"}));

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Euler-Rayleigh bound chain and sandwich verdict");
    bounds_cmd->add_option("--kind", kind, "f, g, h, u, v or w")->required();
    bounds_cmd->add_option("--mode", mode, "starlike or convex")->required();
    bounds_cmd->add_option("--nu", nu, "Order")->required();

    // thresholds
    auto* thr_cmd = app.add_subcommand("thresholds", "Critical orders nu for the unit disk");
    bool curve = false, special = false;
    double nu_min = -0.99, nu_max = 2.0, nu_step = 0.01;
    thr_cmd->add_option("--kind", kind, "f, g, h, u, v or w");
    thr_cmd->add_option("--mode", mode, "starlike or convex");
    thr_cmd->add_option("--alpha", alpha, "Order of starlikeness or convexity");
    thr_cmd->add_flag("--curve", curve, "Emit the left-hand sides of every equation over a nu grid");
    thr_cmd->add_option("--nu-min", nu_min, "Curve grid start");
    thr_cmd->add_option("--nu-max", nu_max, "Curve grid end");
    thr_cmd->add_option("--nu-step", nu_step, "Curve grid step")->check(CLI::PositiveNumber);
    thr_cmd->add_flag("--special", special, "Report nu_circ, nu_star and underline nu");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "Exact hyperbolicity certificate of Jensen polynomials");
    std::string nu_text;
    int nmax = 32;
    cert_cmd->add_option("--family", family, "phi or pi")->required();
    cert_cmd->add_option("--nu", nu_text, "Rational order P/Q")->required();
    cert_cmd->add_option("--nmax", nmax, "Largest degree (at most 64)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "all, interlacing, sandwich, sums or thresholds")
        ->check(CLI::IsMember({"all", "interlacing", "sandwich", "sums", "thresholds"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        bxc::Config cfg = config_path.empty() ? bxc::Config{} : bxc::Config::from_file(config_path);
        Printer out(format == "csv");

        if (*eval_cmd) {
            const bxc::Family f = bxc::family_from_string(family);
            const bxc::EvalResult r = bxc::eval({f, nu}, z, cfg);
            out.record("eval", {{"family", std::string(bxc::to_string(f))}, {"nu", nu}, {"z", z}},
                       {{"value", r.value}, {"truncation_index", r.truncation_index}, {"est_tail", r.est_tail}},
                       {"ascending series"});
            return 0;
        }
        if (*zeros_cmd) {
            const bxc::ZeroTag tag = bxc::zero_tag_from_string(family);
            const bxc::ZeroTable t = bxc::zeros({tag, nu}, n, cfg);
            for (int i = 0; i < n; ++i) {
                out.record("zeros", {{"family", std::string(bxc::to_string(tag))}, {"nu", nu}, {"index", i + 1}},
                           {{"zero", t.zeros[i]},
                            {"residual", t.residuals[i]},
                            {"scale", t.scales[i]},
                            {"bracket", bracket_json(t.brackets[i])}},
                           {"interlacing bracket", "safeguarded Newton"});
            }
            return 0;
        }
        if (*ray_cmd) {
            const bxc::SumFamily f = bxc::sum_family_from_string(family);
            json in{{"family", std::string(bxc::to_string(f))}, {"nu", nu}, {"k", k}, {"method", method}};
            if (method == "closed") {
                out.record("rayleigh", in, {{"value", bxc::closed_form_sum(f, k, nu)}}, {"closed form"});
            } else if (method == "newton") {
                bxc::check_admissible(f, nu);
                const bxc::PowerSums p = bxc::newton_sums(f, nu, k);
                out.record("rayleigh", in, {{"value", p.values[k - 1]}}, {"series coefficients", "Newton identities"});
            } else {
                const int m = terms > 0 ? terms : cfg.sum_terms;
                in["terms"] = m;
                const bxc::DirectSum d = bxc::direct_sum(f, nu, k, m, cfg);
                out.record("rayleigh", in,
                           {{"value", d.value},
                            {"tail_bound", d.tail_bound},
                            {"partial", d.partial},
                            {"tail", json::array({d.tail.lo, d.tail.hi})},
                            {"rigorous", d.rigorous}},
                           {"computed zeros", "integral tail enclosure"});
            }
            return 0;
        }
        if (*radii_cmd) {
            const bxc::Kind kd = bxc::kind_from_string(kind);
            const bxc::Mode md = bxc::mode_from_string(mode);
            bxc::RadiusResult r;
            if (md == bxc::Mode::CONVEX) {
                if (branch == "rotated") throw bxc::DomainError("the rotated branch exists only for starlikeness");
                r = bxc::radius_convex({kd, md, alpha, nu}, cfg);
            } else {
                const bool rotated =
                    branch == "rotated" || (branch == "auto" && bxc::in_rotated_window(kd, nu));
                r = rotated ? bxc::radius_starlike_rotated(kd, nu, alpha, cfg)
                            : bxc::radius_starlike({kd, md, alpha, nu}, cfg);
            }
            out.record("radii",
                       {{"kind", std::string(bxc::to_string(kd))},
                        {"mode", std::string(bxc::to_string(md))},
                        {"nu", nu},
                        {"alpha", alpha},
                        {"branch_request", branch}},
                       {{"radius", r.radius},
                        {"equation_residual", r.equation_residual},
                        {"residual_scale", r.residual_scale},
                        {"bracket", bracket_json(r.bracket)},
                        {"branch", std::string(bxc::to_string(r.branch))},
                        {"pole", r.pole}},
                       {"ascending series", "bisection"});
            return 0;
        }
        if (*bounds_cmd) {
            const bxc::Kind kd = bxc::kind_from_string(kind);
            const bxc::Mode md = bxc::mode_from_string(mode);
            const bxc::BoundChain c =
                md == bxc::Mode::STARLIKE ? bxc::starlike_chain(kd, nu, cfg) : bxc::convex_chain(kd, nu, cfg);
            out.record("bounds",
                       {{"kind", std::string(bxc::to_string(kd))}, {"mode", std::string(bxc::to_string(md))}, {"nu", nu}},
                       {{"crude_upper", c.crude_upper},
                        {"lowers", c.lowers},
                        {"uppers", c.uppers},
                        {"radius", c.radius},
                        {"verdict", c.verdict},
                        {"ill_conditioned", c.ill_conditioned},
                        {"template_deviation", c.max_template_deviation}},
                       {"closed-form power sums", "Euler-Rayleigh inequalities"});
            return c.verdict ? 0 : kExitVerification;
        }
        if (*thr_cmd) {
            const bxc::Mode md = mode.empty() ? bxc::Mode::STARLIKE : bxc::mode_from_string(mode);
            if (special) {
                const bxc::SpecialRoots s = bxc::special_roots(cfg);
                const bxc::ThresholdResult u = bxc::underline_nu(cfg);
                out.record("thresholds", {{"special", true}},
                           {{"nu_circ", s.nu_circ}, {"nu_star", s.nu_star}, {"underline_nu", u.nu}},
                           {"ascending series", "bisection in nu"});
                return 0;
            }
            if (curve) {
                if (!(nu_max > nu_min)) throw bxc::DomainError("--nu-max must exceed --nu-min");
                std::vector<bxc::Kind> kinds;
                if (!kind.empty()) {
                    kinds.push_back(bxc::kind_from_string(kind));
                } else if (md == bxc::Mode::STARLIKE) {
                    kinds = {bxc::Kind::F, bxc::Kind::G, bxc::Kind::H, bxc::Kind::U, bxc::Kind::V, bxc::Kind::W};
                } else {
                    kinds = {bxc::Kind::G, bxc::Kind::H, bxc::Kind::V, bxc::Kind::W};
                }
                const int steps = static_cast<int>(std::floor((nu_max - nu_min) / nu_step + 1e-9));
                for (int i = 0; i <= steps; ++i) {
                    const double x = nu_min + i * nu_step;
                    json o;
                    for (bxc::Kind kd : kinds) {
                        o[std::string(bxc::to_string(kd))] = md == bxc::Mode::STARLIKE
                                                                 ? bxc::starlike_lhs(kd, x, alpha, cfg)
                                                                 : bxc::convex_lhs(kd, x, alpha, cfg);
                    }
                    out.record("thresholds",
                               {{"mode", std::string(bxc::to_string(md))}, {"alpha", alpha}, {"nu", x}}, o,
                               {"ascending series at 1"});
                }
                return 0;
            }
            if (kind.empty()) throw CLI::RequiredError("--kind");
            const bxc::Kind kd = bxc::kind_from_string(kind);
            const bxc::ThresholdResult t = md == bxc::Mode::STARLIKE
                                               ? bxc::starlike_threshold({kd, md, alpha}, cfg)
                                               : bxc::convex_threshold({kd, md, alpha}, cfg);
            out.record("thresholds",
                       {{"kind", std::string(bxc::to_string(kd))}, {"mode", std::string(bxc::to_string(md))},
                        {"alpha", alpha}},
                       {{"nu", t.nu}, {"bracket", bracket_json(t.bracket)}, {"sign_changes", t.sign_changes}},
                       {"ascending series at 1", "scan and bisection in nu"});
            return 0;
        }
        if (*cert_cmd) {
            const bxc::PolyFamily f = bxc::poly_family_from_string(family);
            const mpq_class q = bxc::parse_rational(nu_text);
            const bxc::HyperbolicityReport r = bxc::certify_hyperbolic(f, q, nmax);
            int good = 0;
            for (int i = 1; i <= nmax; ++i) good += r.positive_root_counts[i] == i;
            json in{{"family", std::string(bxc::to_string(f))}, {"nu", q.get_str()}, {"nmax", nmax}};
            out.record("certify", in,
                       {{"summary", std::to_string(good) + "/" + std::to_string(nmax) + " hyperbolic"},
                        {"positive_root_counts", r.positive_root_counts},
                        {"failures", r.failures},
                        {"hypergeometric_match", r.hypergeometric_match},
                        {"certified", r.certified}},
                       {"exact rational arithmetic", "Sturm sequences"});
            return r.certified ? 0 : kExitVerification;
        }
        if (*verify_cmd) {
            const bxc::Suite s = bxc::suite_from_string(suite);
            const auto checks = bxc::run_suite(s, cfg);
            int failed = 0;
            for (const auto& c : checks) {
                failed += !c.passed;
                out.record("verify", {{"suite", c.suite}, {"check", c.name}},
                           {{"passed", c.passed}, {"detail", c.detail}}, {"invariant suite"});
            }
            std::cerr << checks.size() - failed << "/" << checks.size() << " checks passed\n";
            return failed == 0 ? 0 : kExitVerification;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bxc::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const bxc::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
