// Command-line front end: certificate verification, norm and dual-norm
// queries, admissibility classification, grid sweeps and counterexample
// searches. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "hardy/binomial.hpp"
#include "hardy/certificates.hpp"
#include "hardy/dual.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/norms.hpp"
#include "hardy/region.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

double default_tolerance() {
    if (const char* env = std::getenv("HARDY_TOL")) {
        const double v = std::atof(env);
        if (v > 0) return v;
        std::cerr << "warning: ignoring non-positive HARDY_TOL\n";
    }
    return 1e-10;
}

std::complex<double> parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0, im = 0;
    char comma = 0;
    if (!(is >> re)) throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) {
            throw CLI::ValidationError("expected 're,im', got '" + text + "'");
        }
    }
    std::string rest;
    if (is >> rest) throw CLI::ValidationError("trailing input in complex number '" + text + "'");
    return {re, im};
}

struct NamedCheck {
    std::string name;
    bool passed;
    std::string summary;
    json details;
};

// The full verification battery behind `hardy verify`: the exact
// certificates plus the floating-point identity and bound checks.
std::vector<NamedCheck> run_verification(const hardy::RatPoly* f_override) {
    std::vector<NamedCheck> checks;
    const auto add = [&checks](std::string name, bool ok, std::string summary,
                               json details = json::object()) {
        checks.push_back({std::move(name), ok, std::move(summary), std::move(details)});
    };

    for (const auto& rep : hardy::run_all_certificates(f_override)) {
        std::string summary;
        if (rep.name == "F_construction") summary = "threshold polynomial coefficients and boundary values";
        else if (rep.name == "sigma_identity") summary = "seven-term curvature identity for the truncated series";
        else if (rep.name == "c_threshold") summary = "threshold ratio reduces to 5/768 in Q[1/pi]";
        else if (rep.name == "R1") summary = "degree-46 certificate with positive coefficients";
        else if (rep.name == "R2") summary = "degree-48 certificate with sign-split coefficients";
        add("certificate." + rep.name, rep.passed, summary, rep.details);
    }

    {
        bool ok = true;
        json d;
        for (const double p : {1.0, 2.0, 4.0}) {
            const auto rep = hardy::check_central_binomial(p);
            ok = ok && rep.max_deviation < 1e-8;
            d["p=" + std::to_string(p)] = rep.max_deviation;
        }
        add("norm.central_binomial_identities", ok,
            "four routes to ||z1+z2||_p^p agree within 1e-8", d);
    }
    {
        const double got = hardy::hp_norm({1.0, 1.0}, 1).value;
        add("norm.h1_endpoint", std::fabs(got - 4 / M_PI) < 1e-9,
            "||z1+z2||_1 = 4/pi", {{"value", got}});
    }
    {
        bool ok = true;
        int done = 0;
        for (long den = 2; den <= 11 && ok; ++den) {
            for (long num = 0; num <= den && done < 10; ++num, ++done) {
                ok = ok && hardy::verify_witness_identity(hardy::Rational(num, den));
            }
        }
        add("dual.witness_identity", ok,
            "Riesz projection of |g|^2 g matches (1+2x) phi_y exactly");
    }
    {
        const double got = hardy::h4_dual_norm(1.0).value;
        const double expect = std::pow(6.0, 0.75) / 3;
        add("dual.h4_endpoint", std::fabs(got - expect) < 1e-12,
            "||z1+z2||_{(H4)*} = 6^{3/4}/3", {{"value", got}});
    }
    {
        const double got = hardy::hq_dual_norm(1, 1).value;
        add("dual.h1_endpoint", std::fabs(got - M_PI / 2) < 1e-7,
            "||z1+z2||_{(H1)*} = pi/2", {{"value", got}});
    }
    {
        const double bound = M_PI / (2 * std::pow(6.0, 0.25));
        bool ok = true;
        double max_ratio = 0;
        for (int i = 0; i <= 40; ++i) {
            const double r = hardy::ratio_curve(i / 40.0);
            ok = ok && r >= 1 - 1e-9 && r <= bound + 1e-9;
            max_ratio = std::max(max_ratio, r);
        }
        ok = ok && std::fabs(max_ratio - bound) < 1e-6;
        add("dual.ratio_bounds", ok, "dual/quartic ratio lies in [1, pi/(2*6^{1/4})]",
            {{"max_ratio", max_ratio}, {"bound", bound}});
    }
    {
        const auto pass = hardy::monotone_F_check(hardy::Rational(5, 768), 1000);
        const auto below = hardy::monotone_F_check(
            hardy::Rational(5, 768) - hardy::Rational(1, 10000), 1000);
        const auto weak = hardy::monotone_numerator_check(hardy::build_Ftilde(), 1000);
        add("dual.monotone_threshold",
            pass.increasing && !below.increasing && !weak.increasing,
            "ratio is monotone exactly at the 5/768 threshold",
            {{"at_threshold", pass.increasing},
             {"below_threshold", below.increasing},
             {"weaker_majorant", weak.increasing}});
    }
    {
        const auto p4 = hardy::sharpness_search(4.0);
        const auto p45 = hardy::sharpness_search(4.5);
        const auto p5 = hardy::sharpness_search(5.0);
        add("region.sharpness", !p4 && p45 && p5,
            "counterexample norms exceed 1 exactly when p > 4",
            {{"found_p4", p4.has_value()},
             {"found_p4.5", p45.has_value()},
             {"found_p5", p5.has_value()}});
    }
    {
        const auto inside = hardy::extremal_map_disc_scan(2 / M_PI);
        const auto outside = hardy::extremal_map_disc_scan(2 / M_PI + 0.01);
        add("region.extremal_map", inside.max_abs <= 1.0 && outside.max_abs > 1.0,
            "c*Arg((i-z)/(i+z)) stays in the disc iff |c| <= 2/pi",
            {{"max_at_2_over_pi", inside.max_abs}, {"max_above", outside.max_abs}});
    }
    {
        bool ok = true;
        for (int i = 0; i <= 15 && ok; ++i) {
            for (int j = 0; j <= 15 && ok; ++j) {
                const double a = 0.8 * i / 15, b = 0.8 * j / 15;
                if (a == 0 && b == 0) continue;
                const auto cls = hardy::classify(a, b, false);
                const double scale = std::max(a, b);
                const double dual =
                    scale * hardy::hq_dual_norm(1.0, std::min(a, b) / scale).value;
                if (cls.sufficient_margin <= 0 && dual > 1 + 1e-7) ok = false;
                if (dual <= 1.0 && cls.necessary_margin > 1e-7) ok = false;
            }
        }
        add("region.criteria_ordering", ok,
            "sufficient => exact-admissible => necessary on a 16x16 grid");
    }
    return checks;
}

int cmd_verify(bool as_json, const std::string& out_path, bool corrupt_f) {
    hardy::RatPoly corrupted;
    const hardy::RatPoly* f_override = nullptr;
    if (corrupt_f) {
        corrupted = hardy::build_F();
        corrupted += hardy::RatPoly::monomial(hardy::Rational(1, 1000000), 8);
        f_override = &corrupted;
    }

    const auto checks = run_verification(f_override);
    bool all = true;
    std::string first_failure;
    for (const auto& c : checks) {
        if (!c.passed && first_failure.empty()) first_failure = c.name;
        all = all && c.passed;
    }

    std::ostringstream os;
    if (as_json) {
        json j;
        j["all_passed"] = all;
        j["backend"] = hardy::kernels::active_backend();
        j["checks"] = json::array();
        for (const auto& c : checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"passed", c.passed},
                                   {"summary", c.summary},
                                   {"details", c.details}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << std::left;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS  " : "FAIL  ") << std::setw(36) << c.name << " "
               << c.summary << "\n";
        }
        os << (all ? "all checks passed"
                   : "verification FAILED, first failing check: " + first_failure)
           << "\n";
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        f << os.str();
    } else {
        std::cout << os.str();
    }
    return all ? 0 : 1;
}

int cmd_classify(std::complex<double> alpha, std::complex<double> beta, bool resolve,
                 double tol, bool as_json) {
    const auto c = hardy::classify(alpha, beta, resolve, tol);
    if (as_json) {
        json j{{"verdict", hardy::to_string(c.verdict)},
               {"necessary_margin", c.necessary_margin},
               {"sufficient_margin", c.sufficient_margin},
               {"borderline", c.borderline}};
        if (c.dual_norm) j["dual_norm"] = *c.dual_norm;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict:           " << hardy::to_string(c.verdict)
                  << (c.borderline ? " (borderline)" : "") << "\n"
                  << "necessary margin:  " << std::setprecision(12) << c.necessary_margin << "\n"
                  << "sufficient margin: " << c.sufficient_margin << "\n";
        if (c.dual_norm) std::cout << "dual norm:         " << *c.dual_norm << "\n";
    }
    return 0;
}

int cmd_norm(double p, std::complex<double> alpha, std::complex<double> beta,
             const std::string& method, double tol, bool as_json) {
    hardy::NormResult r{};
    if (method == "auto") {
        r = hardy::hp_norm({alpha, beta}, p, tol);
    } else {
        const auto canon = hardy::canonicalize({alpha, beta});
        r = method == "series" ? hardy::norm_series(p, canon.y, tol)
                               : hardy::norm_quadrature(p, canon.y, 16, tol);
        r.value *= canon.scale;
        r.error_bound *= canon.scale;
    }
    if (as_json) {
        std::cout << json{{"p", p},
                          {"value", r.value},
                          {"method", hardy::to_string(r.method)},
                          {"error_bound", r.error_bound}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << std::setprecision(15) << r.value << "  (method " << hardy::to_string(r.method)
                  << ", error bound " << std::setprecision(3) << r.error_bound << ")\n";
    }
    return 0;
}

int cmd_dual(double q, double y, double tol, bool as_json) {
    const auto w = q == 4.0 ? hardy::h4_dual_norm(y) : hardy::hq_dual_norm(q, y, tol);
    if (as_json) {
        std::cout << json{{"q", q},
                          {"y", y},
                          {"value", w.value},
                          {"witness_t", w.t},
                          {"error_bound", w.error_bound}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << std::setprecision(15) << w.value << "  (witness g = z1 + " << w.t
                  << "*z2, error bound " << std::setprecision(3) << w.error_bound << ")\n";
    }
    return 0;
}

int cmd_counterexample(double p, bool as_json) {
    const auto r = hardy::sharpness_search(p);
    if (as_json) {
        json j{{"p", p}, {"found", r.has_value()}};
        if (r) {
            j["eps"] = r->eps;
            j["norm"] = r->norm;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (r) {
        std::cout << "eps = " << r->eps << " gives ||phi||_p = " << std::setprecision(12)
                  << r->norm << " > 1\n";
    } else {
        std::cout << "no eps in (0, 0.5] pushes the norm above 1 + 1e-6 (expected for p <= 4)\n";
    }
    return 0;
}

int cmd_sweep(const std::string& what, int n, const std::string& out_path) {
    std::ostringstream os;
    os << std::setprecision(15);
    if (what == "ratio") {
        os << "y,dual_h1,h4_norm,ratio\n";
        for (int i = 0; i < n; ++i) {
            const double y = static_cast<double>(i) / (n - 1);
            const double dual = hardy::hq_dual_norm(1, y).value;
            const double h4 = hardy::hp_norm({1.0, y}, 4).value;
            os << y << "," << dual << "," << h4 << "," << dual / h4 << "\n";
        }
    } else if (what == "region") {
        os << "alpha,beta,verdict,necessary_margin,sufficient_margin,dual_norm\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double a = 0.8 * i / (n - 1);
                const double b = 0.8 * j / (n - 1);
                const auto c = hardy::classify(a, b, true);
                os << a << "," << b << "," << hardy::to_string(c.verdict) << ","
                   << c.necessary_margin << "," << c.sufficient_margin << ",";
                if (c.dual_norm) os << *c.dual_norm;
                os << "\n";
            }
        }
    } else { // question
        os << "q,y,ratio,conjectured_bound\n";
        for (const double q : {1.0, 1.25, 1.5, 1.75, 2.0}) {
            const double bound = 2 * std::pow(hardy::central_binomial(q), -1 / q) *
                                 std::pow(hardy::central_binomial(4 / q), -q / 4);
            for (int i = 0; i < n; ++i) {
                const double y = static_cast<double>(i) / (n - 1);
                const double dual = hardy::hq_dual_norm(q, y).value;
                const double hp = hardy::hp_norm({1.0, y}, 4 / q).value;
                os << q << "," << y << "," << dual / hp << "," << bound << "\n";
            }
        }
    }

    if (out_path.empty()) {
        std::cout << os.str();
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    f << os.str();
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-certificate and dual-norm toolkit for linear forms on the torus"};
    app.require_subcommand(1);
    const double tol = default_tolerance();

    // verify
    auto* verify = app.add_subcommand("verify", "run every certificate and consistency check");
    bool verify_json = false, corrupt_f = false;
    std::string verify_out;
    verify->add_flag("--json", verify_json, "machine-readable report");
    verify->add_option("--out", verify_out, "write the report to a file");
    verify->add_flag("--corrupt-f", corrupt_f, "fault-injection hook: perturb the threshold polynomial")
        ->group(""); // hidden
    verify->callback([&]() { std::exit(cmd_verify(verify_json, verify_out, corrupt_f)); });

    // classify
    auto* classify = app.add_subcommand("classify", "decide admissibility of a derivative pair");
    std::string alpha_text, beta_text;
    bool resolve = false, classify_json = false;
    classify->add_option("--alpha", alpha_text, "complex number as re,im")->required();
    classify->add_option("--beta", beta_text, "complex number as re,im")->required();
    classify->add_flag("--resolve", resolve, "resolve indeterminate cases with the exact dual norm");
    classify->add_flag("--json", classify_json, "machine-readable output");
    classify->callback([&]() {
        std::exit(cmd_classify(parse_complex(alpha_text), parse_complex(beta_text), resolve,
                               std::max(tol, 1e-7), classify_json));
    });

    // norm
    auto* norm = app.add_subcommand("norm", "H^p norm of a linear form");
    double norm_p = 2;
    std::string norm_alpha = "1", norm_beta = "0", norm_method = "auto";
    bool norm_json = false;
    norm->add_option("--p", norm_p, "exponent p >= 1")->required();
    norm->add_option("--alpha", norm_alpha, "coefficient of z1 as re,im");
    norm->add_option("--beta", norm_beta, "coefficient of z2 as re,im");
    norm->add_option("--method", norm_method, "auto|series|quadrature")
        ->check(CLI::IsMember({"auto", "series", "quadrature"}));
    norm->add_flag("--json", norm_json, "machine-readable output");
    norm->callback([&]() {
        std::exit(cmd_norm(norm_p, parse_complex(norm_alpha), parse_complex(norm_beta),
                           norm_method, tol, norm_json));
    });

    // dual
    auto* dual = app.add_subcommand("dual", "dual norm of z1 + y*z2");
    double dual_q = 1, dual_y = 1;
    bool dual_json = false;
    dual->add_option("--q", dual_q, "exponent: 1 <= q <= 2, or exactly 4 for the closed form")
        ->required();
    dual->add_option("--y", dual_y, "form parameter in [0,1]")->required();
    dual->add_flag("--json", dual_json, "machine-readable output");
    dual->callback([&]() { std::exit(cmd_dual(dual_q, dual_y, std::min(tol, 1e-8), dual_json)); });

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "search for a norm above 1 (sharpness of p = 4)");
    double cex_p = 4.5;
    bool cex_json = false;
    cex->add_option("--p", cex_p, "exponent p > 0")->required();
    cex->add_flag("--json", cex_json, "machine-readable output");
    cex->callback([&]() { std::exit(cmd_counterexample(cex_p, cex_json)); });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "write a CSV sweep");
    std::string sweep_what, sweep_out;
    int sweep_n = 51;
    sweep->add_option("--what", sweep_what, "ratio|region|question")
        ->required()
        ->check(CLI::IsMember({"ratio", "region", "question"}));
    sweep->add_option("--n", sweep_n, "grid points per axis (>= 2)")->check(CLI::Range(2, 100000));
    sweep->add_option("--out", sweep_out, "output path (stdout when omitted)");
    sweep->callback([&]() { std::exit(cmd_sweep(sweep_what, sweep_n, sweep_out)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
