// Command line front end: sampling the spline bases to CSV, running the
// numerical check suites, and measuring refinement convergence against the
// classical trigonometric B-spline.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "htrig/htrig.hpp"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Shortest round-trip decimal form, identical across runs and platforms.
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_knots(const std::string& arg) {
    std::vector<double> knots;
    auto push = [&knots](std::string tok) {
        const auto b = tok.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            return;
        }
        const auto e = tok.find_last_not_of(" \t\r");
        tok = tok.substr(b, e - b + 1);
        double v = 0.0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("knots: cannot parse value '" + tok + "'");
        }
        knots.push_back(v);
    };

    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            throw std::invalid_argument("knots: cannot open file '" + arg.substr(1) + "'");
        }
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) {
                line.resize(hash);
            }
            push(line);
        }
    } else {
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            push(tok);
        }
    }
    if (knots.empty()) {
        throw std::invalid_argument("knots: no values given");
    }
    return knots;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("HTRIG_SEED")) {
        const std::string s(env);
        std::uint64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw std::invalid_argument("HTRIG_SEED: cannot parse '" + s + "' as an integer");
        }
        return v;
    }
    return 42;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    return file;
}

int cmd_sample(double h, const std::string& knots_arg, int order, const std::string& flavor,
               std::string method, std::optional<double> from, std::optional<double> to,
               double step, const std::string& out_path) {
    const htrig::HParam p(h);
    const std::vector<double> knots = parse_knots(knots_arg);
    if (order < 1) {
        throw std::invalid_argument("order must be >= 1");
    }
    if (static_cast<int>(knots.size()) < order + 1) {
        throw std::invalid_argument("need at least order+1 knots, got " +
                                    std::to_string(knots.size()));
    }
    const htrig::KnotVector kv(knots, p);

    const bool tilde = flavor == "T~" || flavor == "E~";
    const bool trig = flavor == "T" || flavor == "T~";
    if (tilde && !method.empty()) {
        throw std::invalid_argument("--method does not apply to the normalized flavors");
    }
    if (method.empty()) {
        method = "recurrence";
    }
    htrig::EvalMethod em = htrig::EvalMethod::recurrence;
    if (method == "definition") {
        em = htrig::EvalMethod::definition;
    } else if (method == "from_E") {
        em = htrig::EvalMethod::from_e;
    } else if (method != "recurrence") {
        throw std::invalid_argument("unknown method '" + method + "'");
    }
    if (em == htrig::EvalMethod::from_e && !trig) {
        throw std::invalid_argument("from_E applies to flavor T only");
    }

    const double lo = from.value_or(knots.front());
    const double hi = to.value_or(knots.back());
    if (!(step > 0.0)) {
        throw std::invalid_argument("step must be > 0");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("need from < to");
    }
    const int rows = static_cast<int>(std::ceil((hi - lo) / step - 1e-9));

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);

    const std::string prefix = trig ? (tilde ? "Tt" : "T") : (tilde ? "Et" : "E");
    const bool complex_cols = flavor == "E" || flavor == "E~";
    out << "x";
    for (int j = 0; j + order < kv.count(); ++j) {
        const std::string base = prefix + "_" + std::to_string(j) + "_" + std::to_string(order);
        if (complex_cols) {
            out << "," << base << "_re," << base << "_im";
        } else {
            out << "," << base;
        }
    }
    out << "\n";

    for (int r = 0; r < rows; ++r) {
        const double x = lo + r * step;
        out << fmt(x);
        for (int j = 0; j + order < kv.count(); ++j) {
            const htrig::SplineIndex idx{j, order};
            if (flavor == "T") {
                out << "," << fmt(htrig::eval_T(kv, idx, x, em));
            } else if (flavor == "E") {
                const htrig::Complex v = htrig::eval_E(kv, idx, x, em);
                out << "," << fmt(v.real()) << "," << fmt(v.imag());
            } else if (flavor == "T~") {
                out << "," << fmt(htrig::eval_tilde(kv, idx, x, htrig::Flavor::trig).real());
            } else {
                const htrig::Complex v = htrig::eval_tilde(kv, idx, x, htrig::Flavor::exp);
                out << "," << fmt(v.real()) << "," << fmt(v.imag());
            }
        }
        out << "\n";
    }
    return kExitPass;
}

int cmd_check(std::vector<std::string> suites, std::vector<double> hs,
              const std::optional<std::uint64_t>& seed_flag, int samples,
              std::optional<double> tol, const std::string& json_path) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be >= 1");
    }
    if (tol && !(*tol > 0.0)) {
        throw std::invalid_argument("tol must be > 0");
    }
    if (suites.empty()) {
        suites = {"all"};
    }
    std::vector<std::string> expanded;
    for (const auto& s : suites) {
        if (s == "all") {
            for (const auto& name : htrig::checks::suite_names()) {
                expanded.push_back(name);
            }
        } else if (htrig::checks::is_suite(s)) {
            expanded.push_back(s);
        } else {
            throw std::invalid_argument("unknown suite '" + s + "'");
        }
    }
    if (hs.empty()) {
        hs = {-0.5, 0.25, 1.0, 3.0};
    }

    htrig::checks::Options opt;
    opt.seed = resolve_seed(seed_flag);
    opt.samples = samples;
    opt.tol = tol;

    bool all_passed = true;
    nlohmann::json jreports = nlohmann::json::array();
    for (const auto& suite : expanded) {
        for (double h : hs) {
            const htrig::checks::CheckReport r =
                htrig::checks::run_suite(suite, htrig::HParam(h), opt);
            all_passed = all_passed && r.passed;
            char line[256];
            std::snprintf(line, sizeof(line),
                          "[%s] suite=%s h=%s seed=%llu samples=%d max=%.3e mean=%.3e tol=%g",
                          r.passed ? "PASS" : "FAIL", r.suite.c_str(), fmt(r.h).c_str(),
                          static_cast<unsigned long long>(r.seed), r.samples, r.max_residual,
                          r.mean_residual, r.tol);
            std::cout << line << "\n";
            if (r.samples == 0 && suite == "integrals" && h < 0.0) {
                std::cerr << "note: integrals at h=" << fmt(h)
                          << ": increasing nodes cannot sit on a nonnegative h-grid for h < 0; "
                             "vacuous pass\n";
            }
            jreports.push_back({{"suite", r.suite},
                                {"h", r.h},
                                {"seed", r.seed},
                                {"samples", r.samples},
                                {"max_residual", r.max_residual},
                                {"mean_residual", r.mean_residual},
                                {"tol", r.tol},
                                {"passed", r.passed}});
        }
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            throw std::invalid_argument("cannot open json file '" + json_path + "'");
        }
        out << jreports.dump(2) << "\n";
    }
    return all_passed ? kExitPass : kExitCheckFailed;
}

int cmd_converge(const std::string& knots_arg, int order, double h_start, int halvings,
                 int points, const std::string& out_path) {
    const std::vector<double> knots = parse_knots(knots_arg);
    if (order < 1) {
        throw std::invalid_argument("order must be >= 1");
    }
    if (static_cast<int>(knots.size()) < order + 1) {
        throw std::invalid_argument("need at least order+1 knots, got " +
                                    std::to_string(knots.size()));
    }
    if (!(h_start > -1.0) || h_start == 0.0) {
        throw std::invalid_argument("h-start must be > -1 and != 0");
    }
    if (halvings < 0) {
        throw std::invalid_argument("halvings must be >= 0");
    }
    if (points < 1) {
        throw std::invalid_argument("points must be >= 1");
    }

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);

    const double lo = knots.front();
    const double span = knots.back() - knots.front();
    out << "h,max_error,ratio\n";
    double prev = 0.0;
    double h = h_start;
    for (int k = 0; k <= halvings; ++k, h /= 2.0) {
        const htrig::HParam p(h);
        const htrig::KnotVector kv(knots, p);
        double err = 0.0;
        for (int j = 0; j + order < static_cast<int>(knots.size()); ++j) {
            for (int i = 0; i < points; ++i) {
                const double x = lo + span * (i + 0.5) / points;
                const double a = htrig::eval_T(kv, {j, order}, x);
                const double b = htrig::eval_T_classical(knots, {j, order}, x);
                err = std::max(err, std::abs(a - b));
            }
        }
        out << fmt(h) << "," << fmt(err) << ",";
        if (k > 0 && err > 0.0) {
            out << fmt(prev / err);
        }
        out << "\n";
        prev = err;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"h-trigonometric B-spline toolkit"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help");  // frees -h for the --h option

    // sample
    auto* sample = app.add_subcommand("sample", "Evaluate basis functions on a grid as CSV");
    sample->set_help_flag("--help", "Print help");
    double s_h = 0.0;
    std::string s_knots;
    int s_order = 0;
    std::string s_flavor = "T";
    std::string s_method;
    std::optional<double> s_from;
    std::optional<double> s_to;
    double s_step = 0.0;
    std::string s_out;
    sample->add_option("--h", s_h, "Step parameter h (> -1, != 0)")->required();
    sample->add_option("--knots", s_knots, "Comma separated knots, or @file with one per line")
        ->required();
    sample->add_option("--order", s_order, "Spline order m")->required();
    sample->add_option("--flavor", s_flavor, "Basis family")
        ->check(CLI::IsMember({"T", "E", "T~", "E~"}));
    sample->add_option("--method", s_method, "Evaluation method where applicable")
        ->check(CLI::IsMember({"definition", "recurrence", "from_E"}));
    sample->add_option("--from", s_from, "Grid start (default: first knot)");
    sample->add_option("--to", s_to, "Grid end, excluded (default: last knot)");
    sample->add_option("--step", s_step, "Grid step (> 0)")->required();
    sample->add_option("--out", s_out, "Output file (default: stdout)");

    // check
    auto* check = app.add_subcommand("check", "Run numerical check suites");
    check->set_help_flag("--help", "Print help");
    std::vector<std::string> c_suites;
    std::vector<double> c_hs;
    std::optional<std::uint64_t> c_seed;
    int c_samples = 1000;
    std::optional<double> c_tol;
    std::string c_json;
    std::string suite_help = "Suite (repeatable): all";
    for (const auto& name : htrig::checks::suite_names()) {
        suite_help += ", " + name;
    }
    check->add_option("--suite", c_suites, suite_help);
    check->add_option("--h", c_hs, "Step parameter (repeatable; default -0.5 0.25 1 3)");
    check->add_option("--seed", c_seed, "RNG seed (default: HTRIG_SEED env, then 42)");
    check->add_option("--samples", c_samples, "Sample budget per suite (default 1000)");
    check->add_option("--tol", c_tol, "Override every family tolerance");
    check->add_option("--json", c_json, "Write the reports as a JSON array to this file");

    // converge
    auto* converge =
        app.add_subcommand("converge", "Refinement study against the classical trig B-spline");
    converge->set_help_flag("--help", "Print help");
    std::string v_knots;
    int v_order = 0;
    double v_hstart = 0.1;
    int v_halvings = 6;
    int v_points = 200;
    std::string v_out;
    converge->add_option("--knots", v_knots, "Comma separated knots, or @file")->required();
    converge->add_option("--order", v_order, "Spline order m")->required();
    converge->add_option("--h-start", v_hstart, "Largest h (default 0.1)");
    converge->add_option("--halvings", v_halvings, "Number of halvings (default 6)");
    converge->add_option("--points", v_points, "Sample points per run (default 200)");
    converge->add_option("--out", v_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sample->parsed()) {
            return cmd_sample(s_h, s_knots, s_order, s_flavor, s_method, s_from, s_to, s_step,
                              s_out);
        }
        if (check->parsed()) {
            return cmd_check(c_suites, c_hs, c_seed, c_samples, c_tol, c_json);
        }
        return cmd_converge(v_knots, v_order, v_hstart, v_halvings, v_points, v_out);
    } catch (const htrig::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
