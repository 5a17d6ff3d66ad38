// Batch experiment harness for the shifted Schur measure: exact CDFs via the
// Gessel determinant, Monte Carlo sampling, scaling constants, Tracy-Widom
// tables, Poisson-limit simulation, and self-verification suites.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssm/ascent.hpp"
#include "ssm/asymptotics.hpp"
#include "ssm/gessel.hpp"
#include "ssm/partitions.hpp"
#include "ssm/sampler.hpp"
#include "ssm/schurq.hpp"
#include "ssm/tracywidom.hpp"

namespace {

struct RunConfig {
    int m = 1;
    int n = 1;
    std::string alpha = "0.5";
    double tau = 1.0;
    int h_max = -1;
    int reps = 1000;
    std::uint64_t seed = 1;
    int order = 64;
    double s_min = -6.0;
    double s_max = 4.0;
    double s_step = 0.25;
    double eps = 1e-6;
    double t = 10.0;
    std::string mode = "float";
    std::string n_list = "20,40,80";
    std::string out;
};

double alpha_double(const RunConfig& c) { return ssm::to_double(ssm::rational_from_decimal(c.alpha)); }
ssm::Rational alpha_rational(const RunConfig& c) { return ssm::rational_from_decimal(c.alpha); }

ssm::ScalarMode scalar_mode(const RunConfig& c) {
    if (c.mode == "float") return ssm::ScalarMode::Float64;
    if (c.mode == "xfloat") return ssm::ScalarMode::XFloat;
    if (c.mode == "auto") return ssm::ScalarMode::Auto;
    throw CLI::ValidationError("--mode", "expects rational|float|xfloat|auto");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// Single-writer output stream; every artifact starts with the resolved config.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string config_comment(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string line = "# subcommand=" + sub;
    for (const auto& [k, v] : kv) line += " " + k + "=" + v;
    return line;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--n-list", "expects a comma-separated list");
    return out;
}

double ks_distance_to_f2(std::vector<double> scaled, int order) {
    std::sort(scaled.begin(), scaled.end());
    const double N = static_cast<double>(scaled.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        double f = ssm::f2(scaled[i], order);
        ks = std::max(ks, std::fabs((i + 1) / N - f));
        ks = std::max(ks, std::fabs(i / N - f));
    }
    return ks;
}

int run_constants(const RunConfig& c) {
    Output out(c.out);
    auto sc = ssm::constants(alpha_double(c), c.tau);
    out.stream() << config_comment("constants", {{"alpha", c.alpha}, {"tau", fmt(c.tau)}}) << "\n";
    out.stream() << "z0=" << fmt(sc.z0) << "\nc1=" << fmt(sc.c1) << "\nc2=" << fmt(sc.c2)
                 << "\ng=" << fmt(sc.g) << "\nsigma3=" << fmt(sc.sigma3) << "\n";
    return 0;
}

int run_exact_cdf(const RunConfig& c) {
    Output out(c.out);
    ssm::MeasureParams sigma(c.m, c.n, alpha_double(c));
    out.stream() << config_comment("exact-cdf",
                                   {{"m", std::to_string(c.m)},
                                    {"n", std::to_string(c.n)},
                                    {"alpha", c.alpha},
                                    {"h_max", std::to_string(c.h_max)},
                                    {"eps", fmt(c.eps)},
                                    {"mode", c.mode}})
                 << "\n";
    out.stream() << "h,cdf\n";
    if (c.mode == "rational") {
        // exact determinant per h; practical for small m, n only
        ssm::Specialization x = ssm::Specialization::alpha_spec(c.m, alpha_rational(c));
        ssm::Specialization y = ssm::Specialization::alpha_spec(c.n, alpha_rational(c));
        double lz = std::log(ssm::to_double(ssm::z_product<ssm::Rational>(x, y)));
        int hmax = c.h_max >= 0 ? c.h_max : 64;
        for (int h = 0; h <= hmax; ++h) {
            ssm::Rational det = ssm::gessel_det_rational(x, y, h);
            double cdf = std::exp(0.5 * ssm::xscalar_from_rational(det).log_abs() - lz);
            out.stream() << h << "," << fmt(std::min(cdf, 1.0)) << "\n";
            if (c.h_max < 0 && cdf >= 1.0 - c.eps) break;
        }
        return 0;
    }
    if (c.h_max >= 0) {
        for (int h = 0; h <= c.h_max; ++h)
            out.stream() << h << "," << fmt(ssm::cdf_exact(sigma, h, scalar_mode(c))) << "\n";
    } else {
        for (auto [h, v] : ssm::cdf_curve(sigma, c.eps, scalar_mode(c)))
            out.stream() << h << "," << fmt(v) << "\n";
    }
    return 0;
}

int run_sample(const RunConfig& c) {
    Output out(c.out);
    ssm::MeasureParams sigma(c.m, c.n, alpha_double(c));
    auto draws = ssm::sample_lambda1_batch(sigma, c.seed, c.reps);
    out.stream() << config_comment("sample", {{"m", std::to_string(c.m)},
                                              {"n", std::to_string(c.n)},
                                              {"alpha", c.alpha},
                                              {"reps", std::to_string(c.reps)},
                                              {"seed", std::to_string(c.seed)}})
                 << "\n";
    out.stream() << "replica,lambda1\n";
    for (int r = 0; r < c.reps; ++r) out.stream() << r << "," << draws[r] << "\n";
    return 0;
}

int run_tw_table(const RunConfig& c) {
    Output out(c.out);
    out.stream() << config_comment("tw-table", {{"s_min", fmt(c.s_min)},
                                                {"s_max", fmt(c.s_max)},
                                                {"s_step", fmt(c.s_step)},
                                                {"order", std::to_string(c.order)}})
                 << "\n";
    out.stream() << "s,F2\n";
    for (double s = c.s_min; s <= c.s_max + 1e-12; s += c.s_step)
        out.stream() << fmt(s) << "," << fmt(ssm::f2(s, c.order)) << "\n";
    return 0;
}

int run_poisson(const RunConfig& c) {
    Output out(c.out);
    out.stream() << config_comment("poisson", {{"t", fmt(c.t)},
                                               {"reps", std::to_string(c.reps)},
                                               {"seed", std::to_string(c.seed)}})
                 << "\n";
    out.stream() << "replica,t,L\n";
    for (int r = 0; r < c.reps; ++r) {
        int L = ssm::poisson_L(c.t, ssm::Seed{c.seed, static_cast<std::uint64_t>(r)});
        out.stream() << r << "," << fmt(c.t) << "," << L << "\n";
    }
    return 0;
}

int run_scaling_experiment(const RunConfig& c) {
    Output out(c.out);
    auto ns = parse_int_list(c.n_list);
    double alpha = alpha_double(c);
    out.stream() << config_comment("scaling-experiment", {{"alpha", c.alpha},
                                                          {"tau", fmt(c.tau)},
                                                          {"n_list", c.n_list},
                                                          {"reps", std::to_string(c.reps)},
                                                          {"seed", std::to_string(c.seed)},
                                                          {"order", std::to_string(c.order)}})
                 << "\n";
    out.stream() << "n,replica,lambda1,scaled\n";
    for (int n : ns) {
        int m = static_cast<int>(std::lround(c.tau * n));
        ssm::MeasureParams sigma(m, n, alpha);
        auto sc = ssm::constants(alpha, static_cast<double>(m) / n);
        auto draws = ssm::sample_lambda1_batch(sigma, c.seed, c.reps);
        std::vector<double> scaled(draws.size());
        for (std::size_t r = 0; r < draws.size(); ++r) {
            // Half-step continuity correction for the integer statistic.
            scaled[r] = (draws[r] + 0.5 - sc.c1 * n) / (sc.c2 * std::cbrt((double)n));
            out.stream() << n << "," << r << "," << draws[r] << "," << fmt(scaled[r]) << "\n";
        }
        std::cout << "n=" << n << " ks=" << fmt(ks_distance_to_f2(scaled, c.order)) << "\n";
    }
    return 0;
}

// ---- verify suites ----------------------------------------------------

int report(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    return ok ? 0 : 1;
}

int verify_gessel(const RunConfig& c) {
    using ssm::Rational;
    int h_max = c.h_max >= 0 ? c.h_max : 5;
    ssm::Specialization x = ssm::Specialization::alpha_spec(c.m, alpha_rational(c));
    ssm::Specialization y = ssm::Specialization::alpha_spec(c.n, alpha_rational(c));
    int fails = 0;
    for (int h = 0; h <= h_max; ++h) {
        auto lhs = ssm::gessel_lhs<Rational>(x, y, h, 40);
        Rational det = ssm::gessel_det_rational(x, y, h);
        Rational lo = lhs.value - lhs.tail;
        if (lo < 0) lo = 0;
        Rational hi = lhs.value + lhs.tail;
        bool ok = lo * lo <= det && det <= hi * hi;
        double resid = std::fabs(ssm::to_double(lhs.value) - std::sqrt(ssm::to_double(det)));
        fails += report(ok, "gessel h=" + std::to_string(h),
                        "|lhs-rhs|=" + fmt(resid) + " tail=" + fmt(ssm::to_double(lhs.tail)));
    }
    return fails == 0 ? 0 : 1;
}

int verify_cauchy(const RunConfig& c) {
    ssm::Specialization x = ssm::Specialization::alpha_spec(c.m, alpha_rational(c));
    ssm::Specialization y = ssm::Specialization::alpha_spec(c.n, alpha_rational(c));
    double z = ssm::to_double(ssm::z_product<ssm::Rational>(x, y));
    int fails = 0;
    double prev = -1.0;
    bool monotone = true;
    double remainder = z;
    for (int N = 0; N <= 60; N += 5) {
        auto lhs = ssm::gessel_lhs<ssm::Rational>(x, y, N, N);
        double v = ssm::to_double(lhs.value);
        if (v < prev - 1e-15) monotone = false;
        prev = v;
        remainder = z - v;
        if (remainder < 1e-8) break;
    }
    fails += report(monotone && remainder < 1e-8, "cauchy partial sums",
                    "Z=" + fmt(z) + " remainder=" + fmt(remainder));
    double r_prev = 1e9;
    bool shrinking = true;
    double last_gap = 1e9;
    for (int h : {5, 10, 20}) {
        auto rhs = ssm::gessel_rhs_log(x, y, h);
        last_gap = std::fabs(std::exp(rhs.log_value) / z - 1.0);
        if (last_gap > r_prev + 1e-15) shrinking = false;
        r_prev = last_gap;
    }
    fails += report(shrinking && last_gap < 1e-8, "gessel rhs -> Z", "gap=" + fmt(last_gap));
    return fails == 0 ? 0 : 1;
}

int verify_operators(const RunConfig& c) {
    ssm::Specialization x = ssm::Specialization::alpha_spec(c.m, alpha_rational(c));
    ssm::Specialization y = ssm::Specialization::alpha_spec(c.n, alpha_rational(c));
    int M = c.h_max > 0 ? c.h_max : 60;
    auto r = ssm::operator_residuals(x, y, M);
    std::cout << "R1=" << fmt(r.r1) << ",R2=" << fmt(r.r2) << ",R3=" << fmt(r.r3)
              << ",R4=" << fmt(r.r4) << ",t=" << fmt(r.t) << ",h_scalar=" << fmt(r.h_scalar)
              << "\n";
    bool ok = r.r1 <= 1e-8 && r.r2 <= 1e-8 && r.r3 <= 1e-8 && r.r4 <= 1e-8;
    return report(ok, "operator identities", "max residual <= 1e-8") == 0 ? 0 : 1;
}

int verify_measure(const RunConfig& c) {
    ssm::MeasureParams sigma(c.m, c.n, alpha_double(c));
    // largest entry cutoff the enumeration guard allows, capped at 8
    int K = static_cast<int>((std::pow(1e7, 1.0 / (c.m * c.n)) - 1.0) / 2.0);
    K = std::max(1, std::min(8, K));
    auto small = ssm::exact_distribution_small(sigma, K);
    double tv = 0.0;
    double prev_cdf = 0.0;
    for (std::size_t h = 0; h < small.cdf.size(); ++h) {
        double g = ssm::cdf_exact(sigma, static_cast<int>(h));
        double mass_small = small.cdf[h] - (h == 0 ? 0.0 : small.cdf[h - 1]);
        double mass_gessel = g - prev_cdf;
        tv += std::fabs(mass_small - mass_gessel);
        prev_cdf = g;
    }
    tv *= 0.5;
    bool ok = tv <= 0.5 * small.tail_bound + 1e-6;
    return report(ok, "measure equivalence", "tv=" + fmt(tv) + " tail=" + fmt(small.tail_bound));
}

// Standard shifted tableaux counted by direct placement of 1..n.
long long count_standard_brute(const ssm::StrictPartition& lambda);

int verify_tableaux(const RunConfig&) {
    int fails = 0;
    bool formula_ok = true;
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : ssm::enumerate_strict(n))
            if (ssm::count_standard_shifted(lambda) != count_standard_brute(lambda))
                formula_ok = false;
    fails += report(formula_ok, "standard shifted counts", "formula = enumeration for n <= 8");

    std::vector<ssm::Rational> vals = {ssm::Rational(1, 2), ssm::Rational(1, 3),
                                       ssm::Rational(1, 5), ssm::Rational(1, 7)};
    ssm::Specialization spec{vals};
    auto table = ssm::q_coeffs<ssm::Rational>(spec, 24);
    bool pf_ok = true;
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : ssm::enumerate_strict(n))
            if (ssm::Q_lambda(table, lambda) != ssm::Q_lambda_comb<ssm::Rational>(spec, lambda))
                pf_ok = false;
    fails += report(pf_ok, "pfaffian vs tableaux", "Q_lambda two routes, |lambda| <= 10, m = 4");
    return fails == 0 ? 0 : 1;
}

long long count_standard_brute(const ssm::StrictPartition& lambda) {
    auto cells = ssm::shifted_cells(lambda);
    const int n = lambda.weight();
    long long count = 0;
    // Placement DFS: letters 1..n go one by one into corner-addable cells.
    std::vector<std::vector<bool>> filled(lambda.length() + 2,
                                          std::vector<bool>(lambda.length() + lambda.largest() + 2, false));
    auto addable = [&](int r, int col) {
        bool left_ok = col == r || filled[r][col - 1];
        bool up_ok = r == 1 || filled[r - 1][col];
        return left_ok && up_ok;
    };
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter > n) {
            ++count;
            return;
        }
        for (auto [r, col] : cells) {
            if (filled[r][col] || !addable(r, col)) continue;
            filled[r][col] = true;
            self(self, letter + 1);
            filled[r][col] = false;
        }
    };
    rec(rec, 1);
    return count;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted Schur measure toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    RunConfig c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", c.m, "rows");
        sub->add_option("--n", c.n, "columns");
        sub->add_option("--alpha", c.alpha, "specialization value in (0,1), decimal literal");
        sub->add_option("--tau", c.tau, "m/n ratio");
        sub->add_option("--h-max", c.h_max, "largest h (or truncation size)");
        sub->add_option("--reps", c.reps, "replica count");
        sub->add_option("--seed", c.seed, "master seed");
        sub->add_option("--order", c.order, "quadrature order");
        sub->add_option("--s-min", c.s_min, "grid start");
        sub->add_option("--s-max", c.s_max, "grid end");
        sub->add_option("--s-step", c.s_step, "grid step");
        sub->add_option("--eps", c.eps, "CDF tail target");
        sub->add_option("--t", c.t, "Poisson rate parameter");
        sub->add_option("--mode", c.mode, "rational|float|xfloat|auto");
        sub->add_option("--n-list", c.n_list, "comma-separated n values");
        sub->add_option("--out", c.out, "output CSV path (default stdout)");
    };

    std::string verify_target;
    auto* sc_constants = app.add_subcommand("constants", "scaling constants z0, c1, c2, g, sigma'''");
    auto* sc_cdf = app.add_subcommand("exact-cdf", "exact law of lambda1 via the Gessel determinant");
    auto* sc_sample = app.add_subcommand("sample", "Monte Carlo draws of lambda1");
    auto* sc_verify = app.add_subcommand("verify", "exact identity suites");
    auto* sc_tw = app.add_subcommand("tw-table", "Tracy-Widom F2 table");
    auto* sc_poisson = app.add_subcommand("poisson", "Poisson single-turn path simulation");
    auto* sc_scaling = app.add_subcommand("scaling-experiment", "scaled Monte Carlo vs F2 across n");
    for (auto* s : {sc_constants, sc_cdf, sc_sample, sc_verify, sc_tw, sc_poisson, sc_scaling})
        add_common(s);
    sc_verify->add_option("target", verify_target, "gessel|cauchy|operators|measure|tableaux")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sc_constants->parsed()) return run_constants(c);
        if (sc_cdf->parsed()) return run_exact_cdf(c);
        if (sc_sample->parsed()) return run_sample(c);
        if (sc_tw->parsed()) return run_tw_table(c);
        if (sc_poisson->parsed()) return run_poisson(c);
        if (sc_scaling->parsed()) return run_scaling_experiment(c);
        if (sc_verify->parsed()) {
            // suite defaults, kept unless the caller set the flags
            RunConfig g = c;
            bool size_set = sc_verify->count("--m") || sc_verify->count("--n");
            bool alpha_set = sc_verify->count("--alpha") > 0;
            if (verify_target == "operators") {
                if (!size_set) g.m = g.n = 3;
                if (!alpha_set) g.alpha = "0.3";
                return verify_operators(g);
            }
            if (!size_set) g.m = g.n = 2;
            if (!alpha_set) g.alpha = "0.25";
            if (verify_target == "gessel") return verify_gessel(g);
            if (verify_target == "cauchy") return verify_cauchy(g);
            if (verify_target == "measure") return verify_measure(g);
            if (verify_target == "tableaux") return verify_tableaux(g);
            std::cerr << "unknown verify target: " << verify_target << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
