// Acceptance suite: one line per criterion, every tolerance pinned here.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ssm/ascent.hpp"
#include "ssm/asymptotics.hpp"
#include "ssm/gessel.hpp"
#include "ssm/partitions.hpp"
#include "ssm/sampler.hpp"
#include "ssm/schurq.hpp"
#include "ssm/tracywidom.hpp"

using namespace ssm;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

PMatrix load_matrix(const std::string& name) {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("missing data file " + name);
    return parse_pmatrix(in);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// A1: one-cell law, cdf_exact vs 1 - 2 a^{2(h+1)}/(1+a^2), tol 1e-12.
Outcome a1() {
    double worst = 0.0;
    for (double alpha : {0.2, 0.5, 0.8}) {
        MeasureParams sigma(1, 1, alpha);
        double q = alpha * alpha;
        for (int h = 0; h <= 12; ++h) {
            double expect = 1.0 - 2.0 * std::pow(q, h + 1) / (1.0 + q);
            worst = std::max(worst, std::fabs(cdf_exact(sigma, h) - expect));
        }
    }
    return {worst <= 1e-12, "max |cdf - closed form| = " + fmt(worst)};
}

// A2: Gessel identity, rational mode, m=n=2, alpha=1/4, h=0..5, N=40.
Outcome a2() {
    auto x = Specialization::alpha_spec(2, Rational(1, 4));
    double worst_tail = 0.0;
    bool ok = true;
    double worst_gap = 0.0;
    for (int h = 0; h <= 5; ++h) {
        auto lhs = gessel_lhs<Rational>(x, x, h, 40);
        Rational det = gessel_det_rational(x, x, h);
        Rational lo = lhs.value - lhs.tail;
        if (lo < 0) lo = 0;
        Rational hi = lhs.value + lhs.tail;
        if (!(lo * lo <= det && det <= hi * hi)) ok = false;
        double tail = to_double(lhs.tail);
        worst_tail = std::max(worst_tail, tail);
        worst_gap = std::max(worst_gap,
                             std::fabs(to_double(lhs.value) - std::sqrt(to_double(det))));
        if (tail >= 1e-9) ok = false;
    }
    return {ok, "|lhs-rhs| <= tail at every h; max tail = " + fmt(worst_tail) +
                    ", max |lhs-rhs| = " + fmt(worst_gap)};
}

// A3: total variation between the enumerated law (entries <= K=8) and
// successive differences of the determinant CDF, m=n=2, alpha=1/4, tol 1e-6.
Outcome a3() {
    MeasureParams sigma(2, 2, 0.25);
    auto small = exact_distribution_small(sigma, 8);
    double tv = 0.0;
    double prev = 0.0;
    int hmax = static_cast<int>(small.cdf.size()) - 1;
    for (int h = 0; h <= hmax; ++h) {
        double g = cdf_exact(sigma, h);
        double p_small = small.cdf[h] - (h == 0 ? 0.0 : small.cdf[h - 1]);
        tv += std::fabs(p_small - (g - prev));
        prev = g;
    }
    tv += (1.0 - prev) + small.tail_bound;  // both distributions' remainders
    tv *= 0.5;
    return {tv <= 1e-6, "total variation = " + fmt(tv) + " (entry tail bound " +
                            fmt(small.tail_bound) + ")"};
}

// A4: golden values: biword of the 3x3 matrix; lambda1 of the 7x7 matrix = 16.
Outcome a4() {
    PMatrix a3x3 = load_matrix("matrix_3x3.txt");
    Biword w = to_biword(a3x3);
    std::vector<int> tops = {1, 1, 1, 1, 1, 2, 2, 3, 3, 3};
    std::vector<std::pair<int, bool>> bottoms = {{1, true}, {1, false}, {1, false}, {2, true},
                                                 {3, false}, {3, false}, {3, false}, {1, false},
                                                 {2, true}, {2, false}};
    bool biword_ok = w.pairs.size() == tops.size();
    for (std::size_t i = 0; biword_ok && i < tops.size(); ++i)
        biword_ok = w.pairs[i].top == tops[i] && w.pairs[i].bottom.value == bottoms[i].first &&
                    w.pairs[i].bottom.marked == bottoms[i].second;

    int l = lambda1(load_matrix("matrix_7x7.txt"));
    bool lambda_ok = l == 16;
    std::string detail = std::string("biword golden ") + (biword_ok ? "matches" : "MISMATCH") +
                         "; lambda1(7x7) = " + std::to_string(l) + " (criterion demands 16)";
    if (!lambda_ok)
        detail += " -- the distribution-correct ascent convention yields 17; 16 is the"
                  " disjoint-occurrence count of the displayed path, a convention under"
                  " which the exact law fails by 0.30 total variation (see test_ascent.cpp"
                  " and the measure-equivalence checks)";
    return {biword_ok && lambda_ok, detail};
}

// A5: scaling constants against closed forms and finite differences.
Outcome a5() {
    double worst_z0 = 0.0, worst_c = 0.0, worst_fd = 0.0;
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        auto sc = constants(alpha, 1.0);
        worst_z0 = std::max(worst_z0, std::fabs(sc.z0 - 1.0));
        auto [c1, c2] = tau1_closed_form(alpha);
        worst_c = std::max(worst_c, std::fabs(sc.c1 - c1) / c1);
        worst_c = std::max(worst_c, std::fabs(sc.c2 - c2) / c2);
        for (double tau : {0.5, 1.0, 2.0}) {
            if (!(tau > alpha * alpha && tau < 1.0 / (alpha * alpha))) continue;
            auto s = constants(alpha, tau);
            long double z = s.z0, h = 1e-4L * s.z0, a = alpha, t = tau, c = s.c1;
            auto sig = [&](long double zz) {
                return t * std::log((1.0L + a * zz) / (1.0L - a * zz)) +
                       std::log((zz - a) / (zz + a)) - c * std::log(zz);
            };
            long double fd =
                (sig(z + 2 * h) - 2 * sig(z + h) + 2 * sig(z - h) - sig(z - 2 * h)) /
                (2 * h * h * h);
            worst_fd = std::max(worst_fd, std::fabs((double)fd - s.sigma3) / s.sigma3);
        }
    }
    bool ok = worst_z0 <= 1e-12 && worst_c <= 1e-10 && worst_fd <= 1e-5;
    return {ok, "max |z0-1| = " + fmt(worst_z0) + ", closed-form gap = " + fmt(worst_c) +
                    ", sigma''' FD gap = " + fmt(worst_fd)};
}

// A6: operator identities at m=n=3, alpha=0.3, M=60; scalar trends along n.
Outcome a6() {
    auto x3 = Specialization::alpha_spec(3, Rational(3, 10));
    auto r = operator_residuals(x3, x3, 60);
    bool ok = r.r1 <= 1e-8 && r.r2 <= 1e-8 && r.r3 <= 1e-8 && r.r4 <= 1e-8;
    double prev_t = 1e9, prev_hgap = 1e9;
    bool trend = true;
    double last_h = 0.0;
    for (int n : {8, 16, 32}) {
        auto sp = Specialization::alpha_spec(n, Rational(3, 10));
        auto rn = operator_residuals(sp, sp, 128);
        if (std::fabs(rn.t) >= prev_t) trend = false;
        if (std::fabs(rn.h_scalar - 0.5) >= prev_hgap) trend = false;
        prev_t = std::fabs(rn.t);
        prev_hgap = std::fabs(rn.h_scalar - 0.5);
        last_h = rn.h_scalar;
    }
    return {ok && trend,
            "R = (" + fmt(r.r1) + ", " + fmt(r.r2) + ", " + fmt(r.r3) + ", " + fmt(r.r4) +
                "); |t| decreasing, h -> " + fmt(last_h)};
}

// A7: F2 evaluator: order stability, monotonicity, tails, direct-sum square.
Outcome a7() {
    double worst_order = 0.0, worst_square = 0.0;
    bool monotone = true;
    double prev = -1.0;
    for (double s = -6.0; s <= 4.0 + 1e-12; s += 0.25) {
        double v40 = f2(s, 40), v80 = f2(s, 80);
        worst_order = std::max(worst_order, std::fabs(v40 - v80));
        double v = f2(s, 64);
        if (v < prev - 1e-12) monotone = false;
        prev = v;
    }
    for (double s : {-4.0, -1.5, 1.0})
        worst_square = std::max(worst_square, std::fabs(f2_direct_sum_det(s) - f2(s) * f2(s)));
    bool tails = f2(-6.0) <= 1e-4 && f2(4.0) >= 1.0 - 1e-5;
    bool ok = worst_order <= 1e-9 && monotone && tails && worst_square <= 1e-9;
    return {ok, "order 40/80 gap = " + fmt(worst_order) + ", direct-sum gap = " +
                    fmt(worst_square) + std::string(", tails ") + (tails ? "ok" : "BAD")};
}

// A8: deterministic convergence of the exact CDF to F2 at alpha=0.4, tau=1.
Outcome a8() {
    const double alpha = 0.4;
    auto sc = constants(alpha, 1.0);
    std::vector<double> deltas;
    for (int n : {20, 40, 80}) {
        MeasureParams sigma(n, n, alpha);
        double delta = 0.0;
        for (double s = -5.0; s <= 3.0 + 1e-12; s += 0.25) {
            int h = static_cast<int>(std::lround(sc.c1 * n + sc.c2 * std::cbrt((double)n) * s));
            if (h < 0) h = 0;
            double cdf = cdf_exact(sigma, h, ScalarMode::XFloat);
            delta = std::max(delta, std::fabs(cdf - f2(s)));
        }
        deltas.push_back(delta);
    }
    bool ok = deltas[0] > deltas[2] && deltas[2] <= 0.15;
    return {ok, "Delta_20 = " + fmt(deltas[0]) + ", Delta_40 = " + fmt(deltas[1]) +
                    ", Delta_80 = " + fmt(deltas[2])};
}

// A9: Monte Carlo limit law at n=100, 4000 replicas, KS vs F2 <= 0.10.
Outcome a9() {
    const double alpha = 0.4;
    const int n = 100;
    MeasureParams sigma(n, n, alpha);
    auto sc = constants(alpha, 1.0);
    auto draws = sample_lambda1_batch(sigma, 20240101, 4000);
    std::vector<double> scaled(draws.size());
    double denom = sc.c2 * std::cbrt((double)n);
    for (std::size_t i = 0; i < draws.size(); ++i)
        scaled[i] = (draws[i] + 0.5 - sc.c1 * n) / denom;
    std::sort(scaled.begin(), scaled.end());
    double ks = 0.0;
    const double N = static_cast<double>(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        double f = f2(scaled[i]);
        ks = std::max(ks, std::fabs((i + 1) / N - f));
        ks = std::max(ks, std::fabs(i / N - f));
    }
    return {ks <= 0.10, "KS distance = " + fmt(ks)};
}

// A10: Poisson limit: mean(L)/(4t) in [0.85, 1.0] at t=30 and above the t=10 ratio.
Outcome a10() {
    auto ratio = [](double t, int reps) {
        double s = 0.0;
        for (int r = 0; r < reps; ++r)
            s += poisson_L(t, Seed{4242, static_cast<std::uint64_t>(r)});
        return s / reps / (4.0 * t);
    };
    double r30 = ratio(30.0, 400);
    double r10 = ratio(10.0, 400);
    bool ok = r30 >= 0.85 && r30 <= 1.0 && r30 > r10;
    return {ok, "mean(L)/(4t): t=30 -> " + fmt(r30) + ", t=10 -> " + fmt(r10)};
}

// A11: tableau counts: closed form vs enumeration; pfaffian vs tableaux.
Outcome a11() {
    // standard shifted tableaux, every strict lambda of n <= 8
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_strict(n)) {
            auto cells = shifted_cells(lambda);
            std::vector<std::vector<bool>> filled(
                lambda.length() + 2,
                std::vector<bool>(lambda.length() + lambda.largest() + 2, false));
            long long count = 0;
            auto rec = [&](auto&& self, int letter) -> void {
                if (letter > n) {
                    ++count;
                    return;
                }
                for (auto [r, c] : cells) {
                    if (filled[r][c]) continue;
                    if (c > r && !filled[r][c - 1]) continue;
                    if (r > 1 && !filled[r - 1][c]) continue;
                    filled[r][c] = true;
                    self(self, letter + 1);
                    filled[r][c] = false;
                }
            };
            rec(rec, 1);
            if (count != count_standard_shifted(lambda))
                return {false, "standard count mismatch at n=" + std::to_string(n)};
        }
    // pfaffian route vs tableau enumeration, |lambda| <= 10, m <= 4, exact
    std::vector<Rational> vals = {Rational(1, 2), Rational(1, 3), Rational(1, 5),
                                  Rational(1, 7)};
    Specialization spec{vals};
    auto q = q_coeffs<Rational>(spec, 20);
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : enumerate_strict(n))
            if (Q_lambda(q, lambda) != Q_lambda_comb<Rational>(spec, lambda))
                return {false, "pfaffian/tableau mismatch at |lambda|=" + std::to_string(n)};
    return {true, "formula = enumeration (n <= 8); pfaffian = tableaux (|lambda| <= 10, m = 4)"};
}

// A12: Cauchy identity: monotone truncations to Z and rhs/Z -> 1.
Outcome a12() {
    auto x = Specialization::alpha_spec(2, Rational(1, 4));
    Rational z = z_product<Rational>(x, x);
    Rational prev(-1);
    int N = 0;
    double remainder = 1.0;
    for (N = 0; N <= 60; N += 5) {
        auto lhs = gessel_lhs<Rational>(x, x, N, N);
        if (!(lhs.value > prev)) return {false, "partial sums not increasing"};
        prev = lhs.value;
        remainder = to_double(z - lhs.value);
        if (remainder < 1e-8) break;
    }
    if (remainder >= 1e-8) return {false, "remainder did not reach 1e-8"};
    double zd = to_double(z);
    double prev_gap = 1e9;
    double gap = 1e9;
    for (int h : {4, 8, 16}) {
        auto rhs = gessel_rhs_log(x, x, h);
        gap = std::fabs(std::exp(rhs.log_value) / zd - 1.0);
        if (gap > prev_gap + 1e-15) return {false, "rhs/Z not improving with h"};
        prev_gap = gap;
    }
    bool ok = gap < 1e-8;
    return {ok, "remainder " + fmt(remainder) + " at N=" + std::to_string(N) +
                    "; |rhs/Z - 1| = " + fmt(gap) + " at h=16"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"A1", a1},  {"A2", a2},  {"A3", a3},  {"A4", a4},   {"A5", a5},   {"A6", a6},
        {"A7", a7},  {"A8", a8},  {"A9", a9},  {"A10", a10}, {"A11", a11}, {"A12", a12},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%-4s %s  (%.1fs)  %s\n", c.name, o.pass ? "PASS" : "FAIL", secs,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
