#include "ssm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ssm {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence, in long double to keep
// the Newton limit well below the 1e-13 exactness target.
struct LegendreEval {
    long double p;
    long double dp;
};

LegendreEval legendre(int n, long double x) {
    long double p0 = 1.0L, p1 = x;
    if (n == 0) return {p0, 0.0L};
    for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    long double dp = n * (x * p1 - p0) / (x * x - 1.0L);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.order = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const long double pi = 3.14159265358979323846264338328L;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi-style initial guess for the i-th root from the top.
        long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        for (int it = 0; it < 100; ++it) {
            LegendreEval e = legendre(n, x);
            long double dx = e.p / e.dp;
            x -= dx;
            if (std::fabs((double)dx) < 1e-17 * std::max(1.0, std::fabs((double)x))) break;
        }
        LegendreEval e = legendre(n, x);
        long double w = 2.0L / ((1.0L - x * x) * e.dp * e.dp);
        rule.nodes[i] = (double)-x;  // roots found from the top; mirror to ascending order
        rule.weights[i] = (double)w;
        rule.nodes[n - 1 - i] = (double)x;
        rule.weights[n - 1 - i] = (double)w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace ssm
