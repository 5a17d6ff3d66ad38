#include "ssm/tracywidom.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssm/linalg.hpp"
#include "ssm/matrix.hpp"
#include "ssm/quadrature.hpp"

namespace ssm {

namespace {

constexpr long double kAi0 = 0.35502805388781723926006318600418317640L;    // 3^(-2/3)/Gamma(2/3)
constexpr long double kAip0 = -0.25881940379280679840518356018920396348L;  // -3^(-1/3)/Gamma(1/3)
constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Maclaurin series of Ai and Ai' from Ai'' = x Ai, in long double so the
// alternating cancellation at x ~ -9 stays below 1e-12 absolute.
void airy_series(double x, double& ai, double& aip) {
    const long double lx = x;
    // strand a: a_0 = Ai(0), a_{n+3} = a_n x^3/((n+3)(n+2))
    // strand b: b_1 = Ai'(0) x, likewise
    long double term_a = kAi0;
    long double term_b = kAip0 * lx;
    long double sum = term_a + term_b;
    long double dsum = kAip0;  // derivative series: n a_n x^(n-1)
    const long double x3 = lx * lx * lx;
    for (int n = 0; n < 400; ++n) {
        int na = 3 * n;      // current exponent of strand a
        int nb = 3 * n + 1;  // current exponent of strand b
        term_a *= x3 / ((na + 3) * (na + 2));
        term_b *= x3 / ((nb + 3) * (nb + 2));
        sum += term_a + term_b;
        if (lx != 0.0L)
            dsum += (term_a * (na + 3) + term_b * (nb + 3)) / lx;
        if (std::fabs((double)term_a) + std::fabs((double)term_b) < 1e-22 * (1.0 + std::fabs((double)sum)))
            break;
    }
    ai = (double)sum;
    aip = (double)dsum;
}

// u_k, v_k coefficients of the Airy asymptotic expansions.
void airy_uv(std::vector<long double>& u, std::vector<long double>& v, int count) {
    u.assign(count, 0.0L);
    v.assign(count, 0.0L);
    u[0] = v[0] = 1.0L;
    for (int k = 1; k < count; ++k) {
        u[k] = u[k - 1] * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
               (216.0L * k * (2.0L * k - 1.0L));
        v[k] = u[k] * (6.0L * k + 1.0L) / (1.0L - 6.0L * k);
    }
}

// Optimally truncated alternating asymptotic sum of coef_k / zeta^k.
long double asym_sum(const std::vector<long double>& coef, long double zeta, int parity,
                     int stride) {
    // parity selects the starting index; stride 1 sums all k, stride 2 only
    // even or odd k with alternating signs in the summed subsequence.
    long double sum = 0.0L;
    long double prev = 1e30L;
    long double zp = 1.0L;
    for (int j = parity; j > 0; --j) zp *= zeta;
    int sign = 1;
    for (int k = parity, step = 0; k < (int)coef.size(); k += stride, ++step) {
        long double term = coef[k] / zp;
        if (std::fabs((double)term) > std::fabs((double)prev)) break;  // divergence point
        sum += sign * term;
        prev = term;
        sign = -sign;
        for (int j = 0; j < stride; ++j) zp *= zeta;
        if (std::fabs((double)term) < 1e-22) break;
    }
    return sum;
}

void airy_asymptotic(double x, double& ai, double& aip) {
    std::vector<long double> u, v;
    airy_uv(u, v, 40);
    const long double ax = std::fabs((long double)x);
    const long double zeta = 2.0L / 3.0L * ax * std::sqrt(ax);
    const long double root4 = std::pow(ax, 0.25L);
    if (x > 0) {
        long double e = std::exp(-zeta);
        ai = (double)(e / (2.0L * std::sqrt(kPi) * root4) * asym_sum(u, zeta, 0, 1));
        aip = (double)(-e * root4 / (2.0L * std::sqrt(kPi)) * asym_sum(v, zeta, 0, 1));
    } else {
        long double arg = zeta - kPi / 4.0L;
        long double c = std::cos(arg), s = std::sin(arg);
        long double even_u = asym_sum(u, zeta, 0, 2);
        long double odd_u = asym_sum(u, zeta, 1, 2);
        long double even_v = asym_sum(v, zeta, 0, 2);
        long double odd_v = asym_sum(v, zeta, 1, 2);
        ai = (double)((c * even_u + s * odd_u) / (std::sqrt(kPi) * root4));
        aip = (double)(root4 / std::sqrt(kPi) * (s * even_v - c * odd_v));
    }
}

constexpr double kSeriesCut = 9.0;  // series below, asymptotics above

}  // namespace

AiryEval airy_eval(double x) {
    AiryEval e;
    e.x = x;
    e.full_accuracy = std::fabs(x) <= 12.0;
    if (std::fabs(x) <= kSeriesCut)
        airy_series(x, e.ai, e.ai_prime);
    else
        airy_asymptotic(x, e.ai, e.ai_prime);
    return e;
}

double airy_ai(double x) { return airy_eval(x).ai; }
double airy_ai_prime(double x) { return airy_eval(x).ai_prime; }

double airy_kernel(double x, double y) {
    if (std::fabs(x - y) < 1e-6) {
        double m = 0.5 * (x + y);
        AiryEval e = airy_eval(m);
        return e.ai_prime * e.ai_prime - m * e.ai * e.ai;
    }
    AiryEval ex = airy_eval(x);
    AiryEval ey = airy_eval(y);
    return (ex.ai * ey.ai_prime - ex.ai_prime * ey.ai) / (x - y);
}

namespace {

// Nystrom data for det(I - K_Airy) on (s, inf): map x = s + L(1+u)/(1-u).
struct NystromGrid {
    std::vector<double> x;
    std::vector<double> sqrt_w;  // sqrt(gauss weight * jacobian)
};

NystromGrid nystrom_grid(double s, int order) {
    if (order < 20) throw std::invalid_argument("f2: order >= 20");
    constexpr double L = 10.0;
    QuadratureRule rule = gauss_legendre(order);
    NystromGrid g;
    g.x.resize(order);
    g.sqrt_w.resize(order);
    for (int i = 0; i < order; ++i) {
        double u = rule.nodes[i];
        g.x[i] = s + L * (1.0 + u) / (1.0 - u);
        double jac = 2.0 * L / ((1.0 - u) * (1.0 - u));
        g.sqrt_w[i] = std::sqrt(rule.weights[i] * jac);
    }
    return g;
}

DenseMatrix<double> nystrom_matrix(const NystromGrid& g) {
    const int n = static_cast<int>(g.x.size());
    DenseMatrix<double> m = DenseMatrix<double>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) -= g.sqrt_w[i] * g.sqrt_w[j] * airy_kernel(g.x[i], g.x[j]);
    return m;
}

}  // namespace

double f2(double s, int order) {
    NystromGrid g = nystrom_grid(s, order);
    SignLogDet d = sign_logdet(nystrom_matrix(g));
    if (d.sign <= 0) return 0.0;  // d can only degenerate far in the left tail
    double v = std::exp(d.log_abs);
    return v > 1.0 ? 1.0 : v;
}

F2Eval f2_eval(double s, int order, double tol) {
    F2Eval e;
    e.value = f2(s, order);
    e.order_gap = std::fabs(e.value - f2(s, std::max(20, order / 2)));
    e.converged = e.order_gap <= tol;
    return e;
}

double f2_direct_sum_det(double s, int order) {
    NystromGrid g = nystrom_grid(s, order);
    DenseMatrix<double> a = nystrom_matrix(g);
    const int n = static_cast<int>(g.x.size());
    DenseMatrix<double> block(2 * n, 2 * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            block(i, j) = a(i, j);
            block(n + i, n + j) = a(i, j);
        }
    SignLogDet d = sign_logdet(block);
    if (d.sign <= 0) return 0.0;
    return std::exp(d.log_abs);
}

}  // namespace ssm
