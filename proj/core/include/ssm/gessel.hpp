#pragma once

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "ssm/linalg.hpp"
#include "ssm/mpfloat.hpp"
#include "ssm/matrix.hpp"
#include "ssm/sampler.hpp"
#include "ssm/schurq.hpp"

namespace ssm {

enum class ScalarMode { Auto, Float64, XFloat };

// log of Z = prod_{i<=m, j<=n} (1+alpha^2)/(1-alpha^2).
double log_Z(const MeasureParams& sigma);

// Z for general finite specializations, in the requested scalar mode.
template <class T>
T z_product(const Specialization& x, const Specialization& y) {
    T z(1);
    auto xs = x.values_as<T>();
    auto ys = y.values_as<T>();
    for (const auto& xi : xs)
        for (const auto& yj : ys) z *= (T(1) + xi * yj) / (T(1) - xi * yj);
    return z;
}

// A_h: (h+1)x(h+1) antisymmetric matrix with A(r,0) = q_r, A(r,s) = Q_(r,s).
template <class T>
AntisymmetricMatrix<T> build_A(const QCoeffTable<T>& qc, int h) {
    if (h < 0) throw std::invalid_argument("build_A: h >= 0");
    if (qc.cutoff < 2 * h) throw std::invalid_argument("build_A: need q up to index 2h");
    AntisymmetricMatrix<T> a(h + 1);
    for (int r = 1; r <= h; ++r) a.set(r, 0, qc.at(r));
    for (int r = 1; r <= h; ++r)
        for (int s = r + 1; s <= h; ++s) a.set(r, s, Q_rs(qc, r, s));
    return a;
}

// K_h = diag(1, 1/sqrt2, ...) A_h diag(1, 1/sqrt2, ...). Float modes only;
// rational verification goes through build_A and the D^2 similarity.
template <class T>
AntisymmetricMatrix<T> build_K(const QCoeffTable<T>& qc, int h) {
    static_assert(!std::is_same_v<T, Rational>, "build_K: 1/sqrt2 is not rational");
    auto a = build_A(qc, h);
    AntisymmetricMatrix<T> k(h + 1);
    const T inv_sqrt2 = T(1) / T(std::sqrt(2.0));
    const T half = T(1) / T(2);
    for (int r = 0; r <= h; ++r)
        for (int s = r + 1; s <= h; ++s) {
            T scale = (r == 0) ? inv_sqrt2 : half;
            k.set(r, s, scale * a(r, s));
        }
    return k;
}

// I - A_h(x) D^2 A_h(y) D^2 with D^2 = diag(1, 1/2, ..., 1/2), similar to
// I - K_h(x) K_h(y) and free of square roots.
template <class T>
DenseMatrix<T> gessel_matrix(const QCoeffTable<T>& qx, const QCoeffTable<T>& qy, int h) {
    auto ax = build_A(qx, h);
    auto ay = build_A(qy, h);
    const int d = h + 1;
    const T half = T(1) / T(2);
    DenseMatrix<T> prod(d, d, T(0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            T aik = ax(i, k);
            if (k > 0) aik *= half;  // D^2 between the factors
            if (detail::is_zero(aik)) continue;
            for (int j = 0; j < d; ++j) prod(i, j) += aik * ay(k, j);
        }
    DenseMatrix<T> m = DenseMatrix<T>::identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            T v = prod(i, j);
            if (j > 0) v *= half;
            m(i, j) -= v;
        }
    return m;
}

// det(I - K_h(x) K_h(y)) exactly (rational verification route).
Rational gessel_det_rational(const Specialization& x, const Specialization& y, int h);

// Right side of the Gessel identity, det(I - K_h(x) K_h(y))^{1/2}, as a log.
// clamped reports a tiny negative determinant rounded up to zero; negative
// determinants beyond -1e-10 relative to Z^2 raise a numerical failure.
struct RhsLog {
    double log_value;  // log of the positive square root; -inf if clamped
    bool clamped = false;
};
RhsLog gessel_rhs_log(const Specialization& x, const Specialization& y, int h,
                      ScalarMode mode = ScalarMode::Auto);

// Partition-sum side: sum over strict lambda with lambda_1 <= h, |lambda| <= N
// of Q_lambda(x) P_lambda(y), plus the nonnegative tail majorant
// Z - sum_{|lambda| <= N} Q_lambda P_lambda.
template <class T>
struct PartitionSum {
    T value;
    T tail;
};
template <class T>
PartitionSum<T> gessel_lhs(const Specialization& x, const Specialization& y, int h, int N);

// P(lambda_1 <= h) = exp(logdet/2 - log Z). Nondecreasing in h, in [0,1]
// up to 1e-9 slack.
double cdf_exact(const MeasureParams& sigma, int h, ScalarMode mode = ScalarMode::Auto);

// cdf_exact for h = 0,1,... until cdf >= 1 - eps; one q-table is grown
// geometrically and shared across the curve.
std::vector<std::pair<int, double>> cdf_curve(const MeasureParams& sigma, double eps,
                                              ScalarMode mode = ScalarMode::Auto,
                                              int h_ceiling = 4096);

// Frobenius residuals of the Toeplitz/Hankel operator identities behind the
// Fredholm analysis, on M x M truncations, plus the scalars t = (T1 e, e)
// and h = (H1 H2 e, e).
struct OperatorResiduals {
    double r1;        // equality of the two L representations
    double r2;        // symmetry of L
    double r3;        // shift identity Lam* L + L Lam = q (x) q - e (x) e
    double r4;        // (I + Lx Ly)(I - H1 H2) = I
    double t;         // -> 0 as n grows
    double h_scalar;  // -> 1/2 as n grows
};
OperatorResiduals operator_residuals(const Specialization& x, const Specialization& y, int M);

extern template PartitionSum<Rational> gessel_lhs<Rational>(const Specialization&,
                                                            const Specialization&, int, int);
extern template PartitionSum<double> gessel_lhs<double>(const Specialization&,
                                                        const Specialization&, int, int);
extern template PartitionSum<XScalar> gessel_lhs<XScalar>(const Specialization&,
                                                          const Specialization&, int, int);

}  // namespace ssm
