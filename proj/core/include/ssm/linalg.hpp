#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "ssm/matrix.hpp"
#include "ssm/rational.hpp"
#include "ssm/xscalar.hpp"

namespace ssm {

inline double log_abs_value(double x) { return std::log(std::fabs(x)); }
inline double log_abs_value(const XScalar& x) { return x.log_abs(); }

namespace detail {

template <class T>
int abs_compare(const T& a, const T& b) {
    using std::abs;
    T aa = abs(a), ab = abs(b);
    if (aa < ab) return -1;
    if (ab < aa) return 1;
    return 0;
}
inline int abs_compare(const XScalar& a, const XScalar& b) { return XScalar::abs_compare(a, b); }

template <class T>
bool is_zero(const T& x) {
    return x == T(0);
}
inline bool is_zero(const XScalar& x) { return x.is_zero(); }

}  // namespace detail

// Pfaffian of an even-dimensional antisymmetric matrix by blocked Gaussian
// congruence with pivoting (Parlett-Reid style). Exact over Rational,
// O(d^3) in every scalar mode.
template <class T>
T pfaffian(const AntisymmetricMatrix<T>& am) {
    const std::size_t d = am.dim();
    if (d % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    if (d == 0) return T(1);

    DenseMatrix<T> a = am.dense();
    T pf(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < d; k += 2) {
        // Largest |a(i,k)|, i > k, becomes the (k+1,k) pivot.
        std::size_t p = k + 1;
        for (std::size_t i = k + 2; i < d; ++i)
            if (detail::abs_compare(a(i, k), a(p, k)) > 0) p = i;
        if (detail::is_zero(a(p, k))) return T(0);
        if (p != k + 1) {
            for (std::size_t j = 0; j < d; ++j) std::swap(a(p, j), a(k + 1, j));
            for (std::size_t j = 0; j < d; ++j) std::swap(a(j, p), a(j, k + 1));
            sign = -sign;
        }
        const T piv = a(k, k + 1);
        for (std::size_t i = k + 2; i < d; ++i) {
            // row_i += (a(i,k)/piv) row_{k+1} - (a(i,k+1)/piv) row_k, mirrored on columns,
            // zeroing columns k and k+1 below row k+1.
            T f1 = a(i, k) / piv;
            T f2 = a(i, k + 1) / piv;
            for (std::size_t j = 0; j < d; ++j) a(i, j) += f1 * a(k + 1, j) - f2 * a(k, j);
            for (std::size_t j = 0; j < d; ++j) a(j, i) += f1 * a(j, k + 1) - f2 * a(j, k);
        }
        pf *= piv;
    }
    if (sign < 0) pf = -pf;
    return pf;
}

struct SignLogDet {
    int sign = 0;        // 0 means singular
    double log_abs = -std::numeric_limits<double>::infinity();
};

// LU with partial pivoting, accumulating log|pivot| and sign flips, so the
// determinant never leaves log space. T is a float mode (double, XScalar, or
// an extended-precision scalar providing log_abs_value).
template <class T>
SignLogDet sign_logdet(DenseMatrix<T> m) {
    static_assert(!std::is_same_v<T, Rational>, "sign_logdet: float modes only");
    if (m.rows() != m.cols()) throw std::invalid_argument("sign_logdet: matrix not square");
    const std::size_t n = m.rows();
    if constexpr (std::is_same_v<T, double>) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!std::isfinite(m(i, j)))
                    throw std::invalid_argument("sign_logdet: non-finite entry");
    }
    SignLogDet out;
    out.sign = 1;
    out.log_abs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (detail::abs_compare(m(i, k), m(p, k)) > 0) p = i;
        if (detail::is_zero(m(p, k))) return SignLogDet{};
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            out.sign = -out.sign;
        }
        const T piv = m(k, k);
        out.log_abs += log_abs_value(piv);
        if (piv < T(0)) out.sign = -out.sign;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (detail::is_zero(m(i, k))) continue;
            T f = m(i, k) / piv;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return out;
}

// Exact determinant over a field scalar (used in Rational mode).
template <class T>
T determinant_exact(DenseMatrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant_exact: matrix not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && detail::is_zero(m(p, k))) ++p;
        if (p == n) return T(0);
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(p, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (detail::is_zero(m(i, k))) continue;
            T f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

// Conversion used when exact Gessel-mode results have to be compared against
// float-mode evaluations at scales beyond binary64.
inline XScalar xscalar_from_bigint(const BigInt& v) {
    using boost::multiprecision::msb;
    if (v == 0) return XScalar();
    BigInt a = v < 0 ? BigInt(-v) : v;
    std::int64_t bits = static_cast<std::int64_t>(msb(a));  // floor(log2 a)
    std::int64_t shift = bits - 63;
    double top;
    if (shift > 0)
        top = static_cast<double>((a >> shift).convert_to<std::uint64_t>());
    else
        top = a.convert_to<double>();
    XScalar x(top);
    if (shift > 0) x = XScalar::from_parts(x.sign(), x.significand(), x.exponent() + shift);
    return v < 0 ? -x : x;
}

inline XScalar xscalar_from_rational(const Rational& r) {
    return xscalar_from_bigint(numerator(r)) / xscalar_from_bigint(denominator(r));
}

}  // namespace ssm
