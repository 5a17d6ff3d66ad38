#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssm/linalg.hpp"
#include "ssm/matrix.hpp"
#include "ssm/mpfloat.hpp"
#include "ssm/partitions.hpp"
#include "ssm/rational.hpp"
#include "ssm/xscalar.hpp"

namespace ssm {

template <class T>
T scalar_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
        return r;
    else if constexpr (std::is_same_v<T, XScalar>)
        return xscalar_from_rational(r);
    else if constexpr (std::is_same_v<T, MpFloat>)
        return MpFloat::from_rational(r);
    else
        return to_double(r);
}

// Finite nonnegative specialization x_1..x_m in [0,1]. Values are kept exact;
// float modes convert on use. Evaluation at 1 is allowed only for tableau
// counting, never for measures, hence the strict-interior flag.
class Specialization {
public:
    Specialization() = default;
    explicit Specialization(std::vector<Rational> values);

    static Specialization alpha_spec(int m, const Rational& alpha);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<Rational>& values() const { return values_; }
    bool strict_interior() const { return strict_interior_; }

    template <class T>
    std::vector<T> values_as() const {
        std::vector<T> v;
        v.reserve(values_.size());
        for (const auto& r : values_) v.push_back(scalar_from_rational<T>(r));
        return v;
    }

private:
    std::vector<Rational> values_;
    bool strict_interior_ = true;
};

// Taylor coefficients q_0..q_K of prod_i (1+t x_i)/(1-t x_i).
template <class T>
struct QCoeffTable {
    int cutoff = 0;       // K
    std::vector<T> q;     // size K+1, q[0] = 1
    const T& at(int k) const {
        if (k < 0 || k > cutoff)
            throw std::invalid_argument("QCoeffTable: cutoff too small for requested index");
        return q[k];
    }
};

template <class T>
QCoeffTable<T> q_coeffs(const Specialization& spec, int cutoff);

// Two-row Schur Q-function from the q-expansion: for r > s >= 0,
// Q_(r,s) = q_r q_s + 2 sum_{i=1..s} (-1)^i q_{r+i} q_{s-i},
// extended antisymmetrically to r <= s.
template <class T>
T Q_rs(const QCoeffTable<T>& qc, int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("Q_rs: negative index");
    if (r == s) return T(0);
    if (r < s) return -Q_rs(qc, s, r);
    if (r + s > qc.cutoff)
        throw std::invalid_argument("Q_rs: cutoff too small, need q up to index r+s");
    T acc = qc.at(r) * qc.at(s);
    T two(2);
    for (int i = 1; i <= s; ++i) {
        T term = two * qc.at(r + i) * qc.at(s - i);
        if (i % 2 == 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// Q_lambda as the pfaffian of M_lambda = (Q_(lambda_i, lambda_j)), with a
// trailing zero part appended when the length is odd.
template <class T>
T Q_lambda(const QCoeffTable<T>& qc, const StrictPartition& lambda) {
    if (lambda.empty()) return T(1);
    std::vector<int> parts = lambda.parts();
    if (parts.size() % 2 == 1) parts.push_back(0);
    const std::size_t d = parts.size();
    AntisymmetricMatrix<T> m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) m.set(i, j, Q_rs(qc, parts[i], parts[j]));
    return pfaffian(m);
}

template <class T>
T P_lambda(const QCoeffTable<T>& qc, const StrictPartition& lambda) {
    T p = Q_lambda(qc, lambda);
    T half = T(1) / T(2);
    for (int i = 0; i < lambda.length(); ++i) p *= half;
    return p;
}

// One cell of a generalized shifted tableau; marked means primed.
struct TableauCell {
    int value = 0;
    bool marked = false;
};
using TableauRows = std::vector<std::vector<TableauCell>>;

// Checks the shifted-tableau rules: weakly increasing rows and columns in the
// marked order 1' < 1 < 2' < 2 < ..., at most one k' per row, at most one
// unmarked k per column.
bool is_valid_shifted_tableau(const StrictPartition& lambda, const TableauRows& rows);

// Exponent of x_v in x^T, indexed by value v (1-based position v-1).
std::vector<int> tableau_value_counts(const TableauRows& rows, int max_value);

// Generating-function route: sum of x^T over all shifted tableaux of shape
// lambda in the letters 1*..m*. Enumeration guard: |lambda| <= 12, m <= 6.
template <class T>
T Q_lambda_comb(const Specialization& spec, const StrictPartition& lambda);

// Number of standard shifted tableaux of shape lambda (|lambda| = n):
// n!/(lambda_1! ... lambda_l!) * prod_{i<j} (lambda_i-lambda_j)/(lambda_i+lambda_j).
std::int64_t count_standard_shifted(const StrictPartition& lambda);

// Number of shifted tableaux of shape lambda in the letters 1*..n*, i.e.
// Q_lambda at n ones. Same guard as Q_lambda_comb.
std::int64_t d_s(const StrictPartition& lambda, int letters);

extern template QCoeffTable<Rational> q_coeffs<Rational>(const Specialization&, int);
extern template QCoeffTable<double> q_coeffs<double>(const Specialization&, int);
extern template QCoeffTable<XScalar> q_coeffs<XScalar>(const Specialization&, int);
extern template QCoeffTable<MpFloat> q_coeffs<MpFloat>(const Specialization&, int);
extern template Rational Q_lambda_comb<Rational>(const Specialization&, const StrictPartition&);
extern template double Q_lambda_comb<double>(const Specialization&, const StrictPartition&);

}  // namespace ssm
