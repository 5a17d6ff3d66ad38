#include "ssm/gessel.hpp"

#include <algorithm>
#include <cmath>

namespace ssm {

double log_Z(const MeasureParams& sigma) {
    const double q = sigma.q();
    return sigma.m * static_cast<double>(sigma.n) * std::log((1.0 + q) / (1.0 - q));
}

Rational gessel_det_rational(const Specialization& x, const Specialization& y, int h) {
    auto qx = q_coeffs<Rational>(x, 2 * h);
    auto qy = q_coeffs<Rational>(y, 2 * h);
    return determinant_exact(gessel_matrix(qx, qy, h));
}

namespace {

Specialization alpha_of(const MeasureParams& sigma, bool rows) {
    // Exact dyadic image of the double alpha; identities hold for it verbatim.
    return Specialization::alpha_spec(rows ? sigma.m : sigma.n, Rational(sigma.alpha));
}

// log2 of the largest entry of the product matrix A D^2 A D^2, estimated
// from an extended-range q-table. The determinant keeps unit-scale
// information next to entries of this size, so the LU significand has to be
// wider than the scale; binary64 is only safe when the scale is small.
double probe_entry_scale(const Specialization& x, const Specialization& y, int cutoff) {
    auto qx = q_coeffs<XScalar>(x, cutoff);
    auto qy = q_coeffs<XScalar>(y, cutoff);
    double lq = 0.0;
    for (int k = 0; k <= cutoff; ++k) {
        if (!qx.q[k].is_zero()) lq = std::max(lq, qx.q[k].log2_abs());
        if (!qy.q[k].is_zero()) lq = std::max(lq, qy.q[k].log2_abs());
    }
    return 4.0 * lq + 2.0 * std::log2(cutoff + 2.0);
}

int probe_cutoff(const Specialization& x, const Specialization& y, int h) {
    // Large enough to see the q_k peak, which settles the scale estimate.
    return std::max({2 * h, 2 * x.size(), 2 * y.size(), 128});
}

ScalarMode resolve_mode(ScalarMode mode, const Specialization& x, const Specialization& y,
                        int h) {
    if (mode != ScalarMode::Auto) return mode;
    return probe_entry_scale(x, y, probe_cutoff(x, y, h)) > 24.0 ? ScalarMode::XFloat
                                                                 : ScalarMode::Float64;
}

long precision_for(const Specialization& x, const Specialization& y, int cutoff) {
    return static_cast<long>(probe_entry_scale(x, y, cutoff)) + 96;
}

SignLogDet gessel_logdet(const Specialization& x, const Specialization& y, int h,
                         ScalarMode mode) {
    if (mode == ScalarMode::XFloat) {
        MpPrecisionGuard guard(precision_for(x, y, probe_cutoff(x, y, h)));
        auto qx = q_coeffs<MpFloat>(x, 2 * h);
        auto qy = q_coeffs<MpFloat>(y, 2 * h);
        return sign_logdet(gessel_matrix(qx, qy, h));
    }
    auto qx = q_coeffs<double>(x, 2 * h);
    auto qy = q_coeffs<double>(y, 2 * h);
    return sign_logdet(gessel_matrix(qx, qy, h));
}

}  // namespace

RhsLog gessel_rhs_log(const Specialization& x, const Specialization& y, int h,
                      ScalarMode mode) {
    double lz = 0.0;
    for (const auto& xi : x.values())
        for (const auto& yj : y.values()) {
            double p = to_double(xi) * to_double(yj);
            lz += std::log((1.0 + p) / (1.0 - p));
        }
    SignLogDet det = gessel_logdet(x, y, h, resolve_mode(mode, x, y, h));
    if (det.sign < 0) {
        if (det.log_abs - 2.0 * lz > std::log(1e-10))
            throw std::runtime_error("gessel_rhs: determinant negative beyond tolerance");
        return {-std::numeric_limits<double>::infinity(), true};
    }
    if (det.sign == 0) return {-std::numeric_limits<double>::infinity(), true};
    return {0.5 * det.log_abs, false};
}

template <class T>
PartitionSum<T> gessel_lhs(const Specialization& x, const Specialization& y, int h, int N) {
    if (h < 0 || N < 0) throw std::invalid_argument("gessel_lhs: h, N >= 0");
    auto qx = q_coeffs<T>(x, N);
    auto qy = q_coeffs<T>(y, N);
    T capped(0), all(0);
    for (const auto& lambda : enumerate_strict_bounded(N, N)) {
        // Q_lambda vanishes once the length exceeds the variable count.
        if (lambda.length() > std::min(x.size(), y.size())) continue;
        T term = Q_lambda(qx, lambda) * P_lambda(qy, lambda);
        all += term;
        if (lambda.largest() <= h) capped += term;
    }
    T z = z_product<T>(x, y);
    return {capped, z - all};
}

namespace {

template <class T>
double cdf_from_tables(const QCoeffTable<T>& qx, const QCoeffTable<T>& qy, int h, double lz) {
    SignLogDet det = sign_logdet(gessel_matrix(qx, qy, h));
    if (det.sign < 0) {
        if (det.log_abs - 2.0 * lz > std::log(1e-10))
            throw std::runtime_error("cdf_exact: determinant negative beyond tolerance");
        return 0.0;
    }
    if (det.sign == 0) return 0.0;
    double cdf = std::exp(0.5 * det.log_abs - lz);
    if (cdf > 1.0 + 1e-9)
        throw std::runtime_error("cdf_exact: probability exceeds 1 beyond slack");
    return std::min(cdf, 1.0);
}

template <class T>
class CdfEvaluator {
public:
    explicit CdfEvaluator(const MeasureParams& sigma)
        : x_(alpha_of(sigma, true)), y_(alpha_of(sigma, false)), lz_(log_Z(sigma)) {}

    double at(int h) {
        ensure(h);
        if constexpr (std::is_same_v<T, MpFloat>) {
            MpPrecisionGuard guard(prec_);
            return cdf_from_tables(qx_, qy_, h, lz_);
        } else {
            return cdf_from_tables(qx_, qy_, h, lz_);
        }
    }

private:
    void ensure(int h) {
        if (2 * h <= cutoff_) return;
        cutoff_ = std::max(2 * h, std::max(64, 2 * cutoff_));
        if constexpr (std::is_same_v<T, MpFloat>) {
            prec_ = precision_for(x_, y_, std::max(cutoff_, probe_cutoff(x_, y_, 0)));
            MpPrecisionGuard guard(prec_);
            qx_ = q_coeffs<T>(x_, cutoff_);
            qy_ = q_coeffs<T>(y_, cutoff_);
        } else {
            qx_ = q_coeffs<T>(x_, cutoff_);
            qy_ = q_coeffs<T>(y_, cutoff_);
        }
    }

    Specialization x_, y_;
    double lz_;
    int cutoff_ = -1;
    long prec_ = 128;
    QCoeffTable<T> qx_, qy_;
};

}  // namespace

double cdf_exact(const MeasureParams& sigma, int h, ScalarMode mode) {
    if (h < 0) throw std::invalid_argument("cdf_exact: h >= 0");
    Specialization x = alpha_of(sigma, true);
    Specialization y = alpha_of(sigma, false);
    if (resolve_mode(mode, x, y, h) == ScalarMode::XFloat)
        return CdfEvaluator<MpFloat>(sigma).at(h);
    return CdfEvaluator<double>(sigma).at(h);
}

std::vector<std::pair<int, double>> cdf_curve(const MeasureParams& sigma, double eps,
                                              ScalarMode mode, int h_ceiling) {
    if (!(eps > 0.0)) throw std::invalid_argument("cdf_curve: eps > 0");
    std::vector<std::pair<int, double>> curve;
    auto run = [&](auto evaluator) {
        for (int h = 0;; ++h) {
            if (h > h_ceiling) throw std::runtime_error("cdf_curve: h ceiling exceeded");
            double c = evaluator.at(h);
            curve.emplace_back(h, c);
            if (c >= 1.0 - eps) break;
        }
    };
    // The mode probe at the bulk scale settles which backing the whole curve
    // needs; q_k decays past its peak, so the estimate is h-stable.
    Specialization x = alpha_of(sigma, true);
    Specialization y = alpha_of(sigma, false);
    if (resolve_mode(mode, x, y, 2 * sigma.m + 2 * sigma.n) == ScalarMode::XFloat)
        run(CdfEvaluator<MpFloat>(sigma));
    else
        run(CdfEvaluator<double>(sigma));
    return curve;
}

namespace {

using Mat = DenseMatrix<double>;

Mat build_toeplitz(const std::vector<double>& sym, int offset, int rows, int cols) {
    // sym[offset + n] holds the symbol coefficient at index n.
    Mat t(rows, cols, 0.0);
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k) t(j, k) = sym[offset + j - k];
    return t;
}

Mat build_hankel(const std::vector<double>& sym, int offset, int rows, int cols) {
    Mat h(rows, cols, 0.0);
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k) h(j, k) = sym[offset + j + k + 1];
    return h;
}

double frobenius(const Mat& m, int window) {
    double s = 0.0;
    for (int i = 0; i < window; ++i)
        for (int j = 0; j < window; ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

OperatorResiduals operator_residuals(const Specialization& x, const Specialization& y, int M) {
    if (M < 1 || M > 512) throw std::invalid_argument("operator_residuals: 1 <= M <= 512");
    if (!x.strict_interior() || !y.strict_interior())
        throw std::invalid_argument("operator_residuals: specialization values must be < 1");

    // Work size: operators are built at size W = 2M+2 and residuals read off
    // the M x M window; symbol lines extend to 2W so Hankel entries up to
    // index 2W-1 exist. Geometric decay of q_k makes all tails negligible.
    const int W = 2 * M + 2;
    const int NL = 2 * W;  // half-width of coefficient lines
    auto qx = q_coeffs<double>(x, NL).q;
    auto qy = q_coeffs<double>(y, NL).q;

    // Symbols as coefficient lines sym[offset+n], n in [-NL, NL].
    const int off = NL;
    auto line = [&](auto&& coeff) {
        std::vector<double> c(2 * NL + 1, 0.0);
        for (int n = -NL; n <= NL; ++n) c[off + n] = coeff(n);
        return c;
    };
    auto sgn = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };

    auto Qx_line = line([&](int n) { return n >= 0 ? qx[n] : 0.0; });
    auto Qx_inv_line = line([&](int n) { return n >= 0 ? sgn(n) * qx[n] : 0.0; });
    auto Qx_tilde_line = line([&](int n) { return n <= 0 ? qx[-n] : 0.0; });
    auto Qx_tilde_inv_line = line([&](int n) { return n <= 0 ? sgn(n) * qx[-n] : 0.0; });
    auto Qy_tilde_line = line([&](int n) { return n <= 0 ? qy[-n] : 0.0; });
    auto Qy_tilde_inv_line = line([&](int n) { return n <= 0 ? sgn(n) * qy[-n] : 0.0; });
    auto Qy_line = line([&](int n) { return n >= 0 ? qy[n] : 0.0; });
    auto Qy_inv_line = line([&](int n) { return n >= 0 ? sgn(n) * qy[n] : 0.0; });

    // phi1 = Qx * tilde(Qy)^-1, phi2 = Qy * tilde(Qx)^-1 by convolution.
    auto convolve = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> c(2 * NL + 1, 0.0);
        for (int n = -NL; n <= NL; ++n) {
            double s = 0.0;
            for (int k = std::max(-NL, n - NL); k <= std::min(NL, n + NL); ++k)
                s += a[off + k] * b[off + n - k];
            c[off + n] = s;
        }
        return c;
    };
    auto phi1 = convolve(Qx_line, Qy_tilde_inv_line);
    auto phi2 = convolve(Qy_line, Qx_tilde_inv_line);

    auto J = [&](int d) {
        Mat j(d, d, 0.0);
        for (int i = 0; i < d; ++i) j(i, i) = i % 2 == 0 ? 1.0 : -1.0;
        return j;
    };

    // Everything is built at size W and residuals are read off the M x M
    // window, so product truncation stays far from the reported entries.
    Mat Lx = build_hankel(Qx_line, off, W, W) * build_toeplitz(Qx_tilde_inv_line, off, W, W) * J(W);
    Mat Lx2 = J(W) * build_hankel(Qx_inv_line, off, W, W) * build_toeplitz(Qx_tilde_line, off, W, W);
    Mat Ly = build_hankel(Qy_line, off, W, W) * build_toeplitz(Qy_tilde_inv_line, off, W, W) * J(W);

    OperatorResiduals out{};
    out.r1 = frobenius(Lx + Lx2, M);
    out.r2 = frobenius(Lx - Lx.transposed(), M);

    {  // Lam* L + L Lam - (q (x) q - e (x) e)
        Mat r(M, M, 0.0);
        for (int j = 0; j < M; ++j)
            for (int k = 0; k < M; ++k) {
                double v = (j > 0 ? Lx(j - 1, k) : 0.0) + (k > 0 ? Lx(j, k - 1) : 0.0);
                v -= qx[j] * qx[k];
                if (j == 0 && k == 0) v += 1.0;
                r(j, k) = v;
            }
        out.r3 = frobenius(r, M);
    }

    {  // (I + Lx Ly)(I - H1 H2) - I
        Mat H1 = build_hankel(phi1, off, W, W);
        Mat H2 = build_hankel(phi2, off, W, W);
        Mat lhs = (Mat::identity(W) + Lx * Ly) * (Mat::identity(W) - H1 * H2) - Mat::identity(W);
        out.r4 = frobenius(lhs, M);
    }

    {
        // The scalars are alternating sums whose terms reach the square of
        // the q_k peak while the results are O(1); they need a significand
        // wider than that peak, unlike the M x M residual windows above.
        auto px = q_coeffs<XScalar>(x, NL);
        auto py = q_coeffs<XScalar>(y, NL);
        double lq = 0.0;
        for (int k = 0; k <= NL; ++k) {
            if (!px.q[k].is_zero()) lq = std::max(lq, px.q[k].log2_abs());
            if (!py.q[k].is_zero()) lq = std::max(lq, py.q[k].log2_abs());
        }
        MpPrecisionGuard guard(static_cast<long>(2.0 * lq) + 96);
        auto qmx = q_coeffs<MpFloat>(x, NL);
        auto qmy = q_coeffs<MpFloat>(y, NL);
        MpFloat t(0.0);
        for (int k = 0; k <= NL; ++k) {
            MpFloat term = qmx.q[k] * qmy.q[k];
            if (k % 2)
                t -= term;
            else
                t += term;
        }
        auto phi_mp = [&](const QCoeffTable<MpFloat>& qa, const QCoeffTable<MpFloat>& qb,
                          int r) {
            // coefficient r of Q_a(z) tilde(Q_b)^-1(z)
            MpFloat c(0.0);
            for (int j = 0; j + r <= NL; ++j) {
                MpFloat term = qb.q[j] * qa.q[j + r];
                if (j % 2)
                    c -= term;
                else
                    c += term;
            }
            return c;
        };
        MpFloat h(0.0);
        for (int r = 1; r <= NL; ++r) h += phi_mp(qmx, qmy, r) * phi_mp(qmy, qmx, r);
        out.t = t.to_double();
        out.h_scalar = h.to_double();
    }
    return out;
}

template PartitionSum<Rational> gessel_lhs<Rational>(const Specialization&, const Specialization&,
                                                     int, int);
template PartitionSum<double> gessel_lhs<double>(const Specialization&, const Specialization&,
                                                 int, int);
template PartitionSum<XScalar> gessel_lhs<XScalar>(const Specialization&, const Specialization&,
                                                   int, int);

}  // namespace ssm
