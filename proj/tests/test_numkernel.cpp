#include <doctest.h>

#include <cmath>
#include <random>

#include "ssm/linalg.hpp"
#include "ssm/matrix.hpp"
#include "ssm/quadrature.hpp"
#include "ssm/rational.hpp"
#include "ssm/xscalar.hpp"

using namespace ssm;

namespace {

// Independent determinant oracle: per-row denominator clearing followed by
// fraction-free (Bareiss) elimination over big integers.
Rational bareiss_det(const DenseMatrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l(1);
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
        scale *= Rational(1, l);
    }
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1]) * scale;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

AntisymmetricMatrix<Rational> random_antisymmetric(std::size_t d, std::mt19937& rng) {
    AntisymmetricMatrix<Rational> a(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) a.set(i, j, random_rational(rng));
    return a;
}

}  // namespace

TEST_CASE("rational canonical form") {
    Rational r = Rational(6) / Rational(-4);
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(rational_from_decimal("0.25") == Rational(1, 4));
    CHECK(rational_from_decimal("-1.5") == Rational(-3, 2));
    CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
}

TEST_CASE("xscalar matches binary64 where both representable") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int it = 0; it < 2000; ++it) {
        double a = u(rng), b = u(rng);
        XScalar xa(a), xb(b);
        CHECK((xa + xb).to_double() == doctest::Approx(a + b).epsilon(1e-15));
        CHECK((xa - xb).to_double() == doctest::Approx(a - b).epsilon(1e-15));
        CHECK((xa * xb).to_double() == doctest::Approx(a * b).epsilon(1e-15));
        if (b != 0.0) CHECK((xa / xb).to_double() == doctest::Approx(a / b).epsilon(1e-15));
        CHECK((xa < xb) == (a < b));
    }
}

TEST_CASE("xscalar extended range") {
    XScalar x(2.0);
    XScalar acc(1.0);
    for (int i = 0; i < 5000; ++i) acc *= x;  // 2^5000, far beyond binary64
    CHECK(acc.exponent() == 5000);
    CHECK(acc.significand() == doctest::Approx(1.0));
    CHECK(acc.log2_abs() == doctest::Approx(5000.0));
    XScalar tiny = XScalar(1.0) / acc;
    CHECK(tiny.log2_abs() == doctest::Approx(-5000.0));
    // Addends more than 80 binary orders below the larger one are dropped.
    XScalar big = XScalar::from_parts(1, 1.0, 200);
    XScalar small = XScalar::from_parts(1, 1.5, 110);
    CHECK((big + small) == big);
    XScalar kept = XScalar::from_parts(1, 1.5, 160);
    CHECK((big + kept) > big);
    CHECK(XScalar(0.0).is_zero());
    CHECK((XScalar(1.0) + XScalar(-1.0)).is_zero());
}

TEST_CASE("xscalar exponent range") {
    // |log2 value| up to 2^60 stays representable
    XScalar huge = XScalar::from_parts(1, 1.5, 1ll << 60);
    XScalar tiny = XScalar::from_parts(1, 1.5, -(1ll << 60));
    CHECK(huge.log2_abs() == doctest::Approx(std::pow(2.0, 60)).epsilon(1e-15));
    CHECK(tiny.log2_abs() == doctest::Approx(-std::pow(2.0, 60)).epsilon(1e-15));
    CHECK((huge * tiny).log2_abs() == doctest::Approx(std::log2(1.5 * 1.5)));
    CHECK(tiny < huge);
    CHECK(huge.to_double() == std::numeric_limits<double>::infinity());
    CHECK(tiny.to_double() == 0.0);
}

TEST_CASE("xscalar from rational") {
    Rational r(1, 3);
    CHECK(xscalar_from_rational(r).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    BigInt huge = BigInt(1) << 400;
    XScalar x = xscalar_from_bigint(huge * 3);
    CHECK(x.log2_abs() == doctest::Approx(400.0 + std::log2(3.0)));
}

TEST_CASE("pfaffian small cases") {
    AntisymmetricMatrix<Rational> a2(2);
    a2.set(0, 1, Rational(7, 3));
    CHECK(pfaffian(a2) == Rational(7, 3));

    // pf = a12 a34 - a13 a24 + a14 a23 = 6 - 10 + 12 = 8
    AntisymmetricMatrix<Rational> a4(4);
    a4.set(0, 1, Rational(1));
    a4.set(0, 2, Rational(2));
    a4.set(0, 3, Rational(3));
    a4.set(1, 2, Rational(4));
    a4.set(1, 3, Rational(5));
    a4.set(2, 3, Rational(6));
    CHECK(pfaffian(a4) == Rational(8));

    AntisymmetricMatrix<Rational> odd(3);
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);

    DenseMatrix<Rational> bad(2, 2, Rational(0));
    bad(0, 1) = Rational(1);
    bad(1, 0) = Rational(1);
    CHECK_THROWS_AS(AntisymmetricMatrix<Rational>::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("pfaffian squared equals determinant") {
    std::mt19937 rng(11);
    for (int it = 0; it < 20; ++it) {
        auto a = random_antisymmetric(6, rng);
        Rational pf = pfaffian(a);
        CHECK(pf * pf == bareiss_det(a.dense()));
    }
    // odd-sized principal structure via 8x8 as well
    auto a8 = random_antisymmetric(8, rng);
    CHECK(pfaffian(a8) * pfaffian(a8) == bareiss_det(a8.dense()));
}

TEST_CASE("pfaffian congruence pf(B^T A B) = det(B) pf(A)") {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        auto a = random_antisymmetric(4, rng);
        DenseMatrix<Rational> b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) b(i, j) = random_rational(rng);
        DenseMatrix<Rational> btab = b.transposed() * a.dense() * b;
        auto c = AntisymmetricMatrix<Rational>::from_matrix(btab);
        CHECK(pfaffian(c) == bareiss_det(b) * pfaffian(a));
    }
}

TEST_CASE("pfaffian float modes") {
    std::mt19937 rng(17);
    for (int it = 0; it < 10; ++it) {
        auto a = random_antisymmetric(6, rng);
        AntisymmetricMatrix<double> ad(6);
        AntisymmetricMatrix<XScalar> ax(6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) {
                ad.set(i, j, to_double(a(i, j)));
                ax.set(i, j, xscalar_from_rational(a(i, j)));
            }
        double exact = to_double(pfaffian(a));
        CHECK(pfaffian(ad) == doctest::Approx(exact).epsilon(1e-12));
        CHECK(pfaffian(ax).to_double() == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("sign_logdet basics") {
    auto id = DenseMatrix<double>::identity(5);
    auto r = sign_logdet(id);
    CHECK(r.sign == 1);
    CHECK(r.log_abs == doctest::Approx(0.0));

    DenseMatrix<double> d(2, 2, 0.0);
    d(0, 0) = 2.0;
    d(1, 1) = 3.0;
    r = sign_logdet(d);
    CHECK(r.sign == 1);
    CHECK(r.log_abs == doctest::Approx(std::log(6.0)));

    DenseMatrix<double> sing(2, 2, 1.0);
    CHECK(sign_logdet(sing).sign == 0);

    DenseMatrix<double> nan(1, 1, std::nan(""));
    CHECK_THROWS_AS(sign_logdet(nan), std::invalid_argument);
}

TEST_CASE("sign_logdet matches exact rational determinant") {
    std::mt19937 rng(19);
    for (int it = 0; it < 10; ++it) {
        DenseMatrix<Rational> m(8, 8);
        DenseMatrix<double> md(8, 8);
        DenseMatrix<XScalar> mx(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                m(i, j) = random_rational(rng);
                md(i, j) = to_double(m(i, j));
                mx(i, j) = xscalar_from_rational(m(i, j));
            }
        Rational exact = bareiss_det(m);
        CHECK(determinant_exact(m) == exact);
        if (exact == 0) continue;
        double expect = to_double(exact);
        for (auto r : {sign_logdet(md), sign_logdet(mx)}) {
            CHECK(r.sign == (expect > 0 ? 1 : -1));
            CHECK(r.sign * std::exp(r.log_abs) == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("sign_logdet permutation parity") {
    std::mt19937 rng(23);
    DenseMatrix<double> m(6, 6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) m(i, j) = u(rng);
    auto base = sign_logdet(m);
    // swap two rows: sign flips, magnitude unchanged
    DenseMatrix<double> sw = m;
    for (std::size_t j = 0; j < 6; ++j) std::swap(sw(1, j), sw(4, j));
    auto swapped = sign_logdet(sw);
    CHECK(swapped.sign == -base.sign);
    CHECK(swapped.log_abs == doctest::Approx(base.log_abs).epsilon(1e-12));
}

TEST_CASE("gauss_legendre two point rule") {
    auto rule = gauss_legendre(2);
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(rule.weights[0] == doctest::Approx(1.0));
    CHECK(rule.weights[1] == doctest::Approx(1.0));
    double integral = 0.0;
    for (int i = 0; i < 2; ++i) integral += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    CHECK(integral == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss_legendre exact on degree 2n-1") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {5, 20, 64}) {
        auto rule = gauss_legendre(n);
        std::vector<double> coef(2 * n);
        for (auto& c : coef) c = u(rng);
        // symbolic antiderivative: integral of sum c_k x^k = sum c_k (1-(-1)^{k+1})/(k+1)
        double exact = 0.0;
        for (int k = 0; k < 2 * n; ++k)
            if (k % 2 == 0) exact += coef[k] * 2.0 / (k + 1);
        double quad = 0.0;
        for (int i = 0; i < n; ++i) {
            double p = 0.0;
            for (int k = 2 * n - 1; k >= 0; --k) p = p * rule.nodes[i] + coef[k];
            quad += rule.weights[i] * p;
        }
        CHECK(quad == doctest::Approx(exact).epsilon(1e-13));
    }
}
