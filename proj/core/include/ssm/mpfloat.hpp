#pragma once

#include <mpfr.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "ssm/rational.hpp"

namespace ssm {

// Fixed-precision MPFR scalar. The Gessel determinant mixes entries of
// magnitude ~2^(2 log2 K) with unit-scale information, so its LU needs a
// significand wider than the entry scale; precision is chosen per problem
// from the probed entry magnitudes.
class MpFloat {
public:
    MpFloat() { mpfr_init2(v_, default_prec_); mpfr_set_zero(v_, 1); }
    MpFloat(double d) {
        mpfr_init2(v_, default_prec_);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, default_prec_);
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    // Working precision for subsequently constructed values (per thread).
    static void set_default_prec(long bits) { default_prec_ = bits < 64 ? 64 : bits; }
    static long default_prec() { return default_prec_; }

    static MpFloat from_rational(const Rational& r) {
        MpFloat num = from_bigint(numerator(r));
        MpFloat den = from_bigint(denominator(r));
        num /= den;
        return num;
    }
    static MpFloat from_bigint(const BigInt& z) {
        MpFloat x;
        std::string hex = z.str(0, std::ios_base::hex);  // no 0x prefix, sign kept
        mpfr_set_str(x.v_, hex.c_str(), 16, MPFR_RNDN);
        return x;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    double log_abs() const {
        if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
        MpFloat t(*this);
        mpfr_abs(t.v_, t.v_, MPFR_RNDN);
        mpfr_log(t.v_, t.v_, MPFR_RNDN);
        return mpfr_get_d(t.v_, MPFR_RNDN);
    }
    double log2_abs() const { return log_abs() * 1.4426950408889634073599246810019; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    MpFloat& operator+=(const MpFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpFloat& operator-=(const MpFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpFloat& operator*=(const MpFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpFloat& operator/=(const MpFloat& o) {
        if (o.is_zero()) throw std::domain_error("MpFloat: division by zero");
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MpFloat operator-() const {
        MpFloat x(*this);
        mpfr_neg(x.v_, x.v_, MPFR_RNDN);
        return x;
    }

    friend MpFloat operator+(MpFloat a, const MpFloat& b) { return a += b; }
    friend MpFloat operator-(MpFloat a, const MpFloat& b) { return a -= b; }
    friend MpFloat operator*(MpFloat a, const MpFloat& b) { return a *= b; }
    friend MpFloat operator/(MpFloat a, const MpFloat& b) { return a /= b; }

    friend bool operator==(const MpFloat& a, const MpFloat& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MpFloat& a, const MpFloat& b) { return b < a; }
    friend bool operator<=(const MpFloat& a, const MpFloat& b) { return !(b < a); }
    friend bool operator>=(const MpFloat& a, const MpFloat& b) { return !(a < b); }

    friend MpFloat abs(const MpFloat& a) {
        MpFloat x(a);
        mpfr_abs(x.v_, x.v_, MPFR_RNDN);
        return x;
    }
    static int abs_compare(const MpFloat& a, const MpFloat& b) { return mpfr_cmpabs(a.v_, b.v_); }

private:
    static thread_local long default_prec_;
    mpfr_t v_;
};

inline double log_abs_value(const MpFloat& x) { return x.log_abs(); }

namespace detail {
inline int abs_compare(const MpFloat& a, const MpFloat& b) { return MpFloat::abs_compare(a, b); }
inline bool is_zero(const MpFloat& x) { return x.is_zero(); }
}  // namespace detail

// RAII scope for the working precision.
class MpPrecisionGuard {
public:
    explicit MpPrecisionGuard(long bits) : saved_(MpFloat::default_prec()) {
        MpFloat::set_default_prec(bits);
    }
    ~MpPrecisionGuard() { MpFloat::set_default_prec(saved_); }

private:
    long saved_;
};

}  // namespace ssm
