#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ssm {

// Floating value with a binary64 significand and a separate 64-bit binary
// exponent: value = sign * significand * 2^exponent, significand in [1,2).
// Survives products like Z^2 whose log2 runs into the thousands.
class XScalar {
public:
    XScalar() = default;
    XScalar(double v) { assign(v); }

    static XScalar from_parts(int sign, double significand, std::int64_t exponent) {
        XScalar x;
        if (sign == 0 || significand == 0.0) return x;
        x.sign_ = sign < 0 ? -1 : 1;
        x.sig_ = significand;
        x.exp_ = exponent;
        x.renormalize();
        return x;
    }

    int sign() const { return sign_; }
    double significand() const { return sig_; }
    std::int64_t exponent() const { return exp_; }
    bool is_zero() const { return sign_ == 0; }

    double to_double() const {
        if (sign_ == 0) return 0.0;
        if (exp_ > 1024) return sign_ > 0 ? std::numeric_limits<double>::infinity()
                                          : -std::numeric_limits<double>::infinity();
        if (exp_ < -1100) return 0.0;
        return sign_ * std::ldexp(sig_, static_cast<int>(exp_));
    }

    // log2|x|; -inf for zero.
    double log2_abs() const {
        if (sign_ == 0) return -std::numeric_limits<double>::infinity();
        return static_cast<double>(exp_) + std::log2(sig_);
    }
    double log_abs() const { return log2_abs() * 0.6931471805599453094172321214581766; }

    XScalar operator-() const {
        XScalar x = *this;
        x.sign_ = -x.sign_;
        return x;
    }

    XScalar& operator*=(const XScalar& o) {
        if (sign_ == 0 || o.sign_ == 0) return *this = XScalar();
        sign_ *= o.sign_;
        sig_ *= o.sig_;  // in [1,4)
        exp_ += o.exp_;
        if (sig_ >= 2.0) {
            sig_ *= 0.5;
            ++exp_;
        }
        return *this;
    }

    XScalar& operator/=(const XScalar& o) {
        if (o.sign_ == 0) throw std::domain_error("XScalar: division by zero");
        if (sign_ == 0) return *this;
        sign_ *= o.sign_;
        sig_ /= o.sig_;  // in (0.5,2)
        exp_ -= o.exp_;
        if (sig_ < 1.0) {
            sig_ *= 2.0;
            --exp_;
        }
        return *this;
    }

    XScalar& operator+=(const XScalar& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) return *this = o;
        // Addends more than kDropBits binary orders below the larger one are dropped.
        const XScalar* hi = this;
        const XScalar* lo = &o;
        if (o.exp_ > exp_) {
            hi = &o;
            lo = this;
        }
        std::int64_t gap = hi->exp_ - lo->exp_;
        if (gap > kDropBits) return *this = *hi;
        double sum = hi->sign_ * hi->sig_ +
                     lo->sign_ * std::ldexp(lo->sig_, -static_cast<int>(gap));
        std::int64_t base = hi->exp_;
        if (sum == 0.0) return *this = XScalar();
        int e;
        double f = std::frexp(sum, &e);  // |f| in [0.5,1)
        sign_ = f < 0 ? -1 : 1;
        sig_ = std::fabs(f) * 2.0;
        exp_ = base + e - 1;
        return *this;
    }

    XScalar& operator-=(const XScalar& o) { return *this += -o; }

    friend XScalar operator+(XScalar a, const XScalar& b) { return a += b; }
    friend XScalar operator-(XScalar a, const XScalar& b) { return a -= b; }
    friend XScalar operator*(XScalar a, const XScalar& b) { return a *= b; }
    friend XScalar operator/(XScalar a, const XScalar& b) { return a /= b; }

    friend bool operator==(const XScalar& a, const XScalar& b) {
        return a.sign_ == b.sign_ && (a.sign_ == 0 || (a.exp_ == b.exp_ && a.sig_ == b.sig_));
    }
    friend bool operator<(const XScalar& a, const XScalar& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        if (a.sign_ == 0) return false;
        int c = abs_compare(a, b);
        return a.sign_ > 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const XScalar& a, const XScalar& b) { return b < a; }
    friend bool operator<=(const XScalar& a, const XScalar& b) { return !(b < a); }
    friend bool operator>=(const XScalar& a, const XScalar& b) { return !(a < b); }

    // -1/0/+1 comparison of |a| against |b|.
    static int abs_compare(const XScalar& a, const XScalar& b) {
        if (a.sign_ == 0) return b.sign_ == 0 ? 0 : -1;
        if (b.sign_ == 0) return 1;
        if (a.exp_ != b.exp_) return a.exp_ < b.exp_ ? -1 : 1;
        if (a.sig_ != b.sig_) return a.sig_ < b.sig_ ? -1 : 1;
        return 0;
    }

    friend XScalar abs(const XScalar& a) {
        XScalar x = a;
        if (x.sign_ < 0) x.sign_ = 1;
        return x;
    }

    friend std::ostream& operator<<(std::ostream& os, const XScalar& x) {
        if (x.sign_ == 0) return os << "0";
        return os << (x.sign_ < 0 ? "-" : "") << x.sig_ << "*2^" << x.exp_;
    }

private:
    static constexpr std::int64_t kDropBits = 80;

    void assign(double v) {
        if (v == 0.0) {
            *this = XScalar();
            return;
        }
        if (!std::isfinite(v)) throw std::domain_error("XScalar: non-finite input");
        int e;
        double f = std::frexp(v, &e);
        sign_ = f < 0 ? -1 : 1;
        sig_ = std::fabs(f) * 2.0;
        exp_ = static_cast<std::int64_t>(e) - 1;
    }

    void renormalize() {
        if (sign_ == 0) return;
        int e;
        double f = std::frexp(sig_, &e);
        sig_ = std::fabs(f) * 2.0;
        exp_ += e - 1;
    }

    double sig_ = 0.0;
    std::int64_t exp_ = 0;
    int sign_ = 0;
};

}  // namespace ssm
