#ifndef GPACK_RATIONAL_HPP
#define GPACK_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gpack {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Overflow throws instead of wrapping: condition verdicts
// must be exact or fail loudly. Magnitudes in this project stay far below
// the limit.

namespace detail {

inline long long narrow128(__int128 v) {
    if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow");
    return (long long)v;
}

} // namespace detail

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                    __int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                    __int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        Rational r;
        r.num_ = detail::narrow128(num);
        r.den_ = detail::narrow128(den);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Element of the quadratic extension Q(sqrt(d)): value a + b*sqrt(d) with
// rational a, b and a fixed nonnegative integer radicand d. Used for the
// exact evaluation of quantities whose parameters contain a square root
// (the corollary alpha choices and the 4+sqrt(5) degree threshold).
// Comparisons go through sign analysis, never through floating point.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a) : a_(a) {}
    QuadExt(long long a) : a_(a) {}
    QuadExt(int a) : a_(a) {}

    QuadExt(Rational a, Rational b, long long d) : a_(a), b_(b), d_(d) {
        if (d < 0) throw std::invalid_argument("QuadExt: negative radicand");
        normalize();
    }

    static QuadExt sqrt_of(long long d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long long radicand() const { return d_; }
    bool is_rational() const { return b_.sign() == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        long long d = merged_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        long long d = merged_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        long long d = merged_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                       x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        long long d = merged_radicand(x, y);
        // multiply by the conjugate; y != 0 iff norm != 0 (d nonsquare or b=0)
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        if (norm.sign() == 0) throw std::domain_error("QuadExt: division by zero");
        QuadExt conj(y.a_, -y.b_, d);
        QuadExt prod = x * conj;
        return QuadExt(prod.a_ / norm, prod.b_ / norm, d);
    }
    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    // sign of a + b*sqrt(d); exact
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 d
        Rational lhs = a_ * a_;
        Rational rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return (lhs > rhs) ? sa : sb;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        double v = a_.to_double();
        if (b_.sign() != 0) v += b_.to_double() * std::sqrt(double(d_));
        return v;
    }

    std::string to_string() const {
        if (is_rational()) return a_.to_string();
        return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(" + std::to_string(d_) + ")";
    }

private:
    void normalize() {
        if (b_.sign() == 0) {
            d_ = 0;
            return;
        }
        // pull a perfect-square radicand into the rational part
        long long r = (long long)std::sqrt((long double)d_);
        for (long long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c) {
            if (c >= 0 && c * c == d_) {
                a_ += b_ * Rational(c);
                b_ = Rational(0);
                d_ = 0;
                return;
            }
        }
    }

    static long long merged_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.b_.sign() == 0) return y.d_;
        if (y.b_.sign() == 0) return x.d_;
        if (x.d_ != y.d_) throw std::invalid_argument("QuadExt: mixed radicands");
        return x.d_;
    }

    Rational a_{0};
    Rational b_{0};
    long long d_ = 0;
};

} // namespace gpack

#endif
