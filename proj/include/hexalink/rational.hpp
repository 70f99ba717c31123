#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hexalink {

/// Exact arbitrary-precision rational number.
///
/// Thin value wrapper over GMP's mpq_class keeping a canonical (gcd-reduced,
/// positive-denominator) representation at all times. This is the exact
/// realization of the scalar tower; classification runs on it so that matrix
/// ranks are computed without rounding.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                    // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Exact conversion from a double (every finite double is rational).
    static Rational from_double(double x);

    /// Parses "p/q", "p", or a plain integer with optional sign.
    static Rational parse(const std::string& text);

    /// Nearest rational with denominator growth controlled by a continued
    /// fraction expansion, stopping once |value - x| <= tol. Used to lift
    /// float data into exact arithmetic before exact verification.
    static Rational rationalize(double x, double tol);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

/// Exact square root when the value is a perfect square of a rational,
/// std::nullopt otherwise (or when negative).
std::optional<Rational> exact_sqrt(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace hexalink
