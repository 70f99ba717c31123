#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "hexalink/rational.hpp"

namespace hexalink {

// The scalar tower: every algebraic type in this library is generic over a
// scalar S that is either exact (Rational) or double. Exact scalars are used
// wherever ranks and recovered data must be certified; doubles carry curve
// tracing and pose export.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_fraction(long long num, long long den) { return Rational(num, den); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static int sign(const Rational& a) { return a.sign(); }
    static Rational abs_value(const Rational& a) { return abs(a); }
    static std::optional<Rational> sqrt(const Rational& a) { return exact_sqrt(a); }
    static double to_double(const Rational& a) { return a.to_double(); }
    static std::string str(const Rational& a) { return a.str(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_fraction(long long num, long long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static bool is_zero(double a) { return a == 0.0; }
    static int sign(double a) { return a > 0.0 ? 1 : a < 0.0 ? -1 : 0; }
    static double abs_value(double a) { return std::fabs(a); }
    static std::optional<double> sqrt(double a) {
        if (a < 0.0) return std::nullopt;
        return std::sqrt(a);
    }
    static double to_double(double a) { return a; }
    static std::string str(double a);
};

// Default relative tolerance for float-mode invariant checks and residual
// acceptance. Well inside the accumulation error of six unit-scale dual
// quaternion products.
inline constexpr double kFloatTolerance = 1e-9;

} // namespace hexalink
