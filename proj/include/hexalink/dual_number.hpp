#pragma once

#include "hexalink/errors.hpp"
#include "hexalink/scalar.hpp"

namespace hexalink {

/// Dual number a + eps*b with eps^2 = 0.
///
/// Dual numbers are the scalars of line geometry here: dual angles between
/// axes, norms of dual quaternions, and the coefficients relating the g
/// vectors of a line symmetric linkage all live in this ring.
template <class S>
struct DualNumber {
    S re{scalar_traits<S>::zero()};
    S du{scalar_traits<S>::zero()};

    DualNumber() = default;
    DualNumber(S real_part, S dual_part) : re(std::move(real_part)), du(std::move(dual_part)) {}
    explicit DualNumber(S real_part) : re(std::move(real_part)) {}

    static DualNumber zero() { return DualNumber(); }
    static DualNumber one() { return DualNumber(scalar_traits<S>::one()); }

    bool is_zero() const {
        return scalar_traits<S>::is_zero(re) && scalar_traits<S>::is_zero(du);
    }

    DualNumber operator-() const { return {S(-re), S(-du)}; }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
        return {a.re + b.re, a.du + b.du};
    }
    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
        return {a.re - b.re, a.du - b.du};
    }
    // (a + eps b)(c + eps d) = ac + eps(ad + bc)
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return {a.re * b.re, a.re * b.du + a.du * b.re};
    }
    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.re == b.re && a.du == b.du;
    }

    /// (a + eps b)^{-1} = 1/a - eps b/a^2. Dual numbers with zero primal
    /// part are zero divisors and are rejected.
    DualNumber inverse() const {
        if (scalar_traits<S>::is_zero(re))
            throw DegenerateError("dual number with zero primal part is not invertible");
        const S inv = scalar_traits<S>::one() / re;
        return {inv, -du * inv * inv};
    }

    /// sqrt(a + eps b) = sqrt(a) + eps b/(2 sqrt(a)), requires a > 0.
    /// In exact mode the primal part must be a perfect rational square.
    DualNumber sqrt() const {
        if (scalar_traits<S>::sign(re) <= 0)
            throw DegenerateError("dual number square root requires positive primal part");
        auto root = scalar_traits<S>::sqrt(re);
        if (!root)
            throw DegenerateError("dual number square root is not exactly representable");
        const S two = scalar_traits<S>::from_fraction(2, 1);
        return {*root, du / (two * *root)};
    }
};

} // namespace hexalink
