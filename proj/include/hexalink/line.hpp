#pragma once

#include <cmath>

#include "hexalink/dual_quaternion.hpp"

namespace hexalink {

/// A joint axis: a purely vectorial dual quaternion h with h^2 = -1,
/// i.e. unit primal direction and <primal, dual> = 0.
///
/// h and -h describe the same geometric axis but are distinct values; the
/// sign is kinematic data (it orients the rotation angle), so Line never
/// silently normalizes it. canonical() and same_axis() provide the
/// sign-blind view where geometry is what matters.
template <class S>
class Line {
public:
    /// Validates the Line invariant; keeps the sign as given.
    static Line from_dq(const DualQuaternion<S>& h) {
        if constexpr (scalar_traits<S>::is_exact) {
            if (!h.is_pure()) throw InvalidArgument("line: not purely vectorial");
            const DualNumber<S> n = h.norm();
            if (!(n.re == scalar_traits<S>::one() && scalar_traits<S>::is_zero(n.du)))
                throw InvalidArgument("line: h^2 != -1");
        } else {
            if (std::fabs(h[0]) > kFloatTolerance || std::fabs(h[4]) > kFloatTolerance)
                throw InvalidArgument("line: not purely vectorial");
            const DualNumber<S> n = h.norm();
            if (std::fabs(n.re - 1.0) > kFloatTolerance || std::fabs(n.du) > kFloatTolerance)
                throw InvalidArgument("line: h^2 != -1");
        }
        Line l;
        l.h_ = h;
        // The scalar coordinates are exactly zero in exact mode and noise in
        // float mode; store the purified value either way.
        l.h_[0] = scalar_traits<S>::zero();
        l.h_[4] = scalar_traits<S>::zero();
        return l;
    }

    /// Builds the axis through anchor_point with the given direction:
    /// h = p + eps (c x p), sign-canonicalized. In exact mode the direction
    /// must have a perfect-square length.
    static Line make(const Vec3<S>& direction, const Vec3<S>& anchor_point) {
        if (direction.is_zero()) throw InvalidArgument("make_line: zero direction");
        const S len2 = dot(direction, direction);
        auto len = scalar_traits<S>::sqrt(len2);
        if (!len)
            throw InvalidArgument("make_line: direction length is not exactly representable");
        const S inv = scalar_traits<S>::one() / *len;
        const Vec3<S> p = inv * direction;
        const Vec3<S> m = cross(anchor_point, p);
        return from_dq(DualQuaternion<S>::vectorial(p, m)).canonical();
    }

    const DualQuaternion<S>& dq() const { return h_; }
    Vec3<S> direction() const { return h_.primal_vec(); }
    Vec3<S> moment() const { return h_.dual_vec(); }
    /// Point on the axis closest to the origin: p x m.
    Vec3<S> anchor() const { return cross(direction(), moment()); }

    Line negated() const {
        Line l;
        l.h_ = -h_;
        return l;
    }

    bool is_canonical() const {
        for (int i = 1; i <= 3; ++i) {
            const int s = scalar_traits<S>::sign(h_[i]);
            if (s != 0) return s > 0;
        }
        return true;
    }

    /// Representative with the first nonzero primal coordinate positive.
    Line canonical() const { return is_canonical() ? *this : negated(); }

    /// Equality of axes, ignoring representative sign.
    bool same_axis(const Line& o) const {
        const Line a = canonical(), b = o.canonical();
        if constexpr (scalar_traits<S>::is_exact) {
            return a.h_ == b.h_;
        } else {
            for (int i = 0; i < 8; ++i)
                if (std::fabs(a.h_[i] - b.h_[i]) > kFloatTolerance) return false;
            return true;
        }
    }

    friend bool operator==(const Line& a, const Line& b) { return a.h_ == b.h_; }

private:
    Line() = default;
    DualQuaternion<S> h_;
};

/// Conjugates an axis by an invertible dual quaternion: q h q^{-1}.
/// The result is again a Line; its sign comes out of the algebra untouched
/// (conjugating j by i yields -j).
template <class S>
Line<S> act_on_line(const DualQuaternion<S>& q, const Line<S>& h) {
    const DualNumber<S> n = q.norm();
    if (scalar_traits<S>::is_zero(n.re))
        throw DegenerateError("act_on_line: transformation has zero primal norm");
    const DualQuaternion<S> moved = q * h.dq() * (n.inverse() * q.conj());
    return Line<S>::from_dq(moved);
}

template <class S>
Line<double> to_float(const Line<S>& l) {
    typename DualQuaternion<double>::Coords c;
    for (int i = 0; i < 8; ++i) c[static_cast<size_t>(i)] = scalar_traits<S>::to_double(l.dq()[i]);
    return Line<double>::from_dq(DualQuaternion<double>(c));
}

/// Lifts a float line to exact arithmetic by rationalizing each coordinate
/// and re-validating the invariant exactly. The tolerance admits
/// denominators up to about 1e6 before continued fractions can stop on a
/// wrong convergent. Meaningful for float data that originated from exact
/// values; genuinely noisy data fails the exact h^2 = -1 check.
inline Line<Rational> exactify(const Line<double>& l) {
    typename DualQuaternion<Rational>::Coords c;
    for (int i = 0; i < 8; ++i) c[static_cast<size_t>(i)] = Rational::rationalize(l.dq()[i], 1e-13);
    return Line<Rational>::from_dq(DualQuaternion<Rational>(c));
}

} // namespace hexalink
