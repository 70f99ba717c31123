#pragma once

#include <cstdint>
#include <random>

#include "hexalink/lambda_matrix.hpp"
#include "hexalink/motion_polynomial.hpp"

namespace hexalink {

/// Angle-symmetric linkage with the parallel property:
///   I.   axis u, u^2 = -1
///   II.  axis h1 perpendicular to u (primal directions orthogonal)
///   III. parallel axes h2, h3, not perpendicular to u
///   IV.  h4 = -u h1 u + r eps u
///   V.   h5 = -u h2 u, h6 = -u h3 u
/// Orthogonality in step II is a condition on primal directions only; the
/// eps cross term then cancels in h4^2, which is what h4^2 = -1 needs.
template <class S>
Linkage<S> construct_parallel(const Line<S>& u, const Line<S>& h1, const Line<S>& h2,
                              const Line<S>& h3, const S& r) {
    const auto perp = [](const Line<S>& a, const Line<S>& b) {
        const S d = dot(a.direction(), b.direction());
        if constexpr (scalar_traits<S>::is_exact) return scalar_traits<S>::is_zero(d);
        else return std::fabs(d) <= kFloatTolerance;
    };
    if (!perp(u, h1))
        throw InvalidArgument("construct_parallel: step II requires h1 perpendicular to u");
    if (!directions_parallel(h2, h3))
        throw InvalidArgument("construct_parallel: step III requires h2 parallel to h3");
    if (perp(u, h2) || perp(u, h3))
        throw InvalidArgument("construct_parallel: step III requires h2, h3 not perpendicular to u");

    const DualQuaternion<S>& uq = u.dq();
    const auto reflect = [&](const Line<S>& h) { return -(uq * h.dq() * uq); };
    DualQuaternion<S> eps_u;
    for (int i = 1; i <= 3; ++i) eps_u[i + 4] = uq[i];

    const DualQuaternion<S> h4 = reflect(h1) + r * eps_u;
    return Linkage<S>::from_lines({h1, h2, h3, Line<S>::from_dq(h4), Line<S>::from_dq(reflect(h2)),
                                   Line<S>::from_dq(reflect(h3))});
}

/// Line symmetric linkage about the axis l: h_{i+3} = -l h_i l (the half
/// turn about l maps joint i to joint i+3, representatives included).
template <class S>
Linkage<S> construct_line_symmetric(const Line<S>& l, const Line<S>& h1, const Line<S>& h2,
                                    const Line<S>& h3) {
    const DualQuaternion<S>& lq = l.dq();
    std::array<Line<S>, 6> joints{h1, h2, h3, h1, h2, h3};
    const std::array<const Line<S>*, 3> in{&h1, &h2, &h3};
    for (int i = 0; i < 3; ++i) {
        const DualQuaternion<S> mapped = -(lq * in[static_cast<size_t>(i)]->dq() * lq);
        const DualQuaternion<S> diff_plus = mapped - in[static_cast<size_t>(i)]->dq();
        const DualQuaternion<S> diff_minus = mapped + in[static_cast<size_t>(i)]->dq();
        if (diff_plus.is_zero() || diff_minus.is_zero())
            throw DegenerateError("construct_line_symmetric: h" + std::to_string(i + 1) +
                                  " is fixed by the half-turn about l");
        joints[static_cast<size_t>(i + 3)] = Line<S>::from_dq(mapped);
    }
    return Linkage<S>::from_lines(std::move(joints));
}

/// Cubic polynomial type linkage from three revolute factors
/// (t - a_i - b_i h_i); requires pairwise distinct norm quadratics.
template <class S>
Linkage<S> construct_cubic_type(const std::array<std::pair<S, S>, 3>& pairs,
                                const std::array<Line<S>, 3>& axes) {
    return linkage_from_cubic(RevoluteFactor<S>(pairs[0].first, pairs[0].second, axes[0]),
                              RevoluteFactor<S>(pairs[1].first, pairs[1].second, axes[1]),
                              RevoluteFactor<S>(pairs[2].first, pairs[2].second, axes[2]));
}

/// Deterministic random source for reproducible sampling. The distributions
/// are hand-rolled so identical seeds give identical streams everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long long int_in(long long lo, long long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    /// Random rational with |numerator| <= bound, 1 <= denominator <= bound.
    Rational rational(long long bound = 20) {
        return Rational(int_in(-bound, bound), int_in(1, bound));
    }
    Rational nonzero_rational(long long bound = 20) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }

    /// Rational point on the unit sphere via the stereographic chart.
    Vec3<Rational> unit_direction() {
        for (;;) {
            const Rational u = rational(8), v = rational(8);
            const Rational s = Rational(1) + u * u + v * v;
            Vec3<Rational> p{Rational(2) * u / s, Rational(2) * v / s,
                             (Rational(1) - u * u - v * v) / s};
            if (!p.is_zero()) return p;
        }
    }

    Vec3<Rational> point(long long bound = 8) {
        return {rational(bound), rational(bound), rational(bound)};
    }

    Line<Rational> line() {
        return Line<Rational>::make(unit_direction(), point());
    }

    /// Orthonormal pair of rational unit vectors: two columns of the
    /// rotation matrix of a random rational quaternion.
    std::pair<Vec3<Rational>, Vec3<Rational>> orthonormal_pair() {
        for (;;) {
            const Rational w = rational(6), x = rational(6), y = rational(6), z = rational(6);
            const Rational n = w * w + x * x + y * y + z * z;
            if (n.is_zero()) continue;
            Vec3<Rational> c1{(w * w + x * x - y * y - z * z) / n, Rational(2) * (x * y + w * z) / n,
                              Rational(2) * (x * z - w * y) / n};
            Vec3<Rational> c2{Rational(2) * (x * y - w * z) / n, (w * w - x * x + y * y - z * z) / n,
                              Rational(2) * (y * z + w * x) / n};
            return {c1, c2};
        }
    }

private:
    std::mt19937_64 engine_;
};

struct LineSymmetricSample {
    Line<Rational> axis;
    Linkage<Rational> linkage;
};

struct ParallelSample {
    Line<Rational> u;
    Rational r;
    Linkage<Rational> linkage;
};

struct CubicSample {
    std::array<std::pair<Rational, Rational>, 3> pairs;
    std::array<Line<Rational>, 3> axes;
    Linkage<Rational> linkage;
    int resampled = 0;   // degenerate draws discarded before this one
};

inline LineSymmetricSample random_line_symmetric(Rng& rng) {
    for (;;) {
        try {
            const Line<Rational> l = rng.line();
            return {l, construct_line_symmetric(l, rng.line(), rng.line(), rng.line())};
        } catch (const Error&) {
        }
    }
}

inline ParallelSample random_parallel(Rng& rng) {
    for (;;) {
        try {
            const auto [du, d1] = rng.orthonormal_pair();
            const Line<Rational> u = Line<Rational>::make(du, rng.point());
            const Line<Rational> h1 = Line<Rational>::make(d1, rng.point());
            Vec3<Rational> d2 = rng.unit_direction();
            while (dot(d2, u.direction()).is_zero()) d2 = rng.unit_direction();
            const Line<Rational> h2 = Line<Rational>::make(d2, rng.point());
            const Line<Rational> h3 = Line<Rational>::make(d2, rng.point());
            const Rational r = rng.nonzero_rational();
            return {u, r, construct_parallel(u, h1, h2, h3, r)};
        } catch (const Error&) {
        }
    }
}

/// Random cubic-type sample in the (0,1)-gauge: a_1 = 0, b_1 = 1 keeps the
/// recovered parameters directly comparable.
inline CubicSample random_cubic(Rng& rng) {
    int skipped = 0;
    for (;;) {
        try {
            std::array<std::pair<Rational, Rational>, 3> pairs{
                std::pair<Rational, Rational>{Rational(0), Rational(1)},
                {rng.rational(), rng.nonzero_rational()},
                {rng.rational(), rng.nonzero_rational()}};
            std::array<Line<Rational>, 3> axes{rng.line(), rng.line(), rng.line()};
            Linkage<Rational> L = construct_cubic_type(pairs, axes);
            if (lambda_rank_exact(build_lambda_matrix(L)) != 4) {
                ++skipped;   // degenerate draw; sample again
                continue;
            }
            return {pairs, axes, L, skipped};
        } catch (const Error&) {
            ++skipped;
        }
    }
}

} // namespace hexalink
