#pragma once

#include <array>
#include <optional>
#include <utility>

#include "hexalink/line.hpp"

namespace hexalink {

/// Projective configuration parameter: the cotangent of a half rotation
/// angle, either a finite scalar or infinity (angle 0). Canonical form has
/// den in {0, 1}.
template <class S>
struct ConfigParam {
    S num{scalar_traits<S>::one()};
    S den{scalar_traits<S>::zero()};   // default: infinity

    static ConfigParam finite(const S& t) { return {t, scalar_traits<S>::one()}; }
    static ConfigParam infinity() { return {scalar_traits<S>::one(), scalar_traits<S>::zero()}; }
    static ConfigParam projective(const S& num, const S& den) {
        if (scalar_traits<S>::is_zero(num) && scalar_traits<S>::is_zero(den))
            throw InvalidArgument("configuration parameter (0 : 0) is invalid");
        if (scalar_traits<S>::is_zero(den)) return infinity();
        return finite(num / den);
    }

    bool is_infinite() const { return scalar_traits<S>::is_zero(den); }
    const S& value() const {
        if (is_infinite()) throw InvalidArgument("infinite configuration parameter has no value");
        return num;
    }

    friend bool operator==(const ConfigParam& a, const ConfigParam& b) {
        return a.num * b.den == b.num * a.den &&
               !(scalar_traits<S>::is_zero(a.den) != scalar_traits<S>::is_zero(b.den));
    }
};

template <class S>
struct Configuration {
    std::array<ConfigParam<S>, 6> t;

    static Configuration all_infinity() { return {}; }

    bool is_symmetric() const {
        return t[0] == t[3] && t[1] == t[4] && t[2] == t[5];
    }
};

/// Angle-symmetric configuration (t1, t2, t3) with t4 = t1, t5 = t2, t6 = t3.
template <class S>
struct SymConfiguration {
    std::array<ConfigParam<S>, 3> t;

    static SymConfiguration all_infinity() { return {}; }
    static SymConfiguration of(const ConfigParam<S>& t1, const ConfigParam<S>& t2,
                               const ConfigParam<S>& t3) {
        return {{{t1, t2, t3}}};
    }

    Configuration<S> expand() const { return {{{t[0], t[1], t[2], t[0], t[1], t[2]}}}; }
};

/// A closed 6R linkage: six joint axes in an initial position.
///
/// The six stored dual quaternions are signed representatives. Opposite
/// joints must differ as values but may share an axis (h_{i+3} = -h_i is a
/// legitimate position); consecutive joints must be distinct axes.
template <class S>
class Linkage {
public:
    static Linkage from_lines(std::array<Line<S>, 6> joints) {
        for (int i = 0; i < 6; ++i) {
            if (joints[static_cast<size_t>(i)].same_axis(joints[static_cast<size_t>((i + 1) % 6)]))
                throw InvalidArgument("linkage: consecutive joints " + std::to_string(i + 1) +
                                      "," + std::to_string((i + 1) % 6 + 1) + " share an axis");
        }
        for (int i = 0; i < 3; ++i) {
            if (joints[static_cast<size_t>(i)] == joints[static_cast<size_t>(i + 3)])
                throw InvalidArgument("linkage: joints " + std::to_string(i + 1) + " and " +
                                      std::to_string(i + 4) + " are equal");
        }
        return Linkage(std::move(joints));
    }

    const Line<S>& joint(int i) const { return joints_[static_cast<size_t>(i)]; }   // 0-based
    const std::array<Line<S>, 6>& joints() const { return joints_; }

    /// g_i = h_i + h_{i+3}; g_1 may vanish in special initial positions.
    std::array<DualQuaternion<S>, 3> g() const {
        return {joints_[0].dq() + joints_[3].dq(), joints_[1].dq() + joints_[4].dq(),
                joints_[2].dq() + joints_[5].dq()};
    }

private:
    explicit Linkage(std::array<Line<S>, 6> joints) : joints_(std::move(joints)) {}
    std::array<Line<S>, 6> joints_;
};

template <class S>
Linkage<double> to_float(const Linkage<S>& L) {
    return Linkage<double>::from_lines({to_float(L.joint(0)), to_float(L.joint(1)),
                                        to_float(L.joint(2)), to_float(L.joint(3)),
                                        to_float(L.joint(4)), to_float(L.joint(5))});
}

template <class S>
struct ClosureReport {
    std::optional<int> lambda_sign;   // +1 / -1, only for on-curve symmetric configurations
    S residual{scalar_traits<S>::zero()};
};

namespace detail {

// (num - den*h), with infinity mapped to the identity rotation. The closure
// product is projective, so the un-divided form keeps exact arithmetic exact.
template <class S>
DualQuaternion<S> rotation_factor(const ConfigParam<S>& t, const Line<S>& h) {
    if (t.is_infinite()) return DualQuaternion<S>::one();
    return DualQuaternion<S>::scalar(t.num) - t.den * h.dq();
}

template <class S>
DualQuaternion<S> reverse_factor(const ConfigParam<S>& t, const Line<S>& h) {
    if (t.is_infinite()) return DualQuaternion<S>::one();
    return DualQuaternion<S>::scalar(t.num) + t.den * h.dq();
}

} // namespace detail

/// Evaluates the closure product (t1-h1)...(t6-h6) and reports how far it is
/// from a nonzero real scalar: the residual is the largest non-real
/// coordinate relative to the product's magnitude (0 exactly on the
/// configuration set). For symmetric configurations the sign splitting the
/// two halves of the angle-symmetric set is reported as well.
template <class S>
ClosureReport<S> closure_residual(const Linkage<S>& L, const Configuration<S>& tau) {
    DualQuaternion<S> P = DualQuaternion<S>::one();
    for (int i = 0; i < 6; ++i) P = P * detail::rotation_factor(tau.t[static_cast<size_t>(i)], L.joint(i));

    S mag = scalar_traits<S>::zero();
    for (int i = 0; i < 8; ++i) {
        S a = scalar_traits<S>::abs_value(P[i]);
        if (a > mag) mag = a;
    }
    if (scalar_traits<S>::is_zero(mag))
        throw DegenerateError("closure product vanished: degenerate configuration");

    S worst = scalar_traits<S>::zero();
    for (int i = 1; i < 8; ++i) {
        S a = scalar_traits<S>::abs_value(P[i]);
        if (a > worst) worst = a;
    }
    ClosureReport<S> rep;
    rep.residual = worst / mag;

    if (tau.is_symmetric()) {
        const bool on_curve = scalar_traits<S>::is_exact
                                  ? scalar_traits<S>::is_zero(rep.residual)
                                  : scalar_traits<S>::to_double(rep.residual) <= kFloatTolerance;
        if (on_curve) {
            // Compare (t1-h1)(t2-h2)(t3-h3) against (t3+h6)(t2+h5)(t1+h4)
            // coordinate-wise at the dominant coordinate.
            DualQuaternion<S> left = detail::rotation_factor(tau.t[0], L.joint(0)) *
                                     detail::rotation_factor(tau.t[1], L.joint(1)) *
                                     detail::rotation_factor(tau.t[2], L.joint(2));
            DualQuaternion<S> right = detail::reverse_factor(tau.t[2], L.joint(5)) *
                                      detail::reverse_factor(tau.t[1], L.joint(4)) *
                                      detail::reverse_factor(tau.t[0], L.joint(3));
            int dom = 0;
            S best = scalar_traits<S>::zero();
            for (int i = 0; i < 8; ++i) {
                S a = scalar_traits<S>::abs_value(right[i]);
                if (a > best) { best = a; dom = i; }
            }
            if (!scalar_traits<S>::is_zero(best)) {
                const int sl = scalar_traits<S>::sign(left[dom]);
                const int sr = scalar_traits<S>::sign(right[dom]);
                if (sl != 0) rep.lambda_sign = sl == sr ? 1 : -1;
            }
        }
    }
    return rep;
}

template <class S>
ClosureReport<S> closure_residual(const Linkage<S>& L, const SymConfiguration<S>& tau) {
    return closure_residual(L, tau.expand());
}

/// Moves the linkage into the position given by a closing configuration:
/// the ground link carries h6 and h1, h'_1 = h_1 and
/// h'_i = (r_1 ... r_{i-1}) h_i (r_1 ... r_{i-1})^{-1} with r_j = (t_j - h_j).
/// Representative signs ride along unchanged.
template <class S>
Linkage<S> transform_by_configuration(const Linkage<S>& L, const Configuration<S>& tau) {
    const auto rep = closure_residual(L, tau);
    const bool closes = scalar_traits<S>::is_exact
                            ? scalar_traits<S>::is_zero(rep.residual)
                            : scalar_traits<S>::to_double(rep.residual) <= kFloatTolerance;
    if (!closes)
        throw InvalidArgument("transform_by_configuration: configuration does not close");

    std::array<Line<S>, 6> moved{L.joint(0), L.joint(1), L.joint(2),
                                 L.joint(3), L.joint(4), L.joint(5)};
    DualQuaternion<S> q = DualQuaternion<S>::one();
    for (int i = 1; i < 6; ++i) {
        q = q * detail::rotation_factor(tau.t[static_cast<size_t>(i) - 1], L.joint(i - 1));
        moved[static_cast<size_t>(i)] = act_on_line(q, L.joint(i));
    }
    return Linkage<S>::from_lines(std::move(moved));
}

template <class S>
Linkage<S> transform_by_configuration(const Linkage<S>& L, const SymConfiguration<S>& tau) {
    return transform_by_configuration(L, tau.expand());
}

/// The pairing pattern of the parallel property: three pairs of parallel axes
/// {(1,4),(2,3),(5,6)} shifted cyclically. Indices are 1-based.
struct ParallelPairing {
    int shift = 0;
    std::array<std::pair<int, int>, 3> pairs;
};

template <class S>
bool directions_parallel(const Line<S>& a, const Line<S>& b) {
    const Vec3<S> c = cross(a.direction(), b.direction());
    if constexpr (scalar_traits<S>::is_exact) {
        return c.is_zero();
    } else {
        return std::fabs(c[0]) <= kFloatTolerance && std::fabs(c[1]) <= kFloatTolerance &&
               std::fabs(c[2]) <= kFloatTolerance;
    }
}

/// Looks for the parallel property h_1 || h_4, h_2 || h_3, h_5 || h_6 under
/// the six cyclic shifts of joint labels; anti-parallel counts as parallel.
template <class S>
std::optional<ParallelPairing> parallel_pairing(const Linkage<S>& L) {
    static constexpr std::array<std::pair<int, int>, 3> base{{{0, 3}, {1, 2}, {4, 5}}};
    for (int shift = 0; shift < 6; ++shift) {
        bool ok = true;
        for (const auto& [a, b] : base) {
            if (!directions_parallel(L.joint((a + shift) % 6), L.joint((b + shift) % 6))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ParallelPairing p;
        p.shift = shift;
        for (size_t k = 0; k < 3; ++k)
            p.pairs[k] = {(base[k].first + shift) % 6 + 1, (base[k].second + shift) % 6 + 1};
        return p;
    }
    return std::nullopt;
}

/// Dual angles of the six links: <h_i, h_{i+1}> = cos(theta) - eps d sin(theta)
/// for each cyclically consecutive joint pair. Rigid-link invariant.
template <class S>
std::array<DualNumber<S>, 6> link_parameters(const Linkage<S>& L) {
    std::array<DualNumber<S>, 6> out;
    for (int i = 0; i < 6; ++i) {
        const Line<S>& a = L.joint(i);
        const Line<S>& b = L.joint((i + 1) % 6);
        if (a.same_axis(b))
            throw DegenerateError("link_parameters: consecutive joints share an axis");
        out[static_cast<size_t>(i)] = dq_inner(a.dq(), b.dq());
    }
    return out;
}

} // namespace hexalink
