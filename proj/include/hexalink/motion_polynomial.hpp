#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hexalink/linkage.hpp"
#include "hexalink/polynomials.hpp"

namespace hexalink {

/// Polynomial in one central indeterminate with dual quaternion
/// coefficients. Parametrizes a rational motion when its norm P * conj(P)
/// is a real polynomial, which mp_norm checks rather than assumes.
template <class S>
class MotionPolynomial {
public:
    MotionPolynomial() = default;
    explicit MotionPolynomial(std::vector<DualQuaternion<S>> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static MotionPolynomial constant(const DualQuaternion<S>& q) {
        return MotionPolynomial({q});
    }
    /// t - r for a dual quaternion root r.
    static MotionPolynomial linear(const DualQuaternion<S>& r) {
        return MotionPolynomial({-r, DualQuaternion<S>::one()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == DualQuaternion<S>::one(); }
    const DualQuaternion<S>& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<DualQuaternion<S>>& coeffs() const { return c_; }

    MotionPolynomial conj() const {
        std::vector<DualQuaternion<S>> out;
        out.reserve(c_.size());
        for (const auto& q : c_) out.push_back(q.conj());
        return MotionPolynomial(std::move(out));
    }

    friend MotionPolynomial operator*(const MotionPolynomial& a, const MotionPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<DualQuaternion<S>> out(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return MotionPolynomial(std::move(out));
    }
    friend MotionPolynomial operator+(const MotionPolynomial& a, const MotionPolynomial& b) {
        std::vector<DualQuaternion<S>> out(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return MotionPolynomial(std::move(out));
    }
    friend MotionPolynomial operator-(const MotionPolynomial& a, const MotionPolynomial& b) {
        std::vector<DualQuaternion<S>> out(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] - b.c_[i];
        return MotionPolynomial(std::move(out));
    }
    friend bool operator==(const MotionPolynomial& a, const MotionPolynomial& b) {
        return a.c_ == b.c_;
    }

    DualQuaternion<S> eval(const S& t) const {
        DualQuaternion<S> acc;
        for (size_t i = c_.size(); i-- > 0;) acc = t * acc + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<DualQuaternion<S>> c_;
};

/// Real polynomial as plain scalar coefficients (ascending).
template <class S>
using RealPoly = std::vector<S>;

/// P * conj(P), verified to be real; throws if the input was not a motion
/// polynomial.
template <class S>
RealPoly<S> mp_norm(const MotionPolynomial<S>& P) {
    const MotionPolynomial<S> N = P * P.conj();
    RealPoly<S> out(static_cast<size_t>(N.degree() + 1), scalar_traits<S>::zero());
    double scale = 1e-300;
    if constexpr (!scalar_traits<S>::is_exact) {
        for (int i = 0; i <= N.degree(); ++i)
            scale = std::max(scale, N.coeff(i).max_abs_coord());
    }
    for (int i = 0; i <= N.degree(); ++i) {
        const DualQuaternion<S>& q = N.coeff(i);
        for (int b = 1; b < 8; ++b) {
            if constexpr (scalar_traits<S>::is_exact) {
                if (!scalar_traits<S>::is_zero(q[b]))
                    throw InvalidArgument("norm is not a real polynomial: input is not a motion polynomial");
            } else {
                if (std::fabs(q[b]) > kFloatTolerance * scale)
                    throw InvalidArgument("norm is not a real polynomial: input is not a motion polynomial");
            }
        }
        out[static_cast<size_t>(i)] = q[0];
    }
    while (!out.empty() && scalar_traits<S>::is_zero(out.back())) out.pop_back();
    if (out.empty())
        throw InvalidArgument("norm vanishes identically: input is not a motion polynomial");
    return out;
}

/// Product together with its (verified real) norm.
template <class S>
std::pair<MotionPolynomial<S>, RealPoly<S>> mp_mul_norm(const MotionPolynomial<S>& P,
                                                        const MotionPolynomial<S>& Q) {
    MotionPolynomial<S> prod = P * Q;
    return {prod, mp_norm(prod)};
}

/// Monic real quadratic t^2 + p t + q.
template <class S>
struct RealQuadratic {
    S p{scalar_traits<S>::zero()};
    S q{scalar_traits<S>::zero()};

    friend bool operator==(const RealQuadratic& a, const RealQuadratic& b) {
        return a.p == b.p && a.q == b.q;
    }
    /// Negative discriminant means no real root: a genuine revolution.
    S discriminant() const { return p * p - scalar_traits<S>::from_fraction(4, 1) * q; }
};

/// A revolution factor (t - a - b h), b != 0, around the axis h.
template <class S>
struct RevoluteFactor {
    S a;
    S b;
    Line<S> axis;

    RevoluteFactor(S a_, S b_, Line<S> h) : a(std::move(a_)), b(std::move(b_)), axis(std::move(h)) {
        if (scalar_traits<S>::is_zero(b))
            throw InvalidArgument("revolute factor requires b != 0");
    }

    DualQuaternion<S> root() const { return DualQuaternion<S>::scalar(a) + b * axis.dq(); }
    MotionPolynomial<S> poly() const { return MotionPolynomial<S>::linear(root()); }
    /// Norm quadratic t^2 - 2 a t + (a^2 + b^2).
    RealQuadratic<S> norm_quadratic() const {
        const S minus_two = scalar_traits<S>::from_fraction(-2, 1);
        return {minus_two * a, a * a + b * b};
    }
};

namespace detail {

/// Remainder of P modulo the real monic quadratic t^2 + p t + q
/// (coefficient-wise, the modulus is central). Result is c0 + c1 t.
template <class S>
std::pair<DualQuaternion<S>, DualQuaternion<S>> mod_quadratic(const MotionPolynomial<S>& P,
                                                              const RealQuadratic<S>& M) {
    std::vector<DualQuaternion<S>> c = P.coeffs();
    for (size_t d = c.size(); d-- > 2;) {
        if (c[d].is_zero()) continue;
        c[d - 1] = c[d - 1] - M.p * c[d];
        c[d - 2] = c[d - 2] - M.q * c[d];
        c[d] = DualQuaternion<S>::zero();
    }
    if (c.size() < 2) c.resize(2);
    return {c[0], c[1]};
}

template <class S>
bool divides_norm(const RealQuadratic<S>& M, const RealPoly<S>& norm) {
    // Synthetic division of the real norm by t^2 + p t + q.
    RealPoly<S> r = norm;
    if (r.size() < 3) return false;
    for (size_t d = r.size(); d-- > 2;) {
        const S f = r[d];
        if (scalar_traits<S>::is_zero(f)) continue;
        r[d - 1] -= M.p * f;
        r[d - 2] -= M.q * f;
        r[d] = scalar_traits<S>::zero();
    }
    if constexpr (scalar_traits<S>::is_exact) {
        return scalar_traits<S>::is_zero(r[0]) && scalar_traits<S>::is_zero(r[1]);
    } else {
        double scale = 1e-300;
        for (const S& c : norm) scale = std::max(scale, std::fabs(c));
        return std::fabs(r[0]) <= kFloatTolerance * scale && std::fabs(r[1]) <= kFloatTolerance * scale;
    }
}

} // namespace detail

/// Extracts the right factor (t - r) of P whose norm is the given quadratic
/// M: reduce P modulo M to c1 t + c0 and solve r = -c1^{-1} c0.
/// Requires that M divides norm(P); a non-invertible c1 is the non-generic
/// case and is reported as such.
template <class S>
DualQuaternion<S> extract_right_factor(const MotionPolynomial<S>& P, const RealQuadratic<S>& M) {
    if (!detail::divides_norm(M, mp_norm(P)))
        throw InvalidArgument("extract_right_factor: quadratic does not divide norm(P)");
    auto [c0, c1] = detail::mod_quadratic(P, M);
    if (c1.is_zero() || scalar_traits<S>::is_zero(c1.norm().re))
        throw NonGenericError("extract_right_factor: remainder not invertible (non-generic factor)");
    return -(c1.inverse() * c0);
}

/// Right division P = Q * (t - r) + rem with rem constant.
template <class S>
std::pair<MotionPolynomial<S>, DualQuaternion<S>> divide_right_linear(const MotionPolynomial<S>& P,
                                                                      const DualQuaternion<S>& r) {
    const int n = P.degree();
    if (n < 1) return {MotionPolynomial<S>{}, n == 0 ? P.coeff(0) : DualQuaternion<S>::zero()};
    std::vector<DualQuaternion<S>> q(static_cast<size_t>(n));
    q[static_cast<size_t>(n - 1)] = P.coeff(n);
    for (int k = n - 1; k >= 1; --k)
        q[static_cast<size_t>(k - 1)] = P.coeff(k) + q[static_cast<size_t>(k)] * r;
    DualQuaternion<S> rem = P.coeff(0) + q[0] * r;
    return {MotionPolynomial<S>(std::move(q)), rem};
}

/// One ordered factorization P = (t - r[0])(t - r[1])(t - r[2]); order[i]
/// records which input norm quadratic each factor's norm equals.
template <class S>
struct CubicFactorization {
    std::array<DualQuaternion<S>, 3> roots;
    std::array<int, 3> order;
};

template <class S>
struct FactorCubicResult {
    std::vector<CubicFactorization<S>> factorizations;
    bool non_generic = false;   // repeated norm quadratics: enumeration is partial
};

/// Splits the real norm sextic of P into three monic quadratics.
/// Exact inputs synthesized from revolute factors carry their quadratics
/// along instead; this routine serves imported polynomials, factoring
/// numerically and, in exact mode, rationalizing and verifying exactly.
template <class S>
std::array<RealQuadratic<S>, 3> norm_quadratics(const MotionPolynomial<S>& P) {
    const RealPoly<S> norm = mp_norm(P);
    if (static_cast<int>(norm.size()) - 1 != 6)
        throw InvalidArgument("norm_quadratics: expected a degree-6 norm");

    std::vector<double> n(7);
    for (size_t i = 0; i < 7; ++i) n[i] = scalar_traits<S>::to_double(norm[i]) /
                                          scalar_traits<S>::to_double(norm[6]);
    // Companion matrix rootfinding on the monic sextic.
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(6, 6);
    for (int i = 0; i < 6; ++i) C(i, 5) = -n[static_cast<size_t>(i)];
    for (int i = 1; i < 6; ++i) C(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    if (es.info() != Eigen::Success) throw NumericError("norm_quadratics: eigensolver failed");

    std::vector<std::complex<double>> roots;
    for (int i = 0; i < 6; ++i) roots.push_back(es.eigenvalues()(i));
    double scale = 1.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    std::vector<std::complex<double>> upper;
    for (const auto& z : roots) {
        if (std::fabs(z.imag()) <= 1e-7 * scale)
            throw NonGenericError("norm_quadratics: norm has a real root (not a composition of revolutions)");
        if (z.imag() > 0.0) upper.push_back(z);
    }
    if (upper.size() != 3) throw NumericError("norm_quadratics: conjugate pairing failed");
    std::sort(upper.begin(), upper.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    std::array<RealQuadratic<S>, 3> out;
    for (size_t i = 0; i < 3; ++i) {
        const double p = -2.0 * upper[i].real();
        const double q = std::norm(upper[i]);
        if constexpr (scalar_traits<S>::is_exact) {
            RealQuadratic<S> cand{Rational::rationalize(p, 1e-10), Rational::rationalize(q, 1e-10)};
            if (!detail::divides_norm(cand, norm))
                throw NumericError("norm_quadratics: rationalized factor failed exact verification");
            out[i] = cand;
        } else {
            out[i] = {p, q};
        }
    }
    return out;
}

/// All monic linear factorizations of a cubic motion polynomial, one per
/// ordering of the three norm quadratics; factorizations that fail exact
/// re-multiplication are discarded. Repeated quadratics mark the result as
/// non-generic (the enumeration is then partial).
template <class S>
FactorCubicResult<S> factor_cubic(const MotionPolynomial<S>& P,
                                  const std::array<RealQuadratic<S>, 3>& quadratics) {
    if (P.degree() != 3 || !P.is_monic())
        throw InvalidArgument("factor_cubic: expected a monic cubic");
    FactorCubicResult<S> result;
    result.non_generic = quadratics[0] == quadratics[1] || quadratics[0] == quadratics[2] ||
                         quadratics[1] == quadratics[2];

    std::array<int, 3> idx{0, 1, 2};
    std::vector<std::array<int, 3>> seen;
    std::sort(idx.begin(), idx.end());
    do {
        // Skip index-permutations that repeat an identical quadratic ordering.
        bool dup = false;
        for (const auto& s : seen) {
            bool same = true;
            for (int i = 0; i < 3; ++i)
                same = same && quadratics[static_cast<size_t>(s[static_cast<size_t>(i)])] ==
                                   quadratics[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            if (same) { dup = true; break; }
        }
        if (dup) continue;
        seen.push_back(idx);

        try {
            const DualQuaternion<S> r3 = extract_right_factor(P, quadratics[static_cast<size_t>(idx[2])]);
            auto [P2, rem3] = divide_right_linear(P, r3);
            if (!rem3.is_zero() && scalar_traits<S>::is_exact) continue;
            const DualQuaternion<S> r2 = extract_right_factor(P2, quadratics[static_cast<size_t>(idx[1])]);
            auto [P1, rem2] = divide_right_linear(P2, r2);
            if (!rem2.is_zero() && scalar_traits<S>::is_exact) continue;
            if (P1.degree() != 1) continue;
            const DualQuaternion<S> r1 = -P1.coeff(0);

            CubicFactorization<S> f{{r1, r2, r3}, idx};
            const MotionPolynomial<S> re =
                MotionPolynomial<S>::linear(r1) * MotionPolynomial<S>::linear(r2) *
                MotionPolynomial<S>::linear(r3);
            if constexpr (scalar_traits<S>::is_exact) {
                if (!(re == P)) continue;
            } else {
                double worst = 0.0, scale = 1e-300;
                const MotionPolynomial<S> diff = re - P;
                for (int i = 0; i <= P.degree(); ++i) scale = std::max(scale, P.coeff(i).max_abs_coord());
                for (int i = 0; i <= diff.degree(); ++i) worst = std::max(worst, diff.coeff(i).max_abs_coord());
                if (worst > kFloatTolerance * scale) continue;
            }
            result.factorizations.push_back(std::move(f));
        } catch (const NonGenericError&) {
            result.non_generic = true;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));

    if (result.factorizations.empty())
        throw NonGenericError("factor_cubic: no factorization verified");
    return result;
}

template <class S>
FactorCubicResult<S> factor_cubic(const MotionPolynomial<S>& P) {
    return factor_cubic(P, norm_quadratics(P));
}

/// Builds the 6R linkage spanned by the two norm-matched factorizations of
/// R1 R2 R3: the companion factorization (t-r6)(t-r5)(t-r4) satisfying
/// norm(R_{i+3}) = norm(R_i) supplies the opposite joints, with the
/// representative of h_{i+3} oriented so that b_{i+3} = -b_i. The degree-6
/// closure product is verified to be a real polynomial.
template <class S>
Linkage<S> linkage_from_cubic(const RevoluteFactor<S>& R1, const RevoluteFactor<S>& R2,
                              const RevoluteFactor<S>& R3) {
    const std::array<RealQuadratic<S>, 3> quads{R1.norm_quadratic(), R2.norm_quadratic(),
                                                R3.norm_quadratic()};
    if (quads[0] == quads[1] || quads[0] == quads[2] || quads[1] == quads[2])
        throw NonGenericError("linkage_from_cubic: norm quadratics must be pairwise distinct");

    const MotionPolynomial<S> P = R1.poly() * R2.poly() * R3.poly();
    const FactorCubicResult<S> fact = factor_cubic(P, quads);

    const CubicFactorization<S>* dual = nullptr;
    for (const auto& f : fact.factorizations) {
        if (f.order == std::array<int, 3>{2, 1, 0}) { dual = &f; break; }
    }
    if (!dual)
        throw NonGenericError("linkage_from_cubic: no norm-matched companion factorization");

    // roots = (r6, r5, r4); axis representative of joint i+3 is (a_i - r)/b_i.
    const std::array<const RevoluteFactor<S>*, 3> Rs{&R1, &R2, &R3};
    std::array<Line<S>, 6> joints{R1.axis, R2.axis, R3.axis, R1.axis, R2.axis, R3.axis};
    for (int i = 0; i < 3; ++i) {
        const RevoluteFactor<S>& R = *Rs[static_cast<size_t>(i)];
        const DualQuaternion<S>& r = dual->roots[static_cast<size_t>(2 - i)];
        const S inv_b = scalar_traits<S>::one() / R.b;
        joints[static_cast<size_t>(i + 3)] =
            Line<S>::from_dq(inv_b * (DualQuaternion<S>::scalar(R.a) - r));
    }

    Linkage<S> L = Linkage<S>::from_lines(std::move(joints));

    // Reality of (t-a1-b1 h1)...(t-a3-b3 h6): the closure identity along the
    // configuration curve, checked coefficient-wise.
    MotionPolynomial<S> closure = P;
    for (int i = 0; i < 3; ++i) {
        const RevoluteFactor<S>& R = *Rs[static_cast<size_t>(i)];
        closure = closure * MotionPolynomial<S>::linear(DualQuaternion<S>::scalar(R.a) +
                                                        R.b * L.joint(i + 3).dq());
    }
    for (int i = 0; i <= closure.degree(); ++i) {
        const DualQuaternion<S>& c = closure.coeff(i);
        for (int b = 1; b < 8; ++b) {
            bool bad;
            if constexpr (scalar_traits<S>::is_exact) {
                bad = !scalar_traits<S>::is_zero(c[b]);
            } else {
                bad = std::fabs(c[b]) > kFloatTolerance * std::max(1.0, c.max_abs_coord());
            }
            if (bad)
                throw NonGenericError("linkage_from_cubic: degree-6 closure product is not real");
        }
    }
    return L;
}

} // namespace hexalink
