#pragma once

#include <array>
#include <ostream>
#include <sstream>

#include "hexalink/dual_number.hpp"
#include "hexalink/errors.hpp"
#include "hexalink/scalar.hpp"

namespace hexalink {

template <class S>
struct Vec3 {
    std::array<S, 3> v{scalar_traits<S>::zero(), scalar_traits<S>::zero(),
                       scalar_traits<S>::zero()};

    Vec3() = default;
    Vec3(S x, S y, S z) : v{std::move(x), std::move(y), std::move(z)} {}

    const S& operator[](int i) const { return v[static_cast<size_t>(i)]; }
    S& operator[](int i) { return v[static_cast<size_t>(i)]; }

    bool is_zero() const {
        return scalar_traits<S>::is_zero(v[0]) && scalar_traits<S>::is_zero(v[1]) &&
               scalar_traits<S>::is_zero(v[2]);
    }
    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.v[0] - b.v[0], a.v[1] - b.v[1], a.v[2] - b.v[2]};
    }
    friend Vec3 operator*(const S& s, const Vec3& a) {
        return {s * a.v[0], s * a.v[1], s * a.v[2]};
    }
    friend bool operator==(const Vec3& a, const Vec3& b) { return a.v == b.v; }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Element of the 8-dimensional algebra of dual quaternions.
///
/// Coordinates are stored on the fixed basis (1, i, j, k, eps, eps*i, eps*j,
/// eps*k); this order is also the realification order used by the lambda
/// matrix. eps is central, eps^2 = 0, and (i, j, k) multiply as quaternions.
template <class S>
class DualQuaternion {
public:
    using Coords = std::array<S, 8>;

    DualQuaternion() { c_.fill(scalar_traits<S>::zero()); }
    explicit DualQuaternion(Coords c) : c_(std::move(c)) {}

    static DualQuaternion zero() { return DualQuaternion(); }
    static DualQuaternion one() {
        DualQuaternion q;
        q.c_[0] = scalar_traits<S>::one();
        return q;
    }
    static DualQuaternion scalar(const S& s) {
        DualQuaternion q;
        q.c_[0] = s;
        return q;
    }
    static DualQuaternion from_dual_number(const DualNumber<S>& d) {
        DualQuaternion q;
        q.c_[0] = d.re;
        q.c_[4] = d.du;
        return q;
    }
    /// Pure vectorial element p + eps*m (no coefficients on 1 and eps).
    static DualQuaternion vectorial(const Vec3<S>& primal, const Vec3<S>& dual) {
        DualQuaternion q;
        for (int i = 0; i < 3; ++i) {
            q.c_[static_cast<size_t>(i) + 1] = primal[i];
            q.c_[static_cast<size_t>(i) + 5] = dual[i];
        }
        return q;
    }

    const S& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    S& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const Coords& coords() const { return c_; }

    Vec3<S> primal_vec() const { return {c_[1], c_[2], c_[3]}; }
    Vec3<S> dual_vec() const { return {c_[5], c_[6], c_[7]}; }
    DualNumber<S> scalar_part() const { return {c_[0], c_[4]}; }

    bool is_zero() const {
        for (const S& x : c_)
            if (!scalar_traits<S>::is_zero(x)) return false;
        return true;
    }
    /// True when the coefficients on 1 and eps vanish.
    bool is_pure() const {
        return scalar_traits<S>::is_zero(c_[0]) && scalar_traits<S>::is_zero(c_[4]);
    }

    DualQuaternion operator-() const {
        DualQuaternion q;
        for (size_t i = 0; i < 8; ++i) q.c_[i] = -c_[i];
        return q;
    }
    friend DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) {
        DualQuaternion q;
        for (size_t i = 0; i < 8; ++i) q.c_[i] = a.c_[i] + b.c_[i];
        return q;
    }
    friend DualQuaternion operator-(const DualQuaternion& a, const DualQuaternion& b) {
        DualQuaternion q;
        for (size_t i = 0; i < 8; ++i) q.c_[i] = a.c_[i] - b.c_[i];
        return q;
    }
    friend DualQuaternion operator*(const S& s, const DualQuaternion& a) {
        DualQuaternion q;
        for (size_t i = 0; i < 8; ++i) q.c_[i] = s * a.c_[i];
        return q;
    }
    /// Central multiplication by a dual number a + eps*b.
    friend DualQuaternion operator*(const DualNumber<S>& d, const DualQuaternion& a) {
        DualQuaternion q;
        for (size_t i = 0; i < 4; ++i) q.c_[i] = d.re * a.c_[i];
        for (size_t i = 4; i < 8; ++i) q.c_[i] = d.re * a.c_[i] + d.du * a.c_[i - 4];
        return q;
    }
    friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) {
        return a.c_ == b.c_;
    }

    friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
        // (p + eps q)(r + eps s) = pr + eps(ps + qr)
        DualQuaternion out;
        std::array<S, 4> pr = qmul(a.c_, 0, b.c_, 0);
        std::array<S, 4> ps = qmul(a.c_, 0, b.c_, 4);
        std::array<S, 4> qr = qmul(a.c_, 4, b.c_, 0);
        for (size_t i = 0; i < 4; ++i) {
            out.c_[i] = pr[i];
            out.c_[i + 4] = ps[i] + qr[i];
        }
        return out;
    }

    /// Conjugation negates the six vectorial coordinates.
    DualQuaternion conj() const {
        DualQuaternion q = *this;
        for (size_t i : {1u, 2u, 3u, 5u, 6u, 7u}) q.c_[i] = -q.c_[i];
        return q;
    }

    /// a * conj(a); always a dual number.
    DualNumber<S> norm() const {
        // For p + eps q this is |p|^2 + 2 eps <p, q>; the vector coordinates
        // cancel identically, so the closed form is used directly.
        S re = c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
        S du = c_[0] * c_[4] + c_[1] * c_[5] + c_[2] * c_[6] + c_[3] * c_[7];
        const S two = scalar_traits<S>::from_fraction(2, 1);
        return {re, two * du};
    }

    /// Inverse with respect to multiplication: conj(a) * norm(a)^{-1}.
    DualQuaternion inverse() const {
        return norm().inverse() * conj();
    }

    double max_abs_coord() const {
        double m = 0.0;
        for (const S& x : c_) m = std::max(m, std::fabs(scalar_traits<S>::to_double(x)));
        return m;
    }

    std::string str() const {
        static const char* names[8] = {"", "i", "j", "k", "e", "ei", "ej", "ek"};
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < 8; ++i) {
            if (scalar_traits<S>::is_zero(c_[i])) continue;
            if (!first) os << " + ";
            os << "(" << scalar_traits<S>::str(c_[i]) << ")" << names[i];
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static std::array<S, 4> qmul(const Coords& a, size_t ao, const Coords& b, size_t bo) {
        const S& w1 = a[ao], &x1 = a[ao + 1], &y1 = a[ao + 2], &z1 = a[ao + 3];
        const S& w2 = b[bo], &x2 = b[bo + 1], &y2 = b[bo + 2], &z2 = b[bo + 3];
        return {w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2};
    }

    Coords c_;
};

/// Conjugate together with the norm; the two always travel together in the
/// closure computations.
template <class S>
std::pair<DualQuaternion<S>, DualNumber<S>> conj_and_norm(const DualQuaternion<S>& a) {
    return {a.conj(), a.norm()};
}

template <class S>
void require_pure(const DualQuaternion<S>& a, const char* what) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (!a.is_pure()) throw InvalidArgument(std::string(what) + ": input is not purely vectorial");
    } else {
        const double scale = std::max(1e-300, a.max_abs_coord());
        if (std::fabs(a[0]) > kFloatTolerance * scale || std::fabs(a[4]) > kFloatTolerance * scale)
            throw InvalidArgument(std::string(what) + ": input is not purely vectorial");
    }
}

/// Cross product of purely vectorial elements: (gh - hg)/2.
template <class S>
DualQuaternion<S> dq_cross(const DualQuaternion<S>& g, const DualQuaternion<S>& h) {
    require_pure(g, "dq_cross");
    require_pure(h, "dq_cross");
    const S half = scalar_traits<S>::from_fraction(1, 2);
    return half * (g * h - h * g);
}

/// Inner product of purely vectorial elements: -(gh + hg)/2, a dual number.
template <class S>
DualNumber<S> dq_inner(const DualQuaternion<S>& g, const DualQuaternion<S>& h) {
    require_pure(g, "dq_inner");
    require_pure(h, "dq_inner");
    // -(gh + hg)/2 has no vector part; assemble it from coordinates.
    const S two = scalar_traits<S>::from_fraction(2, 1);
    S re = dot(g.primal_vec(), h.primal_vec());
    S du = dot(g.primal_vec(), h.dual_vec()) + dot(g.dual_vec(), h.primal_vec());
    return {re, du};
}

/// Both halves of the identity gh = -<g,h> + g x h for pure g, h.
template <class S>
std::pair<DualQuaternion<S>, DualNumber<S>> cross_inner(const DualQuaternion<S>& g,
                                                        const DualQuaternion<S>& h) {
    return {dq_cross(g, h), dq_inner(g, h)};
}

template <class S>
std::ostream& operator<<(std::ostream& os, const DualQuaternion<S>& q) {
    return os << q.str();
}

} // namespace hexalink
