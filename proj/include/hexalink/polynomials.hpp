#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hexalink/errors.hpp"
#include "hexalink/rational.hpp"

namespace hexalink {

/// Dense univariate polynomial over the exact rationals, ascending
/// coefficients, always trimmed. Small fixed-degree inputs only (the
/// elimination steps never exceed degree 6), so schoolbook arithmetic is the
/// right tool.
using Poly1 = std::vector<Rational>;

namespace poly {

inline Poly1 trim(Poly1 p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}
inline int degree(const Poly1& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const Poly1& p) { return p.empty(); }

inline Poly1 add(const Poly1& a, const Poly1& b) {
    Poly1 r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}
inline Poly1 sub(const Poly1& a, const Poly1& b) {
    Poly1 r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}
inline Poly1 mul(const Poly1& a, const Poly1& b) {
    if (a.empty() || b.empty()) return {};
    Poly1 r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}
inline Poly1 scale(const Poly1& a, const Rational& s) {
    Poly1 r = a;
    for (auto& c : r) c *= s;
    return trim(std::move(r));
}

inline std::pair<Poly1, Poly1> divmod(Poly1 a, const Poly1& b) {
    if (b.empty()) throw InvalidArgument("polynomial division by zero");
    a = trim(std::move(a));
    Poly1 q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const size_t d = a.size() - b.size();
        q[d] = f;
        for (size_t i = 0; i < b.size(); ++i) a[d + i] -= f * b[i];
        a = trim(std::move(a));
    }
    return {trim(std::move(q)), std::move(a)};
}

inline Poly1 gcd(Poly1 a, Poly1 b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Rational eval(const Poly1& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

/// Exact polynomial square root: s with s*s == p, if one exists.
inline std::optional<Poly1> sqrt(const Poly1& p) {
    if (p.empty()) return Poly1{};
    const int d = degree(p);
    if (d % 2 != 0) return std::nullopt;
    auto lead = exact_sqrt(p.back());
    if (!lead) return std::nullopt;
    Poly1 s(static_cast<size_t>(d / 2) + 1, Rational(0));
    s.back() = *lead;
    const Rational two_lead = Rational(2) * *lead;
    // Match coefficients from the top down; each unknown appears linearly.
    for (int k = d / 2 - 1; k >= 0; --k) {
        Rational target = static_cast<size_t>(k + d / 2) < p.size()
                              ? p[static_cast<size_t>(k + d / 2)]
                              : Rational(0);
        for (int i = k + 1; i <= d / 2 - 1; ++i) {
            const int j = k + d / 2 - i;
            if (j > d / 2 || j < 0 || j <= k) continue;
            target -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(j)];
        }
        s[static_cast<size_t>(k)] = target / two_lead;
    }
    return mul(s, s) == p ? std::optional<Poly1>(s) : std::nullopt;
}

} // namespace poly

/// Bivariate polynomial over the rationals: coefficients of powers of the
/// second variable, each a Poly1 in the first. Trimmed on both levels.
using Poly2 = std::vector<Poly1>;

namespace poly2 {

inline Poly2 trim(Poly2 p) {
    for (auto& c : p) c = poly::trim(std::move(c));
    while (!p.empty() && p.back().empty()) p.pop_back();
    return p;
}
inline bool is_zero(const Poly2& p) { return p.empty(); }
inline int degree_y(const Poly2& p) { return static_cast<int>(p.size()) - 1; }
inline int degree_x(const Poly2& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, poly::degree(c));
    return d;
}

inline Poly2 add(const Poly2& a, const Poly2& b) {
    Poly2 r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = poly::add(r[i], a[i]);
        if (i < b.size()) r[i] = poly::add(r[i], b[i]);
    }
    return trim(std::move(r));
}
inline Poly2 sub(const Poly2& a, const Poly2& b) {
    Poly2 r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = poly::add(r[i], a[i]);
        if (i < b.size()) r[i] = poly::sub(r[i], b[i]);
    }
    return trim(std::move(r));
}
inline Poly2 mul(const Poly2& a, const Poly2& b) {
    if (a.empty() || b.empty()) return {};
    Poly2 r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = poly::add(r[i + j], poly::mul(a[i], b[j]));
    return trim(std::move(r));
}

/// Content in the first variable: gcd of all Poly1 coefficients.
inline Poly1 content(const Poly2& p) {
    Poly1 g;
    for (const auto& c : p) g = poly::gcd(g, c);
    return g;
}

inline Poly2 divide_content(const Poly2& p, const Poly1& c) {
    Poly2 r(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) continue;
        auto [q, rem] = poly::divmod(p[i], c);
        if (!rem.empty()) throw Error("internal: content division not exact");
        r[i] = std::move(q);
    }
    return trim(std::move(r));
}

/// Pseudo-remainder in the second variable over Q[x].
inline Poly2 pseudo_rem(Poly2 a, const Poly2& b) {
    a = trim(std::move(a));
    if (b.empty()) throw InvalidArgument("pseudo_rem by zero");
    const Poly1& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const Poly1 la = a.back();
        const size_t d = a.size() - b.size();
        Poly2 scaled(a.size());
        for (size_t i = 0; i < a.size(); ++i) scaled[i] = poly::mul(a[i], lb);
        for (size_t i = 0; i < b.size(); ++i)
            scaled[d + i] = poly::sub(scaled[d + i], poly::mul(la, b[i]));
        a = trim(std::move(scaled));
    }
    return a;
}

/// gcd over Q[x][y] via content/primitive split and a primitive-part
/// pseudo-remainder sequence; degrees here never exceed (2,2).
inline Poly2 gcd(Poly2 a, Poly2 b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    const Poly1 ca = content(a), cb = content(b);
    Poly2 pa = divide_content(a, ca), pb = divide_content(b, cb);
    while (!pb.empty()) {
        Poly2 r = pseudo_rem(pa, pb);
        if (!r.empty()) r = divide_content(r, content(r));
        pa = std::move(pb);
        pb = std::move(r);
    }
    const Poly1 cg = poly::gcd(ca, cb);
    Poly2 out(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) out[i] = poly::mul(pa[i], cg);
    return trim(std::move(out));
}

inline Rational eval(const Poly2& p, const Rational& x, const Rational& y) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * y + poly::eval(p[i], x);
    return acc;
}

} // namespace poly2

} // namespace hexalink
