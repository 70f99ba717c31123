#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hexalink/lambda_matrix.hpp"
#include "hexalink/motion_polynomial.hpp"
#include "hexalink/polynomials.hpp"

namespace hexalink {

template <class S>
struct LineSymmetricFamily {
    Line<S> axis;
};

struct ParallelPropertyFamily {
    ParallelPairing pairing;
};

template <class S>
struct CubicTypeFamily {
    std::array<std::pair<S, S>, 3> pairs;   // (a_i, b_i) in the (0,1)-gauge
};

struct UndeterminedFamily {
    std::string reason;
};

template <class S>
using Family = std::variant<LineSymmetricFamily<S>, ParallelPropertyFamily, CubicTypeFamily<S>,
                            UndeterminedFamily>;

template <class S>
struct ClassificationResult {
    int rank = 0;
    Family<S> family{UndeterminedFamily{}};

    bool undetermined() const { return std::holds_alternative<UndeterminedFamily>(family); }
};

/// Recovers the symmetry line of a line symmetric linkage: some
/// g_i = h_i + h_{i+3} with nonzero primal part is a dual multiple of the
/// axis, so l = g_i / sqrt(g_i conj(g_i)). The recovered axis is verified by
/// h_{i+3} = l h_i l^{-1} for all three pairs before it is returned.
template <class S>
Line<S> recover_symmetry_line(const Linkage<S>& L) {
    const auto gs = L.g();
    std::optional<Line<S>> axis;
    std::string last_error = "all g_i have zero primal part (planar degenerate)";
    for (const auto& g : gs) {
        const bool primal_ok = [&] {
            if constexpr (scalar_traits<S>::is_exact) {
                return !g.primal_vec().is_zero();
            } else {
                return !(std::fabs(g[1]) <= kFloatTolerance && std::fabs(g[2]) <= kFloatTolerance &&
                         std::fabs(g[3]) <= kFloatTolerance);
            }
        }();
        if (!primal_ok) continue;
        try {
            const DualNumber<S> beta = g.norm();
            const DualQuaternion<S> cand = beta.sqrt().inverse() * g;
            axis = Line<S>::from_dq(cand);
            break;
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    if (!axis) throw DegenerateError(std::string("recover_symmetry_line: ") + last_error);

    const DualQuaternion<S>& l = axis->dq();
    for (int i = 0; i < 3; ++i) {
        // l^{-1} = -l for a line, so l h l^{-1} = -l h l.
        const DualQuaternion<S> mapped = -(l * L.joint(i).dq() * l);
        const DualQuaternion<S> diff = mapped - L.joint(i + 3).dq();
        bool ok;
        if constexpr (scalar_traits<S>::is_exact) {
            ok = diff.is_zero();
        } else {
            ok = diff.max_abs_coord() <= 1e-7;
        }
        if (!ok)
            throw DegenerateError("recover_symmetry_line: verification failed for pair " +
                                  std::to_string(i + 1) + "," + std::to_string(i + 4));
    }
    return axis->canonical();
}

/// Linear relation b*t_a + c*t_b + d = 0 (1-based variable indices, bc != 0)
/// valid on the angle-symmetric configuration curve.
struct LinearRelation {
    int var_a = 1;
    int var_b = 2;
    Rational b, c, d;
};

namespace detail {

// Trilinear form of a real row v contracted against X, viewed as A*t_e + B
// with A, B bivariate in the two remaining variables (in increasing index
// order). Monomial layout of X: [t1t2, t1t3, t2t3, t3, t2, t1, 1].
struct SlicedRow {
    Poly2 A;   // coefficient of the eliminated variable
    Poly2 B;
};

inline Poly2 poly2_from_terms(const Rational& xy, const Rational& x, const Rational& y,
                              const Rational& one) {
    Poly2 p(2);
    p[0] = poly::trim({one, x});
    p[1] = poly::trim({y, xy});
    return poly2::trim(std::move(p));
}

inline SlicedRow slice_row(const std::array<Rational, 7>& v, int elim) {
    // exponents of (t1,t2,t3) per X entry
    static constexpr int exps[7][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1},
                                       {0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    int rem[2], k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != elim - 1) rem[k++] = i;
    Rational A_terms[4], B_terms[4];   // index: x + 2*y
    for (int m = 0; m < 7; ++m) {
        const int ex = exps[m][rem[0]], ey = exps[m][rem[1]];
        const int slot = ex + 2 * ey;
        if (exps[m][elim - 1] == 1)
            A_terms[slot] += v[static_cast<size_t>(m)];
        else
            B_terms[slot] += v[static_cast<size_t>(m)];
    }
    return {poly2_from_terms(A_terms[3], A_terms[1], A_terms[2], A_terms[0]),
            poly2_from_terms(B_terms[3], B_terms[1], B_terms[2], B_terms[0])};
}

// Resultant of two forms linear in the eliminated variable: A1 B2 - A2 B1.
inline Poly2 eliminate(const SlicedRow& f, const SlicedRow& g) {
    return poly2::sub(poly2::mul(f.A, g.B), poly2::mul(g.A, f.B));
}

// Extracts affine-linear candidates c*y = -(b*x + d) from a bivariate gcd of
// bidegree at most (2,2): either the gcd itself is such a form, or it is
// quadratic in y and its roots over Q(x) are polynomials of degree <= 1,
// detected through an exact polynomial square root of the discriminant.
inline std::vector<LinearRelation> linear_candidates(const Poly2& G, int var_a, int var_b) {
    std::vector<LinearRelation> out;
    const auto push_from_root = [&](const Poly1& num, const Poly1& den) {
        // y = num/den with den a nonzero constant and num of degree <= 1:
        // relation den*y - num = 0.
        if (poly::degree(den) != 0 || poly::degree(num) > 1) return;
        LinearRelation rel;
        rel.var_a = var_a;
        rel.var_b = var_b;
        rel.c = den[0];
        rel.b = poly::degree(num) >= 1 ? -num[1] : Rational(0);
        rel.d = num.empty() ? Rational(0) : -num[0];
        if (rel.b.is_zero() || rel.c.is_zero()) return;   // bc != 0
        out.push_back(rel);
    };

    const int dy = poly2::degree_y(G);
    if (dy == 1) {
        const Poly1 g1 = G.size() > 1 ? G[1] : Poly1{};
        const Poly1 g0 = !G.empty() ? G[0] : Poly1{};
        const Poly1 common = poly::gcd(g1, g0);
        if (!common.empty()) {
            auto [den, r1] = poly::divmod(g1, common);
            auto [num, r0] = poly::divmod(g0, common);
            if (r1.empty() && r0.empty()) push_from_root(poly::scale(num, Rational(-1)), den);
        }
    } else if (dy == 2) {
        const Poly1 g2 = G[2], g1 = G.size() > 1 ? G[1] : Poly1{}, g0 = !G.empty() ? G[0] : Poly1{};
        const Poly1 disc = poly::sub(poly::mul(g1, g1), poly::scale(poly::mul(g2, g0), Rational(4)));
        const auto s = poly::sqrt(disc);
        if (s) {
            for (const int sign : {+1, -1}) {
                const Poly1 num = poly::add(poly::scale(g1, Rational(-1)), poly::scale(*s, Rational(sign)));
                const Poly1 den = poly::scale(g2, Rational(2));
                // reduce num/den to lowest terms before the shape test
                const Poly1 common = poly::gcd(num, den);
                if (common.empty()) continue;
                auto [n2, rn] = poly::divmod(num, common);
                auto [d2, rd] = poly::divmod(den, common);
                if (rn.empty() && rd.empty()) push_from_root(n2, d2);
            }
        }
    }
    return out;
}

inline std::vector<std::array<Rational, 7>> exact_row_basis(const LambdaMatrix<Rational>& M,
                                                            int want) {
    std::vector<std::array<Rational, 7>> rows(48);
    for (int r = 0; r < 48; ++r)
        for (int c = 0; c < 7; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = M.real_entry(r, c);
    // Gauss-Jordan; the surviving nonzero rows span the row space.
    size_t rank = 0;
    for (int col = 0; col < 7 && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][static_cast<size_t>(col)].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Rational pv = rows[rank][static_cast<size_t>(col)];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][static_cast<size_t>(col)].is_zero()) continue;
            const Rational f = rows[r][static_cast<size_t>(col)] / pv;
            for (int c = 0; c < 7; ++c)
                rows[r][static_cast<size_t>(c)] -= f * rows[rank][static_cast<size_t>(c)];
        }
        ++rank;
        if (static_cast<int>(rank) == want) break;
    }
    rows.resize(rank);
    return rows;
}

} // namespace detail

/// Lemma-style elimination: from four independent trilinear closure
/// equations, resultants eliminating one variable share a gcd whose
/// admissible factor is a linear relation b*t_a + c*t_b + d with bc != 0.
/// Returns the candidates found for every eliminated variable; throws when
/// no admissible factor exists anywhere (carrying the offending bidegrees).
inline std::vector<LinearRelation> find_linear_relations(const LambdaMatrix<Rational>& M) {
    if (lambda_rank_exact(M) != 4)
        throw InvalidArgument("find_linear_relations requires rank 4");
    const auto basis = detail::exact_row_basis(M, 4);

    std::vector<LinearRelation> out;
    std::string gcd_shapes;
    for (int elim = 3; elim >= 1; --elim) {
        const int var_a = elim == 1 ? 2 : 1;
        const int var_b = elim == 3 ? 2 : 3;
        std::vector<detail::SlicedRow> sliced;
        for (const auto& row : basis) sliced.push_back(detail::slice_row(row, elim));

        bool found = false;
        for (size_t first = 0; first < sliced.size() && !found; ++first) {
            Poly2 G;
            bool any = false;
            for (size_t i = 0; i < sliced.size(); ++i) {
                if (i == first) continue;
                Poly2 res = detail::eliminate(sliced[first], sliced[i]);
                if (poly2::is_zero(res)) continue;
                G = any ? poly2::gcd(G, res) : std::move(res);
                any = true;
            }
            if (!any || poly2::is_zero(G)) continue;
            auto cands = detail::linear_candidates(G, var_a, var_b);
            for (auto& rel : cands) {
                out.push_back(rel);
                found = true;
            }
            if (!found)
                gcd_shapes += " t" + std::to_string(var_a) + ",t" + std::to_string(var_b) +
                              ":(" + std::to_string(poly2::degree_x(G)) + "," +
                              std::to_string(poly2::degree_y(G)) + ")";
        }
    }
    if (out.empty())
        throw DegenerateError("find_linear_relations: no admissible gcd factor; bidegrees" +
                              (gcd_shapes.empty() ? std::string(" none") : gcd_shapes));
    return out;
}

/// Recovers the (a_i, b_i) parameters of a rank-4 linkage in the gauge
/// (a_1, b_1) = (0, 1): t_i = (t - a_i)/b_i with t = t_1. Every candidate
/// pair of relations is checked against the exact identity
/// R1 R2 R3 = R6 R5 R4 before being accepted.
inline std::array<std::pair<Rational, Rational>, 3> recover_cubic_parametrization(
    const Linkage<Rational>& L) {
    const auto relations = find_linear_relations(build_lambda_matrix(L));

    // t_b as an affine function of t_a: t_b = alpha * t_a + beta.
    struct Affine { Rational alpha, beta; };
    const auto to_affine = [](const LinearRelation& r) -> Affine {
        return {-r.b / r.c, -r.d / r.c};
    };
    const auto to_pair = [](const Affine& f) -> std::pair<Rational, Rational> {
        // t_b = (t - a)/b  <=>  alpha = 1/b, beta = -a/b
        const Rational b = Rational(1) / f.alpha;
        return {-f.beta * b, b};
    };

    std::vector<Affine> t2_maps, t3_maps;
    for (const auto& r : relations) {
        if (r.var_a == 1 && r.var_b == 2) t2_maps.push_back(to_affine(r));
        if (r.var_a == 1 && r.var_b == 3) t3_maps.push_back(to_affine(r));
    }
    // Compose through (t2,t3) relations when a direct one is missing.
    for (const auto& r : relations) {
        if (!(r.var_a == 2 && r.var_b == 3)) continue;
        const Affine f23 = to_affine(r);
        for (const auto& f12 : t2_maps)
            t3_maps.push_back({f23.alpha * f12.alpha, f23.alpha * f12.beta + f23.beta});
    }
    if (t2_maps.empty() || t3_maps.empty())
        throw DegenerateError("recover_cubic_parametrization: relations do not determine t2 and t3");

    const auto one = MotionPolynomial<Rational>::constant(DualQuaternion<Rational>::one());
    for (const auto& f2 : t2_maps) {
        for (const auto& f3 : t3_maps) {
            if (f2.alpha.is_zero() || f3.alpha.is_zero()) continue;
            std::array<std::pair<Rational, Rational>, 3> pairs{
                std::pair<Rational, Rational>{Rational(0), Rational(1)}, to_pair(f2), to_pair(f3)};
            // R1 R2 R3 == R6 R5 R4 with R_{i+3} = t - a_i + b_i h_{i+3}.
            MotionPolynomial<Rational> left = one, right = one;
            for (int i = 0; i < 3; ++i) {
                const auto& [a, b] = pairs[static_cast<size_t>(i)];
                left = left * MotionPolynomial<Rational>::linear(
                                  DualQuaternion<Rational>::scalar(a) + b * L.joint(i).dq());
            }
            for (int i = 2; i >= 0; --i) {
                const auto& [a, b] = pairs[static_cast<size_t>(i)];
                right = right * MotionPolynomial<Rational>::linear(
                                    DualQuaternion<Rational>::scalar(a) - b * L.joint(i + 3).dq());
            }
            if (left == right) return pairs;
        }
    }
    throw DegenerateError("recover_cubic_parametrization: identity verification failed");
}

namespace detail {

/// Exact rational points of the angle-symmetric curve on a few slices
/// t3 = const, searching both closure signs (the lambda = -1 system keeps
/// its t1 t2 t3 monomial, which the slice absorbs). Used to move a linkage
/// to a nontrivial symmetric position when classifying.
inline std::optional<SymConfiguration<Rational>> find_symmetric_configuration(
    const Linkage<Rational>& L) {
    static const long long kSliceNums[] = {1, -1, 2, -2, 1, -1, 3, -3, 5, -5};
    static const long long kSliceDens[] = {1, 1, 1, 1, 2, 2, 1, 1, 2, 2};
    struct Bilinear { Rational A, B, C, D; };   // A t1 t2 + B t1 + C t2 + D

    for (const int lambda : {+1, -1}) {
        std::array<std::array<DualQuaternion<Rational>, 8>, 6> rows;
        for (int s = 0; s < 6; ++s) rows[static_cast<size_t>(s)] = closure_system_row(L, s, lambda);

        for (size_t k = 0; k < sizeof(kSliceNums) / sizeof(kSliceNums[0]); ++k) {
            const Rational t3(kSliceNums[k], kSliceDens[k]);
            // Substitute t3 into every realified equation. Monomials:
            // [t1t2t3, t1t2, t1t3, t2t3, t3, t2, t1, 1].
            std::vector<Bilinear> eqs;
            for (const auto& row : rows) {
                for (int b = 0; b < 8; ++b) {
                    Bilinear e{row[0][b] * t3 + row[1][b], row[2][b] * t3 + row[6][b],
                               row[3][b] * t3 + row[5][b], row[4][b] * t3 + row[7][b]};
                    if (!(e.A.is_zero() && e.B.is_zero() && e.C.is_zero() && e.D.is_zero()))
                        eqs.push_back(e);
                }
            }
            for (size_t i = 0; i + 1 < eqs.size(); ++i) {
                for (size_t j = i + 1; j < eqs.size(); ++j) {
                    const auto& F = eqs[i];
                    const auto& G = eqs[j];
                    // Eliminate t1: quadratic q2 t2^2 + q1 t2 + q0 = 0.
                    const Rational q2 = F.A * G.C - G.A * F.C;
                    const Rational q1 = F.A * G.D + F.B * G.C - G.A * F.D - G.B * F.C;
                    const Rational q0 = F.B * G.D - G.B * F.D;
                    std::vector<Rational> roots;
                    if (!q2.is_zero()) {
                        const auto disc = exact_sqrt(q1 * q1 - Rational(4) * q2 * q0);
                        if (!disc) continue;
                        roots.push_back((-q1 + *disc) / (Rational(2) * q2));
                        roots.push_back((-q1 - *disc) / (Rational(2) * q2));
                    } else if (!q1.is_zero()) {
                        roots.push_back(-q0 / q1);
                    } else {
                        continue;
                    }
                    for (const auto& t2 : roots) {
                        const Rational den = F.A * t2 + F.B;
                        if (den.is_zero()) continue;
                        const Rational t1 = -(F.C * t2 + F.D) / den;
                        const auto tau = SymConfiguration<Rational>::of(
                            ConfigParam<Rational>::finite(t1), ConfigParam<Rational>::finite(t2),
                            ConfigParam<Rational>::finite(t3));
                        try {
                            if (closure_residual(L, tau).residual.is_zero()) return tau;
                        } catch (const Error&) {
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// The classification algorithm: exact rank of the lambda matrix decides the
/// family, then the family's defining data is recovered and verified.
template <class S>
ClassificationResult<S> classify(const Linkage<S>& L);

template <>
inline ClassificationResult<Rational> classify<Rational>(const Linkage<Rational>& L) {
    ClassificationResult<Rational> res;
    const auto M = build_lambda_matrix(L);
    res.rank = lambda_rank_exact(M);

    switch (res.rank) {
    case 2:
        try {
            res.family = LineSymmetricFamily<Rational>{recover_symmetry_line(L)};
        } catch (const Error& e) {
            res.family = UndeterminedFamily{std::string("rank 2 but symmetry line not recovered: ") + e.what()};
        }
        break;
    case 3: {
        auto pairing = parallel_pairing(L);
        if (!pairing) {
            // Move to a nontrivial symmetric position and retry once.
            if (auto tau = detail::find_symmetric_configuration(L)) {
                try {
                    pairing = parallel_pairing(transform_by_configuration(L, *tau));
                } catch (const Error&) {
                }
            }
        }
        if (pairing)
            res.family = ParallelPropertyFamily{*pairing};
        else
            res.family = UndeterminedFamily{
                "rank 3 but no parallel pairing found at the initial or a transformed position"};
        break;
    }
    case 4:
        try {
            res.family = CubicTypeFamily<Rational>{recover_cubic_parametrization(L)};
        } catch (const Error& e) {
            res.family = UndeterminedFamily{std::string("rank 4 but parametrization not recovered: ") + e.what()};
        }
        break;
    default:
        res.family = UndeterminedFamily{"no one-dimensional angle-symmetric motion certified (rank " +
                                        std::to_string(res.rank) + ")"};
    }
    return res;
}

/// Float-mode classification is advisory: the rank is a tolerance decision.
/// Rank-4 data recovery lifts the linkage to exact arithmetic.
template <>
inline ClassificationResult<double> classify<double>(const Linkage<double>& L) {
    ClassificationResult<double> res;
    res.rank = lambda_rank_tolerance(build_lambda_matrix(L));

    switch (res.rank) {
    case 2:
        try {
            res.family = LineSymmetricFamily<double>{recover_symmetry_line(L)};
        } catch (const Error& e) {
            res.family = UndeterminedFamily{std::string("rank 2 but symmetry line not recovered: ") + e.what()};
        }
        break;
    case 3: {
        const auto pairing = parallel_pairing(L);
        if (pairing)
            res.family = ParallelPropertyFamily{*pairing};
        else
            res.family = UndeterminedFamily{"rank 3 but no parallel pairing found"};
        break;
    }
    case 4:
        try {
            std::array<Line<Rational>, 6> js = [&] {
                std::array<Line<Rational>, 6> out = {exactify(L.joint(0)), exactify(L.joint(1)),
                                                     exactify(L.joint(2)), exactify(L.joint(3)),
                                                     exactify(L.joint(4)), exactify(L.joint(5))};
                return out;
            }();
            const auto exact = classify<Rational>(Linkage<Rational>::from_lines(js));
            if (const auto* cubic = std::get_if<CubicTypeFamily<Rational>>(&exact.family)) {
                CubicTypeFamily<double> out;
                for (size_t i = 0; i < 3; ++i)
                    out.pairs[i] = {cubic->pairs[i].first.to_double(), cubic->pairs[i].second.to_double()};
                res.family = out;
            } else {
                res.family = UndeterminedFamily{"rank 4 but exact lift did not certify a parametrization"};
            }
        } catch (const Error& e) {
            res.family = UndeterminedFamily{std::string("rank 4 but parametrization not recovered: ") + e.what()};
        }
        break;
    default:
        res.family = UndeterminedFamily{"no one-dimensional angle-symmetric motion certified (rank " +
                                        std::to_string(res.rank) + ")"};
    }
    return res;
}

} // namespace hexalink
