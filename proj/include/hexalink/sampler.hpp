#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include "hexalink/lambda_matrix.hpp"

namespace hexalink {

struct TraceOptions {
    int slice_var = 3;              // which of t1, t2, t3 carries the grid
    double residual_tol = 1e-9;     // closure acceptance, relative
    double dedup_tol = 1e-8;        // nearby roots are considered equal
};

namespace detail {

// One bilinear slice equation A·x·y + B·x + C·y + D = 0 in the two free
// variables, with x the lower-index one.
struct SliceEq {
    double A = 0, B = 0, C = 0, D = 0;

    double norm() const { return std::sqrt(A * A + B * B + C * C + D * D); }
};

inline std::vector<std::array<double, 7>> float_row_reduce(const LambdaMatrix<double>& M) {
    std::vector<std::array<double, 7>> rows(48);
    for (int r = 0; r < 48; ++r)
        for (int c = 0; c < 7; ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = M.real_entry(r, c);
    // Partial-pivot elimination; the surviving rows are an orthogonal-ish
    // basis of the row space, good enough to slice.
    size_t rank = 0;
    for (int col = 0; col < 7 && rank < rows.size(); ++col) {
        size_t piv = rank;
        double best = 0.0;
        for (size_t r = rank; r < rows.size(); ++r) {
            const double a = std::fabs(rows[r][static_cast<size_t>(col)]);
            if (a > best) { best = a; piv = r; }
        }
        if (best <= 1e-12) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const double f = rows[r][static_cast<size_t>(col)] / rows[rank][static_cast<size_t>(col)];
            if (f == 0.0) continue;
            for (int c = 0; c < 7; ++c) rows[r][static_cast<size_t>(c)] -= f * rows[rank][static_cast<size_t>(c)];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// Substitutes the sliced variable into a real row of the closure system.
// X layout: [t1t2, t1t3, t2t3, t3, t2, t1, 1].
inline SliceEq slice_equation(const std::array<double, 7>& v, int slice_var, double value) {
    SliceEq e;
    switch (slice_var) {
    case 3:   // free (t1, t2)
        e.A = v[0];
        e.B = v[1] * value + v[5];
        e.C = v[2] * value + v[4];
        e.D = v[3] * value + v[6];
        break;
    case 2:   // free (t1, t3)
        e.A = v[1];
        e.B = v[0] * value + v[5];
        e.C = v[2] * value + v[3];
        e.D = v[4] * value + v[6];
        break;
    case 1:   // free (t2, t3)
        e.A = v[2];
        e.B = v[0] * value + v[4];
        e.C = v[1] * value + v[3];
        e.D = v[5] * value + v[6];
        break;
    default:
        throw InvalidArgument("slice variable must be 1, 2 or 3");
    }
    return e;
}

struct SlicePoint {
    ConfigParam<double> x, y;   // lower-index variable first
};

// Candidate intersection points of two bilinear slice equations, including
// the projective candidates where one variable runs to infinity.
inline std::vector<SlicePoint> solve_pair(const SliceEq& F, const SliceEq& G) {
    std::vector<SlicePoint> out;
    const double scale = std::max({1e-30, F.norm(), G.norm()});

    // Eliminate x: (F.A y + F.B) x = -(F.C y + F.D); substituting into G
    // gives q2 y^2 + q1 y + q0 = 0.
    const double q2 = F.A * G.C - G.A * F.C;
    const double q1 = F.A * G.D + F.B * G.C - G.A * F.D - G.B * F.C;
    const double q0 = F.B * G.D - G.B * F.D;

    std::vector<double> ys;
    const double qscale = std::max({std::fabs(q2), std::fabs(q1), std::fabs(q0)});
    if (qscale > 1e-14 * scale * scale) {
        if (std::fabs(q2) > 1e-12 * qscale) {
            const double disc = q1 * q1 - 4.0 * q2 * q0;
            if (disc >= -1e-12 * qscale * qscale) {
                const double s = std::sqrt(std::max(0.0, disc));
                // Numerically stable quadratic roots.
                const double q = -0.5 * (q1 + std::copysign(s, q1));
                ys.push_back(q / q2);
                if (std::fabs(q) > 0.0) ys.push_back(q0 / q);
                else ys.push_back(-q1 / q2 - ys[0]);
            }
        } else if (std::fabs(q1) > 1e-12 * qscale) {
            ys.push_back(-q0 / q1);
            // Degree dropped: y = infinity solves the projective quadratic.
            const double xinf_den = std::max(std::fabs(F.A), std::fabs(G.A));
            if (xinf_den > 1e-12) {
                const SliceEq& E = std::fabs(F.A) >= std::fabs(G.A) ? F : G;
                out.push_back({ConfigParam<double>::finite(-E.C / E.A), ConfigParam<double>::infinity()});
            }
        }
    }

    for (double y : ys) {
        // Newton polish on the resultant.
        for (int it = 0; it < 3; ++it) {
            const double f = (q2 * y + q1) * y + q0;
            const double df = 2.0 * q2 * y + q1;
            if (std::fabs(df) < 1e-300) break;
            const double step = f / df;
            y -= step;
            if (std::fabs(step) <= 1e-12 * std::max(1.0, std::fabs(y))) break;
        }
        const double den_f = F.A * y + F.B;
        const double den_g = G.A * y + G.B;
        if (std::max(std::fabs(den_f), std::fabs(den_g)) <= 1e-10 * scale) {
            // x unbounded on this slice: record the point at infinity.
            out.push_back({ConfigParam<double>::infinity(), ConfigParam<double>::finite(y)});
            continue;
        }
        const double x = std::fabs(den_f) >= std::fabs(den_g) ? -(F.C * y + F.D) / den_f
                                                              : -(G.C * y + G.D) / den_g;
        out.push_back({ConfigParam<double>::finite(x), ConfigParam<double>::finite(y)});
    }
    return out;
}

inline SymConfiguration<double> assemble(int slice_var, double value, const SlicePoint& p) {
    const ConfigParam<double> sliced = ConfigParam<double>::finite(value);
    switch (slice_var) {
    case 3: return SymConfiguration<double>::of(p.x, p.y, sliced);
    case 2: return SymConfiguration<double>::of(p.x, sliced, p.y);
    default: return SymConfiguration<double>::of(sliced, p.x, p.y);
    }
}

inline double param_key(const ConfigParam<double>& t) {
    return t.is_infinite() ? std::numeric_limits<double>::infinity() : t.value();
}

} // namespace detail

/// Traces the angle-symmetric configuration curve over a grid of values of
/// the sliced variable: each slice reduces the closure system to bilinear
/// equations in the two free parameters, which a resultant turns into a
/// quadratic. Every candidate must re-verify the full closure condition
/// (sign +1) from scratch before it is reported. Results are ordered by
/// grid position, then by the second free parameter.
template <class S>
std::vector<SymConfiguration<double>> trace_configuration_curve(const Linkage<S>& linkage,
                                                                const std::vector<double>& grid,
                                                                const TraceOptions& opt = {}) {
    const Linkage<double> L = [&] {
        if constexpr (scalar_traits<S>::is_exact) return to_float(linkage);
        else return linkage;
    }();
    if (opt.slice_var < 1 || opt.slice_var > 3)
        throw InvalidArgument("slice variable must be 1, 2 or 3");

    const auto M = build_lambda_matrix(L);
    const int rank = lambda_rank_tolerance(M);
    if (rank < 2 || rank > 4)
        throw DegenerateError("trace: rank " + std::to_string(rank) +
                              " certifies no one-dimensional angle-symmetric motion");
    const auto rows = detail::float_row_reduce(M);

    std::vector<SymConfiguration<double>> accepted;
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        std::vector<detail::SliceEq> eqs;
        for (const auto& row : rows) {
            const auto e = detail::slice_equation(row, opt.slice_var, grid[gi]);
            if (e.norm() > 1e-12) eqs.push_back(e);
        }
        std::vector<SymConfiguration<double>> found;
        for (size_t i = 0; i < eqs.size(); ++i) {
            for (size_t j = i + 1; j < eqs.size(); ++j) {
                for (const auto& pt : detail::solve_pair(eqs[i], eqs[j])) {
                    const auto tau = detail::assemble(opt.slice_var, grid[gi], pt);
                    ClosureReport<double> rep;
                    try {
                        rep = closure_residual(L, tau);
                    } catch (const Error&) {
                        continue;
                    }
                    if (rep.residual > opt.residual_tol) continue;
                    if (!rep.lambda_sign || *rep.lambda_sign != 1) continue;
                    bool dup = false;
                    for (const auto& have : found) {
                        bool same = true;
                        for (int k = 0; k < 3; ++k) {
                            const double a = detail::param_key(have.t[static_cast<size_t>(k)]);
                            const double b = detail::param_key(tau.t[static_cast<size_t>(k)]);
                            if (std::isinf(a) != std::isinf(b) ||
                                (!std::isinf(a) && std::fabs(a - b) > opt.dedup_tol))
                                same = false;
                        }
                        if (same) { dup = true; break; }
                    }
                    if (!dup) found.push_back(tau);
                }
            }
        }
        const int ysort = opt.slice_var == 1 ? 2 : opt.slice_var == 2 ? 2 : 1;
        std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
            return detail::param_key(a.t[static_cast<size_t>(ysort)]) <
                   detail::param_key(b.t[static_cast<size_t>(ysort)]);
        });
        for (auto& tau : found) accepted.push_back(tau);
    }
    if (accepted.empty())
        throw DegenerateError("trace: no real angle-symmetric motion found on grid");
    return accepted;
}

namespace detail {

inline void print_float(std::ostream& os, double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    os << buf;
}

} // namespace detail

/// Writes the traced poses: header line, then per configuration one line
/// "t1 t2 t3" followed by six lines "dx dy dz ax ay az" (axis direction and
/// anchor point of each transformed joint). Every configuration is
/// re-verified before anything is written.
template <class S>
void export_poses(const Linkage<S>& linkage, const std::vector<SymConfiguration<double>>& configs,
                  std::ostream& os, double residual_tol = 1e-9) {
    const Linkage<double> L = [&] {
        if constexpr (scalar_traits<S>::is_exact) return to_float(linkage);
        else return linkage;
    }();

    os << "# hexalink poses v1\n";
    for (const auto& tau : configs) {
        const auto rep = closure_residual(L, tau);
        if (rep.residual > residual_tol)
            throw InvalidArgument("export_poses: configuration fails closure verification");
        const Linkage<double> moved = transform_by_configuration(L, tau);
        for (int k = 0; k < 3; ++k) {
            if (k) os << ' ';
            const auto& t = tau.t[static_cast<size_t>(k)];
            detail::print_float(os, t.is_infinite() ? std::numeric_limits<double>::infinity()
                                                    : t.value());
        }
        os << '\n';
        for (int j = 0; j < 6; ++j) {
            const Vec3<double> d = moved.joint(j).direction();
            const Vec3<double> a = moved.joint(j).anchor();
            detail::print_float(os, d[0]); os << ' ';
            detail::print_float(os, d[1]); os << ' ';
            detail::print_float(os, d[2]); os << ' ';
            detail::print_float(os, a[0]); os << ' ';
            detail::print_float(os, a[1]); os << ' ';
            detail::print_float(os, a[2]); os << '\n';
        }
    }
}

} // namespace hexalink
