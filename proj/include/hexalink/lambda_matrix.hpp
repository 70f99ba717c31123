#pragma once

#include <array>
#include <ostream>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "hexalink/linkage.hpp"

namespace hexalink {

/// The coefficient matrix of the angle-symmetric closure system.
///
/// Six rows of seven dual quaternion entries, one row per cyclic formulation
/// of the closure condition, contracted against the monomial vector
/// X = [t1 t2, t1 t3, t2 t3, t3, t2, t1, 1]^T. Rows carry the sign convention
/// with the g columns positive; the raw closure expansion is the negation of
/// each row (the nullspace is identical). Realified over the basis
/// (1, i, j, k, eps, eps i, eps j, eps k) this is a 48 x 7 real matrix whose
/// rank classifies the linkage.
template <class S>
struct LambdaMatrix {
    std::array<std::array<DualQuaternion<S>, 7>, 6> rows;

    const S& real_entry(int row48, int col) const {
        return rows[static_cast<size_t>(row48 / 8)][static_cast<size_t>(col)][row48 % 8];
    }
};

template <class S>
LambdaMatrix<S> build_lambda_matrix(const Linkage<S>& L) {
    const DualQuaternion<S> h1 = L.joint(0).dq(), h2 = L.joint(1).dq(), h3 = L.joint(2).dq(),
                            h4 = L.joint(3).dq(), h5 = L.joint(4).dq(), h6 = L.joint(5).dq();
    const DualQuaternion<S> g3 = h6 + h3, g2 = h5 + h2, g1 = h4 + h1;

    LambdaMatrix<S> M;
    M.rows = {{
        {g3, g2, g1, h5 * h4 - h1 * h2, h6 * h4 - h1 * h3, h6 * h5 - h2 * h3, h6 * h5 * h4 + h1 * h2 * h3},
        {g3, g2, g1, h1 * h5 - h2 * h4, h1 * h6 - h3 * h4, h6 * h5 - h2 * h3, h1 * h6 * h5 + h2 * h3 * h4},
        {g3, g2, g1, h2 * h1 - h4 * h5, h1 * h6 - h3 * h4, h2 * h6 - h3 * h5, h2 * h1 * h6 + h3 * h4 * h5},
        {g3, g2, g1, h2 * h1 - h4 * h5, h3 * h1 - h4 * h6, h3 * h2 - h5 * h6, h3 * h2 * h1 + h4 * h5 * h6},
        {g3, g2, g1, h4 * h2 - h5 * h1, h4 * h3 - h6 * h1, h3 * h2 - h5 * h6, h4 * h3 * h2 + h5 * h6 * h1},
        {g3, g2, g1, h5 * h4 - h1 * h2, h4 * h3 - h6 * h1, h5 * h3 - h6 * h2, h5 * h4 * h3 + h6 * h1 * h2},
    }};
    return M;
}

/// Linear combination sum_i coeffs[i] * row_i, as seven dual quaternions.
template <class S>
std::array<DualQuaternion<S>, 7> row_combination(const LambdaMatrix<S>& M,
                                                 const std::array<int, 6>& coeffs) {
    std::array<DualQuaternion<S>, 7> out;
    for (int c = 0; c < 7; ++c) {
        DualQuaternion<S> acc;
        for (int r = 0; r < 6; ++r) {
            if (coeffs[static_cast<size_t>(r)] == 0) continue;
            acc = acc + scalar_traits<S>::from_fraction(coeffs[static_cast<size_t>(r)], 1) *
                            M.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
        out[static_cast<size_t>(c)] = acc;
    }
    return out;
}

/// Contracts every row against X(t1, t2, t3); all six products vanish on the
/// lambda = +1 part of the angle-symmetric configuration set.
template <class S>
std::array<DualQuaternion<S>, 6> contract_rows(const LambdaMatrix<S>& M, const S& t1, const S& t2,
                                               const S& t3) {
    const std::array<S, 7> X = {t1 * t2, t1 * t3, t2 * t3, t3, t2, t1, scalar_traits<S>::one()};
    std::array<DualQuaternion<S>, 6> out;
    for (int r = 0; r < 6; ++r) {
        DualQuaternion<S> acc;
        for (int c = 0; c < 7; ++c)
            acc = acc + X[static_cast<size_t>(c)] * M.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

/// Monomial order of the full trilinear closure expansion:
/// [t1 t2 t3, t1 t2, t1 t3, t2 t3, t3, t2, t1, 1].
/// The angle-symmetric closure equations, cyclic form s in 0..5 with sign
/// lambda, expand to one dual quaternion coefficient per monomial. For
/// lambda = +1 the t1 t2 t3 coefficient cancels and the remaining seven
/// columns are the negation of the lambda matrix rows; for lambda = -1 it
/// survives with coefficient 2.
template <class S>
std::array<DualQuaternion<S>, 8> closure_system_row(const Linkage<S>& L, int shift, int lambda) {
    const auto term = [](int v1, int v2, int v3) {
        // Index of t_{v1} t_{v2} t_{v3} (v = -1 marks a missing variable).
        bool has[3] = {false, false, false};
        for (int v : {v1, v2, v3})
            if (v >= 0) has[v] = true;
        if (has[0] && has[1] && has[2]) return 0;
        if (has[0] && has[1]) return 1;
        if (has[0] && has[2]) return 2;
        if (has[1] && has[2]) return 3;
        if (has[2]) return 4;
        if (has[1]) return 5;
        if (has[0]) return 6;
        return 7;
    };

    std::array<DualQuaternion<S>, 8> row;
    // (x - a)(y - b)(z - c) = xyz - c*xy - b*xz - a*yz + bc*x + ac*y + ab*z - abc
    const auto accumulate = [&](const std::array<int, 3>& vars,
                                const std::array<DualQuaternion<S>, 3>& neg, const S& scale) {
        const auto& a = neg[0];
        const auto& b = neg[1];
        const auto& c = neg[2];
        const DualQuaternion<S> one = DualQuaternion<S>::one();
        row[static_cast<size_t>(term(vars[0], vars[1], vars[2]))] =
            row[static_cast<size_t>(term(vars[0], vars[1], vars[2]))] + scale * one;
        row[static_cast<size_t>(term(vars[0], vars[1], -1))] =
            row[static_cast<size_t>(term(vars[0], vars[1], -1))] - scale * c;
        row[static_cast<size_t>(term(vars[0], -1, vars[2]))] =
            row[static_cast<size_t>(term(vars[0], -1, vars[2]))] - scale * b;
        row[static_cast<size_t>(term(-1, vars[1], vars[2]))] =
            row[static_cast<size_t>(term(-1, vars[1], vars[2]))] - scale * a;
        row[static_cast<size_t>(term(vars[0], -1, -1))] =
            row[static_cast<size_t>(term(vars[0], -1, -1))] + scale * (b * c);
        row[static_cast<size_t>(term(-1, vars[1], -1))] =
            row[static_cast<size_t>(term(-1, vars[1], -1))] + scale * (a * c);
        row[static_cast<size_t>(term(-1, -1, vars[2]))] =
            row[static_cast<size_t>(term(-1, -1, vars[2]))] + scale * (a * b);
        row[static_cast<size_t>(term(-1, -1, -1))] =
            row[static_cast<size_t>(term(-1, -1, -1))] - scale * (a * b * c);
    };

    // Left product: joints shift, shift+1, shift+2 with variables
    // (shift+i) mod 3; right product: joints shift+5, shift+4, shift+3 with
    // the left variables reversed.
    std::array<int, 3> lv{shift % 3, (shift + 1) % 3, (shift + 2) % 3};
    accumulate(lv,
               {L.joint(shift % 6).dq(), L.joint((shift + 1) % 6).dq(), L.joint((shift + 2) % 6).dq()},
               scalar_traits<S>::one());
    std::array<int, 3> rv{(shift + 2) % 3, (shift + 1) % 3, shift % 3};
    accumulate(rv,
               {-L.joint((shift + 5) % 6).dq(), -L.joint((shift + 4) % 6).dq(),
                -L.joint((shift + 3) % 6).dq()},
               scalar_traits<S>::from_fraction(-lambda, 1));
    return row;
}

enum class RankMode { Exact, Tolerance };

namespace detail {

/// Fraction-free (Bareiss) elimination over the integers after clearing row
/// denominators; exact rank with controlled coefficient growth.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    mpz_class prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

inline std::vector<std::vector<mpz_class>> clear_denominators(const LambdaMatrix<Rational>& M) {
    std::vector<std::vector<mpz_class>> out(48, std::vector<mpz_class>(7));
    for (int r = 0; r < 48; ++r) {
        mpz_class lcm(1);
        for (int c = 0; c < 7; ++c) {
            mpz_class den = M.real_entry(r, c).denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < 7; ++c) {
            const Rational& q = M.real_entry(r, c);
            out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                q.numerator() * (lcm / q.denominator());
        }
    }
    return out;
}

} // namespace detail

/// Exact rank of the 48 x 7 realification; authoritative for classification.
inline int lambda_rank_exact(const LambdaMatrix<Rational>& M) {
    return detail::bareiss_rank(detail::clear_denominators(M));
}

/// Numeric rank: singular values above tol * sigma_max.
inline int lambda_rank_tolerance(const LambdaMatrix<double>& M, double tol = kFloatTolerance) {
    Eigen::MatrixXd A(48, 7);
    for (int r = 0; r < 48; ++r)
        for (int c = 0; c < 7; ++c) A(r, c) = M.real_entry(r, c);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    return rank;
}

template <class S>
int lambda_rank(const LambdaMatrix<S>& M, RankMode mode, double tol = kFloatTolerance) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (mode == RankMode::Exact) return lambda_rank_exact(M);
        LambdaMatrix<double> F;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 7; ++c) {
                typename DualQuaternion<double>::Coords coords;
                for (int b = 0; b < 8; ++b)
                    coords[static_cast<size_t>(b)] =
                        scalar_traits<S>::to_double(M.rows[static_cast<size_t>(r)][static_cast<size_t>(c)][b]);
                F.rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = DualQuaternion<double>(coords);
            }
        return lambda_rank_tolerance(F, tol);
    } else {
        if (mode == RankMode::Exact)
            throw InvalidArgument("exact rank requires rational scalars");
        return lambda_rank_tolerance(M, tol);
    }
}

/// Row-major CSV dump of the 48 x 7 real matrix (exact entries as "p/q").
template <class S>
void write_real_form_csv(const LambdaMatrix<S>& M, std::ostream& os) {
    for (int r = 0; r < 48; ++r) {
        for (int c = 0; c < 7; ++c) {
            if (c) os << ',';
            os << scalar_traits<S>::str(M.real_entry(r, c));
        }
        os << '\n';
    }
}

} // namespace hexalink
