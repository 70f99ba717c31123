#include "hexalink/rational.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "hexalink/errors.hpp"
#include "hexalink/scalar.hpp"

namespace hexalink {

Rational::Rational(long long n) {
    v_ = mpq_class(mpz_class(std::to_string(n)));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rational n(num), d(den);
    v_ = n.v_ / d.v_;
    canonicalize();
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("cannot convert non-finite double to rational");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw InvalidArgument("unparsable rational: '" + text + "'");
    if (q.get_den() == 0)
        throw InvalidArgument("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::rationalize(double x, double tol) {
    if (!std::isfinite(x)) throw InvalidArgument("cannot rationalize non-finite double");
    // Continued fraction convergents of x until within tol.
    double a = x;
    mpz_class p0(0), q0(1), p1(1), q1(0);
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(a);
        mpz_class ai;
        mpq_class flq;
        mpq_set_d(flq.get_mpq_t(), fl);
        ai = flq.get_num();
        mpz_class p2 = ai * p1 + p0;
        mpz_class q2 = ai * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class conv(p1, q1);
        conv.canonicalize();
        if (std::abs(conv.get_d() - x) <= tol) return Rational(conv);
        const double frac = a - fl;
        if (frac == 0.0) return Rational(conv);
        a = 1.0 / frac;
        if (!std::isfinite(a)) return Rational(conv);
    }
    return Rational::from_double(x);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& a) {
    if (a.sign() < 0) return std::nullopt;
    mpz_class num = a.numerator(), den = a.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string scalar_traits<double>::str(double a) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", a);
    return buf;
}

} // namespace hexalink
