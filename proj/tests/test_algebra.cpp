#include "doctest.h"

#include "hexalink/example1.hpp"
#include "hexalink/line.hpp"

#include "oracle.hpp"

using namespace hexalink;

namespace {

DualQuaternion<Rational> basis(int i) {
    DualQuaternion<Rational> q;
    q[i] = Rational(1);
    return q;
}

const DualQuaternion<Rational> kOne = basis(0);
const DualQuaternion<Rational> kI = basis(1);
const DualQuaternion<Rational> kJ = basis(2);
const DualQuaternion<Rational> kK = basis(3);
const DualQuaternion<Rational> kE = basis(4);
const DualQuaternion<Rational> kEi = basis(5);
const DualQuaternion<Rational> kEj = basis(6);

} // namespace

TEST_CASE("dual quaternion products: basis cases") {
    CHECK(kI * kJ == kK);
    CHECK(kEi * kJ == basis(7));
    CHECK((kEi * basis(6)).is_zero());   // (ei)(ej) = 0
    CHECK(kJ * kI == -kK);
    CHECK(kE * kI == kEi);
    CHECK(kI * kI == -kOne);
}

TEST_CASE("dual quaternion product: u h1 from the reference linkage") {
    const auto L = example1_linkage();
    const DualQuaternion<Rational> u = kI;
    const DualQuaternion<Rational> got = u * L.joint(0).dq();
    // (7/11) e + k
    DualQuaternion<Rational> want;
    want[4] = Rational(7, 11);
    want[3] = Rational(1);
    CHECK(got == want);
    CHECK(got == oracle::mul(u, L.joint(0).dq()));
}

TEST_CASE("multiplication agrees with the structure-constant oracle") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto a = oracle::random_dq(rng);
        const auto b = oracle::random_dq(rng);
        CHECK(a * b == oracle::mul(a, b));
    }
}

TEST_CASE("associativity and distributivity on random triples") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto a = oracle::random_dq(rng);
        const auto b = oracle::random_dq(rng);
        const auto c = oracle::random_dq(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("conjugation is an anti-homomorphism; norm is multiplicative") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto a = oracle::random_dq(rng);
        const auto b = oracle::random_dq(rng);
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("conjugate and norm: stated values") {
    // conj(1 + i + ej) = 1 - i - ej
    const DualQuaternion<Rational> x = kOne + kI + kEj;
    CHECK(x.conj() == kOne - kI - kEj);

    // norm(h2) = 1 for a joint axis
    const auto L = example1_linkage();
    CHECK(L.joint(1).dq().norm() == DualNumber<Rational>::one());

    // norm(2 + ei) = 4
    const DualQuaternion<Rational> y = Rational(2) * kOne + kEi;
    CHECK(y.norm() == DualNumber<Rational>(Rational(4), Rational(0)));
    const auto prod = oracle::mul(y, y.conj());
    CHECK(prod == Rational(4) * kOne);
}

TEST_CASE("cross and inner products of pure elements") {
    CHECK(dq_cross(kI, kJ) == kK);
    CHECK(dq_inner(kI, kI) == DualNumber<Rational>::one());

    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto g = oracle::random_pure(rng);
        const auto h = oracle::random_pure(rng);
        CHECK(dq_cross(g, g).is_zero());
        // gh = -<g,h> + g x h
        const auto [cr, in] = cross_inner(g, h);
        CHECK(g * h == cr - DualQuaternion<Rational>::from_dual_number(in));
    }

    // inner(u, h1) = -(7/11) e for the reference linkage
    const auto L = example1_linkage();
    CHECK(dq_inner(kI, L.joint(0).dq()) == DualNumber<Rational>(Rational(0), Rational(-7, 11)));

    CHECK_THROWS_AS(dq_cross(kOne, kJ), InvalidArgument);
    CHECK_THROWS_AS(dq_inner(kE + kI, kJ), InvalidArgument);
}

TEST_CASE("make_line: anchors, normalization, canonical sign") {
    // direction (0,1,0) through (0,0,7/11) is the reference h1
    const auto L = example1_linkage();
    const auto h1 = Line<Rational>::make({Rational(0), Rational(1), Rational(0)},
                                         {Rational(0), Rational(0), Rational(7, 11)});
    CHECK(h1 == L.joint(0));

    const auto x = Line<Rational>::make({Rational(1), Rational(0), Rational(0)},
                                        {Rational(0), Rational(0), Rational(0)});
    CHECK(x.dq() == kI);

    // direction (2,0,0) through (0,0,1): normalized, moment c x p = (0,1,0)
    const auto y = Line<Rational>::make({Rational(2), Rational(0), Rational(0)},
                                        {Rational(0), Rational(0), Rational(1)});
    CHECK(y.dq() == kI + kEj);
    CHECK(y.dq() * y.dq() == -kOne);

    CHECK_THROWS_AS(Line<Rational>::make({Rational(0), Rational(0), Rational(0)},
                                         {Rational(1), Rational(0), Rational(0)}),
                    InvalidArgument);
    // |(1,1,0)| is irrational: not representable over the rationals
    CHECK_THROWS_AS(Line<Rational>::make({Rational(1), Rational(1), Rational(0)},
                                         {Rational(0), Rational(0), Rational(0)}),
                    InvalidArgument);
    // ... but fine in float mode
    const auto f = Line<double>::make({1.0, 1.0, 0.0}, {0.0, 0.0, 0.0});
    CHECK(f.direction()[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("line invariants and canonicalization") {
    const auto L = example1_linkage();
    for (int i = 0; i < 6; ++i) {
        const auto& h = L.joint(i).dq();
        CHECK(h * h == -kOne);
    }
    // h4 = -h1: same axis, different representative
    CHECK(L.joint(3).dq() == -L.joint(0).dq());
    CHECK(L.joint(0).same_axis(L.joint(3)));
    CHECK_FALSE(L.joint(0) == L.joint(3));
    CHECK(L.joint(0).is_canonical());
    CHECK_FALSE(L.joint(3).is_canonical());
    CHECK(L.joint(3).canonical() == L.joint(0));

    // anchor recovery: c = p x m
    const auto a = L.joint(0).anchor();
    CHECK(a[0] == Rational(0));
    CHECK(a[1] == Rational(0));
    CHECK(a[2] == Rational(7, 11));

    CHECK_THROWS_AS(Line<Rational>::from_dq(kI + kJ), InvalidArgument);   // not unit
    CHECK_THROWS_AS(Line<Rational>::from_dq(kOne + kI), InvalidArgument); // not pure
}

TEST_CASE("make_line round-trips direction and anchor on canonical lines") {
    Rng rng(14);
    for (int i = 0; i < 30; ++i) {
        const auto l = rng.line();
        const auto back = Line<Rational>::make(l.direction(), l.anchor());
        CHECK(back == l.canonical());
    }
}

TEST_CASE("act_on_line: conjugation of axes") {
    const auto j_axis = Line<Rational>::from_dq(kJ);
    // act(i, j) = i j i^{-1} = -j
    CHECK(act_on_line(kI, j_axis).dq() == -kJ);

    // act(u, h2) = -u h2 u = h5 for the reference linkage
    const auto L = example1_linkage();
    CHECK(act_on_line(kI, L.joint(1)) == L.joint(4));

    // q = t - h commutes with h
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        const auto h = rng.line();
        const DualQuaternion<Rational> q = rng.rational() * kOne - h.dq();
        if (scalar_traits<Rational>::is_zero(q.norm().re)) continue;
        CHECK(act_on_line(q, h) == h);
    }

    // norms with zero primal part are not invertible
    CHECK_THROWS_AS(act_on_line(kEi, j_axis), DegenerateError);
}

TEST_CASE("act_on_line preserves the line invariant and inner products") {
    Rng rng(16);
    for (int i = 0; i < 20; ++i) {
        const auto g = rng.line();
        const auto h = rng.line();
        const auto q = oracle::random_dq(rng);
        if (scalar_traits<Rational>::is_zero(q.norm().re)) continue;
        const auto g2 = act_on_line(q, g);
        const auto h2 = act_on_line(q, h);
        CHECK(g2.dq() * g2.dq() == -kOne);
        CHECK(dq_inner(g2.dq(), h2.dq()) == dq_inner(g.dq(), h.dq()));
    }
}

TEST_CASE("dual numbers: inverse and square root") {
    const DualNumber<Rational> d(Rational(4), Rational(3));
    const auto inv = d.inverse();
    CHECK((d * inv) == DualNumber<Rational>::one());
    CHECK_THROWS_AS(DualNumber<Rational>(Rational(0), Rational(1)).inverse(), DegenerateError);

    const auto s = d.sqrt();
    CHECK(s * s == d);
    CHECK_THROWS_AS(DualNumber<Rational>(Rational(-1), Rational(0)).sqrt(), DegenerateError);
    // 2 is not a perfect rational square
    CHECK_THROWS_AS(DualNumber<Rational>(Rational(2), Rational(0)).sqrt(), DegenerateError);
    const DualNumber<double> fd(2.0, 1.0);
    const auto fs = fd.sqrt();
    CHECK(fs.re == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rationals: parsing, strings, exact conversions") {
    CHECK(Rational::parse("5/4").str() == "5/4");
    CHECK(Rational::parse("-10/4").str() == "-5/2");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("x"), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational::rationalize(1.0 / 3.0, 1e-10) == Rational(1, 3));
    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
}
