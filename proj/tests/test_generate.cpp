#include "doctest.h"

#include "hexalink/classify.hpp"
#include "hexalink/example1.hpp"
#include "hexalink/generate.hpp"
#include "hexalink/json_io.hpp"

using namespace hexalink;

namespace {

DualQuaternion<Rational> unit(int i) {
    DualQuaternion<Rational> q;
    q[i] = Rational(1);
    return q;
}

} // namespace

TEST_CASE("construct_parallel reproduces the reference linkage exactly") {
    const auto L = example1_linkage();
    const auto u = Line<Rational>::from_dq(unit(1));
    const auto out = construct_parallel(u, L.joint(0), L.joint(1), L.joint(2), Rational(14, 11));
    for (int i = 0; i < 6; ++i) CHECK(out.joint(i) == L.joint(i));
}

TEST_CASE("construct_parallel with r = 0 and h1 meeting u is line symmetric") {
    const auto u = Line<Rational>::from_dq(unit(1));
    // h1 perpendicular to u, intersecting its axis at (2, 0, 0)
    const auto h1 = Line<Rational>::make({Rational(0), Rational(3, 5), Rational(4, 5)},
                                         {Rational(2), Rational(0), Rational(0)});
    Rng rng(71);
    Vec3<Rational> d2 = rng.unit_direction();
    while (dot(d2, u.direction()).is_zero()) d2 = rng.unit_direction();
    const auto h2 = Line<Rational>::make(d2, rng.point());
    const auto h3 = Line<Rational>::make(d2, rng.point());
    const auto L = construct_parallel(u, h1, h2, h3, Rational(0));
    CHECK(lambda_rank_exact(build_lambda_matrix(L)) == 2);
    const auto res = classify(L);
    const auto* ls = std::get_if<LineSymmetricFamily<Rational>>(&res.family);
    REQUIRE(ls != nullptr);
    CHECK(ls->axis.same_axis(u));
}

TEST_CASE("construct_parallel preconditions name the violated step") {
    const auto u = Line<Rational>::from_dq(unit(1));
    Rng rng(72);
    const auto h_not_perp = Line<Rational>::make({Rational(3, 5), Rational(4, 5), Rational(0)},
                                                 {Rational(0), Rational(1), Rational(0)});
    const auto h_perp = Line<Rational>::make({Rational(0), Rational(1), Rational(0)},
                                             {Rational(0), Rational(0), Rational(1)});
    Vec3<Rational> d2 = rng.unit_direction();
    while (dot(d2, u.direction()).is_zero()) d2 = rng.unit_direction();
    const auto good2 = Line<Rational>::make(d2, rng.point());
    const auto good3 = Line<Rational>::make(d2, rng.point());

    CHECK_THROWS_WITH_AS(construct_parallel(u, h_not_perp, good2, good3, Rational(1)),
                         doctest::Contains("step II"), InvalidArgument);
    // h2 parallel to h3 violated
    CHECK_THROWS_WITH_AS(construct_parallel(u, h_perp, good2, h_perp, Rational(1)),
                         doctest::Contains("step III"), InvalidArgument);
    // h2 perpendicular to u violated
    const auto perp2 = Line<Rational>::make({Rational(0), Rational(4, 5), Rational(3, 5)},
                                            {Rational(1), Rational(2), Rational(0)});
    const auto perp3 = Line<Rational>::make({Rational(0), Rational(4, 5), Rational(3, 5)},
                                            {Rational(0), Rational(1), Rational(1)});
    CHECK_THROWS_WITH_AS(construct_parallel(u, h_perp, perp2, perp3, Rational(1)),
                         doctest::Contains("step III"), InvalidArgument);
}

TEST_CASE("parallel samples satisfy the pairing and rank 3") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(3000 + seed);
        const auto sample = random_parallel(rng);
        const auto p = parallel_pairing(sample.linkage);
        REQUIRE(p.has_value());
        CHECK(p->shift == 0);
        CHECK(p->pairs[0] == std::pair<int, int>{1, 4});
        CHECK(p->pairs[1] == std::pair<int, int>{2, 3});
        CHECK(p->pairs[2] == std::pair<int, int>{5, 6});
        CHECK(lambda_rank_exact(build_lambda_matrix(sample.linkage)) == 3);
    }
}

TEST_CASE("construct_line_symmetric rejects axes fixed by the half turn") {
    const auto l = Line<Rational>::from_dq(unit(1));
    Rng rng(73);
    CHECK_THROWS_AS(construct_line_symmetric(l, l, rng.line(), rng.line()), DegenerateError);
}

TEST_CASE("the half turn about l maps axis points of h1 onto the axis of h4") {
    Rng rng(74);
    const auto sample = random_line_symmetric(rng);
    const auto& L = sample.linkage;
    const auto l = sample.axis;

    // Euclidean half-turn of a point X about the axis of l:
    // X' = 2 (a + <X - a, d> d) - X with a = anchor, d = direction.
    const auto half_turn = [&](const Vec3<Rational>& X) {
        const Vec3<Rational> a = l.anchor();
        const Vec3<Rational> d = l.direction();
        const Rational s = dot(X - a, d);
        const Vec3<Rational> proj = a + s * d;
        return proj + (proj - X);
    };
    for (int i = 0; i < 3; ++i) {
        const Vec3<Rational> image = half_turn(L.joint(i).anchor());
        // image lies on the axis of h_{i+3}: (image - anchor) x direction = 0
        const Vec3<Rational> rel = image - L.joint(i + 3).anchor();
        CHECK(cross(rel, L.joint(i + 3).direction()).is_zero());
    }
}

TEST_CASE("construct_cubic_type: known pairs give rank 4 and a closing curve") {
    Rng rng(75);
    const std::array<std::pair<Rational, Rational>, 3> pairs{
        std::pair<Rational, Rational>{Rational(0), Rational(1)}, {Rational(1), Rational(2)},
        {Rational(-1), Rational(3)}};
    const auto L = [&] {
        for (;;) {
            try {
                auto out = construct_cubic_type(pairs, {rng.line(), rng.line(), rng.line()});
                if (lambda_rank_exact(build_lambda_matrix(out)) == 4) return out;
            } catch (const Error&) {
            }
        }
    }();
    for (const auto& t : {Rational(-1), Rational(0), Rational(2)}) {
        std::array<ConfigParam<Rational>, 3> tp;
        for (int i = 0; i < 3; ++i) {
            const auto& [a, b] = pairs[static_cast<size_t>(i)];
            tp[static_cast<size_t>(i)] = ConfigParam<Rational>::finite((t - a) / b);
        }
        CHECK(closure_residual(L, SymConfiguration<Rational>{{tp[0], tp[1], tp[2]}}).residual.is_zero());
    }
}

TEST_CASE("generators are deterministic in the seed") {
    Rng a(42), b(42), c(43);
    const auto la = random_line_symmetric(a).linkage;
    const auto lb = random_line_symmetric(b).linkage;
    const auto lc = random_line_symmetric(c).linkage;
    CHECK(linkage_to_json(la) == linkage_to_json(lb));
    CHECK(linkage_to_json(la) != linkage_to_json(lc));
}
