#include <catch_amalgamated.hpp>

#include "slicereg/ideals.hpp"
#include "slicereg/gen.hpp"
#include "testutil.hpp"

using namespace slicereg;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
}  // namespace

TEST_CASE("right ideal construction and common zeros") {
    CHECK_THROWS_AS(RightIdeal(2, {}), Error);
    CHECK_THROWS_AS(RightIdeal(2, {SlicePoly::variable(1, 1)}), ArityMismatch);

    RightIdeal ideal(1, {sphere_poly(sphere_of(qi), 1, 1)});
    CHECK(v_contains(ideal, Point({qi})));
    CHECK(v_contains(ideal, Point({qk})));
    CHECK_FALSE(v_contains(ideal, Point({Quaternion(1)})));
}

TEST_CASE("commuting tail index") {
    CHECK(commuting_tail_index(Point({qi, qi * 2, Quaternion(1) + qi})) == 0);
    CHECK(commuting_tail_index(Point({qi, qj})) == 1);
    CHECK(commuting_tail_index(Point({qj, qi, Quaternion(2) + qi})) == 1);
    CHECK(commuting_tail_index(Point({qi, qj, qk})) == 2);
    CHECK(commuting_tail_index(Point({Quaternion(5)})) == 0);
}

TEST_CASE("enlargement needs a common zero and fixes commuting points") {
    RightIdeal ideal(1, {sphere_poly(sphere_of(qi), 1, 1)});
    CHECK_THROWS_AS(enlarge_zero(ideal, Point({Quaternion(2)})), NotACommonZero);

    // A fully commuting point has nothing to enlarge.
    EnlargementReport rep = enlarge_zero(ideal, Point({qi}));
    CHECK(rep.t == 0);
    CHECK(rep.candidates.empty());
}

TEST_CASE("enlargement recovers a generating balloon") {
    // Balloon S_i x {j}: ideal from its divisor family, right-multiplied.
    Balloon b({qi}, {qj});
    SlicePoly g1 = star_mul(sphere_poly(sphere_of(qi), 1, 2), SlicePoly::variable(2, 2));
    SlicePoly g2 = star_mul(linear_poly(2, qj, 2), SlicePoly::variable(2, 1));
    RightIdeal ideal(2, {g1, g2});

    EnlargementReport rep = enlarge_zero(ideal, b.base_point());
    CHECK(rep.t == 1);
    REQUIRE(rep.candidates.size() == 1);
    REQUIRE(rep.verified.size() == 1);
    CHECK(rep.verified[0].tail == b.tail);
    CHECK(membership(b, rep.verified[0].base_point()));

    // Zero-set closure: every generator vanishes on the verified balloon, so
    // re-certifying the reported balloon's divisors against the ideal is
    // stable (V(J(V(I))) adds nothing new here).
    for (const auto& gen : ideal.generators)
        CHECK(vanishes_on_balloon(gen, rep.verified[0]).vanishes());
}

TEST_CASE("junctions double the candidate count") {
    // Head blocks on slices i then j, tail on k: p = 2 junction blocks.
    Point p({Quaternion(1) + qi, Quaternion(2) + qj, Quaternion(1) + qk});
    CHECK(commuting_tail_index(p) == 2);
    std::vector<SlicePoly> gens = {
        star_mul(sphere_poly(sphere_of(p[0]), 1, 3), SlicePoly::variable(3, 2)),
        star_mul(sphere_poly(sphere_of(p[1]), 2, 3), SlicePoly::variable(3, 3)),
        star_mul(linear_poly(3, p[2], 3), SlicePoly::variable(3, 1)),
    };
    RightIdeal ideal(3, gens);
    REQUIRE(v_contains(ideal, p));

    EnlargementReport rep = enlarge_zero(ideal, p);
    CHECK(rep.t == 2);
    REQUIRE(rep.candidates.size() == 2);
    CHECK_FALSE(rep.verified.empty());
    // The two branches land on conjugate aligned heads: first components on
    // the j-slice from opposite sides.
    const Quaternion& h0 = rep.candidates[0].head[0];
    const Quaternion& h1 = rep.candidates[1].head[0];
    CHECK(h0.conj() == h1);
    CHECK(commutes(h0, p[1]));
    CHECK(on_sphere(h0, sphere_of(p[0])));
}

TEST_CASE("set descriptors evaluate unions and intersections") {
    SlicePoly si = sphere_poly(sphere_of(qi), 1, 1);
    SlicePoly lin = linear_poly(1, Quaternion(2), 1);
    SliceAlgebraicSet sphere = SliceAlgebraicSet::leaf(1, {si});
    SliceAlgebraicSet pt = SliceAlgebraicSet::leaf(1, {lin});

    SliceAlgebraicSet both = set_union(sphere, pt);
    CHECK(both.contains(Point({qj})));
    CHECK(both.contains(Point({Quaternion(2)})));
    CHECK_FALSE(both.contains(Point({Quaternion(3)})));

    SliceAlgebraicSet empty = set_intersection({sphere, pt});
    CHECK_FALSE(empty.contains(Point({qj})));
    CHECK_FALSE(empty.contains(Point({Quaternion(2)})));

    CHECK(set_intersection({sphere}).contains(Point({qi})));
    CHECK_THROWS_AS(set_intersection({}), Error);
    CHECK_THROWS_AS(set_union(sphere, SliceAlgebraicSet::leaf(2, {})), ArityMismatch);
}

TEST_CASE("slicing a descriptor gives the split systems") {
    // S (as V(q^2+1)) sliced on C_i: z^2 + 1 = 0, i.e. exactly {i, -i}.
    SliceAlgebraicSet sphere = SliceAlgebraicSet::leaf(1, {sphere_poly(sphere_of(qi), 1, 1)});
    SliceFrame fr(qi, qj);
    SlicedSet sliced = slice(sphere, fr);
    CHECK(sliced.satisfied({SliceComplex{0, 1}}));
    CHECK(sliced.satisfied({SliceComplex{0, -1}}));
    CHECK_FALSE(sliced.satisfied({SliceComplex{0, 2}}));
    CHECK_FALSE(sliced.satisfied({SliceComplex{1, 1}}));

    gen::Rng rng(601);
    for (int t = 0; t < 50; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SliceAlgebraicSet leaf = SliceAlgebraicSet::leaf(n, {rng.poly(n, 1, 2)});
        SliceFrame frame = rng.frame();
        SlicedSet sl = slice(leaf, frame);
        for (int s = 0; s < 20; ++s) {
            std::vector<SliceComplex> z;
            std::vector<Quaternion> zq;
            for (unsigned i = 0; i < n; ++i) {
                SliceComplex c{rng.rational(), rng.rational()};
                z.push_back(c);
                zq.push_back(to_quaternion(c, frame.k_unit));
            }
            CHECK(sl.satisfied(z) == leaf.contains(Point(zq)));
        }
    }
}

TEST_CASE("one-variable zeros at i and j force the whole sphere") {
    // The two-point ideal closure: S(q) = q^2 + 1 vanishes at i and j and on
    // every other point of S; a degree-one polynomial cannot do that.
    SlicePoly s = sphere_poly(sphere_of(qi), 1, 1);
    CHECK(eval(s, Point({qi})).is_zero());
    CHECK(eval(s, Point({qj})).is_zero());
    CHECK(vanishes_on_arranged_sphere(s, Point({qi})).vanishes());

    SlicePoly lin = linear_poly(1, qi, 1);
    CHECK(eval(lin, Point({qi})).is_zero());
    CHECK_FALSE(eval(lin, Point({qj})).is_zero());
    CHECK_FALSE(vanishes_on_arranged_sphere(lin, Point({qi})).vanishes());
}
