#include <catch_amalgamated.hpp>

#include "slicereg/slicegeom.hpp"
#include "slicereg/gen.hpp"
#include "testutil.hpp"

using namespace slicereg;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
}  // namespace

TEST_CASE("frames must be orthonormal imaginary pairs") {
    CHECK_NOTHROW(SliceFrame(qi, qj));
    CHECK_THROWS_AS(SliceFrame(qi, qi), InvalidFrame);          // not orthogonal
    CHECK_THROWS_AS(SliceFrame(qi * 2, qj), InvalidFrame);      // not unit
    CHECK_THROWS_AS(SliceFrame(Quaternion(1), qj), InvalidFrame);  // not imaginary
}

TEST_CASE("slice coordinates") {
    Quaternion z = Quaternion(3) + qi * Rational(1, 2);
    SliceComplex c = slice_coords(z, qi);
    CHECK(c.re == 3);
    CHECK(c.im == Rational(1, 2));
    CHECK(to_quaternion(c, qi) == z);
    CHECK_THROWS_AS(slice_coords(qj, qi), NotOnSlice);
}

TEST_CASE("splitting against the frame basis") {
    SliceFrame fr(qi, qj);
    // q - i splits into F = z - i with G = 0.
    SlicePoly p = SlicePoly::variable(1, 1) - SlicePoly::constant(1, qi);
    SplitPair sp = split(p, fr);
    CHECK(sp.g.is_zero());
    CHECK(sp.f.terms().size() == 2);
    CHECK(unsplit(sp, fr) == p);

    // The constant j lands entirely in G.
    SplitPair spj = split(SlicePoly::constant(1, qj), fr);
    CHECK(spj.f.is_zero());
    CHECK(eval(spj.g, {SliceComplex{0, 0}}) == SliceComplex{1, 0});
}

TEST_CASE("split halves evaluate to the polynomial on the slice") {
    gen::Rng rng(501);
    for (int t = 0; t < 100; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SlicePoly p = rng.poly(n);
        SliceFrame fr = rng.frame();
        SplitPair sp = split(p, fr);
        CHECK(unsplit(sp, fr) == p);
        std::vector<SliceComplex> z;
        std::vector<Quaternion> zq;
        for (unsigned i = 0; i < n; ++i) {
            SliceComplex c{rng.rational(), rng.rational()};
            z.push_back(c);
            zq.push_back(to_quaternion(c, fr.k_unit));
        }
        Quaternion direct = eval(p, Point(zq));
        Quaternion viasplit = to_quaternion(eval(sp.f, z), fr.k_unit) +
                              to_quaternion(eval(sp.g, z), fr.k_unit) * fr.l_unit;
        CHECK(direct == viasplit);
    }
}

TEST_CASE("representation formula reproduces shadow evaluation") {
    // P = q, z = 3 + 2k on C_k, target J = j: P(3 + 2j) = 3 + 2j.
    SlicePoly p = SlicePoly::variable(1, 1);
    Point z({Quaternion(3) + qk * 2});
    CHECK(represent(p, qj, qk, z) == Quaternion(3) + qj * 2);
    CHECK(shadows(z, qj, qk) == Point({Quaternion(3) + qj * 2}));

    gen::Rng rng(502);
    for (int t = 0; t < 100; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SlicePoly r = rng.poly(n);
        Quaternion ju = rng.imaginary_unit(), ku = rng.imaginary_unit();
        std::vector<Quaternion> zs;
        for (unsigned i = 0; i < n; ++i) {
            Rational y = rng.rational();
            if (y < 0) y = -y;
            zs.push_back(to_quaternion({rng.rational(), y}, ku));
        }
        Point zp(zs);
        CHECK(represent(r, ju, ku, zp) == eval(r, shadows(zp, ju, ku)));
    }

    CHECK_THROWS_AS(represent(p, qj, qk, Point({Quaternion(1) - qk})), NegativeShadow);
    CHECK_THROWS_AS(represent(p, qj, qk, Point({qj})), NotOnSlice);
    CHECK_THROWS_AS(represent(p, Quaternion(1), qk, z), InvalidFrame);
}

TEST_CASE("balloon shape constraints") {
    CHECK_THROWS_AS(Balloon({}, {qi}), InvalidBalloon);                  // empty head
    CHECK_THROWS_AS(Balloon({Quaternion(1)}, {}), InvalidBalloon);       // real head
    CHECK_THROWS_AS(Balloon({qi, qj}, {}), InvalidBalloon);              // noncommuting head
    CHECK_THROWS_AS(Balloon({qi}, {qi, qj}), InvalidBalloon);            // noncommuting tail
    Balloon b({qi}, {qj});
    CHECK(b.nvars() == 2);
    CHECK(b.base_point() == Point({qi, qj}));
}

TEST_CASE("sampling rotates orbits and fixes balloon tails") {
    Balloon b({qi}, {qj});
    Point s = sample(b, qj);
    CHECK(s[0] == -qi);  // j^{-1} i j = -i
    CHECK(s[1] == qj);   // tail untouched
    CHECK(membership(b, s));
    CHECK_THROWS_AS(sample(b, Quaternion(0)), ZeroRotor);
}

TEST_CASE("orbit membership via invariants matches rotor search") {
    gen::Rng rng(503);
    // Positives: genuine samples are members, and conversely any point the
    // rotor search connects to the base is flagged as a member.
    for (int t = 0; t < 60; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        Point base = rng.point(n);
        Point p = sample(SphericalSet(base), rng.rotor());
        CHECK(orbit_membership(base, p));
        if (auto g = testutil::find_rotor(base, p, rng)) {
            CHECK(orbit_membership(base, sample(SphericalSet(base), *g)));
        }
    }
    // Negatives: perturbing one coordinate off its sphere breaks membership.
    for (int t = 0; t < 60; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        Point base = rng.point(n);
        Point p = sample(SphericalSet(base), rng.rotor());
        std::vector<Quaternion> coords = p.coords;
        std::size_t at = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        coords[at] = coords[at] + Quaternion(1);
        CHECK_FALSE(orbit_membership(base, Point(coords)));
        CHECK_FALSE(testutil::find_rotor(base, Point(coords), rng, 50).has_value());
    }
    // Relative-position negative: same spheres, wrong pairwise angles.
    Point base({qi, qj});
    CHECK(orbit_membership(base, Point({qj, qk})));  // rotated copy
    CHECK_FALSE(orbit_membership(base, Point({qi, qi})));
    // Orientation negative in three components: a mirror image is not in the
    // simultaneous-conjugation orbit.
    Point frame3({qi, qj, qk});
    CHECK_FALSE(orbit_membership(frame3, Point({qi, qj, -qk})));
    CHECK_FALSE(testutil::find_rotor(frame3, Point({qi, qj, -qk}), rng, 200).has_value());
}

TEST_CASE("arranged bases require commuting components") {
    CHECK_NOTHROW(ArrangedBase(Point({qi, Quaternion(1) + qi * 2})));
    CHECK_THROWS_AS(ArrangedBase(Point({qi, qj})), NotArranged);
}
