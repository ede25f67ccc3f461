#include <catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace slicereg;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
}  // namespace

TEST_CASE("term storage drops zeros and merges exponents") {
    SlicePoly p(2);
    p.add_term({1, 0}, qi);
    p.add_term({1, 0}, -qi);
    CHECK(p.is_zero());
    p.add_term({0, 2}, {1, 0, 0, 0});
    p.add_term({0, 2}, {2, 0, 0, 0});
    CHECK(p.terms().size() == 1);
    CHECK(p.terms().begin()->second == Quaternion(3));
    CHECK(p.deg_in(2) == 2);
    CHECK(p.deg_in(1) == 0);
    CHECK(SlicePoly(2).deg_in(1) == -1);
    CHECK(SlicePoly(2).total_degree() == -1);
    CHECK_THROWS_AS(p.add_term({0, 0, 0}, qi), ArityMismatch);
}

TEST_CASE("star product follows the exponent-add coefficient-order rule") {
    // (q1 a) * (q2 b) = q1 q2 ab: coefficients collect rightward in order.
    SlicePoly lhs = SlicePoly::variable(2, 1).times_right(qi);
    SlicePoly rhs = SlicePoly::variable(2, 2).times_right(qj);
    SlicePoly expected(2);
    expected.add_term({1, 1}, qk);
    CHECK(star_mul(lhs, rhs) == expected);
    // Reversing the factors flips the coefficient sign but not the monomial.
    SlicePoly flipped(2);
    flipped.add_term({1, 1}, -qk);
    CHECK(star_mul(rhs, lhs) == flipped);
}

TEST_CASE("star product agrees with the naive term-list oracle") {
    gen::Rng rng(201);
    for (int t = 0; t < 200; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly p = rng.poly(n), q = rng.poly(n);
        CHECK(star_mul(p, q) == testutil::naive_star(p, q));
    }
}

TEST_CASE("star powers") {
    SlicePoly q1 = SlicePoly::variable(1, 1);
    CHECK(star_pow(q1, 0) == SlicePoly::constant(1, Quaternion(1)));
    SlicePoly cube(1);
    cube.add_term({3}, Quaternion(1));
    CHECK(star_pow(q1, 3) == cube);
    // Constant powers multiply in order: (i+j)^2 = -2.
    SlicePoly c = SlicePoly::constant(1, qi + qj);
    CHECK(star_pow(c, 2) == SlicePoly::constant(1, Quaternion(-2)));
}

TEST_CASE("evaluation is the ordered product per monomial") {
    // q1 q2 - q1 j - q2 i + k at (i, j): k - (-k) - (-k) ... collected = 2k.
    SlicePoly p(2);
    p.add_term({1, 1}, Quaternion(1));
    p.add_term({1, 0}, -qj);
    p.add_term({0, 1}, -qi);
    p.add_term({0, 0}, qk);
    CHECK(eval(p, Point({qi, qj})) == qk * 2);
    CHECK(eval(p, Point({qi, Quaternion{2, 3, 0, 0}})).is_zero());
    CHECK_THROWS_AS(eval(p, Point({qi})), ArityMismatch);
}

TEST_CASE("star-product evaluation needs commuting components") {
    SlicePoly p = SlicePoly::variable(2, 1);
    SlicePoly q = SlicePoly::variable(2, 2);
    CHECK_THROWS_AS(eval_star_product(p, q, Point({qi, qj})), NonCommutingPoint);

    gen::Rng rng(202);
    for (int t = 0; t < 100; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly a = rng.poly(n), b = rng.poly(n);
        Point pt = rng.commuting_point(n);
        CHECK(eval_star_product(a, b, pt) == eval(star_mul(a, b), pt));
    }
}

TEST_CASE("tail substitution matches evaluation") {
    SlicePoly p(2);
    p.add_term({1, 1}, Quaternion(1));
    p.add_term({1, 0}, -qj);
    p.add_term({0, 1}, -qi);
    p.add_term({0, 0}, qk);
    // Substituting the whole point (i, j) leaves the constant 2k.
    CHECK(substitute_tail(p, 0, {qi, qj}) == SlicePoly::constant(2, qk * 2));
    // Substituting only q2 = j cancels the q1 terms: q1 j - q1 j - ji + k.
    SlicePoly partial = substitute_tail(p, 1, {qj});
    CHECK(partial == SlicePoly::constant(2, qk * 2));

    gen::Rng rng(203);
    for (int t = 0; t < 100; ++t) {
        unsigned n = 3;
        SlicePoly r = rng.poly(n);
        unsigned k = static_cast<unsigned>(rng.uniform(0, 3));
        std::vector<Quaternion> tail;
        for (unsigned i = k; i < n; ++i) tail.push_back(rng.quaternion());
        SlicePoly sub = substitute_tail(r, k, tail);
        for (unsigned m = k + 1; m <= n; ++m) CHECK(sub.deg_in(m) <= 0);
        // Agreement at full points sharing the substituted tail.
        Point head = rng.point(n);
        std::vector<Quaternion> full(head.coords.begin(), head.coords.begin() + k);
        full.insert(full.end(), tail.begin(), tail.end());
        CHECK(eval(sub, head) == eval(sub, Point(full)));
        CHECK(eval(sub, Point(full)) == eval(r, Point(full)));
    }
}

TEST_CASE("sphere and linear building blocks") {
    // S_i(q) = q^2 + 1.
    SlicePoly si = sphere_poly(sphere_of(qi), 1, 1);
    SlicePoly expect(1);
    expect.add_term({2}, Quaternion(1));
    expect.add_term({0}, Quaternion(1));
    CHECK(si == expect);
    CHECK(si.is_real());
    CHECK(eval(si, Point({qj})).is_zero());
    CHECK(eval(si, Point({qk})).is_zero());

    SlicePoly lin = linear_poly(2, qi, 2);
    CHECK(eval(lin, Point({qj, qi})).is_zero());
    CHECK(eval(lin, Point({qj, qj})) == qj - qi);
}

TEST_CASE("eval of substitute_tail ignores trailing coordinates") {
    // The substituted polynomial is free of the tail variables, so any
    // trailing coordinates evaluate it identically.
    SlicePoly p(2);
    p.add_term({1, 2}, qi);
    SlicePoly sub = substitute_tail(p, 1, {qj});
    // q1 j^2 i = -q1 i.
    SlicePoly expect(2);
    expect.add_term({1, 0}, -qi);
    CHECK(sub == expect);
}
