#include <catch_amalgamated.hpp>

#include "slicereg/division.hpp"
#include "slicereg/gen.hpp"
#include "testutil.hpp"

using namespace slicereg;

TEST_CASE("monicity check requires a constant-1 leading slice") {
    int d = 0;
    SlicePoly q1 = SlicePoly::variable(2, 1);
    CHECK(is_monic_in(q1, 1, d));
    CHECK(d == 1);

    // q1^2 q2 + ... is not monic in q1: the leading coefficient is q2.
    SlicePoly m(2);
    m.add_term({2, 1}, Quaternion(1));
    m.add_term({0, 0}, Quaternion(5));
    CHECK_FALSE(is_monic_in(m, 1, d));

    // q1^2 i is not monic either: leading coefficient i != 1.
    SlicePoly mi(2);
    mi.add_term({2, 0}, Quaternion::unit_i());
    CHECK_FALSE(is_monic_in(mi, 1, d));

    CHECK_FALSE(is_monic_in(SlicePoly::constant(2, Quaternion(1)), 1, d));
}

TEST_CASE("q^2 divided by q - i") {
    SlicePoly p = star_pow(SlicePoly::variable(1, 1), 2);
    SlicePoly m = linear_poly(1, Quaternion::unit_i(), 1);
    auto [q, r] = div_monic(p, m, 1);

    SlicePoly expected_q(1);
    expected_q.add_term({1}, Quaternion(1));
    expected_q.add_term({0}, Quaternion::unit_i());
    CHECK(q == expected_q);
    CHECK(r == SlicePoly::constant(1, Quaternion(-1)));
    CHECK(star_mul(m, q) + r == p);
}

TEST_CASE("division invariants on random instances") {
    gen::Rng rng(301);
    for (int t = 0; t < 200; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        unsigned var = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n)));
        int d = rng.uniform(1, 3);
        SlicePoly m = star_pow(SlicePoly::variable(n, var), static_cast<unsigned>(d));
        SlicePoly low = rng.poly(n, 2, 3);
        for (const auto& [e, c] : low.terms()) {
            MultiIndex f = e;
            if (static_cast<int>(f[var - 1]) >= d) f[var - 1] = static_cast<unsigned>(d - 1);
            m.add_term(f, c);
        }
        int dd;
        if (!is_monic_in(m, var, dd)) continue;  // low part cancelled the lead

        SlicePoly p = rng.poly(n, 4, 5);
        auto [q, r] = div_monic(p, m, var);
        CHECK(star_mul(m, q) + r == p);
        CHECK(r.deg_in(var) < d);

        // Uniqueness: exact multiples leave no remainder and recover the
        // cofactor.
        SlicePoly x = rng.poly(n, 2, 3);
        auto [q2, r2] = div_monic(star_mul(m, x), m, var);
        CHECK(r2.is_zero());
        CHECK(q2 == x);
    }
}

TEST_CASE("division rejects bad inputs") {
    SlicePoly p = SlicePoly::variable(2, 1);
    SlicePoly not_monic = SlicePoly::variable(2, 1).times_right(Quaternion::unit_i());
    CHECK_THROWS_AS(div_monic(p, not_monic, 1), NotMonic);
    CHECK_THROWS_AS(div_monic(p, SlicePoly::variable(2, 1), 5), BadIndex);
    CHECK_THROWS_AS(div_monic(p, SlicePoly::variable(1, 1), 1), ArityMismatch);
}

TEST_CASE("double remainder is reduced in both variables") {
    gen::Rng rng(302);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = rng.poly(2, 4, 5);
        SlicePoly m = star_pow(SlicePoly::variable(2, 1), 2) +
                      SlicePoly::constant(2, rng.quaternion());
        SlicePoly l = SlicePoly::variable(2, 2) + SlicePoly::constant(2, rng.quaternion());
        SlicePoly r = double_remainder(p, m, l, 1, 2);
        CHECK(r.deg_in(1) < 2);
        CHECK(r.deg_in(2) < 1);
    }
    SlicePoly p = SlicePoly::variable(2, 1);
    CHECK_THROWS_AS(double_remainder(p, p, p, 1, 1), IndexClash);
}

TEST_CASE("chain reduction reconstructs and enforces order") {
    gen::Rng rng(303);
    for (int t = 0; t < 100; ++t) {
        SlicePoly p = rng.poly(3, 3, 5);
        std::vector<std::pair<SlicePoly, unsigned>> divisors;
        for (unsigned m = 3; m >= 1; --m)
            divisors.emplace_back(linear_poly(m, rng.quaternion(), 3), m);
        ChainResult chain = reduce_chain(p, divisors);
        SlicePoly sum = chain.remainder;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            sum = sum + star_mul(divisors[i].first, chain.cofactors[i]);
        CHECK(sum == p);
        CHECK(chain.remainder.is_constant());
    }

    // A later divisor involving an already-divided variable is refused.
    SlicePoly p = SlicePoly::variable(2, 1);
    std::vector<std::pair<SlicePoly, unsigned>> bad = {
        {linear_poly(1, Quaternion(1), 2), 1},
        {SlicePoly::variable(2, 2) + SlicePoly::variable(2, 1), 2},
    };
    CHECK_THROWS_AS(reduce_chain(p, bad), ChainOrderViolation);
}

TEST_CASE("descending linear chain ends in the evaluation") {
    gen::Rng rng(304);
    for (int t = 0; t < 100; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly p = rng.poly(n);
        Point a = rng.point(n);
        std::vector<std::pair<SlicePoly, unsigned>> divisors;
        for (unsigned m = n; m >= 1; --m)
            divisors.emplace_back(linear_poly(m, a[m - 1], n), m);
        ChainResult chain = reduce_chain(p, divisors);
        CHECK(chain.remainder.is_constant());
        CHECK(chain.remainder.constant_value() == eval(p, a));
    }
}
