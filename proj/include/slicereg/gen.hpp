#pragma once

#include <array>
#include <random>

#include "slicereg/polynomial.hpp"
#include "slicereg/slicegeom.hpp"

namespace slicereg::gen {

// Deterministic random instance generator for property checks. Everything is
// driven by one seed so failures replay exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Rational rational(int max_num = 6, int max_den = 3) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rational nonzero_rational(int max_num = 6, int max_den = 3) {
        Rational r;
        do { r = rational(max_num, max_den); } while (r == 0);
        return r;
    }

    Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

    Quaternion nonzero_quaternion() {
        Quaternion q;
        do { q = quaternion(); } while (q.is_zero());
        return q;
    }

    Quaternion non_real_quaternion() {
        Quaternion q;
        do { q = quaternion(); } while (q.is_real());
        return q;
    }

    // An imaginary direction whose norm is rational (component triple from a
    // Pythagorean quadruple, randomly signed and permuted, rationally scaled).
    Quaternion pythagorean_direction() {
        static constexpr std::array<std::array<int, 3>, 10> triples = {{
            {3, 4, 0}, {1, 2, 2}, {2, 3, 6}, {1, 4, 8}, {12, 5, 0},
            {2, 6, 9}, {6, 6, 7}, {4, 4, 7}, {8, 9, 12}, {1, 0, 0},
        }};
        auto t = triples[static_cast<std::size_t>(uniform(0, triples.size() - 1))];
        std::array<Rational, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = Rational(t[i]) * (coin() ? 1 : -1);
        std::swap(v[0], v[static_cast<std::size_t>(uniform(0, 2))]);
        std::swap(v[1], v[static_cast<std::size_t>(1 + uniform(0, 1))]);
        Rational s = Rational(uniform(1, 4), uniform(1, 3));
        return {0, v[0] * s, v[1] * s, v[2] * s};
    }

    // Non-real quaternion with rational |Im|.
    Quaternion pythagorean_quaternion() {
        return Quaternion(rational()) + pythagorean_direction();
    }

    // Rational imaginary unit (|Im| = 1).
    Quaternion imaginary_unit() {
        Quaternion d = pythagorean_direction();
        Rational n;
        rational_sqrt(d.norm_sq(), n);
        return d * (Rational(1) / n);
    }

    // Orthonormal rational frame (K, L).
    SliceFrame frame() {
        static const std::vector<std::pair<Quaternion, Quaternion>> frames = {
            {Quaternion::unit_i(), Quaternion::unit_j()},
            {Quaternion::unit_j(), Quaternion::unit_k()},
            {Quaternion::unit_k(), Quaternion::unit_i()},
            {{0, Rational(3, 5), Rational(4, 5), 0}, Quaternion::unit_k()},
            {{0, Rational(3, 5), Rational(4, 5), 0}, {0, Rational(4, 5), Rational(-3, 5), 0}},
            {{0, Rational(2, 7), Rational(3, 7), Rational(6, 7)},
             {0, Rational(6, 7), Rational(2, 7), Rational(-3, 7)}},
            {{0, Rational(1, 3), Rational(2, 3), Rational(2, 3)},
             {0, Rational(2, 3), Rational(1, 3), Rational(-2, 3)}},
        };
        auto [k, l] = frames[static_cast<std::size_t>(uniform(0, frames.size() - 1))];
        return SliceFrame(k, l);
    }

    Point point(unsigned nvars) {
        std::vector<Quaternion> c;
        for (unsigned i = 0; i < nvars; ++i) c.push_back(quaternion());
        return Point(std::move(c));
    }

    // Point with pairwise commuting components: x_l + y_l d on one slice.
    Point commuting_point(unsigned nvars) {
        Quaternion d = non_real_quaternion().im();
        std::vector<Quaternion> c;
        for (unsigned i = 0; i < nvars; ++i)
            c.push_back(Quaternion(rational()) + d * rational());
        return Point(std::move(c));
    }

    // Arranged base with non-real components (one slice, nonzero imaginary
    // parts); Pythagorean direction so aligner-adjacent code stays rational.
    Point arranged_base(unsigned nvars) {
        Quaternion d = pythagorean_direction();
        std::vector<Quaternion> c;
        for (unsigned i = 0; i < nvars; ++i)
            c.push_back(Quaternion(rational()) + d * nonzero_rational());
        return Point(std::move(c));
    }

    SlicePoly poly(unsigned nvars, int max_deg = 3, int max_terms = 5) {
        SlicePoly p(nvars);
        int nterms = uniform(1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            MultiIndex e(nvars);
            for (unsigned i = 0; i < nvars; ++i)
                e[i] = static_cast<unsigned>(uniform(0, max_deg));
            p.add_term(e, quaternion());
        }
        return p;
    }

    SlicePoly nonzero_poly(unsigned nvars, int max_deg = 3, int max_terms = 5) {
        SlicePoly p(nvars);
        do { p = poly(nvars, max_deg, max_terms); } while (p.is_zero());
        return p;
    }

    SlicePoly real_poly(unsigned nvars, int max_deg = 3, int max_terms = 5) {
        SlicePoly p(nvars);
        int nterms = uniform(1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            MultiIndex e(nvars);
            for (unsigned i = 0; i < nvars; ++i)
                e[i] = static_cast<unsigned>(uniform(0, max_deg));
            p.add_term(e, Quaternion(rational()));
        }
        return p;
    }

    // Nonzero rotor for sampling orbits.
    Quaternion rotor() { return nonzero_quaternion(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace slicereg::gen
