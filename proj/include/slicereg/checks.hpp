#pragma once

#include <functional>
#include <iostream>

#include "slicereg/gen.hpp"
#include "slicereg/ideals.hpp"
#include "slicereg/parser.hpp"

// Randomized property checks shared by the acceptance suite and the CLI
// selftest. Every check is exact: a single violated identity fails it.

namespace slicereg::checks {

inline SlicePoly poly_in_prefix(gen::Rng& rng, unsigned nvars, unsigned k, int max_deg = 2,
                                int max_terms = 4) {
    SlicePoly p(nvars);
    int nterms = rng.uniform(1, max_terms);
    for (int t = 0; t < nterms; ++t) {
        MultiIndex e(nvars, 0);
        for (unsigned i = 0; i < k; ++i) e[i] = static_cast<unsigned>(rng.uniform(0, max_deg));
        p.add_term(e, rng.quaternion());
    }
    return p;
}

// Ring axioms of (H[q_1..q_n], +, *) plus real-coefficient commutation and a
// noncommutativity witness.
inline bool star_ring_axioms(gen::Rng& rng, int triples, int real_comm) {
    for (int t = 0; t < triples; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly a = rng.poly(n), b = rng.poly(n), c = rng.poly(n);
        if (!(star_mul(star_mul(a, b), c) == star_mul(a, star_mul(b, c)))) return false;
        if (!(star_mul(a, b + c) == star_mul(a, b) + star_mul(a, c))) return false;
        if (!(star_mul(a + b, c) == star_mul(a, c) + star_mul(b, c))) return false;
    }
    for (int t = 0; t < real_comm; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly r = rng.real_poly(n), q = rng.poly(n);
        if (!(star_mul(r, q) == star_mul(q, r))) return false;
    }
    // Noncommutativity witnessed: constants i, j.
    SlicePoly ci = SlicePoly::constant(1, Quaternion::unit_i());
    SlicePoly cj = SlicePoly::constant(1, Quaternion::unit_j());
    return !(star_mul(ci, cj) == star_mul(cj, ci));
}

// (q1 - i)*(q2 - j) = q1q2 - q1 j - q2 i + k, vanishing at (i, q2) exactly
// for q2 in C_i.
inline bool paper_product_identity(gen::Rng& rng, int on_cases, int off_cases) {
    SlicePoly p = parse_poly("(q1 - i)*(q2 - j)", 2);
    SlicePoly expected(2);
    expected.add_term({1, 1}, Quaternion(1));
    expected.add_term({1, 0}, -Quaternion::unit_j());
    expected.add_term({0, 1}, -Quaternion::unit_i());
    expected.add_term({0, 0}, Quaternion::unit_k());
    if (!(p == expected)) return false;

    Quaternion i = Quaternion::unit_i();
    for (int t = 0; t < on_cases; ++t) {
        Quaternion q2 = Quaternion(rng.rational()) + i * rng.rational();
        if (!eval(p, Point({i, q2})).is_zero()) return false;
    }
    for (int t = 0; t < off_cases; ++t) {
        Quaternion q2;
        do { q2 = rng.quaternion(); } while (commutes(q2, i));
        if (eval(p, Point({i, q2})).is_zero()) return false;
    }
    return true;
}

// eval_star_product agrees with eval of the expanded *-product at commuting
// component points.
inline bool prodstar_agreement(gen::Rng& rng, int cases) {
    for (int t = 0; t < cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly p = rng.poly(n), q = rng.poly(n);
        Point a = rng.commuting_point(n);
        if (!(eval_star_product(p, q, a) == eval(star_mul(p, q), a))) return false;
    }
    return true;
}

inline SlicePoly random_monic(gen::Rng& rng, unsigned n, unsigned var, int deg) {
    SlicePoly m = star_pow(SlicePoly::variable(n, var), static_cast<unsigned>(deg));
    SlicePoly low = rng.poly(n, 2, 3);
    for (const auto& [e, c] : low.terms()) {
        MultiIndex f = e;
        if (static_cast<int>(f[var - 1]) >= deg) f[var - 1] = static_cast<unsigned>(deg - 1);
        m.add_term(f, c);
    }
    int d;
    if (!is_monic_in(m, var, d)) return random_monic(rng, n, var, deg);  // leading term cancelled
    return m;
}

// Multiply-back reconstruction, degree bound, uniqueness via re-division of
// exact multiples, and the double-remainder degree bounds.
inline bool division_properties(gen::Rng& rng, int cases) {
    for (int t = 0; t < cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        unsigned var = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n)));
        int d = rng.uniform(1, 3);
        SlicePoly m = random_monic(rng, n, var, d);
        SlicePoly p = rng.poly(n, 4, 5);
        auto [q, r] = div_monic(p, m, var);
        if (!(star_mul(m, q) + r == p)) return false;
        if (r.deg_in(var) >= d) return false;
        // Uniqueness: dividing an exact multiple recovers the cofactor.
        SlicePoly x = rng.poly(n, 2, 3);
        auto [q2, r2] = div_monic(star_mul(m, x), m, var);
        if (!r2.is_zero() || !(q2 == x)) return false;

        if (n >= 2) {
            unsigned var_l = var % n + 1;
            // L monic in q_l and free of q_m.
            SlicePoly l = star_pow(SlicePoly::variable(n, var_l),
                                   static_cast<unsigned>(rng.uniform(1, 2)));
            l = l + SlicePoly::constant(n, rng.quaternion());
            int dl;
            is_monic_in(l, var_l, dl);
            SlicePoly tr = double_remainder(p, m, l, var, var_l);
            if (tr.deg_in(var) >= d || tr.deg_in(var_l) >= dl) return false;
        }
    }
    return true;
}

namespace detail {

inline bool divisors_vanish_on_samples(const VanishingCertificate& cert, gen::Rng& rng,
                                       int npoints, const std::function<Point(gen::Rng&)>& sample) {
    for (int s = 0; s < npoints; ++s) {
        Point pt = sample(rng);
        for (const auto& d : cert.divisors)
            if (!eval(d.poly, pt).is_zero()) return false;
    }
    return true;
}

}  // namespace detail

// Certificates for the six structured set kinds: constructed members accepted
// with exactly reconstructing certificates whose divisors vanish on sampled
// set points; members perturbed by a nonzero reduced polynomial rejected with
// a concrete witness.
inline bool certificate_properties(gen::Rng& rng, int accepts, int rejects, int sample_points) {
    for (int kind = 0; kind <= 5; ++kind)
    for (int t = 0; t < accepts + rejects; ++t) {
        bool rejecting = t >= accepts;
        unsigned n = static_cast<unsigned>(rng.uniform(2, 3));

        SlicePoly member(n);
        SlicePoly reduced(n);  // nonzero and reduced for the rejecting case
        VanishResult res{};
        std::function<Point(gen::Rng&)> sample_set;

        switch (kind) {
            case 0: {  // single point
                Point a = rng.point(n);
                for (unsigned k = 1; k <= n; ++k)
                    member = member +
                             star_mul(linear_poly(k, a[k - 1], n), poly_in_prefix(rng, n, k));
                if (rejecting) reduced = SlicePoly::constant(n, rng.nonzero_quaternion());
                SlicePoly p = member + reduced;
                res = decompose_at_point(p, a);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    if (!(res.witness.value == eval(p, a))) return false;
                    continue;
                }
                sample_set = [a](gen::Rng&) { return a; };
                break;
            }
            case 1: {  // slab H^{m-1} x {a} x (C_a)^{n-m}
                Quaternion a = rng.quaternion();
                unsigned m = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n)));
                member = star_mul(linear_poly(m, a, n), rng.poly(n));
                if (rejecting) {
                    do {
                        reduced = rng.poly(n, 2, 3);
                        SlicePoly killed(n);
                        for (const auto& [e, c] : reduced.terms()) {
                            MultiIndex f = e;
                            f[m - 1] = 0;
                            killed.add_term(f, c);
                        }
                        reduced = killed;
                    } while (reduced.is_zero());
                }
                SlicePoly p = member + reduced;
                res = factor_slab(p, a, m);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    if (res.witness.residual.is_zero()) return false;
                    continue;
                }
                sample_set = [a, m, n](gen::Rng& r) {
                    std::vector<Quaternion> c;
                    for (unsigned i = 1; i <= n; ++i) {
                        if (i < m) c.push_back(r.quaternion());
                        else if (i == m) c.push_back(a);
                        else c.push_back(Quaternion(r.rational()) + a.im() * r.rational());
                    }
                    return Point(std::move(c));
                };
                break;
            }
            case 2: {  // sphere product over q_1..q_k
                unsigned k = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n)));
                std::vector<Quaternion> bases;
                std::vector<SphereDescriptor> spheres;
                for (unsigned l = 0; l < k; ++l) {
                    bases.push_back(rng.non_real_quaternion());
                    spheres.push_back(sphere_of(bases.back()));
                }
                for (unsigned l = 1; l <= k; ++l)
                    member = member + star_mul(sphere_poly(spheres[l - 1], l, n), rng.poly(n));
                if (rejecting) {
                    do {
                        SlicePoly raw = rng.poly(n, 2, 3);
                        reduced = SlicePoly(n);
                        for (const auto& [e, c] : raw.terms()) {
                            MultiIndex f = e;
                            for (unsigned l = 0; l < k; ++l) f[l] = f[l] > 1 ? 1 : f[l];
                            reduced.add_term(f, c);
                        }
                    } while (reduced.is_zero());
                }
                SlicePoly p = member + reduced;
                res = vanishes_on_sphere_product(p, spheres);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    if (!(res.witness.residual == reduced)) return false;
                    continue;
                }
                sample_set = [bases, n](gen::Rng& r) {
                    std::vector<Quaternion> c;
                    for (const auto& b : bases) c.push_back(conjugate_by(b, r.rotor()));
                    while (c.size() < n) c.push_back(r.quaternion());
                    return Point(std::move(c));
                };
                break;
            }
            case 3: {  // spheres times a fixed tail point
                unsigned k = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n) - 1));
                std::vector<Quaternion> bases;
                std::vector<SphereDescriptor> spheres;
                for (unsigned l = 0; l < k; ++l) {
                    bases.push_back(rng.non_real_quaternion());
                    spheres.push_back(sphere_of(bases.back()));
                }
                std::vector<Quaternion> tail;
                for (unsigned m = k; m < n; ++m) tail.push_back(rng.quaternion());
                for (unsigned l = 1; l <= k; ++l)
                    member = member + star_mul(sphere_poly(spheres[l - 1], l, n), rng.poly(n));
                for (unsigned m = k + 1; m <= n; ++m)
                    member = member + star_mul(linear_poly(m, tail[m - k - 1], n),
                                               poly_in_prefix(rng, n, m));
                if (rejecting) {
                    do {
                        reduced = SlicePoly(n);
                        MultiIndex e(n, 0);
                        for (unsigned l = 0; l < k; ++l)
                            e[l] = static_cast<unsigned>(rng.uniform(0, 1));
                        reduced.add_term(e, rng.quaternion());
                    } while (reduced.is_zero());
                }
                SlicePoly p = member + reduced;
                res = vanishes_on_sphere_point_set(p, spheres, tail);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    continue;
                }
                sample_set = [bases, tail](gen::Rng& r) {
                    std::vector<Quaternion> c;
                    for (const auto& b : bases) c.push_back(conjugate_by(b, r.rotor()));
                    c.insert(c.end(), tail.begin(), tail.end());
                    return Point(std::move(c));
                };
                break;
            }
            case 4: {  // arranged spherical set
                Point base = rng.arranged_base(n);
                for (unsigned l = 1; l < n; ++l)
                    member = member +
                             star_mul(q_ell_poly(base[l - 1], base[l], l, n), rng.poly(n));
                member = member +
                         star_mul(sphere_poly(sphere_of(base[n - 1]), n, n), rng.poly(n));
                if (rejecting) {
                    do {
                        reduced = SlicePoly(n);
                        MultiIndex e(n, 0);
                        e[n - 1] = static_cast<unsigned>(rng.uniform(0, 1));
                        reduced.add_term(e, rng.quaternion());
                    } while (reduced.is_zero());
                }
                SlicePoly p = member + reduced;
                res = vanishes_on_arranged_sphere(p, base);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    continue;
                }
                sample_set = [base](gen::Rng& r) { return sample(SphericalSet(base), r.rotor()); };
                break;
            }
            default: {  // balloon, including right-ideal closure
                unsigned k = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n) - 1));
                Balloon b(rng.arranged_base(k).coords, rng.commuting_point(n - k).coords);
                for (unsigned l = 1; l < k; ++l)
                    member = member +
                             star_mul(q_ell_poly(b.head[l - 1], b.head[l], l, n), rng.poly(n));
                member = member +
                         star_mul(sphere_poly(sphere_of(b.head[k - 1]), k, n), rng.poly(n));
                for (unsigned m = k + 1; m <= n; ++m)
                    member = member + star_mul(linear_poly(m, b.tail[m - k - 1], n),
                                               poly_in_prefix(rng, n, m));
                member = star_mul(member, rng.poly(n, 1, 2));  // right-ideal closure
                if (rejecting) {
                    do {
                        reduced = SlicePoly(n);
                        MultiIndex e(n, 0);
                        e[k - 1] = static_cast<unsigned>(rng.uniform(0, 1));
                        reduced.add_term(e, rng.quaternion());
                    } while (reduced.is_zero());
                }
                SlicePoly p = member + reduced;
                res = vanishes_on_balloon(p, b);
                if (rejecting) {
                    if (res.vanishes()) return false;
                    continue;
                }
                sample_set = [b](gen::Rng& r) { return sample(b, r.rotor()); };
                break;
            }
        }

        if (!res.vanishes()) return false;
        if (!res.certificate->verifies(member)) return false;
        if (!detail::divisors_vanish_on_samples(*res.certificate, rng, sample_points, sample_set))
            return false;
    }
    return true;
}

// A nonzero polynomial of degree at most one in each variable cannot vanish
// on a full-length product of nondegenerate spheres.
inline bool grado_uno(gen::Rng& rng, int cases) {
    for (int t = 0; t < cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        SlicePoly p(n);
        do {
            p = SlicePoly(n);
            int nterms = rng.uniform(1, 4);
            for (int s = 0; s < nterms; ++s) {
                MultiIndex e(n);
                for (unsigned i = 0; i < n; ++i) e[i] = static_cast<unsigned>(rng.uniform(0, 1));
                p.add_term(e, rng.quaternion());
            }
        } while (p.is_zero());
        std::vector<SphereDescriptor> spheres;
        for (unsigned l = 0; l < n; ++l) spheres.push_back(sphere_of(rng.non_real_quaternion()));
        if (vanishes_on_sphere_product(p, spheres).vanishes()) return false;
    }
    return true;
}

// Q_l vanishes at its arranged pair in both sign cases of the imaginary
// parts (same and opposite directions).
inline bool q_ell_vanishing(gen::Rng& rng, int cases) {
    for (int t = 0; t < cases; ++t) {
        Quaternion d = rng.non_real_quaternion().im();
        Rational y1 = rng.nonzero_rational(), y2 = rng.nonzero_rational();
        if (t % 2 == 0 && y1 * y2 < 0) y2 = -y2;  // force same-direction half the time
        if (t % 2 == 1 && y1 * y2 > 0) y2 = -y2;
        Quaternion a1 = Quaternion(rng.rational()) + d * y1;
        Quaternion a2 = Quaternion(rng.rational()) + d * y2;
        SlicePoly q = q_ell_poly(a1, a2, 1, 2);
        if (!q.is_real()) return false;
        if (!eval(q, Point({a1, a2})).is_zero()) return false;
    }
    return true;
}

// Splitting and Representation Formula against direct evaluation.
inline bool split_represent(gen::Rng& rng, int split_cases, int rep_cases) {
    for (int t = 0; t < split_cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SlicePoly p = rng.poly(n);
        SliceFrame fr = rng.frame();
        SplitPair sp = split(p, fr);
        if (!(unsplit(sp, fr) == p)) return false;
        std::vector<SliceComplex> z;
        std::vector<Quaternion> zq;
        for (unsigned i = 0; i < n; ++i) {
            SliceComplex c{rng.rational(), rng.rational()};
            z.push_back(c);
            zq.push_back(to_quaternion(c, fr.k_unit));
        }
        Quaternion lhs = eval(p, Point(zq));
        Quaternion rhs = to_quaternion(eval(sp.f, z), fr.k_unit) +
                         to_quaternion(eval(sp.g, z), fr.k_unit) * fr.l_unit;
        if (!(lhs == rhs)) return false;
    }
    for (int t = 0; t < rep_cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SlicePoly p = rng.poly(n);
        Quaternion j = rng.imaginary_unit(), k = rng.imaginary_unit();
        std::vector<Quaternion> z;
        for (unsigned i = 0; i < n; ++i) {
            Rational y = rng.rational();
            if (y < 0) y = -y;
            z.push_back(to_quaternion({rng.rational(), y}, k));
        }
        Point zp(z);
        if (!(represent(p, j, k, zp) == eval(p, shadows(zp, j, k)))) return false;
    }
    return true;
}

// Vanishing at two distinct points of an arranged sphere forces vanishing on
// the whole set; the one-variable case is the {i, j} example forcing S.
inline bool two_zeros_whole_sphere(gen::Rng& rng, int cases) {
    auto force_two_zeros = [&](const SlicePoly& raw, const Point& p1, const Point& p2) {
        unsigned n = raw.nvars();
        SlicePoly p = raw - SlicePoly::constant(n, eval(raw, p1));
        Quaternion v = eval(p, p2);
        if (v.is_zero()) return p;
        for (unsigned m = 1; m <= n; ++m) {
            SlicePoly w = linear_poly(m, p1[m - 1], n);
            Quaternion wv = eval(w, p2);
            if (!wv.is_zero())
                return p - w.times_right(wv.inverse() * v);
        }
        return p;  // unreachable for distinct points
    };

    for (int t = 0; t < cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        Point base = rng.arranged_base(n);
        Point p1 = sample(SphericalSet(base), rng.rotor());
        Point p2;
        do { p2 = sample(SphericalSet(base), rng.rotor()); } while (p2 == p1);
        SlicePoly p = force_two_zeros(rng.poly(n), p1, p2);
        if (!eval(p, p1).is_zero() || !eval(p, p2).is_zero()) return false;
        if (!vanishes_on_arranged_sphere(p, base).vanishes()) return false;
    }

    // One-variable specialization: zeros at i and j force the whole sphere S.
    Point i({Quaternion::unit_i()}), j({Quaternion::unit_j()});
    for (int t = 0; t < 10; ++t) {
        SlicePoly p = force_two_zeros(rng.poly(1, 4, 5), i, j);
        if (!vanishes_on_arranged_sphere(p, i).vanishes()) return false;
        if (!eval(p, Point({Quaternion::unit_k()})).is_zero()) return false;
    }
    return true;
}

// Enlargement: (a) for ideals generated from balloon certificates, the
// generating balloon reappears among the verified balloons at the base
// point; (b) with junction count p in {2,3}, all 2^{p-1} candidates are
// enumerated and at least one verifies.
inline bool enlargement(gen::Rng& rng, int balloon_cases, int junction_cases) {
    for (int t = 0; t < balloon_cases; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(2, 3));
        unsigned k = static_cast<unsigned>(rng.uniform(1, static_cast<int>(n) - 1));
        Point head = rng.arranged_base(k);
        // Tail on a slice noncommuting with the head's, so the commuting
        // tail index of the base point is exactly k.
        Quaternion head_dir = head[0].im();
        Quaternion tail_dir;
        do { tail_dir = rng.pythagorean_direction(); } while (commutes(tail_dir, head_dir));
        std::vector<Quaternion> tail;
        for (unsigned m = 0; m < n - k; ++m)
            tail.push_back(Quaternion(rng.rational()) + tail_dir * rng.nonzero_rational());
        Balloon b(head.coords, tail);

        std::vector<SlicePoly> gens;
        for (unsigned l = 1; l < k; ++l)
            gens.push_back(star_mul(q_ell_poly(b.head[l - 1], b.head[l], l, n), rng.poly(n)));
        gens.push_back(star_mul(sphere_poly(sphere_of(b.head[k - 1]), k, n), rng.poly(n)));
        for (unsigned m = k + 1; m <= n; ++m)
            gens.push_back(star_mul(linear_poly(m, b.tail[m - k - 1], n),
                                    poly_in_prefix(rng, n, m)));
        RightIdeal ideal(n, gens);

        EnlargementReport rep = enlarge_zero(ideal, b.base_point());
        if (rep.t != k) return false;
        bool found = false;
        for (const auto& v : rep.verified) {
            if (v.tail == b.tail && membership(b, v.base_point()) &&
                membership(v, b.base_point()))
                found = true;
        }
        if (!found) return false;
    }

    for (int t = 0; t < junction_cases; ++t) {
        int p_junctions = rng.uniform(2, 3);
        // Head blocks on mutually noncommuting Pythagorean slices, plus a
        // commuting tail on yet another direction.
        std::vector<Quaternion> coords;
        Quaternion prev_dir{0, 0, 0, 0};
        for (int blk = 0; blk < p_junctions; ++blk) {
            Quaternion d;
            do { d = rng.pythagorean_direction(); } while (!prev_dir.is_zero() && commutes(d, prev_dir));
            int len = blk == 0 ? rng.uniform(1, 2) : 1;
            for (int s = 0; s < len; ++s)
                coords.push_back(Quaternion(rng.rational()) + d * rng.nonzero_rational());
            prev_dir = d;
        }
        unsigned t_expected = static_cast<unsigned>(coords.size());
        Quaternion tail_dir;
        do { tail_dir = rng.pythagorean_direction(); } while (commutes(tail_dir, prev_dir));
        coords.push_back(Quaternion(rng.rational()) + tail_dir * rng.nonzero_rational());
        Point pt(coords);
        unsigned n = static_cast<unsigned>(coords.size());

        // Right ideal robustly inside E_pt: single-variable sphere divisors
        // for the head, trailing linear divisors for the commuting tail.
        std::vector<SlicePoly> gens;
        for (unsigned l = 1; l <= t_expected; ++l)
            gens.push_back(star_mul(sphere_poly(sphere_of(pt[l - 1]), l, n), rng.poly(n)));
        for (unsigned m = t_expected + 1; m <= n; ++m)
            gens.push_back(star_mul(linear_poly(m, pt[m - 1], n), rng.poly(n)));
        RightIdeal ideal(n, gens);

        EnlargementReport rep = enlarge_zero(ideal, pt);
        if (rep.t != t_expected) return false;
        std::size_t expected_candidates = std::size_t{1} << (p_junctions - 1);
        if (rep.candidates.size() != expected_candidates) return false;
        if (rep.verified.empty()) return false;
    }
    return true;
}

// Sliced union/intersection semantics agree pointwise with the descriptor
// semantics on slice points.
inline bool slice_topology(gen::Rng& rng, int instances, int points_per_instance) {
    for (int t = 0; t < instances; ++t) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
        SliceFrame fr = rng.frame();

        // A slice point both sides must agree contains: some leaves are built
        // to vanish there, so the positive branch is exercised too.
        std::vector<SliceComplex> z0;
        std::vector<Quaternion> zq0;
        for (unsigned i = 0; i < n; ++i) {
            SliceComplex c{rng.rational(), rng.rational()};
            z0.push_back(c);
            zq0.push_back(to_quaternion(c, fr.k_unit));
        }

        auto mk_leaf = [&](bool through_z0) {
            std::vector<SlicePoly> gens;
            int ngens = rng.uniform(1, 2);
            for (int s = 0; s < ngens; ++s) {
                if (through_z0) {
                    SlicePoly g(n);
                    for (unsigned i = 1; i <= n; ++i)
                        g = g + star_mul(linear_poly(i, zq0[i - 1], n),
                                         poly_in_prefix(rng, n, i, 1, 2));
                    gens.push_back(g);
                } else {
                    gens.push_back(rng.poly(n, 1, 2));
                }
            }
            return SliceAlgebraicSet::leaf(n, gens);
        };
        SliceAlgebraicSet s = mk_leaf(rng.coin());
        int shape = rng.uniform(0, 2);
        if (shape == 1) s = set_union(s, mk_leaf(rng.coin()));
        else if (shape == 2) s = set_intersection({s, mk_leaf(rng.coin()), mk_leaf(rng.coin())});

        SlicedSet sliced = slice(s, fr);
        for (int sp = 0; sp < points_per_instance; ++sp) {
            std::vector<SliceComplex> z;
            std::vector<Quaternion> zq;
            if (sp == 0) {
                z = z0;
                zq = zq0;
            } else {
                for (unsigned i = 0; i < n; ++i) {
                    SliceComplex c{rng.rational(), rng.rational()};
                    z.push_back(c);
                    zq.push_back(to_quaternion(c, fr.k_unit));
                }
            }
            if (sliced.satisfied(z) != s.contains(Point(zq))) return false;
        }
    }
    return true;
}

struct SuiteScale {
    int ring_triples = 500;
    int ring_real = 200;
    int identity_cases = 20;
    int prodstar_cases = 300;
    int division_cases = 300;
    int cert_accepts = 200;
    int cert_rejects = 200;
    int cert_samples = 20;
    int grado_uno_cases = 100;
    int q_ell_cases = 200;
    int split_cases = 100;
    int rep_cases = 100;
    int zericinesi_cases = 100;
    int enlarge_balloons = 50;
    int enlarge_junctions = 10;
    int topology_instances = 50;
    int topology_points = 30;
};

inline SuiteScale desk_scale() { return {}; }

inline SuiteScale quick_scale() {
    SuiteScale s;
    s.ring_triples = 50;
    s.ring_real = 20;
    s.identity_cases = 5;
    s.prodstar_cases = 30;
    s.division_cases = 30;
    s.cert_accepts = 24;
    s.cert_rejects = 24;
    s.cert_samples = 5;
    s.grado_uno_cases = 20;
    s.q_ell_cases = 20;
    s.split_cases = 15;
    s.rep_cases = 15;
    s.zericinesi_cases = 15;
    s.enlarge_balloons = 6;
    s.enlarge_junctions = 3;
    s.topology_instances = 10;
    s.topology_points = 10;
    return s;
}

// Runs every criterion, printing one pass/fail line each; returns the number
// of failures.
inline int run_suite(std::uint64_t seed, const SuiteScale& sc, std::ostream& os) {
    gen::Rng rng(seed);
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        os << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };
    report("1. star-ring axioms and real-coefficient commutation",
           star_ring_axioms(rng, sc.ring_triples, sc.ring_real));
    report("2. (q1-i)*(q2-j) expansion and C_i vanishing",
           paper_product_identity(rng, sc.identity_cases, sc.identity_cases));
    report("3. star-product evaluation at commuting points",
           prodstar_agreement(rng, sc.prodstar_cases));
    report("4. Euclidean division and double remainder",
           division_properties(rng, sc.division_cases));
    report("5. vanishing certificates for the six structured set kinds",
           certificate_properties(rng, sc.cert_accepts, sc.cert_rejects, sc.cert_samples));
    report("6. degree-one polynomials on full sphere products",
           grado_uno(rng, sc.grado_uno_cases));
    report("7. pair polynomial vanishing in both sign cases",
           q_ell_vanishing(rng, sc.q_ell_cases));
    report("8. Splitting Lemma and Representation Formula",
           split_represent(rng, sc.split_cases, sc.rep_cases));
    report("9. two zeros force the whole arranged sphere",
           two_zeros_whole_sphere(rng, sc.zericinesi_cases));
    report("10. zero-set enlargement to balloons",
           enlargement(rng, sc.enlarge_balloons, sc.enlarge_junctions));
    report("11. slice topology agreement",
           slice_topology(rng, sc.topology_instances, sc.topology_points));
    return failures;
}

}  // namespace slicereg::checks
