#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicereg/division.hpp"
#include "slicereg/slicegeom.hpp"

namespace slicereg {

enum class DivisorKind { Linear, Spherical, Pair };

struct CertDivisor {
    SlicePoly poly;
    unsigned var;  // the variable the divisor is monic in (1-based)
    DivisorKind kind;
};

// A positive vanishing certificate: P = sum divisor_i * cofactor_i + residual
// with residual = 0. Each divisor vanishes identically on the target set, so
// the identity exhibits the vanishing of P.
struct VanishingCertificate {
    std::vector<CertDivisor> divisors;
    std::vector<SlicePoly> cofactors;
    SlicePoly residual;

    VanishingCertificate() : residual(SlicePoly(1)) {}

    SlicePoly reconstruct() const {
        SlicePoly sum = residual;
        for (std::size_t i = 0; i < divisors.size(); ++i)
            sum = sum + star_mul(divisors[i].poly, cofactors[i]);
        return sum;
    }

    bool verifies(const SlicePoly& p) const { return residual.is_zero() && reconstruct() == p; }
};

// Concrete evidence of non-vanishing: the nonzero division residual, plus a
// point of the target set where P is nonzero when one was found rationally.
struct Witness {
    SlicePoly residual;
    std::optional<Point> point;
    Quaternion value;

    Witness() : residual(SlicePoly(1)), value(0) {}
};

struct VanishResult {
    std::optional<VanishingCertificate> certificate;
    Witness witness;

    bool vanishes() const { return certificate.has_value(); }
};

namespace detail {

// Small fixed rotor set used only to hunt for a rational witness point.
inline const std::vector<Quaternion>& witness_rotors() {
    static const std::vector<Quaternion> rotors = {
        Quaternion(1),          {1, 1, 0, 0},  {1, 0, 1, 0},  {1, 0, 0, 1},
        {1, 1, 1, 0},           {2, 1, -1, 0}, {1, -1, 0, 2}, {3, 1, 1, 1},
        {0, 1, 1, 0},           {1, 2, 0, -1}, {2, 0, 1, 3},  {1, -2, 1, 1},
    };
    return rotors;
}

template <typename SampleFn>
void attach_point_witness(const SlicePoly& p, Witness& w, SampleFn&& sampler) {
    for (const auto& g : witness_rotors()) {
        Point cand = sampler(g);
        Quaternion v = eval(p, cand);
        if (!v.is_zero()) {
            w.point = cand;
            w.value = v;
            return;
        }
    }
}

}  // namespace detail

// P(a) = 0 iff P = sum_{k=1}^n (q_k - a_k) * P_k with P_k in H[q_1..q_k].
// Dividing by q_n - a_n, then the remainder by q_{n-1} - a_{n-1}, and so on,
// ends in a constant equal to P(a); the rightmost-variable position of each
// division makes every summand vanish at a.
inline VanishResult decompose_at_point(const SlicePoly& p, const Point& a) {
    unsigned n = p.nvars();
    if (a.size() != n) throw ArityMismatch("decompose_at_point arity");
    std::vector<std::pair<SlicePoly, unsigned>> divisors;
    for (unsigned m = n; m >= 1; --m)
        divisors.emplace_back(linear_poly(m, a[m - 1], n), m);
    ChainResult chain = reduce_chain(p, divisors);

    VanishResult out;
    if (chain.remainder.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(n);
        for (unsigned m = 1; m <= n; ++m) {
            cert.divisors.push_back({linear_poly(m, a[m - 1], n), m, DivisorKind::Linear});
            cert.cofactors.push_back(chain.cofactors[n - m]);
        }
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = chain.remainder;
        out.witness.point = a;
        out.witness.value = chain.remainder.constant_value();
    }
    return out;
}

// Vanishing on H^{m-1} x {a} x (C_a)^{n-m}: holds iff q_m - a divides P on
// the left, i.e. the q_m-division remainder is identically zero.
inline VanishResult factor_slab(const SlicePoly& p, const Quaternion& a, unsigned m) {
    auto [q, r] = div_monic(p, linear_poly(m, a, p.nvars()), m);
    VanishResult out;
    if (r.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(p.nvars());
        cert.divisors.push_back({linear_poly(m, a, p.nvars()), m, DivisorKind::Linear});
        cert.cofactors.push_back(q);
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = r;
        detail::attach_point_witness(p, out.witness, [&](const Quaternion& g) {
            // Points of the slab: arbitrary before q_m, a at q_m, C_a after.
            std::vector<Quaternion> c;
            Quaternion in_slice = a.is_real() ? g : Quaternion(g.re()) + g.x * a.im();
            for (unsigned i = 1; i <= p.nvars(); ++i) {
                if (i < m) c.push_back(g);
                else if (i == m) c.push_back(a);
                else c.push_back(in_slice);
            }
            return Point(std::move(c));
        });
    }
    return out;
}

// Vanishing on S_{a_1} x ... x S_{a_k} x H^{n-k} (all spheres nondegenerate):
// reduce by the real quadratics S_{a_l}(q_l); P vanishes iff the final
// remainder, of degree at most one in each of q_1..q_k, is identically zero.
inline VanishResult vanishes_on_sphere_product(const SlicePoly& p,
                                               const std::vector<SphereDescriptor>& spheres) {
    unsigned n = p.nvars();
    if (spheres.size() > n) throw ArityMismatch("more spheres than variables");
    std::vector<std::pair<SlicePoly, unsigned>> divisors;
    for (std::size_t l = 0; l < spheres.size(); ++l) {
        if (spheres[l].degenerate()) throw DegenerateSphere();
        divisors.emplace_back(sphere_poly(spheres[l], static_cast<unsigned>(l + 1), n),
                              static_cast<unsigned>(l + 1));
    }
    ChainResult chain = reduce_chain(p, divisors);
    VanishResult out;
    if (chain.remainder.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(n);
        for (std::size_t l = 0; l < divisors.size(); ++l) {
            cert.divisors.push_back(
                {divisors[l].first, static_cast<unsigned>(l + 1), DivisorKind::Spherical});
            cert.cofactors.push_back(chain.cofactors[l]);
        }
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = chain.remainder;
    }
    return out;
}

// Vanishing on S_{a_1} x ... x S_{a_k} x {a_{k+1}} x ... x {a_n}. Reducing by
// the descending tail divisors q_n - a_n, ..., q_{k+1} - a_{k+1} leaves
// exactly P(q_1,..,q_k, a_{k+1},..,a_n); the sphere chain then decides.
// The certificate is the sphere/linear summation shape, covering both the
// general and the commuting-tail form (the cofactor of q_l - a_l depends
// only on q_1..q_l).
inline VanishResult vanishes_on_sphere_point_set(const SlicePoly& p,
                                                 const std::vector<SphereDescriptor>& spheres,
                                                 const std::vector<Quaternion>& tail) {
    unsigned n = p.nvars();
    unsigned k = static_cast<unsigned>(spheres.size());
    if (k + tail.size() != n) throw ArityMismatch("spheres + tail must cover all variables");
    for (const auto& s : spheres)
        if (s.degenerate()) throw DegenerateSphere();

    std::vector<std::pair<SlicePoly, unsigned>> divisors;
    for (unsigned m = n; m > k; --m)
        divisors.emplace_back(linear_poly(m, tail[m - k - 1], n), m);
    for (unsigned l = 1; l <= k; ++l)
        divisors.emplace_back(sphere_poly(spheres[l - 1], l, n), l);
    ChainResult chain = reduce_chain(p, divisors);

    VanishResult out;
    if (chain.remainder.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(n);
        // Present spheres first, then the linear tail, as in the summation.
        for (unsigned l = 1; l <= k; ++l) {
            cert.divisors.push_back({divisors[n - k + l - 1].first, l, DivisorKind::Spherical});
            cert.cofactors.push_back(chain.cofactors[n - k + l - 1]);
        }
        for (unsigned m = k + 1; m <= n; ++m) {
            cert.divisors.push_back({divisors[n - m].first, m, DivisorKind::Linear});
            cert.cofactors.push_back(chain.cofactors[n - m]);
        }
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = chain.remainder;
    }
    return out;
}

// The pair polynomial Q_l(q_l, q_{l+1}) = q_l + q_{l+1} gamma + delta of an
// arranged pair: with Im(a_l) = t Im(a_{l+1}), gamma = -t and
// delta = -Re(a_l) + t Re(a_{l+1}). The scalar t is rational because the
// imaginary parts are parallel, and the two sign cases of the norm-quotient
// coefficients collapse into this single formula. Q_l has real coefficients
// and vanishes at (a_l, a_{l+1}).
inline SlicePoly q_ell_poly(const Quaternion& al, const Quaternion& al1, unsigned l,
                            unsigned nvars) {
    if (al.is_real() || al1.is_real()) throw RealComponent("q_ell_poly components must be non-real");
    if (!commutes(al, al1)) throw NotArrangedPair();
    if (l + 1 > nvars) throw BadIndex("q_ell_poly needs q_{l+1} in range");
    // Parallel imaginary parts: t from any nonzero component of Im(a_{l+1}).
    Rational t;
    if (al1.x != 0) t = al.x / al1.x;
    else if (al1.y != 0) t = al.y / al1.y;
    else t = al.z / al1.z;
    Rational gamma = -t;
    Rational delta = -al.re() + t * al1.re();
    SlicePoly q = SlicePoly::variable(nvars, l);
    q = q + SlicePoly::variable(nvars, l + 1).times_right(Quaternion(gamma));
    q = q + SlicePoly::constant(nvars, Quaternion(delta));
    return q;
}

// Vanishing on the arranged spherical set of a base with commuting non-real
// components: reduce by Q_1,...,Q_{n-1} (each monic in its leading variable),
// leaving a remainder in q_n alone, then decide by division by S_{a_n}(q_n).
inline VanishResult vanishes_on_arranged_sphere(const SlicePoly& p, const Point& base) {
    unsigned n = p.nvars();
    if (base.size() != n) throw ArityMismatch("arranged sphere arity");
    if (!base.has_commuting_components()) throw NotArranged();
    for (const auto& a : base.coords)
        if (a.is_real()) throw RealComponent("arranged sphere base must be non-real");

    std::vector<std::pair<SlicePoly, unsigned>> divisors;
    for (unsigned l = 1; l < n; ++l)
        divisors.emplace_back(q_ell_poly(base[l - 1], base[l], l, n), l);
    divisors.emplace_back(sphere_poly(sphere_of(base[n - 1]), n, n), n);
    ChainResult chain = reduce_chain(p, divisors);

    VanishResult out;
    if (chain.remainder.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(n);
        for (unsigned l = 1; l < n; ++l) {
            cert.divisors.push_back({divisors[l - 1].first, l, DivisorKind::Pair});
            cert.cofactors.push_back(chain.cofactors[l - 1]);
        }
        cert.divisors.push_back({divisors[n - 1].first, n, DivisorKind::Spherical});
        cert.cofactors.push_back(chain.cofactors[n - 1]);
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = chain.remainder;
        detail::attach_point_witness(p, out.witness, [&](const Quaternion& g) {
            return sample(SphericalSet(base), g);
        });
    }
    return out;
}

// Vanishing on a balloon: the descending tail reduction leaves the head
// polynomial, which is then decided exactly as for an arranged sphere over
// q_1..q_k. The certificate lists Q_1..Q_{k-1}, S_{a_k}, then the linear
// tail divisors.
inline VanishResult vanishes_on_balloon(const SlicePoly& p, const Balloon& b) {
    unsigned n = p.nvars();
    if (b.nvars() != n) throw ArityMismatch("balloon arity");
    unsigned k = static_cast<unsigned>(b.head.size());

    std::vector<std::pair<SlicePoly, unsigned>> divisors;
    for (unsigned m = n; m > k; --m)
        divisors.emplace_back(linear_poly(m, b.tail[m - k - 1], n), m);
    for (unsigned l = 1; l < k; ++l)
        divisors.emplace_back(q_ell_poly(b.head[l - 1], b.head[l], l, n), l);
    divisors.emplace_back(sphere_poly(sphere_of(b.head[k - 1]), k, n), k);
    ChainResult chain = reduce_chain(p, divisors);

    VanishResult out;
    if (chain.remainder.is_zero()) {
        VanishingCertificate cert;
        cert.residual = SlicePoly(n);
        std::size_t tail_count = n - k;
        for (unsigned l = 1; l < k; ++l) {
            cert.divisors.push_back({divisors[tail_count + l - 1].first, l, DivisorKind::Pair});
            cert.cofactors.push_back(chain.cofactors[tail_count + l - 1]);
        }
        cert.divisors.push_back({divisors[tail_count + k - 1].first, k, DivisorKind::Spherical});
        cert.cofactors.push_back(chain.cofactors[tail_count + k - 1]);
        for (unsigned m = k + 1; m <= n; ++m) {
            cert.divisors.push_back({divisors[n - m].first, m, DivisorKind::Linear});
            cert.cofactors.push_back(chain.cofactors[n - m]);
        }
        out.certificate = std::move(cert);
    } else {
        out.witness.residual = chain.remainder;
        detail::attach_point_witness(p, out.witness,
                                     [&](const Quaternion& g) { return sample(b, g); });
    }
    return out;
}

}  // namespace slicereg
