#pragma once

#include <map>
#include <vector>

#include "slicereg/polynomial.hpp"

namespace slicereg {

// Element x + yK of a slice C_K, K left implicit.
struct SliceComplex {
    Rational re, im;

    bool operator==(const SliceComplex&) const = default;
    SliceComplex conj() const { return {re, -im}; }
    SliceComplex operator+(const SliceComplex& o) const { return {re + o.re, im + o.im}; }
    SliceComplex operator*(const SliceComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

// Polynomial with coefficients in C_K, produced by splitting.
class ComplexPoly {
public:
    explicit ComplexPoly(unsigned nvars) : nvars_(nvars) {}

    unsigned nvars() const { return nvars_; }
    const std::map<MultiIndex, SliceComplex, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& e, const SliceComplex& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    unsigned nvars_;
    std::map<MultiIndex, SliceComplex, GrlexLess> terms_;
};

inline SliceComplex eval(const ComplexPoly& p, const std::vector<SliceComplex>& z) {
    if (z.size() != p.nvars()) throw ArityMismatch("complex eval arity");
    SliceComplex sum{0, 0};
    for (const auto& [e, c] : p.terms()) {
        SliceComplex prod{1, 0};
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned t = 0; t < e[i]; ++t) prod = prod * z[i];
        sum = sum + prod * c;
    }
    return sum;
}

inline bool is_imaginary_unit(const Quaternion& q) { return q.w == 0 && q.norm_sq() == 1; }

// Orthonormal pair of rational imaginary units; {1, K, L, KL} is then an
// orthonormal real basis of H.
struct SliceFrame {
    Quaternion k_unit;
    Quaternion l_unit;

    SliceFrame(Quaternion k, Quaternion l) : k_unit(std::move(k)), l_unit(std::move(l)) {
        if (!is_imaginary_unit(k_unit) || !is_imaginary_unit(l_unit) ||
            im_dot(k_unit, l_unit) != 0)
            throw InvalidFrame();
    }
};

inline Quaternion to_quaternion(const SliceComplex& z, const Quaternion& k_unit) {
    return Quaternion(z.re) + z.im * k_unit;
}

// z in C_K with the C_K-coordinates recovered; NotOnSlice otherwise.
inline SliceComplex slice_coords(const Quaternion& q, const Quaternion& k_unit) {
    if (!commutes(q, k_unit)) throw NotOnSlice();
    return {q.re(), im_dot(q, k_unit)};
}

struct SplitPair {
    ComplexPoly f, g;
};

// Splitting P = F + G L on C_K: each coefficient a = alpha + beta L with
// alpha, beta in C_K, read off against the orthonormal basis {1, K, L, KL}.
inline SplitPair split(const SlicePoly& p, const SliceFrame& frame) {
    const Quaternion& K = frame.k_unit;
    const Quaternion& L = frame.l_unit;
    Quaternion KL = K * L;
    SplitPair out{ComplexPoly(p.nvars()), ComplexPoly(p.nvars())};
    auto comp = [](const Quaternion& a, const Quaternion& b) {
        // <a,b> = Re(a * conj(b)) for unit b.
        return (a * b.conj()).re();
    };
    for (const auto& [e, a] : p.terms()) {
        out.f.add_term(e, {comp(a, Quaternion(1)), comp(a, K)});
        out.g.add_term(e, {comp(a, L), comp(a, KL)});
    }
    return out;
}

// Inverse of split: re-expand F + G L into a slice regular polynomial.
inline SlicePoly unsplit(const SplitPair& s, const SliceFrame& frame) {
    SlicePoly p(s.f.nvars());
    for (const auto& [e, c] : s.f.terms())
        p.add_term(e, to_quaternion(c, frame.k_unit));
    for (const auto& [e, c] : s.g.terms())
        p.add_term(e, to_quaternion(c, frame.k_unit) * frame.l_unit);
    return p;
}

// Representation Formula on the spherical cylinder: the value of P at the
// J-shadows w_l = x_l + y_l J is recovered from the values at z and z-bar,
//   P(w) = (1 - JK)/2 P(z) + (1 + JK)/2 P(z-bar),
// for z_l = x_l + y_l K with y_l >= 0.
inline Quaternion represent(const SlicePoly& p, const Quaternion& j_unit,
                            const Quaternion& k_unit, const Point& z) {
    if (!is_imaginary_unit(j_unit) || !is_imaginary_unit(k_unit)) throw InvalidFrame();
    if (z.size() != p.nvars()) throw ArityMismatch("represent point arity");
    std::vector<Quaternion> zbar;
    zbar.reserve(z.size());
    for (const auto& q : z.coords) {
        SliceComplex c = slice_coords(q, k_unit);
        if (c.im < 0) throw NegativeShadow();
        zbar.push_back(to_quaternion(c.conj(), k_unit));
    }
    Quaternion jk = j_unit * k_unit;
    Rational half(1, 2);
    Quaternion plus = (Quaternion(1) - jk) * half;
    Quaternion minus = (Quaternion(1) + jk) * half;
    return plus * eval(p, z) + minus * eval(p, Point(std::move(zbar)));
}

// The J-shadows themselves, for checking represent against direct evaluation.
inline Point shadows(const Point& z, const Quaternion& j_unit, const Quaternion& k_unit) {
    std::vector<Quaternion> w;
    w.reserve(z.size());
    for (const auto& q : z.coords) {
        SliceComplex c = slice_coords(q, k_unit);
        w.push_back(to_quaternion(c, j_unit));
    }
    return Point(std::move(w));
}

// Simultaneous-conjugation orbit of a base point.
struct SphericalSet {
    Point base;

    explicit SphericalSet(Point b) : base(std::move(b)) {}
};

// Spherical set with pairwise commuting base components.
struct ArrangedBase {
    Point components;

    explicit ArrangedBase(Point c) : components(std::move(c)) {
        if (!components.has_commuting_components()) throw NotArranged();
    }
};

// Arranged spherical set in the first k coordinates times a fixed pairwise
// commuting tail point. Head components must be non-real (a real head
// component would pinch the orbit).
struct Balloon {
    std::vector<Quaternion> head;
    std::vector<Quaternion> tail;

    Balloon(std::vector<Quaternion> h, std::vector<Quaternion> t)
        : head(std::move(h)), tail(std::move(t)) {
        if (head.empty()) throw InvalidBalloon("empty head");
        for (const auto& a : head)
            if (a.is_real()) throw InvalidBalloon("real head component");
        if (!Point(head).has_commuting_components())
            throw InvalidBalloon("head components do not commute");
        if (!Point(tail).has_commuting_components())
            throw InvalidBalloon("tail components do not commute");
    }

    unsigned nvars() const { return static_cast<unsigned>(head.size() + tail.size()); }

    Point base_point() const {
        std::vector<Quaternion> c = head;
        c.insert(c.end(), tail.begin(), tail.end());
        return Point(std::move(c));
    }
};

inline Point sample(const SphericalSet& s, const Quaternion& g) {
    if (g.is_zero()) throw ZeroRotor();
    std::vector<Quaternion> c;
    c.reserve(s.base.size());
    for (const auto& a : s.base.coords) c.push_back(conjugate_by(a, g));
    return Point(std::move(c));
}

inline Point sample(const ArrangedBase& s, const Quaternion& g) {
    return sample(SphericalSet(s.components), g);
}

// Rotation applies to the head only; the tail is fixed.
inline Point sample(const Balloon& b, const Quaternion& g) {
    if (g.is_zero()) throw ZeroRotor();
    std::vector<Quaternion> c;
    c.reserve(b.nvars());
    for (const auto& a : b.head) c.push_back(conjugate_by(a, g));
    c.insert(c.end(), b.tail.begin(), b.tail.end());
    return Point(std::move(c));
}

// Orbit membership, decided through rotation invariants: conjugation acts on
// imaginary parts as a rotation of R^3, so real parts, pairwise scalar
// products and scalar triple products of the imaginary parts classify the
// orbit exactly. No rotor is solved for; the decision is rational.
inline bool orbit_membership(const Point& base, const Point& p) {
    if (base.size() != p.size()) throw ArityMismatch("orbit membership arity");
    std::size_t n = base.size();
    for (std::size_t i = 0; i < n; ++i)
        if (p[i].re() != base[i].re()) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (im_dot(p[i], p[j]) != im_dot(base[i], base[j])) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (im_triple(p[i], p[j], p[k]) != im_triple(base[i], base[j], base[k]))
                    return false;
    return true;
}

inline bool membership(const SphericalSet& s, const Point& p) {
    return orbit_membership(s.base, p);
}

inline bool membership(const ArrangedBase& s, const Point& p) {
    return orbit_membership(s.components, p);
}

inline bool membership(const Balloon& b, const Point& p) {
    if (p.size() != b.nvars()) throw ArityMismatch("balloon membership arity");
    for (std::size_t i = 0; i < b.tail.size(); ++i)
        if (!(p[b.head.size() + i] == b.tail[i])) return false;
    std::vector<Quaternion> head_part(p.coords.begin(), p.coords.begin() + b.head.size());
    return orbit_membership(Point(b.head), Point(std::move(head_part)));
}

}  // namespace slicereg
