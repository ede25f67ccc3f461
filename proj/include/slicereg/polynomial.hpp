#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "slicereg/errors.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

// Exponent tuple (l1,...,ln) of a monomial q1^l1 ... qn^ln.
using MultiIndex = std::vector<unsigned>;

// Graded lexicographic order; fixes printing and iteration, never semantics.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

struct Point {
    std::vector<Quaternion> coords;

    Point() = default;
    explicit Point(std::vector<Quaternion> c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    const Quaternion& operator[](std::size_t i) const { return coords[i]; }
    bool operator==(const Point&) const = default;

    bool has_commuting_components() const {
        for (std::size_t i = 0; i < coords.size(); ++i)
            for (std::size_t j = i + 1; j < coords.size(); ++j)
                if (!commutes(coords[i], coords[j])) return false;
        return true;
    }
};

// Sparse slice regular polynomial: monomials q1^l1 ... qn^ln with the
// quaternion coefficient on the right. Zero coefficients are never stored,
// so structural equality is polynomial equality.
class SlicePoly {
public:
    using TermMap = std::map<MultiIndex, Quaternion, GrlexLess>;

    explicit SlicePoly(unsigned nvars) : nvars_(nvars) {}

    static SlicePoly constant(unsigned nvars, const Quaternion& c) {
        SlicePoly p(nvars);
        p.add_term(MultiIndex(nvars, 0), c);
        return p;
    }

    // The monomial q_m (1-based variable index).
    static SlicePoly variable(unsigned nvars, unsigned m) {
        if (m < 1 || m > nvars) throw BadIndex("variable index out of range");
        SlicePoly p(nvars);
        MultiIndex e(nvars, 0);
        e[m - 1] = 1;
        p.add_term(e, Quaternion(1));
        return p;
    }

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SlicePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    bool is_real() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_real()) return false;
        return true;
    }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == MultiIndex(nvars_, 0));
    }

    Quaternion constant_value() const {
        if (terms_.empty()) return Quaternion(0);
        return terms_.begin()->second;
    }

    // deg in q_m (1-based); -1 encodes the zero polynomial's minus infinity.
    int deg_in(unsigned m) const {
        if (m < 1 || m > nvars_) throw BadIndex("deg_in index out of range");
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[m - 1]));
        return d;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
        return d;
    }

    void add_term(const MultiIndex& e, const Quaternion& c) {
        if (e.size() != nvars_) throw ArityMismatch("exponent tuple length");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SlicePoly operator+(const SlicePoly& o) const {
        check_arity(o);
        SlicePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    SlicePoly operator-() const {
        SlicePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    SlicePoly operator-(const SlicePoly& o) const { return *this + (-o); }

    // Right scalar multiple P*c (coefficients collect on the right).
    SlicePoly times_right(const Quaternion& c) const {
        SlicePoly r(nvars_);
        for (const auto& [e, a] : terms_) r.add_term(e, a * c);
        return r;
    }

private:
    void check_arity(const SlicePoly& o) const {
        if (nvars_ != o.nvars_) throw ArityMismatch("polynomial arities differ");
    }

    unsigned nvars_;
    TermMap terms_;
};

// The *-product: variables commute with variables, coefficients multiply in
// order on the right: (q^A a) * (q^B b) = q^{A+B} ab.
inline SlicePoly star_mul(const SlicePoly& p, const SlicePoly& q) {
    if (p.nvars() != q.nvars()) throw ArityMismatch("star_mul arities differ");
    SlicePoly r(p.nvars());
    for (const auto& [ea, a] : p.terms()) {
        for (const auto& [eb, b] : q.terms()) {
            MultiIndex e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, a * b);
        }
    }
    return r;
}

inline SlicePoly star_pow(const SlicePoly& p, unsigned e) {
    SlicePoly acc = SlicePoly::constant(p.nvars(), Quaternion(1));
    for (unsigned t = 0; t < e; ++t) acc = star_mul(acc, p);
    return acc;
}

// Pointwise evaluation: ordered product a1^l1 a2^l2 ... an^ln c per term.
inline Quaternion eval(const SlicePoly& p, const Point& a) {
    if (p.nvars() != a.size()) throw ArityMismatch("eval point arity");
    Quaternion sum(0);
    for (const auto& [e, c] : p.terms()) {
        Quaternion prod(1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) prod = prod * a[i].pow(e[i]);
        sum = sum + prod * c;
    }
    return sum;
}

// Evaluation of P*Q at a point with commuting components without forming the
// product: P(a) . Q(P(a)^{-1} a P(a)) when P(a) != 0, else 0.
inline Quaternion eval_star_product(const SlicePoly& p, const SlicePoly& q, const Point& a) {
    if (p.nvars() != q.nvars() || p.nvars() != a.size())
        throw ArityMismatch("eval_star_product arity");
    if (!a.has_commuting_components()) throw NonCommutingPoint();
    Quaternion pa = eval(p, a);
    if (pa.is_zero()) return Quaternion(0);
    std::vector<Quaternion> rotated;
    rotated.reserve(a.size());
    for (const auto& c : a.coords) rotated.push_back(conjugate_by(c, pa));
    return pa * eval(q, Point(std::move(rotated)));
}

// P(q_1,...,q_k, a_{k+1},...,a_n) as a polynomial in the same ambient ring
// but free of the trailing variables. Valid exactly because the substituted
// variables are rightmost in the ordered product: eval(result, h ++ anything)
// = eval(P, h ++ tail) for every head h.
inline SlicePoly substitute_tail(const SlicePoly& p, unsigned k,
                                 const std::vector<Quaternion>& tail) {
    if (k > p.nvars() || tail.size() != p.nvars() - k)
        throw ArityMismatch("substitute_tail length");
    SlicePoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Quaternion prod(1);
        for (std::size_t i = k; i < p.nvars(); ++i)
            if (e[i] > 0) prod = prod * tail[i - k].pow(e[i]);
        MultiIndex head = e;
        for (std::size_t i = k; i < p.nvars(); ++i) head[i] = 0;
        r.add_term(head, prod * c);
    }
    return r;
}

// The symmetrized quadratic q_m^2 - 2 Re(a) q_m + |a|^2 of a sphere,
// embedded in an nvars-variable ring. Real coefficients; vanishes on S_a.
inline SlicePoly sphere_poly(const SphereDescriptor& s, unsigned m, unsigned nvars) {
    SlicePoly qm = SlicePoly::variable(nvars, m);
    SlicePoly p = star_mul(qm, qm);
    p = p + qm.times_right(Quaternion(-2 * s.re));
    p = p + SlicePoly::constant(nvars, Quaternion(s.norm_sq));
    return p;
}

// q_m - a, embedded in an nvars-variable ring.
inline SlicePoly linear_poly(unsigned m, const Quaternion& a, unsigned nvars) {
    return SlicePoly::variable(nvars, m) - SlicePoly::constant(nvars, a);
}

}  // namespace slicereg
