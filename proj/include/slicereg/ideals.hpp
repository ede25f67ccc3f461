#pragma once

#include <utility>
#include <vector>

#include "slicereg/vanishing.hpp"

namespace slicereg {

// Finitely generated right ideal { sum G_i * Q_i }.
struct RightIdeal {
    unsigned nvars;
    std::vector<SlicePoly> generators;

    RightIdeal(unsigned n, std::vector<SlicePoly> gens)
        : nvars(n), generators(std::move(gens)) {
        if (generators.empty()) throw Error("right ideal needs at least one generator");
        for (const auto& g : generators)
            if (g.nvars() != nvars) throw ArityMismatch("generator arity");
    }
};

// Every generator vanishes at p. This is necessary for p in V(I); for the
// structured points the enlargement machinery feeds in, it is also
// sufficient, and nothing here relies on more.
inline bool v_contains(const RightIdeal& ideal, const Point& p) {
    if (p.size() != ideal.nvars) throw ArityMismatch("v_contains arity");
    for (const auto& g : ideal.generators)
        if (!eval(g, p).is_zero()) return false;
    return true;
}

// Minimal t with a_r a_s = a_s a_r for all r,s in {t+1,...,n}; 0 iff all
// components pairwise commute.
inline unsigned commuting_tail_index(const Point& p) {
    std::size_t n = p.size();
    std::size_t start = n;  // start of the maximal pairwise-commuting suffix
    while (start > 0) {
        bool ok = true;
        for (std::size_t j = start; j < n; ++j)
            if (!commutes(p[start - 1], p[j])) {
                ok = false;
                break;
            }
        if (!ok) break;
        --start;
    }
    return static_cast<unsigned>(start);
}

struct EnlargementReport {
    Point point;
    unsigned t = 0;
    std::vector<Balloon> candidates;  // the 2^{p-1} enumerated arranged-sphere heads
    std::vector<Balloon> verified;    // candidates certified against every generator
    std::vector<Quaternion> rotors;   // aligner rotors used along the way
    bool irrational_norm_skipped = false;
};

namespace detail {

inline const Quaternion* first_non_real(const std::vector<Quaternion>& v) {
    for (const auto& q : v)
        if (!q.is_real()) return &q;
    return nullptr;
}

}  // namespace detail

// Zero-set enlargement at a common zero p: split off the maximal commuting
// tail, partition the head into maximal pairwise-commuting blocks, and walk
// the junctions. At each junction the current head is rotated onto the next
// block's slice; the two antipodal aligner rotors give two branches, for
// 2^{p-1} candidate arranged heads in total. Existence of a verifying balloon
// is what the propagation lemmas promise; each candidate is nevertheless
// certified exactly against every generator, and only certified balloons are
// reported.
inline EnlargementReport enlarge_zero(const RightIdeal& ideal, const Point& p) {
    if (!v_contains(ideal, p)) throw NotACommonZero();
    EnlargementReport report;
    report.point = p;
    report.t = commuting_tail_index(p);
    if (report.t == 0) return report;  // nothing to enlarge: the point itself

    std::vector<Quaternion> head(p.coords.begin(), p.coords.begin() + report.t);
    std::vector<Quaternion> tail(p.coords.begin() + report.t, p.coords.end());

    // Maximal pairwise-commuting runs of the head, left to right.
    std::vector<std::vector<Quaternion>> blocks;
    for (const auto& a : head) {
        bool fits = !blocks.empty();
        if (fits)
            for (const auto& b : blocks.back())
                if (!commutes(a, b)) {
                    fits = false;
                    break;
                }
        if (fits) blocks.back().push_back(a);
        else blocks.push_back({a});
    }

    std::vector<std::vector<Quaternion>> heads = {blocks[0]};
    for (std::size_t bi = 1; bi < blocks.size(); ++bi) {
        const auto& block = blocks[bi];
        const Quaternion* c = detail::first_non_real(block);
        std::vector<std::vector<Quaternion>> next;
        for (const auto& h : heads) {
            const Quaternion* b = detail::first_non_real(h);
            if (!b || !c) {  // all-real sides commute; no rotation needed
                auto merged = h;
                merged.insert(merged.end(), block.begin(), block.end());
                next.push_back(std::move(merged));
                continue;
            }
            for (const Quaternion& target : {*c, c->conj()}) {
                Quaternion g;
                try {
                    g = aligner(*b, target);
                } catch (const IrrationalNorm&) {
                    report.irrational_norm_skipped = true;
                    continue;
                } catch (const AntipodalDirections&) {
                    continue;  // already aligned branch handled by the twin
                }
                std::vector<Quaternion> rotated;
                rotated.reserve(h.size() + block.size());
                for (const auto& a : h) rotated.push_back(conjugate_by(a, g));
                rotated.insert(rotated.end(), block.begin(), block.end());
                report.rotors.push_back(g);
                next.push_back(std::move(rotated));
            }
        }
        heads = std::move(next);
    }

    for (const auto& h : heads) {
        try {
            Balloon b(h, tail);
            report.candidates.push_back(b);
            bool ok = true;
            for (const auto& g : ideal.generators)
                if (!vanishes_on_balloon(g, b).vanishes()) {
                    ok = false;
                    break;
                }
            if (ok) report.verified.push_back(std::move(b));
        } catch (const InvalidBalloon&) {
            // pinched candidate (real head component); not representable
        }
    }
    return report;
}

// Finite union/intersection tree over V(generator-list) leaves.
struct SliceAlgebraicSet {
    enum class Kind { Leaf, Union, Intersection };

    Kind kind = Kind::Leaf;
    unsigned nvars = 0;
    std::vector<SlicePoly> generators;        // leaf only
    std::vector<SliceAlgebraicSet> children;  // union/intersection only

    static SliceAlgebraicSet leaf(unsigned nvars, std::vector<SlicePoly> gens) {
        for (const auto& g : gens)
            if (g.nvars() != nvars) throw ArityMismatch("leaf generator arity");
        SliceAlgebraicSet s;
        s.kind = Kind::Leaf;
        s.nvars = nvars;
        s.generators = std::move(gens);
        return s;
    }

    bool contains(const Point& p) const {
        switch (kind) {
            case Kind::Leaf:
                for (const auto& g : generators)
                    if (!eval(g, p).is_zero()) return false;
                return true;
            case Kind::Union:
                for (const auto& c : children)
                    if (c.contains(p)) return true;
                return false;
            case Kind::Intersection:
                for (const auto& c : children)
                    if (!c.contains(p)) return false;
                return true;
        }
        return false;
    }
};

inline SliceAlgebraicSet set_union(SliceAlgebraicSet a, SliceAlgebraicSet b) {
    if (a.nvars != b.nvars) throw ArityMismatch("union arity");
    SliceAlgebraicSet s;
    s.kind = SliceAlgebraicSet::Kind::Union;
    s.nvars = a.nvars;
    s.children = {std::move(a), std::move(b)};
    return s;
}

inline SliceAlgebraicSet set_intersection(std::vector<SliceAlgebraicSet> parts) {
    if (parts.empty()) throw Error("intersection of an empty list");
    if (parts.size() == 1) return parts.front();
    for (const auto& q : parts)
        if (q.nvars != parts.front().nvars) throw ArityMismatch("intersection arity");
    SliceAlgebraicSet s;
    s.kind = SliceAlgebraicSet::Kind::Intersection;
    s.nvars = parts.front().nvars;
    s.children = std::move(parts);
    return s;
}

// The slice of the descriptor on C_K: every leaf becomes the complex system
// {F_l = 0, G_l = 0} obtained by splitting its generators.
struct SlicedSet {
    SliceAlgebraicSet::Kind kind = SliceAlgebraicSet::Kind::Leaf;
    std::vector<SplitPair> systems;  // leaf only
    std::vector<SlicedSet> children;

    bool satisfied(const std::vector<SliceComplex>& z) const {
        switch (kind) {
            case SliceAlgebraicSet::Kind::Leaf:
                for (const auto& s : systems)
                    if (!eval(s.f, z).is_zero() || !eval(s.g, z).is_zero()) return false;
                return true;
            case SliceAlgebraicSet::Kind::Union:
                for (const auto& c : children)
                    if (c.satisfied(z)) return true;
                return false;
            case SliceAlgebraicSet::Kind::Intersection:
                for (const auto& c : children)
                    if (!c.satisfied(z)) return false;
                return true;
        }
        return false;
    }
};

inline SlicedSet slice(const SliceAlgebraicSet& s, const SliceFrame& frame) {
    SlicedSet out;
    out.kind = s.kind;
    if (s.kind == SliceAlgebraicSet::Kind::Leaf) {
        for (const auto& g : s.generators) out.systems.push_back(split(g, frame));
    } else {
        for (const auto& c : s.children) out.children.push_back(slice(c, frame));
    }
    return out;
}

}  // namespace slicereg
