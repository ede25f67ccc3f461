#pragma once

#include <array>
#include <optional>

#include "slicereg/gen.hpp"
#include "slicereg/polynomial.hpp"

// Independent oracles the unit tests pit the library against. Nothing here
// reuses the formulas under test.

namespace testutil {

using namespace slicereg;

// Basis-table quaternion product: expand (sum w_a e_a)(sum w_b e_b) over the
// 16 basis products listed explicitly, instead of the closed Hamilton form.
inline Quaternion table_mul(const Quaternion& a, const Quaternion& b) {
    // table[r][c] = (component index, sign) of e_r e_c with e = (1, i, j, k).
    static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::array<Rational, 4> av = {a.w, a.x, a.y, a.z}, bv = {b.w, b.x, b.y, b.z};
    std::array<Rational, 4> out = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[idx[r][c]] += sgn[r][c] * av[r] * bv[c];
    return {out[0], out[1], out[2], out[3]};
}

// Term-by-term *-product over flat term lists, written against the defining
// rule (q^A a)(q^B b) = q^{A+B} ab directly.
inline SlicePoly naive_star(const SlicePoly& p, const SlicePoly& q) {
    SlicePoly out(p.nvars());
    for (const auto& [ea, ca] : p.terms())
        for (const auto& [eb, cb] : q.terms()) {
            MultiIndex e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, table_mul(ca, cb));
        }
    return out;
}

// Randomized rotor search: a rational rotor conjugating base onto p, if one
// turns up. A hit certifies orbit membership independently of the invariant
// criterion; a miss proves nothing.
inline std::optional<Quaternion> find_rotor(const Point& base, const Point& p, gen::Rng& rng,
                                            int attempts = 400) {
    for (int t = 0; t < attempts; ++t) {
        Quaternion g = rng.rotor();
        bool ok = true;
        for (std::size_t i = 0; i < base.size() && ok; ++i)
            ok = conjugate_by(base[i], g) == p[i];
        if (ok) return g;
    }
    return std::nullopt;
}

}  // namespace testutil
