#pragma once

#include <utility>
#include <vector>

#include "slicereg/polynomial.hpp"

namespace slicereg {

struct DivResult {
    SlicePoly quotient;
    SlicePoly remainder;
};

// M is monic in q_m of degree d when M = q_m^d + (terms of lower q_m-degree):
// the full q_m-leading coefficient polynomial must be the constant 1.
inline bool is_monic_in(const SlicePoly& m, unsigned var, int& deg_out) {
    int d = m.deg_in(var);
    if (d < 1) return false;
    SlicePoly lead(m.nvars());
    for (const auto& [e, c] : m.terms()) {
        if (static_cast<int>(e[var - 1]) == d) {
            MultiIndex r = e;
            r[var - 1] = 0;
            lead.add_term(r, c);
        }
    }
    deg_out = d;
    return lead == SlicePoly::constant(m.nvars(), Quaternion(1));
}

// Euclidean division P = M*Q + R with deg_{q_m} R < deg_{q_m} M, for M monic
// in q_m. Long division from the top q_m-degree down; only the centrality of
// the leading coefficient 1 is used, so monic divisors suffice in this
// division ring.
inline DivResult div_monic(const SlicePoly& p, const SlicePoly& m, unsigned var) {
    if (var < 1 || var > p.nvars()) throw BadIndex("div_monic variable index");
    if (p.nvars() != m.nvars()) throw ArityMismatch("div_monic arities differ");
    int d;
    if (!is_monic_in(m, var, d)) throw NotMonic("divisor not monic in the chosen variable");

    SlicePoly q(p.nvars());
    SlicePoly r = p;
    int e = r.deg_in(var);
    while (e >= d) {
        // Collect every term at the current top q_m-degree; subtracting
        // M * t removes all of them and only introduces lower q_m-degrees.
        SlicePoly t(p.nvars());
        for (const auto& [idx, c] : r.terms()) {
            if (static_cast<int>(idx[var - 1]) == e) {
                MultiIndex shifted = idx;
                shifted[var - 1] = static_cast<unsigned>(e - d);
                t.add_term(shifted, c);
            }
        }
        q = q + t;
        r = r - star_mul(m, t);
        e = r.deg_in(var);
    }
    return {q, r};
}

// Remainder of (remainder of P by M in q_m) by L in q_l. With L free of q_m
// the second division cannot raise the q_m-degree, so the result is reduced
// in both variables at once.
inline SlicePoly double_remainder(const SlicePoly& p, const SlicePoly& m, const SlicePoly& l,
                                  unsigned var_m, unsigned var_l) {
    if (var_m == var_l) throw IndexClash("double_remainder variables coincide");
    SlicePoly r1 = div_monic(p, m, var_m).remainder;
    return div_monic(r1, l, var_l).remainder;
}

struct ChainResult {
    std::vector<SlicePoly> cofactors;  // one per divisor, in order
    SlicePoly remainder;
};

// Iterated division P = sum_i M_i * C_i + R with R reduced below each
// divisor's degree in its variable. Each divisor must have degree 0 in the
// variables already divided; a violated order is an error, never a silent
// reordering, because the certificates depend on the chosen order.
inline ChainResult reduce_chain(const SlicePoly& p,
                                const std::vector<std::pair<SlicePoly, unsigned>>& divisors) {
    ChainResult out{{}, p};
    std::vector<unsigned> done;
    for (const auto& [m, var] : divisors) {
        for (unsigned earlier : done)
            if (m.deg_in(earlier) > 0)
                throw ChainOrderViolation("divisor involves an already-divided variable");
        auto [q, r] = div_monic(out.remainder, m, var);
        out.cofactors.push_back(q);
        out.remainder = r;
        done.push_back(var);
    }
    return out;
}

}  // namespace slicereg
