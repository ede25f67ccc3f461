#pragma once

#include <json.hpp>

#include "slicereg/ideals.hpp"
#include "slicereg/parser.hpp"

namespace slicereg {

using nlohmann::json;

// Quaternion <-> [w, x, y, z] as canonical rational strings.
inline json to_json(const Quaternion& q) {
    return json::array({to_string(q.w), to_string(q.x), to_string(q.y), to_string(q.z)});
}

inline Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("quaternion JSON must be a 4-array");
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
            parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>())};
}

inline json to_json(const Point& p) {
    json arr = json::array();
    for (const auto& q : p.coords) arr.push_back(to_json(q));
    return arr;
}

inline Point point_from_json(const json& j) {
    std::vector<Quaternion> coords;
    for (const auto& e : j) coords.push_back(quaternion_from_json(e));
    return Point(std::move(coords));
}

// {"nvars": n, "terms": [{"exp": [...], "coeff": [...]}, ...]}; terms sorted
// in graded lex order by construction, so the canonical form round-trips
// bit-exactly.
inline json to_json(const SlicePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline SlicePoly poly_from_json(const json& j) {
    SlicePoly p(j.at("nvars").get<unsigned>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exp").get<MultiIndex>(), quaternion_from_json(t.at("coeff")));
    return p;
}

inline json to_json(const SphereDescriptor& s) {
    return {{"re", to_string(s.re)}, {"normSq", to_string(s.norm_sq)}};
}

inline SphereDescriptor sphere_from_json(const json& j) {
    return {parse_rational(j.at("re").get<std::string>()),
            parse_rational(j.at("normSq").get<std::string>())};
}

inline json to_json(const SphericalSet& s) { return {{"base", to_json(s.base)}}; }

inline SphericalSet spherical_set_from_json(const json& j) {
    return SphericalSet(point_from_json(j.at("base")));
}

inline json to_json(const Balloon& b) {
    return {{"head", to_json(Point(b.head))}, {"tail", to_json(Point(b.tail))}};
}

inline Balloon balloon_from_json(const json& j) {
    return Balloon(point_from_json(j.at("head")).coords, point_from_json(j.at("tail")).coords);
}

inline json to_json(const RightIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators) gens.push_back(to_json(g));
    return {{"nvars", ideal.nvars}, {"generators", gens}};
}

inline RightIdeal ideal_from_json(const json& j) {
    std::vector<SlicePoly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(poly_from_json(g));
    return RightIdeal(j.at("nvars").get<unsigned>(), std::move(gens));
}

inline const char* kind_name(DivisorKind k) {
    switch (k) {
        case DivisorKind::Linear: return "linear";
        case DivisorKind::Spherical: return "spherical";
        case DivisorKind::Pair: return "pair";
    }
    return "?";
}

// Certificates mirror the summation shape: ordered divisor/cofactor pairs
// plus the residual.
inline json to_json(const VanishingCertificate& c) {
    json divisors = json::array();
    for (std::size_t i = 0; i < c.divisors.size(); ++i)
        divisors.push_back({{"var", c.divisors[i].var},
                            {"kind", kind_name(c.divisors[i].kind)},
                            {"poly", to_json(c.divisors[i].poly)},
                            {"cofactor", to_json(c.cofactors[i])}});
    return {{"divisors", divisors}, {"residual", to_json(c.residual)}};
}

inline json to_json(const Witness& w) {
    json j = {{"residual", to_json(w.residual)}};
    if (w.point) {
        j["point"] = to_json(*w.point);
        j["value"] = to_json(w.value);
    }
    return j;
}

inline json to_json(const VanishResult& r) {
    if (r.vanishes()) return {{"vanishes", true}, {"certificate", to_json(*r.certificate)}};
    return {{"vanishes", false}, {"witness", to_json(r.witness)}};
}

inline json to_json(const SliceComplex& z) {
    return json::array({to_string(z.re), to_string(z.im)});
}

inline json to_json(const ComplexPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

// Frame {"k": [...], "l": [...]} of two orthogonal rational imaginary units.
inline SliceFrame frame_from_json(const json& j) {
    return SliceFrame(quaternion_from_json(j.at("k")), quaternion_from_json(j.at("l")));
}

// Descriptor tree: {"kind": "leaf", "nvars": n, "generators": [...]} or
// {"kind": "union"|"intersection", "children": [...]}.
inline SliceAlgebraicSet set_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        std::vector<SlicePoly> gens;
        for (const auto& g : j.at("generators")) gens.push_back(poly_from_json(g));
        return SliceAlgebraicSet::leaf(j.at("nvars").get<unsigned>(), std::move(gens));
    }
    std::vector<SliceAlgebraicSet> children;
    for (const auto& c : j.at("children")) children.push_back(set_from_json(c));
    if (kind == "union") {
        if (children.size() != 2) throw Error("union takes exactly two children");
        return set_union(std::move(children[0]), std::move(children[1]));
    }
    if (kind == "intersection") return set_intersection(std::move(children));
    throw Error("unknown set kind: " + kind);
}

inline json to_json(const SlicedSet& s) {
    if (s.kind == SliceAlgebraicSet::Kind::Leaf) {
        json systems = json::array();
        for (const auto& sys : s.systems)
            systems.push_back({{"f", to_json(sys.f)}, {"g", to_json(sys.g)}});
        return {{"kind", "leaf"}, {"systems", systems}};
    }
    json children = json::array();
    for (const auto& c : s.children) children.push_back(to_json(c));
    return {{"kind", s.kind == SliceAlgebraicSet::Kind::Union ? "union" : "intersection"},
            {"children", children}};
}

inline json to_json(const EnlargementReport& r) {
    json candidates = json::array(), verified = json::array(), rotors = json::array();
    for (const auto& b : r.candidates) candidates.push_back(to_json(b));
    for (const auto& b : r.verified) verified.push_back(to_json(b));
    for (const auto& g : r.rotors) rotors.push_back(to_json(g));
    return {{"point", to_json(r.point)},
            {"t", r.t},
            {"candidates", candidates},
            {"verified", verified},
            {"rotors", rotors},
            {"irrationalNormSkipped", r.irrational_norm_skipped}};
}

}  // namespace slicereg
