#pragma once

#include <array>
#include <compare>
#include <string>

#include "slicereg/errors.hpp"
#include "slicereg/rational.hpp"

namespace slicereg {

// A quaternion w + xi + yj + zk with exact rational components.
struct Quaternion {
    Rational w, x, y, z;

    Quaternion() = default;
    Quaternion(Rational w_, Rational x_, Rational y_, Rational z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    Quaternion(const Rational& real) : w(real) {}  // NOLINT: reals embed
    Quaternion(int real) : w(real) {}              // NOLINT

    bool operator==(const Quaternion&) const = default;

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }

    Rational re() const { return w; }
    Quaternion im() const { return {0, x, y, z}; }
    Quaternion conj() const { return {w, -x, -y, -z}; }
    Rational norm_sq() const { return w * w + x * x + y * y + z * z; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }

    // Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quaternion operator*(const Rational& s) const { return {w * s, x * s, y * s, z * s}; }
    Quaternion operator*(int s) const { return *this * Rational(s); }

    Quaternion inverse() const {
        if (is_zero()) throw Error("inverse of zero quaternion");
        Rational n = norm_sq();
        return {w / n, -x / n, -y / n, -z / n};
    }

    Quaternion pow(unsigned e) const {
        Quaternion acc{1, 0, 0, 0};
        for (unsigned t = 0; t < e; ++t) acc = acc * *this;
        return acc;
    }
};

inline Quaternion operator*(const Rational& s, const Quaternion& q) { return q * s; }

// Total order for use as a map key; not algebraically meaningful.
inline bool operator<(const Quaternion& a, const Quaternion& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

// The conjugation orbit S_a of a quaternion, stored through the two
// rotation invariants: Re(a) and |a|^2. Equal descriptors = equal spheres.
struct SphereDescriptor {
    Rational re;
    Rational norm_sq;

    bool operator==(const SphereDescriptor&) const = default;

    // Point sphere iff |Im a| = 0, i.e. |a|^2 = Re(a)^2.
    bool degenerate() const { return norm_sq == re * re; }
};

inline SphereDescriptor sphere_of(const Quaternion& a) { return {a.re(), a.norm_sq()}; }

inline bool on_sphere(const Quaternion& q, const SphereDescriptor& s) {
    return q.re() == s.re && q.norm_sq() == s.norm_sq;
}

inline Quaternion conjugate_by(const Quaternion& a, const Quaternion& g) {
    if (g.is_zero()) throw ZeroRotor();
    return g.inverse() * a * g;
}

// ab = ba iff the imaginary parts are R-linearly dependent (cross product zero).
inline bool commutes(const Quaternion& a, const Quaternion& b) {
    return a.y * b.z - a.z * b.y == 0 &&
           a.z * b.x - a.x * b.z == 0 &&
           a.x * b.y - a.y * b.x == 0;
}

inline Rational im_dot(const Quaternion& a, const Quaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Rational im_triple(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

// |Im q| when it is rational (Pythagorean imaginary part); throws otherwise.
inline Rational im_norm(const Quaternion& q) {
    Rational n;
    if (!rational_sqrt(q.im().norm_sq(), n)) throw IrrationalNorm();
    return n;
}

// A rotor g with g^{-1} Im(b) g = (|Im b|/|Im c|) Im(c): the unnormalized
// g = |Im c| Im(b) + |Im b| Im(c). Conjugation ignores the scale of g, so no
// normalization square root is needed; the two |Im| values must be rational.
inline Quaternion aligner(const Quaternion& b, const Quaternion& c) {
    if (b.is_real() || c.is_real()) throw RealComponent("aligner needs non-real arguments");
    Rational nb = im_norm(b), nc = im_norm(c);
    Quaternion g = nc * b.im() + nb * c.im();
    if (g.is_zero()) throw AntipodalDirections();
    return g;
}

inline std::string to_string(const Quaternion& q) {
    auto part = [](const Rational& r, const char* unit) {
        std::string s = to_string(r);
        if (s[0] == '-') return "-" + s.substr(1) + unit;
        return "+" + s + unit;
    };
    std::string s = to_string(q.w);
    s += part(q.x, "i");
    s += part(q.y, "j");
    s += part(q.z, "k");
    return s;
}

}  // namespace slicereg
