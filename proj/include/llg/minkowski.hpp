#pragma once

// Linear algebra of Lorentz-Minkowski 4-space R^4_1 with signature (-,+,+,+):
// pseudo scalar product, causal classification, the ternary wedge product,
// and the projection onto the unit-time slice S^2_+ of the future lightcone.

#include <array>
#include <cmath>
#include <cstddef>

#include "llg/error.hpp"

namespace llg {

struct Vec4 {
    double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

    double& operator[](std::size_t i) { return (&x0)[i]; }
    double operator[](std::size_t i) const { return (&x0)[i]; }

    friend Vec4 operator+(Vec4 a, Vec4 b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
    friend Vec4 operator-(Vec4 a, Vec4 b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
    friend Vec4 operator*(double s, Vec4 v) { return {s * v.x0, s * v.x1, s * v.x2, s * v.x3}; }
    friend Vec4 operator*(Vec4 v, double s) { return s * v; }
    friend Vec4 operator/(Vec4 v, double s) { return {v.x0 / s, v.x1 / s, v.x2 / s, v.x3 / s}; }
    Vec4 operator-() const { return {-x0, -x1, -x2, -x3}; }
    friend bool operator==(const Vec4&, const Vec4&) = default;
};

inline constexpr Vec4 e0{1, 0, 0, 0};
inline constexpr Vec4 e1{0, 1, 0, 0};
inline constexpr Vec4 e2{0, 0, 1, 0};
inline constexpr Vec4 e3{0, 0, 0, 1};

enum class CausalClass { Spacelike, Timelike, Lightlike, Zero };

const char* causal_class_name(CausalClass c);

// <a,b> = -a0 b0 + a1 b1 + a2 b2 + a3 b3
inline double minkowski_inner(const Vec4& a, const Vec4& b) {
    return -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

inline double euclid_norm2(const Vec4& v) { return v.x0 * v.x0 + v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3; }
inline double euclid_norm(const Vec4& v) { return std::sqrt(euclid_norm2(v)); }

inline bool all_finite(const Vec4& v) {
    return std::isfinite(v.x0) && std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

// Relative classification tolerance: tau_c = scale * |v|_euclid^2.
inline constexpr double kCausalTolScale = 1e-10;

// Spacelike <v,v> > tau_c, Timelike <v,v> < -tau_c, Lightlike otherwise for
// nonzero v, Zero for the zero vector. tau_c is an absolute threshold here;
// causal_class(v) below derives it from the Euclidean size of v.
CausalClass causal_class(const Vec4& v, double tau_c);

inline CausalClass causal_class(const Vec4& v) { return causal_class(v, kCausalTolScale * euclid_norm2(v)); }

// Ternary wedge product: the unique w with <x,w> = det(x,a,b,c) for all x,
// where det stacks the rows (x, a, b, c). Pseudo-orthogonal to a, b, c.
Vec4 wedge3(const Vec4& a, const Vec4& b, const Vec4& c);

// pi^L_S: scale a lightlike vector onto S^2_+ = {x lightlike, x0 = 1}.
Vec4 project_to_S2plus(const Vec4& v);

// sqrt(|<v,v>|); the pseudo norm used to normalise frame vectors.
inline double minkowski_norm(const Vec4& v) { return std::sqrt(std::fabs(minkowski_inner(v, v))); }

} // namespace llg
