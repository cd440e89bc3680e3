#pragma once

#include <cmath>

namespace llg {

// Symmetric 2x2 matrix, stored as the upper triangle.
struct Sym2 {
    double m11 = 0.0, m12 = 0.0, m22 = 0.0;

    double trace() const { return m11 + m22; }
    double det() const { return m11 * m22 - m12 * m12; }

    Sym2 operator+(const Sym2& o) const { return {m11 + o.m11, m12 + o.m12, m22 + o.m22}; }
    Sym2 operator-(const Sym2& o) const { return {m11 - o.m11, m12 - o.m12, m22 - o.m22}; }
    Sym2 operator-() const { return {-m11, -m12, -m22}; }
    friend Sym2 operator*(double s, const Sym2& a) { return {s * a.m11, s * a.m12, s * a.m22}; }
};

// General 2x2 matrix (row major).
struct Mat2 {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }

    Mat2 operator+(const Mat2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Mat2 operator-(const Mat2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    friend Mat2 operator*(double s, const Mat2& a) {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }

    double frobenius() const { return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22); }
};

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

// h * g^{-1} for a symmetric form and an inverse metric; not symmetric in general.
inline Mat2 mul(const Sym2& h, const Sym2& ginv) {
    return {h.m11 * ginv.m11 + h.m12 * ginv.m12, h.m11 * ginv.m12 + h.m12 * ginv.m22,
            h.m12 * ginv.m11 + h.m22 * ginv.m12, h.m12 * ginv.m12 + h.m22 * ginv.m22};
}

// First fundamental form together with its determinant and inverse.
struct Metric2 {
    Sym2 g;
    double det = 0.0;
    Sym2 inv;
};

} // namespace llg
