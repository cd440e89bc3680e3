#pragma once

// Bivariate truncated Taylor arithmetic in two parameters (u1,u2) up to total
// degree 4. Coefficients are Taylor coefficients (derivative / i! j!), so
// multiplication is plain truncated polynomial convolution. Degree 4 is one
// more than the order-3 jets the surface model exposes; the spare order is
// what lets a varied surface X + eps*alpha*l keep exact order-3 jets (the
// frame consumes one derivative of X).

#include <array>
#include <cmath>
#include <cstddef>

#include "llg/error.hpp"

namespace llg {

class Taylor {
  public:
    static constexpr int kDeg = 4;
    static constexpr int kN = (kDeg + 1) * (kDeg + 2) / 2; // 15

    // Coefficient of u1^(d-j) u2^j lives at base(d)+j.
    static constexpr int base(int d) { return d * (d + 1) / 2; }
    static constexpr int idx(int i, int j) { return base(i + j) + j; }

    std::array<double, kN> c{};

    Taylor() = default;
    explicit Taylor(double v) { c[0] = v; }

    static Taylor constant(double v) { return Taylor(v); }
    static Taylor var1(double v) {
        Taylor t(v);
        t.c[idx(1, 0)] = 1.0;
        return t;
    }
    static Taylor var2(double v) {
        Taylor t(v);
        t.c[idx(0, 1)] = 1.0;
        return t;
    }

    double value() const { return c[0]; }

    // Partial derivative d^(i+j) / du1^i du2^j at the expansion point.
    double deriv(int i, int j) const {
        static constexpr double fact[5] = {1, 1, 2, 6, 24};
        return c[idx(i, j)] * fact[i] * fact[j];
    }

    friend Taylor operator+(const Taylor& a, const Taylor& b) {
        Taylor r;
        for (int k = 0; k < kN; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend Taylor operator-(const Taylor& a, const Taylor& b) {
        Taylor r;
        for (int k = 0; k < kN; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    Taylor operator-() const {
        Taylor r;
        for (int k = 0; k < kN; ++k) r.c[k] = -c[k];
        return r;
    }
    friend Taylor operator+(const Taylor& a, double s) {
        Taylor r = a;
        r.c[0] += s;
        return r;
    }
    friend Taylor operator+(double s, const Taylor& a) { return a + s; }
    friend Taylor operator-(const Taylor& a, double s) { return a + (-s); }
    friend Taylor operator-(double s, const Taylor& a) { return -a + s; }
    friend Taylor operator*(const Taylor& a, double s) {
        Taylor r;
        for (int k = 0; k < kN; ++k) r.c[k] = a.c[k] * s;
        return r;
    }
    friend Taylor operator*(double s, const Taylor& a) { return a * s; }
    friend Taylor operator/(const Taylor& a, double s) { return a * (1.0 / s); }

    friend Taylor operator*(const Taylor& a, const Taylor& b) {
        Taylor r;
        for (int da = 0; da <= kDeg; ++da)
            for (int ja = 0; ja <= da; ++ja) {
                const double av = a.c[base(da) + ja];
                if (av == 0.0) continue;
                for (int db = 0; db + da <= kDeg; ++db)
                    for (int jb = 0; jb <= db; ++jb)
                        r.c[base(da + db) + ja + jb] += av * b.c[base(db) + jb];
            }
        return r;
    }

    // phi applied to this series; d[k] = phi^(k)(value()), k = 0..4.
    Taylor compose(const std::array<double, 5>& d) const {
        Taylor h = *this;
        h.c[0] = 0.0;
        Taylor r(d[4] / 24.0);
        r = r * h + Taylor(d[3] / 6.0);
        r = r * h + Taylor(d[2] / 2.0);
        r = r * h + Taylor(d[1]);
        r = r * h + Taylor(d[0]);
        return r;
    }
};

inline Taylor recip(const Taylor& a) {
    const double x = a.value();
    if (x == 0.0) raise(Errc::Numerical, "division by zero in jet arithmetic");
    const double x1 = 1.0 / x;
    return a.compose({x1, -x1 * x1, 2 * x1 * x1 * x1, -6 * x1 * x1 * x1 * x1, 24 * x1 * x1 * x1 * x1 * x1});
}

inline Taylor operator/(const Taylor& a, const Taylor& b) { return a * recip(b); }
inline Taylor operator/(double s, const Taylor& b) { return recip(b) * s; }

inline Taylor sin(const Taylor& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return a.compose({s, c, -s, -c, s});
}
inline Taylor cos(const Taylor& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return a.compose({c, -s, -c, s, c});
}
inline Taylor tan(const Taylor& a) { return sin(a) / cos(a); }
inline Taylor sinh(const Taylor& a) {
    const double s = std::sinh(a.value()), c = std::cosh(a.value());
    return a.compose({s, c, s, c, s});
}
inline Taylor cosh(const Taylor& a) {
    const double s = std::sinh(a.value()), c = std::cosh(a.value());
    return a.compose({c, s, c, s, c});
}
inline Taylor tanh(const Taylor& a) { return sinh(a) / cosh(a); }
inline Taylor exp(const Taylor& a) {
    const double e = std::exp(a.value());
    return a.compose({e, e, e, e, e});
}
inline Taylor log(const Taylor& a) {
    const double x = a.value();
    if (x <= 0.0) raise(Errc::Numerical, "log of non-positive value in jet arithmetic");
    const double x1 = 1.0 / x;
    return a.compose({std::log(x), x1, -x1 * x1, 2 * x1 * x1 * x1, -6 * x1 * x1 * x1 * x1});
}
inline Taylor sqrt(const Taylor& a) {
    const double x = a.value();
    if (x <= 0.0) raise(Errc::Numerical, "sqrt of non-positive value in jet arithmetic");
    const double r = std::sqrt(x);
    const double x1 = 1.0 / x;
    return a.compose({r, 0.5 * r * x1, -0.25 * r * x1 * x1, 0.375 * r * x1 * x1 * x1,
                      -0.9375 * r * x1 * x1 * x1 * x1});
}
inline Taylor atan(const Taylor& a) {
    const double x = a.value();
    const double q = 1.0 / (1.0 + x * x);
    return a.compose({std::atan(x), q, -2 * x * q * q, (6 * x * x - 2) * q * q * q,
                      (24 * x - 24 * x * x * x) * q * q * q * q});
}

inline Taylor ipow(const Taylor& a, long n) {
    if (n == 0) return Taylor(1.0);
    if (n < 0) return recip(ipow(a, -n));
    Taylor r(1.0), b = a;
    long m = n;
    while (m > 0) {
        if (m & 1) r = r * b;
        b = b * b;
        m >>= 1;
    }
    return r;
}

inline Taylor pow(const Taylor& a, const Taylor& b) {
    // Integer literal exponents keep negative bases legal.
    const double bv = b.value();
    bool b_const = true;
    for (int k = 1; k < Taylor::kN; ++k)
        if (b.c[k] != 0.0) b_const = false;
    if (b_const && bv == std::floor(bv) && std::fabs(bv) <= 64) return ipow(a, static_cast<long>(bv));
    return exp(b * log(a));
}

// Series derivatives. The result is one degree shorter than the input: a
// degree-4 series yields a derivative valid through degree 3 (the top row is
// zeroed, not reconstructed).
inline Taylor d1(const Taylor& t) {
    Taylor r;
    for (int d = 0; d < Taylor::kDeg; ++d)
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            r.c[Taylor::idx(i, j)] = (i + 1) * t.c[Taylor::idx(i + 1, j)];
        }
    return r;
}
inline Taylor d2(const Taylor& t) {
    Taylor r;
    for (int d = 0; d < Taylor::kDeg; ++d)
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            r.c[Taylor::idx(i, j)] = (j + 1) * t.c[Taylor::idx(i, j + 1)];
        }
    return r;
}

// Scalar overloads so templated code works for plain doubles too.
inline double recip(double a) { return 1.0 / a; }
inline double ipow(double a, long n) { return std::pow(a, static_cast<double>(n)); }

} // namespace llg
