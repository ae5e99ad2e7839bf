#include "gsym/jet.hpp"

#include <algorithm>

namespace gsym {

namespace {
constexpr double kDivFloor = 1e-300;
}

Jet3 operator+(const Jet3& a, const Jet3& b) {
    Jet3 r;
    r.v = a.v + b.v;
    for (int i = 0; i < 4; ++i) {
        r.g[i] = a.g[i] + b.g[i];
        for (int j = 0; j < 4; ++j) {
            r.h[i][j] = a.h[i][j] + b.h[i][j];
            for (int k = 0; k < 4; ++k) r.t[i][j][k] = a.t[i][j][k] + b.t[i][j][k];
        }
    }
    return r;
}

Jet3 operator-(const Jet3& a, const Jet3& b) {
    Jet3 r;
    r.v = a.v - b.v;
    for (int i = 0; i < 4; ++i) {
        r.g[i] = a.g[i] - b.g[i];
        for (int j = 0; j < 4; ++j) {
            r.h[i][j] = a.h[i][j] - b.h[i][j];
            for (int k = 0; k < 4; ++k) r.t[i][j][k] = a.t[i][j][k] - b.t[i][j][k];
        }
    }
    return r;
}

Jet3 operator-(const Jet3& a) {
    Jet3 r;
    r.v = -a.v;
    for (int i = 0; i < 4; ++i) {
        r.g[i] = -a.g[i];
        for (int j = 0; j < 4; ++j) {
            r.h[i][j] = -a.h[i][j];
            for (int k = 0; k < 4; ++k) r.t[i][j][k] = -a.t[i][j][k];
        }
    }
    return r;
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
    Jet3 r;
    r.v = a.v * b.v;
    for (int i = 0; i < 4; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.h[i][j] = a.h[i][j] * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.h[i][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                r.t[i][j][k] = a.t[i][j][k] * b.v
                             + a.h[i][j] * b.g[k] + a.h[i][k] * b.g[j] + a.h[j][k] * b.g[i]
                             + a.g[i] * b.h[j][k] + a.g[j] * b.h[i][k] + a.g[k] * b.h[i][j]
                             + a.v * b.t[i][j][k];
    return r;
}

Jet3 compose1(const Jet3& a, double f0, double d1, double d2, double d3) {
    Jet3 r;
    r.v = f0;
    for (int i = 0; i < 4; ++i) r.g[i] = d1 * a.g[i];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.h[i][j] = d2 * a.g[i] * a.g[j] + d1 * a.h[i][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                r.t[i][j][k] = d3 * a.g[i] * a.g[j] * a.g[k]
                             + d2 * (a.h[i][j] * a.g[k] + a.h[i][k] * a.g[j] + a.h[j][k] * a.g[i])
                             + d1 * a.t[i][j][k];
    return r;
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
    if (std::abs(b.v) < kDivFloor)
        throw DomainError("division by a vanishing jet (|denominator| < 1e-300)");
    double inv = 1.0 / b.v;
    Jet3 rec = compose1(b, inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv);
    return a * rec;
}

Jet3 operator*(double s, const Jet3& a) { return Jet3::constant(s) * a; }
Jet3 operator+(const Jet3& a, double c) { return a + Jet3::constant(c); }

Jet3 jet_exp(const Jet3& a) {
    double e = std::exp(a.v);
    return compose1(a, e, e, e, e);
}

Jet3 jet_log(const Jet3& a) {
    if (!(a.v > 0.0)) throw DomainError("log of a non-positive value");
    double inv = 1.0 / a.v;
    return compose1(a, std::log(a.v), inv, -inv * inv, 2.0 * inv * inv * inv);
}

Jet3 jet_sqrt(const Jet3& a) {
    if (!(a.v > 0.0)) throw DomainError("sqrt of a non-positive value");
    double s = std::sqrt(a.v);
    return compose1(a, s, 0.5 / s, -0.25 / (a.v * s), 0.375 / (a.v * a.v * s));
}

Jet3 jet_sin(const Jet3& a) {
    double s = std::sin(a.v), c = std::cos(a.v);
    return compose1(a, s, c, -s, -c);
}

Jet3 jet_cos(const Jet3& a) {
    double s = std::sin(a.v), c = std::cos(a.v);
    return compose1(a, c, -s, -c, s);
}

Jet3 jet_tan(const Jet3& a) { return jet_sin(a) / jet_cos(a); }

// sec(z) = 1/cos(z)
Jet3 jet_sec(const Jet3& a) { return Jet3::constant(1.0) / jet_cos(a); }

Jet3 jet_sinh(const Jet3& a) {
    double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose1(a, s, c, s, c);
}

Jet3 jet_cosh(const Jet3& a) {
    double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose1(a, c, s, c, s);
}

Jet3 jet_powi(const Jet3& a, long n) {
    if (n < 0) return Jet3::constant(1.0) / jet_powi(a, -n);
    Jet3 r = Jet3::constant(1.0);
    Jet3 base = a;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

double jet_max_abs_diff(const Jet3& a, const Jet3& b) {
    double m = std::abs(a.v - b.v);
    for (int i = 0; i < 4; ++i) {
        m = std::max(m, std::abs(a.g[i] - b.g[i]));
        for (int j = 0; j < 4; ++j) {
            m = std::max(m, std::abs(a.h[i][j] - b.h[i][j]));
            for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a.t[i][j][k] - b.t[i][j][k]));
        }
    }
    return m;
}

}  // namespace gsym
