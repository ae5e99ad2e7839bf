#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsym {

/// Thrown when an evaluation leaves the domain of an elementary function
/// (log/sqrt of a non-positive value, division by a vanishing jet, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Degree-3 truncated Taylor expansion of a scalar field at a point in
/// four variables.  hess and third are stored fully and kept symmetric.
struct Jet3 {
    double v = 0.0;
    std::array<double, 4> g{};
    std::array<std::array<double, 4>, 4> h{};
    std::array<std::array<std::array<double, 4>, 4>, 4> t{};

    static Jet3 constant(double c) {
        Jet3 j;
        j.v = c;
        return j;
    }

    static Jet3 variable(int slot, double value) {
        Jet3 j;
        j.v = value;
        j.g[slot] = 1.0;
        return j;
    }
};

Jet3 operator+(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a, const Jet3& b);
Jet3 operator-(const Jet3& a);
Jet3 operator*(const Jet3& a, const Jet3& b);
Jet3 operator/(const Jet3& a, const Jet3& b);

Jet3 operator*(double s, const Jet3& a);
Jet3 operator+(const Jet3& a, double c);

/// Univariate composition: applies an outer function with value f0 and
/// derivatives d1,d2,d3 (taken at a.v) through the chain rule.
Jet3 compose1(const Jet3& a, double f0, double d1, double d2, double d3);

Jet3 jet_exp(const Jet3& a);
Jet3 jet_log(const Jet3& a);
Jet3 jet_sqrt(const Jet3& a);
Jet3 jet_sin(const Jet3& a);
Jet3 jet_cos(const Jet3& a);
Jet3 jet_tan(const Jet3& a);
Jet3 jet_sec(const Jet3& a);
Jet3 jet_sinh(const Jet3& a);
Jet3 jet_cosh(const Jet3& a);

/// a^n by repeated multiplication; n may be negative (guarded reciprocal).
Jet3 jet_powi(const Jet3& a, long n);

double jet_max_abs_diff(const Jet3& a, const Jet3& b);

}  // namespace gsym
