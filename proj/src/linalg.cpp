#include "gsym/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace gsym {

double det4(const Mat4& m) {
    double d = 0.0;
    for (int c = 0; c < 4; ++c) {
        int c1 = (c == 0) ? 1 : 0;
        int c2 = (c <= 1) ? 2 : 1;
        int c3 = (c <= 2) ? 3 : 2;
        double minor = m[1][c1] * (m[2][c2] * m[3][c3] - m[2][c3] * m[3][c2]) -
                       m[1][c2] * (m[2][c1] * m[3][c3] - m[2][c3] * m[3][c1]) +
                       m[1][c3] * (m[2][c1] * m[3][c2] - m[2][c2] * m[3][c1]);
        d += ((c % 2 == 0) ? 1.0 : -1.0) * m[0][c] * minor;
    }
    return d;
}

namespace {
double cofactor3(const Mat4& m, int r, int c) {
    int rs[3], cs[3], ri = 0, ci = 0;
    for (int i = 0; i < 4; ++i)
        if (i != r) rs[ri++] = i;
    for (int j = 0; j < 4; ++j)
        if (j != c) cs[ci++] = j;
    double minor = m[rs[0]][cs[0]] * (m[rs[1]][cs[1]] * m[rs[2]][cs[2]] -
                                      m[rs[1]][cs[2]] * m[rs[2]][cs[1]]) -
                   m[rs[0]][cs[1]] * (m[rs[1]][cs[0]] * m[rs[2]][cs[2]] -
                                      m[rs[1]][cs[2]] * m[rs[2]][cs[0]]) +
                   m[rs[0]][cs[2]] * (m[rs[1]][cs[0]] * m[rs[2]][cs[1]] -
                                      m[rs[1]][cs[1]] * m[rs[2]][cs[0]]);
    return (((r + c) % 2 == 0) ? 1.0 : -1.0) * minor;
}
}  // namespace

Mat4 inverse4(const Mat4& m, double det) {
    Mat4 inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = cofactor3(m, j, i) / det;
    return inv;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

double mat3_frob(const Mat3& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
    return std::sqrt(s);
}

double mat4_max_abs(const Mat4& m) {
    double s = 0.0;
    for (auto& row : m)
        for (double x : row) s = std::max(s, std::abs(x));
    return s;
}

double mat3_max_abs(const Mat3& m) {
    double s = 0.0;
    for (auto& row : m)
        for (double x : row) s = std::max(s, std::abs(x));
    return s;
}

void jacobi_eigen_sym(const std::vector<std::vector<double>>& m, std::vector<double>& vals,
                      std::vector<std::vector<double>>& vecs) {
    const size_t n = m.size();
    std::vector<std::vector<double>> a = m;
    vecs.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) vecs[i][i] = 1.0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    double vkp = vecs[p][k], vkq = vecs[q][k];
                    vecs[p][k] = c * vkp - s * vkq;
                    vecs[q][k] = s * vkp + c * vkq;
                }
            }
    }
    vals.resize(n);
    for (size_t i = 0; i < n; ++i) vals[i] = a[i][i];
    // sort ascending, carrying eigenvectors along
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return vals[i] < vals[j]; });
    std::vector<double> sv(n);
    std::vector<std::vector<double>> svec(n);
    for (size_t i = 0; i < n; ++i) {
        sv[i] = vals[order[i]];
        svec[i] = vecs[order[i]];
    }
    vals = sv;
    vecs = svec;
}

std::vector<double> sym_eigenvalues4(const Mat4& m) {
    std::vector<std::vector<double>> a(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = 0.5 * (m[i][j] + m[j][i]);
    std::vector<double> vals;
    std::vector<std::vector<double>> vecs;
    jacobi_eigen_sym(a, vals, vecs);
    return vals;
}

std::vector<double> sym_eigenvalues2(const Mat2& m) {
    double tr = m[0][0] + m[1][1];
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 - disc, tr / 2.0 + disc};
}

std::vector<double> singular_values(const std::vector<std::vector<double>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<double>> mtm(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) mtm[i][j] += m[k][i] * m[k][j];
    std::vector<double> vals;
    std::vector<std::vector<double>> vecs;
    jacobi_eigen_sym(mtm, vals, vecs);
    std::vector<double> sv(n);
    for (size_t i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, vals[n - 1 - i]));
    return sv;
}

int numerical_rank(const std::vector<std::vector<double>>& m, double tol) {
    auto sv = singular_values(m);
    if (sv.empty() || sv[0] == 0.0) return 0;
    int r = 0;
    for (double s : sv)
        if (s > tol * sv[0]) ++r;
    return r;
}

std::array<std::complex<double>, 3> cubic_roots(double a, double b, double c) {
    // depressed form t^3 + p t + q, x = t - a/3
    double p = b - a * a / 3.0;
    double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    double shift = -a / 3.0;
    double disc = -4.0 * p * p * p - 27.0 * q * q;
    double scale = std::max({1.0, std::abs(p), std::abs(q)});
    double eps = 1e-14 * scale * scale * scale;

    std::array<std::complex<double>, 3> roots;
    if (std::abs(disc) < eps) {
        // repeated roots
        if (std::abs(p) < 1e-14 * scale) {
            roots = {shift, shift, shift};
        } else {
            // t^3 + pt + q = (t - r)^2 (t - s) with s = -2r, p = -3r^2, q = 2r^3
            double r = -1.5 * q / p;
            double s = 3.0 * q / p;
            roots = {r + shift, r + shift, s + shift};
        }
    } else if (disc > 0.0) {
        // three distinct real roots (trigonometric method)
        double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots[k] = m * std::cos(phi - 2.0 * M_PI * k / 3.0) + shift;
    } else {
        // one real root, two complex conjugates (Cardano)
        double A = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        double u = std::cbrt(-q / 2.0 + A);
        double w = std::cbrt(-q / 2.0 - A);
        double t0 = u + w;
        double re = -t0 / 2.0;
        double im = (u - w) * std::sqrt(3.0) / 2.0;
        roots = {std::complex<double>(t0 + shift, 0.0),
                 std::complex<double>(re + shift, im),
                 std::complex<double>(re + shift, -im)};
    }
    return roots;
}

std::array<std::complex<double>, 4> quartic_roots(double a, double b, double c, double d) {
    // depressed form y^4 + p y^2 + q y + r, x = y - a/4
    double p = b - 3.0 * a * a / 8.0;
    double q = c - a * b / 2.0 + a * a * a / 8.0;
    double r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    double shift = -a / 4.0;
    std::array<std::complex<double>, 4> roots;

    double qscale = std::max({1.0, std::abs(p), std::abs(r)});
    if (std::abs(q) < 1e-14 * qscale) {
        // biquadratic
        std::complex<double> disc = std::sqrt(std::complex<double>(p * p - 4.0 * r, 0.0));
        std::complex<double> z1 = (-p + disc) / 2.0;
        std::complex<double> z2 = (-p - disc) / 2.0;
        std::complex<double> s1 = std::sqrt(z1), s2 = std::sqrt(z2);
        roots = {s1 + shift, -s1 + shift, s2 + shift, -s2 + shift};
        return roots;
    }

    // resolvent cubic z^3 + 2p z^2 + (p^2 - 4r) z - q^2 = 0; pick a positive real root
    auto rc = cubic_roots(2.0 * p, p * p - 4.0 * r, -q * q);
    double z = 0.0;
    bool found = false;
    for (auto& zr : rc) {
        if (std::abs(zr.imag()) < 1e-9 * (1.0 + std::abs(zr.real())) && zr.real() > 0.0) {
            if (!found || zr.real() > z) z = zr.real();
            found = true;
        }
    }
    if (!found) {
        // fall back to the root with the largest real part
        for (auto& zr : rc) z = std::max(z, zr.real());
        z = std::max(z, 1e-30);
    }
    double w = std::sqrt(z);
    // y^4 + p y^2 + q y + r = (y^2 + w y + s1)(y^2 - w y + s2)
    double s1 = (p + z - q / w) / 2.0;
    double s2 = (p + z + q / w) / 2.0;
    auto quad = [&](double bq, double cq, std::complex<double>* out) {
        std::complex<double> disc = std::sqrt(std::complex<double>(bq * bq - 4.0 * cq, 0.0));
        out[0] = (-bq + disc) / 2.0;
        out[1] = (-bq - disc) / 2.0;
    };
    std::complex<double> r1[2], r2[2];
    quad(w, s1, r1);
    quad(-w, s2, r2);
    roots = {r1[0] + shift, r1[1] + shift, r2[0] + shift, r2[1] + shift};
    return roots;
}

std::array<std::complex<double>, 4> eigenvalues4(const Mat4& m) {
    // Faddeev-LeVerrier: char poly x^4 + c3 x^3 + c2 x^2 + c1 x + c0
    auto tr = [](const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; };
    Mat4 m1 = m;
    double c3 = -tr(m1);
    Mat4 b1 = m1;
    for (int i = 0; i < 4; ++i) b1[i][i] += c3;
    Mat4 m2 = mat4_mul(m, b1);
    double c2 = -tr(m2) / 2.0;
    Mat4 b2 = m2;
    for (int i = 0; i < 4; ++i) b2[i][i] += c2;
    Mat4 m3 = mat4_mul(m, b2);
    double c1 = -tr(m3) / 3.0;
    Mat4 b3 = m3;
    for (int i = 0; i < 4; ++i) b3[i][i] += c1;
    Mat4 m4 = mat4_mul(m, b3);
    double c0 = -tr(m4) / 4.0;
    return quartic_roots(c3, c2, c1, c0);
}

}  // namespace gsym
