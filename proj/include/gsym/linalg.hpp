#pragma once

#include <array>
#include <complex>
#include <vector>

namespace gsym {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat6 = std::array<std::array<double, 6>, 6>;

using Ten3 = std::array<Mat4, 4>;   // T[a][i][j]
using Ten4 = std::array<Ten3, 4>;   // T[a][b][i][j]
using Ten5 = std::array<Ten4, 4>;   // T[a][b][c][i][j]

double det4(const Mat4& m);
/// Inverse by explicit cofactor expansion; deterministic and branch-free.
Mat4 inverse4(const Mat4& m, double det);

Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
double mat3_frob(const Mat3& m);
double mat4_max_abs(const Mat4& m);
double mat3_max_abs(const Mat3& m);

/// Eigenvalues (ascending) and eigenvectors of a symmetric matrix via
/// cyclic Jacobi rotations.  Rows of `vecs` are eigenvectors.
void jacobi_eigen_sym(const std::vector<std::vector<double>>& m, std::vector<double>& vals,
                      std::vector<std::vector<double>>& vecs);

std::vector<double> sym_eigenvalues4(const Mat4& m);
std::vector<double> sym_eigenvalues2(const Mat2& m);

/// Singular values (descending) of a square matrix, via the spectrum of MᵀM.
std::vector<double> singular_values(const std::vector<std::vector<double>>& m);

int numerical_rank(const std::vector<std::vector<double>>& m, double tol);

/// Roots of x³ + a x² + b x + c.  Real coefficients, complex roots allowed.
std::array<std::complex<double>, 3> cubic_roots(double a, double b, double c);

/// Roots of x⁴ + a x³ + b x² + c x + d (Ferrari).
std::array<std::complex<double>, 4> quartic_roots(double a, double b, double c, double d);

/// Eigenvalues of an arbitrary real 4x4 matrix via its characteristic
/// polynomial (Faddeev-LeVerrier coefficients) and the quartic solver.
std::array<std::complex<double>, 4> eigenvalues4(const Mat4& m);

}  // namespace gsym
