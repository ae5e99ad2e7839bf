#pragma once

#include "gsym/metric.hpp"

namespace gsym {

/// Levi-Civita Christoffel symbols with enough coordinate partials to
/// differentiate the curvature once.
struct ChristoffelJet {
    Ten3 gamma{};    // gamma[k][i][j] = Gamma^k_ij, symmetric in i,j
    Ten4 dgamma{};   // dgamma[m][k][i][j] = d_m Gamma^k_ij
    Ten5 d2gamma{};  // d2gamma[m][n][k][i][j]
};

/// (0,4) curvature with the derived tensors carried alongside their
/// coordinate partials (needed for covariant derivatives downstream).
///
/// Sign convention: R(X,Y) = nabla_[X,Y] - [nabla_X, nabla_Y], components
/// fixed by the calibration tests against the Type I frame tables.
struct Curvature {
    Ten4 R{};         // R[i][j][k][l]
    Ten5 dR{};        // dR[m][i][j][k][l] = d_m R_ijkl
    Ten4 Rop{};       // Rop[i][j][k][l] = (R(d_i,d_j) d_k)^l
    Mat4 ricci{};     // rho_ij
    Ten3 dricci{};
    Mat4 ricOp{};     // Ric^i_j = g^{ik} rho_kj
    double tau = 0.0;
    Vec4 dtau{};
    Ten4 weyl{};
    Ten5 dweyl{};
};

ChristoffelJet christoffel(const MetricJet& mj);

Curvature riemann(const ChristoffelJet& cj, const MetricJet& mj);

/// (A . B)_ijkl = A_ik B_jl + A_jl B_ik - A_il B_jk - A_jk B_il
Ten4 kulkarni_nomizu(const Mat4& A, const Mat4& B);

/// Covariant derivative of a (0,2) tensor: out[m][i][j] = (nabla T)_{m;ij}.
Ten3 covariant_derivative_02(const Mat4& T, const Ten3& dT, const ChristoffelJet& cj);

/// Covariant derivative of a (0,4) tensor: out[m][i][j][k][l].
Ten5 covariant_derivative_04(const Ten4& T, const Ten5& dT, const ChristoffelJet& cj);

/// Covariant derivative of a (1,1) tensor field J^i_j.
Ten3 covariant_derivative_11(const Mat4& J, const Ten3& dJ, const ChristoffelJet& cj);

/// Full contraction with the inverse metric on every slot; can be
/// negative for indefinite metrics.
double tensor_norm_sq_02(const Mat4& T, const MetricJet& mj);
double tensor_norm_sq_03(const Ten3& T, const MetricJet& mj);
double tensor_norm_sq_04(const Ten4& T, const MetricJet& mj);

double max_abs(const Ten3& T);
double max_abs(const Ten4& T);
double max_abs(const Ten5& T);

/// Residuals of R_ijkl = -R_jikl = -R_ijlk = R_klij and the first Bianchi
/// identity, normalized by the largest curvature component.
double curvature_symmetry_residual(const Ten4& R);

/// Max |g^{ik} W_ijkl| over j,l.
double weyl_trace_residual(const Ten4& W, const MetricJet& mj);

}  // namespace gsym
