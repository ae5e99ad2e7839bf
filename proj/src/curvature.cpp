#include "gsym/curvature.hpp"

#include <cmath>

namespace gsym {

ChristoffelJet christoffel(const MetricJet& mj) {
    ChristoffelJet cj;
    // Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
    Ten3 bracket{};  // bracket[l][i][j]
    for (int l = 0; l < 4; ++l)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                bracket[l][i][j] = mj.dg[i][j][l] + mj.dg[j][i][l] - mj.dg[l][i][j];
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int l = 0; l < 4; ++l) s += mj.ginv[k][l] * bracket[l][i][j];
                cj.gamma[k][i][j] = 0.5 * s;
            }

    Ten4 dbracket{};  // dbracket[m][l][i][j]
    for (int m = 0; m < 4; ++m)
        for (int l = 0; l < 4; ++l)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    dbracket[m][l][i][j] =
                        mj.d2g[m][i][j][l] + mj.d2g[m][j][i][l] - mj.d2g[m][l][i][j];
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double s = 0.0;
                    for (int l = 0; l < 4; ++l)
                        s += mj.dginv[m][k][l] * bracket[l][i][j] +
                             mj.ginv[k][l] * dbracket[m][l][i][j];
                    cj.dgamma[m][k][i][j] = 0.5 * s;
                }

    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            for (int k = 0; k < 4; ++k)
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        double s = 0.0;
                        for (int l = 0; l < 4; ++l) {
                            double d2b = mj.d3g[m][n][i][j][l] + mj.d3g[m][n][j][i][l] -
                                         mj.d3g[m][n][l][i][j];
                            s += mj.d2ginv[m][n][k][l] * bracket[l][i][j] +
                                 mj.dginv[m][k][l] * dbracket[n][l][i][j] +
                                 mj.dginv[n][k][l] * dbracket[m][l][i][j] +
                                 mj.ginv[k][l] * d2b;
                        }
                        cj.d2gamma[m][n][k][i][j] = 0.5 * s;
                    }
    return cj;
}

namespace {

Ten4 weyl_from(const Ten4& R, const Mat4& ricci, double tau, const Mat4& g) {
    Mat4 rho0{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho0[i][j] = ricci[i][j] - tau / 4.0 * g[i][j];
    Ten4 kn1 = kulkarni_nomizu(rho0, g);
    Ten4 kn2 = kulkarni_nomizu(g, g);
    Ten4 W{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    W[i][j][k][l] =
                        R[i][j][k][l] - 0.5 * kn1[i][j][k][l] - tau / 24.0 * kn2[i][j][k][l];
    return W;
}

}  // namespace

Curvature riemann(const ChristoffelJet& cj, const MetricJet& mj) {
    Curvature c;

    // (R(d_i,d_j)d_k)^l = d_j Gamma^l_ik - d_i Gamma^l_jk
    //                   + Gamma^l_jm Gamma^m_ik - Gamma^l_im Gamma^m_jk
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    double s = cj.dgamma[j][l][i][k] - cj.dgamma[i][l][j][k];
                    for (int m = 0; m < 4; ++m)
                        s += cj.gamma[l][j][m] * cj.gamma[m][i][k] -
                             cj.gamma[l][i][m] * cj.gamma[m][j][k];
                    c.Rop[i][j][k][l] = s;
                }

    Ten5 dRop{};
    for (int n = 0; n < 4; ++n)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) {
                        double s = cj.d2gamma[n][j][l][i][k] - cj.d2gamma[n][i][l][j][k];
                        for (int m = 0; m < 4; ++m)
                            s += cj.dgamma[n][l][j][m] * cj.gamma[m][i][k] +
                                 cj.gamma[l][j][m] * cj.dgamma[n][m][i][k] -
                                 cj.dgamma[n][l][i][m] * cj.gamma[m][j][k] -
                                 cj.gamma[l][i][m] * cj.dgamma[n][m][j][k];
                        dRop[n][i][j][k][l] = s;
                    }

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < 4; ++m) s += c.Rop[i][j][k][m] * mj.g[m][l];
                    c.R[i][j][k][l] = s;
                }
    for (int n = 0; n < 4; ++n)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) {
                        double s = 0.0;
                        for (int m = 0; m < 4; ++m)
                            s += dRop[n][i][j][k][m] * mj.g[m][l] +
                                 c.Rop[i][j][k][m] * mj.dg[n][m][l];
                        c.dR[n][i][j][k][l] = s;
                    }

    // rho(X,Y) = trace{Z -> R(X,Z)Y}
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += c.Rop[i][k][j][k];
            c.ricci[i][j] = s;
        }
    for (int n = 0; n < 4; ++n)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = 0.0;
                for (int k = 0; k < 4; ++k) s += dRop[n][i][k][j][k];
                c.dricci[n][i][j] = s;
            }

    c.tau = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c.tau += mj.ginv[i][j] * c.ricci[i][j];
    for (int n = 0; n < 4; ++n) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                s += mj.dginv[n][i][j] * c.ricci[i][j] + mj.ginv[i][j] * c.dricci[n][i][j];
        c.dtau[n] = s;
    }

    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += mj.ginv[i][k] * c.ricci[k][j];
            c.ricOp[i][j] = s;
        }

    c.weyl = weyl_from(c.R, c.ricci, c.tau, mj.g);

    // dW by the product rule through every term of the decomposition
    for (int n = 0; n < 4; ++n) {
        Mat4 rho0{}, drho0{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                rho0[i][j] = c.ricci[i][j] - c.tau / 4.0 * mj.g[i][j];
                drho0[i][j] = c.dricci[n][i][j] - c.dtau[n] / 4.0 * mj.g[i][j] -
                              c.tau / 4.0 * mj.dg[n][i][j];
            }
        Ten4 t1 = kulkarni_nomizu(drho0, mj.g);
        Ten4 t2 = kulkarni_nomizu(rho0, mj.dg[n]);
        Ten4 t3 = kulkarni_nomizu(mj.g, mj.g);
        Ten4 t4 = kulkarni_nomizu(mj.dg[n], mj.g);
        Ten4 t5 = kulkarni_nomizu(mj.g, mj.dg[n]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l)
                        c.dweyl[n][i][j][k][l] =
                            c.dR[n][i][j][k][l] - 0.5 * (t1[i][j][k][l] + t2[i][j][k][l]) -
                            c.dtau[n] / 24.0 * t3[i][j][k][l] -
                            c.tau / 24.0 * (t4[i][j][k][l] + t5[i][j][k][l]);
    }
    return c;
}

Ten4 kulkarni_nomizu(const Mat4& A, const Mat4& B) {
    Ten4 T{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    T[i][j][k][l] = A[i][k] * B[j][l] + A[j][l] * B[i][k] - A[i][l] * B[j][k] -
                                    A[j][k] * B[i][l];
    return T;
}

Ten3 covariant_derivative_02(const Mat4& T, const Ten3& dT, const ChristoffelJet& cj) {
    Ten3 out{};
    for (int m = 0; m < 4; ++m)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = dT[m][i][j];
                for (int p = 0; p < 4; ++p)
                    s -= cj.gamma[p][m][i] * T[p][j] + cj.gamma[p][m][j] * T[i][p];
                out[m][i][j] = s;
            }
    return out;
}

Ten5 covariant_derivative_04(const Ten4& T, const Ten5& dT, const ChristoffelJet& cj) {
    Ten5 out{};
    for (int m = 0; m < 4; ++m)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    for (int l = 0; l < 4; ++l) {
                        double s = dT[m][i][j][k][l];
                        for (int p = 0; p < 4; ++p)
                            s -= cj.gamma[p][m][i] * T[p][j][k][l] +
                                 cj.gamma[p][m][j] * T[i][p][k][l] +
                                 cj.gamma[p][m][k] * T[i][j][p][l] +
                                 cj.gamma[p][m][l] * T[i][j][k][p];
                        out[m][i][j][k][l] = s;
                    }
    return out;
}

Ten3 covariant_derivative_11(const Mat4& J, const Ten3& dJ, const ChristoffelJet& cj) {
    Ten3 out{};
    for (int m = 0; m < 4; ++m)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double s = dJ[m][i][j];
                for (int p = 0; p < 4; ++p)
                    s += cj.gamma[i][m][p] * J[p][j] - cj.gamma[p][m][j] * J[i][p];
                out[m][i][j] = s;
            }
    return out;
}

double tensor_norm_sq_02(const Mat4& T, const MetricJet& mj) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    s += T[i][j] * T[k][l] * mj.ginv[i][k] * mj.ginv[j][l];
    return s;
}

double tensor_norm_sq_03(const Ten3& T, const MetricJet& mj) {
    // contract the first slot, then reuse the (0,2) contraction
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int d = 0; d < 4; ++d) {
            double gad = mj.ginv[a][d];
            if (gad == 0.0) continue;
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    for (int e = 0; e < 4; ++e)
                        for (int f = 0; f < 4; ++f)
                            s += gad * T[a][b][c] * T[d][e][f] * mj.ginv[b][e] * mj.ginv[c][f];
        }
    return s;
}

double tensor_norm_sq_04(const Ten4& T, const MetricJet& mj) {
    // raise all indices once, then contract
    Ten4 up{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    double s = 0.0;
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b)
                            for (int cc = 0; cc < 4; ++cc)
                                for (int d = 0; d < 4; ++d)
                                    s += mj.ginv[i][a] * mj.ginv[j][b] * mj.ginv[k][cc] *
                                         mj.ginv[l][d] * T[a][b][cc][d];
                    up[i][j][k][l] = s;
                }
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += up[i][j][k][l] * T[i][j][k][l];
    return s;
}

double max_abs(const Ten3& T) {
    double m = 0.0;
    for (auto& a : T)
        for (auto& b : a)
            for (double x : b) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const Ten4& T) {
    double m = 0.0;
    for (auto& a : T) m = std::max(m, max_abs(a));
    return m;
}

double max_abs(const Ten5& T) {
    double m = 0.0;
    for (auto& a : T) m = std::max(m, max_abs(a));
    return m;
}

double curvature_symmetry_residual(const Ten4& R) {
    double scale = std::max(1e-30, max_abs(R));
    double res = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    res = std::max(res, std::abs(R[i][j][k][l] + R[j][i][k][l]));
                    res = std::max(res, std::abs(R[i][j][k][l] + R[i][j][l][k]));
                    res = std::max(res, std::abs(R[i][j][k][l] - R[k][l][i][j]));
                    res = std::max(res,
                                   std::abs(R[i][j][k][l] + R[i][k][l][j] + R[i][l][j][k]));
                }
    return res / scale;
}

double weyl_trace_residual(const Ten4& W, const MetricJet& mj) {
    double scale = std::max(1e-30, max_abs(W));
    double res = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) {
            double s = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k) s += mj.ginv[i][k] * W[i][j][k][l];
            res = std::max(res, std::abs(s));
        }
    return res / scale;
}

}  // namespace gsym
