#include "gsym/metric.hpp"

#include <cmath>

namespace gsym {

MetricField MetricField::from_components(std::array<std::array<Expr, 4>, 4> comps,
                                         ParamEnv params, std::string label) {
    MetricField m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Expr& upper = comps[std::min(i, j)][std::max(i, j)];
            if (!upper) upper = ex_num(0.0);
        }
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            if (comps[j][i] && !expr_equal(comps[j][i], comps[i][j]))
                throw std::runtime_error("metric lower triangle disagrees with upper at (" +
                                         std::to_string(j) + "," + std::to_string(i) + ")");
            m.components[i][j] = comps[i][j];
            m.components[j][i] = comps[i][j];
        }
    m.params = std::move(params);
    m.label = std::move(label);
    return m;
}

MetricJet metric_jet(const MetricField& m, const std::array<double, 4>& point) {
    MetricJet mj;
    mj.point = point;
    std::array<std::array<Jet3, 4>, 4> jets;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            jets[i][j] = eval_jet(m.components[i][j], point, m.params);
            jets[j][i] = jets[i][j];
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mj.g[i][j] = jets[i][j].v;
            for (int k = 0; k < 4; ++k) {
                mj.dg[k][i][j] = jets[i][j].g[k];
                for (int l = 0; l < 4; ++l) {
                    mj.d2g[k][l][i][j] = jets[i][j].h[k][l];
                    for (int p = 0; p < 4; ++p) mj.d3g[k][l][p][i][j] = jets[i][j].t[k][l][p];
                }
            }
        }

    double scale = mat4_max_abs(mj.g);
    double det = det4(mj.g);
    if (std::abs(det) < 1e-12 * scale * scale * scale * scale)
        throw DegenerateMetric(m.label + ": metric degenerate at sampled point (|det| = " +
                               std::to_string(det) + ")");
    mj.ginv = inverse4(mj.g, det);

    // d(g^-1) = -g^-1 (dg) g^-1 ;  d2(g^-1) by one more product-rule pass
    for (int k = 0; k < 4; ++k) {
        Mat4 t{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b)
                        t[i][j] -= mj.ginv[i][a] * mj.dg[k][a][b] * mj.ginv[b][j];
        mj.dginv[k] = t;
    }
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
            Mat4 t{};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double s = 0.0;
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b)
                            s -= mj.dginv[k][i][a] * mj.dg[l][a][b] * mj.ginv[b][j] +
                                 mj.ginv[i][a] * mj.d2g[k][l][a][b] * mj.ginv[b][j] +
                                 mj.ginv[i][a] * mj.dg[l][a][b] * mj.dginv[k][b][j];
                    t[i][j] = s;
                }
            mj.d2ginv[k][l] = t;
        }

    for (double ev : sym_eigenvalues4(mj.g)) {
        if (ev > 0.0)
            ++mj.sig_pos;
        else
            ++mj.sig_neg;
    }
    return mj;
}

void metric_as_tensor(const MetricJet& mj, Mat4& T, Ten3& dT) {
    T = mj.g;
    dT = mj.dg;
}

MetricField linear_change(const MetricField& m, const Mat4& A) {
    // x^i = A^i_a xi^a; components pull back as g'_{ab}(xi) = A^i_a A^j_b g_ij(A xi)
    std::array<Expr, 4> subs;
    for (int i = 0; i < 4; ++i) {
        Expr acc = ex_num(0.0);
        for (int a = 0; a < 4; ++a) acc = ex_add(acc, ex_mul(ex_num(A[i][a]), ex_var(a)));
        subs[i] = acc;
    }
    std::array<std::array<Expr, 4>, 4> comps{};
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            Expr acc = ex_num(0.0);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Expr gij = substitute_vars(m.components[i][j], subs);
                    acc = ex_add(acc, ex_mul(ex_num(A[i][a] * A[j][b]), gij));
                }
            comps[a][b] = acc;
        }
    return MetricField::from_components(comps, m.params, m.label + " (linear change)");
}

}  // namespace gsym
