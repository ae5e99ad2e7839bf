#pragma once

#include <string>

#include "gsym/expr.hpp"
#include "gsym/linalg.hpp"

namespace gsym {

struct DegenerateMetric : std::runtime_error {
    explicit DegenerateMetric(const std::string& what) : std::runtime_error(what) {}
};

/// Symmetric 4x4 array of component expressions plus bound parameters.
struct MetricField {
    std::array<std::array<Expr, 4>, 4> components;
    ParamEnv params;
    std::string label;

    /// Symmetrizes at load: missing lower-triangle entries are mirrored,
    /// present ones must match the upper triangle structurally.
    static MetricField from_components(std::array<std::array<Expr, 4>, 4> comps, ParamEnv params,
                                       std::string label);
};

/// Pointwise metric with coordinate partials to order 3 and the data
/// derived from them (inverse with partials, signature).
struct MetricJet {
    Mat4 g{};
    Ten3 dg{};    // dg[k][i][j]   = d_k g_ij
    Ten4 d2g{};   // d2g[k][l][i][j]
    Ten5 d3g{};   // d3g[k][l][m][i][j]
    Mat4 ginv{};
    Ten3 dginv{};
    Ten4 d2ginv{};
    int sig_pos = 0;
    int sig_neg = 0;
    std::array<double, 4> point{};
};

/// Evaluates all component jets at `point` and assembles the MetricJet.
/// Throws DegenerateMetric when |det g| < 1e-12 * (max |g_ij|)^4.
MetricJet metric_jet(const MetricField& m, const std::array<double, 4>& point);

/// g itself presented as a constant two-tensor with vanishing partials,
/// in the shape covariant_derivative expects (for the metricity check).
void metric_as_tensor(const MetricJet& mj, Mat4& T, Ten3& dT);

/// The metric field pulled back through the constant linear change of
/// coordinates x = A xi (AST-level substitution).
MetricField linear_change(const MetricField& m, const Mat4& A);

}  // namespace gsym
