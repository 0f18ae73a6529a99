#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace swmod {

// Adaptive (G7, K15) Gauss-Kronrod integration with globally greedy interval
// refinement. Deterministic: the refinement order depends only on the
// integrand values. Throws QuadratureNonConvergence when the interval budget
// is exhausted before err <= max(rel_tol * |I|, abs_floor).
double integrate_gk(const std::function<double(double)>& f, double a, double b,
                    double rel_tol, double abs_floor = 0.0, int max_intervals = 4096);

std::complex<double> integrate_gk(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, double rel_tol, double abs_floor = 0.0,
                                  int max_intervals = 4096);

// Gauss-Hermite rule for integral of exp(-x^2) f(x) over the real line:
// sum_i weights[i] * f(nodes[i]). Nodes ascending and symmetric.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int node_count);

}  // namespace swmod
