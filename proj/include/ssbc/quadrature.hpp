#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace ssbc::quadrature {

/// Outcome of an adaptive integration. `converged` implies
/// `error_estimate <= abs_tol` for the requested tolerance.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (15/7) integration of f over [a, b].
/// Subdivides the interval with the largest local error until the global
/// estimate drops below abs_tol or the evaluation budget is exhausted.
QuadResult integrate_finite(const std::function<double(double)>& f, double a,
                            double b, double abs_tol,
                            long max_evals = 1'000'000);

/// Integral of f over [a, inf) via the substitution t = a + u/(1-u).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double a, double abs_tol,
                                   long max_evals = 1'000'000);

/// Smallest x >= lo with f(x) = target, for non-decreasing f.
/// Brackets by doubling, then bisects until the interval width falls below
/// rel_tol * (1 + x). Throws std::runtime_error on bracket or convergence
/// failure and std::logic_error if f is detected to be decreasing.
double find_root_increasing(const std::function<double(double)>& f,
                            double target, double lo, double rel_tol);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace ssbc::quadrature
