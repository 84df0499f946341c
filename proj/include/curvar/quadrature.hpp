#pragma once

// Adaptive Gauss-Kronrod (7-15) quadrature with a global error estimate.

#include <cstdint>
#include <functional>
#include <vector>

namespace curvar {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::int64_t evaluations = 0;
};

/// Integrates f over [a, b], bisecting the worst interval until the summed
/// Kronrod error estimate drops below max(abs_tol, rel_tol*|I|) or the
/// evaluation budget is exhausted. Throws QuadratureFailure in the latter
/// case. Handles integrable endpoint/log singularities via `split_points`
/// (interval boundaries placed at the singular locations).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, double rel_tol,
                              std::int64_t max_evaluations = 2'000'000,
                              const std::vector<double>& split_points = {});

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace curvar
