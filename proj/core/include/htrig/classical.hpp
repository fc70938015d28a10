#pragma once

#include <vector>

#include "htrig/bsplines.hpp"

namespace htrig {

/// Classical trigonometric B-spline over non-decreasing knots, the h -> 0
/// limit of eval_T. Order 1 is 1/sin((x_{j+1} - x_j)/2) on [x_j, x_{j+1}),
/// higher orders stack through the two-term recurrence with weights
/// sin((x - x_j)/2) and sin((x_{j+m} - x)/2). The span must stay inside one
/// period: x_{j+m} - x_j < 2 pi (else WindowViolation). Serves as the
/// convergence reference for h-spline refinement studies.
double eval_T_classical(const std::vector<double>& knots, SplineIndex idx, double x);

}  // namespace htrig
