#pragma once

#include <vector>

#include "htrig/gdd.hpp"
#include "htrig/hcalc.hpp"

namespace htrig {

/// Non-decreasing knot sequence bound to a step parameter. Repeated knots
/// are allowed; spline spans containing them follow the convention that a
/// basis function with x_{j+m} = x_j is identically zero.
class KnotVector {
public:
    KnotVector(std::vector<double> knots, const HParam& p);

    const std::vector<double>& knots() const noexcept { return knots_; }
    const HParam& param() const noexcept { return p_; }
    int count() const noexcept { return static_cast<int>(knots_.size()); }

private:
    std::vector<double> knots_;
    HParam p_;
};

/// Basis function selector: first knot index j and order m (support spans
/// knots x_j .. x_{j+m}, closed on the left and open on the right).
struct SplineIndex {
    int j;
    int m;
};

/// definition: divided difference of the truncated kernel in its second
///   argument (requires strictly increasing knots on the span).
/// recurrence: two-term order recursion; exact zero outside the support.
/// from_e: the trig basis as a modulated multiple of the exponential one
///   (eval_T only).
enum class EvalMethod { definition, recurrence, from_e };

enum class DerivMethod { formula, direct };

/// Exponential h-B-spline E_{j,m}(x). Order 1 is the reciprocal of
/// cexp_h(x_{j+1}) - cexp_h(x_j) on [x_j, x_{j+1}) and zero elsewhere.
/// Throws OrderOutOfRange for m < 1, m > kMaxOrder or j+m outside the knot
/// vector, WindowViolation when the span reaches the period window.
Complex eval_E(const KnotVector& kv, SplineIndex idx, double x,
               EvalMethod method = EvalMethod::recurrence);

/// Trigonometric h-B-spline T_{j,m}(x), real-valued. The from_e method
/// checks |Im| <= 1e-10 (1 + |Re|) and throws ComplexResidue beyond that.
double eval_T(const KnotVector& kv, SplineIndex idx, double x,
              EvalMethod method = EvalMethod::recurrence);

/// Forward h-derivative of E_{j,m}, m >= 2. The formula method uses the
/// two-term lowered-order expression, which agrees with the direct
/// difference quotient whenever no knot lies strictly inside the open step
/// interval between x and x+h (always true on h-grids); direct evaluates
/// (E(x+h) - E(x))/h.
Complex hderiv_E(const KnotVector& kv, SplineIndex idx, double x,
                 DerivMethod method = DerivMethod::formula);

/// Forward h-derivative of T_{j,m}, m >= 2, same step-interval condition as
/// hderiv_E for the formula method. The formula's prefactor is assembled in
/// complex form and checked for realness like eval_T's from_e method.
double hderiv_T(const KnotVector& kv, SplineIndex idx, double x,
                DerivMethod method = DerivMethod::formula);

/// Normalized variants: Flavor::exp scales E_{j,m} by
/// cexp_h(x_{j+m}) - cexp_h(x_j), Flavor::trig scales T_{j,m} by
/// sin_h((x_{j+m} - x_j)/2). These stay bounded as knots coalesce.
Complex eval_tilde(const KnotVector& kv, SplineIndex idx, double x, Flavor flavor);

}  // namespace htrig
