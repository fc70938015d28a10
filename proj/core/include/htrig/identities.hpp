#pragma once

#include <vector>

#include "htrig/bsplines.hpp"
#include "htrig/gdd.hpp"
#include "htrig/hcalc.hpp"

namespace htrig {

/// Index window (k, r) on a knot vector over which the normalized basis
/// functions of order m reproduce the h-power kernels: the identity holds
/// for x in (x_k, x_r) and needs m knots at or below x_k and m knots at or
/// above x_r (k >= m-1 and r <= count - m, else InsufficientKnots).
class MarsdenWindow {
public:
    MarsdenWindow(const KnotVector& kv, int m, int k, int r);

    const KnotVector& knots() const noexcept { return kv_; }
    int order() const noexcept { return m_; }
    int k() const noexcept { return k_; }
    int r() const noexcept { return r_; }

    /// Open evaluation interval (x_k, x_r).
    double lo() const noexcept { return kv_.knots()[static_cast<std::size_t>(k_)]; }
    double hi() const noexcept { return kv_.knots()[static_cast<std::size_t>(r_)]; }

private:
    KnotVector kv_;
    int m_;
    int k_;
    int r_;
};

/// Kernel-reproduction residual at (x, y): |lhs - rhs| / (1 + |lhs|) where
/// lhs is the order-(m-1) h-power of the flavor kernel in x and rhs the sum
/// of normalized basis functions times the same kernel evaluated at the
/// interior knots. Requires x in the open window (else std::domain_error);
/// y is a free parameter. Zero up to roundoff for every admissible input.
double marsden_residual(const MarsdenWindow& w, double x, double y, Flavor flavor);

/// Chain of m first-order factors (hderiv - lambda_j I) with frequencies
/// j (exp flavor) or j - (m-1)/2 (trig flavor), j = 0..m-1. The exp chain
/// annihilates the h-exponentials e_h(i j x); the trig chain annihilates
/// the half-integer modulated family underlying the trig basis.
struct OpChain {
    Flavor flavor;
    int m;
};

/// Apply the factor chain one first-order difference at a time (rightmost
/// factor first). Evaluation cost grows as 2^m per point; use the stencil
/// form for repeated evaluation.
Evaluator apply_op(const OpChain& c, const HParam& p, Evaluator f);

/// Expanded stencil weights w_0..w_m of the same chain: (chain f)(x) =
/// sum_k w_k f(x + k h). Exact expansion, not a numerical approximation.
std::vector<Complex> op_stencil(const OpChain& c, const HParam& p);

/// Apply the chain through its stencil weights (m+1 evaluations of f).
Evaluator apply_op_stencil(const OpChain& c, const HParam& p, Evaluator f);

/// Residual of the conjugation identity linking the two chains of order m:
/// trig chain = cexp_h(-C(m,2) h) * (demodulate . exp chain . modulate),
/// evaluated at x and scaled by max(1, |lhs|, |rhs|).
double operator_relation_residual(int m, const HParam& p, const Evaluator& f, double x);

/// Leading normalization constant of order k: 1 for k = 0, otherwise
/// (cexp_h(h)/h)^k prod_{l=1..k} (1 - cexp_h(-l h)).
Complex a_coeff(int k, const HParam& p);

/// Peano-type reconstruction of the order-m divided difference as an
/// h-integral of the basis function against the factor chain of matching
/// flavor. Requires every node to sit on the h-grid of the first node,
/// (x_j - x_0)/h in {0, 1, 2, ...} within kGridTol (else GridMisalignment;
/// unsatisfiable for h < 0 with increasing nodes). For the trig flavor f
/// should be real-valued, mirroring dd_trig.
Complex dd_integral(const NodeSet& nodes, const Evaluator& f, Flavor flavor);

}  // namespace htrig
