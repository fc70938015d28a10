#pragma once

#include <vector>

#include "htrig/hcalc.hpp"

namespace htrig {

/// Strictly increasing divided-difference nodes bound to a step parameter.
/// Repeated nodes are rejected with SingularD (the pairing determinant would
/// vanish); spans covering a full period are rejected with WindowViolation.
class NodeSet {
public:
    NodeSet(std::vector<double> nodes, const HParam& p);

    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const HParam& param() const noexcept { return p_; }

    /// Difference order m; the set holds m+1 nodes.
    int order() const noexcept { return static_cast<int>(nodes_.size()) - 1; }

private:
    std::vector<double> nodes_;
    HParam p_;
};

/// Two-function system defining a generalized divided difference through the
/// pairing d(x1, x2) = gamma1(x1) gamma2(x2) - gamma1(x2) gamma2(x1).
struct GammaPair {
    Evaluator gamma1;
    Evaluator gamma2;

    Complex d(double x1, double x2) const {
        return gamma1(x1) * gamma2(x2) - gamma1(x2) * gamma2(x1);
    }
};

/// Coefficients of the three-term recurrence that lowers a trig divided
/// difference of order m to orders m-2 (alpha multiplies the low block
/// [x_0..x_{m-2}], gamma the high block [x_2..x_m]).
struct ThreeTermCoeffs {
    double alpha;
    double beta;
    double gamma;
};

enum class DDMethod { recursive, lagrange };
enum class TrigDDMethod { lagrange, via_exp, threeterm };

/// Generalized divided difference over the gamma system, computed by the
/// triangular recursion
/// [x_i..x_{i+r}] = ([x_{i+1}..x_{i+r}] - [x_i..x_{i+r-1}]) / d(x_i, x_{i+r})
/// with base row [x_i] = f(x_i). Throws SingularD when a pairing value
/// vanishes.
Complex generic_dd(const GammaPair& gp, const NodeSet& nodes, const Evaluator& f);

/// Divided difference with respect to the complex h-exponential system
/// (gamma1 = 1, gamma2 = cexp_h). recursive uses the triangular recursion,
/// lagrange the explicit sum f(x_j) / prod_{k != j} (cexp(x_j) - cexp(x_k)).
Complex dd_exp(const NodeSet& nodes, const Evaluator& f, DDMethod method = DDMethod::recursive);

/// Divided difference with respect to the h-sine pairing
/// sin_h((x_j - x_k)/2). Real whenever f is real-valued; the computed
/// imaginary residue must satisfy |Im| <= 1e-9 |Re| + 1e-12 or
/// ComplexResidue is thrown (via_exp legitimately accumulates a small one).
/// threeterm applies the order-lowering recurrence down to order 0/1 base
/// cases; via_exp modulates f by a half-integer frequency and reuses the
/// exponential difference.
double dd_trig(const NodeSet& nodes, const Evaluator& f,
               TrigDDMethod method = TrigDDMethod::lagrange);

/// Determinant-ratio oracle for both divided differences: the ratio of two
/// collocation determinants over the nodes, with basis columns chosen by
/// flavor and order parity. Slow (dense elimination) and limited to m <= 8;
/// intended as an independent cross-check. The trig flavor is real up to
/// roundoff but is returned as computed.
Complex dd_det_oracle(const NodeSet& nodes, const Evaluator& f, Flavor flavor);

/// prod_{j < k} (cexp_h(x_k) - cexp_h(x_j)), the collocation determinant of
/// the h-exponential powers e_h(i k x), k = 0..m.
Complex vandermonde_h(const NodeSet& nodes);

/// Three-term recurrence coefficients for the full node set (m >= 2).
ThreeTermCoeffs threeterm_coeffs(const NodeSet& nodes);

}  // namespace htrig
