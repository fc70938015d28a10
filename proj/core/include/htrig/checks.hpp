#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "htrig/hcalc.hpp"

namespace htrig::checks {

/// Deterministic cross-platform generator. mt19937_64 has a fully specified
/// sequence; the uniform mapping is spelled out here because the standard
/// distribution classes may differ between implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [lo, hi]. Modulo bias is irrelevant at these sizes.
    int pick(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

/// Accumulated scaled residuals of one check family.
struct ResidualStats {
    int cases = 0;
    double max_residual = 0.0;
    double sum = 0.0;

    void add(double r) {
        ++cases;
        sum += r;
        if (!(r <= max_residual)) {  // NaN promotes to max
            max_residual = r;
        }
    }

    double mean() const { return cases > 0 ? sum / cases : 0.0; }
};

/// Every check below draws its randomness from the given seed only (same
/// seed, same residuals, bit for bit) and returns residuals already divided
/// by the scale named in its comment. Counts are lower-bounded at 1.

/// Pointwise identity battery for the h-trigonometric functions: the
/// Pythagorean identity, addition and double-angle formulas, parity,
/// periodicity, unit modulus of cexp_h, the half-angle product forms of
/// cexp differences and sums, h-sine zeros, and the forward-difference
/// eigenrelation of cexp_h. Absolute residuals (all terms are order 1).
ResidualStats check_identities(const HParam& p, std::uint64_t seed, int points);

/// Pairwise agreement of all divided-difference methods (recursive,
/// explicit sum, determinant oracle for both flavors; the three-term
/// recurrence for the trig flavor), scaled by max(1, |a|, |b|).
ResidualStats check_dd_triangle(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// Residual of the order-m differences on their m-dimensional kernels,
/// scaled by the explicit-sum sensitivity sum_j 1/prod_k |d(x_j, x_k)|.
ResidualStats check_dd_annihilation(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// |dd_exp(cexp_h(i m x)) - 1|, the leading-coefficient normalization.
ResidualStats check_dd_leading(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// Product-rule residual: dd(fg) against the bilinear sum of split-range
/// differences, scaled by max(1, |lhs|, sum_k |term_k|).
ResidualStats check_dd_leibniz(const HParam& p, std::uint64_t seed, int pairs, int max_m);

/// Pairwise agreement of the basis evaluation methods (definition,
/// recurrence, modulated-exponential bridge), scaled by max(1, sup of the
/// basis magnitude over its support).
ResidualStats check_bspline_methods(const HParam& p, std::uint64_t seed, int instances,
                                    int max_m);

/// Exact-zero support: recurrence evaluations outside [x_j, x_{j+m}) must
/// be exactly 0.0; the residual is an indicator (0 passes, 1 fails).
ResidualStats check_bspline_support(const HParam& p, std::uint64_t seed, int points, int max_m);

/// Agreement of the normalized trig basis with the modulated normalized
/// exponential basis, scaled like check_bspline_methods.
ResidualStats check_tilde_bridge(const HParam& p, std::uint64_t seed, int instances, int max_m);

/// Two-term derivative formula against the direct difference quotient at
/// points whose step interval (x, x+h) contains no knot, scaled by
/// max(1, |formula|, |direct|).
ResidualStats check_derivatives(const HParam& p, std::uint64_t seed, int instances, int max_m);

/// Kernel-reproduction residual over random windows, points and kernel
/// parameters; already scaled by 1 + |lhs| (see marsden_residual).
ResidualStats check_marsden(const HParam& p, std::uint64_t seed, int pairs, int max_m,
                            Flavor flavor);

/// Factor-chain annihilation of the matching h-exponential kernels, scaled
/// by the stencil weight mass sum_k |w_k|.
ResidualStats check_operator_kernels(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// Residual of the modulation conjugation between the two factor chains,
/// scaled by max(1, |lhs|, |rhs|).
ResidualStats check_operator_conjugation(const HParam& p, std::uint64_t seed, int sets,
                                         int max_m);

/// Trig chain applied to a trig basis piece inside a knot gap longer than
/// m|h|, scaled by the weight mass times the basis sup. Orders that cannot
/// fit such a gap inside the period window are skipped.
ResidualStats check_piece_annihilation(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// h-integral reconstruction of both divided differences on aligned grids,
/// scaled by max(1, |a|, |b|). Returns zero cases when h < 0: the required
/// nonnegative grid cannot hold increasing nodes there.
ResidualStats check_integrals(const HParam& p, std::uint64_t seed, int sets, int max_m);

/// One suite outcome. passed is computed per check family against that
/// family's own tolerance; tol echoes the loosest family tolerance (or the
/// override). samples counts recorded residuals across all families.
struct CheckReport {
    std::string suite;
    double h = 0.0;
    std::uint64_t seed = 0;
    int samples = 0;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double tol = 0.0;
    bool passed = false;
};

struct Options {
    std::uint64_t seed = 42;
    int samples = 1000;                 // scales every family's case count
    std::optional<double> tol;          // replaces every family tolerance
};

/// Suite registry: trig-identities, dd-oracles, bspline-equiv, derivatives,
/// marsden, operators, integrals.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

CheckReport run_suite(const std::string& suite, const HParam& p, const Options& opt = {});

}  // namespace htrig::checks
