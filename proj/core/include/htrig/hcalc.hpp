#pragma once

#include <complex>
#include <functional>

#include "htrig/errors.hpp"

namespace htrig {

using Complex = std::complex<double>;

/// Pointwise function of a real variable. All operators in this library
/// consume and produce Evaluators, so they compose freely.
using Evaluator = std::function<Complex(double)>;

inline constexpr double kGridTol = 1e-9;        // grid alignment tolerance
inline constexpr double kWindowMargin = 1e-12;  // relative window safety margin

/// Maximum spline/difference order accepted by the evaluators. Override at
/// configure time with -DHTRIG_MAX_ORDER=<n> if deeper recursions are needed.
#ifndef HTRIG_MAX_ORDER
#define HTRIG_MAX_ORDER 12
#endif
inline constexpr int kMaxOrder = HTRIG_MAX_ORDER;

/// Step parameter h with its derived frequency omega = ln(1+h)/h.
/// Admissible range: h > -1 and h != 0 (omega is then positive and finite).
class HParam {
public:
    explicit HParam(double h);

    double h() const noexcept { return h_; }
    double omega() const noexcept { return omega_; }

    /// Common period of the h-trigonometric functions: 2*pi/omega.
    double window() const noexcept;

private:
    double h_;
    double omega_;       // ln(1+h)/h, computed via log1p
    double omega_log2_;  // omega/ln2; exp_h routes through exp2 (see exp_h)

    friend double exp_h(const HParam&, double);
};

/// h-exponential (1+h)^(x/h) = 2^(x*omega/ln2). The base-2 form keeps the
/// integer cases exact (h=1: exp_h(n) = 2^n bit for bit) and is as accurate
/// as exp(x*omega) elsewhere.
double exp_h(const HParam& p, double x);

/// Complex h-exponential (1+h)^(ix/h) = cos_h(x) + i sin_h(x).
Complex cexp_h(const HParam& p, double x);

/// h-sine sin(x*omega). Vanishes exactly at multiples of pi/omega.
double sin_h(const HParam& p, double x);

/// h-cosine cos(x*omega).
double cos_h(const HParam& p, double x);

/// Forward h-difference (f(x+h) - f(x))/h.
Complex hderiv(const Evaluator& f, const HParam& p, double x);

/// h-integral of f over [a, b]. Requires (b-a)/h within kGridTol of an
/// integer n (else GridMisalignment). For n >= 0 this is the left Riemann
/// sum h*sum_{j<n} f(a+jh); for n < 0 it is the negated sum from b, the
/// orientation that preserves the fundamental theorem for -1 < h < 0.
Complex hintegral(const Evaluator& f, double a, double b, const HParam& p);

/// h-power f(x)*f(x-h)*...*f(x-(m-1)h); m = 0 gives 1. Requires m >= 0.
Complex hpow_eval(const Evaluator& f, int m, const HParam& p, double x);

/// Kernel family selector. exp uses the complex h-exponential, trig the
/// h-sine of half the argument difference.
enum class Flavor { exp, trig };

/// Truncated kernel of order m >= 1 in y with shift base x: zero for
/// y <= x, and for y > x the h-power product over l = 0..m-2 of
///   trig:  sin_h((y - (x - l h))/2)
///   exp:   cexp_h(y) - cexp_h(x - l h)
/// (m = 1 gives the step function 1_{y > x}).
Complex trunc_power(const HParam& p, int m, double x, double y, Flavor flavor);

/// Modulation by a half-integer frequency: returns x -> e_h(i c x) * f(x)
/// with c = (m-1)/2, or c = -(m-1)/2 when tilde is set. Requires m >= 1.
Evaluator mult_u(int m, const HParam& p, Evaluator f, bool tilde = false);

}  // namespace htrig
