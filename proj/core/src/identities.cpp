#include "htrig/identities.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace htrig {

namespace {

void require_chain_order(int m, const char* who) {
    if (m < 0 || m > kMaxOrder) {
        throw OrderOutOfRange(std::string(who) + ": order " + std::to_string(m) +
                              " outside [0, " + std::to_string(kMaxOrder) + "]");
    }
}

/// Factor frequencies c_j, so that each chain factor is
/// (hderiv - lambda_j I) with lambda_j = (cexp_h(c_j h) - 1)/h.
double factor_freq(const OpChain& c, int j) {
    return (c.flavor == Flavor::exp)
               ? static_cast<double>(j)
               : static_cast<double>(j) - (static_cast<double>(c.m) - 1.0) / 2.0;
}

Complex ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

MarsdenWindow::MarsdenWindow(const KnotVector& kv, int m, int k, int r)
    : kv_(kv), m_(m), k_(k), r_(r) {
    if (m < 1 || m > kMaxOrder) {
        throw OrderOutOfRange("MarsdenWindow: order " + std::to_string(m) + " outside [1, " +
                              std::to_string(kMaxOrder) + "]");
    }
    if (k < 0 || r <= k || r >= kv.count()) {
        throw std::invalid_argument("MarsdenWindow: need 0 <= k < r < knot count");
    }
    const auto& t = kv.knots();
    if (!(t[static_cast<std::size_t>(k)] < t[static_cast<std::size_t>(r)])) {
        throw std::invalid_argument("MarsdenWindow: evaluation interval (x_k, x_r) is empty");
    }
    if (k < m - 1 || r > kv.count() - m) {
        throw InsufficientKnots("MarsdenWindow: order " + std::to_string(m) +
                                " needs m knots on each side of the window, got k=" +
                                std::to_string(k) + ", r=" + std::to_string(r) + " with " +
                                std::to_string(kv.count()) + " knots");
    }
}

double marsden_residual(const MarsdenWindow& w, double x, double y, Flavor flavor) {
    if (!(w.lo() < x && x < w.hi())) {
        throw std::domain_error("marsden_residual: x = " + std::to_string(x) +
                                " outside the open window (" + std::to_string(w.lo()) + ", " +
                                std::to_string(w.hi()) + ")");
    }
    const KnotVector& kv = w.knots();
    const auto& t = kv.knots();
    const HParam& p = kv.param();
    const int m = w.order();

    /* untruncated h-power of the kernel in x */
    Complex lhs{1.0, 0.0};
    for (int l = 0; l <= m - 2; ++l) {
        const double base = x - static_cast<double>(l) * p.h();
        lhs *= (flavor == Flavor::trig) ? Complex{sin_h(p, (y - base) / 2.0), 0.0}
                                        : cexp_h(p, y) - cexp_h(p, base);
    }

    Complex rhs{0.0, 0.0};
    for (int j = w.k() - m + 1; j <= w.r() - 1; ++j) {
        Complex kernel{1.0, 0.0};
        for (int l = 1; l <= m - 1; ++l) {
            const double knot = t[static_cast<std::size_t>(j + l)];
            kernel *= (flavor == Flavor::trig) ? Complex{sin_h(p, (y - knot) / 2.0), 0.0}
                                               : cexp_h(p, y) - cexp_h(p, knot);
        }
        rhs += eval_tilde(kv, {j, m}, x, flavor) * kernel;
    }
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

Evaluator apply_op(const OpChain& c, const HParam& p, Evaluator f) {
    require_chain_order(c.m, "apply_op");
    Evaluator g = std::move(f);
    for (int j = c.m - 1; j >= 0; --j) {
        const Complex lambda = (cexp_h(p, factor_freq(c, j) * p.h()) - 1.0) / p.h();
        g = [p, lambda, inner = std::move(g)](double x) {
            return (inner(x + p.h()) - inner(x)) / p.h() - lambda * inner(x);
        };
    }
    return g;
}

std::vector<Complex> op_stencil(const OpChain& c, const HParam& p) {
    require_chain_order(c.m, "op_stencil");
    /* each factor is (S - mu_j I)/h in terms of the shift S: f -> f(.+h) */
    std::vector<Complex> w{Complex{1.0, 0.0}};
    for (int j = 0; j < c.m; ++j) {
        const Complex mu = cexp_h(p, factor_freq(c, j) * p.h());
        std::vector<Complex> next(w.size() + 1, Complex{0.0, 0.0});
        for (std::size_t k = 0; k < w.size(); ++k) {
            next[k + 1] += w[k];
            next[k] -= mu * w[k];
        }
        w = std::move(next);
    }
    const double hm = std::pow(p.h(), c.m);
    for (auto& wk : w) {
        wk /= hm;
    }
    return w;
}

Evaluator apply_op_stencil(const OpChain& c, const HParam& p, Evaluator f) {
    auto weights = op_stencil(c, p);
    return [p, weights = std::move(weights), g = std::move(f)](double x) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < weights.size(); ++k) {
            acc += weights[k] * g(x + static_cast<double>(k) * p.h());
        }
        return acc;
    };
}

double operator_relation_residual(int m, const HParam& p, const Evaluator& f, double x) {
    if (m < 1 || m > kMaxOrder) {
        throw OrderOutOfRange("operator_relation_residual: order " + std::to_string(m) +
                              " outside [1, " + std::to_string(kMaxOrder) + "]");
    }
    const Complex lhs = apply_op_stencil({Flavor::trig, m}, p, f)(x);
    const Evaluator conjugated =
        mult_u(m, p, apply_op_stencil({Flavor::exp, m}, p, mult_u(m, p, f)), /*tilde=*/true);
    const double cm2 = static_cast<double>(m * (m - 1)) / 2.0;
    const Complex rhs = cexp_h(p, -cm2 * p.h()) * conjugated(x);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

Complex a_coeff(int k, const HParam& p) {
    if (k < 0) {
        throw OrderOutOfRange("a_coeff: order must be >= 0, got " + std::to_string(k));
    }
    if (k == 0) {
        return {1.0, 0.0};
    }
    Complex acc = std::pow(cexp_h(p, p.h()) / p.h(), k);
    for (int l = 1; l <= k; ++l) {
        acc *= 1.0 - cexp_h(p, -static_cast<double>(l) * p.h());
    }
    return acc;
}

Complex dd_integral(const NodeSet& nodes, const Evaluator& f, Flavor flavor) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    if (m < 1) {
        throw OrderOutOfRange("dd_integral: order must be >= 1, got " + std::to_string(m));
    }
    for (double xj : xs) {
        const double steps = (xj - xs.front()) / p.h();
        const long long n = std::llround(steps);
        if (n < 0 || std::abs(steps - static_cast<double>(n)) > kGridTol) {
            throw GridMisalignment("dd_integral: node " + std::to_string(xj) +
                                   " is not on the nonnegative h-grid of x_0 = " +
                                   std::to_string(xs.front()));
        }
    }

    const KnotVector kv(xs, p);
    const double shift = static_cast<double>(m - 1) * p.h();
    const Evaluator chained = apply_op_stencil({flavor, m}, p, f);

    Evaluator integrand;
    if (flavor == Flavor::exp) {
        integrand = [&](double y) {
            return cexp_h(p, -(static_cast<double>(m) - 1.0) * y) *
                   eval_E(kv, {0, m}, y, EvalMethod::recurrence) * chained(y - shift);
        };
    } else {
        integrand = [&](double y) {
            return eval_T(kv, {0, m}, y, EvalMethod::recurrence) * chained(y - shift);
        };
    }
    const Complex integral = hintegral(integrand, xs.front(), xs.back(), p);
    if (flavor == Flavor::exp) {
        return integral / a_coeff(m - 1, p);
    }
    const Complex pref = std::pow(2.0, m - 1) * ipow(m - 1) *
                         cexp_h(p, -static_cast<double>((m - 1) * (m - 4)) * p.h() / 4.0);
    return pref * integral / a_coeff(m - 1, p);
}

}  // namespace htrig
