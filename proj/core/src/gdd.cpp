#include "htrig/gdd.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace htrig {

namespace {

constexpr double kTiny = 1e-300;  // pairing/pivot magnitudes below this count as zero

void require_order(int m, int cap, const char* who) {
    if (m > cap) {
        throw OrderOutOfRange(std::string(who) + ": order " + std::to_string(m) +
                              " exceeds the supported maximum " + std::to_string(cap));
    }
}

double require_real(const Complex& z, const char* who) {
    if (std::abs(z.imag()) > 1e-9 * std::abs(z.real()) + 1e-12) {
        throw ComplexResidue(std::string(who) + ": imaginary residue " +
                             std::to_string(z.imag()) + " against real part " +
                             std::to_string(z.real()));
    }
    return z.real();
}

/// Triangular recursion over explicit pairing values; v starts as the base
/// row f(x_i) and is collapsed in place.
template <typename D>
Complex dd_triangle(const std::vector<double>& xs, std::vector<Complex> v, D&& d) {
    const int m = static_cast<int>(xs.size()) - 1;
    for (int ord = 1; ord <= m; ++ord) {
        for (int i = 0; i + ord <= m; ++i) {
            const Complex den = d(xs[i], xs[i + ord]);
            if (std::abs(den) < kTiny) {
                throw SingularD("divided difference: pairing vanishes between x=" +
                                std::to_string(xs[i]) + " and x=" + std::to_string(xs[i + ord]));
            }
            v[i] = (v[i + 1] - v[i]) / den;
        }
    }
    return v[0];
}

std::vector<Complex> sample_nodes(const std::vector<double>& xs, const Evaluator& f) {
    std::vector<Complex> v;
    v.reserve(xs.size());
    for (double x : xs) {
        v.push_back(f(x));
    }
    return v;
}

/// Determinant by partial-pivot Gaussian elimination. Returns 0 for a
/// numerically singular matrix; the caller decides whether that is an error.
Complex det_inplace(std::vector<std::vector<Complex>>& a) {
    const int n = static_cast<int>(a.size());
    Complex det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[col][col]);
        for (int r = col + 1; r < n; ++r) {
            const double mag = std::abs(a[r][col]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < kTiny) {
            return {0.0, 0.0};
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
            }
        }
    }
    return det;
}

double sum_nodes(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    return s;
}

/// i^k for the (2i)^k prefactors.
Complex ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex dd_exp_lagrange(const NodeSet& nodes, const Evaluator& f) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= m; ++j) {
        Complex den{1.0, 0.0};
        for (int k = 0; k <= m; ++k) {
            if (k != j) {
                den *= cexp_h(p, xs[j]) - cexp_h(p, xs[k]);
            }
        }
        acc += f(xs[j]) / den;
    }
    return acc;
}

Complex dd_trig_lagrange(const NodeSet& nodes, const Evaluator& f) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= m; ++j) {
        double den = 1.0;
        for (int k = 0; k <= m; ++k) {
            if (k != j) {
                den *= sin_h(p, (xs[j] - xs[k]) / 2.0);
            }
        }
        acc += f(xs[j]) / den;
    }
    return acc;
}

/// Coefficients over the node window xs[lo..lo+r]; r >= 2.
ThreeTermCoeffs threeterm_at(const HParam& p, const std::vector<double>& xs, int lo, int r) {
    const double x0 = xs[lo];
    const double x1 = xs[lo + 1];
    const double xm1 = xs[lo + r - 1];
    const double xm = xs[lo + r];
    const double s_m0 = sin_h(p, (xm - x0) / 2.0);
    const double s_m1 = sin_h(p, (xm - x1) / 2.0);
    const double s_m10 = sin_h(p, (xm1 - x0) / 2.0);
    if (std::abs(s_m0) < kTiny || std::abs(s_m1) < kTiny || std::abs(s_m10) < kTiny) {
        throw SingularD("threeterm_coeffs: a node-gap h-sine vanishes");
    }
    ThreeTermCoeffs c{};
    c.gamma = 1.0 / (s_m0 * s_m1);
    c.beta = -sin_h(p, (xm + xm1 - x1 - x0) / 2.0) / (s_m0 * s_m1 * s_m10);
    c.alpha = 1.0 / (s_m0 * s_m10);
    return c;
}

/// Order parity ladder: evaluate the order-(0 or 1) Lagrange bases for every
/// subrange, then climb two orders at a time with the three-term recurrence.
Complex dd_trig_threeterm(const NodeSet& nodes, const Evaluator& f) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    const int base = m % 2;
    std::vector<Complex> v(static_cast<std::size_t>(m - base) + 1);
    for (int s = 0; s + base <= m; ++s) {
        if (base == 0) {
            v[s] = f(xs[s]);
        } else {
            const double den = sin_h(p, (xs[s + 1] - xs[s]) / 2.0);
            if (std::abs(den) < kTiny) {
                throw SingularD("dd_trig: node-gap h-sine vanishes");
            }
            v[s] = (f(xs[s + 1]) - f(xs[s])) / den;
        }
    }
    for (int r = base + 2; r <= m; r += 2) {
        for (int s = 0; s + r <= m; ++s) {
            const ThreeTermCoeffs c = threeterm_at(p, xs, s, r);
            v[s] = c.gamma * v[s + 2] + c.beta * v[s + 1] + c.alpha * v[s];
        }
    }
    return v[0];
}

Complex dd_trig_via_exp(const NodeSet& nodes, const Evaluator& f) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    /* exponent (m-1)/2 covers order 0 too, where mult_u's m >= 1 guard would
       reject the required -1/2 */
    const double c = (static_cast<double>(m) - 1.0) / 2.0;
    const Evaluator lifted = [&p, c, &f](double x) { return cexp_h(p, c * x) * f(x); };
    const Complex exp_dd = dd_exp(nodes, lifted, DDMethod::recursive);
    const Complex pref = std::pow(2.0, m) * ipow(m) * cexp_h(p, sum_nodes(xs) / 2.0);
    return pref * exp_dd;
}

}  // namespace

NodeSet::NodeSet(std::vector<double> nodes, const HParam& p) : nodes_(std::move(nodes)), p_(p) {
    if (nodes_.empty()) {
        throw std::invalid_argument("NodeSet: at least one node is required");
    }
    for (double x : nodes_) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("NodeSet: nodes must be finite");
        }
    }
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (nodes_[i + 1] == nodes_[i]) {
            throw SingularD("NodeSet: repeated node " + std::to_string(nodes_[i]));
        }
        if (nodes_[i + 1] < nodes_[i]) {
            throw std::invalid_argument("NodeSet: nodes must be strictly increasing");
        }
    }
    require_order(order(), kMaxOrder, "NodeSet");
    const double span = nodes_.back() - nodes_.front();
    if (span >= p_.window() * (1.0 - kWindowMargin)) {
        throw WindowViolation("NodeSet: span " + std::to_string(span) +
                              " reaches the period window " + std::to_string(p_.window()));
    }
}

Complex generic_dd(const GammaPair& gp, const NodeSet& nodes, const Evaluator& f) {
    return dd_triangle(nodes.nodes(), sample_nodes(nodes.nodes(), f),
                       [&gp](double a, double b) { return gp.d(a, b); });
}

Complex dd_exp(const NodeSet& nodes, const Evaluator& f, DDMethod method) {
    if (method == DDMethod::lagrange) {
        return dd_exp_lagrange(nodes, f);
    }
    const HParam& p = nodes.param();
    return dd_triangle(nodes.nodes(), sample_nodes(nodes.nodes(), f),
                       [&p](double a, double b) { return cexp_h(p, b) - cexp_h(p, a); });
}

double dd_trig(const NodeSet& nodes, const Evaluator& f, TrigDDMethod method) {
    Complex z;
    switch (method) {
        case TrigDDMethod::lagrange: z = dd_trig_lagrange(nodes, f); break;
        case TrigDDMethod::via_exp: z = dd_trig_via_exp(nodes, f); break;
        default: z = dd_trig_threeterm(nodes, f); break;
    }
    return require_real(z, "dd_trig");
}

Complex dd_det_oracle(const NodeSet& nodes, const Evaluator& f, Flavor flavor) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    const int m = nodes.order();
    require_order(m, 8, "dd_det_oracle");
    const int n = m + 1;

    std::vector<std::vector<Complex>> num(n, std::vector<Complex>(n));
    std::vector<std::vector<Complex>> den(n, std::vector<Complex>(n));
    double scale = 1.0;

    if (flavor == Flavor::exp) {
        for (int r = 0; r < n; ++r) {
            for (int k = 0; k < m; ++k) {
                num[r][k] = cexp_h(p, k * xs[r]);
                den[r][k] = num[r][k];
            }
            num[r][m] = f(xs[r]);
            den[r][m] = cexp_h(p, m * xs[r]);
        }
    } else if (m % 2 == 1) {
        /* odd m = 2q+1: integer frequencies with constant vs half-integer */
        const int q = (m - 1) / 2;
        for (int r = 0; r < n; ++r) {
            num[r][0] = {1.0, 0.0};
            for (int k = 1; k <= q; ++k) {
                num[r][2 * k - 1] = {cos_h(p, k * xs[r]), 0.0};
                num[r][2 * k] = {sin_h(p, k * xs[r]), 0.0};
            }
            num[r][m] = f(xs[r]);
            for (int k = 1; k <= q + 1; ++k) {
                const double t = (k - 0.5) * xs[r];
                den[r][2 * k - 2] = {cos_h(p, t), 0.0};
                den[r][2 * k - 1] = {sin_h(p, t), 0.0};
            }
        }
        scale = std::pow(2.0, m - 1);
    } else {
        /* even m = 2q: half-integer frequencies vs integer with constant */
        const int q = m / 2;
        for (int r = 0; r < n; ++r) {
            for (int k = 1; k <= q; ++k) {
                const double t = (k - 0.5) * xs[r];
                num[r][2 * k - 2] = {cos_h(p, t), 0.0};
                num[r][2 * k - 1] = {sin_h(p, t), 0.0};
            }
            num[r][m] = f(xs[r]);
            den[r][0] = {1.0, 0.0};
            for (int k = 1; k <= q; ++k) {
                den[r][2 * k - 1] = {cos_h(p, k * xs[r]), 0.0};
                den[r][2 * k] = {sin_h(p, k * xs[r]), 0.0};
            }
        }
        scale = std::pow(2.0, m);
    }

    const Complex det_den = det_inplace(den);
    if (std::abs(det_den) < kTiny) {
        throw SingularMatrix("dd_det_oracle: collocation determinant vanishes");
    }
    const Complex det_num = det_inplace(num);
    return scale * det_num / det_den;
}

Complex vandermonde_h(const NodeSet& nodes) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    Complex acc{1.0, 0.0};
    for (std::size_t j = 0; j < xs.size(); ++j) {
        for (std::size_t k = j + 1; k < xs.size(); ++k) {
            acc *= cexp_h(p, xs[k]) - cexp_h(p, xs[j]);
        }
    }
    return acc;
}

ThreeTermCoeffs threeterm_coeffs(const NodeSet& nodes) {
    const int m = nodes.order();
    if (m < 2) {
        throw OrderOutOfRange("threeterm_coeffs: order must be >= 2, got " + std::to_string(m));
    }
    return threeterm_at(nodes.param(), nodes.nodes(), 0, m);
}

}  // namespace htrig
