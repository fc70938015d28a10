#include "htrig/hcalc.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace htrig {

HParam::HParam(double h) : h_(h) {
    if (!std::isfinite(h) || h <= -1.0 || h == 0.0) {
        throw std::invalid_argument("HParam: h must be finite, > -1 and != 0, got " +
                                    std::to_string(h));
    }
    omega_ = std::log1p(h) / h;
    omega_log2_ = omega_ / std::numbers::ln2;
}

double HParam::window() const noexcept {
    return 2.0 * std::numbers::pi / omega_;
}

double exp_h(const HParam& p, double x) {
    return std::exp2(x * p.omega_log2_);
}

Complex cexp_h(const HParam& p, double x) {
    const double t = x * p.omega();
    return {std::cos(t), std::sin(t)};
}

double sin_h(const HParam& p, double x) {
    return std::sin(x * p.omega());
}

double cos_h(const HParam& p, double x) {
    return std::cos(x * p.omega());
}

Complex hderiv(const Evaluator& f, const HParam& p, double x) {
    return (f(x + p.h()) - f(x)) / p.h();
}

Complex hintegral(const Evaluator& f, double a, double b, const HParam& p) {
    const double steps = (b - a) / p.h();
    const long long n = std::llround(steps);
    if (std::abs(steps - static_cast<double>(n)) > kGridTol) {
        throw GridMisalignment("hintegral: (b-a)/h = " + std::to_string(steps) +
                               " is not an integer");
    }
    Complex acc{0.0, 0.0};
    if (n >= 0) {
        for (long long j = 0; j < n; ++j) {
            acc += f(a + static_cast<double>(j) * p.h());
        }
        return p.h() * acc;
    }
    for (long long j = 0; j < -n; ++j) {
        acc += f(b + static_cast<double>(j) * p.h());
    }
    return -p.h() * acc;
}

Complex hpow_eval(const Evaluator& f, int m, const HParam& p, double x) {
    if (m < 0) {
        throw OrderOutOfRange("hpow_eval: m must be >= 0, got " + std::to_string(m));
    }
    Complex acc{1.0, 0.0};
    for (int j = 0; j < m; ++j) {
        acc *= f(x - static_cast<double>(j) * p.h());
    }
    return acc;
}

Complex trunc_power(const HParam& p, int m, double x, double y, Flavor flavor) {
    if (m < 1) {
        throw OrderOutOfRange("trunc_power: m must be >= 1, got " + std::to_string(m));
    }
    if (y <= x) {
        return {0.0, 0.0};
    }
    Complex acc{1.0, 0.0};
    for (int l = 0; l <= m - 2; ++l) {
        const double base = x - static_cast<double>(l) * p.h();
        if (flavor == Flavor::trig) {
            acc *= sin_h(p, (y - base) / 2.0);
        } else {
            acc *= cexp_h(p, y) - cexp_h(p, base);
        }
    }
    return acc;
}

Evaluator mult_u(int m, const HParam& p, Evaluator f, bool tilde) {
    if (m < 1) {
        throw OrderOutOfRange("mult_u: m must be >= 1, got " + std::to_string(m));
    }
    const double c = (tilde ? -1.0 : 1.0) * (static_cast<double>(m) - 1.0) / 2.0;
    return [p, c, g = std::move(f)](double x) { return cexp_h(p, c * x) * g(x); };
}

}  // namespace htrig
