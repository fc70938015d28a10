#include "htrig/bsplines.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace htrig {

namespace {

void check_span(const KnotVector& kv, SplineIndex idx, const char* who) {
    if (idx.m < 1 || idx.m > kMaxOrder) {
        throw OrderOutOfRange(std::string(who) + ": order " + std::to_string(idx.m) +
                              " outside [1, " + std::to_string(kMaxOrder) + "]");
    }
    if (idx.j < 0 || idx.j + idx.m >= kv.count()) {
        throw OrderOutOfRange(std::string(who) + ": span [x_" + std::to_string(idx.j) + ", x_" +
                              std::to_string(idx.j + idx.m) + "] exceeds the knot vector (" +
                              std::to_string(kv.count()) + " knots)");
    }
    const auto& t = kv.knots();
    const double span = t[idx.j + idx.m] - t[idx.j];
    if (span >= kv.param().window() * (1.0 - kWindowMargin)) {
        throw WindowViolation(std::string(who) + ": span " + std::to_string(span) +
                              " reaches the period window " + std::to_string(kv.param().window()));
    }
}

double require_real(const Complex& z, const char* who) {
    if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
        throw ComplexResidue(std::string(who) + ": imaginary residue " +
                             std::to_string(z.imag()) + " against real part " +
                             std::to_string(z.real()));
    }
    return z.real();
}

Complex eval_E_recurrence(const KnotVector& kv, SplineIndex idx, double x) {
    const auto& t = kv.knots();
    const HParam& p = kv.param();
    const int j = idx.j;
    const int m = idx.m;
    std::vector<Complex> b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int jj = j + i;
        b[i] = (t[jj] <= x && x < t[jj + 1])
                   ? 1.0 / (cexp_h(p, t[jj + 1]) - cexp_h(p, t[jj]))
                   : Complex{0.0, 0.0};
    }
    for (int ord = 2; ord <= m; ++ord) {
        const Complex u = cexp_h(p, x - static_cast<double>(ord - 2) * p.h());
        for (int i = 0; i + ord <= m; ++i) {
            const int jj = j + i;
            if (t[jj + ord] == t[jj]) {
                b[i] = {0.0, 0.0};  // identically-zero subspline
                continue;
            }
            const Complex den = cexp_h(p, t[jj + ord]) - cexp_h(p, t[jj]);
            b[i] = ((u - cexp_h(p, t[jj])) / den) * b[i] +
                   ((cexp_h(p, t[jj + ord]) - u) / den) * b[i + 1];
        }
    }
    return b[0];
}

double eval_T_recurrence(const KnotVector& kv, SplineIndex idx, double x) {
    const auto& t = kv.knots();
    const HParam& p = kv.param();
    const int j = idx.j;
    const int m = idx.m;
    std::vector<double> b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int jj = j + i;
        b[i] = (t[jj] <= x && x < t[jj + 1])
                   ? 1.0 / sin_h(p, (t[jj + 1] - t[jj]) / 2.0)
                   : 0.0;
    }
    for (int ord = 2; ord <= m; ++ord) {
        const double shift = static_cast<double>(ord - 2) * p.h();
        for (int i = 0; i + ord <= m; ++i) {
            const int jj = j + i;
            if (t[jj + ord] == t[jj]) {
                b[i] = 0.0;
                continue;
            }
            const double den = sin_h(p, (t[jj + ord] - t[jj]) / 2.0);
            b[i] = (sin_h(p, (x - shift - t[jj]) / 2.0) / den) * b[i] +
                   (sin_h(p, (t[jj + ord] - x + shift) / 2.0) / den) * b[i + 1];
        }
    }
    return b[0];
}

NodeSet span_nodes(const KnotVector& kv, SplineIndex idx) {
    const auto& t = kv.knots();
    std::vector<double> xs(t.begin() + idx.j, t.begin() + idx.j + idx.m + 1);
    return NodeSet(std::move(xs), kv.param());
}

/// Half the modulation phase of the trig/exp bridge: sum of the span knots
/// plus C(m-1, 2) h.
double bridge_phase(const KnotVector& kv, SplineIndex idx) {
    const auto& t = kv.knots();
    double s = 0.0;
    for (int k = 0; k <= idx.m; ++k) {
        s += t[idx.j + k];
    }
    const double cm = static_cast<double>((idx.m - 1) * (idx.m - 2)) / 2.0;
    return s + cm * kv.param().h();
}

}  // namespace

KnotVector::KnotVector(std::vector<double> knots, const HParam& p)
    : knots_(std::move(knots)), p_(p) {
    if (knots_.size() < 2) {
        throw std::invalid_argument("KnotVector: at least two knots are required");
    }
    for (double t : knots_) {
        if (!std::isfinite(t)) {
            throw std::invalid_argument("KnotVector: knots must be finite");
        }
    }
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        if (knots_[i + 1] < knots_[i]) {
            throw std::invalid_argument("KnotVector: knots must be non-decreasing");
        }
    }
}

Complex eval_E(const KnotVector& kv, SplineIndex idx, double x, EvalMethod method) {
    check_span(kv, idx, "eval_E");
    const auto& t = kv.knots();
    if (t[idx.j + idx.m] == t[idx.j]) {
        return {0.0, 0.0};
    }
    switch (method) {
        case EvalMethod::recurrence:
            return eval_E_recurrence(kv, idx, x);
        case EvalMethod::definition: {
            const HParam& p = kv.param();
            const int m = idx.m;
            const Evaluator kernel = [&p, m, x](double y) {
                return trunc_power(p, m, x, y, Flavor::exp);
            };
            return dd_exp(span_nodes(kv, idx), kernel, DDMethod::recursive);
        }
        default:
            throw std::invalid_argument("eval_E: from_e applies to eval_T only");
    }
}

double eval_T(const KnotVector& kv, SplineIndex idx, double x, EvalMethod method) {
    check_span(kv, idx, "eval_T");
    const auto& t = kv.knots();
    if (t[idx.j + idx.m] == t[idx.j]) {
        return 0.0;
    }
    const HParam& p = kv.param();
    switch (method) {
        case EvalMethod::recurrence:
            return eval_T_recurrence(kv, idx, x);
        case EvalMethod::definition: {
            const int m = idx.m;
            const Evaluator kernel = [&p, m, x](double y) {
                return trunc_power(p, m, x, y, Flavor::trig);
            };
            return dd_trig(span_nodes(kv, idx), kernel, TrigDDMethod::lagrange);
        }
        default: {
            const double c = (static_cast<double>(idx.m) - 1.0) / 2.0;
            const Complex z = Complex{0.0, 2.0} * cexp_h(p, bridge_phase(kv, idx) / 2.0) *
                              cexp_h(p, -c * x) * eval_E_recurrence(kv, idx, x);
            return require_real(z, "eval_T(from_e)");
        }
    }
}

Complex hderiv_E(const KnotVector& kv, SplineIndex idx, double x, DerivMethod method) {
    check_span(kv, idx, "hderiv_E");
    if (idx.m < 2) {
        throw OrderOutOfRange("hderiv_E: order must be >= 2, got " + std::to_string(idx.m));
    }
    const HParam& p = kv.param();
    if (method == DerivMethod::direct) {
        return (eval_E(kv, idx, x + p.h()) - eval_E(kv, idx, x)) / p.h();
    }
    const auto& t = kv.knots();
    if (t[idx.j + idx.m] == t[idx.j]) {
        return {0.0, 0.0};
    }
    const double mh = static_cast<double>(idx.m - 1) * p.h();
    const Complex pref = (cexp_h(p, -mh) - 1.0) * cexp_h(p, x + p.h()) /
                         ((cexp_h(p, t[idx.j + idx.m]) - cexp_h(p, t[idx.j])) * p.h());
    const Complex lower = eval_E(kv, {idx.j + 1, idx.m - 1}, x) - eval_E(kv, {idx.j, idx.m - 1}, x);
    return pref * lower;
}

double hderiv_T(const KnotVector& kv, SplineIndex idx, double x, DerivMethod method) {
    check_span(kv, idx, "hderiv_T");
    if (idx.m < 2) {
        throw OrderOutOfRange("hderiv_T: order must be >= 2, got " + std::to_string(idx.m));
    }
    const HParam& p = kv.param();
    if (method == DerivMethod::direct) {
        return (eval_T(kv, idx, x + p.h()) - eval_T(kv, idx, x)) / p.h();
    }
    const auto& t = kv.knots();
    if (t[idx.j + idx.m] == t[idx.j]) {
        return 0.0;
    }
    const double q = static_cast<double>(idx.m - 1) * p.h();
    const Complex pref = Complex{0.0, 1.0} * cexp_h(p, q / 4.0) * (cexp_h(p, -q / 2.0) - 1.0) /
                         (p.h() * sin_h(p, (t[idx.j + idx.m] - t[idx.j]) / 2.0));
    const double shift = static_cast<double>(idx.m - 3) * p.h() / 2.0;
    const double lower = cos_h(p, (x - shift - t[idx.j]) / 2.0) * eval_T(kv, {idx.j, idx.m - 1}, x) -
                         cos_h(p, (t[idx.j + idx.m] - x + shift) / 2.0) *
                             eval_T(kv, {idx.j + 1, idx.m - 1}, x);
    return require_real(pref * lower, "hderiv_T(formula)");
}

Complex eval_tilde(const KnotVector& kv, SplineIndex idx, double x, Flavor flavor) {
    check_span(kv, idx, "eval_tilde");
    const auto& t = kv.knots();
    const HParam& p = kv.param();
    if (t[idx.j + idx.m] == t[idx.j]) {
        return {0.0, 0.0};
    }
    if (flavor == Flavor::exp) {
        return (cexp_h(p, t[idx.j + idx.m]) - cexp_h(p, t[idx.j])) *
               eval_E(kv, idx, x, EvalMethod::recurrence);
    }
    return {sin_h(p, (t[idx.j + idx.m] - t[idx.j]) / 2.0) *
                eval_T(kv, idx, x, EvalMethod::recurrence),
            0.0};
}

}  // namespace htrig
