#include "htrig/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "htrig/bsplines.hpp"
#include "htrig/gdd.hpp"
#include "htrig/identities.hpp"

namespace htrig::checks {

namespace {

/// Fixed per-family salt keeps each family's stream independent of the
/// order in which families run.
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    return seed ^ (salt * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull);
}

double rel(const Complex& a, const Complex& b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

int at_least_one(int n) {
    return std::max(1, n);
}

/// Strictly increasing nodes spanning a random fraction of the period
/// window, placed near the origin.
std::vector<double> rnd_nodes(Rng& rng, const HParam& p, int count) {
    std::vector<double> gaps(static_cast<std::size_t>(count - 1));
    double total = 0.0;
    for (auto& g : gaps) {
        g = rng.uniform(0.5, 1.5);
        total += g;
    }
    const double span = p.window() * rng.uniform(0.35, 0.85);
    std::vector<double> xs(static_cast<std::size_t>(count));
    xs[0] = rng.uniform(-1.0, 1.0);
    for (int i = 1; i < count; ++i) {
        xs[static_cast<std::size_t>(i)] =
            xs[static_cast<std::size_t>(i - 1)] + gaps[static_cast<std::size_t>(i - 1)] * span / total;
    }
    return xs;
}

/// Real combination of integer-frequency h-trig terms plus one non-integer
/// frequency so no finite kernel annihilates it.
Evaluator rnd_real_f(Rng& rng, const HParam& p, int deg) {
    std::vector<double> a(static_cast<std::size_t>(deg + 1));
    std::vector<double> b(static_cast<std::size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
        a[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
        b[static_cast<std::size_t>(k)] = rng.uniform(-1.0, 1.0);
    }
    const double nu = deg + rng.uniform(0.2, 0.8);
    const double c = rng.uniform(-1.0, 1.0);
    return [p, a, b, nu, c, deg](double x) {
        double s = c * cos_h(p, nu * x);
        for (int k = 0; k <= deg; ++k) {
            s += a[static_cast<std::size_t>(k)] * cos_h(p, k * x) +
                 b[static_cast<std::size_t>(k)] * sin_h(p, k * x);
        }
        return Complex{s, 0.0};
    };
}

Evaluator rnd_complex_f(Rng& rng, const HParam& p, int deg) {
    std::vector<Complex> cs(static_cast<std::size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
        cs[static_cast<std::size_t>(k)] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    const double nu = deg + rng.uniform(0.2, 0.8);
    const Complex cn{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return [p, cs, nu, cn, deg](double x) {
        Complex s = cn * cexp_h(p, nu * x);
        for (int k = 0; k <= deg; ++k) {
            s += cs[static_cast<std::size_t>(k)] * cexp_h(p, k * x);
        }
        return s;
    };
}

double lever_exp(const NodeSet& nodes) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    double lever = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        double denom = 1.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k != j) {
                denom *= std::abs(cexp_h(p, xs[j]) - cexp_h(p, xs[k]));
            }
        }
        lever += 1.0 / denom;
    }
    return lever;
}

double lever_trig(const NodeSet& nodes) {
    const auto& xs = nodes.nodes();
    const HParam& p = nodes.param();
    double lever = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        double denom = 1.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k != j) {
                denom *= std::abs(sin_h(p, (xs[j] - xs[k]) / 2.0));
            }
        }
        lever += 1.0 / denom;
    }
    return lever;
}

/// Basis of the m-dimensional space annihilated by the order-m trig chain.
std::vector<Evaluator> trig_kernel_basis(const HParam& p, int m) {
    std::vector<Evaluator> fs;
    if (m % 2 == 1) {
        fs.emplace_back([](double) { return Complex{1.0, 0.0}; });
        for (int k = 1; k <= (m - 1) / 2; ++k) {
            fs.emplace_back([p, k](double x) { return Complex{cos_h(p, k * x), 0.0}; });
            fs.emplace_back([p, k](double x) { return Complex{sin_h(p, k * x), 0.0}; });
        }
    } else {
        for (int k = 1; k <= m / 2; ++k) {
            const double c = k - 0.5;
            fs.emplace_back([p, c](double x) { return Complex{cos_h(p, c * x), 0.0}; });
            fs.emplace_back([p, c](double x) { return Complex{sin_h(p, c * x), 0.0}; });
        }
    }
    return fs;
}

/// sup of the basis magnitude over its support, floored at 1, for scaling
/// method-equivalence residuals.
double support_sup_T(const KnotVector& kv, SplineIndex idx) {
    const auto& t = kv.knots();
    const double lo = t[static_cast<std::size_t>(idx.j)];
    const double hi = t[static_cast<std::size_t>(idx.j + idx.m)];
    double sup = 1.0;
    for (int i = 0; i < 24; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / 24.0;
        sup = std::max(sup, std::abs(eval_T(kv, idx, x)));
    }
    return sup;
}

double support_sup_E(const KnotVector& kv, SplineIndex idx) {
    const auto& t = kv.knots();
    const double lo = t[static_cast<std::size_t>(idx.j)];
    const double hi = t[static_cast<std::size_t>(idx.j + idx.m)];
    double sup = 1.0;
    for (int i = 0; i < 24; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / 24.0;
        sup = std::max(sup, std::abs(eval_E(kv, idx, x)));
    }
    return sup;
}

/// Knot gaps with one designated long gap (>= width_mult * |h|), all other
/// gaps small, squeezed to stay inside the period window. Returns knots and
/// the long gap index, or an empty vector when it cannot fit.
std::vector<double> gapped_knots(Rng& rng, const HParam& p, int m, double width_mult,
                                 int* gap_index) {
    const double ah = std::abs(p.h());
    const double cap = 0.85 * p.window();
    double long_gap = width_mult * ah * (1.02 + 0.5 * rng.uniform01());
    if (long_gap >= cap - 0.25 * (m - 1)) {
        long_gap = width_mult * ah * 1.02;
    }
    if (long_gap >= cap - 0.25 * (m - 1)) {
        return {};
    }
    std::vector<double> gaps(static_cast<std::size_t>(m));
    const int g = rng.pick(0, m - 1);
    double small_total = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == g) {
            gaps[static_cast<std::size_t>(i)] = long_gap;
        } else {
            gaps[static_cast<std::size_t>(i)] = rng.uniform(0.3, 0.6);
            small_total += gaps[static_cast<std::size_t>(i)];
        }
    }
    const double budget = cap - long_gap;
    if (small_total > budget) {
        const double shrink = budget / small_total * 0.95;
        for (int i = 0; i < m; ++i) {
            if (i != g) {
                gaps[static_cast<std::size_t>(i)] *= shrink;
            }
        }
    }
    std::vector<double> t(static_cast<std::size_t>(m + 1));
    t[0] = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < m; ++i) {
        t[static_cast<std::size_t>(i + 1)] =
            t[static_cast<std::size_t>(i)] + gaps[static_cast<std::size_t>(i)];
    }
    *gap_index = g;
    return t;
}

}  // namespace

ResidualStats check_identities(const HParam& p, std::uint64_t seed, int points) {
    Rng rng(mix(seed, 1));
    ResidualStats st;
    const double w = p.window();
    for (int i = 0; i < at_least_one(points); ++i) {
        const double x = rng.uniform(-0.75, 0.75) * w;
        const double y = rng.uniform(-0.75, 0.75) * w;
        const double c = rng.uniform(-3.0, 3.0);
        double r = 0.0;
        const auto upd = [&r](double v) { r = std::max(r, v); };

        const double sx = sin_h(p, x);
        const double cx = cos_h(p, x);
        const double sy = sin_h(p, y);
        const double cy = cos_h(p, y);

        upd(std::abs(sx * sx + cx * cx - 1.0));
        upd(std::abs(sin_h(p, x + y) - (sx * cy + cx * sy)));
        upd(std::abs(cos_h(p, x + y) - (cx * cy - sx * sy)));
        upd(std::abs(sin_h(p, 2.0 * x) - 2.0 * sx * cx));
        upd(std::abs(cos_h(p, 2.0 * x) - (cx * cx - sx * sx)));
        upd(std::abs(sin_h(p, -x) + sx));
        upd(std::abs(cos_h(p, -x) - cx));
        upd(std::abs(sin_h(p, x + w) - sx));
        upd(std::abs(cos_h(p, x + w) - cx));
        upd(std::abs(cexp_h(p, x) - Complex{cx, sx}));
        upd(std::abs(std::abs(cexp_h(p, x)) - 1.0));
        upd(std::abs(cexp_h(p, x) - cexp_h(p, y) -
                     Complex{0.0, 2.0} * cexp_h(p, (x + y) / 2.0) * sin_h(p, (x - y) / 2.0)));
        upd(std::abs(cexp_h(p, x) + cexp_h(p, y) -
                     2.0 * cexp_h(p, (x + y) / 2.0) * cos_h(p, (x - y) / 2.0)));

        const int n = rng.pick(-50, 50);
        upd(std::abs(sin_h(p, n * std::numbers::pi / p.omega())));

        const Evaluator wave = [p, c](double t) { return cexp_h(p, c * t); };
        const Complex eig = (cexp_h(p, c * p.h()) - 1.0) / p.h();
        upd(std::abs(hderiv(wave, p, x) - eig * cexp_h(p, c * x)));

        st.add(r);
    }
    return st;
}

ResidualStats check_dd_triangle(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    Rng rng(mix(seed, 2));
    ResidualStats st;
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % max_m;
        const NodeSet nodes(rnd_nodes(rng, p, m + 1), p);
        const Evaluator fc = rnd_complex_f(rng, p, m + 1);
        const Evaluator fr = rnd_real_f(rng, p, m + 1);

        const Complex e1 = dd_exp(nodes, fc, DDMethod::recursive);
        const Complex e2 = dd_exp(nodes, fc, DDMethod::lagrange);
        const Complex e3 = dd_det_oracle(nodes, fc, Flavor::exp);
        st.add(rel(e1, e2));
        st.add(rel(e1, e3));
        st.add(rel(e2, e3));

        const Complex t1{dd_trig(nodes, fr, TrigDDMethod::lagrange), 0.0};
        const Complex t2{dd_trig(nodes, fr, TrigDDMethod::via_exp), 0.0};
        const Complex t3{dd_trig(nodes, fr, TrigDDMethod::threeterm), 0.0};
        const Complex t4 = dd_det_oracle(nodes, fr, Flavor::trig);
        st.add(rel(t1, t2));
        st.add(rel(t1, t3));
        st.add(rel(t2, t3));
        st.add(rel(t1, t4));
    }
    return st;
}

ResidualStats check_dd_annihilation(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    Rng rng(mix(seed, 3));
    ResidualStats st;
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % max_m;
        const NodeSet nodes(rnd_nodes(rng, p, m + 1), p);
        const double le = lever_exp(nodes);
        const double lt = lever_trig(nodes);
        for (int k = 0; k < m; ++k) {
            const Evaluator ek = [p, k](double x) { return cexp_h(p, k * x); };
            st.add(std::abs(dd_exp(nodes, ek, DDMethod::recursive)) / le);
        }
        for (const Evaluator& f : trig_kernel_basis(p, m)) {
            st.add(std::abs(dd_trig(nodes, f, TrigDDMethod::lagrange)) / lt);
        }
    }
    return st;
}

ResidualStats check_dd_leading(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    Rng rng(mix(seed, 4));
    ResidualStats st;
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % max_m;
        const NodeSet nodes(rnd_nodes(rng, p, m + 1), p);
        const Evaluator em = [p, m](double x) { return cexp_h(p, m * x); };
        st.add(std::abs(dd_exp(nodes, em, DDMethod::recursive) - 1.0));
    }
    return st;
}

ResidualStats check_dd_leibniz(const HParam& p, std::uint64_t seed, int pairs, int max_m) {
    Rng rng(mix(seed, 5));
    ResidualStats st;
    for (int s = 0; s < at_least_one(pairs); ++s) {
        const int m = 1 + s % max_m;
        const std::vector<double> xs = rnd_nodes(rng, p, m + 1);
        const NodeSet nodes(xs, p);
        const Evaluator f = rnd_complex_f(rng, p, m);
        const Evaluator g = rnd_complex_f(rng, p, m);
        const Evaluator fg = [&f, &g](double x) { return f(x) * g(x); };

        const Complex lhs = dd_exp(nodes, fg, DDMethod::recursive);
        Complex rhs{0.0, 0.0};
        double mass = 0.0;
        for (int k = 0; k <= m; ++k) {
            const NodeSet low(std::vector<double>(xs.begin(), xs.begin() + k + 1), p);
            const NodeSet high(std::vector<double>(xs.begin() + k, xs.end()), p);
            const Complex term =
                dd_exp(low, f, DDMethod::recursive) * dd_exp(high, g, DDMethod::recursive);
            rhs += term;
            mass += std::abs(term);
        }
        st.add(std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), mass}));
    }
    return st;
}

ResidualStats check_bspline_methods(const HParam& p, std::uint64_t seed, int instances,
                                    int max_m) {
    Rng rng(mix(seed, 6));
    ResidualStats st;
    for (int s = 0; s < at_least_one(instances); ++s) {
        const int m = 1 + s % max_m;
        const KnotVector kv(rnd_nodes(rng, p, m + 1), p);
        const SplineIndex idx{0, m};
        const auto& t = kv.knots();
        const double span = t.back() - t.front();
        const double scale_e = support_sup_E(kv, idx);
        const double scale_t = support_sup_T(kv, idx);
        for (int i = 0; i < 12; ++i) {
            const double x = rng.uniform(t.front() - 0.25 * span, t.back() + 0.25 * span);
            const Complex ed = eval_E(kv, idx, x, EvalMethod::definition);
            const Complex er = eval_E(kv, idx, x, EvalMethod::recurrence);
            st.add(std::abs(ed - er) / scale_e);

            const double td = eval_T(kv, idx, x, EvalMethod::definition);
            const double tr = eval_T(kv, idx, x, EvalMethod::recurrence);
            const double te = eval_T(kv, idx, x, EvalMethod::from_e);
            st.add(std::abs(td - tr) / scale_t);
            st.add(std::abs(td - te) / scale_t);
            st.add(std::abs(tr - te) / scale_t);
        }
    }
    return st;
}

ResidualStats check_bspline_support(const HParam& p, std::uint64_t seed, int points, int max_m) {
    Rng rng(mix(seed, 7));
    ResidualStats st;
    for (int s = 0; s < at_least_one(points); ++s) {
        const int m = 1 + s % max_m;
        const KnotVector kv(rnd_nodes(rng, p, m + 1), p);
        const SplineIndex idx{0, m};
        const auto& t = kv.knots();
        double x;
        switch (s % 3) {
            case 0: x = rng.uniform(t.front() - 2.0, t.front() - 1e-9); break;
            case 1: x = rng.uniform(t.back() + 1e-9, t.back() + 2.0); break;
            default: x = t.back(); break;  // right endpoint is outside
        }
        const bool exact_zero =
            std::abs(eval_E(kv, idx, x)) == 0.0 && std::abs(eval_T(kv, idx, x)) == 0.0;
        st.add(exact_zero ? 0.0 : 1.0);
    }
    return st;
}

ResidualStats check_tilde_bridge(const HParam& p, std::uint64_t seed, int instances, int max_m) {
    Rng rng(mix(seed, 8));
    ResidualStats st;
    for (int s = 0; s < at_least_one(instances); ++s) {
        const int m = 1 + s % max_m;
        const KnotVector kv(rnd_nodes(rng, p, m + 1), p);
        const SplineIndex idx{0, m};
        const auto& t = kv.knots();
        const double span = t.back() - t.front();

        double phase = static_cast<double>((m - 1) * (m - 2)) / 2.0 * p.h();
        for (int k = 1; k <= m - 1; ++k) {
            phase += t[static_cast<std::size_t>(k)];
        }
        double sup = 1.0;
        for (int i = 0; i < 24; ++i) {
            const double x = t.front() + span * (i + 0.5) / 24.0;
            sup = std::max(sup, std::abs(eval_tilde(kv, idx, x, Flavor::trig)));
        }
        for (int i = 0; i < 8; ++i) {
            const double x = rng.uniform(t.front() - 0.2 * span, t.back() + 0.2 * span);
            const Complex lhs = eval_tilde(kv, idx, x, Flavor::trig);
            const Complex rhs = cexp_h(p, phase / 2.0) *
                                cexp_h(p, -(static_cast<double>(m) - 1.0) / 2.0 * x) *
                                eval_tilde(kv, idx, x, Flavor::exp);
            st.add(std::abs(lhs - rhs) / sup);
        }
    }
    return st;
}

ResidualStats check_derivatives(const HParam& p, std::uint64_t seed, int instances, int max_m) {
    Rng rng(mix(seed, 9));
    ResidualStats st;
    for (int s = 0; s < at_least_one(instances); ++s) {
        const int m = 2 + s % std::max(1, max_m - 1);
        int g = 0;
        const std::vector<double> t = gapped_knots(rng, p, m, 1.2, &g);
        if (t.empty()) {
            continue;
        }
        const KnotVector kv(t, p);
        const SplineIndex idx{0, m};
        /* clean strip: the open step interval (x, x+h) stays inside the gap */
        const double lo = t[static_cast<std::size_t>(g)] + std::max(0.0, -p.h());
        const double hi = t[static_cast<std::size_t>(g + 1)] - std::max(0.0, p.h());
        if (!(lo < hi)) {
            continue;
        }
        for (int i = 0; i < 3; ++i) {
            const double x = lo + (hi - lo) * rng.uniform(0.02, 0.98);
            const Complex ef = hderiv_E(kv, idx, x, DerivMethod::formula);
            const Complex ed = hderiv_E(kv, idx, x, DerivMethod::direct);
            st.add(rel(ef, ed));
            const double tf = hderiv_T(kv, idx, x, DerivMethod::formula);
            const double td = hderiv_T(kv, idx, x, DerivMethod::direct);
            st.add(rel({tf, 0.0}, {td, 0.0}));
        }
    }
    return st;
}

ResidualStats check_marsden(const HParam& p, std::uint64_t seed, int pairs, int max_m,
                            Flavor flavor) {
    Rng rng(mix(seed, flavor == Flavor::exp ? 10 : 11));
    ResidualStats st;
    for (int s = 0; s < at_least_one(pairs); ++s) {
        const int m = 1 + s % max_m;
        const int n = 2 * m + 2;
        std::vector<double> gaps(static_cast<std::size_t>(n - 1));
        double total = 0.0;
        for (auto& gp : gaps) {
            gp = rng.uniform(0.3, 0.9);
            total += gp;
        }
        const double span = std::min(total, 0.8 * p.window());
        std::vector<double> t(static_cast<std::size_t>(n));
        t[0] = rng.uniform(-1.0, 1.0);
        for (int i = 1; i < n; ++i) {
            t[static_cast<std::size_t>(i)] =
                t[static_cast<std::size_t>(i - 1)] + gaps[static_cast<std::size_t>(i - 1)] * span / total;
        }
        const KnotVector kv(t, p);
        const MarsdenWindow w(kv, m, m - 1, n - m);
        const double x = w.lo() + (w.hi() - w.lo()) * rng.uniform(0.001, 0.999);
        const double y = rng.uniform(t.front() - 1.0, t.back() + 1.0);
        st.add(marsden_residual(w, x, y, flavor));
    }
    return st;
}

ResidualStats check_operator_kernels(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    Rng rng(mix(seed, 12));
    ResidualStats st;
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % max_m;
        const double x = rng.uniform(-2.0, 2.0);

        const auto we = op_stencil({Flavor::exp, m}, p);
        double mass_e = 0.0;
        for (const auto& wk : we) {
            mass_e += std::abs(wk);
        }
        for (int k = 0; k < m; ++k) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < we.size(); ++j) {
                acc += we[j] * cexp_h(p, k * (x + static_cast<double>(j) * p.h()));
            }
            st.add(std::abs(acc) / mass_e);
        }

        const auto wt = op_stencil({Flavor::trig, m}, p);
        double mass_t = 0.0;
        for (const auto& wk : wt) {
            mass_t += std::abs(wk);
        }
        for (int k = 0; k < m; ++k) {
            const double c = static_cast<double>(k) - (static_cast<double>(m) - 1.0) / 2.0;
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < wt.size(); ++j) {
                acc += wt[j] * cexp_h(p, c * (x + static_cast<double>(j) * p.h()));
            }
            st.add(std::abs(acc) / mass_t);
        }
    }
    return st;
}

ResidualStats check_operator_conjugation(const HParam& p, std::uint64_t seed, int sets,
                                         int max_m) {
    Rng rng(mix(seed, 13));
    ResidualStats st;
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % max_m;
        const Evaluator f = rnd_complex_f(rng, p, 3);
        const double x = rng.uniform(-2.0, 2.0);
        st.add(operator_relation_residual(m, p, f, x));
    }
    return st;
}

ResidualStats check_piece_annihilation(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    Rng rng(mix(seed, 14));
    ResidualStats st;
    /* orders whose m|h|-wide gap fits inside the window */
    std::vector<int> feasible;
    for (int m = 1; m <= max_m; ++m) {
        if (1.05 * m * std::abs(p.h()) + 0.3 * (m - 1) < 0.85 * p.window()) {
            feasible.push_back(m);
        }
    }
    if (feasible.empty()) {
        return st;
    }
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = feasible[static_cast<std::size_t>(s) % feasible.size()];
        int g = 0;
        const std::vector<double> t = gapped_knots(rng, p, m, 1.05 * m, &g);
        if (t.empty()) {
            continue;
        }
        const KnotVector kv(t, p);
        const SplineIndex idx{0, m};
        const auto wt = op_stencil({Flavor::trig, m}, p);
        double mass = 0.0;
        for (const auto& wk : wt) {
            mass += std::abs(wk);
        }
        const double sup = support_sup_T(kv, idx);
        /* stencil footprint [y, y+mh] must stay inside the long gap */
        const double reach = static_cast<double>(m) * p.h();
        const double lo = t[static_cast<std::size_t>(g)] + std::max(0.0, -reach);
        const double hi = t[static_cast<std::size_t>(g + 1)] - std::max(0.0, reach);
        if (!(lo < hi)) {
            continue;
        }
        for (int i = 0; i < 4; ++i) {
            const double y = lo + (hi - lo) * rng.uniform(0.02, 0.98);
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < wt.size(); ++k) {
                acc += wt[k] * eval_T(kv, idx, y + static_cast<double>(k) * p.h());
            }
            st.add(std::abs(acc) / (mass * sup));
        }
    }
    return st;
}

ResidualStats check_integrals(const HParam& p, std::uint64_t seed, int sets, int max_m) {
    ResidualStats st;
    if (p.h() < 0.0) {
        return st;  // the nonnegative node grid cannot hold increasing nodes
    }
    Rng rng(mix(seed, 15));
    const int max_steps = static_cast<int>(0.85 * p.window() / p.h());
    const int m_cap = std::min(max_m, max_steps);
    if (m_cap < 1) {
        return st;
    }
    for (int s = 0; s < at_least_one(sets); ++s) {
        const int m = 1 + s % m_cap;
        std::vector<int> gaps(static_cast<std::size_t>(m), 1);
        int budget = std::min(max_steps - m, m);
        while (budget > 0) {
            gaps[static_cast<std::size_t>(rng.pick(0, m - 1))] += 1;
            --budget;
        }
        std::vector<double> xs(static_cast<std::size_t>(m + 1));
        xs[0] = rng.uniform(-1.0, 1.0);
        int cum = 0;
        for (int j = 1; j <= m; ++j) {
            cum += gaps[static_cast<std::size_t>(j - 1)];
            xs[static_cast<std::size_t>(j)] = xs[0] + static_cast<double>(cum) * p.h();
        }
        const NodeSet nodes(xs, p);

        const Evaluator fc = rnd_complex_f(rng, p, m + 1);
        const Complex ia = dd_integral(nodes, fc, Flavor::exp);
        const Complex ib = dd_exp(nodes, fc, DDMethod::recursive);
        st.add(rel(ia, ib));

        const Evaluator fr = rnd_real_f(rng, p, m + 1);
        const Complex ta = dd_integral(nodes, fr, Flavor::trig);
        const Complex tb{dd_trig(nodes, fr, TrigDDMethod::lagrange), 0.0};
        st.add(rel(ta, tb));
    }
    return st;
}

namespace {

struct Family {
    std::string name;
    double tol;
    ResidualStats stats;
};

std::vector<Family> run_families(const std::string& suite, const HParam& p, const Options& opt) {
    const std::uint64_t seed = opt.seed;
    const int n = at_least_one(opt.samples);
    const auto frac = [n](int d) { return at_least_one(n / d); };

    if (suite == "trig-identities") {
        return {{"identities", 1e-12, check_identities(p, seed, n)}};
    }
    if (suite == "dd-oracles") {
        return {{"triangle", 1e-8, check_dd_triangle(p, seed, frac(5), 6)},
                {"annihilation", 1e-10, check_dd_annihilation(p, seed, frac(25), 6)},
                {"leading", 1e-9, check_dd_leading(p, seed, frac(25), 6)},
                {"leibniz", 1e-9, check_dd_leibniz(p, seed, frac(10), 5)}};
    }
    if (suite == "bspline-equiv") {
        return {{"methods", 1e-8, check_bspline_methods(p, seed, frac(10), 5)},
                {"support", 1e-8, check_bspline_support(p, seed, n, 5)},
                {"tilde-bridge", 1e-8, check_tilde_bridge(p, seed, frac(10), 5)}};
    }
    if (suite == "derivatives") {
        return {{"derivative-formula", 1e-10, check_derivatives(p, seed, frac(10), 5)}};
    }
    if (suite == "marsden") {
        return {{"kernel-reproduction-exp", 1e-10, check_marsden(p, seed, frac(2), 5, Flavor::exp)},
                {"kernel-reproduction-trig", 1e-10,
                 check_marsden(p, seed, frac(2), 5, Flavor::trig)}};
    }
    if (suite == "operators") {
        return {{"kernels", 1e-10, check_operator_kernels(p, seed, frac(10), 6)},
                {"conjugation", 1e-10, check_operator_conjugation(p, seed, frac(10), 6)},
                {"piece-annihilation", 1e-10, check_piece_annihilation(p, seed, frac(20), 6)}};
    }
    if (suite == "integrals") {
        return {{"integral-reconstruction", 1e-8, check_integrals(p, seed, frac(50), 4)}};
    }
    throw std::invalid_argument("unknown check suite: " + suite);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"trig-identities", "dd-oracles", "bspline-equiv",
                                                "derivatives",     "marsden",    "operators",
                                                "integrals"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_suite(const std::string& suite, const HParam& p, const Options& opt) {
    CheckReport report;
    report.suite = suite;
    report.h = p.h();
    report.seed = opt.seed;
    report.passed = true;

    double sum = 0.0;
    for (const Family& fam : run_families(suite, p, opt)) {
        const double tol = opt.tol.value_or(fam.tol);
        report.tol = std::max(report.tol, tol);
        report.samples += fam.stats.cases;
        report.max_residual = std::max(report.max_residual, fam.stats.max_residual);
        sum += fam.stats.sum;
        if (fam.stats.cases > 0 && !(fam.stats.max_residual <= tol)) {
            report.passed = false;
        }
    }
    report.mean_residual = report.samples > 0 ? sum / report.samples : 0.0;
    return report;
}

}  // namespace htrig::checks
