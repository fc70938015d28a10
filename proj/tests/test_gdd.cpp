#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "htrig/gdd.hpp"

using namespace htrig;

namespace {

const std::vector<double> kRefSteps{-0.5, 0.25, 1.0, 3.0};

Evaluator wave(const HParam& p, double c) {
    return [p, c](double x) { return cexp_h(p, c * x); };
}

/// Deterministic non-kernel test function, real-valued.
Evaluator bumpy(const HParam& p) {
    return [p](double x) {
        return Complex{0.7 * cos_h(p, 2.6 * x) - 0.4 * sin_h(p, 1.3 * x) + 0.2, 0.0};
    };
}

std::vector<double> scaled_nodes(const HParam& p, std::initializer_list<double> frac) {
    std::vector<double> xs;
    for (double f : frac) {
        xs.push_back(f * p.window());
    }
    return xs;
}

}  // namespace

TEST_SUITE_BEGIN("gdd");

TEST_CASE("NodeSet validation") {
    const HParam p(1.0);
    CHECK_THROWS_AS(NodeSet({}, p), std::invalid_argument);
    CHECK_THROWS_AS(NodeSet({0.0, 1.0, 1.0}, p), SingularD);
    CHECK_THROWS_AS(NodeSet({0.0, 2.0, 1.0}, p), std::invalid_argument);
    CHECK_THROWS_AS(NodeSet({0.0, p.window()}, p), WindowViolation);
    CHECK_NOTHROW(NodeSet({0.0, 0.99 * p.window()}, p));

    std::vector<double> too_many;
    for (int i = 0; i <= kMaxOrder + 1; ++i) {
        too_many.push_back(0.05 * i);
    }
    CHECK_THROWS_AS(NodeSet(too_many, p), OrderOutOfRange);
}

TEST_CASE("generic_dd over the classical pair is the Newton divided difference") {
    const HParam p(1.0);
    const GammaPair classical{[](double) { return Complex{1.0, 0.0}; },
                              [](double x) { return Complex{x, 0.0}; }};
    const NodeSet nodes({0.0, 1.0, 3.0, 4.0}, p);
    const Evaluator cubic = [](double x) { return Complex{x * x * x, 0.0}; };
    CHECK(generic_dd(classical, nodes, cubic) == Complex{1.0, 0.0});

    // order-m difference of a degree-(m-1) polynomial vanishes
    const Evaluator quad = [](double x) { return Complex{2.0 * x * x - x + 5.0, 0.0}; };
    const NodeSet nodes2({-1.0, 0.5, 2.0, 3.5}, p);
    CHECK(std::abs(generic_dd(classical, nodes2, quad)) < 1e-14);
}

TEST_CASE("generic_dd reports a vanishing pairing") {
    const HParam p(1.0);
    const GammaPair degenerate{[](double) { return Complex{1.0, 0.0}; },
                               [](double) { return Complex{2.0, 0.0}; }};
    const NodeSet nodes({0.0, 1.0}, p);
    CHECK_THROWS_AS(generic_dd(degenerate, nodes, bumpy(p)), SingularD);
}

TEST_CASE("dd_exp: recursion, explicit sum and determinant oracle agree") {
    for (double h : kRefSteps) {
        const HParam p(h);
        const NodeSet nodes(scaled_nodes(p, {0.02, 0.13, 0.21, 0.36, 0.5}), p);
        const Evaluator f = [p](double x) {
            return Complex{0.3, -0.8} * cexp_h(p, 2.4 * x) + Complex{1.1, 0.5} * cexp_h(p, x);
        };
        const Complex a = dd_exp(nodes, f, DDMethod::recursive);
        const Complex b = dd_exp(nodes, f, DDMethod::lagrange);
        const Complex c = dd_det_oracle(nodes, f, Flavor::exp);
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        CHECK(std::abs(a - b) < 1e-11 * scale);
        CHECK(std::abs(a - c) < 1e-10 * scale);
    }
}

TEST_CASE("dd_exp annihilates lower h-exponentials and normalizes the top one") {
    for (double h : kRefSteps) {
        const HParam p(h);
        const NodeSet nodes(scaled_nodes(p, {0.0, 0.09, 0.22, 0.33, 0.47}), p);
        const auto& xs = nodes.nodes();
        const int m = nodes.order();
        for (int k = 0; k <= m; ++k) {
            // Lagrange lever of the exact sum; roundoff scales with it.
            double lever = 0.0;
            for (int j = 0; j <= m; ++j) {
                double denom = 1.0;
                for (int i = 0; i <= m; ++i) {
                    if (i != j) {
                        denom *= std::abs(cexp_h(p, xs[j]) - cexp_h(p, xs[i]));
                    }
                }
                lever += std::abs(cexp_h(p, k * xs[j])) / denom;
            }
            const Complex target = (k == m) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            const Complex got = dd_exp(nodes, wave(p, k), DDMethod::recursive);
            CHECK(std::abs(got - target) < 1e-12 * std::max(1.0, lever));
        }
    }
}

TEST_CASE("vandermonde_h equals its half-angle product form") {
    for (double h : kRefSteps) {
        const HParam p(h);
        const NodeSet nodes(scaled_nodes(p, {0.05, 0.18, 0.31, 0.44}), p);
        const auto& xs = nodes.nodes();
        const int m = nodes.order();

        Complex prod{1.0, 0.0};
        double pairsum = 0.0;
        int pairs = 0;
        for (int j = 0; j <= m; ++j) {
            for (int k = j + 1; k <= m; ++k) {
                prod *= sin_h(p, (xs[k] - xs[j]) / 2.0);
                pairsum += xs[k] + xs[j];
                ++pairs;
            }
        }
        Complex two_i_pow{1.0, 0.0};
        for (int i = 0; i < pairs; ++i) {
            two_i_pow *= Complex{0.0, 2.0};
        }
        const Complex expected = two_i_pow * cexp_h(p, pairsum / 2.0) * prod;
        const Complex got = vandermonde_h(nodes);
        CHECK(std::abs(got - expected) < 1e-12 * std::abs(expected));
    }
}

TEST_CASE("dd_trig: all four methods agree on real functions") {
    for (double h : kRefSteps) {
        const HParam p(h);
        const NodeSet nodes(scaled_nodes(p, {0.01, 0.12, 0.2, 0.34, 0.41, 0.55}), p);
        const Evaluator f = bumpy(p);
        const double a = dd_trig(nodes, f, TrigDDMethod::lagrange);
        const double b = dd_trig(nodes, f, TrigDDMethod::via_exp);
        const double c = dd_trig(nodes, f, TrigDDMethod::threeterm);
        const Complex d = dd_det_oracle(nodes, f, Flavor::trig);
        const double scale = std::max({1.0, std::abs(a)});
        CHECK(std::abs(a - b) < 1e-10 * scale);
        CHECK(std::abs(a - c) < 1e-10 * scale);
        CHECK(std::abs(Complex{a, 0.0} - d) < 1e-9 * scale);
    }
}

TEST_CASE("dd_trig annihilates the parity-matched kernel") {
    const HParam p(0.25);
    // odd order: constants and integer frequencies
    const NodeSet odd(scaled_nodes(p, {0.0, 0.15, 0.3, 0.45}), p);
    CHECK(std::abs(dd_trig(odd, [](double) { return Complex{1.0, 0.0}; })) < 1e-11);
    CHECK(std::abs(dd_trig(odd, [&p](double x) { return Complex{cos_h(p, x), 0.0}; })) < 1e-11);
    CHECK(std::abs(dd_trig(odd, [&p](double x) { return Complex{sin_h(p, x), 0.0}; })) < 1e-11);
    // even order: half-integer frequencies
    const NodeSet even(scaled_nodes(p, {0.0, 0.2, 0.45}), p);
    CHECK(std::abs(dd_trig(even, [&p](double x) { return Complex{cos_h(p, x / 2.0), 0.0}; })) <
          1e-11);
    CHECK(std::abs(dd_trig(even, [&p](double x) { return Complex{sin_h(p, x / 2.0), 0.0}; })) <
          1e-11);
}

TEST_CASE("dd_trig rejects genuinely complex results") {
    const HParam p(1.0);
    const NodeSet nodes({0.0, 1.0}, p);
    CHECK_THROWS_AS(dd_trig(nodes, wave(p, 1.0)), ComplexResidue);
}

TEST_CASE("three-term coefficients: reference value and equal-spacing symmetry") {
    const HParam p(1.0);
    const ThreeTermCoeffs c = threeterm_coeffs(NodeSet({0.0, 1.0, 2.0}, p));
    const double expected = 1.0 / (std::sin(std::numbers::ln2) * std::sin(std::numbers::ln2 / 2));
    CHECK(c.gamma == doctest::Approx(4.6074343939809603).epsilon(1e-14));
    CHECK(c.gamma == doctest::Approx(expected).epsilon(1e-14));
    CHECK(c.alpha == doctest::Approx(c.gamma).epsilon(1e-14));  // equispaced symmetry

    CHECK_THROWS_AS(threeterm_coeffs(NodeSet({0.0, 1.0}, p)), OrderOutOfRange);
}

TEST_CASE("three-term recurrence matches the explicit sum directly") {
    const HParam p(-0.5);
    const NodeSet nodes(scaled_nodes(p, {0.03, 0.2, 0.31, 0.5, 0.62}), p);
    const Evaluator f = bumpy(p);
    const ThreeTermCoeffs c = threeterm_coeffs(nodes);
    const auto& xs = nodes.nodes();
    const NodeSet low(std::vector<double>(xs.begin(), xs.end() - 2), p);
    const NodeSet mid(std::vector<double>(xs.begin() + 1, xs.end() - 1), p);
    const NodeSet high(std::vector<double>(xs.begin() + 2, xs.end()), p);
    const double composed = c.gamma * dd_trig(high, f) + c.beta * dd_trig(mid, f) +
                            c.alpha * dd_trig(low, f);
    const double direct = dd_trig(nodes, f);
    CHECK(composed == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("dd_det_oracle order cap") {
    const HParam p(0.25);
    std::vector<double> xs;
    for (int i = 0; i <= 9; ++i) {
        xs.push_back(0.05 * i * p.window());
    }
    CHECK_THROWS_AS(dd_det_oracle(NodeSet(xs, p), bumpy(p), Flavor::exp), OrderOutOfRange);
}

TEST_CASE("split-range product rule") {
    for (double h : {0.25, 1.0}) {
        const HParam p(h);
        const std::vector<double> xs = scaled_nodes(p, {0.02, 0.17, 0.29, 0.4, 0.53});
        const NodeSet nodes(xs, p);
        const int m = nodes.order();
        const Evaluator f = wave(p, 2.3);
        const Evaluator g = [p](double x) { return cexp_h(p, 0.9 * x) + Complex{0.2, 0.4}; };
        const Evaluator fg = [&](double x) { return f(x) * g(x); };

        const Complex lhs = dd_exp(nodes, fg);
        Complex rhs{0.0, 0.0};
        for (int k = 0; k <= m; ++k) {
            const NodeSet low(std::vector<double>(xs.begin(), xs.begin() + k + 1), p);
            const NodeSet high(std::vector<double>(xs.begin() + k, xs.end()), p);
            rhs += dd_exp(low, f) * dd_exp(high, g);
        }
        CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_SUITE_END();
