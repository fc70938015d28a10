#include "htrig/classical.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace htrig {

double eval_T_classical(const std::vector<double>& knots, SplineIndex idx, double x) {
    if (idx.m < 1 || idx.m > kMaxOrder) {
        throw OrderOutOfRange("eval_T_classical: order " + std::to_string(idx.m) +
                              " outside [1, " + std::to_string(kMaxOrder) + "]");
    }
    if (idx.j < 0 || static_cast<std::size_t>(idx.j + idx.m) >= knots.size()) {
        throw OrderOutOfRange("eval_T_classical: knot span out of range");
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (!(knots[i] <= knots[i + 1])) {
            throw std::invalid_argument("eval_T_classical: knots must be non-decreasing");
        }
    }
    const auto& t = knots;
    const int j = idx.j;
    const int m = idx.m;
    const double span = t[j + m] - t[j];
    if (span >= 2.0 * std::numbers::pi * (1.0 - kWindowMargin)) {
        throw WindowViolation("eval_T_classical: span " + std::to_string(span) +
                              " reaches the period 2*pi");
    }
    if (span == 0.0) {
        return 0.0;
    }
    std::vector<double> b(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int jj = j + i;
        b[i] = (t[jj] <= x && x < t[jj + 1]) ? 1.0 / std::sin((t[jj + 1] - t[jj]) / 2.0) : 0.0;
    }
    for (int ord = 2; ord <= m; ++ord) {
        for (int i = 0; i + ord <= m; ++i) {
            const int jj = j + i;
            if (t[jj + ord] == t[jj]) {
                b[i] = 0.0;
                continue;
            }
            const double den = std::sin((t[jj + ord] - t[jj]) / 2.0);
            b[i] = (std::sin((x - t[jj]) / 2.0) / den) * b[i] +
                   (std::sin((t[jj + ord] - x) / 2.0) / den) * b[i + 1];
        }
    }
    return b[0];
}

}  // namespace htrig
