#include "agtd/stats.hpp"

#include <cmath>
#include <limits>

#include "agtd/errors.hpp"

namespace agtd {
namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;

// Lower regularized P(a, x) by power series.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized Q(a, x) by modified Lentz continued fraction.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0) throw ConfigError("regularized_gamma_q: a must be positive");
    if (x < 0.0) throw ConfigError("regularized_gamma_q: x must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_squared_upper_p(double statistic, std::size_t df) {
    if (df == 0) throw ConfigError("chi_squared_upper_p: df must be positive");
    if (statistic <= 0.0) return 1.0;
    double p = regularized_gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

double shannon_entropy_bits(const std::vector<std::size_t>& counts) {
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    if (total == 0) return 0.0;
    double h = 0.0;
    for (std::size_t c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h;
}

}  // namespace agtd
