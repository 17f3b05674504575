#include "qtw/stats.hpp"

#include <algorithm>
#include <cmath>

namespace qtw {

namespace {

// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_tail(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0, sign = 1.0;
    for (int j = 1; j <= 128; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-14) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

// Regularized lower incomplete gamma P(a, x), series + continued fraction.
double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 0.0;
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    // Lentz's continued fraction for Q(a, x).
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha) {
    if (a.size() < 50 || b.size() < 50) throw SampleTooSmall{};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v) ++i;
        while (j < b.size() && b[j] <= v) ++j;
        d = std::max(d, std::fabs(i / na - j / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    const double p = kolmogorov_tail((ne + 0.12 + 0.11 / ne) * d);
    return {d, p, p >= alpha};
}

double srw_bridge_max_modulus_bound(double c) {
    return std::min(1.0, 2.0 * std::exp(-c * c));
}

double srw_bridge_max_modulus_quantile(double p) {
    return std::sqrt(std::log(2.0 / p));
}

double chi_square_pvalue(double statistic, int dof) {
    if (statistic <= 0.0) return 1.0;
    return 1.0 - gamma_p(dof / 2.0, statistic / 2.0);
}

}  // namespace qtw
