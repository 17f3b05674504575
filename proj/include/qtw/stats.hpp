#pragma once

#include <cstddef>
#include <vector>

#include "qtw/errors.hpp"

namespace qtw {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    bool pass = true;
};

/// Two-sided two-sample Kolmogorov-Smirnov test. pass means the p-value is
/// at least alpha. Requires 50+ samples per side.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha);

/// P(sup |bridge| >= c sqrt(2n)) <= 2 exp(-c^2) for a simple random walk
/// bridge; the reflection-principle bound used to size gap thresholds.
double srw_bridge_max_modulus_bound(double c);

/// Smallest c with 2 exp(-c^2) <= p.
double srw_bridge_max_modulus_quantile(double p);

/// Upper tail of the chi-square distribution via the regularized
/// incomplete gamma function.
double chi_square_pvalue(double statistic, int dof);

}  // namespace qtw
