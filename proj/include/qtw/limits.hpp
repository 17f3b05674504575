#pragma once

#include <cstdint>
#include <vector>

#include "qtw/stats.hpp"
#include "qtw/walk.hpp"

namespace qtw {

/// Brownian proxy: a simple walk of length 4^depth read at spatial
/// resolution 2^-depth.
struct FineWalk {
    Walk walk;
    int depth;
};

/// Deterministic in (depth, seed); depth must lie in [1, 12].
FineWalk simulate_fine_walk(int depth, std::uint64_t seed);

struct EmbeddedWalk {
    Walk walk;
    int level;
    bool truncated;  // source exhausted before 4^level crossings
};

/// Crossing-time extraction: emits one +-1 step per displacement of `span`
/// from the previous crossing anchor, stopping after max_steps.
EmbeddedWalk extract_crossings(const Walk& w, int span, std::int64_t max_steps, int level);

/// Walk embedded at the 2^-n grid; embed(fine, depth) returns the fine walk
/// itself.
EmbeddedWalk embed(const FineWalk& fine, int n);

/// Visit counts over the pre-step positions j in [0, n), the occupation CDF
/// with its exact half-integer values at integer levels, and the inverse
/// quantile function. F is interpolated linearly between its exact integer
/// anchors, so F and A form an exactly invertible pair on the grid.
class LocalTimeProfile {
public:
    explicit LocalTimeProfile(const Walk& walk);

    std::int64_t length() const { return length_; }
    int end_value() const { return end_value_; }
    int min_level() const { return min_; }
    int max_level() const { return max_; }

    std::int64_t local_time(int x) const;  // exact count; 0 outside the range
    double local_time_at(double x) const;  // linear interpolation

    std::int64_t cdf2(int k) const;  // 2 F(k) = 2 sum_{j<k} L(j) + L(k), exact
    double cdf(double y) const;
    double quantile(double t) const;  // A = F^{-1} on [0, length], ends extended

private:
    std::int64_t length_;
    int end_value_;
    int min_, max_;
    std::vector<std::int64_t> counts_;  // counts_[x - min_]
    std::vector<std::int64_t> cdf2_;    // cdf2_[i] = 2 F(min_ - 1 + i)
};

/// t -> (L(A(t))/2 + A(t)+ - (A(t) - end)+) / space_scale on t in [0, 1];
/// the Tanaka form of the transform built from occupation data alone. At
/// t = 1 it returns exactly the rescaled end value.
class TanakaProfile {
public:
    TanakaProfile(LocalTimeProfile profile, double space_scale, double time_scale)
        : profile_(std::move(profile)), space_scale_(space_scale), time_scale_(time_scale) {}

    double operator()(double t) const;

    const LocalTimeProfile& profile() const { return profile_; }

private:
    LocalTimeProfile profile_;
    double space_scale_;
    double time_scale_;
};

inline LocalTimeProfile local_time_profile(const Walk& walk) { return LocalTimeProfile(walk); }

/// Profile of a walk on the dyadic scales 2^n / 4^n.
TanakaProfile tanaka_profile(const Walk& walk, int n);

/// Per-level diagnostics, all rescaled by 2^-n except item_iii (a CDF gap):
///   item_i    sup_k |L_n(k) - 2 u_k|
///   item_ii   sup_k |F_n(k) - t_k - u_k|  (= item_i / 2 exactly)
///   item_iii  sup_k |F_fine(k 2^-n) - t_k 4^-n|
///   item_iv   sup_k |A_n(t_k) - k|
///   item_v    sup_k |Q(S_n)(t_k) - Tanaka form at A_n(t_k)|
/// sup_gap compares the rescaled transform against the fine-walk Tanaka
/// profile on the full n-level time grid.
struct ConvergenceRow {
    int level = 0;
    double item_i = 0, item_ii = 0, item_iii = 0, item_iv = 0, item_v = 0;
    double sup_gap = 0;
    bool truncated = false;
};

std::vector<ConvergenceRow> convergence_report(const FineWalk& fine,
                                               const std::vector<int>& levels);

/// Rescaled values of the Vervaat transform of the fine walk, the proxy for
/// the transform of the limiting path.
std::vector<double> vervaat_continuous_sample(const FineWalk& fine);

struct JeulinPoint {
    double t;
    double ks;
    bool pass;
};

struct JeulinReport {
    std::uint64_t seed = 0;
    int bridge_length = 0;
    std::vector<JeulinPoint> points;
};

/// Samples the rescaled L(A(t))/2 profile of uniform bridges against the
/// Vervaat transform of independent uniform bridges (the excursion proxy),
/// with a two-sample KS comparison at each grid time.
JeulinReport jeulin_experiment(int bridge_length, int samples, std::uint64_t seed,
                               double alpha,
                               const std::vector<double>& t_grid = {0.25, 0.5, 0.75});

}  // namespace qtw
