#include "qtw/limits.hpp"

#include <algorithm>
#include <cmath>

#include "qtw/partitioned.hpp"
#include "qtw/quantile.hpp"
#include "qtw/rng.hpp"
#include "qtw/vervaat.hpp"

namespace qtw {

FineWalk simulate_fine_walk(int depth, std::uint64_t seed) {
    if (depth < 1 || depth > 12) throw DomainError("fine-walk depth must lie in [1, 12]");
    const std::int64_t len = std::int64_t{1} << (2 * depth);
    auto rng = make_rng(seed, 0);
    std::vector<int> steps(static_cast<std::size_t>(len));
    std::uint64_t word = 0;
    for (std::int64_t j = 0; j < len; ++j) {
        if ((j & 63) == 0) word = rng();
        steps[j] = (word >> (j & 63)) & 1 ? +1 : -1;
    }
    return {Walk(std::move(steps)), depth};
}

EmbeddedWalk extract_crossings(const Walk& w, int span, std::int64_t max_steps, int level) {
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(max_steps));
    int anchor = 0, value = 0;
    for (int x : w.steps()) {
        value += x;
        if (value - anchor == span) {
            steps.push_back(+1);
            anchor = value;
        } else if (anchor - value == span) {
            steps.push_back(-1);
            anchor = value;
        }
        if (static_cast<std::int64_t>(steps.size()) == max_steps)
            return {Walk(std::move(steps)), level, false};
    }
    return {Walk(std::move(steps)), level, true};
}

EmbeddedWalk embed(const FineWalk& fine, int n) {
    if (n < 0 || n > fine.depth)
        throw DomainError("embedding level must lie in [0, depth]");
    return extract_crossings(fine.walk, 1 << (fine.depth - n), std::int64_t{1} << (2 * n), n);
}

LocalTimeProfile::LocalTimeProfile(const Walk& walk) {
    if (walk.empty()) throw EmptyWalk{};
    length_ = walk.length();
    const auto vals = values(walk);
    end_value_ = vals.back();
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end() - 1);
    min_ = *lo;
    max_ = *hi;
    counts_.assign(static_cast<std::size_t>(max_ - min_) + 1, 0);
    for (std::size_t j = 0; j + 1 < vals.size(); ++j) counts_[vals[j] - min_] += 1;
    // 2 F at the integer anchors min-1 .. max+1.
    cdf2_.assign(counts_.size() + 2, 0);
    std::int64_t below = 0;
    for (std::size_t i = 1; i < cdf2_.size(); ++i) {
        const std::int64_t here = i - 1 < counts_.size() ? counts_[i - 1] : 0;
        cdf2_[i] = 2 * below + here;
        below += here;
    }
}

std::int64_t LocalTimeProfile::local_time(int x) const {
    if (x < min_ || x > max_) return 0;
    return counts_[static_cast<std::size_t>(x - min_)];
}

double LocalTimeProfile::local_time_at(double x) const {
    const double k = std::floor(x);
    const double frac = x - k;
    const int base = static_cast<int>(k);
    return (1.0 - frac) * static_cast<double>(local_time(base)) +
           frac * static_cast<double>(local_time(base + 1));
}

std::int64_t LocalTimeProfile::cdf2(int k) const {
    if (k < min_ - 1) return 0;
    if (k > max_ + 1) return 2 * length_;
    return cdf2_[static_cast<std::size_t>(k - (min_ - 1))];
}

double LocalTimeProfile::cdf(double y) const {
    if (y <= min_ - 1) return 0.0;
    if (y >= max_ + 1) return static_cast<double>(length_);
    const double k = std::floor(y);
    const double frac = y - k;
    const int base = static_cast<int>(k);
    const double lo = static_cast<double>(cdf2(base));
    const double hi = static_cast<double>(cdf2(base + 1));
    return 0.5 * (lo + frac * (hi - lo));
}

double LocalTimeProfile::quantile(double t) const {
    const double tt = 2.0 * t;
    if (tt <= 0.0) return min_ - 1;
    if (tt >= static_cast<double>(2 * length_)) return max_ + 1;
    // cdf2_ is strictly increasing: every interior gap contains a visit.
    const auto it = std::upper_bound(cdf2_.begin(), cdf2_.end(), tt,
                                     [](double v, std::int64_t c) { return v < static_cast<double>(c); });
    const std::size_t i = static_cast<std::size_t>(it - cdf2_.begin()) - 1;
    const double lo = static_cast<double>(cdf2_[i]);
    const double hi = static_cast<double>(cdf2_[i + 1]);
    return (min_ - 1 + static_cast<double>(i)) + (tt - lo) / (hi - lo);
}

double TanakaProfile::operator()(double t) const {
    const double a = profile_.quantile(t * time_scale_);
    const double end = static_cast<double>(profile_.end_value());
    const double v = 0.5 * profile_.local_time_at(a) + std::max(a, 0.0) - std::max(a - end, 0.0);
    return v / space_scale_;
}

TanakaProfile tanaka_profile(const Walk& walk, int n) {
    return {LocalTimeProfile(walk), std::ldexp(1.0, n), std::ldexp(1.0, 2 * n)};
}

namespace {

ConvergenceRow convergence_row(const EmbeddedWalk& embedded, const LocalTimeProfile& fine_profile,
                               const TanakaProfile& fine_tanaka, int fine_depth) {
    const int n = embedded.level;
    ConvergenceRow row;
    row.level = n;
    row.truncated = embedded.truncated;
    if (embedded.walk.empty()) return row;

    const Walk& s = embedded.walk;
    const LevelSummary lv = levels(s);
    const auto teeth = saw_teeth(s);  // indexed by level; value k <-> level k - base
    const int base = -lv.start;       // minimum pre-step value of s
    const LocalTimeProfile profile(s);
    const auto q = values(quantile_transform(s).walk);
    const int s_end = end_value(s);

    const double inv2n = std::ldexp(1.0, -n);
    const double inv4n = std::ldexp(1.0, -2 * n);
    const double inv4N = std::ldexp(1.0, -2 * fine_depth);
    const int span = 1 << (fine_depth - n);

    for (int lvl = 0; lvl <= lv.maximum + 1; ++lvl) {
        const int k = base + lvl;                      // value at this level
        const std::int64_t t_k = teeth[lvl];
        const std::int64_t u_k = lvl <= lv.maximum ? lv.up[lvl] : 0;
        if (lvl <= lv.maximum) {
            const std::int64_t lt = profile.local_time(k);
            row.item_i = std::max(row.item_i, inv2n * std::llabs(lt - 2 * u_k));
        }
        // |F_n(k) - t_k - u_k| in half-integers; equals item_i / 2 exactly.
        const std::int64_t gap2 = profile.cdf2(k) - 2 * t_k - 2 * u_k;
        row.item_ii = std::max(row.item_ii, inv2n * 0.5 * std::llabs(gap2));
        // Occupation CDF of the fine walk at the same spatial level.
        const double fine_cdf = 0.5 * static_cast<double>(fine_profile.cdf2(k * span));
        row.item_iii = std::max(row.item_iii,
                                std::fabs(inv4N * fine_cdf - inv4n * static_cast<double>(t_k)));
        const double a = profile.quantile(static_cast<double>(t_k));
        row.item_iv = std::max(row.item_iv, inv2n * std::fabs(a - k));
        const double tanaka = 0.5 * profile.local_time_at(a) + std::max(a, 0.0) -
                              std::max(a - s_end, 0.0);
        row.item_v = std::max(row.item_v, inv2n * std::fabs(q[t_k] - tanaka));
    }

    for (int j = 0; j <= s.length(); ++j) {
        const double gap = std::fabs(inv2n * q[j] - fine_tanaka(j * inv4n));
        row.sup_gap = std::max(row.sup_gap, gap);
    }
    return row;
}

}  // namespace

std::vector<ConvergenceRow> convergence_report(const FineWalk& fine,
                                               const std::vector<int>& levels_wanted) {
    LocalTimeProfile fine_profile(fine.walk);
    TanakaProfile fine_tanaka(fine_profile, std::ldexp(1.0, fine.depth),
                              std::ldexp(1.0, 2 * fine.depth));
    std::vector<ConvergenceRow> rows;
    rows.reserve(levels_wanted.size());
    for (int n : levels_wanted)
        rows.push_back(convergence_row(embed(fine, n), fine_profile, fine_tanaka, fine.depth));
    return rows;
}

std::vector<double> vervaat_continuous_sample(const FineWalk& fine) {
    const auto vals = values(vervaat_transform(fine.walk).walk);
    const double scale = std::ldexp(1.0, -fine.depth);
    std::vector<double> out(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) out[i] = vals[i] * scale;
    return out;
}

JeulinReport jeulin_experiment(int bridge_length, int samples, std::uint64_t seed,
                               double alpha, const std::vector<double>& t_grid) {
    if (bridge_length <= 0 || bridge_length % 2 != 0)
        throw DomainError("bridge length must be positive and even");
    auto rng = make_rng(seed, 1);
    const double root_m = std::sqrt(static_cast<double>(bridge_length));
    std::vector<std::vector<double>> lt(t_grid.size()), ex(t_grid.size());
    for (auto& v : lt) v.reserve(static_cast<std::size_t>(samples));
    for (auto& v : ex) v.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
        const Walk b = random_bridge(rng, bridge_length);
        const LocalTimeProfile profile(b);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            const double a = profile.quantile(t_grid[i] * bridge_length);
            lt[i].push_back(0.5 * profile.local_time_at(a) / root_m);
        }
        const Walk b2 = random_bridge(rng, bridge_length);
        const auto vvals = values(vervaat_transform(b2).walk);
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            const int j = static_cast<int>(t_grid[i] * bridge_length);
            ex[i].push_back(vvals[j] / root_m);
        }
    }
    JeulinReport report{seed, bridge_length, {}};
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const KsResult ks = ks_two_sample(lt[i], ex[i], alpha);
        report.points.push_back({t_grid[i], ks.statistic, ks.pass});
    }
    return report;
}

}  // namespace qtw
