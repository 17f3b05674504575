#include "qtw/quantile.hpp"

namespace qtw {

namespace {

template <typename Step>
std::pair<basic_walk<Step>, int> transform_impl(const basic_walk<Step>& w) {
    const auto phi = quantile_permutation(w);
    const int n = w.length();
    std::vector<Step> steps(n);
    for (int i = 1; i <= n; ++i) steps[i - 1] = w.step(phi.at(i));
    return {basic_walk<Step>(std::move(steps)), phi.inverse_of(n)};
}

}  // namespace

QuantilePair quantile_transform(const Walk& w) {
    auto [q, k] = transform_impl(w);
    return {std::move(q), k};
}

std::pair<RealWalk, int> quantile_transform(const RealWalk& w) {
    return transform_impl(w);
}

bool is_quantile_walk(const Walk& v) {
    const auto c = classify(v);
    return c.non_negative || (c.first_passage_bridge && end_value(v) < 0);
}

bool is_quantile_pair(const Walk& v, int k) {
    const int n = v.length();
    if (k < 1 || k > n) return false;
    if (!is_quantile_walk(v)) return false;
    const auto vals = values(v);
    for (int j = 0; j < k; ++j)
        if (vals[j] < 0) return false;
    for (int j = k; j < n; ++j)
        if (vals[j] <= vals[n]) return false;
    return true;
}

std::vector<int> helper_range(const Walk& v) {
    if (!is_quantile_walk(v)) throw NotQuantileWalk{};
    const int n = v.length();
    if (n == 0) return {};
    const auto vals = values(v);
    int lo = n, hi = n;
    if (vals[n] < 0) {
        // Any k up to the hitting time of -1 works: a first-passage bridge
        // down stays above its end value throughout.
        lo = 1;
        for (int j = 1; j <= n; ++j)
            if (vals[j] == -1) { hi = j; break; }
    } else if (v.step(n) < 0) {
        // The final excursion above v(n), endpoint n included.
        int g = 0;
        for (int j = n - 1; j >= 0; --j)
            if (vals[j] == vals[n]) { g = j; break; }
        lo = g + 1;
    }
    std::vector<int> ks(static_cast<std::size_t>(hi - lo + 1));
    std::iota(ks.begin(), ks.end(), lo);
    return ks;
}

}  // namespace qtw
