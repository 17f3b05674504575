#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "qtw/walk.hpp"

namespace qtw {

/// The permutation that reorders step indices 1..n so that the key pairs
/// (w(i-1), i) come out lexicographically increasing. It never depends on
/// the final increment x_n.
struct QuantilePermutation {
    std::vector<int> order;  // order[i-1] holds the i-th index in sorted position

    int size() const { return static_cast<int>(order.size()); }
    int at(int i) const { return order[static_cast<std::size_t>(i - 1)]; }

    /// Position i with at(i) == target.
    int inverse_of(int target) const {
        for (int i = 1; i <= size(); ++i)
            if (at(i) == target) return i;
        throw IndexError("index not present in permutation");
    }
};

template <typename Step>
QuantilePermutation quantile_permutation(const basic_walk<Step>& w) {
    const int n = w.length();
    if (n == 0) throw EmptyWalk{};
    const auto vals = values(w);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals[a - 1] != vals[b - 1]) return vals[a - 1] < vals[b - 1];
        return a < b;
    });
    return {std::move(order)};
}

/// (v, k): a quantile walk together with a helper index in [1, n].
struct QuantilePair {
    Walk walk;
    int helper = 0;

    friend bool operator==(const QuantilePair&, const QuantilePair&) = default;
};

/// Reorders the increments along the quantile permutation. The helper is
/// the slot where the original final increment lands.
QuantilePair quantile_transform(const Walk& w);
std::pair<RealWalk, int> quantile_transform(const RealWalk& w);

/// A_w(j) = w(phi(j) - 1): the j-th order statistic of the pre-step values
/// w(0)..w(n-1). Throws IndexError unless j lies in [1, n].
template <typename Step>
Step occupation_quantile_discrete(const basic_walk<Step>& w, int j) {
    if (j < 1 || j > w.length()) throw IndexError("occupation quantile index out of range");
    const auto phi = quantile_permutation(w);
    return values(w)[phi.at(j) - 1];
}

/// Non-negative, or a first-passage bridge to a negative level.
bool is_quantile_walk(const Walk& v);

/// k in [1, n], v a quantile walk, v >= 0 before k and v > v(n) from k on.
bool is_quantile_pair(const Walk& v, int k);

/// All k admitted by is_quantile_pair, computed by the closed-form window
/// rules rather than by scanning every k. Throws NotQuantileWalk when v is
/// not a quantile walk.
std::vector<int> helper_range(const Walk& v);

}  // namespace qtw
