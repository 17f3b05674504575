#include "qtw/vervaat.hpp"

#include "qtw/quantile.hpp"

namespace qtw {

namespace {

// Residue of x modulo n taken in [1, n] rather than [0, n-1].
int mod_1n(int x, int n) {
    const int r = x % n;
    return r <= 0 ? r + n : r;
}

}  // namespace

VervaatPair vervaat_transform(const Walk& w) {
    const int n = w.length();
    if (n == 0) throw EmptyWalk{};
    const auto vals = values(w);
    const int tau =
        static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    std::vector<int> steps(n);
    for (int j = 1; j <= n; ++j) steps[j - 1] = w.step(mod_1n(j + tau, n));
    return {Walk(std::move(steps)), n - tau};
}

Walk vervaat_inverse(const Walk& v, int k) {
    if (!is_vervaat_pair(v, k) || v.empty()) throw NotVervaatPair{};
    const int n = v.length();
    std::vector<int> steps(n);
    for (int i = 1; i <= n; ++i) steps[i - 1] = v.step(mod_1n(i + k, n));
    return Walk(std::move(steps));
}

bool is_vervaat_pair(const Walk& v, int k) {
    const int n = v.length();
    if (k < 0 || k > n) return false;
    const auto vals = values(v);
    for (int j = 0; j <= k; ++j)
        if (vals[j] < 0) return false;
    for (int j = k; j < n; ++j)
        if (vals[j] <= vals[n]) return false;
    return true;
}

FiberCounts fiber_compare(const Walk& v) {
    const int n = v.length();
    if (n == 0) return {0, 0};  // neither transform acts on the empty walk
    FiberCounts counts;
    for (int k = 1; k <= n; ++k) counts.quantile += is_quantile_pair(v, k) ? 1 : 0;
    for (int k = 0; k <= n; ++k) counts.vervaat += is_vervaat_pair(v, k) ? 1 : 0;
    return counts;
}

}  // namespace qtw
