#include "qtw/enumeration.hpp"

#include <array>
#include <map>

#include "qtw/quantile.hpp"

namespace qtw {

std::uint64_t binomial(int n, int k) {
    if (n < 0) throw DomainError("binomial: negative n");
    if (n > 64) throw DomainError("binomial: n > 64 overflows 64-bit counts");
    if (k < 0 || k > n) return 0;
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int i = 0; i <= 64; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
        return c;
    }();
    return table[n][k];
}

std::uint64_t count_nonneg(int u, int d) {
    if (d < 0 || u < d) throw DomainError("non-negative walks need u >= d >= 0");
    return binomial(u + d, u) - binomial(u + d, u + 1);
}

std::uint64_t count_fpb(int u, int d) {
    if (u < 0 || d < 0) throw DomainError("step counts must be non-negative");
    if (u == d) throw DomainError("first-passage bridges need u != d");
    const int m = std::min(u, d);
    return binomial(u + d - 1, m) - binomial(u + d - 1, m - 1);
}

std::uint64_t count_quantile_pairs(int u, int d) {
    if (u < 0 || d < 0) throw DomainError("step counts must be non-negative");
    return binomial(u + d, u);
}

Walk flip_transform(const Walk& v) {
    const int n = v.length();
    if (n == 0 || v.step(n) != -1)
        throw DomainError("flip transform expects a walk ending in a down-step");
    if (!classify(v).non_negative)
        throw DomainError("flip transform expects a non-negative walk");
    std::vector<int> steps(n);
    for (int i = 1; i < n; ++i) steps[i - 1] = -v.step(n - i);
    steps[n - 1] = -1;
    return Walk(std::move(steps));
}

namespace {

std::uint64_t brute_quantile_pairs(int u, int d) {
    std::uint64_t total = 0;
    for_each_walk(u + d, [&](const Walk& v) {
        int ups = 0;
        for (int s : v.steps()) ups += s > 0;
        if (ups != u) return;
        for (int k = 1; k <= v.length(); ++k) total += is_quantile_pair(v, k) ? 1 : 0;
    });
    return total;
}

}  // namespace

bool q_count_flip_check(int u, int d) {
    if (u < 0 || d < 0 || u + d > 14)
        throw DomainError("brute-force check limited to u + d <= 14");
    const auto lhs = static_cast<std::int64_t>(brute_quantile_pairs(u, d + 1));
    const auto rhs = static_cast<std::int64_t>(brute_quantile_pairs(d, u + 1)) -
                     static_cast<std::int64_t>(binomial(u + d, u + 1)) +
                     static_cast<std::int64_t>(binomial(u + d, u - 1));
    return lhs == rhs;
}

std::vector<Walk> cycle_decompose(const Walk& w) {
    const auto vals = values(w);
    if (w.empty() || vals.back() >= 0 || !classify(w).first_passage_bridge)
        throw DomainError("cycle decomposition expects a first-passage bridge down");
    std::vector<Walk> blocks;
    blocks.reserve(static_cast<std::size_t>(-vals.back()));
    int from = 0, target = -1;
    for (int j = 1; j <= w.length(); ++j) {
        if (vals[j] == target) {
            blocks.emplace_back(
                std::vector<int>(w.steps().begin() + from, w.steps().begin() + j));
            from = j;
            --target;
        }
    }
    return blocks;
}

Walk walk_from_code(int n, std::uint64_t code) {
    std::vector<int> steps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        steps[i] = (code >> (n - 1 - i)) & 1 ? +1 : -1;
    return Walk(std::move(steps));
}

std::uint64_t walk_code(const Walk& w) {
    std::uint64_t code = 0;
    for (int s : w.steps()) code = (code << 1) | (s > 0 ? 1 : 0);
    return code;
}

int final_excursion_duration(const Walk& d) {
    const auto vals = values(d);
    const int n = d.length();
    int g = 0;
    for (int j = n - 1; j >= 0; --j)
        if (vals[j] == vals[n]) { g = j; break; }
    return n - g;
}

std::vector<DyckCount> bridge_dyck_distribution(int n2) {
    if (n2 <= 0 || n2 % 2 != 0) throw DomainError("bridge census needs a positive even length");
    if (n2 > 16) throw DomainError("bridge census capped at length 16");
    std::map<std::uint64_t, std::uint64_t> counts;  // keyed by walk code, so sorted a la '-' < '+'
    for_each_walk(n2, [&](const Walk& b) {
        if (end_value(b) != 0) return;
        counts[walk_code(quantile_transform(b).walk)] += 1;
    });
    std::vector<DyckCount> table;
    table.reserve(counts.size());
    for (const auto& [code, count] : counts)
        table.push_back({walk_from_code(n2, code), count});
    return table;
}

}  // namespace qtw
