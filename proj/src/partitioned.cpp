#include "qtw/partitioned.hpp"

#include <deque>

namespace qtw {

std::vector<int> saw_teeth(const Walk& w) {
    const LevelSummary s = levels(w);
    std::vector<int> teeth(static_cast<std::size_t>(s.maximum) + 2);
    teeth[0] = 0;
    for (int i = 0; i <= s.maximum; ++i)
        teeth[i + 1] = teeth[i] + static_cast<int>(s.up[i] + s.down[i]);
    return teeth;
}

PartitionedWalk beta(const MarkedArray& m) {
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(m.array.total_entries()));
    std::vector<int> teeth{0};
    for (const auto& row : m.array.rows()) {
        steps.insert(steps.end(), row.begin(), row.end());
        teeth.push_back(static_cast<int>(steps.size()));
    }
    return {Walk(std::move(steps)), std::move(teeth), m.preterminal};
}

MarkedArray beta_inv(const PartitionedWalk& pw) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(pw.block_count()));
    const auto& steps = pw.walk.steps();
    for (int j = 0; j + 1 < static_cast<int>(pw.teeth.size()); ++j)
        rows.emplace_back(steps.begin() + pw.teeth[j], steps.begin() + pw.teeth[j + 1]);
    return {IncrementArray(std::move(rows)), pw.preterminal};
}

TroughProfile trough(const PartitionedWalk& pw) {
    const auto vals = values(pw.walk);
    const int t_next = pw.teeth[pw.preterminal + 1];
    const int terminal = pw.preterminal + (vals[t_next] - vals[t_next - 1]);
    return {terminal - vals.back(), terminal};
}

std::vector<int> saw_path(const PartitionedWalk& pw) {
    const auto vals = values(pw.walk);
    std::vector<int> out(vals.size());
    out[0] = 0;
    for (int j = 0; j + 1 < static_cast<int>(pw.teeth.size()); ++j) {
        const int a = pw.teeth[j], b = pw.teeth[j + 1];
        const int descent = ((b - a) - (vals[b] - vals[a])) / 2;
        for (int t = a + 1; t <= b; ++t)
            out[t] = t <= a + descent ? vals[a] - (t - a) : vals[a] - 2 * descent + (t - a);
    }
    return out;
}

bool has_saw_property(const PartitionedWalk& pw) {
    const auto vals = values(pw.walk);
    const TroughProfile m = trough(pw);
    for (int j = 0; j <= pw.height(); ++j) {
        const int a = pw.teeth[j], b = pw.teeth[j + 1];
        if (vals[b] + vals[a] != (b - a) + 2 * m.at(j)) return false;
    }
    return true;
}

bool saw_property_via_crossings(const PartitionedWalk& pw) {
    const auto vals = values(pw.walk);
    const TroughProfile m = trough(pw);
    int acc = 0;  // sum_{i<j} (u_i - d_i)
    for (int j = 0; j <= pw.height(); ++j) {
        const int a = pw.teeth[j], b = pw.teeth[j + 1];
        const int diff = vals[b] - vals[a];
        const int descent = ((b - a) - diff) / 2;
        if (m.at(j) != acc - descent) return false;
        acc += diff;
    }
    return true;
}

bool saw_property_via_saw_path(const PartitionedWalk& pw) {
    const auto path = saw_path(pw);
    const TroughProfile m = trough(pw);
    for (int j = 0; j <= pw.height(); ++j) {
        int lowest = path[pw.teeth[j]];
        for (int t = pw.teeth[j]; t <= pw.teeth[j + 1]; ++t) lowest = std::min(lowest, path[t]);
        if (lowest != m.at(j)) return false;
    }
    return true;
}

bool has_bookends(const PartitionedWalk& pw) {
    const TroughProfile m = trough(pw);
    const int lo = std::min(pw.preterminal, m.terminal);
    const int hi = std::max(pw.preterminal, m.terminal);
    for (int i = 0; i <= pw.height(); ++i) {
        const int last = pw.walk.step(pw.teeth[i + 1]);
        if (i <= lo && last != 1) return false;
        if (i >= hi && last != -1) return false;
    }
    return true;
}

QuantilePair gamma(const PartitionedWalk& pw) {
    return {pw.walk, pw.teeth[pw.preterminal + 1]};
}

PartitionedWalk gamma_inv(const Walk& v, int k) {
    if (!is_quantile_pair(v, k)) throw NotQuantilePair{};
    const int n = v.length();
    const auto vals = values(v);
    const int y_k = vals[k] - vals[k - 1];
    const int v_n = vals[n];
    // Trough values indexed relative to the preterminal block: off(i) = M(P+i).
    const auto off = [&](int i) {
        const int a = i + v_n - y_k;
        const int b = i - y_k;
        return (a > 0 ? a : 0) - (b > 0 ? b : 0);
    };

    std::deque<int> teeth{k};

    // Leftward: t_{P-r} is the first hit of a line sloping down to the
    // known tooth on its right. The walk reaches 0 after exactly P+1 hits.
    int preterminal = -1;
    for (int right = k, r = 0; right > 0; ++r) {
        const int target_base = right + 2 * off(-r) - vals[right];
        int found = -1;
        for (int t = 0; t < right; ++t)
            if (vals[t] == target_base - t) { found = t; break; }
        if (found < 0) throw InversionFailure{};
        teeth.push_front(found);
        right = found;
        preterminal = r;  // r left hits so far means P >= r
    }

    // Rightward: t_{j+1} is the first hit of a line sloping up from the
    // known tooth on its left, stopping once a tooth lands on n.
    for (int left = k, r = 0; left < n; ++r) {
        const int target_base = -left + 2 * off(r + 1) - vals[left];
        int found = -1;
        for (int t = 0; t <= n; ++t)
            if (vals[t] == target_base + t) { found = t; break; }
        if (found <= left) throw InversionFailure{};
        teeth.push_back(found);
        left = found;
    }

    return {v, std::vector<int>(teeth.begin(), teeth.end()), preterminal};
}

Walk quantile_inverse(const Walk& v, int k) {
    return reconstitute(beta_inv(gamma_inv(v, k)));
}

std::vector<TanakaRow> tanaka_at_teeth(const Walk& w) {
    const LevelSummary s = levels(w);
    const auto teeth = saw_teeth(w);
    const auto q = values(quantile_transform(w).walk);
    const auto pos = [](int x) { return x > 0 ? x : 0; };
    std::vector<TanakaRow> rows;
    rows.reserve(static_cast<std::size_t>(s.maximum) + 2);
    for (int j = -1; j <= s.maximum; ++j) {
        const std::int64_t u = j < 0 ? 0 : s.up[j];
        rows.push_back({j, q[teeth[j + 1]],
                        static_cast<int>(u + pos(j - s.start) - pos(j - s.terminal))});
    }
    return rows;
}

}  // namespace qtw
