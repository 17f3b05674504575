#include "qtw/arrays.hpp"

namespace qtw {

MarkedArray alpha(const Walk& w) {
    const LevelSummary s = levels(w);
    const auto vals = values(w);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.maximum) + 1);
    for (int i = 0; i <= s.maximum; ++i)
        rows[i].reserve(static_cast<std::size_t>(s.up[i] + s.down[i]));
    for (int j = 1; j <= w.length(); ++j)
        rows[vals[j - 1] + s.start].push_back(w.step(j));
    return {IncrementArray(std::move(rows)), s.preterminal};
}

int sigma(const IncrementArray& x) {
    int total = 0;
    for (const auto& row : x.rows())
        for (int v : row) total += v;
    return total;
}

CrossingCounts crossing_counts(const IncrementArray& x) {
    CrossingCounts c;
    c.up.assign(x.height() + 1, 0);
    c.down.assign(x.height() + 1, 0);
    for (int i = 0; i <= x.height(); ++i)
        for (int v : x.row(i)) (v > 0 ? c.up : c.down)[i] += 1;
    return c;
}

SpecialRows special_rows(const MarkedArray& m) {
    const int terminal = m.preterminal + m.array.row(m.preterminal).back();
    return {terminal, terminal - sigma(m.array)};
}

bool has_bookends(const MarkedArray& m) {
    const auto [terminal, start] = special_rows(m);
    (void)start;
    const int lo = std::min(m.preterminal, terminal);
    const int hi = std::max(m.preterminal, terminal);
    for (int i = 0; i <= m.array.height(); ++i) {
        const int last = m.array.row(i).back();
        if (i <= lo && last != 1) return false;
        if (i >= hi && last != -1) return false;
    }
    return true;
}

bool has_crossings(const MarkedArray& m) {
    const auto counts = crossing_counts(m.array);
    const auto [terminal, start] = special_rows(m);
    const int height = m.array.height();
    for (int i = 0; i <= height + 1; ++i) {
        const std::int64_t u_prev = i == 0 ? 0 : counts.up[i - 1];
        const std::int64_t d_here = i == height + 1 ? 0 : counts.down[i];
        const int want = (i <= terminal ? 1 : 0) - (i <= start ? 1 : 0);
        if (u_prev - d_here != want) return false;
    }
    return true;
}

bool is_valid(const MarkedArray& m) {
    return has_bookends(m) && has_crossings(m);
}

Walk reconstitute_raw(const MarkedArray& m) {
    const int height = m.array.height();
    const std::int64_t total = m.array.total_entries();
    std::vector<std::size_t> cursor(static_cast<std::size_t>(height) + 1, 0);
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(total));
    int level = special_rows(m).start;
    while (level >= 0 && level <= height && cursor[level] < m.array.row(level).size()) {
        const int x = m.array.row(level)[cursor[level]++];
        steps.push_back(x);
        level += x;
    }
    if (static_cast<std::int64_t>(steps.size()) != total) throw StuckReconstitution{};
    return Walk(std::move(steps));
}

Walk reconstitute(const MarkedArray& m) {
    if (!is_valid(m)) throw InvalidArray{};
    return reconstitute_raw(m);
}

std::vector<int> valid_marks(const IncrementArray& x) {
    std::vector<int> marks;
    for (int p = 0; p <= x.height(); ++p)
        if (is_valid(MarkedArray(x, p))) marks.push_back(p);
    return marks;
}

}  // namespace qtw
