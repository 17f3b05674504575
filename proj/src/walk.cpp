#include "qtw/walk.hpp"

#include <charconv>
#include <cmath>

namespace qtw {

WalkClass classify(const Walk& w) {
    WalkClass c;
    const auto vals = values(w);
    const int n = w.length();
    c.bridge = vals[n] == 0;
    c.non_negative = std::all_of(vals.begin(), vals.end(), [](int v) { return v >= 0; });
    if (n > 0) {
        c.first_passage_bridge =
            std::none_of(vals.begin(), vals.end() - 1, [&](int v) { return v == vals[n]; });
    }
    c.dyck = c.bridge && c.non_negative;
    return c;
}

WalkClass classify(const RealWalk& w) {
    WalkClass c;
    const auto vals = values(w);
    c.bridge = vals.back() == 0.0;
    c.non_negative = std::all_of(vals.begin(), vals.end(), [](double v) { return v >= 0.0; });
    c.general = true;
    return c;
}

LevelSummary levels(const Walk& w) {
    if (w.empty()) throw EmptyWalk{};
    const auto vals = values(w);
    const int n = w.length();
    // The minimum and maximum run over w(0)..w(n-1); w(n) is excluded.
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end() - 1);
    LevelSummary s;
    s.start = -*lo;
    s.terminal = vals[n] - *lo;
    s.preterminal = vals[n - 1] - *lo;
    s.maximum = *hi - *lo;
    s.up.assign(s.maximum + 1, 0);
    s.down.assign(s.maximum + 1, 0);
    for (int j = 1; j <= n; ++j) {
        const int level = vals[j - 1] + s.start;
        (w.step(j) > 0 ? s.up : s.down)[level] += 1;
    }
    return s;
}

Walk parse_walk(std::string_view text) {
    std::vector<int> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': steps.push_back(+1); break;
            case '-': steps.push_back(-1); break;
            default: throw ParseError("expected '+' or '-'", i);
        }
    }
    return Walk(std::move(steps));
}

RealWalk parse_real_walk(std::string_view text) {
    std::vector<double> steps;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        double x = 0.0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        const auto res = std::from_chars(first, last, x);
        if (res.ec != std::errc{} || res.ptr != last || first == last)
            throw ParseError("expected a decimal real", pos);
        steps.push_back(x);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return RealWalk(std::move(steps));
}

std::string format_walk(const Walk& w) {
    std::string out;
    out.reserve(w.steps().size());
    for (int s : w.steps()) out.push_back(s > 0 ? '+' : '-');
    return out;
}

std::string format_walk(const RealWalk& w) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < w.steps().size(); ++i) {
        if (i) out.push_back(',');
        const auto res = std::to_chars(buf, buf + sizeof buf, w.steps()[i]);
        out.append(buf, res.ptr);
    }
    return out;
}

}  // namespace qtw
