#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "qtw/errors.hpp"

namespace qtw {

/// A walk of length n is the sequence of prefix sums of its increments
/// x_1..x_n, with w(0) = 0. Integral step types are restricted to +-1
/// (simple walks); basic_walk<double> carries general real increments.
template <typename Step>
class basic_walk {
public:
    basic_walk() = default;

    explicit basic_walk(std::vector<Step> steps) : steps_(std::move(steps)) {
        if constexpr (std::is_integral_v<Step>) {
            for (Step s : steps_)
                if (s != Step{1} && s != Step{-1})
                    throw DomainError("simple walks take +-1 steps only");
        }
    }

    int length() const { return static_cast<int>(steps_.size()); }
    bool empty() const { return steps_.empty(); }

    const std::vector<Step>& steps() const { return steps_; }

    /// x_i with the usual 1-based indexing, i in [1, n].
    Step step(int i) const { return steps_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const basic_walk&, const basic_walk&) = default;

private:
    std::vector<Step> steps_;
};

using Walk = basic_walk<int>;        // simple walk, steps +-1
using RealWalk = basic_walk<double>; // general walk, real steps

/// Prefix sums w(0)..w(n); the first entry is always 0.
template <typename Step>
std::vector<Step> values(const basic_walk<Step>& w) {
    std::vector<Step> out(static_cast<std::size_t>(w.length()) + 1);
    out[0] = Step{0};
    for (int j = 1; j <= w.length(); ++j) out[j] = out[j - 1] + w.step(j);
    return out;
}

template <typename Step>
Step end_value(const basic_walk<Step>& w) {
    Step total{0};
    for (Step s : w.steps()) total += s;
    return total;
}

struct WalkClass {
    bool bridge = false;
    bool non_negative = false;
    bool first_passage_bridge = false;
    bool dyck = false;
    bool general = false;

    friend bool operator==(const WalkClass&, const WalkClass&) = default;
};

/// Full classification. The length-0 walk counts as a non-negative bridge
/// (hence a Dyck path) but not as a first-passage bridge.
WalkClass classify(const Walk& w);

/// General walks only admit the bridge / non-negative flags.
WalkClass classify(const RealWalk& w);

/// The four distinguished levels of a walk together with its crossing
/// counts. Levels are measured from min_{0 <= i < n} w(i); the bound on i
/// is strict, so the final value does not influence the level grid.
struct LevelSummary {
    int start = 0;        // level of the first increment
    int terminal = 0;     // w(n) shifted to the level grid; may be -1 or maximum+1
    int preterminal = 0;  // level of the final increment
    int maximum = 0;      // highest level holding an increment
    std::vector<std::int64_t> up;    // up-crossing counts u_0..u_L
    std::vector<std::int64_t> down;  // down-crossing counts d_0..d_L
};

/// Throws EmptyWalk when n = 0.
LevelSummary levels(const Walk& w);

Walk parse_walk(std::string_view text);           // over the alphabet {+,-}
RealWalk parse_real_walk(std::string_view text);  // comma-separated reals

std::string format_walk(const Walk& w);
std::string format_walk(const RealWalk& w);

}  // namespace qtw
