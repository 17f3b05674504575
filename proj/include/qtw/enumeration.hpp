#pragma once

#include <cstdint>
#include <vector>

#include "qtw/walk.hpp"

namespace qtw {

/// Exact binomial coefficient. 64-bit integers hold everything through
/// C(64,32); larger n raises DomainError rather than silently overflowing.
std::uint64_t binomial(int n, int k);

/// Everywhere non-negative walks with u up-steps and d down-steps;
/// requires u >= d >= 0.
std::uint64_t count_nonneg(int u, int d);

/// First-passage bridges with u up-steps and d down-steps; requires u != d.
std::uint64_t count_fpb(int u, int d);

/// Quantile pairs (v, k) where v has u up-steps and d down-steps. Equals
/// C(u+d, u), the number of walks with that step profile.
std::uint64_t count_quantile_pairs(int u, int d);

/// Sends a non-negative walk ending in a down-step to a first-passage
/// bridge down: drop the final down-step, reverse and negate the rest,
/// append a down-step. Applying the same three steps inverts it.
Walk flip_transform(const Walk& v);

/// Checks q(u,d+1) = q(d,u+1) - C(u+d,u+1) + C(u+d,u-1) with both sides
/// counted by brute force; limited to u+d <= 14.
bool q_count_flip_check(int u, int d);

/// Cuts a first-passage bridge to -b into its b first-passage-to-(-1)
/// blocks. Throws DomainError unless the input is such a bridge.
std::vector<Walk> cycle_decompose(const Walk& w);

/// code -> walk with '-' sorting before '+': bit (n-1-i) of the code gives
/// step i+1, so ascending codes enumerate increment strings in
/// lexicographic order.
Walk walk_from_code(int n, std::uint64_t code);
std::uint64_t walk_code(const Walk& w);

/// All 2^n simple walks of length n, or the codes in [first, last) for
/// range-partitioned scans.
class WalkRange {
public:
    explicit WalkRange(int n)
        : WalkRange(n, 0, n >= 64 ? throw DomainError("enumeration capped at n < 64")
                                  : std::uint64_t{1} << n) {}
    WalkRange(int n, std::uint64_t first, std::uint64_t last)
        : n_(n), first_(first), last_(last) {}

    class iterator {
    public:
        iterator(int n, std::uint64_t code) : n_(n), code_(code) {}
        Walk operator*() const { return walk_from_code(n_, code_); }
        iterator& operator++() { ++code_; return *this; }
        bool operator!=(const iterator& other) const { return code_ != other.code_; }

    private:
        int n_;
        std::uint64_t code_;
    };

    iterator begin() const { return {n_, first_}; }
    iterator end() const { return {n_, last_}; }

private:
    int n_;
    std::uint64_t first_, last_;
};

template <typename Fn>
void for_each_walk(int n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
    for (std::uint64_t code = first; code < last; ++code) fn(walk_from_code(n, code));
}

template <typename Fn>
void for_each_walk(int n, Fn&& fn) {
    if (n < 0 || n >= 64) throw DomainError("enumeration capped at n < 64");
    for_each_walk(n, 0, std::uint64_t{1} << n, fn);
}

/// Bridge census: for each Dyck path d of the given even length, how many
/// bridges map to d under the quantile transform. The count equals the
/// duration of d's final excursion, and the counts sum to C(n2, n2/2).
struct DyckCount {
    Walk path;
    std::uint64_t count;
};

std::vector<DyckCount> bridge_dyck_distribution(int n2);

/// Duration of the final excursion above the end value.
int final_excursion_duration(const Walk& d);

}  // namespace qtw
