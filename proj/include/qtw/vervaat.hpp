#pragma once

#include <cstdint>

#include "qtw/walk.hpp"

namespace qtw {

/// (v, k) with v >= 0 up to and including k, and v > v(n) from k to n-1.
/// Unlike the quantile helper, k = 0 is allowed.
struct VervaatPair {
    Walk walk;
    int helper = 0;

    friend bool operator==(const VervaatPair&, const VervaatPair&) = default;
};

/// Cyclic shift that starts the walk at its first minimum; the helper is
/// n minus the first argmin time. Throws EmptyWalk when n = 0.
VervaatPair vervaat_transform(const Walk& w);

/// Shifts the increments back: x_i = y_{(i+k) mod n}, residues in [1, n].
Walk vervaat_inverse(const Walk& v, int k);

bool is_vervaat_pair(const Walk& v, int k);

struct FiberCounts {
    std::uint64_t quantile = 0;
    std::uint64_t vervaat = 0;
};

/// Preimage counts of v under the quantile and Vervaat transforms. Both
/// equal the number of admissible helpers for v, and they always agree.
FiberCounts fiber_compare(const Walk& v);

}  // namespace qtw
