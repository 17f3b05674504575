#pragma once

#include <vector>

#include "qtw/arrays.hpp"
#include "qtw/quantile.hpp"
#include "qtw/walk.hpp"

namespace qtw {

/// A walk whose increments are cut into contiguous blocks at the teeth
/// 0 = t_0 < t_1 < ... < t_{L+1} = n, with one block marked preterminal.
struct PartitionedWalk {
    Walk walk;
    std::vector<int> teeth;
    int preterminal;

    PartitionedWalk(Walk v, std::vector<int> t, int p)
        : walk(std::move(v)), teeth(std::move(t)), preterminal(p) {
        if (teeth.size() < 2 || teeth.front() != 0 || teeth.back() != walk.length())
            throw DomainError("teeth must run from 0 to the walk length");
        for (std::size_t i = 1; i < teeth.size(); ++i)
            if (teeth[i - 1] >= teeth[i])
                throw DomainError("teeth must be strictly increasing");
        if (p < 0 || p > height())
            throw DomainError("preterminal block index out of range");
    }

    int height() const { return static_cast<int>(teeth.size()) - 2; }  // L
    int block_count() const { return static_cast<int>(teeth.size()) - 1; }

    friend bool operator==(const PartitionedWalk&, const PartitionedWalk&) = default;
};

/// Cumulative crossing counts: t_j = number of increments at levels below j,
/// for j in [0, L+1]. Throws EmptyWalk when n = 0.
std::vector<int> saw_teeth(const Walk& w);

/// Concatenates the rows of a marked array into one walk cut at the row
/// boundaries. Defined on every marked array and trivially invertible.
PartitionedWalk beta(const MarkedArray& m);
MarkedArray beta_inv(const PartitionedWalk& pw);

/// M(j) = (j - start)+ - (j - terminal)+, the correction term of the
/// discrete Tanaka identity. The block indices come from the mark: the
/// terminal sits one step from it in the direction of the preterminal
/// block's final increment, and start = terminal - v(n).
struct TroughProfile {
    int start;
    int terminal;

    int at(int j) const {
        const int a = j - start;
        const int b = j - terminal;
        return (a > 0 ? a : 0) - (b > 0 ? b : 0);
    }
};

TroughProfile trough(const PartitionedWalk& pw);

/// The minimal walk agreeing with v at every tooth: each block descends
/// first and then climbs. Returned as the n+1 values.
std::vector<int> saw_path(const PartitionedWalk& pw);

/// v(t_{j+1}) + v(t_j) = t_{j+1} - t_j + 2 M(j) for every block j.
bool has_saw_property(const PartitionedWalk& pw);

/// Equivalent formulations, exposed for cross-checking:
/// M(j) = -d_j + sum_{i<j} (u_i - d_i), and M(j) = min of the saw path over
/// block j. Both agree with has_saw_property on every partitioned walk.
bool saw_property_via_crossings(const PartitionedWalk& pw);
bool saw_property_via_saw_path(const PartitionedWalk& pw);

/// Block-final increments point toward the preterminal/terminal pair,
/// exactly as the array predicate transported through beta_inv.
bool has_bookends(const PartitionedWalk& pw);

/// Drops the teeth, keeping the walk and k = t_{P+1}.
QuantilePair gamma(const PartitionedWalk& pw);

/// Rebuilds the unique partitioned walk with t_{P+1} = k by growing teeth
/// outward from k: leftward and rightward hitting times of sloped lines
/// determined by the trough values. Throws NotQuantilePair on bad input and
/// InversionFailure if a hitting time is missing (unreachable on quantile
/// pairs).
PartitionedWalk gamma_inv(const Walk& v, int k);

/// Inverse of the quantile transform, composed through the partitioned walk
/// and the marked array.
Walk quantile_inverse(const Walk& v, int k);

/// One row per level index j in [-1, L]: the transform value at the tooth
/// t_{j+1} next to the crossing-count form u_j + (j - S)+ - (j - T)+. The
/// two columns agree for every walk.
struct TanakaRow {
    int level;
    int transform_value;
    int tanaka_rhs;
};

std::vector<TanakaRow> tanaka_at_teeth(const Walk& w);

}  // namespace qtw
