#pragma once

#include <vector>

#include "qtw/walk.hpp"

namespace qtw {

/// Rows x_0..x_L of +-1 increments, one row per level, every row non-empty.
class IncrementArray {
public:
    explicit IncrementArray(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw DomainError("increment array needs at least one row");
        for (const auto& row : rows_) {
            if (row.empty()) throw DomainError("increment array rows must be non-empty");
            for (int x : row)
                if (x != 1 && x != -1) throw DomainError("increment array entries must be +-1");
        }
    }

    int height() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    std::int64_t total_entries() const {
        std::int64_t total = 0;
        for (const auto& row : rows_) total += static_cast<std::int64_t>(row.size());
        return total;
    }

    friend bool operator==(const IncrementArray&, const IncrementArray&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// An increment array with one row marked as preterminal.
struct MarkedArray {
    IncrementArray array;
    int preterminal;

    MarkedArray(IncrementArray a, int p) : array(std::move(a)), preterminal(p) {
        if (p < 0 || p > array.height())
            throw DomainError("preterminal mark must point at a row");
    }

    friend bool operator==(const MarkedArray&, const MarkedArray&) = default;
};

/// Splits the increments of a walk by the level they leave and marks the
/// preterminal row. Throws EmptyWalk when n = 0.
MarkedArray alpha(const Walk& w);

/// Sum of every entry; equals w(n) when the array describes w.
int sigma(const IncrementArray& x);

struct CrossingCounts {
    std::vector<std::int64_t> up;    // u_0..u_L
    std::vector<std::int64_t> down;  // d_0..d_L
};

CrossingCounts crossing_counts(const IncrementArray& x);

/// Terminal and start rows derived from the mark. The terminal index sits
/// one step from the mark in the direction of the row's final entry; it may
/// land at -1 or height+1 in the first-passage cases. The start index may
/// fall outside [0, height] entirely when the array is invalid.
struct SpecialRows {
    int terminal;
    int start;
};

SpecialRows special_rows(const MarkedArray& m);

/// Rows at or below min(mark, terminal) end in +1, rows at or above
/// max(mark, terminal) end in -1.
bool has_bookends(const MarkedArray& m);

/// u_{i-1} - d_i = 1{i <= terminal} - 1{i <= start} for i in [0, height+1],
/// with u_{-1} = d_{height+1} = 0.
bool has_crossings(const MarkedArray& m);

bool is_valid(const MarkedArray& m);

/// Rebuilds the unique walk described by a valid marked array, consuming
/// each row front-to-back starting from the start row. Throws InvalidArray
/// up front when the validity predicates fail.
Walk reconstitute(const MarkedArray& m);

/// Same queue algorithm without the validity gate; halting early raises
/// StuckReconstitution instead. Valid input never triggers it.
Walk reconstitute_raw(const MarkedArray& m);

/// Marks P for which (x, P) is valid. One element when sigma != 0, two when
/// sigma = 0 and the array is valid at all, otherwise empty.
std::vector<int> valid_marks(const IncrementArray& x);

}  // namespace qtw
