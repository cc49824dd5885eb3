#pragma once

#include "dimers/numeric.hpp"

namespace dimers {

/// Rectangular board. Counting is symmetric in rows/cols; a zero-area board
/// has exactly one (empty) tiling.
struct BoardDims {
    long rows = 0;
    long cols = 0;
};

/// Caps the bitmask frontier of the tiling DP. The state space is
/// 2^min(rows, cols) big integers, so 24 already means hundreds of MB.
struct CountBudget {
    int max_width = 24;
};

/// A 2n x 2n tiling count split as count = 2^two_exponent * odd_root^2.
struct TilingFactorization {
    long n = 0;
    Integer count;
    long two_exponent = 0;
    Integer odd_root;
};

/// Exact number of perfect domino tilings of the board, by broken-profile
/// dynamic programming over a bitmask frontier of width min(rows, cols).
/// Throws BudgetExceeded when the frontier would exceed budget.max_width.
Integer count_tilings(const BoardDims& dims, const CountBudget& budget = {});

/// Counts the 2n x 2n board and factors the count as 2^v * r^2 with r odd.
/// Throws CheckFailed if the odd part is not a perfect square (that would be
/// an implementation bug: the count is always 2^n times an odd square).
TilingFactorization factor_square_count(long n, const CountBudget& budget = {});

}  // namespace dimers
