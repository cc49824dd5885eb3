#include "dimers/grid_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dimers/errors.hpp"
#include "dimers/padics.hpp"

namespace dimers {

// Cell-by-cell broken-profile DP. While processing cell (i, j) of an H x W
// board (W = min side), bit k of a state mask means:
//   k <  j : cell (i+1, k) is already covered (vertical domino from row i)
//   k >= j : cell (i, k) is already covered
// After the transition at (i, j), bit j refers to cell (i+1, j).
Integer count_tilings(const BoardDims& dims, const CountBudget& budget) {
    if (dims.rows < 0 || dims.cols < 0)
        throw std::invalid_argument("count_tilings: negative board dimension");
    const long width = std::min(dims.rows, dims.cols);
    const long height = std::max(dims.rows, dims.cols);
    if (width == 0) return 1;  // empty board: one empty tiling
    if ((width * height) % 2 != 0) return 0;
    if (width > budget.max_width)
        throw BudgetExceeded("count_tilings: frontier width " + std::to_string(width) +
                             " exceeds budget " + std::to_string(budget.max_width));

    const std::size_t num_states = std::size_t(1) << width;
    std::vector<Integer> cur(num_states), next(num_states);
    cur[0] = 1;

    for (long i = 0; i < height; ++i) {
        const bool last_row = (i + 1 == height);
        for (long j = 0; j < width; ++j) {
            const std::size_t bit_j = std::size_t(1) << j;
            const std::size_t bit_r = bit_j << 1;  // cell to the right, if any
            const bool has_right = (j + 1 < width);
            for (std::size_t t = 0; t < num_states; ++t) {
                if (t & bit_j) {
                    // bit j set in the new state: a vertical domino was
                    // placed at (i, j), impossible in the last row.
                    if (last_row)
                        next[t] = 0;
                    else
                        next[t] = cur[t ^ bit_j];
                } else {
                    // cell (i, j) was already covered in the source state
                    next[t] = cur[t | bit_j];
                    // ... or a horizontal domino covers (i, j)-(i, j+1)
                    if (has_right && (t & bit_r)) next[t] += cur[t ^ bit_r];
                }
            }
            std::swap(cur, next);
        }
    }
    return cur[0];
}

TilingFactorization factor_square_count(long n, const CountBudget& budget) {
    if (n < 0) throw std::invalid_argument("factor_square_count: n must be nonnegative");
    TilingFactorization out;
    out.n = n;
    out.count = count_tilings({2 * n, 2 * n}, budget);
    if (out.count == 0) throw CheckFailed("factor_square_count: zero tiling count");
    out.two_exponent = v2(out.count);
    Integer odd = out.count >> static_cast<unsigned long>(out.two_exponent);
    auto root = isqrt_exact(odd);
    if (!root)
        throw CheckFailed("factor_square_count: odd part of the count is not a perfect square");
    out.odd_root = std::move(*root);
    return out;
}

}  // namespace dimers
