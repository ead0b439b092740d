/*
 * Standard shifted tableaux: enumeration, counting, rendering.
 *
 * A standard shifted tableau fills the shifted diagram of a strict
 * partition with 1..|lambda| so that rows increase left to right and
 * columns increase top to bottom. Counting is done twice on purpose:
 * a backtracking enumerator (the oracle) and the closed product formula
 *
 *     |lambda|! / (prod lambda_i!) * prod_{i<j} (lambda_i - lambda_j) / (lambda_i + lambda_j),
 *
 * and the two routes are checked against each other in the test suites.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prymbn/rational.hpp"
#include "prymbn/strict_partition.hpp"

#include "json.hpp"

namespace prymbn {

// Brute-force enumeration refuses shapes with more cells than this unless
// the caller raises the bound explicitly.
inline constexpr int kDefaultEnumerationBound = 16;

class ShiftedTableau {
public:
    // rows[i] holds the entries of diagram row i+1, left to right.
    // Validates the diagram shape, the bijection onto 1..|lambda| and the
    // row/column monotonicity.
    ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows);

    const StrictPartition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Entry at 1-indexed diagram coordinates (row, col).
    int entry(int row, int col) const;

    // "[1,2,4,6]/[3,5]/[7]"
    std::string str() const;

    // {"shape": [4,2,1], "rows": [[1,2,4,6],[3,5],[7]]}
    nlohmann::json to_json() const;

    bool operator==(const ShiftedTableau&) const = default;

private:
    StrictPartition shape_;
    std::vector<std::vector<int>> rows_;
};

// Visits every standard shifted tableau of the shape exactly once, in a
// deterministic order: values 1,2,... are placed on the outer corners of the
// partial filling, candidate cells tried in row-major order, which makes the
// stream lexicographic in the sequence of cells receiving 1,2,3,...
// Throws when |shape| exceeds the bound.
void for_each_sst(const StrictPartition& shape,
                  const std::function<void(const ShiftedTableau&)>& visit,
                  int bound = kDefaultEnumerationBound);

std::vector<ShiftedTableau> enumerate_sst(const StrictPartition& shape,
                                          int bound = kDefaultEnumerationBound);

Int count_sst_bruteforce(const StrictPartition& shape, int bound = kDefaultEnumerationBound);

// Closed product formula, evaluated in exact rationals with a final
// integrality assertion.
Int count_sst_formula(const StrictPartition& shape);

// 2^{|lambda| - length} * #SST(lambda): standard shifted tableaux with an
// arbitrary subset of off-diagonal entries marked.
Int count_marked_unmarked_diagonal(const StrictPartition& shape);

// Fixed-width ASCII grid, row i indented i-1 cells (the shifted layout).
std::string render_tableau(const ShiftedTableau& t);

/*
 * Staircase standard Young tableaux: the left-aligned shape (r, r-1, ..., 1).
 * These count the same objects as n_a for a = (0, 1, ..., r) and serve as an
 * independent cross-check on the shifted-tableau machinery.
 */
class StaircaseTableau {
public:
    StaircaseTableau(int r, std::vector<std::vector<int>> rows);

    int r() const { return r_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const StaircaseTableau&) const = default;

private:
    int r_ = 0;
    std::vector<std::vector<int>> rows_;
};

void for_each_staircase_syt(int r,
                            const std::function<void(const StaircaseTableau&)>& visit,
                            int bound = kDefaultEnumerationBound);

Int count_syt_staircase_bruteforce(int r, int bound = kDefaultEnumerationBound);

// Hook-length formula; no enumeration bound.
Int count_syt_staircase_formula(int r);

// Both routes, which must agree; requires r(r+1)/2 within the bound.
Int count_syt_staircase(int r, int bound = kDefaultEnumerationBound);

}  // namespace prymbn
