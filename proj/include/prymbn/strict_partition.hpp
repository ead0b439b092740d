/*
 * Strict partitions and their shifted diagrams.
 *
 * A strict partition has strictly decreasing positive parts; row i of its
 * shifted diagram is indented i-1 boxes, i.e. row i occupies columns
 * i .. i+lambda_i-1 (1-indexed). The empty partition is allowed.
 */
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace prymbn {

struct Cell {
    int row = 0;  // 1-indexed
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class StrictPartition {
public:
    StrictPartition() = default;  // empty partition
    explicit StrictPartition(std::vector<int> parts);

    // "4,2,1" (descending). Empty input parses to the empty partition.
    static StrictPartition parse(std::string_view csv);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool empty() const { return parts_.empty(); }

    // Canonical key "4,2,1"; empty string for the empty partition.
    std::string str() const;

    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Cells of the shifted diagram in row-major order:
// {(i, j) : 1 <= i <= length, i <= j <= i + lambda_i - 1}.
std::vector<Cell> shifted_diagram(const StrictPartition& shape);

// All strict partitions of weight w, largest first part first.
std::vector<StrictPartition> strict_partitions_of_weight(int w);

// All strict partitions of weight 0..max_weight, ordered by weight then
// generation order within a weight.
std::vector<StrictPartition> strict_partitions_up_to(int max_weight);

// Shared parser for comma-separated integer lists ("0,1,3").
std::vector<int> parse_csv_ints(std::string_view csv, std::string_view what);

}  // namespace prymbn
