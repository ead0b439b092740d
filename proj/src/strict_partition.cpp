#include "prymbn/strict_partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace prymbn {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("StrictPartition: parts must be positive (got " +
                                        std::to_string(parts_[i]) + ")");
        }
        if (i > 0 && parts_[i] >= parts_[i - 1]) {
            throw std::invalid_argument(
                "StrictPartition: parts must be strictly decreasing; "
                "note: shapes are descending, vanishing sequences are ascending");
        }
    }
}

StrictPartition StrictPartition::parse(std::string_view csv) {
    return StrictPartition(parse_csv_ints(csv, "shape"));
}

long StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string StrictPartition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Cell> shifted_diagram(const StrictPartition& shape) {
    std::vector<Cell> cells;
    const auto& parts = shape.parts();
    for (int i = 1; i <= shape.length(); ++i) {
        for (int j = i; j <= i + parts[i - 1] - 1; ++j) {
            cells.push_back({i, j});
        }
    }
    return cells;
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                           std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.push_back(StrictPartition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        strict_partitions_rec(remaining - p, p - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_of_weight(int w) {
    if (w < 0) throw std::invalid_argument("strict_partitions_of_weight: negative weight");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    strict_partitions_rec(w, w, acc, out);
    return out;
}

std::vector<StrictPartition> strict_partitions_up_to(int max_weight) {
    std::vector<StrictPartition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto batch = strict_partitions_of_weight(w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<int> parse_csv_ints(std::string_view csv, std::string_view what) {
    std::vector<int> values;
    if (csv.empty()) return values;
    size_t pos = 0;
    while (true) {
        size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos
                                                                               : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument(std::string(what) + ": cannot parse integer \"" +
                                        std::string(tok) + "\" in \"" + std::string(csv) + "\"");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return values;
}

}  // namespace prymbn
