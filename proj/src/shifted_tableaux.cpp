#include "prymbn/shifted_tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prymbn {

namespace {

void check_bound(long cells, int bound, const std::string& what) {
    if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
    if (cells > bound) {
        throw std::invalid_argument(what + " has " + std::to_string(cells) +
                                    " cells, above the enumeration bound " +
                                    std::to_string(bound) +
                                    "; raise the bound to enumerate it");
    }
}

/*
 * Generic standard-filling backtracker over an explicit cell list.
 * left[i] / up[i] give the index of the neighboring cell inside the diagram
 * (-1 when that neighbor is outside). Values 1..n are placed in order; a
 * cell is eligible once its left and up neighbors are filled, so rows and
 * columns increase by construction. Candidates are tried in cell-list
 * (row-major) order, which makes the visit order lexicographic in the
 * sequence of cells receiving 1, 2, 3, ...
 */
class StandardFillingEnumerator {
public:
    StandardFillingEnumerator(std::vector<int> left, std::vector<int> up)
        : left_(std::move(left)), up_(std::move(up)), value_(left_.size(), 0) {}

    void run(const std::function<void(const std::vector<int>&)>& visit) {
        visit_ = &visit;
        place(1);
        visit_ = nullptr;
    }

private:
    void place(int k) {
        const int n = static_cast<int>(value_.size());
        if (k > n) {
            (*visit_)(value_);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (value_[i] != 0) continue;
            if (left_[i] >= 0 && value_[left_[i]] == 0) continue;
            if (up_[i] >= 0 && value_[up_[i]] == 0) continue;
            value_[i] = k;
            place(k + 1);
            value_[i] = 0;
        }
    }

    std::vector<int> left_;
    std::vector<int> up_;
    std::vector<int> value_;
    const std::function<void(const std::vector<int>&)>* visit_ = nullptr;
};

struct DiagramIndex {
    std::vector<int> left;  // neighbor indices, -1 when absent
    std::vector<int> up;
};

DiagramIndex index_cells(const std::vector<Cell>& cells) {
    DiagramIndex idx;
    std::map<std::pair<int, int>, int> pos;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        pos[{cells[i].row, cells[i].col}] = i;
    }
    idx.left.resize(cells.size());
    idx.up.resize(cells.size());
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        auto find = [&](int r, int c) {
            auto it = pos.find({r, c});
            return it == pos.end() ? -1 : it->second;
        };
        idx.left[i] = find(cells[i].row, cells[i].col - 1);
        idx.up[i] = find(cells[i].row - 1, cells[i].col);
    }
    return idx;
}

std::vector<std::vector<int>> values_to_rows(const std::vector<int>& value,
                                             const std::vector<Cell>& cells) {
    std::vector<std::vector<int>> rows;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].row > static_cast<int>(rows.size())) rows.emplace_back();
        rows.back().push_back(value[i]);
    }
    return rows;
}

}  // namespace

ShiftedTableau::ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    const auto& parts = shape_.parts();
    if (rows_.size() != parts.size()) {
        throw std::invalid_argument("ShiftedTableau: row count does not match shape");
    }
    const long n = shape_.weight();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (static_cast<int>(rows_[i].size()) != parts[i]) {
            throw std::invalid_argument("ShiftedTableau: row " + std::to_string(i + 1) +
                                        " does not match shape");
        }
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n || seen[v]) {
                throw std::invalid_argument("ShiftedTableau: entries must be a bijection onto 1.." +
                                            std::to_string(n));
            }
            seen[v] = true;
            if (j > 0 && rows_[i][j - 1] >= v) {
                throw std::invalid_argument("ShiftedTableau: rows must strictly increase");
            }
        }
    }
    // Column condition: row i+1 starts one column to the right of row i,
    // so rows_[i+1][j] sits under rows_[i][j+1].
    for (size_t i = 0; i + 1 < rows_.size(); ++i) {
        for (size_t j = 0; j < rows_[i + 1].size(); ++j) {
            if (rows_[i][j + 1] >= rows_[i + 1][j]) {
                throw std::invalid_argument("ShiftedTableau: columns must strictly increase");
            }
        }
    }
}

int ShiftedTableau::entry(int row, int col) const {
    if (row < 1 || row > static_cast<int>(rows_.size())) {
        throw std::out_of_range("ShiftedTableau: row out of range");
    }
    int offset = col - row;  // row i starts at column i
    if (offset < 0 || offset >= static_cast<int>(rows_[row - 1].size())) {
        throw std::out_of_range("ShiftedTableau: cell not in diagram");
    }
    return rows_[row - 1][offset];
}

std::string ShiftedTableau::str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) out += "/";
        out += "[";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0) out += ",";
            out += std::to_string(rows_[i][j]);
        }
        out += "]";
    }
    return out;
}

nlohmann::json ShiftedTableau::to_json() const {
    return {{"shape", shape_.parts()}, {"rows", rows_}};
}

void for_each_sst(const StrictPartition& shape,
                  const std::function<void(const ShiftedTableau&)>& visit, int bound) {
    check_bound(shape.weight(), bound, "shape (" + shape.str() + ")");
    auto cells = shifted_diagram(shape);
    if (cells.empty()) {
        visit(ShiftedTableau(shape, {}));
        return;
    }
    auto idx = index_cells(cells);
    StandardFillingEnumerator enumerator(idx.left, idx.up);
    enumerator.run([&](const std::vector<int>& value) {
        visit(ShiftedTableau(shape, values_to_rows(value, cells)));
    });
}

std::vector<ShiftedTableau> enumerate_sst(const StrictPartition& shape, int bound) {
    std::vector<ShiftedTableau> out;
    for_each_sst(shape, [&](const ShiftedTableau& t) { out.push_back(t); }, bound);
    return out;
}

Int count_sst_bruteforce(const StrictPartition& shape, int bound) {
    Int count = 0;
    for_each_sst(shape, [&](const ShiftedTableau&) { ++count; }, bound);
    return count;
}

Int count_sst_formula(const StrictPartition& shape) {
    const auto& parts = shape.parts();
    Rational result = Rational::factorial(static_cast<unsigned long>(shape.weight()));
    for (int p : parts) result /= Rational::factorial(static_cast<unsigned long>(p));
    for (size_t i = 0; i < parts.size(); ++i) {
        for (size_t j = i + 1; j < parts.size(); ++j) {
            result *= Rational(parts[i] - parts[j], parts[i] + parts[j]);
        }
    }
    return result.to_integer();  // throws if the product is not integral
}

Int count_marked_unmarked_diagonal(const StrictPartition& shape) {
    unsigned long off_diagonal =
        static_cast<unsigned long>(shape.weight() - shape.length());
    return int_pow2(off_diagonal) * count_sst_formula(shape);
}

std::string render_tableau(const ShiftedTableau& t) {
    const long n = t.shape().weight();
    size_t width = std::to_string(std::max(1L, n)).size();
    std::string out;
    for (size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) out += "\n";
        out += std::string(i * (width + 1), ' ');
        for (size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j > 0) out += " ";
            std::string e = std::to_string(t.rows()[i][j]);
            out += std::string(width - e.size(), ' ') + e;
        }
    }
    return out;
}

StaircaseTableau::StaircaseTableau(int r, std::vector<std::vector<int>> rows)
    : r_(r), rows_(std::move(rows)) {
    if (r_ < 1) throw std::invalid_argument("StaircaseTableau: r must be >= 1");
    if (static_cast<int>(rows_.size()) != r_) {
        throw std::invalid_argument("StaircaseTableau: row count does not match r");
    }
    const int n = r_ * (r_ + 1) / 2;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int i = 0; i < r_; ++i) {
        if (static_cast<int>(rows_[i].size()) != r_ - i) {
            throw std::invalid_argument("StaircaseTableau: row " + std::to_string(i + 1) +
                                        " must have " + std::to_string(r_ - i) + " entries");
        }
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n || seen[v]) {
                throw std::invalid_argument("StaircaseTableau: entries must be a bijection onto 1.." +
                                            std::to_string(n));
            }
            seen[v] = true;
            if (j > 0 && rows_[i][j - 1] >= v) {
                throw std::invalid_argument("StaircaseTableau: rows must strictly increase");
            }
            if (i > 0 && rows_[i - 1][j] >= v) {
                throw std::invalid_argument("StaircaseTableau: columns must strictly increase");
            }
        }
    }
}

void for_each_staircase_syt(int r, const std::function<void(const StaircaseTableau&)>& visit,
                            int bound) {
    if (r < 1) throw std::invalid_argument("staircase: r must be >= 1");
    const long n = static_cast<long>(r) * (r + 1) / 2;
    check_bound(n, bound, "staircase shape r=" + std::to_string(r));
    // Left-aligned cells, row-major.
    std::vector<Cell> cells;
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r - i + 1; ++j) cells.push_back({i, j});
    }
    auto idx = index_cells(cells);
    StandardFillingEnumerator enumerator(idx.left, idx.up);
    enumerator.run([&](const std::vector<int>& value) {
        visit(StaircaseTableau(r, values_to_rows(value, cells)));
    });
}

Int count_syt_staircase_bruteforce(int r, int bound) {
    Int count = 0;
    for_each_staircase_syt(r, [&](const StaircaseTableau&) { ++count; }, bound);
    return count;
}

Int count_syt_staircase_formula(int r) {
    if (r < 1) throw std::invalid_argument("staircase: r must be >= 1");
    // Hook lengths of the staircase are 2(r - i + 1 - j) + 1 at (i, j).
    const unsigned long n = static_cast<unsigned long>(r) * (r + 1) / 2;
    Rational result = Rational::factorial(n);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r - i + 1; ++j) {
            result /= Rational(2 * (r - i + 1 - j) + 1);
        }
    }
    return result.to_integer();
}

Int count_syt_staircase(int r, int bound) {
    Int formula = count_syt_staircase_formula(r);
    Int brute = count_syt_staircase_bruteforce(r, bound);
    if (formula != brute) {
        throw std::logic_error("staircase SYT count mismatch at r=" + std::to_string(r) +
                               ": formula " + formula.get_str() + " vs enumeration " +
                               brute.get_str());
    }
    return formula;
}

}  // namespace prymbn
