#include "bihilbert/delta_grid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace bihilbert {

namespace {

bool row_zero(const std::vector<int>& row) {
    return std::all_of(row.begin(), row.end(), [](int v) { return v == 0; });
}

}  // namespace

DeltaGrid::DeltaGrid(std::vector<std::vector<int>> entries) : c_(std::move(entries)) {
    if (!c_.empty()) {
        const size_t w = c_[0].size();
        for (const auto& row : c_)
            if (row.size() != w) throw ParseError("ragged delta grid");
    }
    // Strip trailing zero rows, then trailing zero columns.
    while (!c_.empty() && row_zero(c_.back())) c_.pop_back();
    if (!c_.empty()) {
        size_t w = c_[0].size();
        while (w > 0) {
            bool zero = true;
            for (const auto& row : c_)
                if (row[w - 1] != 0) { zero = false; break; }
            if (!zero) break;
            --w;
        }
        if (w == 0) {
            c_.clear();
        } else {
            for (auto& row : c_) row.resize(w);
        }
    }
}

void DeltaGrid::print(std::ostream& os) const {
    for (const auto& row : c_) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
}

DeltaGrid DeltaGrid::parse_body(std::istream& is, int rows, int cols) {
    std::vector<std::vector<int>> c(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(is >> c[i][j])) throw ParseError("truncated matrix body");
    return DeltaGrid(std::move(c));
}

DeltaProfile::DeltaProfile(const DeltaGrid& d) : rows_(d.rows()), cols_(d.cols()) {
    a_.assign(rows_, std::vector<int>(cols_, 0));
    b_.assign(rows_, std::vector<int>(cols_, 0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            a_[i][j] = d.at(i, j) + (i > 0 ? a_[i - 1][j] : 0);
            b_[i][j] = d.at(i, j) + (j > 0 ? b_[i][j - 1] : 0);
        }
}

int DeltaProfile::a(int i, int j) const {
    if (i < 0 || j < 0 || j >= cols_ || rows_ == 0) return 0;
    return a_[std::min(i, rows_ - 1)][j];  // column sums stabilize in i
}

int DeltaProfile::b(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || cols_ == 0) return 0;
    return b_[i][std::min(j, cols_ - 1)];  // row sums stabilize in j
}

}  // namespace bihilbert
