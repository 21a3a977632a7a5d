#include "bihilbert/hilbert_window.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace bihilbert {

HilbertWindow::HilbertWindow() : m_{{0, 0}, {0, 0}} {}

HilbertWindow::HilbertWindow(std::vector<std::vector<long long>> entries) : m_(std::move(entries)) {
    if (m_.size() < 2 || m_[0].size() < 2)
        throw StabilizationMissing("window must be at least 2x2 to contain a stabilized border");
    const size_t c = m_[0].size();
    for (const auto& row : m_) {
        if (row.size() != c) throw ParseError("ragged window");
        for (long long v : row)
            if (v < 0) throw ParseError("negative Hilbert value");
    }
    if (m_[0][0] != 0 && m_[0][0] != 1) throw ParseError("m[0][0] must be 0 or 1");
    const size_t r = m_.size();
    if (m_[r - 1] != m_[r - 2])
        throw StabilizationMissing("last row does not repeat the second-to-last");
    for (size_t i = 0; i < r; ++i)
        if (m_[i][c - 1] != m_[i][c - 2])
            throw StabilizationMissing("last column does not repeat the second-to-last");
}

long long HilbertWindow::value_at(int i, int j) const {
    if (i < 0 || j < 0) return 0;
    i = std::min(i, rows() - 1);
    j = std::min(j, cols() - 1);
    return m_[i][j];
}

bool equal_extended(const HilbertWindow& x, const HilbertWindow& y) {
    return !first_mismatch(x, y).has_value();
}

std::optional<Cell> first_mismatch(const HilbertWindow& x, const HilbertWindow& y) {
    const int r = std::max(x.rows(), y.rows());
    const int c = std::max(x.cols(), y.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (x.value_at(i, j) != y.value_at(i, j)) return Cell{i, j};
    return std::nullopt;
}

void HilbertWindow::print(std::ostream& os) const {
    for (const auto& row : m_) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
}

HilbertWindow HilbertWindow::parse_body(std::istream& is, int rows, int cols) {
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!(is >> m[i][j])) throw ParseError("truncated matrix body");
    return HilbertWindow(std::move(m));
}

}  // namespace bihilbert
