#ifndef BIHILBERT_DELTA_GRID_HPP
#define BIHILBERT_DELTA_GRID_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "bihilbert/types.hpp"

namespace bihilbert {

/// Finitely supported first-difference matrix c_ij.  Stored trimmed: no
/// trailing all-zero rows or columns (trailing zero padding is stripped on
/// construction, so size (a,b) = (rows()-1, cols()-1) for a nonzero grid).
/// The zero matrix has rows() == cols() == 0.
class DeltaGrid {
public:
    DeltaGrid() = default;
    explicit DeltaGrid(std::vector<std::vector<int>> entries);

    int rows() const { return static_cast<int>(c_.size()); }
    int cols() const { return c_.empty() ? 0 : static_cast<int>(c_[0].size()); }
    bool empty() const { return c_.empty(); }

    // (a, b): maximal indices with a nonzero row / column.
    std::optional<Cell> size() const {
        if (empty()) return std::nullopt;
        return Cell{rows() - 1, cols() - 1};
    }

    // 0 outside the stored rectangle.
    int at(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows() || j >= cols()) return 0;
        return c_[i][j];
    }

    friend bool operator==(const DeltaGrid&, const DeltaGrid&) = default;

    void print(std::ostream& os) const;
    static DeltaGrid parse_body(std::istream& is, int rows, int cols);

private:
    std::vector<std::vector<int>> c_;
};

/// Margin grids of a DeltaGrid: a[i][j] = sum_{t<=i} c[t][j] (column partial
/// sums) and b[i][j] = sum_{t<=j} c[i][t] (row partial sums).  Accessors
/// extend beyond the stored rectangle: a stabilizes in i, vanishes for j
/// past the last column, and symmetrically for b.
class DeltaProfile {
public:
    explicit DeltaProfile(const DeltaGrid& d);

    int a(int i, int j) const;
    int b(int i, int j) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<int>> a_, b_;
};

}  // namespace bihilbert

#endif
