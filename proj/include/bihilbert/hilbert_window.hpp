#ifndef BIHILBERT_HILBERT_WINDOW_HPP
#define BIHILBERT_HILBERT_WINDOW_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "bihilbert/types.hpp"

namespace bihilbert {

/// Finite window of the (infinite) Hilbert matrix m_ij of a zero-dimensional
/// scheme.  The window must contain one fully stabilized row and column:
/// the last row equals the second-to-last and likewise for columns, so the
/// bottom-right entry is deg X and values outside the window are recovered
/// by clamping.  Entries are 0 for negative indices by convention.
class HilbertWindow {
public:
    // 2x2 zero window: the empty scheme.
    HilbertWindow();

    // Validates: rectangular, >= 2x2, entries >= 0, m[0][0] in {0,1},
    // stabilized border present.  Throws StabilizationMissing / ParseError.
    explicit HilbertWindow(std::vector<std::vector<long long>> entries);

    int rows() const { return static_cast<int>(m_.size()); }
    int cols() const { return static_cast<int>(m_[0].size()); }

    // In-window access.
    long long at(int i, int j) const { return m_[i][j]; }

    // Value of the infinite matrix: 0 for negative indices, clamped to the
    // stabilized border beyond the window.
    long long value_at(int i, int j) const;

    long long degree() const { return m_.back().back(); }

    // Entrywise equality of the underlying infinite matrices.
    friend bool equal_extended(const HilbertWindow& x, const HilbertWindow& y);
    // First cell where the infinite extensions differ, if any.
    friend std::optional<Cell> first_mismatch(const HilbertWindow& x, const HilbertWindow& y);

    void print(std::ostream& os) const;
    static HilbertWindow parse_body(std::istream& is, int rows, int cols);

private:
    std::vector<std::vector<long long>> m_;
};

}  // namespace bihilbert

#endif
