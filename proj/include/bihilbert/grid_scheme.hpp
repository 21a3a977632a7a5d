#ifndef BIHILBERT_GRID_SCHEME_HPP
#define BIHILBERT_GRID_SCHEME_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "bihilbert/delta_grid.hpp"
#include "bihilbert/types.hpp"

namespace bihilbert {

/// Reduced point configuration on a grid of (1,0)-lines R_0..R_{rows-1} and
/// (0,1)-lines C_0..C_{cols-1}.  Every present point has multiplicity 1.
class GridConfig {
public:
    GridConfig() = default;
    GridConfig(int grid_rows, int grid_cols, std::set<Cell> points);

    int grid_rows() const { return rows_; }
    int grid_cols() const { return cols_; }
    const std::set<Cell>& points() const { return pts_; }
    int count() const { return static_cast<int>(pts_.size()); }
    bool contains(const Cell& p) const { return pts_.count(p) != 0; }

    int points_on_row(int i) const;
    int points_on_col(int j) const;
    // Number of distinct rows / columns actually holding a point.
    int occupied_rows() const;
    int occupied_cols() const;

    GridConfig without(const Cell& p) const;  // throws PointNotInConfig

    friend bool operator==(const GridConfig&, const GridConfig&) = default;

    void print(std::ostream& os) const;

private:
    int rows_ = 0, cols_ = 0;
    std::set<Cell> pts_;
};

struct LineCounts {
    std::vector<int> per_row;
    std::vector<int> per_col;
};

/// The ACM scheme X = {P_ij | c_ij = 1}.  Throws NotAdmissible.
GridConfig acm_from_delta(const DeltaGrid& d);

struct DeletedSet {
    std::vector<Cell> cells;  // one entry per (T-cell, r) pair; may repeat
    bool is_multiset = false; // true when d is not plain (repeats present)
};

/// The cells P_{a_ij+r, b_ij+r} over (i,j) in T, r in I_ij.
DeletedSet deleted_set(const DeltaGrid& d);

/// Z = X \ P.  For non-plain d each listed cell is removed once (set
/// semantics).  Throws InternalInconsistency if a deleted cell is not in X.
GridConfig associated_scheme(const DeltaGrid& d);

LineCounts line_counts(const GridConfig& cfg);

/// Deterministic ASCII rendering: rows R_0.. top-down, `*` for points.
std::string render_ascii(const GridConfig& cfg);

// Config text format: header `grid-config v1 rows=<R> cols=<C>`, then one
// `i j` pair per line, 0-indexed, sorted, unique.
GridConfig read_config(std::istream& is);
GridConfig load_config_file(const std::string& path);
void write_config(std::ostream& os, const GridConfig& cfg);

}  // namespace bihilbert

#endif
