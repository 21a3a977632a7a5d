#ifndef BIHILBERT_DELETION_CALCULUS_HPP
#define BIHILBERT_DELETION_CALCULUS_HPP

#include <optional>
#include <vector>

#include "bihilbert/bidegree_matrix.hpp"
#include "bihilbert/grid_scheme.hpp"
#include "bihilbert/hilbert_oracle.hpp"
#include "bihilbert/types.hpp"

namespace bihilbert {

struct DeletionReport {
    Cell point;
    int p = 0, q = 0;               // counts in Z = X \ {P}
    SeparatorCondition condition;   // which sufficient condition held
    DeltaGrid predicted;            // first difference of Z, predicted
    // Filled when cross-checked against the oracle.
    std::optional<DeltaGrid> oracle;
    std::optional<bool> oracle_agrees;
};

/// Predicted first difference of cfg\{p}: identical to that of cfg except
/// -1 at (q,p).  Throws ConditionsNotMet when no sufficient condition holds
/// and PointNotInConfig when p is not a point of cfg.
DeletionReport deletion_update(const GridConfig& cfg, const Cell& p, const LineParams& params,
                               bool cross_check = true);

struct DeletionTrace {
    Cell source;  // (i,j) in T
    int r = 0;
    int m = 0;        // min column of the equal-a chain through (i,j,r)
    int n = 0;        // max column of the chain
    int p = 0;        // m + n - j
    Cell target;      // (i, p): the cell decremented when the point is deleted
};

/// Requires d admissible, plain and Delta-regular; throws NotApplicable.
DeletionTrace deletion_trace(const DeltaGrid& d, const Cell& source, int r);

/// All traces, one per (T-cell, r) pair.
std::vector<DeletionTrace> all_deletion_traces(const DeltaGrid& d);

struct PuncturedLineReport {
    GridConfig extended;       // W = X shifted down one row, plus the new line
    std::vector<Cell> t_cells; // the decremented cells {(q_k, n-k+1)}
    DeltaGrid predicted;
    std::optional<DeltaGrid> oracle;
    std::optional<bool> oracle_agrees;
};

/// Adds a new (1,0)-line above cfg carrying a point on every (0,1)-line
/// C_0..C_n except the skipped columns.  Throws BadSkipList for skip
/// indices outside the grid and HypothesesNotMet when the r >= 2 vanishing
/// hypothesis fails.
PuncturedLineReport add_punctured_line(const GridConfig& cfg, int n, std::vector<int> skip,
                                       const LineParams& params, bool cross_check = true);

}  // namespace bihilbert

#endif
