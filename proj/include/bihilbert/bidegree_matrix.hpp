#ifndef BIHILBERT_BIDEGREE_MATRIX_HPP
#define BIHILBERT_BIDEGREE_MATRIX_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bihilbert/delta_grid.hpp"
#include "bihilbert/hilbert_window.hpp"
#include "bihilbert/types.hpp"

namespace bihilbert {

/// c_ij = m_ij - m_{i-1,j} - m_{i,j-1} + m_{i-1,j-1}, out-of-range entries 0.
DeltaGrid delta(const HilbertWindow& m);

/// Inverse of delta: m_ij as rectangular partial sums of c, with one
/// stabilized border row/column.  Throws AccumulationNegative if a partial
/// sum goes negative.
HilbertWindow accumulate(const DeltaGrid& d);

DeltaProfile profile(const DeltaGrid& d);

struct AdmissibilityReport {
    bool entries_ok = true;  // clause 1: c_ij <= 1, finite support
    bool upset_ok = true;    // clause 2: c_ij <= 0 forces c_rs <= 0 up-set
    bool margins_ok = true;  // clause 3: margin monotonicity and positivity
    std::vector<Cell> bad_entries;
    std::vector<Cell> bad_upset;
    std::vector<Cell> bad_margins;

    bool admissible() const { return entries_ok && upset_ok && margins_ok; }
};

AdmissibilityReport is_admissible(const DeltaGrid& d);

// Throws NotAdmissible unless is_admissible(d) passes.
void require_admissible(const DeltaGrid& d);

struct NegativeCell {
    Cell pos;
    int c;  // c < 0; the interval I = {0, ..., -c-1}
};

struct NegativeLocus {
    std::vector<NegativeCell> cells;  // row-major order
};

NegativeLocus negative_locus(const DeltaGrid& d);

/// A point P_{a+r, b+r} marked for deletion, tagged with its origin
/// (i,j) in T and the shift r in I_ij.
struct MarkedPoint {
    Cell source;  // (i,j) in T
    int r = 0;
    int a = 0;  // a_{ij} + r
    int b = 0;  // b_{ij} + r

    Cell point() const { return {a, b}; }
};

std::vector<MarkedPoint> marked_points(const DeltaGrid& d);

struct PlainReport {
    bool plain = true;
    std::vector<std::pair<MarkedPoint, MarkedPoint>> collisions;
};

PlainReport is_plain(const DeltaGrid& d);

struct DeltaRegularReport {
    bool regular = true;
    // (clause, first, second): clause 1 = equal a-values, clause 2 = equal b.
    struct Witness {
        int clause;
        MarkedPoint first, second;
    };
    std::vector<Witness> witnesses;
};

DeltaRegularReport is_delta_regular(const DeltaGrid& d);

struct ConditionReport {
    bool holds = true;
    std::vector<Cell> failures;  // positions (i,j) where the inequality fails
};

/// a_ij >= a_{i-1,j+1} for all i,j >= 0.
ConditionReport condition1(const DeltaGrid& d);
/// b_ij >= b_{i+1,j-1} for all i,j >= 0.
ConditionReport condition2(const DeltaGrid& d);

struct LineStats {
    std::map<int, int> row_dist;  // points-per-(1,0)-line -> number of lines
    std::map<int, int> col_dist;  // points-per-(0,1)-line -> number of lines
    int i0 = 0;                   // i(0)
    int j0 = 0;                   // j(0)
};

LineStats line_stats(const HilbertWindow& m);

struct LemmaReport {
    struct Entry {
        std::string name;
        bool pass = true;
        std::string counterexample;  // empty when pass
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

/// Exhaustively verifies the structural propositions that hold for every
/// admissible matrix; a failure indicates an implementation bug.
LemmaReport check_structure_lemmas(const DeltaGrid& d);

// --- matrix text format -----------------------------------------------------
// Header: `hilbert-matrix v1 rows=<R> cols=<C> kind=<M|delta>` followed by
// R lines of C space-separated integers.

enum class MatrixKind { M, Delta };

struct MatrixFile {
    MatrixKind kind;
    HilbertWindow window;  // valid when kind == M
    DeltaGrid grid;        // valid when kind == Delta

    // The first difference, whichever kind was loaded.
    DeltaGrid as_delta() const { return kind == MatrixKind::M ? delta(window) : grid; }
    // The matrix, whichever kind was loaded.
    HilbertWindow as_window() const {
        return kind == MatrixKind::M ? window : accumulate(grid);
    }
};

MatrixFile read_matrix(std::istream& is);
MatrixFile load_matrix_file(const std::string& path);
void write_matrix(std::ostream& os, const HilbertWindow& m);
void write_matrix(std::ostream& os, const DeltaGrid& d);

}  // namespace bihilbert

#endif
