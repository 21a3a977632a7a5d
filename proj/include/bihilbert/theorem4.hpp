#ifndef BIHILBERT_THEOREM4_HPP
#define BIHILBERT_THEOREM4_HPP

#include <optional>
#include <string>

#include "bihilbert/bidegree_matrix.hpp"
#include "bihilbert/grid_scheme.hpp"
#include "bihilbert/hilbert_oracle.hpp"
#include "bihilbert/types.hpp"

namespace bihilbert {

struct VerifierReport {
    AdmissibilityReport admissibility;
    PlainReport plain;
    DeltaRegularReport delta_regular;
    ConditionReport cond1, cond2;
    GridConfig z;
    HilbertWindow m_z;
    HilbertWindow m;  // accumulate(d)
    bool equal = false;
    std::optional<Cell> mismatch;

    bool hypotheses_hold() const {
        return plain.plain && delta_regular.regular && (cond1.holds || cond2.holds);
    }
};

/// Full pipeline: predicates, associated scheme Z, oracle Hilbert window of
/// Z, comparison with accumulate(d) over the union of both windows.  When
/// the hypotheses hold, equal must come out true.  Throws NotAdmissible.
VerifierReport verify_theorem4(const DeltaGrid& d, const LineParams& params);

/// True iff a_{i1j1}-b_{i1j1} < a_{i2j2}-b_{i2j2} for all T-pairs with
/// i1<i2, j1>j2, and condition 1 or 2 holds.  When true, d is plain and
/// Delta-regular.
bool check_corollary_c6(const DeltaGrid& d);

/// True iff all cells of T lie on one anti-diagonal.  Requires d plain.
bool check_corollary_c7(const DeltaGrid& d);

/// 0/1 staircase grid: prefix rows of non-increasing length, full first row.
DeltaGrid random_staircase(int a, int b, unsigned long seed);

GridConfig random_grid_config(int a, int b, int n_points, unsigned long seed);

/// First difference of a uniformly sampled n-point configuration, via the
/// oracle (admissible by construction).
DeltaGrid random_config_matrix(int a, int b, int n_points, unsigned long seed,
                               const LineParams& params);

/// Best-effort direct sampler: random staircase with random decrements,
/// rejection-tested for admissibility.  Empty when no attempt succeeded.
std::optional<DeltaGrid> random_delta_direct(int a, int b, unsigned long seed, int attempts = 32);

struct ExplorerSummary {
    long long sampled = 0;
    long long filtered_in = 0;  // plain, Delta-regular, neither condition
    long long match = 0;
    long long mismatch = 0;
};

/// Samples matrices, filters for plain + Delta-regular + neither side
/// condition, verifies each and appends one replayable record line per
/// filtered-in matrix to the log.  Throws Error on log write failure.
ExplorerSummary explore_open_problem(long long trials, int a, int b, unsigned long seed,
                                     const std::string& log_path);

}  // namespace bihilbert

#endif
