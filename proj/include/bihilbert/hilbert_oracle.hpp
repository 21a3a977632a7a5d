#ifndef BIHILBERT_HILBERT_ORACLE_HPP
#define BIHILBERT_HILBERT_ORACLE_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "bihilbert/exact_rank.hpp"
#include "bihilbert/grid_scheme.hpp"
#include "bihilbert/hilbert_window.hpp"
#include "bihilbert/types.hpp"

namespace bihilbert {

/// Affine parameters of the grid lines: R_i = {y = u_i}, C_j = {x = v_j},
/// all pairwise distinct within each family.  P_ij = (u_i, v_j).
struct LineParams {
    std::vector<long long> u;
    std::vector<long long> v;

    // u_i = i+1, v_j = j+1: small, distinct, nonzero.
    static LineParams standard(int rows, int cols);
    static LineParams random(int rows, int cols, unsigned long seed);

    void validate(const GridConfig& cfg) const;  // throws ParamMismatch
};

/// One row per point of cfg, one column per monomial x^s y^t with s <= deg.i,
/// t <= deg.j (column order: s-major).  Entry u_i^s * v_j^t.
BigIntMatrix evaluation_matrix(const GridConfig& cfg, const LineParams& params, BiDegree deg);

/// M_X(i,j) = rank of the evaluation matrix in degree (i,j).
int hilbert_value(const GridConfig& cfg, const LineParams& params, BiDegree deg);

/// The full Hilbert window, one stabilized row/column beyond the support.
/// Throws EmptyScheme for an empty config and StabilizationFailure if the
/// computed border is not stabilized (which would be a bug).
HilbertWindow hilbert_window(const GridConfig& cfg, const LineParams& params);

/// Bihomogeneous separator form, dehomogenized: coefficients over monomials
/// x^s y^t, s <= deg.i, t <= deg.j, lex (s,t) order, first nonzero = 1.
struct SeparatorForm {
    BiDegree deg;
    std::vector<mpq_class> coeffs;
    int h0_jump = 0;  // dim ker(Z eval) - dim ker(X eval) at deg
};

/// A form vanishing on cfg\{p} and not at p, if one exists in the degree.
std::optional<SeparatorForm> find_separator(const GridConfig& cfg, const Cell& p,
                                            BiDegree deg, const LineParams& params);

enum class SeparatorCondition { row_full, col_full, upset_zero, none };

const char* to_string(SeparatorCondition c);

struct SeparatorDegree {
    int q = 0;  // points of cfg\{p} on the column line of p
    int p = 0;  // points of cfg\{p} on the row line of p
    SeparatorCondition condition = SeparatorCondition::none;
};

/// The candidate degree (q,p) for a separator of p and which sufficient
/// condition (if any) guarantees it.  Condition 3 is checked against the
/// oracle first difference of cfg.
SeparatorDegree separator_degree(const GridConfig& cfg, const Cell& p, const LineParams& params);

}  // namespace bihilbert

#endif
