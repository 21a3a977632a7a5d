#include "bihilbert/deletion_calculus.hpp"

#include <algorithm>
#include <set>

namespace bihilbert {

namespace {

DeltaGrid decremented(const DeltaGrid& d, const std::vector<Cell>& cells) {
    int rows = d.rows(), cols = d.cols();
    for (const auto& [i, j] : cells) {
        rows = std::max(rows, i + 1);
        cols = std::max(cols, j + 1);
    }
    std::vector<std::vector<int>> c(rows, std::vector<int>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) c[i][j] = d.at(i, j);
    for (const auto& [i, j] : cells) --c[i][j];
    return DeltaGrid(std::move(c));
}

DeltaGrid oracle_delta(const GridConfig& cfg, const LineParams& params) {
    if (cfg.count() == 0) return DeltaGrid{};
    return delta(hilbert_window(cfg, params));
}

}  // namespace

DeletionReport deletion_update(const GridConfig& cfg, const Cell& p, const LineParams& params,
                               bool cross_check) {
    const SeparatorDegree sd = separator_degree(cfg, p, params);
    if (sd.condition == SeparatorCondition::none)
        throw ConditionsNotMet("no sufficient separator condition for " + cell_str(p));

    DeletionReport rep;
    rep.point = p;
    rep.p = sd.p;
    rep.q = sd.q;
    rep.condition = sd.condition;

    const DeltaGrid dx = oracle_delta(cfg, params);
    rep.predicted = decremented(dx, {{sd.q, sd.p}});

    if (cross_check) {
        rep.oracle = oracle_delta(cfg.without(p), params);
        rep.oracle_agrees = (*rep.oracle == rep.predicted);
    }
    return rep;
}

DeletionTrace deletion_trace(const DeltaGrid& d, const Cell& source, int r) {
    if (!is_admissible(d).admissible() || !is_plain(d).plain || !is_delta_regular(d).regular)
        throw NotApplicable("trace requires an admissible, plain, Delta-regular matrix");
    if (d.at(source.first, source.second) >= 0 || r < 0 || r >= -d.at(source.first, source.second))
        throw NotApplicable("not a marked (T-cell, shift) pair");

    DeltaProfile p(d);
    const int i = source.first, j = source.second;
    const int value = p.a(i, j) + r;

    DeletionTrace tr;
    tr.source = source;
    tr.r = r;
    tr.m = j;
    tr.n = j;
    for (int k = 0; k < d.cols(); ++k) {
        const int c = d.at(i, k);
        if (c >= 0) continue;
        // (i,k) carries the margin value iff a_ik <= value <= a_ik - c - 1.
        if (p.a(i, k) <= value && value <= p.a(i, k) - c - 1) {
            tr.m = std::min(tr.m, k);
            tr.n = std::max(tr.n, k);
        }
    }
    tr.p = tr.m + tr.n - j;
    tr.target = {i, tr.p};
    return tr;
}

std::vector<DeletionTrace> all_deletion_traces(const DeltaGrid& d) {
    std::vector<DeletionTrace> out;
    for (const auto& neg : negative_locus(d).cells)
        for (int r = 0; r < -neg.c; ++r) out.push_back(deletion_trace(d, neg.pos, r));
    return out;
}

PuncturedLineReport add_punctured_line(const GridConfig& cfg, int n, std::vector<int> skip,
                                       const LineParams& params, bool cross_check) {
    const int b = cfg.grid_cols() - 1;
    for (int s : skip)
        if (s < 0 || s > b) throw BadSkipList("skip column " + std::to_string(s) + " outside 0.." +
                                              std::to_string(b));
    if (std::set<int>(skip.begin(), skip.end()).size() != skip.size())
        throw BadSkipList("duplicate skip column");
    if (n < b) throw HypothesesNotMet("n must be at least the largest column index");

    const DeltaGrid dx = oracle_delta(cfg, params);

    // q_k = points of X on the skipped column, sorted ascending.
    std::vector<int> q;
    std::sort(skip.begin(), skip.end(),
              [&](int s1, int s2) { return cfg.points_on_col(s1) < cfg.points_on_col(s2); });
    for (int s : skip) q.push_back(cfg.points_on_col(s));
    const int r = static_cast<int>(skip.size());

    for (int k = 2; k <= r; ++k)
        for (int i = q[k - 1]; i < dx.rows(); ++i)
            if (dx.at(i, n - k + 2) != 0)
                throw HypothesesNotMet("nonzero first difference at " + cell_str({i, n - k + 2}));

    PuncturedLineReport rep;
    for (int k = 1; k <= r; ++k) rep.t_cells.push_back({q[k - 1], n - k + 1});

    // Predicted first difference of W: full new first row, the rest shifted
    // down one, with the T-cells decremented.
    {
        const int rows = dx.rows() + 1;
        const int cols = std::max(dx.cols(), n + 1);
        std::vector<std::vector<int>> c(rows, std::vector<int>(cols, 0));
        for (int j = 0; j <= n; ++j) c[0][j] = 1;
        for (int i = 1; i < rows; ++i)
            for (int j = 0; j < cols; ++j) c[i][j] = dx.at(i - 1, j);
        for (const auto& [i, j] : rep.t_cells) --c[i][j];
        rep.predicted = DeltaGrid(std::move(c));
    }

    // W = X shifted down one row, plus the punctured line as the new row 0.
    {
        std::set<Cell> pts;
        const std::set<int> skipped(skip.begin(), skip.end());
        for (int j = 0; j <= n; ++j)
            if (!skipped.count(j)) pts.insert({0, j});
        for (const auto& [i, j] : cfg.points()) pts.insert({i + 1, j});
        rep.extended = GridConfig(cfg.grid_rows() + 1, std::max(cfg.grid_cols(), n + 1),
                                  std::move(pts));
    }

    if (cross_check) {
        // Extend the parameters with fresh distinct values for the new line
        // and the extra columns.
        LineParams pw;
        long long umax = 0;
        for (int i = 0; i < cfg.grid_rows(); ++i) umax = std::max(umax, params.u[i]);
        pw.u.push_back(umax + 1);
        pw.u.insert(pw.u.end(), params.u.begin(), params.u.end());
        pw.v.assign(params.v.begin(), params.v.end());
        long long vmax = 0;
        for (int j = 0; j < cfg.grid_cols(); ++j) vmax = std::max(vmax, params.v[j]);
        while (static_cast<int>(pw.v.size()) < rep.extended.grid_cols()) pw.v.push_back(++vmax);
        rep.oracle = oracle_delta(rep.extended, pw);
        rep.oracle_agrees = (*rep.oracle == rep.predicted);
    }
    return rep;
}

}  // namespace bihilbert
