#include "bihilbert/hilbert_oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bihilbert/bidegree_matrix.hpp"

namespace bihilbert {

LineParams LineParams::standard(int rows, int cols) {
    LineParams p;
    for (int i = 0; i < rows; ++i) p.u.push_back(i + 1);
    for (int j = 0; j < cols; ++j) p.v.push_back(j + 1);
    return p;
}

LineParams LineParams::random(int rows, int cols, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-50, 50);
    auto draw = [&](int n) {
        std::set<long long> seen;
        std::vector<long long> out;
        while (static_cast<int>(out.size()) < n) {
            long long x = dist(rng);
            if (seen.insert(x).second) out.push_back(x);
        }
        return out;
    };
    LineParams p;
    p.u = draw(rows);
    p.v = draw(cols);
    return p;
}

void LineParams::validate(const GridConfig& cfg) const {
    if (static_cast<int>(u.size()) < cfg.grid_rows() ||
        static_cast<int>(v.size()) < cfg.grid_cols())
        throw ParamMismatch("parameters do not cover the grid");
    if (std::set<long long>(u.begin(), u.end()).size() != u.size() ||
        std::set<long long>(v.begin(), v.end()).size() != v.size())
        throw ParamMismatch("line parameters must be pairwise distinct");
}

BigIntMatrix evaluation_matrix(const GridConfig& cfg, const LineParams& params, BiDegree deg) {
    params.validate(cfg);
    const int ncols = (deg.i + 1) * (deg.j + 1);
    BigIntMatrix m(cfg.count(), ncols);
    int row = 0;
    for (const auto& [i, j] : cfg.points()) {
        const mpz_class u = static_cast<long>(params.u[i]);
        const mpz_class v = static_cast<long>(params.v[j]);
        mpz_class us = 1;
        for (int s = 0; s <= deg.i; ++s) {
            mpz_class vt = 1;
            for (int t = 0; t <= deg.j; ++t) {
                m.at(row, s * (deg.j + 1) + t) = us * vt;
                vt *= v;
            }
            us *= u;
        }
        ++row;
    }
    return m;
}

int hilbert_value(const GridConfig& cfg, const LineParams& params, BiDegree deg) {
    return rank(evaluation_matrix(cfg, params, deg));
}

HilbertWindow hilbert_window(const GridConfig& cfg, const LineParams& params) {
    if (cfg.count() == 0) throw EmptyScheme("Hilbert window of the empty scheme");
    params.validate(cfg);
    const int rho = cfg.occupied_rows() - 1;
    const int gamma = cfg.occupied_cols() - 1;
    std::vector<std::vector<long long>> m(rho + 2, std::vector<long long>(gamma + 2));
    for (int i = 0; i <= rho + 1; ++i)
        for (int j = 0; j <= gamma + 1; ++j)
            m[i][j] = hilbert_value(cfg, params, {i, j});
    try {
        HilbertWindow w(std::move(m));
        if (w.degree() != cfg.count())
            throw StabilizationFailure("window degree does not match the point count");
        return w;
    } catch (const StabilizationMissing& e) {
        throw StabilizationFailure(e.what());
    }
}

std::optional<SeparatorForm> find_separator(const GridConfig& cfg, const Cell& p, BiDegree deg,
                                            const LineParams& params) {
    if (!cfg.contains(p)) throw PointNotInConfig("no point at " + cell_str(p));
    const GridConfig z = cfg.without(p);
    const KernelBasis ker_z = kernel(evaluation_matrix(z, params, deg));
    const KernelBasis ker_x = kernel(evaluation_matrix(cfg, params, deg));
    const int jump = ker_z.dimension - ker_x.dimension;

    const mpz_class u = static_cast<long>(params.u[p.first]);
    const mpz_class v = static_cast<long>(params.v[p.second]);
    for (const auto& vec : ker_z.vectors) {
        mpz_class value = 0;
        mpz_class us = 1;
        for (int s = 0; s <= deg.i; ++s) {
            mpz_class vt = 1;
            for (int t = 0; t <= deg.j; ++t) {
                value += vec[s * (deg.j + 1) + t] * us * vt;
                vt *= v;
            }
            us *= u;
        }
        if (value != 0) {
            SeparatorForm f;
            f.deg = deg;
            f.h0_jump = jump;
            mpq_class lead = 0;
            for (const auto& c : vec)
                if (c != 0) {
                    lead = mpq_class(c);
                    break;
                }
            for (const auto& c : vec) f.coeffs.push_back(mpq_class(c) / lead);
            return f;
        }
    }
    return std::nullopt;
}

const char* to_string(SeparatorCondition c) {
    switch (c) {
        case SeparatorCondition::row_full: return "row_full";
        case SeparatorCondition::col_full: return "col_full";
        case SeparatorCondition::upset_zero: return "upset_zero";
        default: return "none";
    }
}

SeparatorDegree separator_degree(const GridConfig& cfg, const Cell& p, const LineParams& params) {
    if (!cfg.contains(p)) throw PointNotInConfig("no point at " + cell_str(p));
    SeparatorDegree sd;
    sd.p = cfg.points_on_row(p.first) - 1;
    sd.q = cfg.points_on_col(p.second) - 1;
    const int a = cfg.occupied_rows() - 1;
    const int b = cfg.occupied_cols() - 1;
    if (sd.p == b) {
        sd.condition = SeparatorCondition::row_full;
    } else if (sd.q == a) {
        sd.condition = SeparatorCondition::col_full;
    } else {
        const DeltaGrid d = delta(hilbert_window(cfg, params));
        bool zero = true;
        for (int i = sd.q + 1; i < d.rows() && zero; ++i)
            for (int j = sd.p + 1; j < d.cols() && zero; ++j)
                if (d.at(i, j) != 0) zero = false;
        sd.condition = zero ? SeparatorCondition::upset_zero : SeparatorCondition::none;
    }
    return sd;
}

}  // namespace bihilbert
