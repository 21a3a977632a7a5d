#include "bihilbert/theorem4.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace bihilbert {

VerifierReport verify_theorem4(const DeltaGrid& d, const LineParams& params) {
    VerifierReport rep;
    rep.admissibility = is_admissible(d);
    if (!rep.admissibility.admissible()) throw NotAdmissible("matrix is not admissible");
    rep.plain = is_plain(d);
    rep.delta_regular = is_delta_regular(d);
    rep.cond1 = condition1(d);
    rep.cond2 = condition2(d);
    rep.z = associated_scheme(d);
    rep.m = accumulate(d);
    rep.m_z = rep.z.count() == 0 ? HilbertWindow{} : hilbert_window(rep.z, params);
    rep.mismatch = first_mismatch(rep.m, rep.m_z);
    rep.equal = !rep.mismatch.has_value();
    return rep;
}

bool check_corollary_c6(const DeltaGrid& d) {
    require_admissible(d);
    const NegativeLocus t = negative_locus(d);
    DeltaProfile p(d);
    for (const auto& n1 : t.cells)
        for (const auto& n2 : t.cells) {
            const auto [i1, j1] = n1.pos;
            const auto [i2, j2] = n2.pos;
            if (i1 < i2 && j1 > j2 &&
                !(p.a(i1, j1) - p.b(i1, j1) < p.a(i2, j2) - p.b(i2, j2)))
                return false;
        }
    if (!(condition1(d).holds || condition2(d).holds)) return false;
    // The corollary's hypothesis implies both; a failure here is a bug.
    if (!is_plain(d).plain || !is_delta_regular(d).regular)
        throw InternalInconsistency("hypothesis held but plain/Delta-regular failed");
    return true;
}

bool check_corollary_c7(const DeltaGrid& d) {
    require_admissible(d);
    if (!is_plain(d).plain) throw NotAdmissible("corollary requires a plain matrix");
    const NegativeLocus t = negative_locus(d);
    for (size_t k = 1; k < t.cells.size(); ++k)
        if (t.cells[k].pos.first + t.cells[k].pos.second !=
            t.cells[0].pos.first + t.cells[0].pos.second)
            return false;
    return true;
}

DeltaGrid random_staircase(int a, int b, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> c(a + 1, std::vector<int>(b + 1, 0));
    int len = b + 1;  // row 0 spans the full width so the size is (a,b)
    for (int i = 0; i <= a; ++i) {
        if (i > 0) len = std::uniform_int_distribution<int>(1, len)(rng);
        for (int j = 0; j < len; ++j) c[i][j] = 1;
    }
    return DeltaGrid(std::move(c));
}

GridConfig random_grid_config(int a, int b, int n_points, unsigned long seed) {
    const int total = (a + 1) * (b + 1);
    if (n_points > total) throw Error("more points than grid cells");
    std::mt19937_64 rng(seed);
    std::vector<int> cells(total);
    for (int k = 0; k < total; ++k) cells[k] = k;
    std::shuffle(cells.begin(), cells.end(), rng);
    std::set<Cell> pts;
    for (int k = 0; k < n_points; ++k)
        pts.insert({cells[k] / (b + 1), cells[k] % (b + 1)});
    return GridConfig(a + 1, b + 1, std::move(pts));
}

DeltaGrid random_config_matrix(int a, int b, int n_points, unsigned long seed,
                               const LineParams& params) {
    const GridConfig cfg = random_grid_config(a, b, n_points, seed);
    if (cfg.count() == 0) return DeltaGrid{};
    return delta(hilbert_window(cfg, params));
}

std::optional<DeltaGrid> random_delta_direct(int a, int b, unsigned long seed, int attempts) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < attempts; ++t) {
        DeltaGrid stairs = random_staircase(a, b, rng());
        std::vector<std::vector<int>> c(stairs.rows());
        for (int i = 0; i < stairs.rows(); ++i)
            for (int j = 0; j < stairs.cols(); ++j) c[i].push_back(stairs.at(i, j));
        // Drop random decrements just past the staircase boundary.
        const int rows = static_cast<int>(c.size());
        for (int i = 1; i < rows; ++i) {
            int edge = 0;
            while (edge < static_cast<int>(c[i].size()) && c[i][edge] == 1) ++edge;
            if (edge < static_cast<int>(c[i].size()) &&
                std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                c[i][edge] -= std::uniform_int_distribution<int>(1, 2)(rng);
        }
        DeltaGrid d(std::move(c));
        if (is_admissible(d).admissible()) return d;
    }
    return std::nullopt;
}

ExplorerSummary explore_open_problem(long long trials, int a, int b, unsigned long seed,
                                     const std::string& log_path) {
    if (trials < 1) throw Error("trials must be at least 1");
    std::ofstream log(log_path, std::ios::app);
    if (!log) throw Error("cannot open explorer log " + log_path);

    ExplorerSummary sum;
    const LineParams params = LineParams::standard(a + 1, b + 1);
    for (long long t = 0; t < trials; ++t) {
        // Per-trial RNG derived from (seed, trial), so records are replayable
        // regardless of scheduling.
        std::seed_seq seq{static_cast<unsigned long>(seed), static_cast<unsigned long>(t)};
        std::mt19937_64 rng(seq);
        const int total = (a + 1) * (b + 1);
        const int n_points = std::uniform_int_distribution<int>(1, total)(rng);
        const unsigned long cfg_seed = rng();

        const DeltaGrid d = random_config_matrix(a, b, n_points, cfg_seed, params);
        ++sum.sampled;
        if (d.empty()) continue;
        if (!is_plain(d).plain || !is_delta_regular(d).regular) continue;
        if (condition1(d).holds || condition2(d).holds) continue;
        ++sum.filtered_in;

        const VerifierReport rep = verify_theorem4(d, params);
        std::ostringstream line;
        line << "trial=" << t << " seed=" << seed << " cfg_seed=" << cfg_seed
             << " n_points=" << n_points << " verdict=" << (rep.equal ? "match" : "mismatch");
        if (!rep.equal) line << " cell=" << cell_str(*rep.mismatch);
        log << line.str() << '\n';
        if (!log) throw Error("explorer log write failed");
        if (rep.equal)
            ++sum.match;
        else
            ++sum.mismatch;
    }
    log.flush();
    if (!log) throw Error("explorer log write failed");
    return sum;
}

}  // namespace bihilbert
