// Acceptance gate: one pass/fail line per criterion, exit status = number of
// failed criteria.
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bihilbert/deletion_calculus.hpp"
#include "bihilbert/theorem4.hpp"
#include "helpers.hpp"

using namespace bihilbert;
using bhtest::fixture;
using bhtest::run_cli;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// Rebuild d from the 0/1 support of X by decrementing every trace target.
bool traces_conserve(const DeltaGrid& d) {
    std::vector<std::vector<int>> c(d.rows(), std::vector<int>(d.cols(), 0));
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (d.at(i, j) == 1) c[i][j] = 1;
    for (const auto& tr : all_deletion_traces(d)) --c[tr.target.first][tr.target.second];
    return DeltaGrid(std::move(c)) == d;
}

void criterion1() {
    const auto start = Clock::now();
    const DeltaGrid d = load_matrix_file(fixture("ex2.delta")).as_delta();
    const bool preds = is_admissible(d).admissible() && is_plain(d).plain &&
                       is_delta_regular(d).regular;
    std::set<Cell> t;
    for (const auto& n : negative_locus(d).cells) t.insert(n.pos);
    std::set<Cell> marks;
    for (const auto& m : marked_points(d)) marks.insert(m.point());
    const bool sets =
        t == std::set<Cell>{{1, 6}, {2, 5}, {2, 4}, {3, 3}} &&
        marks == std::set<Cell>{{0, 4}, {0, 1}, {0, 2}, {1, 3}, {0, 0}, {1, 1}, {2, 2}} &&
        marked_points(d).size() == 7;
    const auto cli = run_cli("check " + fixture("ex2.delta"));
    const double secs = seconds_since(start);
    report(1, preds && sets && cli.exit_code == 0 && secs < 1.0,
           "12-point example: predicates, deletion data and check agree with the "
           "published values (" + std::to_string(secs) + " s)");
}

void criterion2() {
    const auto start = Clock::now();
    const DeltaGrid d = load_matrix_file(fixture("ex1.matrix")).as_delta();
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(10, 9));
    const bool counts = rep.z.count() == 24 &&
                        line_counts(rep.z).per_col == std::vector<int>{5, 5, 4, 3, 3, 2, 1, 1};
    const double secs = seconds_since(start);
    report(2, counts && rep.equal && rep.hypotheses_hold() && secs < 5.0,
           "24-point example verifies end to end, per-column counts (5,5,4,3,3,2,1,1) (" +
               std::to_string(secs) + " s)");
}

void criterion3() {
    const DeltaGrid d = load_matrix_file(fixture("ex0-1.matrix")).as_delta();
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(6, 6));
    const auto cli = run_cli("verify " + fixture("ex0-1.matrix"));
    report(3,
           !rep.delta_regular.regular && !rep.equal && rep.m_z.value_at(3, 3) == 14 &&
               rep.m.value_at(3, 3) == 13 && cli.exit_code == 1,
           "non-Delta-regular candidate rejected: M_Z(3,3)=14 vs 13, verify exits 1");
}

void criterion4() {
    const DeltaGrid d = load_matrix_file(fixture("ex0-2.matrix")).as_delta();
    const PlainReport plain = is_plain(d);
    const bool collision = !plain.plain && plain.collisions.size() == 1 &&
                           plain.collisions[0].first.point() == Cell{0, 0};
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(3, 3));
    report(4, collision && rep.z.count() == 4 && rep.m.degree() == 3 && !rep.equal,
           "non-plain candidate rejected: marks collide at (0,0), |Z|=4 != deg 3");
}

void criterion5() {
    const DeltaGrid d = load_matrix_file(fixture("ex0-3.matrix")).as_delta();
    DeltaProfile p(d);
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(4, 4));
    const bool witnesses = p.a(2, 2) == 1 && p.a(1, 3) == 2 && p.b(2, 2) == 1 &&
                           p.b(3, 1) == 2;
    report(5,
           rep.plain.plain && rep.delta_regular.regular && !rep.cond1.holds &&
               !rep.cond2.holds && witnesses && rep.equal,
           "block example fails both side conditions (a_22=1<2=a_13, b_22=1<2=b_31) yet "
           "verifies equal");
}

void criterion6() {
    std::mt19937_64 rng(20260824);
    const LineParams params = LineParams::standard(5, 5);
    const auto start = Clock::now();
    int bad = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const GridConfig cfg = random_grid_config(4, 4, n, rng());
        const HilbertWindow w = hilbert_window(cfg, params);
        const DeltaGrid d = delta(w);
        if (!is_admissible(d).admissible()) ++bad;
        const LineStats st = line_stats(w);
        std::map<int, int> rows, cols;
        for (int i = 0; i < 5; ++i)
            if (cfg.points_on_row(i) > 0) ++rows[cfg.points_on_row(i)];
        for (int j = 0; j < 5; ++j)
            if (cfg.points_on_col(j) > 0) ++cols[cfg.points_on_col(j)];
        if (st.row_dist != rows || st.col_dist != cols) ++bad;
        if (!check_structure_lemmas(d).all_pass()) ++bad;
    }
    const double secs = seconds_since(start);
    report(6, bad == 0 && secs < 60.0,
           std::to_string(trials) + " random configurations: oracle admissibility, line "
           "statistics and structure lemmas all hold (" + std::to_string(secs) + " s)");
}

void criterion7() {
    std::mt19937_64 rng(777);
    int checked = 0, bad = 0, round = 0;
    while (checked < 200 && round < 200) {
        ++round;
        const DeltaGrid stairs = random_staircase(4, 4, rng());
        const GridConfig x = acm_from_delta(stairs);
        const LineParams params = LineParams::standard(x.grid_rows(), x.grid_cols());
        for (const auto& p : x.points()) {
            const SeparatorDegree sd = separator_degree(x, p, params);
            if (sd.condition == SeparatorCondition::none) continue;
            const DeletionReport rep = deletion_update(x, p, params);
            if (!rep.oracle_agrees.value_or(false)) ++bad;
            const auto form = find_separator(x, p, {sd.q, sd.p}, params);
            if (!form || form->h0_jump != 1) ++bad;
            ++checked;
        }
    }
    report(7, checked >= 200 && bad == 0,
           std::to_string(checked) + " staircase deletions: predicted difference matches "
           "the oracle, kernel jump 1");
}

void criterion8() {
    std::mt19937_64 rng(424242);
    const LineParams params = LineParams::standard(5, 5);
    int checked = 0, bad = 0, trials = 0;
    while (checked < 200 && trials < 3000) {
        ++trials;
        const int n = std::uniform_int_distribution<int>(1, 25)(rng);
        const DeltaGrid d = random_config_matrix(4, 4, n, rng(), params);
        if (d.empty()) continue;
        const VerifierReport rep = verify_theorem4(d, params);
        if (!rep.hypotheses_hold()) continue;
        if (!rep.equal) ++bad;
        if (!traces_conserve(d)) ++bad;
        ++checked;
    }
    report(8, checked >= 200 && bad == 0,
           std::to_string(checked) + " hypothesis-passing matrices verify equal with "
           "trace conservation");
}

void criterion9() {
    bool ok = true;
    std::mt19937_64 rng(9);
    for (const char* name : {"ex1-z.config", "ex0-3.config"}) {
        const GridConfig cfg = load_config_file(fixture(name));
        const HilbertWindow base =
            hilbert_window(cfg, LineParams::standard(cfg.grid_rows(), cfg.grid_cols()));
        for (int k = 0; k < 3; ++k) {
            const LineParams alt =
                LineParams::random(cfg.grid_rows(), cfg.grid_cols(), rng());
            if (!equal_extended(base, hilbert_window(cfg, alt))) ok = false;
        }
    }
    report(9, ok, "oracle windows identical across 3 random parameter choices per fixture");
}

void criterion10() {
    const auto log_a = std::filesystem::temp_directory_path() /
                       ("bihilbert_acc_" + std::to_string(getpid()) + "_a.log");
    const auto log_b = std::filesystem::temp_directory_path() /
                       ("bihilbert_acc_" + std::to_string(getpid()) + "_b.log");
    std::filesystem::remove(log_a);
    std::filesystem::remove(log_b);
    const auto ra = run_cli("explore --seed 42 --trials 100 --rows 4 --cols 4 --log " +
                            log_a.string());
    const auto rb = run_cli("explore --seed 42 --trials 100 --rows 4 --cols 4 --log " +
                            log_b.string());
    const bool ok = ra.exit_code == 0 && rb.exit_code == 0 && ra.output == rb.output &&
                    slurp(log_a) == slurp(log_b);
    std::filesystem::remove(log_a);
    std::filesystem::remove(log_b);
    report(10, ok, "explore --seed 42 --trials 100 twice yields byte-identical logs");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << (10 - failures) << "/10)" << std::endl;
    return failures;
}
