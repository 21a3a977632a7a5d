#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "bihilbert/theorem4.hpp"
#include "helpers.hpp"

using namespace bihilbert;
using bhtest::fixture;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string temp_log(const std::string& tag) {
    const auto p = std::filesystem::temp_directory_path() /
                   ("bihilbert_explore_" + std::to_string(getpid()) + "_" + tag + ".log");
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("the pipeline confirms the published examples") {
    for (const char* name : {"ex2.matrix", "ex1.matrix"}) {
        CAPTURE(name);
        const DeltaGrid d = load_matrix_file(fixture(name)).as_delta();
        const VerifierReport rep =
            verify_theorem4(d, LineParams::standard(d.rows() + 1, d.cols() + 1));
        CHECK(rep.hypotheses_hold());
        CHECK(rep.equal);
        CHECK_FALSE(rep.mismatch.has_value());
        CHECK(equal_extended(rep.m, accumulate(d)));
    }
}

TEST_CASE("the block example matches despite failing both side conditions") {
    const DeltaGrid d = load_matrix_file(fixture("ex0-3.matrix")).as_delta();
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(4, 4));
    CHECK(rep.plain.plain);
    CHECK(rep.delta_regular.regular);
    CHECK_FALSE(rep.cond1.holds);
    CHECK_FALSE(rep.cond2.holds);
    CHECK_FALSE(rep.hypotheses_hold());
    CHECK(rep.equal);  // conjecturally no hypothesis-free counterexample exists
    CHECK(rep.z == load_config_file(fixture("ex0-3.config")));
}

TEST_CASE("a non-Delta-regular matrix is detected as a genuine mismatch") {
    const DeltaGrid d = load_matrix_file(fixture("ex0-1.matrix")).as_delta();
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(6, 6));
    CHECK(rep.plain.plain);
    CHECK_FALSE(rep.delta_regular.regular);
    CHECK_FALSE(rep.hypotheses_hold());
    CHECK_FALSE(rep.equal);
    REQUIRE(rep.mismatch.has_value());
    CHECK(*rep.mismatch == Cell{3, 3});
    CHECK(rep.m.value_at(3, 3) == 13);
    CHECK(rep.m_z.value_at(3, 3) == 14);
}

TEST_CASE("a non-plain matrix loses a point to the multiset deletion") {
    const DeltaGrid d = load_matrix_file(fixture("ex0-2.matrix")).as_delta();
    const VerifierReport rep = verify_theorem4(d, LineParams::standard(3, 3));
    CHECK_FALSE(rep.plain.plain);
    CHECK(rep.z.count() == 4);
    CHECK(rep.m.degree() == 3);
    CHECK_FALSE(rep.equal);
}

TEST_CASE("the pipeline rejects inadmissible matrices") {
    CHECK_THROWS_AS(verify_theorem4(DeltaGrid{{{1, 2}}}, LineParams::standard(2, 3)),
                    NotAdmissible);
}

TEST_CASE("the empty matrix verifies trivially") {
    const VerifierReport rep = verify_theorem4(DeltaGrid{}, LineParams::standard(1, 1));
    CHECK(rep.equal);
    CHECK(rep.z.count() == 0);
}

TEST_CASE("hypothesis-passing random matrices always verify") {
    std::mt19937_64 rng(2468);
    const LineParams params = LineParams::standard(5, 5);
    int verified = 0;
    for (int t = 0; t < 120; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 25)(rng);
        const DeltaGrid d = random_config_matrix(4, 4, n, rng(), params);
        if (d.empty()) continue;
        const VerifierReport rep = verify_theorem4(d, params);
        if (!rep.hypotheses_hold()) continue;
        CAPTURE(t);
        CHECK(rep.equal);
        ++verified;
    }
    CHECK(verified >= 60);
}

TEST_CASE("the difference-gap corollary certifies the worked example") {
    CHECK(check_corollary_c6(load_matrix_file(fixture("ex2.matrix")).as_delta()));
    // Both block matrices fail a hypothesis of the corollary.
    CHECK_FALSE(check_corollary_c6(load_matrix_file(fixture("ex0-3.matrix")).as_delta()));
}

TEST_CASE("the anti-diagonal corollary") {
    const DeltaGrid diag{{{1, 1, 1}, {1, 1, -1}, {1, -1, 0}}};
    CHECK(check_corollary_c7(diag));
    // The certified matrix indeed verifies.
    CHECK(verify_theorem4(diag, LineParams::standard(3, 3)).equal);

    CHECK_FALSE(check_corollary_c7(load_matrix_file(fixture("ex2.matrix")).as_delta()));
    CHECK_THROWS_AS(check_corollary_c7(load_matrix_file(fixture("ex0-2.matrix")).as_delta()),
                    NotAdmissible);
}

TEST_CASE("random staircases are admissible with no deletions") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        const DeltaGrid d = random_staircase(4, 5, rng());
        CHECK(d.size() == Cell{4, 5});
        CHECK(is_admissible(d).admissible());
        CHECK(negative_locus(d).cells.empty());
        CHECK(associated_scheme(d) == acm_from_delta(d));
    }
    CHECK(random_staircase(3, 3, 42) == random_staircase(3, 3, 42));
}

TEST_CASE("random configurations are deterministic in the seed") {
    const GridConfig a = random_grid_config(4, 4, 10, 99);
    CHECK(a == random_grid_config(4, 4, 10, 99));
    CHECK(a.count() == 10);
    CHECK(a.grid_rows() == 5);
    CHECK(a.grid_cols() == 5);
    CHECK_THROWS_AS(random_grid_config(1, 1, 5, 0), Error);
}

TEST_CASE("the direct sampler only emits admissible matrices") {
    std::mt19937_64 rng(321);
    int produced = 0;
    for (int t = 0; t < 30; ++t) {
        const auto d = random_delta_direct(3, 3, rng());
        if (!d) continue;
        CHECK(is_admissible(*d).admissible());
        ++produced;
    }
    CHECK(produced >= 20);
}

TEST_CASE("the explorer is deterministic and accounts for every trial") {
    const std::string log_a = temp_log("a"), log_b = temp_log("b");
    const ExplorerSummary sa = explore_open_problem(400, 3, 3, 7, log_a);
    const ExplorerSummary sb = explore_open_problem(400, 3, 3, 7, log_b);
    CHECK(sa.sampled == 400);
    CHECK(sa.match + sa.mismatch == sa.filtered_in);
    CHECK(sa.filtered_in == sb.filtered_in);
    CHECK(slurp(log_a) == slurp(log_b));
    // No hypothesis-free counterexample found so far.
    CHECK(sa.mismatch == 0);
    std::filesystem::remove(log_a);
    std::filesystem::remove(log_b);

    CHECK_THROWS_AS(explore_open_problem(0, 3, 3, 7, temp_log("c")), Error);
}
