#ifndef BIHILBERT_TEST_HELPERS_HPP
#define BIHILBERT_TEST_HELPERS_HPP

#include <gmpxx.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bihilbert/exact_rank.hpp"

namespace bhtest {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

// Independent rank oracle: plain Gaussian elimination over mpq_class.
inline int naive_rank(const bihilbert::BigIntMatrix& a) {
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = mpq_class(a.at(i, j));
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[pr], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const mpq_class f = m[i][col] / m[r][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline bihilbert::BigIntMatrix random_matrix(int rows, int cols, std::mt19937_64& rng,
                                             int lo = -9, int hi = 9) {
    bihilbert::BigIntMatrix m(rows, cols);
    std::uniform_int_distribution<int> dist(lo, hi);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

inline CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace bhtest

#endif
