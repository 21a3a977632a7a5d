#include "bihilbert/exact_rank.hpp"

#include <vector>

namespace bihilbert {

BigIntMatrix BigIntMatrix::transposed() const {
    BigIntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

struct Echelon {
    BigIntMatrix w;
    std::vector<int> pivot_cols;  // one per eliminated row, increasing
};

// Fraction-free (Bareiss) elimination; skips columns without a pivot, so it
// handles rectangular and rank-deficient input.  Pivot: first nonzero entry
// in the column at or below the current row.
Echelon bareiss(BigIntMatrix w) {
    Echelon e{std::move(w), {}};
    BigIntMatrix& m = e.w;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        const mpz_class pivot = m.at(row, col);
        for (int i = row + 1; i < m.rows(); ++i) {
            for (int j = col + 1; j < m.cols(); ++j) {
                mpz_class v = m.at(i, j) * pivot - m.at(i, col) * m.at(row, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = v;
            }
            m.at(i, col) = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

int rank(const BigIntMatrix& a) { return static_cast<int>(bareiss(a).pivot_cols.size()); }

KernelBasis kernel(const BigIntMatrix& a) {
    const Echelon e = bareiss(a);
    const int r = static_cast<int>(e.pivot_cols.size());
    const int n = a.cols();

    std::vector<char> is_pivot(n, 0);
    for (int c : e.pivot_cols) is_pivot[c] = 1;

    KernelBasis basis;
    basis.dimension = n - r;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(n, 0);
        v[f] = 1;
        for (int k = r - 1; k >= 0; --k) {
            const int pc = e.pivot_cols[k];
            mpq_class s = 0;
            for (int j = pc + 1; j < n; ++j)
                if (v[j] != 0) s += mpq_class(e.w.at(k, j)) * v[j];
            v[pc] = -s / mpq_class(e.w.at(k, pc));
        }
        // Clear denominators and divide out the content.
        mpz_class lcm = 1;
        for (const auto& q : v)
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> iv(n);
        mpz_class content = 0;
        for (int j = 0; j < n; ++j) {
            mpq_class scaled = v[j] * mpq_class(lcm);
            iv[j] = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), iv[j].get_mpz_t());
        }
        if (content > 1)
            for (auto& x : iv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        basis.vectors.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace bihilbert
