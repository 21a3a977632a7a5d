#include "bihilbert/bidegree_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bihilbert {

DeltaGrid delta(const HilbertWindow& m) {
    std::vector<std::vector<int>> c(m.rows(), std::vector<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            c[i][j] = static_cast<int>(m.value_at(i, j) - m.value_at(i - 1, j) -
                                       m.value_at(i, j - 1) + m.value_at(i - 1, j - 1));
    return DeltaGrid(std::move(c));
}

HilbertWindow accumulate(const DeltaGrid& d) {
    if (d.empty()) return HilbertWindow{};
    const int r = d.rows() + 1, c = d.cols() + 1;
    std::vector<std::vector<long long>> m(r, std::vector<long long>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            long long v = d.at(i, j);
            if (i > 0) v += m[i - 1][j];
            if (j > 0) v += m[i][j - 1];
            if (i > 0 && j > 0) v -= m[i - 1][j - 1];
            if (v < 0)
                throw AccumulationNegative("partial sum negative at " + cell_str({i, j}));
            m[i][j] = v;
        }
    return HilbertWindow(std::move(m));
}

DeltaProfile profile(const DeltaGrid& d) { return DeltaProfile(d); }

AdmissibilityReport is_admissible(const DeltaGrid& d) {
    AdmissibilityReport rep;
    const int r = d.rows(), c = d.cols();

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (d.at(i, j) > 1) {
                rep.entries_ok = false;
                rep.bad_entries.push_back({i, j});
            }

    // has_pos[i][j]: some c_rs >= 1 with (r,s) >= (i,j).
    std::vector<std::vector<char>> has_pos(r + 1, std::vector<char>(c + 1, 0));
    for (int i = r - 1; i >= 0; --i)
        for (int j = c - 1; j >= 0; --j)
            has_pos[i][j] = d.at(i, j) >= 1 || has_pos[i + 1][j] || has_pos[i][j + 1];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (d.at(i, j) <= 0 && (has_pos[i + 1][j] || has_pos[i][j + 1])) {
                rep.upset_ok = false;
                rep.bad_upset.push_back({i, j});
            }

    // Clause 3 via the margin grids; the i=0 / j=0 borders only need
    // non-negativity (the comparison index would be -1).
    DeltaProfile p(d);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= c; ++j) {
            bool ok = p.a(i, j) >= 0 && p.b(i, j) >= 0;
            if (j >= 1 && p.a(i, j) > p.a(i, j - 1)) ok = false;
            if (i >= 1 && p.b(i, j) > p.b(i - 1, j)) ok = false;
            if (!ok) {
                rep.margins_ok = false;
                rep.bad_margins.push_back({i, j});
            }
        }
    return rep;
}

void require_admissible(const DeltaGrid& d) {
    if (!is_admissible(d).admissible()) throw NotAdmissible("matrix is not admissible");
}

NegativeLocus negative_locus(const DeltaGrid& d) {
    require_admissible(d);
    NegativeLocus t;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (d.at(i, j) < 0) t.cells.push_back({{i, j}, d.at(i, j)});
    return t;
}

std::vector<MarkedPoint> marked_points(const DeltaGrid& d) {
    const NegativeLocus t = negative_locus(d);
    DeltaProfile p(d);
    std::vector<MarkedPoint> pts;
    for (const auto& cell : t.cells)
        for (int r = 0; r < -cell.c; ++r)
            pts.push_back({cell.pos, r, p.a(cell.pos.first, cell.pos.second) + r,
                           p.b(cell.pos.first, cell.pos.second) + r});
    return pts;
}

PlainReport is_plain(const DeltaGrid& d) {
    PlainReport rep;
    std::map<Cell, MarkedPoint> seen;
    for (const auto& mp : marked_points(d)) {
        auto [it, fresh] = seen.insert({mp.point(), mp});
        if (!fresh) {
            rep.plain = false;
            rep.collisions.push_back({it->second, mp});
        }
    }
    return rep;
}

DeltaRegularReport is_delta_regular(const DeltaGrid& d) {
    DeltaRegularReport rep;
    const auto pts = marked_points(d);
    for (const auto& u : pts)
        for (const auto& v : pts) {
            if (u.a == v.a && u.source.first != v.source.first &&
                u.source.second < v.source.second && u.b > v.b) {
                rep.regular = false;
                rep.witnesses.push_back({1, u, v});
            }
            if (u.b == v.b && u.source.second != v.source.second &&
                u.source.first < v.source.first && u.a > v.a) {
                rep.regular = false;
                rep.witnesses.push_back({2, u, v});
            }
        }
    return rep;
}

ConditionReport condition1(const DeltaGrid& d) {
    require_admissible(d);
    ConditionReport rep;
    DeltaProfile p(d);
    for (int i = 0; i <= d.rows(); ++i)
        for (int j = 0; j <= d.cols(); ++j)
            if (p.a(i, j) < p.a(i - 1, j + 1)) {
                rep.holds = false;
                rep.failures.push_back({i, j});
            }
    return rep;
}

ConditionReport condition2(const DeltaGrid& d) {
    require_admissible(d);
    ConditionReport rep;
    DeltaProfile p(d);
    for (int i = 0; i <= d.rows(); ++i)
        for (int j = 0; j <= d.cols(); ++j)
            if (p.b(i, j) < p.b(i + 1, j - 1)) {
                rep.holds = false;
                rep.failures.push_back({i, j});
            }
    return rep;
}

LineStats line_stats(const HilbertWindow& m) {
    if (m.degree() == 0) throw EmptyScheme("line statistics of the empty scheme");
    LineStats st;
    st.i0 = 0;
    while (m.value_at(st.i0, 0) != m.value_at(st.i0 + 1, 0)) ++st.i0;
    st.j0 = 0;
    while (m.value_at(0, st.j0) != m.value_at(0, st.j0 + 1)) ++st.j0;

    const DeltaGrid d = delta(m);
    DeltaProfile p(d);
    for (int j = 0; j < d.cols(); ++j) {
        const int n = p.a(st.i0, j) - p.a(st.i0, j + 1);
        if (n > 0) st.row_dist[j + 1] += n;
    }
    for (int i = 0; i < d.rows(); ++i) {
        const int n = p.b(i, st.j0) - p.b(i + 1, st.j0);
        if (n > 0) st.col_dist[i + 1] += n;
    }
    return st;
}

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

LemmaReport check_structure_lemmas(const DeltaGrid& d) {
    require_admissible(d);
    LemmaReport rep;
    DeltaProfile p(d);
    const NegativeLocus t = negative_locus(d);
    const int rows = d.rows(), cols = d.cols();

    auto add = [&rep](const std::string& name) -> LemmaReport::Entry& {
        rep.entries.push_back({name, true, ""});
        return rep.entries.back();
    };

    // P:1 / its row-column mirror: order of negative cells along margins.
    {
        auto& e1 = add("order_a");
        auto& e2 = add("order_b");
        for (const auto& neg : t.cells) {
            const auto [i1, j1] = neg.pos;
            for (int r = 0; r < -neg.c; ++r)
                for (int i2 = 0; i2 <= rows; ++i2)
                    for (int j2 = 0; j2 <= cols; ++j2) {
                        if (d.at(i2, j2) > 0) continue;
                        if (j1 > j2 && p.a(i1, j1) + r >= p.a(i2, j2) && !(i1 <= i2) && e1.pass) {
                            e1.pass = false;
                            e1.counterexample = tuple_str({i1, j1, r, i2, j2});
                        }
                        if (i1 > i2 && p.b(i1, j1) + r >= p.b(i2, j2) && !(j1 <= j2) && e2.pass) {
                            e2.pass = false;
                            e2.counterexample = tuple_str({i1, j1, r, i2, j2});
                        }
                    }
        }
    }

    // P:6 / P:8: sandwich bounds force an intermediate negative cell.
    {
        auto& e1 = add("sandwich_a");
        auto& e2 = add("sandwich_b");
        for (const auto& neg : t.cells) {
            const auto [i1, j1] = neg.pos;
            for (int r = 0; r < -neg.c; ++r) {
                const int va = p.a(i1, j1) + r;
                const int vb = p.b(i1, j1) + r;
                for (int i2 = 0; i2 <= rows; ++i2)
                    for (int j2 = 0; j2 <= cols; ++j2) {
                        if (d.at(i2, j2) > 0) continue;
                        if (j2 < j1 - 1 && va >= p.a(i2, j2)) {
                            bool found = false;
                            for (int j = j2 + 1; j < j1 && !found; ++j)
                                for (int i = 0; i <= i2 && !found; ++i)
                                    if (d.at(i, j) < 0 && va + d.at(i, j) + 1 <= p.a(i, j) &&
                                        p.a(i, j) <= va)
                                        found = true;
                            if (!found && e1.pass) {
                                e1.pass = false;
                                e1.counterexample = tuple_str({i1, j1, r, i2, j2});
                            }
                        }
                        if (i2 < i1 - 1 && vb >= p.b(i2, j2)) {
                            bool found = false;
                            for (int i = i2 + 1; i < i1 && !found; ++i)
                                for (int j = 0; j <= j2 && !found; ++j)
                                    if (d.at(i, j) < 0 && vb + d.at(i, j) + 1 <= p.b(i, j) &&
                                        p.b(i, j) <= vb)
                                        found = true;
                            if (!found && e2.pass) {
                                e2.pass = false;
                                e2.counterexample = tuple_str({i1, j1, r, i2, j2});
                            }
                        }
                    }
            }
        }
    }

    // P:7 / P:10: strict monotonicity of marked values along a column / row of T.
    {
        auto& e1 = add("strict_a");
        auto& e2 = add("strict_b");
        for (const auto& n1 : t.cells)
            for (const auto& n2 : t.cells) {
                if (n1.pos.second == n2.pos.second && n2.pos.first < n1.pos.first)
                    for (int r = 0; r < -n1.c; ++r)
                        for (int s = 0; s < -n2.c; ++s)
                            if (!(p.a(n2.pos.first, n2.pos.second) + s >
                                  p.a(n1.pos.first, n1.pos.second) + r) &&
                                e1.pass) {
                                e1.pass = false;
                                e1.counterexample = tuple_str(
                                    {n1.pos.first, n1.pos.second, r, n2.pos.first, n2.pos.second, s});
                            }
                if (n1.pos.first == n2.pos.first && n2.pos.second < n1.pos.second)
                    for (int r = 0; r < -n1.c; ++r)
                        for (int s = 0; s < -n2.c; ++s)
                            if (!(p.b(n2.pos.first, n2.pos.second) + s >
                                  p.b(n1.pos.first, n1.pos.second) + r) &&
                                e2.pass) {
                                e2.pass = false;
                                e2.counterexample = tuple_str(
                                    {n1.pos.first, n1.pos.second, r, n2.pos.first, n2.pos.second, s});
                            }
            }
    }

    // P:3 / P:9: the marked margin value locates a full row / column of X.
    {
        auto& e1 = add("row_count");
        auto& e2 = add("col_count");
        std::set<int> avals, bvals;
        for (const auto& mp : marked_points(d)) {
            avals.insert(mp.a);
            bvals.insert(mp.b);
        }
        const int a = rows - 1, b = cols - 1;
        for (int pv : avals) {
            int k = -1;
            for (const auto& neg : t.cells)
                if (pv + neg.c + 1 <= p.a(neg.pos.first, neg.pos.second) &&
                    p.a(neg.pos.first, neg.pos.second) <= pv)
                    k = std::max(k, neg.pos.second);
            if (k < 0) continue;
            int count = 0;
            for (int j = 0; j < cols; ++j)
                if (d.at(pv, j) == 1) ++count;
            if ((pv < 0 || pv > a || count != k + 1) && e1.pass) {
                e1.pass = false;
                e1.counterexample = tuple_str({pv, k, count});
            }
        }
        for (int qv : bvals) {
            int h = -1;
            for (const auto& neg : t.cells)
                if (qv + neg.c + 1 <= p.b(neg.pos.first, neg.pos.second) &&
                    p.b(neg.pos.first, neg.pos.second) <= qv)
                    h = std::max(h, neg.pos.first);
            if (h < 0) continue;
            int count = 0;
            for (int i = 0; i < rows; ++i)
                if (d.at(i, qv) == 1) ++count;
            if ((qv < 0 || qv > b || count != h + 1) && e2.pass) {
                e2.pass = false;
                e2.counterexample = tuple_str({qv, h, count});
            }
        }
    }

    return rep;
}

// --- text format -------------------------------------------------------------

MatrixFile read_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw ParseError("empty matrix file");
    std::istringstream hs(header);
    std::string magic, version, rows_kv, cols_kv, kind_kv;
    hs >> magic >> version >> rows_kv >> cols_kv >> kind_kv;
    if (magic != "hilbert-matrix" || version != "v1" || rows_kv.rfind("rows=", 0) != 0 ||
        cols_kv.rfind("cols=", 0) != 0 || kind_kv.rfind("kind=", 0) != 0)
        throw ParseError("bad matrix header: " + header);
    const int rows = std::stoi(rows_kv.substr(5));
    const int cols = std::stoi(cols_kv.substr(5));
    const std::string kind = kind_kv.substr(5);
    if (rows < 0 || cols < 0) throw ParseError("negative extents");

    MatrixFile f;
    if (kind == "M") {
        f.kind = MatrixKind::M;
        f.window = HilbertWindow::parse_body(is, rows, cols);
    } else if (kind == "delta") {
        f.kind = MatrixKind::Delta;
        f.grid = DeltaGrid::parse_body(is, rows, cols);
    } else {
        throw ParseError("unknown kind: " + kind);
    }
    return f;
}

MatrixFile load_matrix_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open " + path);
    return read_matrix(is);
}

void write_matrix(std::ostream& os, const HilbertWindow& m) {
    os << "hilbert-matrix v1 rows=" << m.rows() << " cols=" << m.cols() << " kind=M\n";
    m.print(os);
}

void write_matrix(std::ostream& os, const DeltaGrid& d) {
    os << "hilbert-matrix v1 rows=" << d.rows() << " cols=" << d.cols() << " kind=delta\n";
    d.print(os);
}

}  // namespace bihilbert
