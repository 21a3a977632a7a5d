#include "bihilbert/grid_scheme.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bihilbert/bidegree_matrix.hpp"

namespace bihilbert {

GridConfig::GridConfig(int grid_rows, int grid_cols, std::set<Cell> points)
    : rows_(grid_rows), cols_(grid_cols), pts_(std::move(points)) {
    if (rows_ < 0 || cols_ < 0) throw Error("negative grid extents");
    for (const auto& [i, j] : pts_)
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
            throw Error("point " + cell_str({i, j}) + " outside grid");
}

int GridConfig::points_on_row(int i) const {
    int n = 0;
    for (const auto& p : pts_)
        if (p.first == i) ++n;
    return n;
}

int GridConfig::points_on_col(int j) const {
    int n = 0;
    for (const auto& p : pts_)
        if (p.second == j) ++n;
    return n;
}

int GridConfig::occupied_rows() const {
    std::set<int> s;
    for (const auto& p : pts_) s.insert(p.first);
    return static_cast<int>(s.size());
}

int GridConfig::occupied_cols() const {
    std::set<int> s;
    for (const auto& p : pts_) s.insert(p.second);
    return static_cast<int>(s.size());
}

GridConfig GridConfig::without(const Cell& p) const {
    if (!contains(p)) throw PointNotInConfig("no point at " + cell_str(p));
    auto pts = pts_;
    pts.erase(p);
    return GridConfig(rows_, cols_, std::move(pts));
}

GridConfig acm_from_delta(const DeltaGrid& d) {
    require_admissible(d);
    std::set<Cell> pts;
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (d.at(i, j) == 1) pts.insert({i, j});
    return GridConfig(d.rows(), d.cols(), std::move(pts));
}

DeletedSet deleted_set(const DeltaGrid& d) {
    DeletedSet ds;
    std::set<Cell> seen;
    for (const auto& mp : marked_points(d)) {
        ds.cells.push_back(mp.point());
        if (!seen.insert(mp.point()).second) ds.is_multiset = true;
    }
    return ds;
}

GridConfig associated_scheme(const DeltaGrid& d) {
    GridConfig x = acm_from_delta(d);
    auto pts = x.points();
    for (const auto& cell : deleted_set(d).cells) {
        if (!x.contains(cell))
            throw InternalInconsistency("deleted cell " + cell_str(cell) + " not in X");
        pts.erase(cell);
    }
    return GridConfig(x.grid_rows(), x.grid_cols(), std::move(pts));
}

LineCounts line_counts(const GridConfig& cfg) {
    LineCounts lc;
    lc.per_row.assign(cfg.grid_rows(), 0);
    lc.per_col.assign(cfg.grid_cols(), 0);
    for (const auto& [i, j] : cfg.points()) {
        ++lc.per_row[i];
        ++lc.per_col[j];
    }
    return lc;
}

std::string render_ascii(const GridConfig& cfg) {
    std::ostringstream os;
    if (cfg.grid_rows() == 0 || cfg.grid_cols() == 0) {
        os << "(empty grid)\n";
        return os.str();
    }
    os << "     ";
    for (int j = 0; j < cfg.grid_cols(); ++j) os << " C" << j;
    os << '\n';
    for (int i = 0; i < cfg.grid_rows(); ++i) {
        os << 'R' << i;
        for (int pad = static_cast<int>(std::to_string(i).size()); pad < 4; ++pad) os << ' ';
        for (int j = 0; j < cfg.grid_cols(); ++j) {
            os << "  " << (cfg.contains({i, j}) ? '*' : '.');
            if (j >= 10) os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

GridConfig read_config(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw ParseError("empty config file");
    std::istringstream hs(header);
    std::string magic, version, rows_kv, cols_kv;
    hs >> magic >> version >> rows_kv >> cols_kv;
    if (magic != "grid-config" || version != "v1" || rows_kv.rfind("rows=", 0) != 0 ||
        cols_kv.rfind("cols=", 0) != 0)
        throw ParseError("bad config header: " + header);
    const int rows = std::stoi(rows_kv.substr(5));
    const int cols = std::stoi(cols_kv.substr(5));
    std::set<Cell> pts;
    int i, j;
    while (is >> i >> j)
        if (!pts.insert({i, j}).second) throw ParseError("duplicate point " + cell_str({i, j}));
    return GridConfig(rows, cols, std::move(pts));
}

GridConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open " + path);
    return read_config(is);
}

void write_config(std::ostream& os, const GridConfig& cfg) {
    os << "grid-config v1 rows=" << cfg.grid_rows() << " cols=" << cfg.grid_cols() << "\n";
    for (const auto& [i, j] : cfg.points()) os << i << ' ' << j << '\n';
}

}  // namespace bihilbert
