#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bihilbert/bidegree_matrix.hpp"
#include "bihilbert/deletion_calculus.hpp"
#include "bihilbert/grid_scheme.hpp"
#include "bihilbert/hilbert_oracle.hpp"
#include "bihilbert/theorem4.hpp"

using json = nlohmann::json;
using namespace bihilbert;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string cells_str(const std::vector<Cell>& cells) {
    std::string s;
    for (size_t k = 0; k < cells.size(); ++k) {
        if (k) s += ",";
        s += cell_str(cells[k]);
    }
    return s;
}

json cell_json(const Cell& c) { return json::array({c.first, c.second}); }

Cell parse_cell(const std::string& s) {
    int i, j;
    char comma;
    std::istringstream is(s);
    if (!(is >> i >> comma >> j) || comma != ',') throw ParseError("expected i,j, got " + s);
    return {i, j};
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

LineParams params_for(const GridConfig& cfg, const std::string& u_str, const std::string& v_str) {
    LineParams p = LineParams::standard(cfg.grid_rows(), cfg.grid_cols());
    if (!u_str.empty()) p.u = parse_list(u_str);
    if (!v_str.empty()) p.v = parse_list(v_str);
    p.validate(cfg);
    return p;
}

int cmd_check(const std::string& path, bool as_json) {
    const DeltaGrid d = load_matrix_file(path).as_delta();
    const AdmissibilityReport adm = is_admissible(d);
    if (!adm.admissible()) {
        if (as_json) {
            json j{{"admissible", false},
                   {"bad_entries", json::array()},
                   {"bad_upset", json::array()},
                   {"bad_margins", json::array()}};
            for (const auto& c : adm.bad_entries) j["bad_entries"].push_back(cell_json(c));
            for (const auto& c : adm.bad_upset) j["bad_upset"].push_back(cell_json(c));
            for (const auto& c : adm.bad_margins) j["bad_margins"].push_back(cell_json(c));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "admissible=false\n";
            if (!adm.bad_entries.empty()) std::cout << "bad_entries=" << cells_str(adm.bad_entries) << "\n";
            if (!adm.bad_upset.empty()) std::cout << "bad_upset=" << cells_str(adm.bad_upset) << "\n";
            if (!adm.bad_margins.empty()) std::cout << "bad_margins=" << cells_str(adm.bad_margins) << "\n";
        }
        return kCheckFailed;
    }

    const PlainReport plain = is_plain(d);
    const DeltaRegularReport reg = is_delta_regular(d);
    const ConditionReport c1 = condition1(d), c2 = condition2(d);
    const NegativeLocus t = negative_locus(d);
    const auto marks = marked_points(d);

    if (as_json) {
        json j{{"admissible", true},
               {"plain", plain.plain},
               {"delta_regular", reg.regular},
               {"condition1", c1.holds},
               {"condition2", c2.holds}};
        if (auto sz = d.size()) j["size"] = cell_json(*sz);
        j["T"] = json::array();
        for (const auto& n : t.cells)
            j["T"].push_back({{"cell", cell_json(n.pos)}, {"c", n.c}});
        j["marks"] = json::array();
        for (const auto& m : marks)
            j["marks"].push_back({{"source", cell_json(m.source)}, {"r", m.r}, {"point", cell_json(m.point())}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "admissible=true\n";
        if (auto sz = d.size()) std::cout << "size=" << cell_str(*sz) << "\n";
        std::cout << "plain=" << (plain.plain ? "true" : "false") << "\n";
        std::cout << "delta_regular=" << (reg.regular ? "true" : "false") << "\n";
        std::cout << "condition1=" << (c1.holds ? "true" : "false") << "\n";
        std::cout << "condition2=" << (c2.holds ? "true" : "false") << "\n";
        std::string ts, ms;
        for (size_t k = 0; k < t.cells.size(); ++k) {
            if (k) ts += ",";
            ts += cell_str(t.cells[k].pos);
        }
        for (size_t k = 0; k < marks.size(); ++k) {
            if (k) ms += ",";
            ms += cell_str(marks[k].point());
        }
        std::cout << "T=" << ts << "\n";
        std::cout << "marks=" << ms << "\n";
        for (const auto& col : plain.collisions)
            std::cout << "collision=" << cell_str(col.first.point()) << " from "
                      << cell_str(col.first.source) << "+" << col.first.r << " and "
                      << cell_str(col.second.source) << "+" << col.second.r << "\n";
        for (const auto& w : reg.witnesses)
            std::cout << "not_regular_witness=clause" << w.clause << " "
                      << cell_str(w.first.source) << "+" << w.first.r << " vs "
                      << cell_str(w.second.source) << "+" << w.second.r << "\n";
        if (!c1.holds) std::cout << "condition1_failures=" << cells_str(c1.failures) << "\n";
        if (!c2.holds) std::cout << "condition2_failures=" << cells_str(c2.failures) << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& path, const std::string& u_str, const std::string& v_str,
               bool as_json) {
    const DeltaGrid d = load_matrix_file(path).as_delta();
    GridConfig z0 = associated_scheme(d);
    LineParams params = LineParams::standard(z0.grid_rows(), z0.grid_cols());
    if (!u_str.empty()) params.u = parse_list(u_str);
    if (!v_str.empty()) params.v = parse_list(v_str);
    const VerifierReport rep = verify_theorem4(d, params);

    if (as_json) {
        json j{{"admissible", true},
               {"plain", rep.plain.plain},
               {"delta_regular", rep.delta_regular.regular},
               {"condition1", rep.cond1.holds},
               {"condition2", rep.cond2.holds},
               {"z_points", rep.z.count()},
               {"degree", rep.m.degree()},
               {"equal", rep.equal}};
        if (rep.mismatch) j["mismatch"] = cell_json(*rep.mismatch);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "plain=" << (rep.plain.plain ? "true" : "false") << "\n";
        std::cout << "delta_regular=" << (rep.delta_regular.regular ? "true" : "false") << "\n";
        std::cout << "condition1=" << (rep.cond1.holds ? "true" : "false") << "\n";
        std::cout << "condition2=" << (rep.cond2.holds ? "true" : "false") << "\n";
        std::cout << "hypotheses=" << (rep.hypotheses_hold() ? "true" : "false") << "\n";
        std::cout << "z_points=" << rep.z.count() << "\n";
        std::cout << "degree=" << rep.m.degree() << "\n";
        std::cout << "equal=" << (rep.equal ? "true" : "false") << "\n";
        if (rep.mismatch)
            std::cout << "mismatch=" << cell_str(*rep.mismatch) << " M="
                      << rep.m.value_at(rep.mismatch->first, rep.mismatch->second) << " M_Z="
                      << rep.m_z.value_at(rep.mismatch->first, rep.mismatch->second) << "\n";
    }
    return rep.equal ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculus of admissible Hilbert matrices for point schemes on a quadric"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    std::string file, config_file, point_str, u_str, v_str, degree_str, log_path = "explore.log";
    bool ascii = false;
    int n_line = 0;
    std::string skip_str;
    long long trials = 100;
    int rows_a = 4, cols_b = 4;
    unsigned long seed = 0;

    auto* c_check = app.add_subcommand("check", "admissibility and Theorem predicates");
    c_check->add_option("file", file, "matrix file (kind M or delta)")->required();

    auto* c_delta = app.add_subcommand("delta", "first difference of a matrix");
    c_delta->add_option("file", file)->required();

    auto* c_integrate = app.add_subcommand("integrate", "matrix from its first difference");
    c_integrate->add_option("file", file)->required();

    auto* c_scheme = app.add_subcommand("scheme", "associated zero-dimensional scheme Z");
    c_scheme->add_option("file", file)->required();
    c_scheme->add_flag("--ascii", ascii, "render as an ASCII grid");

    auto* c_hilbert = app.add_subcommand("hilbert", "oracle Hilbert window of a configuration");
    c_hilbert->add_option("config", config_file)->required();
    c_hilbert->add_option("--u", u_str, "comma-separated row line parameters");
    c_hilbert->add_option("--v", v_str, "comma-separated column line parameters");
    std::vector<std::string> params_pair;
    c_hilbert->add_option("--params", params_pair, "row and column parameter lists")
        ->expected(2)
        ->excludes("--u")
        ->excludes("--v");

    auto* c_lines = app.add_subcommand("lines", "points-per-line statistics of a matrix");
    c_lines->add_option("file", file)->required();

    auto* c_sep = app.add_subcommand("separator", "separator form for a point");
    c_sep->add_option("config", config_file)->required();
    c_sep->add_option("--point", point_str, "point i,j")->required();
    c_sep->add_option("--degree", degree_str, "bidegree d,e (default: the candidate degree)");
    c_sep->add_option("--u", u_str);
    c_sep->add_option("--v", v_str);

    auto* c_del = app.add_subcommand("delete", "predicted first difference after deleting a point");
    c_del->add_option("config", config_file)->required();
    c_del->add_option("--point", point_str, "point i,j")->required();
    c_del->add_option("--u", u_str);
    c_del->add_option("--v", v_str);

    auto* c_addline = app.add_subcommand("addline", "add a punctured (1,0)-line");
    c_addline->add_option("config", config_file)->required();
    c_addline->add_option("--n", n_line, "last column index of the new line")->required();
    c_addline->add_option("--skip", skip_str, "comma-separated skipped columns");

    auto* c_verify = app.add_subcommand("verify", "full pipeline: predicates, Z, oracle, equality");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--u", u_str);
    c_verify->add_option("--v", v_str);

    auto* c_explore = app.add_subcommand("explore", "randomized search for open-problem candidates");
    c_explore->add_option("--trials", trials)->required();
    c_explore->add_option("--rows", rows_a, "a: maximal row index");
    c_explore->add_option("--cols", cols_b, "b: maximal column index");
    c_explore->add_option("--seed", seed);
    c_explore->add_option("--log", log_path);

    // Allow `--json` in either position: before or after the subcommand.
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_check) return cmd_check(file, as_json);

        if (*c_delta) {
            write_matrix(std::cout, load_matrix_file(file).as_delta());
            return kOk;
        }
        if (*c_integrate) {
            write_matrix(std::cout, load_matrix_file(file).as_window());
            return kOk;
        }
        if (*c_scheme) {
            const GridConfig z = associated_scheme(load_matrix_file(file).as_delta());
            if (ascii)
                std::cout << render_ascii(z);
            else
                write_config(std::cout, z);
            return kOk;
        }
        if (*c_hilbert) {
            if (params_pair.size() == 2) {
                u_str = params_pair[0];
                v_str = params_pair[1];
            }
            const GridConfig cfg = load_config_file(config_file);
            if (cfg.count() == 0) throw EmptyScheme("empty configuration");
            write_matrix(std::cout, hilbert_window(cfg, params_for(cfg, u_str, v_str)));
            return kOk;
        }
        if (*c_lines) {
            const LineStats st = line_stats(load_matrix_file(file).as_window());
            if (as_json) {
                json j{{"i0", st.i0}, {"j0", st.j0}, {"row_dist", json::object()}, {"col_dist", json::object()}};
                for (const auto& [k, n] : st.row_dist) j["row_dist"][std::to_string(k)] = n;
                for (const auto& [k, n] : st.col_dist) j["col_dist"][std::to_string(k)] = n;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "i0=" << st.i0 << "\nj0=" << st.j0 << "\n";
                for (const auto& [k, n] : st.row_dist)
                    std::cout << "rows_with_" << k << "_points=" << n << "\n";
                for (const auto& [k, n] : st.col_dist)
                    std::cout << "cols_with_" << k << "_points=" << n << "\n";
            }
            return kOk;
        }
        if (*c_sep) {
            const GridConfig cfg = load_config_file(config_file);
            const Cell p = parse_cell(point_str);
            const LineParams params = params_for(cfg, u_str, v_str);
            const SeparatorDegree sd = separator_degree(cfg, p, params);
            BiDegree deg{sd.q, sd.p};
            if (!degree_str.empty()) {
                const Cell d = parse_cell(degree_str);
                deg = {d.first, d.second};
            }
            const auto form = find_separator(cfg, p, deg, params);
            std::cout << "q=" << sd.q << "\np=" << sd.p << "\ncondition=" << to_string(sd.condition)
                      << "\ndegree=(" << deg.i << "," << deg.j << ")\n";
            if (form) {
                std::cout << "found=true\nh0_jump=" << form->h0_jump << "\ncoeffs=";
                for (size_t k = 0; k < form->coeffs.size(); ++k) {
                    if (k) std::cout << ' ';
                    std::cout << form->coeffs[k];
                }
                std::cout << "\n";
                return kOk;
            }
            std::cout << "found=false\n";
            return kCheckFailed;
        }
        if (*c_del) {
            const GridConfig cfg = load_config_file(config_file);
            const Cell p = parse_cell(point_str);
            const LineParams params = params_for(cfg, u_str, v_str);
            try {
                const DeletionReport rep = deletion_update(cfg, p, params, true);
                std::cout << "q=" << rep.q << "\np=" << rep.p
                          << "\ncondition=" << to_string(rep.condition) << "\n";
                write_matrix(std::cout, rep.predicted);
                std::cout << "oracle_agrees=" << (*rep.oracle_agrees ? "true" : "false") << "\n";
                return *rep.oracle_agrees ? kOk : kCheckFailed;
            } catch (const ConditionsNotMet& e) {
                std::cout << "condition=none\n";
                std::cerr << e.what() << "\n";
                return kCheckFailed;
            }
        }
        if (*c_addline) {
            const GridConfig cfg = load_config_file(config_file);
            std::vector<int> skip;
            if (!skip_str.empty())
                for (long long s : parse_list(skip_str)) skip.push_back(static_cast<int>(s));
            const LineParams params = params_for(cfg, u_str, v_str);
            const PuncturedLineReport rep = add_punctured_line(cfg, n_line, skip, params, true);
            std::cout << "t_cells=" << cells_str(rep.t_cells) << "\n";
            write_matrix(std::cout, rep.predicted);
            std::cout << "oracle_agrees=" << (*rep.oracle_agrees ? "true" : "false") << "\n";
            return *rep.oracle_agrees ? kOk : kCheckFailed;
        }
        if (*c_verify) return cmd_verify(file, u_str, v_str, as_json);

        if (*c_explore) {
            const ExplorerSummary s = explore_open_problem(trials, rows_a, cols_b, seed, log_path);
            std::cout << "sampled=" << s.sampled << "\nfiltered_in=" << s.filtered_in
                      << "\nmatch=" << s.match << "\nmismatch=" << s.mismatch << "\n";
            return s.mismatch == 0 ? kOk : kCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
