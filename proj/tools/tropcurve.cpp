// tropcurve: divisor theory on metric graphs and matrix realizations of
// their automorphism groups. See README.md for the input formats.
#include "CLI11.hpp"
#include "json.hpp"

#include "tropcurve/io.hpp"
#include "tropcurve/linear_system.hpp"
#include "tropcurve/realization.hpp"

#include <fstream>
#include <iostream>

using namespace tropcurve;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct CommonArgs {
    std::string graph_file;
    std::string divisor_file;
    bool canonical = false;
    bool use_aut = false;
    std::string group_file;
    std::string granularity;
    long long refine = 1;
    std::string mode = "all";
    bool json_out = false;
};

ContextOptions context_options(const CommonArgs& args) {
    ContextOptions opts;
    if (!args.granularity.empty()) opts.granularity = parse_rat(args.granularity);
    opts.refine = args.refine;
    return opts;
}

Divisor load_divisor(const CommonArgs& args, const Model& m) {
    if (args.canonical == !args.divisor_file.empty())
        throw std::runtime_error("exactly one of --divisor and --canonical is required");
    if (args.canonical) return canonical_divisor(m);
    return parse_divisor(m, read_file(args.divisor_file));
}

FiniteGroup load_group(const CommonArgs& args, std::shared_ptr<const Model> m) {
    if (args.use_aut == !args.group_file.empty())
        throw std::runtime_error("exactly one of --aut and --group is required");
    if (args.use_aut) return compute_aut(m);
    return parse_group(m, read_file(args.group_file));
}

json divisor_json(const Divisor& d) {
    json out = json::array();
    for (const auto& [p, c] : d.coeffs()) out.push_back({{"point", p.str()}, {"coeff", c.str()}});
    return out;
}

json function_json(const RationalFunction& f) {
    if (f.is_bottom()) return json{{"bottom", true}};
    json edges = json::array();
    for (const auto& track : f.tracks()) {
        json t = json::array();
        for (const auto& [o, v] : track) t.push_back({rat_str(o), rat_str(v)});
        edges.push_back(t);
    }
    return json{{"edges", edges}};
}

json int_matrix_json(const IntMatrix& a) {
    json rows = json::array();
    for (const auto& row : a) {
        json r = json::array();
        for (const Int& x : row) r.push_back(x.str());
        rows.push_back(r);
    }
    return rows;
}

json trop_matrix_json(const TropMatrix& p) {
    json rows = json::array();
    for (int r = 0; r < p.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < p.cols(); ++c) row.push_back(p.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

std::string one_line_perm(const std::vector<int>& perm) {
    std::ostringstream os;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) os << " ";
        os << perm[i] + 1; // display is 1-based
    }
    return os.str();
}

std::string indent_block(const std::string& s) {
    // indent continuation lines; leave a trailing newline untouched
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == '\n' && i + 1 < s.size()) out += "    ";
    }
    return out;
}

std::string int_matrix_str(const IntMatrix& a) {
    if (a.empty()) return "[]";
    std::ostringstream os;
    for (size_t r = 0; r < a.size(); ++r) {
        os << (r == 0 ? "[" : "    ") << "[";
        for (size_t c = 0; c < a[r].size(); ++c) {
            if (c) os << ", ";
            os << a[r][c].str();
        }
        os << "]";
        if (r + 1 < a.size()) os << "\n";
    }
    os << "]";
    return os.str();
}

// classical 0/1 matrix of the tropical permutation matrix
IntMatrix euclidean_matrix(const TropMatrix& p) {
    IntMatrix a(p.rows(), std::vector<Int>(p.cols(), Int(0)));
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.cols(); ++c)
            if (p.at(r, c).is_finite()) a[r][c] = 1;
    return a;
}

int cmd_info(const CommonArgs& args) {
    auto m = parse_model(read_file(args.graph_file));
    Divisor k = canonical_divisor(*m);
    if (args.json_out) {
        json out;
        out["genus"] = genus(*m).str();
        out["vertices"] = m->num_vertices();
        out["edges"] = m->num_edges();
        out["total_length"] = rat_str(m->total_length());
        out["is_circle"] = m->is_circle();
        out["canonical_divisor"] = divisor_json(k);
        json val = json::array();
        for (int v = 0; v < m->num_vertices(); ++v) val.push_back(m->valence(v));
        out["valences"] = val;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "vertices:          " << m->num_vertices() << "\n";
    std::cout << "edges:             " << m->num_edges() << "\n";
    std::cout << "total length:      " << rat_str(m->total_length()) << "\n";
    std::cout << "genus:             " << genus(*m).str() << "\n";
    std::cout << "circle:            " << (m->is_circle() ? "yes" : "no") << "\n";
    std::cout << "canonical divisor: " << k.str() << " (degree " << k.degree().str() << ")\n";
    std::cout << "valences:         ";
    for (int v = 0; v < m->num_vertices(); ++v)
        std::cout << " v" << v << ":" << m->valence(v);
    std::cout << "\n";
    return 0;
}

int cmd_extremals(const CommonArgs& args) {
    auto m = parse_model(read_file(args.graph_file));
    Divisor d = load_divisor(args, *m);
    LinearSystemContext ctx(m, d, context_options(args));
    GeneratingSet gens = enumerate_extremals(ctx);
    if (args.json_out) {
        json out;
        out["granularity"] = rat_str(ctx.granularity());
        out["count"] = gens.functions.size();
        out["generation_check"] = gens.generation_ok;
        out["warnings"] = gens.warnings;
        json list = json::array();
        for (size_t k = 0; k < gens.functions.size(); ++k)
            list.push_back({{"function", function_json(gens.functions[k])},
                            {"divisor", divisor_json(gens.divisors[k])}});
        out["generators"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "granularity: " << rat_str(ctx.granularity()) << "\n";
        std::cout << "generators:  " << gens.functions.size() << "\n";
        for (size_t k = 0; k < gens.functions.size(); ++k) {
            std::cout << "f" << k + 1 << ": divisor " << gens.divisors[k].str() << "\n";
            std::cout << "    " << indent_block(serialize_function(gens.functions[k]));
        }
        std::cout << "generation check: " << (gens.generation_ok ? "pass" : "FAIL") << "\n";
        for (const std::string& w : gens.warnings) std::cout << "warning: " << w << "\n";
    }
    return gens.generation_ok ? 0 : 1;
}

int cmd_realize(const CommonArgs& args) {
    auto m = parse_model(read_file(args.graph_file));
    Divisor d = load_divisor(args, *m);
    FiniteGroup g = load_group(args, m);
    LinearSystemContext ctx(m, d, context_options(args));
    Realization r = realize(ctx, g);

    bool projective = args.mode == "projective" || args.mode == "all";
    bool affine = args.mode == "affine" || args.mode == "all";
    bool euclidean = args.mode == "euclidean" || args.mode == "all";

    if (args.json_out) {
        json out;
        out["group_order"] = r.elements.size();
        out["generators"] = json::array();
        for (size_t k = 0; k < r.generators.functions.size(); ++k)
            out["generators"].push_back({{"function", function_json(r.generators.functions[k])},
                                         {"divisor", divisor_json(r.generators.divisors[k])}});
        json elems = json::array();
        for (const auto& er : r.elements) {
            json e;
            e["permutation"] = one_line_perm(er.perm);
            if (projective) {
                e["A"] = int_matrix_json(er.a);
                e["P_pgl"] = trop_matrix_json(er.p);
            }
            if (affine) e["P_gl"] = trop_matrix_json(er.p);
            if (euclidean) e["P_euclidean"] = int_matrix_json(euclidean_matrix(er.p));
            elems.push_back(e);
        }
        out["elements"] = elems;
        json verify;
        verify["map_injective"] = r.map_injectivity.injective;
        if (r.map_injectivity.witness) {
            verify["witness"] = {r.map_injectivity.witness->first.str(),
                                 r.map_injectivity.witness->second.str()};
        }
        verify["psi_injective"] = r.psi_injective;
        json coll = json::array();
        for (auto [i, j] : r.psi_collisions) coll.push_back({i, j});
        verify["psi_collisions"] = coll;
        verify["homomorphism"] = r.homomorphism_ok;
        verify["determinants"] = r.dets_ok;
        verify["permutation_matrices"] = r.matrices_regular;
        verify["commutation"] = r.commutation_ok;
        verify["warnings"] = r.warnings;
        out["verification"] = verify;
        out["all_checks_pass"] = r.all_checks_pass();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "group order:  " << r.elements.size() << "\n";
        std::cout << "generators:   " << r.generators.functions.size() << "\n";
        for (size_t k = 0; k < r.generators.functions.size(); ++k) {
            std::cout << "f" << k + 1 << ": divisor " << r.generators.divisors[k].str() << "\n";
            std::cout << "    " << indent_block(serialize_function(r.generators.functions[k]));
        }
        for (size_t i = 0; i < r.elements.size(); ++i) {
            const auto& er = r.elements[i];
            std::cout << "\nelement " << i << ": permutation [" << one_line_perm(er.perm)
                      << "]\n";
            if (projective) {
                std::cout << "  A (Z-lin R^n):\n    " << indent_block(int_matrix_str(er.a)) << "\n";
                std::cout << "  [P] (PGL_trop):\n    " << indent_block(er.p.str()) << "\n";
            }
            if (affine) std::cout << "  P (GL_trop):\n    " << indent_block(er.p.str()) << "\n";
            if (euclidean)
                std::cout << "  P (Z-lin R^{n+1}):\n    "
                          << indent_block(int_matrix_str(euclidean_matrix(er.p))) << "\n";
        }
        std::cout << "\nverification\n";
        std::cout << "  map injective:        " << (r.map_injectivity.injective ? "yes" : "NO")
                  << "\n";
        if (r.map_injectivity.witness)
            std::cout << "  witness:              phi(" << r.map_injectivity.witness->first.str()
                      << ") = phi(" << r.map_injectivity.witness->second.str() << ")\n";
        std::cout << "  Psi injective:        " << (r.psi_injective ? "yes" : "NO") << "\n";
        for (auto [i, j] : r.psi_collisions)
            std::cout << "  collision:            elements " << i << " and " << j << "\n";
        std::cout << "  homomorphism:         " << (r.homomorphism_ok ? "pass" : "FAIL") << "\n";
        std::cout << "  det A = +-1:          " << (r.dets_ok ? "pass" : "FAIL") << "\n";
        std::cout << "  permutation matrices: " << (r.matrices_regular ? "pass" : "FAIL") << "\n";
        std::cout << "  commutation:          " << (r.commutation_ok ? "pass" : "FAIL") << "\n";
        for (const std::string& w : r.warnings) std::cout << "  warning: " << w << "\n";
        std::cout << "result: " << (r.all_checks_pass() ? "all checks pass" : "CHECKS FAILED")
                  << "\n";
    }
    return r.all_checks_pass() ? 0 : 1;
}

int cmd_examples(const std::string& dir) {
    // the two worked interval systems and the circle example as input files
    write_file(dir + "/interval-graph.txt", "vertex 0\nvertex 1\nedge 0 0 1 1\n");
    write_file(dir + "/interval-divisor-x.txt", "chip v:0 1\n");
    write_file(dir + "/interval-divisor-2z.txt", "chip e:0@1/2 2\n");
    write_file(dir + "/interval-group.txt", "auto\n");
    write_file(dir + "/circle-graph.txt", "vertex 0\nvertex 1\nedge 0 0 1 2\nedge 1 1 0 2\n");
    write_file(dir + "/circle-divisor.txt", "chip v:0 1\nchip v:1 1\n");
    write_file(dir + "/circle-group-rotation.txt", "rotate 2\n");
    write_file(dir + "/circle-group-reflection.txt", "reflect v:0 v:1\n");
    write_file(dir + "/circle-group-full.txt", "rotate 2\nreflect v:0 v:1\n");
    std::cout << "wrote example inputs to " << dir << "\n";
    std::cout << "try:\n";
    std::cout << "  tropcurve info " << dir << "/interval-graph.txt\n";
    std::cout << "  tropcurve extremals " << dir << "/interval-graph.txt --divisor " << dir
              << "/interval-divisor-2z.txt\n";
    std::cout << "  tropcurve realize " << dir << "/interval-graph.txt --divisor " << dir
              << "/interval-divisor-x.txt --aut\n";
    std::cout << "  tropcurve realize " << dir << "/circle-graph.txt --divisor " << dir
              << "/circle-divisor.txt --group " << dir
              << "/circle-group-full.txt --refine 2\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor theory and automorphism realizations on metric graphs"};
    app.require_subcommand(1);

    CommonArgs args;

    auto add_common = [&](CLI::App* cmd, bool with_divisor, bool with_group) {
        cmd->add_option("graph", args.graph_file, "graph file")->required();
        if (with_divisor) {
            cmd->add_option("--divisor", args.divisor_file, "divisor file");
            cmd->add_flag("--canonical", args.canonical, "use the canonical divisor");
        }
        if (with_group) {
            cmd->add_flag("--aut", args.use_aut, "use the full automorphism group");
            cmd->add_option("--group", args.group_file, "group spec file");
        }
        cmd->add_option("--granularity", args.granularity, "lattice granularity p/q");
        cmd->add_option("--refine", args.refine, "granularity refinement factor")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--json", args.json_out, "machine-readable output");
    };

    CLI::App* info = app.add_subcommand("info", "genus, valences and canonical divisor");
    info->add_option("graph", args.graph_file, "graph file")->required();
    info->add_flag("--json", args.json_out, "machine-readable output");

    CLI::App* extremals =
        app.add_subcommand("extremals", "minimal generating set of R(D)");
    add_common(extremals, true, false);

    CLI::App* realize_cmd =
        app.add_subcommand("realize", "matrix realizations of a finite automorphism group");
    add_common(realize_cmd, true, true);
    realize_cmd->add_option("--mode", args.mode, "projective | affine | euclidean | all")
        ->check(CLI::IsMember({"projective", "affine", "euclidean", "all"}));

    std::string examples_dir = ".";
    CLI::App* examples = app.add_subcommand("examples", "write sample input files");
    examples->add_option("dir", examples_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(args);
        if (extremals->parsed()) return cmd_extremals(args);
        if (realize_cmd->parsed()) return cmd_realize(args);
        if (examples->parsed()) return cmd_examples(examples_dir);
    } catch (const EmptySystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RealizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
