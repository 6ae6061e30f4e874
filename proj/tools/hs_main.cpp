#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hs/exact.hpp"
#include "hs/graph.hpp"
#include "hs/hoffman.hpp"
#include "hs/verify.hpp"

namespace {

hs::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return hs::read_edge_list(in);
}

hs::HoffmanGraph load_hoffman(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return hs::read_hoffman(in);
}

int run(int argc, char** argv) {
    CLI::App app{"spectral verification toolkit for clique-extended grids"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    std::string family, out_path, dot_path;
    int t = 2, gm = 0, gn = 0, gq = 2;
    gen->add_option("--family", family, "grid|ext-grid|coclique-ext-grid|cp|cycle")
        ->required();
    gen->add_option("--t", t, "grid parameter t (grid is (t+1)x(t+1))");
    gen->add_option("--m", gm, "rows (grid)");
    gen->add_option("--n", gn, "columns (grid) / size (cp, cycle)");
    gen->add_option("--q", gq, "extension multiplicity");
    gen->add_option("--out", out_path, "output edge-list file");
    gen->add_option("--dot", dot_path, "also write DOT to this file");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "exact spectrum of an edge-list file");
    std::string spec_file;
    bool exact_json = false;
    spec->add_option("file", spec_file)->required();
    spec->add_flag("--exact-json", exact_json, "print JSON instead of text");

    // cospectral
    auto* cosp = app.add_subcommand("cospectral", "compare two graphs' spectra");
    std::string file_a, file_b;
    cosp->add_option("a", file_a)->required();
    cosp->add_option("b", file_b)->required();

    // hoffman
    auto* hof = app.add_subcommand("hoffman", "Hoffman graph operations");
    std::string hof_op, hof_file;
    hof->add_option("op", hof_op, "decompose|special-matrix")->required();
    hof->add_option("file", hof_file)->required();

    // verify
    auto* ver = app.add_subcommand("verify", "run the verification pipeline");
    int ver_t = 0, sweep_max = 1000;
    std::string candidate_path, json_path;
    ver->add_option("--t", ver_t)->required();
    ver->add_option("--candidate", candidate_path, "edge-list file to verify");
    ver->add_option("--sweep-max", sweep_max, "determinant sweep upper bound");
    ver->add_option("--json", json_path, "write JSON report to this file");

    auto* oracle = app.add_subcommand("oracle-t1", "exhaustive t=1 search");
    (void)oracle;

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        hs::Graph g;
        if (family == "grid") {
            if (gm == 0 && gn == 0) gm = gn = t + 1;
            if (gn == 0) gn = gm;
            g = hs::build_grid(gm, gn);
        } else if (family == "ext-grid") {
            g = hs::build_clique_extension(hs::build_grid(t + 1, t + 1), gq);
        } else if (family == "coclique-ext-grid") {
            g = hs::build_coclique_extension(hs::build_grid(t + 1, t + 1), gq);
        } else if (family == "cp") {
            g = hs::cocktail_party(gn ? gn : t);
        } else if (family == "cycle") {
            g = hs::cycle_graph(gn ? gn : t);
        } else {
            std::cerr << "unknown family: " << family << "\n";
            return 2;
        }
        if (!out_path.empty()) {
            std::ofstream os(out_path);
            hs::write_edge_list(g, os);
        } else {
            hs::write_edge_list(g, std::cout);
        }
        if (!dot_path.empty()) {
            std::ofstream os(dot_path);
            os << hs::to_dot(g);
        }
        int mind = g.order() ? g.degree(0) : 0, maxd = mind;
        for (int v = 0; v < g.order(); ++v) {
            mind = std::min(mind, g.degree(v));
            maxd = std::max(maxd, g.degree(v));
        }
        std::cerr << family << ": " << g.order() << " vertices, " << g.num_edges()
                  << " edges, degree " << (mind == maxd
                                               ? std::to_string(mind)
                                               : std::to_string(mind) + ".." +
                                                     std::to_string(maxd))
                  << "\n";
        return 0;
    }

    if (spec->parsed()) {
        hs::Spectrum s = hs::spectrum(load_graph(spec_file));
        std::cout << (exact_json ? s.to_json() : s.to_string()) << "\n";
        return 0;
    }

    if (cosp->parsed()) {
        bool eq = hs::is_cospectral(load_graph(file_a), load_graph(file_b));
        std::cout << "cospectral: " << (eq ? "true" : "false") << "\n";
        return 0;
    }

    if (hof->parsed()) {
        hs::HoffmanGraph h = load_hoffman(hof_file);
        if (hof_op == "decompose") {
            auto d = hs::decompose(h);
            std::cout << d.factors.size() << " indecomposable factors\n";
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                std::cout << "factor " << i << ": slim {";
                for (std::size_t j = 0; j < d.factors[i].slim.size(); ++j)
                    std::cout << (j ? " " : "") << d.factors[i].slim[j];
                std::cout << "} fat {";
                for (std::size_t j = 0; j < d.factors[i].fat.size(); ++j)
                    std::cout << (j ? " " : "") << d.factors[i].fat[j];
                std::cout << "}\n";
            }
        } else if (hof_op == "special-matrix") {
            hs::IntMatrix s = hs::special_matrix(h);
            for (int i = 0; i < s.rows(); ++i) {
                for (int j = 0; j < s.cols(); ++j)
                    std::cout << (j ? " " : "") << s(i, j);
                std::cout << "\n";
            }
        } else {
            std::cerr << "unknown hoffman op: " << hof_op << "\n";
            return 2;
        }
        return 0;
    }

    if (ver->parsed()) {
        std::optional<hs::Graph> cand;
        if (!candidate_path.empty()) cand = load_graph(candidate_path);
        hs::VerificationReport rep =
            hs::verify_all(ver_t, cand ? &*cand : nullptr, sweep_max);
        rep.print_table(std::cout);
        if (!json_path.empty()) {
            std::ofstream os(json_path);
            os << rep.to_json();
        }
        return rep.all_passed() ? 0 : 1;
    }

    if (oracle->parsed()) {
        hs::CheckResult r = hs::brute_force_ds_t1();
        std::cout << r.lemma << ": " << hs::to_string(r.verdict);
        if (!r.note.empty()) std::cout << " -- " << r.note;
        if (!r.witness.empty()) std::cout << " [" << r.witness << "]";
        std::cout << "\n";
        return r.verdict == hs::Verdict::pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
