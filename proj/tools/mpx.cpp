// mpx: multipath complexes of directed graphs from the command line.
// Subcommands: gen, multipaths, chi, homology, decompose, classify,
// series, formula, verify. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpx/dynamics.hpp"
#include "mpx/formulas.hpp"
#include "mpx/homology.hpp"
#include "mpx/homotopy.hpp"
#include "mpx/json_io.hpp"
#include "mpx/multipath.hpp"
#include "mpx/path_poset.hpp"
#include "mpx/series.hpp"
#include "mpx/simplicial.hpp"
#include "mpx/verify.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    file << text;
}

mpx::Digraph generate_family(const std::string& family, int n, int m,
                             const std::string& word, const std::string& legs,
                             const std::string& removed) {
    using namespace mpx;
    if (family == "linear" || family == "I") return linear_coherent(n);
    if (family == "alternating" || family == "A") return linear_alternating(n);
    if (family == "polygon" || family == "P") return polygon_coherent(n);
    if (family == "linear-word") return linear_from_word(word_from_string(word));
    if (family == "polygon-word") return polygon_from_word(word_from_string(word));
    if (family == "dandelion") return dandelion(n, m);
    if (family == "complete" || family == "K") return complete(n);
    if (family == "tournament" || family == "T") return tournament(n);
    if (family == "reversed-tournament" || family == "R") return reversed_tournament(n);
    if (family == "complete-bipartite") return complete_bipartite(n, m);
    if (family == "incomplete-tournament")
        return incomplete_tournament(n, parse_int_list(removed));
    if (family == "caterpillar") return caterpillar(parse_int_list(legs));
    if (family == "grid") return cartesian_product(linear_coherent(n), linear_coherent(m));
    if (family == "cone") return cone(generate_family("tournament", n, 0, "", "", ""));
    throw UsageError("unknown family: " + family);
}

std::string homology_lines(const mpx::HomologySummary& h, bool as_json) {
    if (as_json) {
        json j;
        j["empty"] = h.empty_complex;
        j["betti"] = h.betti;
        j["torsion"] = json::array();
        for (const auto& level : h.torsion) {
            json deg = json::array();
            for (const auto& q : level) deg.push_back(q.str());
            j["torsion"].push_back(deg);
        }
        return j.dump();
    }
    std::ostringstream os;
    os << h.to_string() << "\n";
    // Compact Betti summary, e.g. "H2=6 H3=15".
    bool any = false;
    for (std::size_t d = 0; d < h.betti.size(); ++d)
        if (h.betti[d]) {
            os << (any ? " " : "") << "H" << d << "=" << h.betti[d];
            any = true;
        }
    if (any) os << "\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"multipath complexes of directed graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family digraph as JSON");
    std::string family, word, legs, removed, out_path, format = "json";
    int gen_n = 0, gen_m = 0;
    gen->add_option("--family", family, "family name")->required();
    gen->add_option("--n", gen_n, "first parameter");
    gen->add_option("--m", gen_m, "second parameter");
    gen->add_option("--word", word, "orientation word over f/b");
    gen->add_option("--legs", legs, "comma separated caterpillar leg counts");
    gen->add_option("--removed", removed, "comma separated removed vertices");
    gen->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("-o,--output", out_path, "output path (default stdout)");

    // multipaths
    auto* mp = app.add_subcommand("multipaths", "enumerate multipaths of a digraph");
    std::string mp_graph;
    long long mp_cap = 10000000;
    bool mp_bylen = false;
    mp->add_option("graph", mp_graph, "graph JSON path or -")->required();
    mp->add_option("--max-count", mp_cap, "refuse graphs with more multipaths than this");
    mp->add_flag("--by-length", mp_bylen, "print counts by length instead of the list");

    // chi
    auto* chi = app.add_subcommand("chi", "reduced Euler characteristic");
    std::string chi_graph, chi_method = "fvector";
    chi->add_option("graph", chi_graph, "graph JSON path or -")->required();
    chi->add_option("--method", chi_method, "mobius, fvector or both")
        ->check(CLI::IsMember({"mobius", "fvector", "both"}));

    // homology
    auto* hom = app.add_subcommand("homology", "reduced integer homology of X(G)");
    std::string hom_graph;
    bool hom_matching = false, hom_json = false;
    hom->add_option("graph", hom_graph, "graph JSON path or -")->required();
    hom->add_flag("--matching", hom_matching,
                  "use the matching complex of the underlying undirected graph");
    hom->add_flag("--json", hom_json, "machine readable output");

    // decompose
    auto* dec = app.add_subcommand("decompose", "dynamical module decomposition");
    std::string dec_graph;
    bool dec_join = false, dec_json = false;
    dec->add_option("graph", dec_graph, "graph JSON path or -")->required();
    dec->add_flag("--check-join", dec_join, "verify the join law for the decomposition");
    dec->add_flag("--json", dec_json, "machine readable output");

    // classify
    auto* cls = app.add_subcommand("classify", "symbolic homotopy type of a family member");
    std::string cls_family, cls_word, cls_legs;
    int cls_n = 0, cls_m = 0, cls_v = 0;
    bool cls_oracle = false;
    cls->add_option("family", cls_family,
                    "linear|polygon|alternating|grid-ii|grid-ai|caterpillar|lxi1|dandelion|tournament")
        ->required();
    cls->add_option("--word", cls_word, "orientation word over f/b");
    cls->add_option("--legs", cls_legs, "caterpillar leg counts");
    cls->add_option("--n", cls_n, "first parameter");
    cls->add_option("--m", cls_m, "second parameter");
    cls->add_option("--v", cls_v, "vertex count (alternating)");
    cls->add_flag("--oracle", cls_oracle, "cross-check against exact homology");

    // series
    auto* ser = app.add_subcommand("series", "generating function coefficients");
    std::string ser_name, ser_fixture;
    int ser_order = 8;
    ser->add_option("name", ser_name, "complete|tournament|reversed|bipartite|bipartite-count")
        ->required();
    ser->add_option("--order", ser_order, "truncation order");
    ser->add_option("--fixture", ser_fixture, "diff against a fixture file (one integer per line)");

    // formula
    auto* frm = app.add_subcommand("formula", "closed-form values");
    std::string frm_name;
    std::vector<int> frm_args;
    frm->add_option("name", frm_name,
                    "stirling2|lah|bell|chi-complete|chi-tournament|chi-reversed|chi-bipartite|l-poly|wedge-counts")
        ->required();
    frm->add_option("args", frm_args, "integer arguments");

    // verify
    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    auto* ver_all = ver->add_subcommand("all", "run the full desk-scale battery");
    std::string ver_level = "desk", ver_fixture_dir = MPX_DEFAULT_FIXTURE_DIR;
    ver_all->add_option("--level", ver_level, "desk")->check(CLI::IsMember({"desk"}));
    ver_all->add_option("--fixtures", ver_fixture_dir, "fixture directory");
    auto* ver_conj = ver->add_subcommand("conjecture", "Euler maximality sweep");
    int conj_n = 4, conj_samples = 10000;
    ver_conj->add_option("--n", conj_n, "vertex count");
    ver_conj->add_option("--samples", conj_samples, "sample count for n > 4");
    auto* ver_tors = ver->add_subcommand("torsion-conjecture",
                                         "hunt for torsion in unstable modules");
    int tors_edges = 8, tors_samples = 2000;
    ver_tors->add_option("--max-edges", tors_edges, "edge bound for sampled digraphs");
    ver_tors->add_option("--samples", tors_samples, "number of sampled digraphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    using namespace mpx;
    if (gen->parsed()) {
        Digraph g = generate_family(family, gen_n, gen_m, word, legs, removed);
        write_output(format == "dot" ? g.to_dot() : digraph_to_json(g), out_path);
        return 0;
    }
    if (mp->parsed()) {
        Digraph g = load_digraph(mp_graph);
        if (mp_bylen) {
            json j = count_by_length(g);
            std::cout << j.dump() << "\n";
            return 0;
        }
        long long total = count_multipaths_up_to(g, mp_cap);
        if (total > mp_cap) {
            std::cerr << "more than " << mp_cap
                      << " multipaths; raise --max-count to enumerate\n";
            return 1;
        }
        json j = json::array();
        for (const Multipath& m : enumerate_multipaths(g)) j.push_back(m.edges);
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (chi->parsed()) {
        Digraph g = load_digraph(chi_graph);
        if (chi_method == "fvector") {
            std::cout << chi_via_fvector(g).str() << "\n";
        } else if (chi_method == "mobius") {
            std::cout << chi_via_mobius(g).str() << "\n";
        } else {
            Int a = chi_via_mobius(g), b = chi_via_fvector(g);
            if (a != b) {
                std::cerr << "mobius " << a.str() << " != fvector " << b.str() << "\n";
                return 1;
            }
            std::cout << a.str() << "\n";
        }
        return 0;
    }
    if (hom->parsed()) {
        Digraph g = load_digraph(hom_graph);
        HomologySummary h;
        if (hom_matching)
            h = reduced_homology(matching_complex(g.vertex_count(), g.underlying_undirected()));
        else
            h = reduced_homology(multipath_complex(g));
        std::cout << homology_lines(h, hom_json);
        return 0;
    }
    if (dec->parsed()) {
        Digraph g = load_digraph(dec_graph);
        ModuleDecomposition d = decompose(g);
        if (dec_json) {
            json j;
            j["modules"] = json::array();
            for (const auto& mod : d.modules) j["modules"].push_back(mod);
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < d.modules.size(); ++i) {
                std::cout << "module " << i << ":";
                for (int id : d.modules[i])
                    std::cout << " (" << g.edge(id).source << "," << g.edge(id).target << ")";
                switch (classify_region(g, d.modules[i])) {
                    case RegionClass::stable: std::cout << "  [stable]"; break;
                    case RegionClass::unstable: std::cout << "  [unstable]"; break;
                    case RegionClass::mixed: std::cout << "  [mixed]"; break;
                }
                std::cout << "\n";
            }
        }
        if (dec_join) {
            JoinCheckResult jr = join_euler_check(g);
            std::cout << "join law: " << (jr.ok ? "ok" : ("FAIL " + jr.detail)) << " (chi "
                      << jr.chi_whole.str() << ")\n";
            if (!jr.ok) return 1;
        }
        return 0;
    }
    if (cls->parsed()) {
        HomotopyType t = HomotopyType::contractible();
        Digraph g(0, {});
        bool have_graph = true;
        if (cls_family == "linear") {
            auto w = word_from_string(cls_word);
            t = classify_linear(w);
            g = linear_from_word(w);
        } else if (cls_family == "polygon") {
            auto w = word_from_string(cls_word);
            t = classify_polygon(w);
            g = polygon_from_word(w);
        } else if (cls_family == "alternating") {
            t = classify_alternating_path(cls_v ? cls_v : cls_n + 1);
            g = cls_v >= 2 ? linear_alternating(cls_v - 1)
                           : (cls_n >= 1 ? linear_alternating(cls_n) : Digraph(1, {}));
        } else if (cls_family == "grid-ii") {
            t = classify_grid_II(cls_n, cls_m);
            g = cartesian_product(linear_coherent(cls_n), linear_coherent(cls_m));
        } else if (cls_family == "grid-ai") {
            t = classify_grid_AI(cls_n, cls_m);
            g = cartesian_product(linear_alternating(cls_n), linear_coherent(cls_m));
        } else if (cls_family == "caterpillar") {
            auto legs_v = parse_int_list(cls_legs);
            t = classify_caterpillar(legs_v);
            g = caterpillar(legs_v);
        } else if (cls_family == "lxi1") {
            auto w = word_from_string(cls_word);
            t = classify_LxI1(w);
            g = cartesian_product(linear_from_word(w), linear_coherent(1));
        } else if (cls_family == "dandelion") {
            t = classify_dandelion(cls_n, cls_m);
            g = dandelion(cls_n, cls_m);
        } else if (cls_family == "tournament") {
            t = tournament_homotopy(cls_n);
            g = tournament(cls_n);
        } else {
            throw UsageError("unknown classify family: " + cls_family);
        }
        std::cout << t.to_string() << "\n";
        if (cls_oracle && have_graph) {
            OracleComparison cmp = compare_with_oracle(t, g);
            std::cout << "oracle: " << (cmp.match ? "match" : ("MISMATCH " + cmp.detail))
                      << "\n";
            if (!cmp.match) return 1;
        }
        return 0;
    }
    if (ser->parsed()) {
        std::vector<Int> seq;
        // Sign/offset law relating each series to its reference sequence;
        // applied when diffing against a fixture.
        auto adjust = [&](std::size_t i, const std::vector<Int>& fixture,
                          bool& comparable) -> Int {
            comparable = true;
            if (ser_name == "complete")  // entry n compares to (-1)^n a(n)
                return (i % 2 == 0) ? fixture[i] : -fixture[i];
            if (ser_name == "tournament")  // (-1)^(n+1) a(n)
                return (i % 2 == 0) ? -fixture[i] : fixture[i];
            if (ser_name == "reversed") {  // -a(n-1), reference starts at n=1
                if (i == 0) {
                    comparable = false;
                    return 0;
                }
                return -fixture[i - 1];
            }
            return fixture[i];
        };
        if (ser_name == "complete") seq = egf_complete(ser_order);
        else if (ser_name == "tournament") seq = egf_tournament(ser_order);
        else if (ser_name == "reversed") seq = egf_reversed(ser_order);
        else if (ser_name == "bipartite" || ser_name == "bipartite-count") {
            auto table = ser_name == "bipartite" ? gf_bipartite(ser_order)
                                                 : gf_bipartite_count(ser_order);
            for (int n = 0; n <= ser_order; ++n) {
                for (int m = 0; n + m <= ser_order; ++m)
                    std::cout << (m ? " " : "") << table[n][m].str();
                std::cout << "\n";
            }
            if (!ser_fixture.empty() && ser_name == "bipartite-count") {
                // Reference sequence reads the table by antidiagonals.
                std::vector<Int> expected = load_fixture(ser_fixture);
                std::size_t idx = 0;
                for (int d = 0; d <= ser_order; ++d)
                    for (int i = 0; i <= d; ++i, ++idx)
                        if (idx < expected.size() && table[d - i][i] != expected[idx]) {
                            std::cerr << "fixture differs at antidiagonal entry " << idx << "\n";
                            return 1;
                        }
                std::cout << "# matches fixture prefix\n";
            }
            return 0;
        } else {
            throw UsageError("unknown series: " + ser_name);
        }
        for (const Int& v : seq) std::cout << v.str() << "\n";
        if (!ser_fixture.empty()) {
            std::vector<Int> fixture = load_fixture(ser_fixture);
            std::size_t compared = 0;
            for (std::size_t i = 0; i < seq.size(); ++i) {
                std::size_t needed = (ser_name == "reversed") ? i : i + 1;
                if (needed > fixture.size()) break;
                bool comparable = false;
                Int expected = adjust(i, fixture, comparable);
                if (!comparable) continue;
                if (seq[i] != expected) {
                    std::cerr << "fixture differs at index " << i << ": " << seq[i].str()
                              << " vs " << expected.str() << "\n";
                    return 1;
                }
                ++compared;
            }
            std::cout << "# matches fixture prefix (" << compared << " terms)\n";
        }
        return 0;
    }
    if (frm->parsed()) {
        auto need = [&](std::size_t k) {
            if (frm_args.size() != k)
                throw UsageError("formula " + frm_name + " expects " + std::to_string(k) +
                                 " arguments");
        };
        if (frm_name == "stirling2") { need(2); std::cout << stirling2(frm_args[0], frm_args[1]).str() << "\n"; }
        else if (frm_name == "lah") { need(2); std::cout << lah(frm_args[0], frm_args[1]).str() << "\n"; }
        else if (frm_name == "bell") { need(1); std::cout << bell(frm_args[0]).str() << "\n"; }
        else if (frm_name == "chi-complete") { need(1); std::cout << chi_complete(frm_args[0]).str() << "\n"; }
        else if (frm_name == "chi-tournament") { need(1); std::cout << chi_tournament(frm_args[0]).str() << "\n"; }
        else if (frm_name == "chi-reversed") { need(1); std::cout << chi_reversed_tournament(frm_args[0]).str() << "\n"; }
        else if (frm_name == "chi-bipartite") { need(2); std::cout << chi_bipartite(frm_args[0], frm_args[1]).str() << "\n"; }
        else if (frm_name == "l-poly") {
            std::vector<Int> a(frm_args.begin(), frm_args.end());
            std::cout << L_poly(a).str() << "\n";
        } else if (frm_name == "wedge-counts") {
            need(1);
            WedgeCounts wc = wedge_counts_qs(frm_args[0]);
            std::cout << "q=" << wc.q.str() << " s=" << wc.s.str() << "\n";
        } else {
            throw UsageError("unknown formula: " + frm_name);
        }
        return 0;
    }
    if (ver->parsed()) {
        if (ver_all->parsed()) {
            auto results = run_all_checks(ver_fixture_dir);
            int failures = print_report(results, std::cout);
            return failures ? 1 : 0;
        }
        if (ver_conj->parsed()) {
            CheckResult r = conjecture_sweep(conj_n, conj_samples);
            std::cout << (r.pass ? "pass" : "FAIL") << ": " << r.detail << "\n";
            return r.pass ? 0 : 1;
        }
        if (ver_tors->parsed()) {
            CheckResult r = torsion_conjecture_experiment(tors_edges, tors_samples);
            std::cout << (r.pass ? "consistent" : "REFUTED") << ": " << r.detail << "\n";
            return r.pass ? 0 : 1;
        }
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
