// Command-line frontend for the P-set library: analyze a matrix file,
// check a candidate index set, fuzz the whole property suite, exercise the
// determinant identity, or generate matrix files.
//
// Exit codes: 0 = success / property holds, 1 = check failed or verdict is
// negative, 2 = usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parter/parter.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json analysis_to_json(const parter::Analysis& r) {
    ordered_json j;
    j["n"] = r.n;
    j["nullity"] = r.nullity_;
    j["rank"] = r.rank_;
    ordered_json classes = ordered_json::array();
    for (parter::VertexClass c : r.classes) classes.push_back(parter::to_string(c));
    j["vertex_classes"] = classes;
    j["p_vertices"] = r.pvertices.values();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : r.pair_edges) edges.push_back({u, v});
    j["pair_edges"] = edges;
    ordered_json maximal = ordered_json::array();
    for (const auto& s : r.maximal) maximal.push_back(s.values());
    j["maximal_psets"] = maximal;
    return j;
}

ordered_json report_to_json(const parter::VerifyReport& rep) {
    ordered_json j;
    j["matrices_checked"] = rep.matrices_checked;
    j["subsets_checked"] = rep.subsets_checked;
    ordered_json tallies;
    for (parter::CheckId id : parter::all_checks) {
        const parter::CheckStats& s = rep.stats(id);
        tallies[parter::to_string(id)] = {{"passes", s.passes},
                                          {"failures", s.failures}};
    }
    j["tallies"] = tallies;
    j["failures"] = rep.total_failures();
    return j;
}

parter::IndexSet parse_index_list(const std::string& text) {
    std::vector<int> idx;
    std::string tok;
    for (char c : text + ",") {
        if (c == ',') {
            if (tok.empty())
                throw parter::ParseError("empty entry in index list '" + text + "'");
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw parter::ParseError("bad index '" + tok + "'");
            idx.push_back(v);
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            tok += c;
        }
    }
    return parter::IndexSet(idx);
}

struct Range {
    int lo = 0;
    int hi = 0;
};

// "5" or "2..7"
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument("");
            return {v, v};
        }
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument("");
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        if (lo > hi) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw parter::ParseError("bad order range '" + text + "' (expected N or LO..HI)");
    }
}

int cmd_analyze(const std::string& path, bool as_json, bool verify) {
    const parter::SymMatrix a = parter::parse_matrix_file(path);
    const parter::Analysis r = parter::analyze(a);
    parter::VerifyReport rep;
    if (verify) rep = parter::verify_matrix(a);
    if (as_json) {
        ordered_json j = analysis_to_json(r);
        if (verify) j["verify"] = report_to_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        parter::print_analysis(std::cout, r);
        if (verify) parter::print_report(std::cout, rep);
    }
    if (verify && !rep.ok()) return 1;
    return 0;
}

int cmd_check(const std::string& path, const std::string& set_text) {
    const parter::SymMatrix a = parter::parse_matrix_file(path);
    const parter::IndexSet alpha = parse_index_list(set_text);
    alpha.check_bounds(a.order());

    const bool direct = parter::is_pset(a, alpha);
    std::cout << "set: " << alpha.str() << "\n";
    std::cout << "p-set: " << (direct ? "yes" : "no") << "\n";
    if (alpha.size() >= 2) {
        const bool pairwise = parter::pset_by_pairs(a, alpha);
        std::cout << "pairwise: " << (pairwise ? "yes" : "no") << "\n";
    } else {
        std::cout << "pairwise: n/a (needs at least two indices)\n";
    }
    if (!alpha.empty()) {
        const parter::PsetConditions v = parter::pset_conditions(a, alpha);
        std::cout << "conditions: nullity=" << (v.by_nullity ? "yes" : "no")
                  << " rank=" << (v.by_rank ? "yes" : "no")
                  << " rowspace=" << (v.by_rowspace ? "yes" : "no") << "\n";
    }
    return direct ? 0 : 1;
}

int cmd_jacobi(const std::string& path) {
    const parter::SymMatrix a = parter::parse_matrix_file(path);
    const int n = a.order();
    if (n > 20) {
        std::cerr << "error: order " << n << " would need 2^" << n
                  << " subsets; limit is 20\n";
        return 2;
    }
    if (parter::rank(a) != n) {
        std::cerr << "error: the matrix is singular; the identity needs det != 0\n";
        return 2;
    }
    const std::uint64_t full = n == 0 ? 0 : (1ULL << n) - 1;
    long failures = 0;
    for (std::uint64_t m = 0;; ++m) {
        const parter::IndexSet alpha = parter::IndexSet::from_mask(m);
        if (!parter::jacobi_check(a, alpha)) {
            ++failures;
            std::cout << "violated on " << alpha.str() << "\n";
        }
        if (m == full) break;
    }
    std::cout << "subsets checked: " << (full + 1) << "\n";
    if (failures == 0) {
        std::cout << "determinant identity holds on every subset\n";
        return 0;
    }
    std::cout << failures << " violations\n";
    return 1;
}

int cmd_fuzz(const std::string& family, const std::string& range_text, long count,
             std::uint64_t seed, long bound, const std::string& density_text,
             const std::string& diag, int cap, const std::string& witness_dir) {
    const parter::Family fam = parter::family_from_string(family);
    const parter::DiagonalMode mode = parter::diagonal_mode_from_string(diag);
    const parter::Rational density = parter::Rational::parse(density_text);
    const Range orders = parse_range(range_text);
    if (count < 1) throw parter::InvalidArgumentError("--count must be >= 1");
    if (orders.lo < 0) throw parter::InvalidArgumentError("orders must be >= 0");

    // --count is the total across the whole order range, spread as evenly
    // as possible with the remainder going to the smaller orders.
    const int width = orders.hi - orders.lo + 1;
    const long base = count / width;
    const long extra = count % width;

    std::vector<parter::GenSpec> specs;
    parter::CampaignOptions opt;
    opt.cap = cap;
    opt.witness_dir = witness_dir;

    parter::VerifyReport total;
    for (int k = 0; k < width; ++k) {
        const long per = base + (k < extra ? 1 : 0);
        if (per == 0) continue;
        parter::GenSpec spec;
        spec.n = orders.lo + k;
        spec.family = fam;
        spec.entry_bound = bound;
        spec.density = density;
        spec.diagonal = mode;
        spec.seed = seed + static_cast<std::uint64_t>(spec.n);
        opt.count_per_spec = static_cast<int>(per);
        total.merge(parter::fuzz_campaign({spec}, opt));
    }

    parter::print_report(std::cout, total);
    if (!total.ok() && !witness_dir.empty()) {
        const auto paths = parter::write_witnesses(total, witness_dir);
        std::cout << paths.size() << " witness files in " << witness_dir << "\n";
    }
    return total.ok() ? 0 : 1;
}

int cmd_gen(int n, const std::string& family, long bound,
            const std::string& density_text, const std::string& diag,
            std::uint64_t seed, const std::string& out_path) {
    parter::GenSpec spec;
    spec.n = n;
    spec.family = parter::family_from_string(family);
    spec.entry_bound = bound;
    spec.density = parter::Rational::parse(density_text);
    spec.diagonal = parter::diagonal_mode_from_string(diag);
    spec.seed = seed;
    const parter::SymMatrix a = parter::generate(spec);
    const std::string text = "# " + spec.str() + "\n" + parter::format_matrix(a);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-vertex and P-set analysis of symmetric rational matrices"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    bool verify = false;
    auto* analyze = app.add_subcommand("analyze", "classify vertices and list P-sets");
    analyze->add_option("file", path, "matrix file")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");
    analyze->add_flag("--verify", verify, "run the full property suite too");

    std::string check_path, set_text;
    auto* check = app.add_subcommand("check", "test one index set");
    check->add_option("file", check_path, "matrix file")->required();
    check->add_option("--set", set_text, "comma-separated 1-based indices")->required();

    std::string jacobi_path;
    auto* jacobi = app.add_subcommand(
        "jacobi", "verify the determinant identity on every subset");
    jacobi->add_option("file", jacobi_path, "matrix file (must be nonsingular)")
        ->required();

    std::string family = "dense", range_text = "2..6", density_text = "1/2";
    std::string diag = "zero", witness_dir;
    long count = 100, bound = 3;
    std::uint64_t seed = 0;
    int cap = 12;
    auto* fuzz = app.add_subcommand("fuzz", "verify every property on generated matrices");
    fuzz->add_option("--family", family, "path|star|tree|dense|zero|identity");
    fuzz->add_option("--n", range_text, "order or order range LO..HI");
    fuzz->add_option("--count", count, "total matrices across the range");
    fuzz->add_option("--seed", seed, "base seed");
    fuzz->add_option("--bound", bound, "entry bound");
    fuzz->add_option("--density", density_text, "fill probability p/q (dense family)");
    fuzz->add_option("--diag", diag, "zero|random diagonal");
    fuzz->add_option("--cap", cap, "largest order verified exhaustively");
    fuzz->add_option("--witness-dir", witness_dir, "directory for failure witnesses");

    int gen_n = 5;
    std::string gen_family = "tree", gen_density = "1/2", gen_diag = "zero", out_path;
    long gen_bound = 3;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "write a generated matrix file");
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--family", gen_family, "path|star|tree|dense|zero|identity");
    gen->add_option("--bound", gen_bound, "entry bound");
    gen->add_option("--density", gen_density, "fill probability (dense family)");
    gen->add_option("--diag", gen_diag, "zero|random diagonal");
    gen->add_option("--seed", gen_seed, "seed");
    gen->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(path, as_json, verify);
        if (app.got_subcommand(check)) return cmd_check(check_path, set_text);
        if (app.got_subcommand(jacobi)) return cmd_jacobi(jacobi_path);
        if (app.got_subcommand(fuzz))
            return cmd_fuzz(family, range_text, count, seed, bound, density_text, diag,
                            cap, witness_dir);
        if (app.got_subcommand(gen))
            return cmd_gen(gen_n, gen_family, gen_bound, gen_density, gen_diag,
                           gen_seed, out_path);
    } catch (const parter::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
