#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parter/core.hpp"
#include "parter/enumerate.hpp"
#include "parter/errors.hpp"
#include "parter/generate.hpp"
#include "parter/linalg.hpp"
#include "parter/matrix.hpp"
#include "parter/oracle.hpp"
#include "parter/rational.hpp"

namespace parter {

/// Matrix text format: the order n on the first significant line, then n
/// rows of n whitespace-separated entries, each an integer or "p/q".
/// Lines whose first non-blank character is '#' are comments. Parsing is
/// locale-independent; errors carry 1-based line numbers.
inline SymMatrix parse_matrix(std::istream& in) {
    int line_no = 0;
    std::string line;

    auto next_significant = [&](std::vector<std::string>& tokens) {
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::string tok;
            tokens.clear();
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0][0] == '#') continue;
            return true;
        }
        return false;
    };

    std::vector<std::string> tokens;
    if (!next_significant(tokens))
        throw ParseError("line " + std::to_string(line_no + 1) +
                         ": expected the matrix order, found end of input");
    if (tokens.size() != 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": the order line must hold a single integer");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(tokens[0], &used);
        if (used != tokens[0].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad matrix order '" +
                         tokens[0] + "'");
    }
    if (n < 0)
        throw ParseError("line " + std::to_string(line_no) +
                         ": matrix order must be non-negative");

    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (!next_significant(tokens))
            throw ParseError("line " + std::to_string(line_no + 1) + ": expected row " +
                             std::to_string(r + 1) + " of " + std::to_string(n) +
                             ", found end of input");
        if (static_cast<int>(tokens.size()) != n)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(n) + " entries, found " +
                             std::to_string(tokens.size()));
        std::vector<Rational> row;
        row.reserve(tokens.size());
        for (const auto& tok : tokens) {
            try {
                row.push_back(Rational::parse(tok));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    if (next_significant(tokens))
        throw ParseError("line " + std::to_string(line_no) +
                         ": unexpected content after the matrix");
    try {
        return SymMatrix::from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(std::string("not symmetric: ") + e.what());
    }
}

inline SymMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_matrix(in);
}

/// Inverse of parse_matrix: emits the same text format, entries as "p" or
/// "p/q". Round-trips exactly.
inline std::string format_matrix(const SymMatrix& a) {
    std::string out = std::to_string(a.order()) + "\n";
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            if (j) out += ' ';
            out += a(i, j).str();
        }
        out += '\n';
    }
    return out;
}

/// Everything the analyze command reports about one matrix.
struct Analysis {
    int n = 0;
    std::vector<std::pair<int, int>> graph_edges;
    int rank_ = 0;
    int nullity_ = 0;
    std::vector<VertexClass> classes; // index i-1 describes vertex i
    IndexSet pvertices;
    std::vector<std::pair<int, int>> pair_edges;
    std::vector<IndexSet> maximal;
};

inline Analysis analyze(const SymMatrix& a) {
    Analysis r;
    r.n = a.order();
    r.graph_edges = graph_of(a);
    r.rank_ = rank(a);
    r.nullity_ = nullity(a);
    for (int i = 1; i <= a.order(); ++i) r.classes.push_back(classify_vertex(a, i));
    const PairGraph g = pair_graph(a);
    r.pvertices = g.vertices;
    r.pair_edges = g.edges;
    r.maximal = maximal_cliques(g);
    return r;
}

inline std::string format_edges(const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) return "none";
    std::string s;
    for (const auto& [u, v] : edges) {
        if (!s.empty()) s += ' ';
        s += "{" + std::to_string(u) + "," + std::to_string(v) + "}";
    }
    return s;
}

inline std::string format_sets(const std::vector<IndexSet>& sets) {
    if (sets.empty()) return "none";
    std::string s;
    for (const auto& x : sets) {
        if (!s.empty()) s += ' ';
        s += x.str();
    }
    return s;
}

inline void print_analysis(std::ostream& os, const Analysis& r) {
    os << "order: " << r.n << "\n";
    os << "graph edges: " << format_edges(r.graph_edges) << "\n";
    os << "rank: " << r.rank_ << "\n";
    os << "nullity: " << r.nullity_ << "\n";
    os << "vertex classes:\n";
    for (int i = 0; i < r.n; ++i)
        os << "  " << (i + 1) << ": " << to_string(r.classes[static_cast<std::size_t>(i)])
           << "\n";
    os << "p-vertices: " << (r.pvertices.empty() ? "none" : r.pvertices.str()) << "\n";
    os << "pair edges: " << format_edges(r.pair_edges) << "\n";
    os << "maximal p-sets: " << format_sets(r.maximal) << "\n";
}

inline void print_report(std::ostream& os, const VerifyReport& rep) {
    os << "matrices checked: " << rep.matrices_checked << "\n";
    os << "subsets checked: " << rep.subsets_checked << "\n";
    for (CheckId id : all_checks) {
        const CheckStats& s = rep.stats(id);
        os << "  " << to_string(id) << ": " << s.passes << " passed, " << s.failures
           << " failed\n";
    }
    if (rep.ok()) {
        os << "all checks passed\n";
    } else {
        os << rep.total_failures() << " failures\n";
        if (auto w = rep.first_failure()) {
            os << "first failure: " << to_string(w->check);
            if (!w->subset.empty()) os << " on subset " << w->subset.str();
            if (!w->origin.empty()) os << " [" << w->origin << "]";
            os << "\n  " << w->detail << "\n";
        }
    }
}

/// One witness file per failure: replayable matrix text prefixed by
/// comment lines recording the check, subset, origin, and detail.
inline std::string witness_text(const FailureWitness& w) {
    std::string s;
    s += "# check: " + std::string(to_string(w.check)) + "\n";
    if (!w.subset.empty()) s += "# subset: " + w.subset.str() + "\n";
    if (!w.origin.empty()) s += "# origin: " + w.origin + "\n";
    if (!w.detail.empty()) s += "# detail: " + w.detail + "\n";
    s += format_matrix(w.matrix);
    return s;
}

/// Writes every witness in the report to dir (created if missing); returns
/// the file paths.
inline std::vector<std::string> write_witnesses(const VerifyReport& rep,
                                                const std::string& dir) {
    std::vector<std::string> paths;
    if (rep.witnesses.empty()) return paths;
    std::filesystem::create_directories(dir);
    int k = 0;
    for (const auto& w : rep.witnesses) {
        const std::string path = dir + "/witness_" + std::to_string(k++) + "_" +
                                 to_string(w.check) + ".txt";
        std::ofstream out(path);
        out << witness_text(w);
        paths.push_back(path);
    }
    return paths;
}

} // namespace parter
