#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "parter/core.hpp"
#include "parter/errors.hpp"
#include "parter/index_set.hpp"
#include "parter/linalg.hpp"
#include "parter/matrix.hpp"

namespace parter {

/// Graph whose vertices are the P-vertices of a matrix and whose edges are
/// the pairs that form P-sets. Its cliques of size ≥ 2, together with the
/// singleton vertices and ∅, are exactly the matrix's P-sets.
struct PairGraph {
    IndexSet vertices;
    std::vector<std::pair<int, int>> edges; // i < j, sorted lexicographically

    bool has_vertex(int i) const { return vertices.contains(i); }

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
    }
};

/// All P-vertices of A, ascending.
inline IndexSet p_vertices(const SymMatrix& a) {
    std::vector<int> v;
    for (int i = 1; i <= a.order(); ++i)
        if (classify_vertex(a, i) == VertexClass::PVertex) v.push_back(i);
    return IndexSet(v);
}

inline PairGraph pair_graph(const SymMatrix& a) {
    PairGraph g;
    g.vertices = p_vertices(a);
    for (int i = 0; i < g.vertices.size(); ++i)
        for (int j = i + 1; j < g.vertices.size(); ++j) {
            const int u = g.vertices[i];
            const int v = g.vertices[j];
            if (is_pset(a, IndexSet({u, v}))) g.edges.emplace_back(u, v);
        }
    return g;
}

namespace detail {

/// Bron-Kerbosch with pivoting over vertex positions 0..m-1.
/// adj[u] is the neighbor bitmask of position u. Candidates and exclusions
/// travel as masks; each maximal clique is emitted exactly once. The
/// recursion explores extension vertices in ascending position order, so
/// the emission sequence is deterministic.
inline void bron_kerbosch(const std::vector<std::uint64_t>& adj,
                          std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (std::uint64_t px = p | x; px;) {
        const int u = std::countr_zero(px);
        px &= px - 1;
        const int deg = std::popcount(p & adj[static_cast<std::size_t>(u)]);
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~adj[static_cast<std::size_t>(pivot)];
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        const std::uint64_t vbit = 1ULL << v;
        const std::uint64_t nv = adj[static_cast<std::size_t>(v)];
        bron_kerbosch(adj, r | vbit, p & nv, x & nv, out);
        p &= ~vbit;
        x |= vbit;
    }
}

} // namespace detail

/// All maximal cliques of the pair graph, isolated vertices included as
/// singleton cliques. Each clique ascending; the list sorted by the
/// sequence order of IndexSet.
inline std::vector<IndexSet> maximal_cliques(const PairGraph& g) {
    const int m = g.vertices.size();
    if (m == 0) return {};
    if (m > 64)
        throw CapError("maximal_cliques: more than 64 p-vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (const auto& [u, v] : g.edges) {
        const int pu = g.vertices.position_of(u);
        const int pv = g.vertices.position_of(v);
        adj[static_cast<std::size_t>(pu)] |= 1ULL << pv;
        adj[static_cast<std::size_t>(pv)] |= 1ULL << pu;
    }
    std::vector<std::uint64_t> masks;
    detail::bron_kerbosch(adj, 0, m == 64 ? ~0ULL : (1ULL << m) - 1, 0, masks);
    std::vector<IndexSet> cliques;
    cliques.reserve(masks.size());
    for (std::uint64_t r : masks) {
        std::vector<int> members;
        for (std::uint64_t t = r; t;) {
            const int pos = std::countr_zero(t);
            t &= t - 1;
            members.push_back(g.vertices[pos]);
        }
        cliques.emplace_back(members);
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

/// Maximal P-sets of A via the pair graph. Every element is a P-set with no
/// P-set strictly above it; the empty list means A has no P-vertices.
inline std::vector<IndexSet> maximal_psets(const SymMatrix& a) {
    return maximal_cliques(pair_graph(a));
}

/// P-set test through the pair graph: ∅ passes by convention, singletons
/// reduce to vertex classification, larger sets must induce a clique.
/// Agrees with is_pset on every input.
inline bool is_pset_fast(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    if (alpha.empty()) return true;
    if (alpha.size() == 1)
        return classify_vertex(a, alpha[0]) == VertexClass::PVertex;
    const PairGraph g = pair_graph(a);
    for (int i : alpha)
        if (!g.has_vertex(i)) return false;
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i + 1; j < alpha.size(); ++j)
            if (!g.has_edge(alpha[i], alpha[j])) return false;
    return true;
}

} // namespace parter
