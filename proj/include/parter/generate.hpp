#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "parter/errors.hpp"
#include "parter/matrix.hpp"
#include "parter/rational.hpp"

namespace parter {

/// splitmix64: tiny counter-based 64-bit generator with a documented,
/// platform-independent recurrence, so every fixture derived from a seed is
/// portable. State advances by the golden-ratio increment; outputs pass
/// through the standard two-round xor-shift finalizer.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, m). Rejection keeps the draw unbiased.
    std::uint64_t below(std::uint64_t m) {
        if (m == 0) throw InvalidArgumentError("SplitMix64::below(0)");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % m;
    }

    /// Uniform over [-b, b] \ {0}.
    long nonzero_in(long b) {
        const long k = static_cast<long>(below(static_cast<std::uint64_t>(2 * b)));
        return k < b ? k - b : k - b + 1;
    }

    /// Uniform over [-b, b] including 0.
    long signed_in(long b) {
        return static_cast<long>(below(static_cast<std::uint64_t>(2 * b + 1))) - b;
    }

private:
    std::uint64_t state_;
};

/// The splitmix64 output finalizer alone; used to derive independent
/// per-instance seeds from a base seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

enum class Family { Path, Star, Tree, Dense, Zero, Identity };
enum class DiagonalMode { Zero, Random };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Star: return "star";
        case Family::Tree: return "tree";
        case Family::Dense: return "dense";
        case Family::Zero: return "zero";
        case Family::Identity: return "identity";
    }
    return "?";
}

inline const char* to_string(DiagonalMode m) {
    return m == DiagonalMode::Zero ? "zero" : "random";
}

inline Family family_from_string(const std::string& s) {
    if (s == "path") return Family::Path;
    if (s == "star") return Family::Star;
    if (s == "tree") return Family::Tree;
    if (s == "dense") return Family::Dense;
    if (s == "zero") return Family::Zero;
    if (s == "identity") return Family::Identity;
    throw InvalidArgumentError("unknown family '" + s + "'");
}

inline DiagonalMode diagonal_mode_from_string(const std::string& s) {
    if (s == "zero") return DiagonalMode::Zero;
    if (s == "random") return DiagonalMode::Random;
    throw InvalidArgumentError("unknown diagonal mode '" + s + "'");
}

/// Recipe for one generated matrix. Identical specs always produce
/// identical matrices, on every platform.
struct GenSpec {
    int n = 0;
    Family family = Family::Dense;
    long entry_bound = 3;          // numerators in [-b,b], denominators in [1,b]
    Rational density = Rational(1, 2); // dense family: fill probability per pair
    DiagonalMode diagonal = DiagonalMode::Zero;
    std::uint64_t seed = 0;

    std::string str() const {
        std::string s = std::string(to_string(family)) + " n=" + std::to_string(n) +
                        " bound=" + std::to_string(entry_bound);
        if (family == Family::Dense) s += " density=" + density.str();
        s += std::string(" diag=") + to_string(diagonal) + " seed=" + std::to_string(seed);
        return s;
    }
};

/// Edges of the graph of A: unordered pairs {i,j}, i < j, with a nonzero
/// off-diagonal entry. Diagonal entries never contribute.
inline std::vector<std::pair<int, int>> graph_of(const SymMatrix& a) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j)
            if (!a(i, j).is_zero()) edges.emplace_back(i + 1, j + 1);
    return edges;
}

namespace detail {

/// Decodes a Prüfer sequence (values 1..n, length n-2) into the edge list
/// of the labeled tree it encodes; every labeled tree arises from exactly
/// one sequence, so uniform sequences give uniform trees.
inline std::vector<std::pair<int, int>> prufer_decode(int n, const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> edges;
    if (n < 2) return edges;
    std::vector<int> stubs(static_cast<std::size_t>(n) + 1, 1);
    for (int s : seq) ++stubs[static_cast<std::size_t>(s)];
    for (int s : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (stubs[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
                --stubs[static_cast<std::size_t>(leaf)];
                --stubs[static_cast<std::size_t>(s)];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 1; v <= n; ++v) {
        if (stubs[static_cast<std::size_t>(v)] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.emplace_back(u, v);
                break;
            }
        }
    }
    return edges;
}

inline Rational random_nonzero(SplitMix64& rng, long bound) {
    const long num = rng.nonzero_in(bound);
    const long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(bound)));
    return Rational(num, den);
}

inline Rational random_signed(SplitMix64& rng, long bound) {
    const long num = rng.signed_in(bound);
    const long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(bound)));
    return Rational(num, den);
}

/// Exact Bernoulli(p) decision from one 64-bit draw: true iff
/// draw / 2^64 < p, evaluated in integers.
inline bool bernoulli(SplitMix64& rng, const Rational& p) {
    const std::uint64_t u = rng.next();
    mpz_class lhs = mpz_class(static_cast<unsigned long>(u)) * p.den();
    mpz_class rhs = p.num() << 64;
    return lhs < rhs;
}

} // namespace detail

/// Deterministic matrix construction from a spec. Draw order is fixed:
/// trees draw the Prüfer sequence, then edge weights in sorted edge order;
/// the dense family visits pairs in row-major order, each fill decision
/// immediately followed by that entry's weight draw. A random diagonal is
/// drawn last, in ascending index order.
inline SymMatrix generate(const GenSpec& spec) {
    if (spec.n < 0)
        throw InvalidArgumentError("generate: negative order");
    if (spec.entry_bound < 1)
        throw InvalidArgumentError("generate: entry bound must be >= 1");
    if (spec.density.sign() < 0 || spec.density > Rational(1))
        throw InvalidArgumentError("generate: density outside [0, 1]");

    const int n = spec.n;
    SymMatrix a(n);
    SplitMix64 rng(spec.seed);

    switch (spec.family) {
        case Family::Zero:
            return a;
        case Family::Identity:
            return SymMatrix::identity(n);
        case Family::Path:
            for (int i = 1; i < n; ++i) a.set(i - 1, i, Rational(1));
            break;
        case Family::Star:
            for (int j = 2; j <= n; ++j) a.set(0, j - 1, Rational(1));
            break;
        case Family::Tree: {
            std::vector<int> seq;
            for (int i = 0; i < n - 2; ++i)
                seq.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            auto edges = detail::prufer_decode(n, seq);
            std::sort(edges.begin(), edges.end());
            for (const auto& [u, v] : edges)
                a.set(u - 1, v - 1, detail::random_nonzero(rng, spec.entry_bound));
            break;
        }
        case Family::Dense:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (detail::bernoulli(rng, spec.density))
                        a.set(i, j, detail::random_nonzero(rng, spec.entry_bound));
            break;
    }

    if (spec.diagonal == DiagonalMode::Random)
        for (int i = 0; i < n; ++i)
            a.set(i, i, detail::random_signed(rng, spec.entry_bound));
    return a;
}

} // namespace parter
