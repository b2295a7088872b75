#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parter/core.hpp"
#include "parter/enumerate.hpp"
#include "parter/errors.hpp"
#include "parter/generate.hpp"
#include "parter/index_set.hpp"
#include "parter/linalg.hpp"
#include "parter/matrix.hpp"

namespace parter {

/// The properties verify_matrix tests, one tally per property.
enum class CheckId {
    PairwiseEquivalence,  // pair criterion == definition on every subset
    Characterization,     // the three equivalent P-set conditions agree
    DownerDependence,     // downer <=> row depends on the others
    PVertexIndependence,  // rows of any P-vertex subset are independent
    JacobiIdentity,       // determinant identity on nonsingular inputs
    PairGap,              // P-vertex pair nullity gap is 0 or 2
    InverseBlock,         // inverse block vanishes on pairwise P-sets
    PrincipalLift,        // P-sets lift from a full-rank principal submatrix
    SubsetClosure,        // nonempty subsets of P-sets are P-sets
    Enumeration,          // clique enumeration == brute force
};

inline constexpr int kCheckCount = 10;

inline constexpr std::array<CheckId, kCheckCount> all_checks = {
    CheckId::PairwiseEquivalence, CheckId::Characterization,
    CheckId::DownerDependence,    CheckId::PVertexIndependence,
    CheckId::JacobiIdentity,      CheckId::PairGap,
    CheckId::InverseBlock,        CheckId::PrincipalLift,
    CheckId::SubsetClosure,       CheckId::Enumeration,
};

inline const char* to_string(CheckId id) {
    switch (id) {
        case CheckId::PairwiseEquivalence: return "pairwise_equivalence";
        case CheckId::Characterization: return "characterization";
        case CheckId::DownerDependence: return "downer_dependence";
        case CheckId::PVertexIndependence: return "pvertex_independence";
        case CheckId::JacobiIdentity: return "jacobi_identity";
        case CheckId::PairGap: return "pair_gap";
        case CheckId::InverseBlock: return "inverse_block";
        case CheckId::PrincipalLift: return "principal_lift";
        case CheckId::SubsetClosure: return "subset_closure";
        case CheckId::Enumeration: return "enumeration";
    }
    return "?";
}

struct CheckStats {
    long passes = 0;
    long failures = 0;
};

/// Everything needed to replay one failed check instance.
struct FailureWitness {
    CheckId check = CheckId::PairwiseEquivalence;
    SymMatrix matrix;
    IndexSet subset;     // empty when the instance is matrix-level
    std::string detail;
    std::string origin;  // generator spec and instance index, when known
};

struct VerifyReport {
    long matrices_checked = 0;
    long subsets_checked = 0;
    std::array<CheckStats, kCheckCount> tallies{};
    std::vector<FailureWitness> witnesses; // capped; first entry is first_failure

    static constexpr std::size_t kWitnessCap = 64;

    CheckStats& stats(CheckId id) { return tallies[static_cast<std::size_t>(id)]; }
    const CheckStats& stats(CheckId id) const {
        return tallies[static_cast<std::size_t>(id)];
    }

    long total_failures() const {
        long t = 0;
        for (const auto& s : tallies) t += s.failures;
        return t;
    }

    bool ok() const { return total_failures() == 0; }

    std::optional<FailureWitness> first_failure() const {
        if (witnesses.empty()) return std::nullopt;
        return witnesses.front();
    }

    void record(CheckId id, bool pass, const SymMatrix& a, const IndexSet& subset,
                const std::string& detail, const std::string& origin = "") {
        if (pass) {
            ++stats(id).passes;
            return;
        }
        ++stats(id).failures;
        if (witnesses.size() < kWitnessCap)
            witnesses.push_back({id, a, subset, detail, origin});
    }

    void merge(const VerifyReport& other) {
        matrices_checked += other.matrices_checked;
        subsets_checked += other.subsets_checked;
        for (std::size_t i = 0; i < tallies.size(); ++i) {
            tallies[i].passes += other.tallies[i].passes;
            tallies[i].failures += other.tallies[i].failures;
        }
        for (const auto& w : other.witnesses) {
            if (witnesses.size() >= kWitnessCap) break;
            witnesses.push_back(w);
        }
    }
};

/// Every nonempty P-set of A, found by applying the definition to all 2^n - 1
/// nonempty subsets. Output in ascending-bitmask order (all singletons and
/// pairs appear before any set containing a larger index they lack).
inline std::vector<IndexSet> brute_force_psets(const SymMatrix& a, int cap = 20) {
    const int n = a.order();
    if (n > cap || n > 62)
        throw CapError("brute_force_psets: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(std::min(cap, 62)));
    std::vector<IndexSet> out;
    const std::uint64_t full = n == 0 ? 0 : (n >= 64 ? ~0ULL : (1ULL << n) - 1);
    for (std::uint64_t m = 1; m <= full && full != 0; ++m) {
        IndexSet alpha = IndexSet::from_mask(m);
        if (is_pset(a, alpha)) out.push_back(std::move(alpha));
    }
    return out;
}

namespace detail {

/// Greedy extension of the rows indexed by `alpha` to a row basis of A:
/// scan the remaining indices in ascending order, keeping each row that is
/// not already spanned. Returns the extended index set.
inline IndexSet extend_to_row_basis(const SymMatrix& a, const IndexSet& alpha) {
    const Matrix m = a.to_matrix();
    std::vector<int> chosen = alpha.values();
    auto selected = [&]() {
        Matrix s(static_cast<int>(chosen.size()), m.cols());
        for (std::size_t r = 0; r < chosen.size(); ++r)
            for (int j = 0; j < m.cols(); ++j)
                s(static_cast<int>(r), j) = m(chosen[r] - 1, j);
        return s;
    };
    const int target = rank(m);
    for (int i = 1; i <= a.order() && static_cast<int>(chosen.size()) < target; ++i) {
        if (alpha.contains(i)) continue;
        std::vector<Rational> row(m.row(i - 1).begin(), m.row(i - 1).end());
        if (!row_in_span(selected(), row)) {
            chosen.push_back(i);
            std::sort(chosen.begin(), chosen.end());
        }
    }
    return IndexSet(chosen);
}

/// Left-nullspace route to the cross-row condition: x^T cross ∈ RS(rest)
/// for some x ≠ 0 iff some vector in the left nullspace of [cross over rest]
/// has a nonzero leading block. Uses the kernel solver instead of rank
/// comparisons, so it is an independent second opinion.
inline bool cross_rows_independent_by_kernel(const Matrix& cross, const Matrix& rest) {
    const Matrix s = stack_rows(cross, rest).transpose();
    for (const auto& v : nullspace(s))
        for (int i = 0; i < cross.rows(); ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

} // namespace detail

/// Exhaustive single-matrix verification of every property the library
/// promises, with brute force as ground truth. Each failed instance is
/// tallied and witnessed; exceptions inside a check count as failures.
inline VerifyReport verify_matrix(const SymMatrix& a, int cap = 12,
                                  const std::string& origin = "") {
    const int n = a.order();
    if (n > cap || n > 62)
        throw CapError("verify_matrix: order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(std::min(cap, 62)));

    VerifyReport rep;
    rep.matrices_checked = 1;

    auto run = [&](CheckId id, const IndexSet& subset, auto&& fn) {
        try {
            std::string why;
            const bool pass = fn(why);
            rep.record(id, pass, a, subset, why, origin);
        } catch (const Error& e) {
            rep.record(id, false, a, subset, std::string("exception: ") + e.what(),
                       origin);
        }
    };

    const std::uint64_t full = n == 0 ? 0 : (1ULL << n) - 1;
    rep.subsets_checked = static_cast<long>(full);

    std::vector<char> brute(static_cast<std::size_t>(full) + 1, 0);

    // Per-subset checks driven by the public predicates.
    for (std::uint64_t m = 1; m <= full && full != 0; ++m) {
        const IndexSet alpha = IndexSet::from_mask(m);

        bool direct = false;
        run(CheckId::Characterization, alpha, [&](std::string& why) {
            direct = is_pset(a, alpha);
            const PsetConditions v = pset_conditions(a, alpha);
            if (!v.agree()) {
                why = "conditions disagree: nullity=" + std::to_string(v.by_nullity) +
                      " rank=" + std::to_string(v.by_rank) +
                      " rowspace=" + std::to_string(v.by_rowspace);
                return false;
            }
            if (v.by_nullity != direct) {
                why = "condition verdict differs from the definition";
                return false;
            }
            const bool kernel_route = detail::cross_rows_independent_by_kernel(
                v.cross, v.rest.to_matrix());
            if (kernel_route != v.by_rowspace) {
                why = "kernel route disagrees with the stacked-rank route";
                return false;
            }
            return true;
        });
        brute[m] = direct ? 1 : 0;

        if (alpha.size() >= 2) {
            run(CheckId::PairwiseEquivalence, alpha, [&](std::string& why) {
                const bool pairwise = pset_by_pairs(a, alpha);
                if (pairwise != direct) {
                    why = "pairwise criterion says " + std::to_string(pairwise) +
                          ", definition says " + std::to_string(direct);
                    return false;
                }
                return true;
            });
        }
    }

    // Vertex classification against row dependence.
    for (int i = 1; i <= n; ++i) {
        const IndexSet single({i});
        run(CheckId::DownerDependence, single, [&](std::string& why) {
            const bool downer = classify_vertex(a, i) == VertexClass::Downer;
            const bool dependent = dependent_on_others(a.to_matrix(), i - 1);
            if (downer != dependent) {
                why = std::string("downer=") + (downer ? "yes" : "no") +
                      " but row dependence=" + (dependent ? "yes" : "no");
                return false;
            }
            return true;
        });
    }

    const bool nonsingular = rank(a) == n;

    // The graph-based checks need the classification to hold together; a
    // blow-up here is itself a failure (and the per-vertex loop above has
    // already witnessed it), so they are skipped rather than aborted.
    IndexSet pverts;
    PairGraph graph;
    bool graph_ok = true;
    try {
        pverts = p_vertices(a);
        graph = pair_graph(a);
    } catch (const Error& e) {
        graph_ok = false;
        rep.record(CheckId::Enumeration, false, a, IndexSet(),
                   std::string("pair graph construction failed: ") + e.what(), origin);
    }

    // Subsets of the P-vertices: independence, lifting, inverse blocks.
    const std::uint64_t pfull =
        (!graph_ok || pverts.empty()) ? 0 : (1ULL << pverts.size()) - 1;
    for (std::uint64_t pm = 1; pm <= pfull && pfull != 0; ++pm) {
        std::vector<int> members;
        for (std::uint64_t t = pm; t;) {
            const int pos = std::countr_zero(t);
            t &= t - 1;
            members.push_back(pverts[pos]);
        }
        const IndexSet alpha(members);

        run(CheckId::PVertexIndependence, alpha, [&](std::string& why) {
            if (!pvertex_rows_independent(a, alpha)) {
                why = "rows of a P-vertex subset are dependent";
                return false;
            }
            return true;
        });

        run(CheckId::PrincipalLift, alpha, [&](std::string& why) {
            const IndexSet beta = detail::extend_to_row_basis(a, alpha);
            if (beta.size() != rank(a)) {
                why = "basis extension reached " + std::to_string(beta.size()) +
                      " rows, rank is " + std::to_string(rank(a));
                return false;
            }
            const SymMatrix sub = principal_submatrix(a, beta);
            if (rank(sub) != sub.order()) {
                why = "principal submatrix on the extended basis is singular";
                return false;
            }
            const IndexSet positions = alpha.positions_in(beta);
            if (is_pset(sub, positions) && !is_pset(a, alpha)) {
                why = "P-set of the principal submatrix fails to lift";
                return false;
            }
            return true;
        });

        bool clique = alpha.size() >= 2;
        for (int i = 0; clique && i < alpha.size(); ++i)
            for (int j = i + 1; clique && j < alpha.size(); ++j)
                if (!graph.has_edge(alpha[i], alpha[j])) clique = false;
        if (clique && nonsingular) {
            run(CheckId::InverseBlock, alpha, [&](std::string& why) {
                if (!inverse_zero_block(a, alpha)) {
                    why = "inverse block on a pairwise P-set is nonzero";
                    return false;
                }
                return true;
            });
        }
    }

    // P-vertex pair gaps.
    for (int i = 0; i < pverts.size(); ++i)
        for (int j = i + 1; j < pverts.size(); ++j) {
            const IndexSet pair({pverts[i], pverts[j]});
            run(CheckId::PairGap, pair, [&](std::string& why) {
                const bool weak = weak_pair_test(a, pverts[i], pverts[j]);
                const bool exact = is_pset(a, pair);
                if (weak != exact) {
                    why = "gap test disagrees with the definition";
                    return false;
                }
                return true;
            });
        }

    // Determinant identity over every subset of a nonsingular matrix,
    // the empty and full sets included.
    if (nonsingular) {
        for (std::uint64_t m = 0; ; ++m) {
            const IndexSet alpha = IndexSet::from_mask(m);
            run(CheckId::JacobiIdentity, alpha, [&](std::string& why) {
                if (!jacobi_check(a, alpha)) {
                    why = "determinant identity violated";
                    return false;
                }
                return true;
            });
            if (m == full) break;
        }
    }

    // Brute-force set: closure downward, then agreement with enumeration.
    run(CheckId::SubsetClosure, IndexSet(), [&](std::string& why) {
        for (std::uint64_t m = 1; m <= full && full != 0; ++m) {
            if (!brute[m]) continue;
            for (std::uint64_t s = (m - 1) & m; s; s = (s - 1) & m) {
                if (!brute[s]) {
                    why = "P-set " + IndexSet::from_mask(m).str() +
                          " has non-P-set subset " + IndexSet::from_mask(s).str();
                    return false;
                }
            }
        }
        return true;
    });

    if (graph_ok) run(CheckId::Enumeration, IndexSet(), [&](std::string& why) {
        std::vector<IndexSet> brute_list = brute_force_psets(a, std::max(cap, n));
        std::vector<char> expect(static_cast<std::size_t>(full) + 1, 0);
        for (std::uint64_t pm = 1; pm <= pfull && pfull != 0; ++pm) {
            std::vector<int> members;
            bool clique = true;
            for (std::uint64_t t = pm; t;) {
                const int pos = std::countr_zero(t);
                t &= t - 1;
                members.push_back(pverts[pos]);
            }
            for (std::size_t i = 0; clique && i < members.size(); ++i)
                for (std::size_t j = i + 1; clique && j < members.size(); ++j)
                    if (!graph.has_edge(members[i], members[j])) clique = false;
            if (clique) expect[IndexSet(members).mask()] = 1;
        }
        std::vector<char> got(static_cast<std::size_t>(full) + 1, 0);
        for (const auto& s : brute_list) got[s.mask()] = 1;
        if (got != expect) {
            why = "brute-force P-sets differ from the pair-graph cliques";
            return false;
        }

        std::vector<IndexSet> maximal_brute;
        for (const auto& s : brute_list) {
            bool maximal = true;
            for (int j = 1; j <= n && maximal; ++j)
                if (!s.contains(j) && got[s.with(j).mask()]) maximal = false;
            if (maximal) maximal_brute.push_back(s);
        }
        std::sort(maximal_brute.begin(), maximal_brute.end());
        const std::vector<IndexSet> maximal_fast = maximal_psets(a);
        if (maximal_brute != maximal_fast) {
            why = "maximal P-sets differ between enumeration and brute force";
            return false;
        }
        return true;
    });

    return rep;
}

struct CampaignOptions {
    int count_per_spec = 1;
    int cap = 12;
    std::string witness_dir; // empty: witnesses kept in the report only
};

/// Runs verify_matrix over `count_per_spec` matrices from each spec.
/// Instance t of a spec reuses the spec with seed mix64(seed + t), so the
/// whole campaign is reproducible from the spec list alone.
inline VerifyReport fuzz_campaign(const std::vector<GenSpec>& specs,
                                  const CampaignOptions& opt = {}) {
    VerifyReport total;
    for (const auto& spec : specs) {
        for (int t = 0; t < opt.count_per_spec; ++t) {
            GenSpec inst = spec;
            inst.seed = mix64(spec.seed + static_cast<std::uint64_t>(t));
            const SymMatrix a = generate(inst);
            const std::string origin = inst.str() + " instance=" + std::to_string(t);
            total.merge(verify_matrix(a, opt.cap, origin));
        }
    }
    return total;
}

} // namespace parter
