#pragma once

#include <string>

#include "parter/errors.hpp"
#include "parter/index_set.hpp"
#include "parter/linalg.hpp"
#include "parter/matrix.hpp"

namespace parter {

/// Effect of deleting one vertex on the nullity of a symmetric matrix:
/// Downer (nullity drops by 1), Neutral (unchanged), PVertex (rises by 1).
/// Eigenvalue interlacing forbids any other gap.
enum class VertexClass { Downer, Neutral, PVertex };

inline const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Downer: return "downer";
        case VertexClass::Neutral: return "neutral";
        case VertexClass::PVertex: return "p-vertex";
    }
    return "?";
}

inline VertexClass classify_vertex(const SymMatrix& a, int i) {
    if (a.order() < 1)
        throw InvalidArgumentError("classify_vertex: empty matrix");
    IndexSet single({i});
    single.check_bounds(a.order());
    const int gap = nullity(submatrix_delete(a, single)) - nullity(a);
    switch (gap) {
        case -1: return VertexClass::Downer;
        case 0: return VertexClass::Neutral;
        case 1: return VertexClass::PVertex;
        default:
            throw InternalError("classify_vertex: nullity gap " + std::to_string(gap) +
                                " at vertex " + std::to_string(i) +
                                " violates interlacing");
    }
}

/// Whether deleting all of α raises the nullity by exactly |α|.
/// The empty set qualifies vacuously.
inline bool is_pset(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    return nullity(submatrix_delete(a, alpha)) == nullity(a) + alpha.size();
}

/// The pairwise criterion: α (|α| ≥ 2) passes iff every 2-subset of α is a
/// P-set. Agrees with is_pset on every input; kept separate so the
/// equivalence itself stays testable.
inline bool pset_by_pairs(const SymMatrix& a, const IndexSet& alpha) {
    if (alpha.size() < 2)
        throw CardinalityError("pset_by_pairs: need at least two indices, got " +
                               std::to_string(alpha.size()));
    alpha.check_bounds(a.order());
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i + 1; j < alpha.size(); ++j)
            if (!is_pset(a, IndexSet({alpha[i], alpha[j]})))
                return false;
    return true;
}

/// Three independently computed equivalent forms of the P-set property,
/// with the block decomposition they are stated in: after moving α to the
/// leading positions, corner = A[α], cross = A[α, complement], rest = A(α).
struct PsetConditions {
    bool by_nullity = false;   // nullity(rest) == nullity(A) + k
    bool by_rank = false;      // rank(A) == rank(rest) + 2k
    bool by_rowspace = false;  // no nonzero combination of cross rows lies in RS(rest)
    int k = 0;
    Matrix corner;
    Matrix cross;
    SymMatrix rest;

    bool agree() const { return by_nullity == by_rank && by_rank == by_rowspace; }
};

inline PsetConditions pset_conditions(const SymMatrix& a, const IndexSet& alpha) {
    if (alpha.empty())
        throw InvalidArgumentError("pset_conditions: empty index set");
    alpha.check_bounds(a.order());
    const IndexSet comp = alpha.complement(a.order());

    PsetConditions v;
    v.k = alpha.size();
    v.corner = submatrix_keep(a, alpha, alpha);
    v.cross = submatrix_keep(a, alpha, comp);
    v.rest = submatrix_delete(a, alpha);

    v.by_nullity = nullity(v.rest) == nullity(a) + v.k;

    const int rank_rest = rank(v.rest);
    v.by_rank = rank(a) == rank_rest + 2 * v.k;

    // x^T cross ∈ RS(rest) only for x = 0 iff stacking cross on rest adds
    // all k rows to the rank.
    v.by_rowspace = rank(stack_rows(v.cross, v.rest.to_matrix())) == v.k + rank_rest;
    return v;
}

/// Exact check of the determinant identity
/// det(A[α]) = det(A⁻¹(α)) · det(A) for nonsingular A.
/// Both sides are evaluated independently; returns their equality.
inline bool jacobi_check(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    const SymMatrix inv = inverse(a); // throws SingularMatrixError when det = 0
    const Rational lhs = det(principal_submatrix(a, alpha));
    const Rational rhs = det(submatrix_delete(inv, alpha)) * det(a);
    return lhs == rhs;
}

/// For a set α of P-vertices, tests whether the rows of A indexed by α are
/// linearly independent. Always true under the precondition.
inline bool pvertex_rows_independent(const SymMatrix& a, const IndexSet& alpha) {
    alpha.check_bounds(a.order());
    for (int i : alpha)
        if (classify_vertex(a, i) != VertexClass::PVertex)
            throw PreconditionError("pvertex_rows_independent: vertex " +
                                    std::to_string(i) + " is not a p-vertex");
    return rank(submatrix_keep(a, alpha, IndexSet::full(a.order()))) == alpha.size();
}

/// For nonsingular M whose pairs from α are all P-sets, tests whether the
/// α-principal block of M⁻¹ vanishes. Always true under the preconditions.
inline bool inverse_zero_block(const SymMatrix& m, const IndexSet& alpha) {
    if (alpha.size() < 2)
        throw CardinalityError("inverse_zero_block: need at least two indices, got " +
                               std::to_string(alpha.size()));
    alpha.check_bounds(m.order());
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i + 1; j < alpha.size(); ++j)
            if (!is_pset(m, IndexSet({alpha[i], alpha[j]})))
                throw PreconditionError("inverse_zero_block: pair {" +
                                        std::to_string(alpha[i]) + "," +
                                        std::to_string(alpha[j]) + "} is not a p-set");
    const SymMatrix n = inverse(m);
    return submatrix_keep(n, alpha, alpha).is_zero();
}

/// For two P-vertices i, j, decides whether {i,j} is a P-set from the sign
/// of the nullity gap alone: the gap is 0 or 2, never 1, so gap > 0 settles
/// it without computing the exact value twice.
inline bool weak_pair_test(const SymMatrix& a, int i, int j) {
    if (i == j)
        throw InvalidArgumentError("weak_pair_test: indices must differ");
    const IndexSet pair({i, j});
    pair.check_bounds(a.order());
    for (int v : pair)
        if (classify_vertex(a, v) != VertexClass::PVertex)
            throw PreconditionError("weak_pair_test: vertex " + std::to_string(v) +
                                    " is not a p-vertex");
    const int gap = nullity(submatrix_delete(a, pair)) - nullity(a);
    if (gap != 0 && gap != 2)
        throw InternalError("weak_pair_test: gap " + std::to_string(gap) +
                            " for p-vertex pair {" + std::to_string(i) + "," +
                            std::to_string(j) + "}; expected 0 or 2");
    return gap > 0;
}

} // namespace parter
