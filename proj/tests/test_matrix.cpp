#include <catch_amalgamated.hpp>

#include "parter/index_set.hpp"
#include "parter/matrix.hpp"

using namespace parter;

namespace {

SymMatrix path5() {
    return SymMatrix::from_rows({
        {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(0), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)},
        {Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)},
    });
}

} // namespace

TEST_CASE("index sets sort, dedupe-check, and bound-check") {
    const IndexSet s({4, 2, 7});
    CHECK(s.size() == 3);
    CHECK(s[0] == 2);
    CHECK(s[2] == 7);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(3));
    CHECK(s.str() == "{2,4,7}");
    CHECK(s.position_of(4) == 1);
    CHECK_THROWS_AS(s.position_of(5), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet({1, 1}), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet({0}), InvalidArgumentError);
    CHECK_THROWS_AS(IndexSet({-2}), InvalidArgumentError);
    CHECK_NOTHROW(s.check_bounds(7));
    CHECK_THROWS_AS(s.check_bounds(6), BoundsError);
    CHECK(IndexSet().empty());
    CHECK(IndexSet().str() == "{}");
}

TEST_CASE("index set masks round trip") {
    const IndexSet s({1, 3, 6});
    CHECK(s.mask() == 0b100101u);
    CHECK(IndexSet::from_mask(0b100101u) == s);
    CHECK(IndexSet::from_mask(0) == IndexSet());
    CHECK(IndexSet::full(3) == IndexSet({1, 2, 3}));
    CHECK(IndexSet::full(0) == IndexSet());
}

TEST_CASE("index set algebra") {
    const IndexSet s({2, 4});
    CHECK(s.complement(5) == IndexSet({1, 3, 5}));
    CHECK(IndexSet().complement(3) == IndexSet::full(3));
    CHECK(IndexSet::full(3).complement(3) == IndexSet());
    CHECK(s.with(3) == IndexSet({2, 3, 4}));
    CHECK(s.with(2) == s);
    CHECK(s.without(4) == IndexSet({2}));
    CHECK(s.without(9) == s);
    CHECK(s.subset_of(IndexSet({1, 2, 4})));
    CHECK_FALSE(IndexSet({1, 2, 4}).subset_of(s));
    CHECK(s.positions_in(IndexSet({2, 3, 4, 7})) == IndexSet({1, 3}));
    CHECK_THROWS_AS(s.positions_in(IndexSet({2, 3})), InvalidArgumentError);
}

TEST_CASE("index set ordering is sequence-lexicographic") {
    CHECK(IndexSet({2}) < IndexSet({2, 4}));
    CHECK(IndexSet({2, 4}) < IndexSet({4}));
    CHECK(IndexSet({1, 3}) < IndexSet({2}));
    CHECK_FALSE(IndexSet({2}) < IndexSet({2}));
    std::vector<IndexSet> v{IndexSet({4}), IndexSet({2, 4}), IndexSet({2})};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<IndexSet>{IndexSet({2}), IndexSet({2, 4}), IndexSet({4})});
}

TEST_CASE("matrix basics") {
    Matrix m(2, 3);
    CHECK(m.is_zero());
    m(1, 2) = Rational(5);
    CHECK(m.at(1, 2) == Rational(5));
    CHECK_THROWS_AS(m.at(2, 0), BoundsError);
    CHECK_THROWS_AS(m.at(0, 3), BoundsError);
    CHECK_THROWS_AS(Matrix(-1, 2), InvalidArgumentError);

    const Matrix t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t(2, 1) == Rational(5));

    CHECK_THROWS_AS(Matrix::from_rows({{Rational(1)}, {Rational(1), Rational(2)}}),
                    InvalidArgumentError);
}

TEST_CASE("matrix product") {
    const Matrix a = Matrix::from_rows({{Rational(1), Rational(2)},
                                        {Rational(3), Rational(4)}});
    const Matrix b = Matrix::from_rows({{Rational(0), Rational(1)},
                                        {Rational(1), Rational(0)}});
    const Matrix p = a * b;
    CHECK(p == Matrix::from_rows({{Rational(2), Rational(1)},
                                  {Rational(4), Rational(3)}}));
    CHECK(a * Matrix::identity(2) == a);
    CHECK_THROWS_AS(a * Matrix(3, 2), BoundsError);
}

TEST_CASE("stacking rows") {
    const Matrix top = Matrix::from_rows({{Rational(1), Rational(2)}});
    const Matrix bottom = Matrix::from_rows({{Rational(3), Rational(4)},
                                             {Rational(5), Rational(6)}});
    const Matrix s = stack_rows(top, bottom);
    CHECK(s.rows() == 3);
    CHECK(s(2, 1) == Rational(6));
    CHECK_THROWS_AS(stack_rows(top, Matrix(1, 3)), BoundsError);
}

TEST_CASE("symmetric matrices enforce symmetry") {
    CHECK_THROWS_AS(SymMatrix::from_rows({{Rational(0), Rational(1)},
                                          {Rational(2), Rational(0)}}),
                    InvalidArgumentError);
    CHECK_THROWS_AS(SymMatrix::from_matrix(Matrix(2, 3)), InvalidArgumentError);

    SymMatrix a(3);
    a.set(0, 2, Rational(7));
    CHECK(a(2, 0) == Rational(7));
    CHECK(a(0, 2) == Rational(7));
    CHECK_THROWS_AS(a.set(0, 3, Rational(1)), BoundsError);
    CHECK_THROWS_AS(a.at(3, 0), BoundsError);

    CHECK(SymMatrix(0).order() == 0);
    CHECK(SymMatrix::identity(2)(0, 0) == Rational(1));
    CHECK(SymMatrix::zero(4).is_zero());
}

TEST_CASE("principal submatrices") {
    const SymMatrix a = path5();
    const SymMatrix kept = principal_submatrix(a, IndexSet({2, 3}));
    CHECK(kept.order() == 2);
    CHECK(kept(0, 1) == Rational(1)); // entries (2,3) of the path
    CHECK(kept(0, 0) == Rational(0));

    const SymMatrix deleted = submatrix_delete(a, IndexSet({2, 4}));
    CHECK(deleted.order() == 3);
    CHECK(deleted.is_zero()); // vertices 1,3,5 are pairwise non-adjacent

    CHECK(submatrix_delete(a, IndexSet()) == a);
    CHECK(submatrix_delete(a, IndexSet::full(5)).order() == 0);
    CHECK_THROWS_AS(principal_submatrix(a, IndexSet({6})), BoundsError);
}

TEST_CASE("rectangular submatrices") {
    const SymMatrix a = path5();
    const Matrix c = submatrix_keep(a, IndexSet({2, 4}), IndexSet({1, 3, 5}));
    CHECK(c.rows() == 2);
    CHECK(c.cols() == 3);
    CHECK(c(0, 0) == Rational(1)); // entry (2,1)
    CHECK(c(0, 1) == Rational(1)); // entry (2,3)
    CHECK(c(0, 2) == Rational(0)); // entry (2,5)
    CHECK(c(1, 2) == Rational(1)); // entry (4,5)

    const Matrix empty = submatrix_keep(a, IndexSet(), IndexSet({1}));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 1);
}

TEST_CASE("fingerprints track content") {
    const SymMatrix a = path5();
    const SymMatrix b = path5();
    CHECK(a.fingerprint() == b.fingerprint());

    SymMatrix c = path5();
    c.set(0, 0, Rational(1));
    CHECK(c.fingerprint() != a.fingerprint());

    CHECK(Matrix(2, 3).fingerprint() != Matrix(3, 2).fingerprint());
}
