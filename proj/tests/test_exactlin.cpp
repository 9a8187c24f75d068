#include <random>

#include <catch_amalgamated.hpp>

#include "lefschetz/exactlin.hpp"

using namespace lefschetz;

namespace {

Matrix mat(Index r, Index c, std::initializer_list<long long> values)
{
    Matrix m(r, c);
    auto it = values.begin();
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            m(i, j) = Rational(*it++);
    return m;
}

Matrix randomMatrix(std::mt19937_64& rng, Index r, Index c, int sparsity = 2)
{
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j)
            m(i, j) = (rng() % static_cast<unsigned>(sparsity + 1) == 0) ? Rational(static_cast<long long>(rng() % 7) - 3)
                                                                        : Rational(0);
    return m;
}

} // namespace

TEST_CASE("rref of a rank one matrix")
{
    auto r = rref(mat(2, 2, {1, 2, 2, 4}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == mat(2, 2, {1, 2, 0, 0}));
    CHECK(r.pivots == std::vector<Index>{0});
}

TEST_CASE("rref keeps fractions exact")
{
    auto r = rref(mat(2, 3, {2, 1, 0, 0, 3, 1}));
    Matrix expected(2, 3);
    expected << Rational(1), Rational(0), Rational(-1, 6), Rational(0), Rational(1), Rational(1, 3);
    CHECK(r.reduced == expected);
}

TEST_CASE("kernel of a row vector")
{
    SubspaceQ k = kernel(mat(1, 2, {1, 1}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(Vector(mat(2, 1, {1, -1}))));
    CHECK_FALSE(k.contains(Vector(mat(2, 1, {1, 1}))));
}

TEST_CASE("kernel and image of zero-size maps")
{
    Matrix empty(0, 3);
    CHECK(kernel(empty).dim() == 3);
    CHECK(image(Matrix(3, 0)).dim() == 0);
    CHECK(rank(Matrix(0, 0)) == 0);
}

TEST_CASE("subspace equality is basis independent")
{
    SubspaceQ a = SubspaceQ::spanOfColumns(mat(3, 2, {1, 0, 1, 1, 0, 1}));
    SubspaceQ b = SubspaceQ::spanOfColumns(mat(3, 2, {1, 1, 2, 1, 1, 0}));
    CHECK(a == b);
    CHECK(a != SubspaceQ::full(3));
    CHECK(SubspaceQ(3) != a);
}

TEST_CASE("intersection of two planes in three space is a line")
{
    SubspaceQ xy = SubspaceQ::spanOfColumns(mat(3, 2, {1, 0, 0, 1, 0, 0}));
    SubspaceQ yz = SubspaceQ::spanOfColumns(mat(3, 2, {0, 0, 1, 0, 0, 1}));
    SubspaceQ line = intersect(xy, yz);
    CHECK(line.dim() == 1);
    CHECK(line.contains(Vector(mat(3, 1, {0, 5, 0}))));
    CHECK(sum(xy, yz) == SubspaceQ::full(3));
}

TEST_CASE("preimage and solve")
{
    Matrix m = mat(2, 3, {1, 0, 1, 0, 1, 1});
    SubspaceQ xAxis = SubspaceQ::spanOfColumns(mat(2, 1, {1, 0}));
    SubspaceQ pre = preimage(m, xAxis);
    CHECK(pre.dim() == 2);
    auto x = solve(m, Vector(mat(2, 1, {3, 4})));
    REQUIRE(x);
    CHECK(m * *x == Vector(mat(2, 1, {3, 4})));
    CHECK_FALSE(solve(mat(2, 1, {1, 1}), Vector(mat(2, 1, {1, 2}))));
}

TEST_CASE("inverse of a unimodular matrix and of a singular one")
{
    Matrix m = mat(2, 2, {2, 1, 1, 1});
    CHECK(inverse(m) == mat(2, 2, {1, -1, -1, 2}));
    CHECK_THROWS_AS(inverse(mat(2, 2, {1, 2, 2, 4})), std::domain_error);
}

TEST_CASE("quotient of the plane by a line")
{
    SubspaceQ line = SubspaceQ::spanOfColumns(mat(2, 1, {1, 1}));
    auto q = quotientMap(line, SubspaceQ::full(2));
    CHECK(q.dim() == 1);
    CHECK(isZeroMatrix(q.projection * mat(2, 1, {1, 1})));
    CHECK(q.projection * q.lift == Matrix::Identity(1, 1));
    CHECK_THROWS(quotientMap(SubspaceQ::full(2), line));
}

TEST_CASE("the templates also work over double")
{
    Eigen::MatrixXd m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(rank(m) == 1);
    CHECK(kernel(m).dim() == 2);
}

TEST_CASE("random matrices obey rank-nullity and the dimension formula")
{
    std::mt19937_64 rng(20261014);
    for (int trial = 0; trial < 200; ++trial)
    {
        const Index r = 1 + static_cast<Index>(rng() % 6);
        const Index c = 1 + static_cast<Index>(rng() % 6);
        Matrix a = randomMatrix(rng, r, c);
        SubspaceQ k = kernel(a);
        CHECK(rank(a) + k.dim() == c);
        CHECK(isZeroMatrix(a * k.basis()));
        CHECK(image(a).dim() == rank(a));
        CHECK(rank(Matrix(a.transpose())) == rank(a));

        Matrix b = randomMatrix(rng, c, 1 + static_cast<Index>(rng() % 5));
        Matrix b2 = randomMatrix(rng, c, 1 + static_cast<Index>(rng() % 5));
        SubspaceQ u = image(b), v = image(b2);
        SubspaceQ both = intersect(u, v);
        CHECK(sum(u, v).dim() + both.dim() == u.dim() + v.dim());
        CHECK(isSubspaceOf(both, u));
        CHECK(isSubspaceOf(both, v));

        // solving for a vector known to be in the image
        Vector x0 = randomMatrix(rng, c, 1, 1).col(0);
        auto x = solve(a, Vector(a * x0));
        REQUIRE(x);
        CHECK(a * *x == a * x0);

        // preimage of the image contains everything
        CHECK(preimage(a, image(a)) == SubspaceQ::full(c));

        if (u.dim() > 0)
        {
            auto q = quotientMap(both, u);
            CHECK(q.dim() == u.dim() - both.dim());
            CHECK(isZeroMatrix(q.projection * both.basis()));
            CHECK(q.projection * q.lift == Matrix::Identity(q.dim(), q.dim()));
        }
    }
}

TEST_CASE("random invertible matrices")
{
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 50)
    {
        const Index n = 1 + static_cast<Index>(rng() % 5);
        Matrix a = randomMatrix(rng, n, n, 1);
        if (rank(a) < n)
            continue;
        ++tested;
        CHECK(a * inverse(a) == Matrix::Identity(n, n));
    }
}
