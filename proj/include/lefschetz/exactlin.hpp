/**
 * Exact linear algebra over a field scalar (rationals by default).
 *
 * Every verdict computed by this library reduces to rank, kernel, image,
 * intersection and quotient computations, which are collected here as
 * free function templates over Eigen dense matrices.  Nothing here uses
 * pivoting by magnitude: the scalar is assumed exact, so the first nonzero
 * entry in a column is always an acceptable pivot.
 */
#ifndef LEFSCHETZ_EXACTLIN_HPP
#define LEFSCHETZ_EXACTLIN_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace lefschetz {

/// Arbitrary precision rational; always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using Index = Eigen::Index;

template <typename Scalar>
inline bool isZero(const Scalar& x)
{
    return x == Scalar(0);
}

template <typename Derived>
bool isZeroMatrix(const Eigen::MatrixBase<Derived>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!isZero(m(i, j)))
                return false;
    return true;
}

template <typename Scalar>
struct RrefResult
{
    MatrixX<Scalar> reduced;
    std::vector<Index> pivots;
    Index rank = 0;
};

/**
 * Reduced row-echelon form by Gauss-Jordan elimination.
 *
 * The result is unique for the row space of the input, so two matrices
 * with the same row space (and the same number of rows) reduce to the same
 * matrix.
 */
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    RrefResult<Scalar> out;
    out.reduced = input;
    MatrixX<Scalar>& m = out.reduced;
    const Index rows = m.rows();
    const Index cols = m.cols();

    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c)
    {
        Index p = r;
        while (p < rows && isZero(m(p, c)))
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            m.row(p).swap(m.row(r));

        const Scalar inv = Scalar(1) / m(r, c);
        for (Index j = c; j < cols; ++j)
            m(r, j) *= inv;

        for (Index i = 0; i < rows; ++i)
        {
            if (i == r || isZero(m(i, c)))
                continue;
            const Scalar factor = m(i, c);
            for (Index j = c; j < cols; ++j)
                m(i, j) -= factor * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return rref(m).rank;
}

/**
 * A linear subspace of Scalar^ambient, stored as the nonzero rows of the
 * reduced row-echelon form of any spanning set.  Equal subspaces therefore
 * have identical representations.
 */
template <typename Scalar>
class Subspace
{
public:
    Subspace() = default;

    /// The zero subspace of the given ambient dimension.
    explicit Subspace(Index ambient) : ambient_(ambient), rows_(0, ambient) {}

    /// Span of the columns of `generators`.
    template <typename Derived>
    static Subspace spanOfColumns(const Eigen::MatrixBase<Derived>& generators)
    {
        return fromRows(generators.transpose());
    }

    /// Span of the rows of `generators`.
    template <typename Derived>
    static Subspace fromRows(const Eigen::MatrixBase<Derived>& generators)
    {
        Subspace s(generators.cols());
        auto red = rref(generators);
        s.rows_ = red.reduced.topRows(red.rank);
        return s;
    }

    static Subspace full(Index ambient)
    {
        return fromRows(MatrixX<Scalar>::Identity(ambient, ambient));
    }

    Index ambientDim() const { return ambient_; }
    Index dim() const { return rows_.rows(); }
    bool isZeroSpace() const { return rows_.rows() == 0; }

    /// Canonical basis as rows (reduced row-echelon form).
    const MatrixX<Scalar>& rowBasis() const { return rows_; }

    /// Canonical basis as columns of an ambient x dim matrix.
    MatrixX<Scalar> basis() const { return rows_.transpose(); }

    template <typename Derived>
    bool contains(const Eigen::MatrixBase<Derived>& v) const
    {
        if (v.size() != ambient_)
            throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
        MatrixX<Scalar> stacked(rows_.rows() + 1, ambient_);
        stacked.topRows(rows_.rows()) = rows_;
        stacked.row(rows_.rows()) = v.transpose();
        return rank(stacked) == rows_.rows();
    }

    bool operator==(const Subspace& other) const
    {
        return ambient_ == other.ambient_ && rows_.rows() == other.rows_.rows() && rows_ == other.rows_;
    }
    bool operator!=(const Subspace& other) const { return !(*this == other); }

private:
    Index ambient_ = 0;
    MatrixX<Scalar> rows_;
};

using SubspaceQ = Subspace<Rational>;

namespace detail {
template <typename Scalar>
void requireSameAmbient(const Subspace<Scalar>& a, const Subspace<Scalar>& b, const char* what)
{
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
}
} // namespace detail

/// Null space {x : m x = 0}.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Index cols = m.cols();
    auto red = rref(m);
    std::vector<bool> isPivot(cols, false);
    for (Index p : red.pivots)
        isPivot[p] = true;

    MatrixX<Scalar> gens(cols, cols - red.rank);
    gens.setZero();
    Index g = 0;
    for (Index free = 0; free < cols; ++free)
    {
        if (isPivot[free])
            continue;
        gens(free, g) = Scalar(1);
        for (Index r = 0; r < red.rank; ++r)
            gens(red.pivots[r], g) = -red.reduced(r, free);
        ++g;
    }
    return Subspace<Scalar>::spanOfColumns(gens);
}

/// Column space of m.
template <typename Derived>
Subspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m)
{
    return Subspace<typename Derived::Scalar>::spanOfColumns(m);
}

/// Image of a subspace under a linear map.
template <typename Derived, typename Scalar>
Subspace<Scalar> imageOf(const Eigen::MatrixBase<Derived>& m, const Subspace<Scalar>& s)
{
    if (m.cols() != s.ambientDim())
        throw std::invalid_argument("imageOf: map domain does not match subspace ambient");
    if (s.dim() == 0)
        return Subspace<Scalar>(m.rows());
    return image(m * s.basis());
}

/// Preimage {x : m x in s}.
template <typename Derived, typename Scalar>
Subspace<Scalar> preimage(const Eigen::MatrixBase<Derived>& m, const Subspace<Scalar>& s)
{
    if (m.rows() != s.ambientDim())
        throw std::invalid_argument("preimage: map codomain does not match subspace ambient");
    // x is in the preimage iff m x is annihilated by every functional vanishing on s.
    Subspace<Scalar> annihilator = kernel(s.rowBasis());
    MatrixX<Scalar> functionals = annihilator.rowBasis();
    if (functionals.rows() == 0)
        return Subspace<Scalar>::full(m.cols());
    return kernel(functionals * m);
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b)
{
    detail::requireSameAmbient(a, b, "sum");
    MatrixX<Scalar> stacked(a.dim() + b.dim(), a.ambientDim());
    stacked.topRows(a.dim()) = a.rowBasis();
    stacked.bottomRows(b.dim()) = b.rowBasis();
    return Subspace<Scalar>::fromRows(stacked);
}

/**
 * Intersection via the kernel of [A | -B]: every solution (x, y) gives the
 * common vector A x = B y.
 */
template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b)
{
    detail::requireSameAmbient(a, b, "intersect");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace<Scalar>(a.ambientDim());
    const MatrixX<Scalar> A = a.basis();
    const MatrixX<Scalar> B = b.basis();
    MatrixX<Scalar> joined(a.ambientDim(), A.cols() + B.cols());
    joined.leftCols(A.cols()) = A;
    joined.rightCols(B.cols()) = -B;
    Subspace<Scalar> rel = kernel(joined);
    if (rel.dim() == 0)
        return Subspace<Scalar>(a.ambientDim());
    return image(A * rel.basis().topRows(A.cols()));
}

template <typename Scalar>
bool subspaceEqual(const Subspace<Scalar>& a, const Subspace<Scalar>& b)
{
    detail::requireSameAmbient(a, b, "subspaceEqual");
    return a == b;
}

template <typename Scalar>
bool isSubspaceOf(const Subspace<Scalar>& inner, const Subspace<Scalar>& outer)
{
    detail::requireSameAmbient(inner, outer, "isSubspaceOf");
    return sum(inner, outer).dim() == outer.dim();
}

/**
 * Some x with m x = rhs, or nullopt when the system is inconsistent.  Free
 * variables are set to zero, so the result is deterministic.
 */
template <typename DerivedM, typename DerivedV>
std::optional<VectorX<typename DerivedM::Scalar>>
solve(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedV>& rhs)
{
    using Scalar = typename DerivedM::Scalar;
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length does not match rows");
    MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = rhs;
    auto red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == m.cols())
        return std::nullopt;
    VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
    for (Index r = 0; r < red.rank; ++r)
        x(red.pivots[r]) = red.reduced(r, m.cols());
    return x;
}

/// Inverse of a square invertible matrix; throws if singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix is not square");
    const Index n = m.rows();
    MatrixX<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
    auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
        throw std::domain_error("inverse: matrix is singular");
    return red.reduced.rightCols(n);
}

template <typename Scalar>
struct QuotientMap
{
    /// dim(total/sub) x ambient; kills sub, coordinates on the chosen complement.
    MatrixX<Scalar> projection;
    /// ambient x dim(total/sub); columns are complement representatives.
    MatrixX<Scalar> lift;
    Index dim() const { return lift.cols(); }
};

/**
 * Coordinates on total/sub.  The complement of sub inside total is formed
 * from the canonical basis vectors of total that are not already in the
 * span, and the ambient space is completed with unit vectors, so the
 * projection is an honest matrix on the whole ambient space that vanishes
 * on sub and on the chosen ambient complement of total.
 */
template <typename Scalar>
QuotientMap<Scalar> quotientMap(const Subspace<Scalar>& sub, const Subspace<Scalar>& total)
{
    detail::requireSameAmbient(sub, total, "quotientMap");
    if (!isSubspaceOf(sub, total))
        throw std::domain_error("quotientMap: sub is not contained in total");

    const Index n = total.ambientDim();
    std::vector<VectorX<Scalar>> cols;
    MatrixX<Scalar> current = sub.rowBasis();
    auto tryAdd = [&](const VectorX<Scalar>& v) {
        MatrixX<Scalar> stacked(current.rows() + 1, n);
        stacked.topRows(current.rows()) = current;
        stacked.row(current.rows()) = v.transpose();
        if (rank(stacked) > current.rows())
        {
            current = std::move(stacked);
            return true;
        }
        return false;
    };

    MatrixX<Scalar> totalBasis = total.basis();
    std::vector<VectorX<Scalar>> complement;
    for (Index j = 0; j < totalBasis.cols(); ++j)
        if (tryAdd(totalBasis.col(j)))
            complement.push_back(totalBasis.col(j));
    for (Index j = 0; j < n && current.rows() < n; ++j)
        tryAdd(VectorX<Scalar>::Unit(n, j));

    // current rows: [sub basis; complement; ambient completion]
    const Index q = static_cast<Index>(complement.size());
    MatrixX<Scalar> change = current.transpose();
    MatrixX<Scalar> inv = inverse(change);

    QuotientMap<Scalar> out;
    out.projection = inv.middleRows(sub.dim(), q);
    out.lift.resize(n, q);
    for (Index j = 0; j < q; ++j)
        out.lift.col(j) = complement[j];
    return out;
}

} // namespace lefschetz

#endif // LEFSCHETZ_EXACTLIN_HPP
