#include "lefschetz/superalg.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace lefschetz {

const char* opName(Op op)
{
    switch (op)
    {
        case Op::E: return "e";
        case Op::F: return "f";
        case Op::H: return "h";
        case Op::D: return "d";
        case Op::Delta: return "delta";
    }
    return "?";
}

const char* verdictName(VerdictKind kind)
{
    switch (kind)
    {
        case VerdictKind::Isomorphism: return "isomorphism";
        case VerdictKind::SurjectionOnly: return "surjection";
        case VerdictKind::InjectionOnly: return "injection";
        case VerdictKind::Neither: return "neither";
        case VerdictKind::ZeroMap: return "zero";
    }
    return "?";
}

Verdict Verdict::classify(Index rank, Index sourceDim, Index targetDim)
{
    Verdict v;
    v.rank = rank;
    v.sourceDim = sourceDim;
    v.targetDim = targetDim;
    if (rank == sourceDim && rank == targetDim)
        v.kind = VerdictKind::Isomorphism;
    else if (rank == targetDim)
        v.kind = VerdictKind::SurjectionOnly;
    else if (rank == sourceDim)
        v.kind = VerdictKind::InjectionOnly;
    else if (rank == 0)
        v.kind = VerdictKind::ZeroMap;
    else
        v.kind = VerdictKind::Neither;
    return v;
}

// GradedModule -----------------------------------------------------------

GradedModule::GradedModule(int n, std::vector<Index> dims) : n_(n), dims_(std::move(dims))
{
    if (n < 0 || dims_.size() != static_cast<std::size_t>(2 * n + 1))
        throw ShapeError("GradedModule: expected 2n+1 weight dimensions");
    for (Op op : {Op::E, Op::F, Op::H, Op::D, Op::Delta})
    {
        auto& slots = ops_[static_cast<int>(op)];
        slots.resize(dims_.size());
        for (int w = -n_; w <= n_; ++w)
            slots[slot(w)] = Matrix::Zero(dim(w + degree(op)), dim(w));
    }
}

Index GradedModule::dim(int w) const
{
    return inRange(w) ? dims_[slot(w)] : 0;
}

Index GradedModule::totalDim() const
{
    Index total = 0;
    for (Index d : dims_)
        total += d;
    return total;
}

Matrix GradedModule::map(Op op, int w) const
{
    if (!inRange(w))
        return Matrix::Zero(dim(w + degree(op)), 0);
    return ops_[static_cast<int>(op)][slot(w)];
}

void GradedModule::setMap(Op op, int w, Matrix m)
{
    if (!inRange(w))
        throw ShapeError("GradedModule::setMap: weight out of range");
    if (m.rows() != dim(w + degree(op)) || m.cols() != dim(w))
    {
        std::ostringstream msg;
        msg << "GradedModule::setMap: " << opName(op) << " at weight " << w << " has shape "
            << m.rows() << "x" << m.cols() << ", expected " << dim(w + degree(op)) << "x" << dim(w);
        throw ShapeError(msg.str());
    }
    ops_[static_cast<int>(op)][slot(w)] = std::move(m);
}

Matrix GradedModule::power(Op op, int k, int w) const
{
    Matrix acc = Matrix::Identity(dim(w), dim(w));
    int cur = w;
    for (int i = 0; i < k; ++i)
    {
        acc = map(op, cur) * acc;
        cur += degree(op);
    }
    return acc;
}

Matrix GradedModule::star(int w) const
{
    if (!hasStar())
        throw std::logic_error("GradedModule::star: no star operator supplied");
    if (!inRange(w))
        return Matrix::Zero(0, 0);
    return star_[slot(w)];
}

void GradedModule::setStar(int w, Matrix m)
{
    if (!inRange(w))
        throw ShapeError("GradedModule::setStar: weight out of range");
    if (m.rows() != dim(-w) || m.cols() != dim(w))
        throw ShapeError("GradedModule::setStar: shape does not match V_w -> V_-w");
    if (star_.empty())
    {
        star_.resize(dims_.size());
        for (int u = -n_; u <= n_; ++u)
            star_[slot(u)] = Matrix::Zero(dim(-u), dim(u));
    }
    star_[slot(w)] = std::move(m);
}

// Relations --------------------------------------------------------------

namespace {

struct Relation
{
    const char* name;
    Op x;
    Op y;
    int coeff;
    std::optional<Op> rhs;
};

const std::array<Relation, 12> kRelations = {{
    {"[e,f]=h", Op::E, Op::F, 1, Op::H},
    {"[e,h]=-2e", Op::E, Op::H, -2, Op::E},
    {"[f,h]=2f", Op::F, Op::H, 2, Op::F},
    {"[e,d]=0", Op::E, Op::D, 0, std::nullopt},
    {"[f,d]=delta", Op::F, Op::D, 1, Op::Delta},
    {"[h,d]=d", Op::H, Op::D, 1, Op::D},
    {"[e,delta]=d", Op::E, Op::Delta, 1, Op::D},
    {"[f,delta]=0", Op::F, Op::Delta, 0, std::nullopt},
    {"[h,delta]=-delta", Op::H, Op::Delta, -1, Op::Delta},
    {"[d,d]=0", Op::D, Op::D, 0, std::nullopt},
    {"[d,delta]=0", Op::D, Op::Delta, 0, std::nullopt},
    {"[delta,delta]=0", Op::Delta, Op::Delta, 0, std::nullopt},
}};

/// Graded commutator XY - (-1)^{|X||Y|} YX on V_w.
Matrix gradedCommutator(const GradedModule& m, Op x, Op y, int w)
{
    Matrix xy = m.map(x, w + degree(y)) * m.map(y, w);
    Matrix yx = m.map(y, w + degree(x)) * m.map(x, w);
    if (isOdd(x) && isOdd(y))
        return xy + yx;
    return xy - yx;
}

std::optional<Index> firstNonzeroColumn(const Matrix& defect)
{
    for (Index j = 0; j < defect.cols(); ++j)
        for (Index i = 0; i < defect.rows(); ++i)
            if (!isZero(defect(i, j)))
                return j;
    return std::nullopt;
}

void record(std::vector<Violation>& out, const std::string& name, int w, const Matrix& defect)
{
    if (auto j = firstNonzeroColumn(defect))
        out.push_back({name, w, *j});
}

SubspaceQ kernelOf(const GradedModule& m, Op op, int w)
{
    return kernel(m.map(op, w));
}

/// Image of op landing in V_w, i.e. op applied to V_{w - degree(op)}.
SubspaceQ imageInto(const GradedModule& m, Op op, int w)
{
    const int src = w - degree(op);
    if (!m.inRange(src))
        return SubspaceQ(m.dim(w));
    return image(m.map(op, src));
}

} // namespace

void checkShapes(const GradedModule& m)
{
    for (Op op : {Op::E, Op::F, Op::H, Op::D, Op::Delta})
        for (int w = -m.maxWeight(); w <= m.maxWeight(); ++w)
        {
            Matrix a = m.map(op, w);
            if (a.rows() != m.dim(w + degree(op)) || a.cols() != m.dim(w))
                throw ShapeError(std::string("shape mismatch for ") + opName(op) + " at weight " +
                                 std::to_string(w));
        }
}

std::vector<Violation> verifyRelations(const GradedModule& m)
{
    checkShapes(m);
    std::vector<Violation> out;
    const int n = m.maxWeight();
    for (int w = -n; w <= n; ++w)
    {
        Matrix hDefect = m.map(Op::H, w) - Rational(w) * Matrix::Identity(m.dim(w), m.dim(w));
        record(out, "h=w", w, hDefect);

        for (const Relation& rel : kRelations)
        {
            Matrix defect = gradedCommutator(m, rel.x, rel.y, w);
            if (rel.rhs)
                defect -= Rational(rel.coeff) * m.map(*rel.rhs, w);
            record(out, rel.name, w, defect);
        }
    }
    return out;
}

std::vector<Violation> derivedRelationsCheck(const GradedModule& m)
{
    std::vector<Violation> out;
    const int n = m.maxWeight();
    for (int i = 1; i <= n; ++i)
    {
        for (int w = -n; w <= n; ++w)
        {
            // [e^i, delta] - i e^{i-1} d : V_w -> V_{w+2i-1}
            Matrix lhs = m.power(Op::E, i, w - 1) * m.map(Op::Delta, w) -
                         m.map(Op::Delta, w + 2 * i) * m.power(Op::E, i, w) -
                         Rational(i) * m.power(Op::E, i - 1, w + 1) * m.map(Op::D, w);
            record(out, "[e^" + std::to_string(i) + ",delta]=" + std::to_string(i) + "e^" +
                            std::to_string(i - 1) + "d",
                   w, lhs);

            Matrix ei = m.power(Op::E, i, w);
            Matrix hc = m.map(Op::H, w + 2 * i) * ei - ei * m.map(Op::H, w) - Rational(2 * i) * ei;
            record(out, "[h,e^" + std::to_string(i) + "]=" + std::to_string(2 * i) + "e^" +
                            std::to_string(i),
                   w, hc);
        }
    }
    for (int i = 0; i <= n; ++i)
    {
        const Index src = m.dim(-i);
        if (src != m.dim(i) || rank(m.power(Op::E, i, -i)) != src)
            out.push_back({"e^" + std::to_string(i) + " bijective", -i, 0});
    }
    return out;
}

// Cohomology -------------------------------------------------------------

Cohomology cohomology(const GradedModule& m, int w)
{
    Cohomology h;
    h.cycles = kernelOf(m, Op::D, w);
    h.boundaries = imageInto(m, Op::D, w);
    auto q = quotientMap(h.boundaries, h.cycles);
    h.projection = std::move(q.projection);
    h.lift = std::move(q.lift);
    return h;
}

Verdict lefschetzMap(const GradedModule& m, int k)
{
    if (k < 0 || k > m.maxWeight())
        throw std::out_of_range("lefschetzMap: k outside [0, n]");
    Cohomology src = cohomology(m, -k);
    Cohomology dst = cohomology(m, k);
    Matrix induced = dst.projection * m.power(Op::E, k, -k) * src.lift;
    return Verdict::classify(rank(induced), src.dim(), dst.dim());
}

std::optional<int> sLefschetzDegree(const GradedModule& m)
{
    const int n = m.maxWeight();
    if (!lefschetzMap(m, n).isIsomorphism())
        return std::nullopt;
    int s = n;
    while (s > 0 && lefschetzMap(m, s).isIsomorphism())
        --s;
    return s;
}

// Harmonic theory ------------------------------------------------------

SubspaceQ harmonicSubspace(const GradedModule& m, int w)
{
    return intersect(kernelOf(m, Op::D, w), kernelOf(m, Op::Delta, w));
}

BrylinskiFlags brylinskiVerdict(const GradedModule& m, int w)
{
    SubspaceQ harmonic = harmonicSubspace(m, w);
    SubspaceQ cycles = kernelOf(m, Op::D, w);
    SubspaceQ boundaries = imageInto(m, Op::D, w);
    SubspaceQ coclosedBelow = m.inRange(w - 1) ? kernelOf(m, Op::Delta, w - 1) : SubspaceQ(0);
    SubspaceQ subBoundaries =
        m.inRange(w - 1) ? imageOf(m.map(Op::D, w - 1), coclosedBelow) : SubspaceQ(m.dim(w));

    BrylinskiFlags flags;
    flags.surjective = sum(harmonic, boundaries) == cycles;
    flags.injective = intersect(harmonic, boundaries) == subBoundaries;
    return flags;
}

namespace {

struct DdeltaSpaces
{
    SubspaceQ exactCoclosed;
    SubspaceQ coexactClosed;
    SubspaceQ imDdelta;
    SubspaceQ coexact;
};

DdeltaSpaces ddeltaSpaces(const GradedModule& m, int w)
{
    DdeltaSpaces s;
    SubspaceQ exact = imageInto(m, Op::D, w);
    s.coexact = imageInto(m, Op::Delta, w);
    s.exactCoclosed = intersect(exact, kernelOf(m, Op::Delta, w));
    s.coexactClosed = intersect(s.coexact, kernelOf(m, Op::D, w));
    s.imDdelta = image(m.map(Op::D, w - 1) * m.map(Op::Delta, w));
    return s;
}

} // namespace

DdeltaFlags ddeltaVerdict(const GradedModule& m, int w)
{
    DdeltaSpaces s = ddeltaSpaces(m, w);
    DdeltaFlags f;
    f.exactCoclosedEqualsCoexactClosed = s.exactCoclosed == s.coexactClosed;
    f.coexactClosedEqualsImDdelta = s.coexactClosed == s.imDdelta;
    f.exactCoclosedEqualsImDdelta = s.exactCoclosed == s.imDdelta;
    return f;
}

std::optional<int> weakDegree(const GradedModule& m, bool literal)
{
    const int n = m.maxWeight();
    if (n == 0)
        return 0;
    auto firstClause = [&](int w) {
        DdeltaSpaces s = ddeltaSpaces(m, w);
        if (literal)
            return s.exactCoclosed == s.imDdelta && s.imDdelta == s.coexact;
        return s.exactCoclosed == s.imDdelta && s.imDdelta == s.coexactClosed;
    };
    auto secondClause = [&](int w) {
        DdeltaSpaces s = ddeltaSpaces(m, w);
        return s.exactCoclosed == s.imDdelta;
    };
    for (int s = 0; s <= n - 1; ++s)
    {
        bool ok = true;
        for (int w = -n; w <= -s - 1 && ok; ++w)
            ok = firstClause(w);
        if (ok)
            ok = secondClause(-s);
        if (ok)
            return s;
    }
    return std::nullopt;
}

// Primitive decomposition ------------------------------------------------

SubspaceQ primitiveBasis(const GradedModule& m, int w)
{
    if (w > 0)
        throw std::invalid_argument("primitiveBasis: primitive vectors live in nonpositive weights");
    return kernelOf(m, Op::F, w);
}

namespace {

/// Columns of `assembled` are e^k applied to a basis of P_{w-2k}, block by block.
struct PrimitiveFrame
{
    struct Block
    {
        int k;
        int weight;
        Matrix basis;
        Index offset;
        /// basis * (rows of coordinates for this block): V_w -> V_{weight}, the primitive component.
        Matrix component;
    };
    std::vector<Block> blocks;
    Matrix assembled;
    Matrix coordinates;

    const Block* find(int k) const
    {
        for (const auto& b : blocks)
            if (b.k == k)
                return &b;
        return nullptr;
    }
};

PrimitiveFrame primitiveFrame(const GradedModule& m, int w)
{
    PrimitiveFrame frame;
    const int n = m.maxWeight();
    std::vector<Matrix> images;
    Index offset = 0;
    for (int k = 0; w - 2 * k >= -n; ++k)
    {
        const int u = w - 2 * k;
        // e^k vanishes on P_u once k > -u
        if (u > 0 || k > -u)
            continue;
        Matrix basis = primitiveBasis(m, u).basis();
        if (basis.cols() == 0)
            continue;
        images.push_back(m.power(Op::E, k, u) * basis);
        frame.blocks.push_back({k, u, std::move(basis), offset, Matrix()});
        offset += images.back().cols();
    }
    frame.assembled.resize(m.dim(w), offset);
    Index col = 0;
    for (const Matrix& img : images)
    {
        frame.assembled.middleCols(col, img.cols()) = img;
        col += img.cols();
    }
    if (frame.assembled.rows() != frame.assembled.cols() ||
        rank(frame.assembled) != frame.assembled.cols())
        throw std::logic_error("primitive decomposition is not a direct sum at weight " +
                               std::to_string(w) + "; module violates the sl2 structure");
    frame.coordinates = inverse(frame.assembled);
    for (auto& b : frame.blocks)
        b.component = b.basis * frame.coordinates.middleRows(b.offset, b.basis.cols());
    return frame;
}

std::vector<PrimitiveComponent> decomposeWith(const PrimitiveFrame& frame, const Vector& v)
{
    std::vector<PrimitiveComponent> out;
    for (const auto& b : frame.blocks)
    {
        Vector p = b.component * v;
        if (!isZeroMatrix(p))
            out.push_back({b.k, b.weight, std::move(p)});
    }
    return out;
}

void requirePrimitive(const GradedModule& m, int w, const Vector& v)
{
    if (w > 0 || v.size() != m.dim(w) || !isZeroMatrix(m.map(Op::F, w) * v))
        throw std::invalid_argument("vector is not primitive at weight " + std::to_string(w));
}

/// Frames and the primitive d+ / d- matrices, computed once per weight.
class PrimitiveCalculus
{
public:
    explicit PrimitiveCalculus(const GradedModule& m) : m_(m) {}

    const PrimitiveFrame& frame(int w)
    {
        auto it = frames_.find(w);
        if (it == frames_.end())
            it = frames_.emplace(w, primitiveFrame(m_, w)).first;
        return it->second;
    }

    /// Primitive part of d on V_u (u <= 0): V_u -> V_{u+1} (plus) or V_{u-1} (minus).
    Matrix split(int u, bool plus)
    {
        const int shift = plus ? 1 : -1;
        if (!m_.inRange(u + 1) || m_.dim(u) == 0)
            return Matrix::Zero(m_.dim(u + shift), m_.dim(u));
        const auto* block = frame(u + 1).find(plus ? 0 : 1);
        if (!block)
            return Matrix::Zero(m_.dim(u + shift), m_.dim(u));
        return block->component * m_.map(Op::D, u);
    }

    Matrix extended(int w, bool plus)
    {
        const int shift = plus ? 1 : -1;
        Matrix out = Matrix::Zero(m_.dim(w + shift), m_.dim(w));
        if (m_.dim(w) == 0 || m_.dim(w + shift) == 0)
            return out;
        for (const auto& b : frame(w).blocks)
        {
            const int target = b.weight + shift;
            if (!m_.inRange(target))
                continue;
            out += m_.power(Op::E, b.k, target) * split(b.weight, plus) * b.component;
        }
        return out;
    }

private:
    const GradedModule& m_;
    std::map<int, PrimitiveFrame> frames_;
};

std::pair<Vector, Vector> splitDifferential(const GradedModule& m, int w, const Vector& v)
{
    requirePrimitive(m, w, v);
    PrimitiveCalculus calc(m);
    Vector plus = calc.split(w, true) * v;
    Vector minus = calc.split(w, false) * v;
    return {plus, minus};
}

} // namespace

std::vector<PrimitiveComponent> primitiveDecompose(const GradedModule& m, int w, const Vector& v)
{
    if (v.size() != m.dim(w))
        throw std::invalid_argument("primitiveDecompose: vector length does not match V_w");
    if (m.dim(w) == 0)
        return {};
    return decomposeWith(primitiveFrame(m, w), v);
}

std::vector<PrimitiveProjection> primitiveProjections(const GradedModule& m, int w)
{
    std::vector<PrimitiveProjection> out;
    if (m.dim(w) == 0)
        return out;
    for (auto& b : primitiveFrame(m, w).blocks)
        out.push_back({b.k, b.weight, std::move(b.component)});
    return out;
}

SubspaceQ symphonicSubspace(const GradedModule& m, int w)
{
    PrimitiveCalculus calc(m);
    const Index size = m.dim(w);
    if (size == 0)
        return SubspaceQ(0);
    std::vector<Matrix> rows;
    for (const auto& b : calc.frame(w).blocks)
    {
        rows.push_back(calc.split(b.weight, true) * b.component);
        rows.push_back(calc.split(b.weight, false) * b.component);
    }
    Index total = 0;
    for (const auto& r : rows)
        total += r.rows();
    Matrix stacked(total, size);
    Index at = 0;
    for (const auto& r : rows)
    {
        stacked.middleRows(at, r.rows()) = r;
        at += r.rows();
    }
    return kernel(stacked);
}

Vector reassemble(const GradedModule& m, int w, const std::vector<PrimitiveComponent>& parts)
{
    Vector v = Vector::Zero(m.dim(w));
    for (const auto& c : parts)
        v += m.power(Op::E, c.k, c.weight) * c.primitive;
    return v;
}

Vector dee(const GradedModule& m, int w, const Vector& primitive)
{
    return splitDifferential(m, w, primitive).first;
}

Vector deebar(const GradedModule& m, int w, const Vector& primitive)
{
    return splitDifferential(m, w, primitive).second;
}

Matrix deeMatrix(const GradedModule& m, int w)
{
    return PrimitiveCalculus(m).extended(w, true);
}

Matrix deebarMatrix(const GradedModule& m, int w)
{
    return PrimitiveCalculus(m).extended(w, false);
}

DeeDeebarDetail deeDeebarDetail(const GradedModule& m)
{
    const int n = m.maxWeight();
    PrimitiveCalculus calc(m);
    DeeDeebarDetail out;
    for (int k = -n; k <= 0; ++k)
    {
        SubspaceQ prim = primitiveBasis(m, k);
        const Index amb = m.dim(k);
        Matrix plusIn = m.inRange(k - 1) ? calc.extended(k - 1, true) : Matrix::Zero(amb, 0);
        Matrix minusIn = m.inRange(k + 1) ? calc.extended(k + 1, false) : Matrix::Zero(amb, 0);
        Matrix minusOut = calc.extended(k, false);
        Matrix plusOut = calc.extended(k, true);
        Matrix plusMinus = m.inRange(k - 1) ? Matrix(plusIn * minusOut) : Matrix::Zero(amb, amb);

        SubspaceQ imPlusMinus = intersect(image(plusMinus), prim);
        SubspaceQ plusSide = intersect(intersect(image(plusIn), prim), kernel(minusOut));
        SubspaceQ minusSide = intersect(intersect(image(minusIn), prim), kernel(plusOut));
        out.plusKernelMinus.push_back(plusSide == imPlusMinus);
        out.minusKernelPlus.push_back(minusSide == imPlusMinus);
    }
    return out;
}

bool deeDeebarVerdict(const GradedModule& m)
{
    DeeDeebarDetail detail = deeDeebarDetail(m);
    for (std::size_t i = 0; i < detail.plusKernelMinus.size(); ++i)
        if (!detail.plusKernelMinus[i] || !detail.minusKernelPlus[i])
            return false;
    return true;
}

bool deeDeebarLiteralVerdict(const GradedModule& m)
{
    const int n = m.maxWeight();
    DeeDeebarDetail detail = deeDeebarDetail(m);
    for (int k = -n; k <= -1; ++k)
        if (!detail.plusKernelMinus[static_cast<std::size_t>(k + n)])
            return false;
    return detail.minusKernelPlus[static_cast<std::size_t>(n)];
}

// Star -------------------------------------------------------------------

std::vector<Violation> starDualityCheck(const GradedModule& m)
{
    if (!m.hasStar())
        throw std::logic_error("starDualityCheck: module carries no star operator");
    std::vector<Violation> out;
    const int n = m.maxWeight();
    for (int w = -n; w <= n; ++w)
    {
        record(out, "star star = id", w,
               m.star(-w) * m.star(w) - Matrix::Identity(m.dim(w), m.dim(w)));

        if (m.inRange(w - 1))
        {
            const Rational sign = ((w + 1) % 2 == 0) ? Rational(1) : Rational(-1);
            Matrix viaStar = m.star(-w + 1) * m.map(Op::D, -w) * m.star(w);
            record(out, "delta = (-1)^(w+1) star d star", w, m.map(Op::Delta, w) - sign * viaStar);
        }

        if (imageOf(m.star(w), kernelOf(m, Op::D, w)) != kernelOf(m, Op::Delta, -w))
            out.push_back({"star(ker d) = ker delta", w, 0});
        if (imageOf(m.star(w), imageInto(m, Op::D, w)) != imageInto(m, Op::Delta, -w))
            out.push_back({"star(im d) = im delta", w, 0});

        // dim H^w(ker delta, d) against dim H^{-w}(ker d, delta)
        Index left = harmonicSubspace(m, w).dim();
        if (m.inRange(w - 1))
            left -= imageOf(m.map(Op::D, w - 1), kernelOf(m, Op::Delta, w - 1)).dim();
        Index right = harmonicSubspace(m, -w).dim();
        if (m.inRange(-w + 1))
            right -= imageOf(m.map(Op::Delta, -w + 1), kernelOf(m, Op::D, -w + 1)).dim();
        if (left != right)
            out.push_back({"dim H(ker delta, d) = dim H(ker d, delta)", w, 0});
    }
    return out;
}

// sl2 on cohomology ---------------------------------------------------------

bool sl2OnCohomologyCheck(const GradedModule& m)
{
    if (sLefschetzDegree(m) != 0)
        throw PreconditionError("sl2OnCohomologyCheck: module is not Lefschetz");
    const int n = m.maxWeight();

    std::vector<Cohomology> coh;
    for (int w = -n; w <= n; ++w)
        coh.push_back(cohomology(m, w));
    auto H = [&](int w) -> const Cohomology& { return coh[static_cast<std::size_t>(w + n)]; };

    for (int w = -n; w <= n; ++w)
    {
        DdeltaSpaces s = ddeltaSpaces(m, w);
        if (!isSubspaceOf(s.coexactClosed, s.imDdelta))
            return false;
    }

    // Induced e and f (f through harmonic representatives).
    std::vector<Matrix> E(2 * n + 1), F(2 * n + 1);
    for (int w = -n; w <= n; ++w)
    {
        const Cohomology& src = H(w);
        E[w + n] = m.inRange(w + 2) ? Matrix(H(w + 2).projection * m.map(Op::E, w) * src.lift)
                                    : Matrix::Zero(0, src.dim());
        if (!m.inRange(w - 2))
        {
            F[w + n] = Matrix::Zero(0, src.dim());
            continue;
        }
        SubspaceQ harmonic = harmonicSubspace(m, w);
        if (!isSubspaceOf(imageOf(m.map(Op::F, w), intersect(harmonic, src.boundaries)),
                          H(w - 2).boundaries))
            return false;

        Matrix hb = harmonic.basis();
        Matrix bb = src.boundaries.basis();
        Matrix joined(m.dim(w), hb.cols() + bb.cols());
        joined.leftCols(hb.cols()) = hb;
        joined.rightCols(bb.cols()) = bb;
        Matrix reps(m.dim(w), src.dim());
        for (Index j = 0; j < src.dim(); ++j)
        {
            auto x = solve(joined, Vector(src.lift.col(j)));
            if (!x)
                return false;
            reps.col(j) = hb * x->head(hb.cols());
        }
        F[w + n] = H(w - 2).projection * m.map(Op::F, w) * reps;
    }

    for (int w = -n; w <= n; ++w)
    {
        const Index dw = H(w).dim();
        Matrix ef = m.inRange(w - 2) ? Matrix(E[w - 2 + n] * F[w + n]) : Matrix::Zero(dw, dw);
        Matrix fe = m.inRange(w + 2) ? Matrix(F[w + 2 + n] * E[w + n]) : Matrix::Zero(dw, dw);
        if (!isZeroMatrix(ef - fe - Rational(w) * Matrix::Identity(dw, dw)))
            return false;
    }
    return true;
}

// Report -----------------------------------------------------------------

bool LefschetzReport::brylinskiEverywhere() const
{
    for (const auto& b : brylinski)
        if (!b.isomorphism())
            return false;
    return true;
}

bool LefschetzReport::ddeltaEverywhere() const
{
    for (const auto& d : ddelta)
        if (!d.holds())
            return false;
    return true;
}

LefschetzReport fullReport(const GradedModule& m)
{
    auto violations = verifyRelations(m);
    if (!violations.empty())
        throw RelationError("module violates the superalgebra relations", std::move(violations));

    LefschetzReport r;
    const int n = m.maxWeight();
    r.n = n;
    for (int w = -n; w <= n; ++w)
    {
        r.betti.push_back(cohomology(m, w).dim());
        r.brylinski.push_back(brylinskiVerdict(m, w));
        r.ddelta.push_back(ddeltaVerdict(m, w));
    }
    for (int k = 0; k <= n; ++k)
        r.lefschetzMaps.push_back(lefschetzMap(m, k));
    r.sLefschetz = sLefschetzDegree(m);
    r.weakDegree = weakDegree(m, false);
    r.weakDegreeLiteral = weakDegree(m, true);
    r.deeDeebar = deeDeebarVerdict(m);
    r.deeDeebarLiteral = deeDeebarLiteralVerdict(m);

    const bool lef = r.lefschetz();
    const bool bry = r.brylinskiEverywhere();
    const bool dd = r.ddeltaEverywhere();
    r.consistent = lef == bry && bry == dd && dd == r.deeDeebar;
    if (r.sLefschetz && r.weakDegree && *r.sLefschetz != *r.weakDegree)
        r.consistent = false;

    // [e^0] is the identity, so the Lefschetz threshold never needs to reach 0 through k = 0.
    r.lefschetzThreshold = n + 1;
    while (r.lefschetzThreshold > 1 && r.lefschetzMaps[r.lefschetzThreshold - 1].isIsomorphism())
        --r.lefschetzThreshold;
    if (r.lefschetzThreshold == 1)
        r.lefschetzThreshold = 0;
    r.brylinskiThreshold = n + 1;
    while (r.brylinskiThreshold > 0)
    {
        const int t = r.brylinskiThreshold - 1;
        if (!r.brylinski[t + n].isomorphism() || !r.brylinski[-t + n].isomorphism())
            break;
        --r.brylinskiThreshold;
    }
    return r;
}

} // namespace lefschetz
