/**
 * Finite h-type modules over the orthosymplectic superalgebra spanned by
 * e, f, h (even, degrees 2, -2, 0) and d, delta (odd, degrees 1, -1).
 *
 * A module is a graded vector space V = V_{-n} + ... + V_n with one matrix
 * per operator and source weight.  All verdicts (cohomology, Lefschetz
 * maps, Brylinski, d-delta and primitive d+ d- lemmas) are computed here
 * exactly; nothing in this file knows about differential forms.
 */
#ifndef LEFSCHETZ_SUPERALG_HPP
#define LEFSCHETZ_SUPERALG_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/exactlin.hpp"

namespace lefschetz {

enum class Op { E, F, H, D, Delta };

/// Weight shift of each operator.
constexpr int degree(Op op)
{
    switch (op)
    {
        case Op::E: return 2;
        case Op::F: return -2;
        case Op::H: return 0;
        case Op::D: return 1;
        case Op::Delta: return -1;
    }
    return 0;
}

/// Parity: d and delta are odd.
constexpr bool isOdd(Op op) { return op == Op::D || op == Op::Delta; }

const char* opName(Op op);

class ShapeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class GradedModule
{
public:
    GradedModule() = default;

    /// Zero operators on weight spaces of the given dimensions (dims[i + n] = dim V_i).
    GradedModule(int n, std::vector<Index> dims);

    int maxWeight() const { return n_; }
    /// Dimension of V_w, zero outside [-n, n].
    Index dim(int w) const;
    Index totalDim() const;
    bool inRange(int w) const { return w >= -n_ && w <= n_; }

    /// Matrix of op : V_w -> V_{w + degree(op)}; a correctly shaped zero-size matrix out of range.
    Matrix map(Op op, int w) const;
    void setMap(Op op, int w, Matrix m);

    /// op^k : V_w -> V_{w + k degree(op)}.
    Matrix power(Op op, int k, int w) const;

    bool hasStar() const { return !star_.empty(); }
    /// star : V_w -> V_{-w}.
    Matrix star(int w) const;
    void setStar(int w, Matrix m);
    void clearStar() { star_.clear(); }

    void setName(std::string name) { name_ = std::move(name); }
    const std::string& name() const { return name_; }

private:
    std::size_t slot(int w) const { return static_cast<std::size_t>(w + n_); }

    int n_ = 0;
    std::vector<Index> dims_;
    std::array<std::vector<Matrix>, 5> ops_;
    std::vector<Matrix> star_;
    std::string name_;
};

struct Violation
{
    std::string relation;
    int weight = 0;
    /// Index of a basis vector of V_weight on which the relation fails.
    Index witness = 0;
};

enum class VerdictKind { Isomorphism, SurjectionOnly, InjectionOnly, Neither, ZeroMap };

const char* verdictName(VerdictKind kind);

struct Verdict
{
    VerdictKind kind = VerdictKind::Isomorphism;
    Index rank = 0;
    Index sourceDim = 0;
    Index targetDim = 0;

    static Verdict classify(Index rank, Index sourceDim, Index targetDim);
    bool isIsomorphism() const { return kind == VerdictKind::Isomorphism; }
    bool isSurjective() const { return rank == targetDim; }
    bool isInjective() const { return rank == sourceDim; }
};

struct Cohomology
{
    SubspaceQ cycles;
    SubspaceQ boundaries;
    /// dim(H) x dim(V_w); kills boundaries.
    Matrix projection;
    /// dim(V_w) x dim(H); columns are cocycle representatives.
    Matrix lift;
    Index dim() const { return lift.cols(); }
};

struct BrylinskiFlags
{
    bool surjective = false;
    bool injective = false;
    bool isomorphism() const { return surjective && injective; }
};

/// The three subspaces of the d-delta lemma on one weight space and their comparison.
struct DdeltaFlags
{
    /// im(d) cap ker(delta) == im(delta) cap ker(d)
    bool exactCoclosedEqualsCoexactClosed = false;
    /// im(delta) cap ker(d) == im(d delta)
    bool coexactClosedEqualsImDdelta = false;
    /// im(d) cap ker(delta) == im(d delta)
    bool exactCoclosedEqualsImDdelta = false;
    bool holds() const
    {
        return exactCoclosedEqualsCoexactClosed && coexactClosedEqualsImDdelta &&
               exactCoclosedEqualsImDdelta;
    }
};

struct PrimitiveComponent
{
    /// v contributes e^k p with p primitive.
    int k = 0;
    /// Weight of p.
    int weight = 0;
    Vector primitive;
};

struct LefschetzReport
{
    int n = 0;
    /// betti[w + n] = dim H^w(V, d).
    std::vector<Index> betti;
    /// lefschetzMaps[k] is [e^k] : H^{-k} -> H^k, k = 0..n.
    std::vector<Verdict> lefschetzMaps;
    std::optional<int> sLefschetz;
    /// Reading of the weak d-delta lemma with the second clause over ker(d).
    std::optional<int> weakDegree;
    /// Literal reading (second clause over ker(delta)).
    std::optional<int> weakDegreeLiteral;
    std::vector<BrylinskiFlags> brylinski;
    std::vector<DdeltaFlags> ddelta;
    bool deeDeebar = false;
    bool deeDeebarLiteral = false;
    bool consistent = false;
    /// Smallest t with [e^k] an isomorphism for every k >= t, k >= 1 (n + 1 if [e^n] is not).
    int lefschetzThreshold = 0;
    /// Smallest t with the Brylinski isomorphism at every weight |w| >= t.
    int brylinskiThreshold = 0;
    bool brylinskiProfileMatches() const { return lefschetzThreshold == brylinskiThreshold; }

    bool lefschetz() const { return sLefschetz && *sLefschetz == 0; }
    bool brylinskiEverywhere() const;
    bool ddeltaEverywhere() const;
};

// Relations ---------------------------------------------------------------

/// The twelve defining graded-commutator relations plus h = w id.
std::vector<Violation> verifyRelations(const GradedModule& m);

/// [e^i, delta] = i e^{i-1} d, [h, e^i] = 2i e^i and bijectivity of e^i : V_{-i} -> V_i.
std::vector<Violation> derivedRelationsCheck(const GradedModule& m);

/// Throws ShapeError if any stored matrix disagrees with the declared weight dimensions.
void checkShapes(const GradedModule& m);

// Cohomology and Lefschetz maps -----------------------------------------

Cohomology cohomology(const GradedModule& m, int w);
Verdict lefschetzMap(const GradedModule& m, int k);
/// Smallest s >= 0 with [e^k] an isomorphism for every k > s; nullopt if [e^n] is not.
std::optional<int> sLefschetzDegree(const GradedModule& m);

// Harmonic theory ------------------------------------------------------

SubspaceQ harmonicSubspace(const GradedModule& m, int w);
BrylinskiFlags brylinskiVerdict(const GradedModule& m, int w);
DdeltaFlags ddeltaVerdict(const GradedModule& m, int w);

/**
 * Weak d-delta degree: smallest s in [0, n-1] such that the triple equality
 * holds on V_w for -n <= w <= -s-1 and im(d) cap ker(delta) = im(d delta)
 * holds on V_{-s}.  When `literal` is set the triple equality uses
 * im(delta) cap ker(delta) in place of im(delta) cap ker(d).
 */
std::optional<int> weakDegree(const GradedModule& m, bool literal = false);

// Primitive decomposition ------------------------------------------------

/// ker(f) on V_w; throws std::invalid_argument for w > 0.
SubspaceQ primitiveBasis(const GradedModule& m, int w);
std::vector<PrimitiveComponent> primitiveDecompose(const GradedModule& m, int w, const Vector& v);
struct PrimitiveProjection
{
    int k = 0;
    int weight = 0;
    /// V_w -> P_weight, the primitive component multiplied by e^k.
    Matrix component;
};

/// The decomposition as matrices, one per nonzero primitive block.
std::vector<PrimitiveProjection> primitiveProjections(const GradedModule& m, int w);
/// Vectors of V_w all of whose primitive components are killed by d+ and d-.
SubspaceQ symphonicSubspace(const GradedModule& m, int w);
/// Inverse of primitiveDecompose.
Vector reassemble(const GradedModule& m, int w, const std::vector<PrimitiveComponent>& parts);

/// d+ of a primitive vector in P_w (lands in P_{w+1}).
Vector dee(const GradedModule& m, int w, const Vector& primitive);
/// d- of a primitive vector in P_w (lands in P_{w-1}).
Vector deebar(const GradedModule& m, int w, const Vector& primitive);
/// Extensions of d+ and d- to all of V_w as matrices V_w -> V_{w+1} and V_w -> V_{w-1}.
Matrix deeMatrix(const GradedModule& m, int w);
Matrix deebarMatrix(const GradedModule& m, int w);

struct DeeDeebarDetail
{
    /// Indexed by k + n for k = -n..0: im(d+) cap ker(d-) = im(d+ d-) inside P_k.
    std::vector<bool> plusKernelMinus;
    /// im(d-) cap ker(d+) = im(d+ d-) inside P_k.
    std::vector<bool> minusKernelPlus;
};

DeeDeebarDetail deeDeebarDetail(const GradedModule& m);
/// Both equalities on every P_k, k = -n..0.
bool deeDeebarVerdict(const GradedModule& m);
/// The first equality for k = -n..-1 and the second at k = 0 only.
bool deeDeebarLiteralVerdict(const GradedModule& m);

// Star and sl2 -----------------------------------------------------------

std::vector<Violation> starDualityCheck(const GradedModule& m);

class PreconditionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Induced sl2 action on H(V, d) of a Lefschetz module; throws PreconditionError otherwise.
bool sl2OnCohomologyCheck(const GradedModule& m);

/// Assemble every verdict; throws RelationError if the module violates the defining relations.
LefschetzReport fullReport(const GradedModule& m);

class RelationError : public std::runtime_error
{
public:
    RelationError(const std::string& what, std::vector<Violation> violations)
        : std::runtime_error(what), violations_(std::move(violations))
    {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

} // namespace lefschetz

#endif // LEFSCHETZ_SUPERALG_HPP
