/**
 * Exterior algebra of a Lie algebra given in signature notation, its
 * Chevalley-Eilenberg differential and the symplectic operators L, Lambda,
 * H, delta and star.  buildOperators packages them as a GradedModule with
 * form degree k placed at weight k - m.
 */
#ifndef LEFSCHETZ_CEALG_HPP
#define LEFSCHETZ_CEALG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/exactlin.hpp"
#include "lefschetz/superalg.hpp"

namespace lefschetz {

/// Bit i set means generator e^{i+1} is present.
using Mask = std::uint32_t;

constexpr int kMaxGenerators = 9;

int popcount(Mask m);
/// Sign of e^a ^ e^b relative to e^{a | b}; zero when a and b overlap.
int wedgeSign(Mask a, Mask b);
/// Degree-k basis of the exterior algebra on `dim` generators, lexicographic in index lists.
const std::vector<Mask>& degreeBasis(int dim, int k);
/// Position of `mask` inside degreeBasis(dim, popcount(mask)).
Index basisPosition(int dim, Mask mask);

/// Sparse element of the exterior algebra; zero coefficients are never stored.
class Form
{
public:
    Form() = default;
    explicit Form(int dim) : dim_(dim) {}
    static Form unit(int dim);
    static Form monomial(int dim, Mask mask, Rational coeff = Rational(1));
    static Form fromVector(int dim, int degree, const Vector& coords);

    int dim() const { return dim_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    /// -1 for the zero form; throws std::logic_error if not homogeneous.
    int degree() const;
    Rational coeff(Mask mask) const;

    void add(Mask mask, const Rational& c);
    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(const Rational& c);

    /// Coordinates in degreeBasis(dim, k); components of other degrees are ignored.
    Vector toVector(int k) const;

    friend bool operator==(const Form& a, const Form& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

private:
    int dim_ = 0;
    std::map<Mask, Rational> terms_;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator*(const Rational& c, Form a);

Form wedge(const Form& a, const Form& b);
/// Interior product with the dual basis vector X_j (1-based).
Form contract(int generator, const Form& a);

struct LiePresentation
{
    int dim = 0;
    /// diff[i] = d e^{i+1}, a 2-form.
    std::vector<Form> diff;
};

class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string& message, std::size_t position);
    /// 0-based character offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

LiePresentation parseSignature(std::string_view text);
Form parseForm(std::string_view text, int dim);
/// Canonical text: pairs in lexicographic order, scaled terms as `2x34`, zero as `0`.
std::string renderForm(const Form& form);
std::string renderSignature(const LiePresentation& p);

/// d : Lambda^k -> Lambda^{k+1} in the degree bases.
Matrix ceDifferential(const LiePresentation& p, int k);
Form ceDifferential(const LiePresentation& p, const Form& a);
/// 1-based generators i with d(d e^i) != 0.
std::vector<int> checkDSquared(const LiePresentation& p);
Index bettiNumber(const LiePresentation& p, int k);
std::vector<Index> bettiNumbers(const LiePresentation& p);

class ValidationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct SymplecticStructure
{
    Form omega;
    /// omega = sum_{a<b} gram(a,b) e^a ^ e^b, gram antisymmetric.
    Matrix gram;
    /// gram * lambda = identity; the dual bivector pairs e^a, e^b to lambda(b, a).
    Matrix lambda;
    int m = 0;
    /// Coefficient of e^{1..2m} in omega^m / m!.
    Rational volume;
};

/// Throws ValidationError for odd dimension, a form that is not a closed nondegenerate 2-form.
SymplecticStructure checkSymplectic(const LiePresentation& p, const Form& omega);

/// Value of the dual bivector on (e^a, e^b), 1-based.
Rational bivectorPairing(const SymplecticStructure& s, int a, int b);
/// Determinant extension of the bivector pairing to k-forms.
Rational formPairing(const SymplecticStructure& s, Mask a, Mask b);

Form applyLambda(const SymplecticStructure& s, const Form& a);
Form applyStar(const SymplecticStructure& s, const Form& a);

/// Left multiplication by `f` (homogeneous of degree r) : Lambda^k -> Lambda^{k+r}.
Matrix wedgeMatrix(const Form& f, int k);
/// Lambda : Lambda^k -> Lambda^{k-2}.
Matrix lambdaMatrix(const SymplecticStructure& s, int k);
/// star : Lambda^k -> Lambda^{2m-k}.
Matrix starMatrix(const SymplecticStructure& s, int k);

/// The symplectic module on Lambda g*; the stored star is (-1)^{m w} times the form star on weight w.
GradedModule buildOperators(const SymplecticStructure& s, const LiePresentation& p);

struct Representation
{
    int fiberDim = 0;
    /// action[i] is the matrix of X_{i+1} on the fiber.
    std::vector<Matrix> action;
};

class FlatnessError : public ValidationError
{
public:
    FlatnessError(const std::string& what, int first, int second)
        : ValidationError(what), first_(first), second_(second)
    {}
    /// 1-based generator pair with nonzero curvature.
    std::pair<int, int> pair() const { return {first_, second_}; }

private:
    int first_;
    int second_;
};

/// Throws FlatnessError naming the first generator pair whose curvature is nonzero.
void checkFlat(const LiePresentation& p, const Representation& r);
Representation trivialRepresentation(const LiePresentation& p, int fiberDim = 1);

/// Module on Lambda g* (x) E with the coupled differential; carries no star.
GradedModule withCoefficients(const SymplecticStructure& s, const LiePresentation& p,
                              const Representation& r);

} // namespace lefschetz

#endif // LEFSCHETZ_CEALG_HPP
