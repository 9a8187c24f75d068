#include "lefschetz/cealg.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>
#include <sstream>

namespace lefschetz {

// Basis bookkeeping ------------------------------------------------------

int popcount(Mask m)
{
    return std::popcount(m);
}

int wedgeSign(Mask a, Mask b)
{
    if (a & b)
        return 0;
    int swaps = 0;
    for (Mask rest = b; rest; rest &= rest - 1)
    {
        const int bit = std::countr_zero(rest);
        const Mask above = ~((Mask(2) << bit) - 1);
        swaps += std::popcount(a & above);
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

namespace {

std::vector<int> indicesOf(Mask m)
{
    std::vector<int> out;
    for (Mask rest = m; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

bool lexLess(Mask a, Mask b)
{
    auto ia = indicesOf(a);
    auto ib = indicesOf(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

struct BasisTable
{
    std::vector<std::vector<Mask>> byDegree;
    std::vector<Index> position;
};

const BasisTable& basisTable(int dim)
{
    static std::mutex mutex;
    static std::map<int, BasisTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(dim);
    if (it != cache.end())
        return it->second;
    BasisTable t;
    t.byDegree.resize(static_cast<std::size_t>(dim) + 1);
    t.position.assign(std::size_t(1) << dim, 0);
    for (Mask m = 0; m < (Mask(1) << dim); ++m)
        t.byDegree[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    for (auto& list : t.byDegree)
    {
        std::sort(list.begin(), list.end(), lexLess);
        for (std::size_t i = 0; i < list.size(); ++i)
            t.position[list[i]] = static_cast<Index>(i);
    }
    return cache.emplace(dim, std::move(t)).first->second;
}

void requireDim(int dim)
{
    if (dim < 0 || dim > kMaxGenerators)
        throw std::invalid_argument("exterior algebra supports 0.." + std::to_string(kMaxGenerators) +
                                    " generators");
}

} // namespace

const std::vector<Mask>& degreeBasis(int dim, int k)
{
    requireDim(dim);
    static const std::vector<Mask> empty;
    if (k < 0 || k > dim)
        return empty;
    return basisTable(dim).byDegree[static_cast<std::size_t>(k)];
}

Index basisPosition(int dim, Mask mask)
{
    requireDim(dim);
    return basisTable(dim).position.at(mask);
}

// Form -------------------------------------------------------------------

Form Form::unit(int dim)
{
    return monomial(dim, 0);
}

Form Form::monomial(int dim, Mask mask, Rational coeff)
{
    Form f(dim);
    f.add(mask, coeff);
    return f;
}

Form Form::fromVector(int dim, int degree, const Vector& coords)
{
    const auto& basis = degreeBasis(dim, degree);
    if (static_cast<std::size_t>(coords.size()) != basis.size())
        throw std::invalid_argument("Form::fromVector: coordinate length mismatch");
    Form f(dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        f.add(basis[i], coords(static_cast<Index>(i)));
    return f;
}

int Form::degree() const
{
    if (terms_.empty())
        return -1;
    const int k = std::popcount(terms_.begin()->first);
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) != k)
            throw std::logic_error("Form::degree: form is not homogeneous");
    return k;
}

Rational Form::coeff(Mask mask) const
{
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add(Mask mask, const Rational& c)
{
    if (mask >> dim_)
        throw std::out_of_range("Form::add: basis element outside the generator range");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& other)
{
    for (const auto& [mask, c] : other.terms_)
        add(mask, c);
    return *this;
}

Form& Form::operator-=(const Form& other)
{
    for (const auto& [mask, c] : other.terms_)
        add(mask, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c)
{
    if (c == 0)
    {
        terms_.clear();
        return *this;
    }
    for (auto& [mask, v] : terms_)
        v *= c;
    return *this;
}

Vector Form::toVector(int k) const
{
    const auto& basis = degreeBasis(dim_, k);
    Vector v = Vector::Zero(static_cast<Index>(basis.size()));
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) == k)
            v(basisPosition(dim_, mask)) = c;
    return v;
}

Form operator+(Form a, const Form& b)
{
    a += b;
    return a;
}

Form operator-(Form a, const Form& b)
{
    a -= b;
    return a;
}

Form operator*(const Rational& c, Form a)
{
    a *= c;
    return a;
}

Form wedge(const Form& a, const Form& b)
{
    Form out(std::max(a.dim(), b.dim()));
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
        {
            const int s = wedgeSign(ma, mb);
            if (s != 0)
                out.add(ma | mb, Rational(s) * ca * cb);
        }
    return out;
}

Form contract(int generator, const Form& a)
{
    if (generator < 1 || generator > a.dim())
        throw std::out_of_range("contract: generator index out of range");
    const int bit = generator - 1;
    const Mask below = (Mask(1) << bit) - 1;
    Form out(a.dim());
    for (const auto& [mask, c] : a.terms())
    {
        if (!(mask & (Mask(1) << bit)))
            continue;
        const int sign = (std::popcount(mask & below) % 2 == 0) ? 1 : -1;
        out.add(mask & ~(Mask(1) << bit), Rational(sign) * c);
    }
    return out;
}

// Parsing ----------------------------------------------------------------

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at column " + std::to_string(position + 1)), position_(position)
{}

namespace {

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) { skipSpace(); }

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    void advance()
    {
        ++pos_;
        skipSpace();
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        if (atEnd())
            throw ParseError(what + ", found end of input", pos_);
        throw ParseError(what + ", found '" + std::string(1, text_[pos_]) + "'", pos_);
    }

    struct Pair
    {
        int first;
        int second;
        std::size_t position;
    };

    struct Term
    {
        long long coeff;
        Pair pair;
    };

    /// entry "0" yields an empty list.
    std::vector<Term> expression(bool allowZero)
    {
        std::vector<Term> terms;
        if (allowZero && peek() == '0')
        {
            const std::size_t start = pos_;
            advance();
            if (atEnd() || peek() == ',' || peek() == ')')
                return terms;
            throw ParseError("index digits must be in 1..9", start);
        }
        int sign = 1;
        if (peek() == '+' || peek() == '-')
        {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        terms.push_back(term(sign));
        while (peek() == '+' || peek() == '-')
        {
            sign = peek() == '-' ? -1 : 1;
            advance();
            terms.push_back(term(sign));
        }
        return terms;
    }

private:
    void skipSpace()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    /// Maximal digit run; whitespace between digits is ignored.
    std::pair<std::string, std::vector<std::size_t>> digits()
    {
        std::string run;
        std::vector<std::size_t> where;
        while (std::isdigit(static_cast<unsigned char>(peek())))
        {
            run.push_back(peek());
            where.push_back(pos_);
            advance();
        }
        return {run, where};
    }

    Term term(int sign)
    {
        const std::size_t start = pos_;
        auto [run, where] = digits();
        if (run.empty())
            fail("expected an index pair");
        long long coeff = 1;
        if (peek() == 'x' || peek() == '*')
        {
            if (run.size() > 12)
                throw ParseError("coefficient too large", start);
            coeff = std::stoll(run);
            if (coeff == 0)
                throw ParseError("coefficient must be positive", start);
            advance();
            const std::size_t pairStart = pos_;
            auto [pairRun, pairWhere] = digits();
            if (pairRun.empty())
                fail("expected an index pair after coefficient");
            return {sign * coeff, makePair(pairRun, pairWhere, pairStart)};
        }
        return {sign * coeff, makePair(run, where, start)};
    }

    static Pair makePair(const std::string& run, const std::vector<std::size_t>& where, std::size_t start)
    {
        if (run.size() != 2)
            throw ParseError("expected a two-digit index pair, got '" + run + "'", start);
        const int a = run[0] - '0';
        const int b = run[1] - '0';
        if (a == 0)
            throw ParseError("index digits must be in 1..9", where[0]);
        if (b == 0)
            throw ParseError("index digits must be in 1..9", where[1]);
        if (a == b)
            throw ParseError("repeated index in pair '" + run + "'", start);
        return {a, b, start};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Form assemble(const std::vector<Parser::Term>& terms, int dim)
{
    Form f(dim);
    for (const auto& t : terms)
    {
        for (int idx : {t.pair.first, t.pair.second})
            if (idx > dim)
                throw ParseError("index " + std::to_string(idx) + " exceeds dimension " +
                                     std::to_string(dim),
                                 t.pair.position);
        const int lo = std::min(t.pair.first, t.pair.second);
        const int hi = std::max(t.pair.first, t.pair.second);
        const Mask mask = (Mask(1) << (lo - 1)) | (Mask(1) << (hi - 1));
        const long long sign = t.pair.first < t.pair.second ? 1 : -1;
        f.add(mask, Rational(sign * t.coeff));
    }
    return f;
}

} // namespace

LiePresentation parseSignature(std::string_view text)
{
    Parser parser(text);
    parser.expect('(');
    std::vector<std::vector<Parser::Term>> entries;
    entries.push_back(parser.expression(true));
    while (parser.peek() == ',')
    {
        parser.advance();
        entries.push_back(parser.expression(true));
    }
    parser.expect(')');
    if (!parser.atEnd())
        parser.fail("unexpected trailing input");
    if (entries.size() > static_cast<std::size_t>(kMaxGenerators))
        throw ParseError("at most " + std::to_string(kMaxGenerators) + " generators are supported", 0);

    LiePresentation p;
    p.dim = static_cast<int>(entries.size());
    for (const auto& e : entries)
        p.diff.push_back(assemble(e, p.dim));
    return p;
}

Form parseForm(std::string_view text, int dim)
{
    requireDim(dim);
    Parser parser(text);
    auto terms = parser.expression(true);
    if (!parser.atEnd())
        parser.fail("unexpected trailing input");
    return assemble(terms, dim);
}

std::string renderForm(const Form& form)
{
    if (form.isZero())
        return "0";
    std::vector<std::pair<Mask, Rational>> terms(form.terms().begin(), form.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return lexLess(a.first, b.first); });
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, c] : terms)
    {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        if (mag != 1)
            out << mag << 'x';
        for (int i : indicesOf(mask))
            out << (i + 1);
        first = false;
    }
    return out.str();
}

std::string renderSignature(const LiePresentation& p)
{
    std::string out = "(";
    for (int i = 0; i < p.dim; ++i)
    {
        if (i)
            out += ',';
        out += renderForm(p.diff[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

// Chevalley-Eilenberg ------------------------------------------------------

Form ceDifferential(const LiePresentation& p, const Form& a)
{
    Form out(p.dim);
    for (const auto& [mask, c] : a.terms())
    {
        auto idx = indicesOf(mask);
        Mask left = 0;
        for (std::size_t j = 0; j < idx.size(); ++j)
        {
            const Mask self = Mask(1) << idx[j];
            const Mask right = mask & ~left & ~self;
            Form piece = wedge(wedge(Form::monomial(p.dim, left), p.diff[static_cast<std::size_t>(idx[j])]),
                               Form::monomial(p.dim, right));
            piece *= (j % 2 == 0) ? c : Rational(-c);
            out += piece;
            left |= self;
        }
    }
    return out;
}

namespace {

template <typename Fn>
Matrix operatorMatrix(int dim, int k, int targetDegree, Fn&& apply)
{
    const auto& src = degreeBasis(dim, k);
    const auto& dst = degreeBasis(dim, targetDegree);
    Matrix m = Matrix::Zero(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j)
    {
        Form image = apply(Form::monomial(dim, src[j]));
        for (const auto& [mask, c] : image.terms())
            m(basisPosition(dim, mask), static_cast<Index>(j)) = c;
    }
    return m;
}

} // namespace

Matrix ceDifferential(const LiePresentation& p, int k)
{
    return operatorMatrix(p.dim, k, k + 1, [&](const Form& f) { return ceDifferential(p, f); });
}

std::vector<int> checkDSquared(const LiePresentation& p)
{
    std::vector<int> bad;
    for (int i = 0; i < p.dim; ++i)
        if (!ceDifferential(p, p.diff[static_cast<std::size_t>(i)]).isZero())
            bad.push_back(i + 1);
    return bad;
}

Index bettiNumber(const LiePresentation& p, int k)
{
    if (k < 0 || k > p.dim)
        return 0;
    const Index dimK = static_cast<Index>(degreeBasis(p.dim, k).size());
    const Index out = rank(ceDifferential(p, k));
    const Index in = k > 0 ? rank(ceDifferential(p, k - 1)) : 0;
    return dimK - out - in;
}

std::vector<Index> bettiNumbers(const LiePresentation& p)
{
    std::vector<Index> b;
    for (int k = 0; k <= p.dim; ++k)
        b.push_back(bettiNumber(p, k));
    return b;
}

// Symplectic structure ---------------------------------------------------

SymplecticStructure checkSymplectic(const LiePresentation& p, const Form& omega)
{
    if (p.dim % 2 != 0)
        throw ValidationError("symplectic form requires even dimension, got " + std::to_string(p.dim));
    if (omega.dim() != p.dim)
        throw ValidationError("form and presentation have different dimensions");
    if (!omega.isZero() && omega.degree() != 2)
        throw ValidationError("symplectic form must have degree 2");
    if (!ceDifferential(p, omega).isZero())
        throw ValidationError("form " + renderForm(omega) + " is not closed");

    SymplecticStructure s;
    s.omega = omega;
    s.m = p.dim / 2;
    const Index n = p.dim;
    s.gram = Matrix::Zero(n, n);
    for (const auto& [mask, c] : omega.terms())
    {
        auto idx = indicesOf(mask);
        s.gram(idx[0], idx[1]) = c;
        s.gram(idx[1], idx[0]) = -c;
    }

    Form power = Form::unit(p.dim);
    Rational factorial(1);
    for (int i = 1; i <= s.m; ++i)
    {
        power = wedge(power, omega);
        factorial *= i;
    }
    s.volume = power.coeff((Mask(1) << p.dim) - 1) / factorial;
    if (s.volume == 0)
        throw ValidationError("form " + renderForm(omega) + " is degenerate");
    s.lambda = inverse(s.gram);
    return s;
}

Rational bivectorPairing(const SymplecticStructure& s, int a, int b)
{
    return s.lambda(b - 1, a - 1);
}

Rational formPairing(const SymplecticStructure& s, Mask a, Mask b)
{
    auto ia = indicesOf(a);
    auto ib = indicesOf(b);
    if (ia.size() != ib.size())
        return Rational(0);
    const Index k = static_cast<Index>(ia.size());
    Matrix g(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            g(i, j) = bivectorPairing(s, ia[static_cast<std::size_t>(i)] + 1, ib[static_cast<std::size_t>(j)] + 1);
    // exact determinant through elimination
    Rational det(1);
    for (Index c = 0; c < k; ++c)
    {
        Index pivot = c;
        while (pivot < k && g(pivot, c) == 0)
            ++pivot;
        if (pivot == k)
            return Rational(0);
        if (pivot != c)
        {
            g.row(pivot).swap(g.row(c));
            det = -det;
        }
        det *= g(c, c);
        for (Index r = c + 1; r < k; ++r)
        {
            if (g(r, c) == 0)
                continue;
            Rational factor = g(r, c) / g(c, c);
            g.row(r) -= factor * g.row(c);
        }
    }
    return det;
}

Form applyLambda(const SymplecticStructure& s, const Form& a)
{
    const int dim = 2 * s.m;
    Form out(dim);
    for (int x = 1; x <= dim; ++x)
        for (int y = x + 1; y <= dim; ++y)
        {
            Rational c = bivectorPairing(s, x, y);
            if (c == 0)
                continue;
            out += c * contract(y, contract(x, a));
        }
    return out;
}

Form applyStar(const SymplecticStructure& s, const Form& a)
{
    const int dim = 2 * s.m;
    const Mask full = (Mask(1) << dim) - 1;
    Form out(dim);
    for (const auto& [mb, cb] : a.terms())
    {
        const int k = std::popcount(mb);
        for (Mask ma : degreeBasis(dim, k))
        {
            Rational pair = formPairing(s, ma, mb);
            if (pair == 0)
                continue;
            const Mask comp = full & ~ma;
            out.add(comp, cb * pair * s.volume / Rational(wedgeSign(ma, comp)));
        }
    }
    return out;
}

Matrix wedgeMatrix(const Form& f, int k)
{
    const int r = f.isZero() ? 0 : f.degree();
    return operatorMatrix(f.dim(), k, k + r, [&](const Form& a) { return wedge(f, a); });
}

Matrix lambdaMatrix(const SymplecticStructure& s, int k)
{
    return operatorMatrix(2 * s.m, k, k - 2, [&](const Form& a) { return applyLambda(s, a); });
}

Matrix starMatrix(const SymplecticStructure& s, int k)
{
    return operatorMatrix(2 * s.m, k, 2 * s.m - k, [&](const Form& a) { return applyStar(s, a); });
}

// Module assembly ----------------------------------------------------------

namespace {

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out = Matrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
        {
            if (a(i, j) == 0)
                continue;
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    return out;
}

GradedModule assembleModule(const SymplecticStructure& s, const LiePresentation& p, const Representation* r)
{
    const int m = s.m;
    const int dim = p.dim;
    const Index fiber = r ? r->fiberDim : 1;
    std::vector<Index> dims;
    for (int k = 0; k <= dim; ++k)
        dims.push_back(static_cast<Index>(degreeBasis(dim, k).size()) * fiber);
    GradedModule mod(m, dims);
    const Matrix id = Matrix::Identity(fiber, fiber);

    for (int k = 0; k <= dim; ++k)
    {
        const int w = k - m;
        mod.setMap(Op::H, w, Rational(w) * Matrix::Identity(mod.dim(w), mod.dim(w)));
        if (k + 2 <= dim)
            mod.setMap(Op::E, w, kron(wedgeMatrix(s.omega, k), id));
        if (k >= 2)
            mod.setMap(Op::F, w, kron(lambdaMatrix(s, k), id));
        if (k + 1 <= dim)
        {
            Matrix d = kron(ceDifferential(p, k), id);
            if (r)
                for (int j = 0; j < dim; ++j)
                    d += kron(wedgeMatrix(Form::monomial(dim, Mask(1) << j), k),
                              r->action[static_cast<std::size_t>(j)]);
            mod.setMap(Op::D, w, d);
        }
    }
    for (int w = -m; w <= m; ++w)
        mod.setMap(Op::Delta, w,
                   mod.map(Op::F, w + 1) * mod.map(Op::D, w) - mod.map(Op::D, w - 2) * mod.map(Op::F, w));
    return mod;
}

} // namespace

GradedModule buildOperators(const SymplecticStructure& s, const LiePresentation& p)
{
    if (auto bad = checkDSquared(p); !bad.empty())
        throw ValidationError("d^2 != 0 on generator " + std::to_string(bad.front()));
    GradedModule mod = assembleModule(s, p, nullptr);
    for (int k = 0; k <= p.dim; ++k)
    {
        const int w = k - s.m;
        const bool flip = (s.m * w) % 2 != 0;
        Matrix st = starMatrix(s, k);
        mod.setStar(w, flip ? Matrix(-st) : st);
    }
    return mod;
}

void checkFlat(const LiePresentation& p, const Representation& r)
{
    if (r.action.size() != static_cast<std::size_t>(p.dim))
        throw ValidationError("representation must give one matrix per generator");
    for (const auto& a : r.action)
        if (a.rows() != r.fiberDim || a.cols() != r.fiberDim)
            throw ValidationError("representation matrices must be fiber_dim x fiber_dim");
    for (int i = 0; i < p.dim; ++i)
        for (int j = i + 1; j < p.dim; ++j)
        {
            const Mask pair = (Mask(1) << i) | (Mask(1) << j);
            const auto& ri = r.action[static_cast<std::size_t>(i)];
            const auto& rj = r.action[static_cast<std::size_t>(j)];
            Matrix curvature = ri * rj - rj * ri;
            for (int k = 0; k < p.dim; ++k)
            {
                Rational c = p.diff[static_cast<std::size_t>(k)].coeff(pair);
                if (c != 0)
                    curvature += c * r.action[static_cast<std::size_t>(k)];
            }
            if (!isZeroMatrix(curvature))
                throw FlatnessError("representation is not flat on generator pair (" + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")",
                                    i + 1, j + 1);
        }
}

Representation trivialRepresentation(const LiePresentation& p, int fiberDim)
{
    Representation r;
    r.fiberDim = fiberDim;
    r.action.assign(static_cast<std::size_t>(p.dim), Matrix::Zero(fiberDim, fiberDim));
    return r;
}

GradedModule withCoefficients(const SymplecticStructure& s, const LiePresentation& p, const Representation& r)
{
    if (auto bad = checkDSquared(p); !bad.empty())
        throw ValidationError("d^2 != 0 on generator " + std::to_string(bad.front()));
    checkFlat(p, r);
    return assembleModule(s, p, &r);
}

} // namespace lefschetz
