#include "lefschetz/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "lefschetz/catalog.hpp"
#include "lefschetz/random.hpp"

namespace lefschetz {

namespace {

class Recorder
{
public:
    Recorder(std::string suite, std::string subject) { result_.suite = std::move(suite); result_.subject = std::move(subject); }

    /// Records the first failure only.
    void check(bool ok, const std::string& what)
    {
        if (!ok && result_.passed)
        {
            result_.passed = false;
            result_.detail = what;
        }
    }

    SuiteResult done() { return result_; }

private:
    SuiteResult result_;
};

std::string describe(const std::vector<Violation>& v)
{
    if (v.empty())
        return {};
    std::ostringstream out;
    out << v.front().relation << " at weight " << v.front().weight << " (basis vector " << v.front().witness << ")";
    if (v.size() > 1)
        out << " and " << v.size() - 1 << " more";
    return out.str();
}

std::string at(const std::string& what, int w)
{
    return what + " at weight " + std::to_string(w);
}

SubspaceQ imageInto(const GradedModule& m, Op op, int w)
{
    const int src = w - degree(op);
    if (!m.inRange(src))
        return SubspaceQ(m.dim(w));
    return image(m.map(op, src));
}

Vector randomVector(std::mt19937_64& rng, Index size)
{
    Vector v(size);
    for (Index i = 0; i < size; ++i)
        v(i) = Rational(static_cast<long long>(rng() % 7) - 3);
    return v;
}

} // namespace

std::vector<SuiteResult> moduleSuites(const GradedModule& m, const std::string& subject, std::uint64_t seed)
{
    std::vector<SuiteResult> out;
    const int n = m.maxWeight();
    std::mt19937_64 rng(seed);

    {
        Recorder r("I-1", subject);
        auto v = verifyRelations(m);
        r.check(v.empty(), describe(v));
        out.push_back(r.done());
        if (!v.empty())
            return out;
    }
    {
        Recorder r("I-2", subject);
        for (int i = 0; i <= n; ++i)
        {
            Matrix ei = m.power(Op::E, i, -i);
            r.check(m.dim(-i) == m.dim(i) && rank(ei) == m.dim(i), at("e^" + std::to_string(i) + " not bijective", -i));
            r.check(isSubspaceOf(imageOf(ei, harmonicSubspace(m, -i)), harmonicSubspace(m, i)),
                    at("e^" + std::to_string(i) + " leaves the harmonic subspace", -i));
        }
        out.push_back(r.done());
    }
    {
        Recorder r("I-3", subject);
        auto v = derivedRelationsCheck(m);
        r.check(v.empty(), describe(v));
        out.push_back(r.done());
    }
    {
        Recorder r("I-4", subject);
        for (int w = -n; w <= 0; ++w)
        {
            const Index expected = m.dim(w) - m.dim(w - 2);
            r.check(primitiveBasis(m, w).dim() == expected, at("primitive dimension", w));
        }
        for (int w = -n; w <= n; ++w)
        {
            std::vector<PrimitiveProjection> parts;
            try
            {
                parts = primitiveProjections(m, w);
            }
            catch (const std::logic_error& e)
            {
                r.check(false, e.what());
                continue;
            }
            // sum of e^k composed with the projections is the identity
            Matrix total = Matrix::Zero(m.dim(w), m.dim(w));
            for (const auto& c : parts)
            {
                r.check(c.weight <= 0 && c.k <= -c.weight && isZeroMatrix(m.map(Op::F, c.weight) * c.component),
                        at("non-primitive component", w));
                total += m.power(Op::E, c.k, c.weight) * c.component;
            }
            r.check(total == Matrix::Identity(m.dim(w), m.dim(w)), at("reassembly differs", w));

            Vector v = randomVector(rng, m.dim(w));
            r.check(reassemble(m, w, primitiveDecompose(m, w, v)) == v, at("reassembly of a random vector differs", w));
        }
        out.push_back(r.done());
    }
    {
        Recorder r("I-5", subject);
        for (int w = -n; w <= 0; ++w)
        {
            Matrix basis = primitiveBasis(m, w).basis();
            if (basis.cols() == 0)
                continue;
            Matrix dv = m.map(Op::D, w) * basis;
            if (m.inRange(w + 1))
                for (const auto& c : primitiveProjections(m, w + 1))
                    r.check(c.k <= 1 || isZeroMatrix(c.component * dv),
                            at("d of a primitive has a component e^" + std::to_string(c.k), w));
            Matrix plus = deeMatrix(m, w) * basis;
            Matrix minus = deebarMatrix(m, w) * basis;
            Matrix sum = m.inRange(w + 1) ? Matrix(plus) : Matrix::Zero(0, basis.cols());
            if (m.inRange(w - 1) && m.inRange(w + 1))
                sum += m.map(Op::E, w - 1) * minus;
            r.check(!m.inRange(w + 1) || sum == dv, at("d != d+ + e d-", w));
            r.check(m.map(Op::Delta, w) * basis == Rational(1 - w) * minus, at("delta != (1-w) d-", w));
            if (m.inRange(w - 1))
                r.check(m.map(Op::D, w - 1) * m.map(Op::Delta, w) * basis == Rational(1 - w) * deeMatrix(m, w - 1) * minus,
                        at("d delta != (1-w) d+ d-", w));
        }
        out.push_back(r.done());
    }
    {
        Recorder r("I-6", subject);
        for (int w = -n; w <= n; ++w)
            r.check(harmonicSubspace(m, w) == symphonicSubspace(m, w), at("harmonic and symphonic subspaces differ", w));
        out.push_back(r.done());
    }
    {
        Recorder r("I-7", subject);
        LefschetzReport rep = fullReport(m);
        r.check(rep.consistent, "four verdicts disagree: lefschetz " + std::to_string(rep.lefschetz()) + ", brylinski " +
                                    std::to_string(rep.brylinskiEverywhere()) + ", d-delta " +
                                    std::to_string(rep.ddeltaEverywhere()) + ", d+d- " + std::to_string(rep.deeDeebar));
        r.check(!rep.sLefschetz || !rep.weakDegree || *rep.sLefschetz == *rep.weakDegree,
                "weak degree differs from s-degree");
        r.check(rep.sLefschetz.has_value() == rep.weakDegree.has_value(), "weak degree defined without s-degree or vice versa");
        r.check(rep.brylinskiProfileMatches(), "brylinski threshold " + std::to_string(rep.brylinskiThreshold) +
                                                   " != lefschetz threshold " + std::to_string(rep.lefschetzThreshold));
        if (rep.lefschetz())
            r.check(sl2OnCohomologyCheck(m), "sl2 relations fail on cohomology");
        out.push_back(r.done());
    }
    if (m.hasStar())
    {
        Recorder r("I-8", subject);
        auto v = starDualityCheck(m);
        r.check(v.empty(), describe(v));
        out.push_back(r.done());
    }
    {
        Recorder r("I-9", subject);
        for (int w = -n; w <= n; ++w)
        {
            SubspaceQ imDdelta = image(m.map(Op::D, w - 1) * m.map(Op::Delta, w));
            SubspaceQ exactCoclosed = intersect(imageInto(m, Op::D, w), kernel(m.map(Op::Delta, w)));
            SubspaceQ coexactClosed = intersect(imageInto(m, Op::Delta, w), kernel(m.map(Op::D, w)));
            r.check(isSubspaceOf(imDdelta, exactCoclosed), at("im(d delta) not inside im(d) cap ker(delta)", w));
            r.check(isSubspaceOf(imDdelta, coexactClosed), at("im(d delta) not inside im(delta) cap ker(d)", w));
        }
        out.push_back(r.done());
    }
    return out;
}

std::vector<SuiteResult> geometricSuites(const LiePresentation& p, const SymplecticStructure& s,
                                         const GradedModule& m, const std::string& subject)
{
    std::vector<SuiteResult> out;
    const int dim = p.dim;
    const int half = s.m;
    // per-degree matrices, indexed from degree -2 so out-of-range lookups give zero-size blocks
    const int lo = -2, hi = dim + 2;
    std::vector<Matrix> Ls, Lams, Ds, Stars, StarDeltas;
    for (int k = lo; k <= hi; ++k)
    {
        Ls.push_back(wedgeMatrix(s.omega, k));
        Lams.push_back(lambdaMatrix(s, k));
        Ds.push_back(ceDifferential(p, k));
        Stars.push_back(starMatrix(s, k));
    }
    auto slot = [&](int k) { return static_cast<std::size_t>(std::clamp(k, lo, hi) - lo); };
    for (int k = lo; k <= hi; ++k)
    {
        // (-1)^{k+1} star d star on Lambda^k
        Matrix out = Stars[slot(dim - k + 1)] * Ds[slot(dim - k)] * Stars[slot(k)];
        StarDeltas.push_back(k % 2 == 0 ? Matrix(-out) : out);
    }
    auto starDelta = [&](int k) -> const Matrix& { return StarDeltas[slot(k)]; };
    {
        Recorder r("G-1", subject);
        auto rel = verifyRelations(m);
        auto der = derivedRelationsCheck(m);
        r.check(rel.empty(), describe(rel));
        r.check(der.empty(), describe(der));
        out.push_back(r.done());
    }
    {
        Recorder r("G-2", subject);
        for (int k = 0; k <= dim; ++k)
        {
            const Matrix& st = Stars[slot(k)];
            r.check(Stars[slot(dim - k)] * st == Matrix::Identity(st.cols(), st.cols()),
                    "star star != id in degree " + std::to_string(k));
            if (k >= 2)
                r.check(Lams[slot(k)] == Stars[slot(dim - k + 2)] * Ls[slot(dim - k)] * st,
                        "Lambda != star L star in degree " + std::to_string(k));
        }
        out.push_back(r.done());
    }
    {
        Recorder r("G-3", subject);
        for (int k = 0; k <= dim; ++k)
            r.check(m.map(Op::Delta, k - half) == starDelta(k),
                    "[Lambda,d] != (-1)^(k+1) star d star in degree " + std::to_string(k));
        out.push_back(r.done());
    }
    {
        Recorder r("G-4", subject);
        auto L = [&](int k) -> const Matrix& { return Ls[slot(k)]; };
        auto Lam = [&](int k) -> const Matrix& { return Lams[slot(k)]; };
        auto D = [&](int k) -> const Matrix& { return Ds[slot(k)]; };
        for (int k = 0; k <= dim; ++k)
        {
            const std::string deg = " in degree " + std::to_string(k);
            const Index size = static_cast<Index>(degreeBasis(dim, k).size());
            r.check(L(k + 1) * D(k) == D(k + 2) * L(k), "[L,d] != 0" + deg);
            r.check(Lam(k - 1) * starDelta(k) == starDelta(k - 2) * Lam(k), "[Lambda,d*] != 0" + deg);
            r.check(Matrix(L(k - 1) * starDelta(k) - starDelta(k + 2) * L(k)) == D(k), "[L,d*] != d" + deg);
            r.check(Matrix(Lam(k + 1) * D(k) - D(k - 2) * Lam(k)) == starDelta(k), "[Lambda,d] != d*" + deg);
            r.check(Matrix(D(k - 1) * starDelta(k) + starDelta(k + 1) * D(k)) == Matrix::Zero(size, size),
                    "[d,d*] != 0" + deg);
            r.check(isZeroMatrix(starDelta(k - 1) * starDelta(k)), "d* d* != 0" + deg);
            r.check(Matrix(L(k - 2) * Lam(k) - Lam(k + 2) * L(k)) ==
                        Matrix(Rational(k - half) * Matrix::Identity(size, size)),
                    "[L,Lambda] != H" + deg);
        }
        r.check(applyLambda(s, s.omega) == Form::monomial(dim, 0, Rational(half)), "Lambda omega != m");
        out.push_back(r.done());
    }
    {
        Recorder r("G-5", subject);
        const std::string sig = renderSignature(p);
        try
        {
            LiePresentation again = parseSignature(sig);
            bool same = again.dim == p.dim;
            for (int i = 0; same && i < p.dim; ++i)
                same = again.diff[static_cast<std::size_t>(i)] == p.diff[static_cast<std::size_t>(i)];
            r.check(same, "signature changes under render and parse: " + sig);
            r.check(renderSignature(again) == sig, "signature rendering not idempotent: " + sig);
            const std::string om = renderForm(s.omega);
            Form back = parseForm(om, dim);
            r.check(back == s.omega, "form changes under render and parse: " + om);
            r.check(renderForm(back) == om, "form rendering not idempotent: " + om);
        }
        catch (const ParseError& e)
        {
            r.check(false, std::string("rendered text does not parse: ") + e.what());
        }
        out.push_back(r.done());
    }
    {
        Recorder r("G-6", subject);
        bool abelian = true;
        for (const auto& f : p.diff)
            abelian = abelian && f.isZero();
        if (abelian)
        {
            auto betti = bettiNumbers(p);
            Index binom = 1;
            for (int k = 0; k <= dim; ++k)
            {
                r.check(betti[static_cast<std::size_t>(k)] == binom, "betti differs from binomial in degree " + std::to_string(k));
                binom = binom * (dim - k) / (k + 1);
            }
        }
        // Betti numbers from the module agree with the direct complex computation
        auto direct = bettiNumbers(p);
        for (int k = 0; k <= dim; ++k)
            r.check(cohomology(m, k - half).dim() == direct[static_cast<std::size_t>(k)],
                    "module cohomology differs from complex cohomology in degree " + std::to_string(k));
        out.push_back(r.done());
    }
    return out;
}

std::size_t VerifySummary::failures() const
{
    std::size_t f = 0;
    for (const auto& r : results)
        f += r.passed ? 0 : 1;
    return f;
}

VerifySummary runVerification(std::size_t count, std::uint64_t seed)
{
    VerifySummary summary;
    auto runOne = [&](const LiePresentation& p, const SymplecticStructure& s, const std::string& subject,
                      std::uint64_t vectorSeed) {
        GradedModule m = buildOperators(s, p);
        for (auto& r : geometricSuites(p, s, m, subject))
            summary.results.push_back(std::move(r));
        for (auto& r : moduleSuites(m, subject, vectorSeed))
            summary.results.push_back(std::move(r));
        ++summary.subjects;
    };

    std::uint64_t index = 0;
    for (const auto& e : builtinEntries())
    {
        ++index;
        try
        {
            BuiltEntry b = buildEntry(e);
            runOne(b.presentation, b.structure, e.name, seed ^ index);
        }
        catch (const std::exception& ex)
        {
            summary.results.push_back({"build", e.name, e.suspect, ex.what()});
        }
    }
    PresentationGenerator gen(seed);
    for (std::size_t i = 0; i < count; ++i)
    {
        RandomPresentation rp = gen.next();
        const std::string subject =
            "random-" + std::to_string(i + 1) + " " + rp.signature + " omega " + rp.omega;
        runOne(rp.presentation, rp.structure, subject, seed + 7919 * (i + 1));
    }
    return summary;
}

std::string renderVerification(const VerifySummary& summary, std::size_t count, std::uint64_t seed)
{
    std::map<std::string, std::pair<std::size_t, std::size_t>> bySuite;
    for (const auto& r : summary.results)
    {
        auto& [pass, fail] = bySuite[r.suite];
        (r.passed ? pass : fail) += 1;
    }
    std::ostringstream out;
    out << "verify: " << summary.subjects << " modules (" << builtinEntries().size() << " builtin, " << count
        << " generated with seed " << seed << ")\n";
    for (const auto& [suite, counts] : bySuite)
        out << "  " << suite << "  " << (counts.second == 0 ? "PASS" : "FAIL") << "  " << counts.first << " passed, "
            << counts.second << " failed\n";
    for (const auto& r : summary.results)
    {
        if (r.passed)
            continue;
        out << "FAIL " << r.suite << " on " << r.subject << ": " << r.detail << "\n";
        const auto space = r.subject.find(' ');
        if (space != std::string::npos)
        {
            const auto omegaPos = r.subject.find(" omega ");
            out << "  reproduce: lefschetz analyze --signature '" << r.subject.substr(space + 1, omegaPos - space - 1)
                << "' --omega '" << r.subject.substr(omegaPos + 7) << "'\n";
        }
    }
    out << (summary.failures() == 0 ? "all suites passed\n" : std::to_string(summary.failures()) + " suite failures\n");
    return out.str();
}

} // namespace lefschetz
