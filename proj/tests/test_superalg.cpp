#include <catch_amalgamated.hpp>

#include "lefschetz/catalog.hpp"
#include "lefschetz/random.hpp"
#include "lefschetz/superalg.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;

namespace {

GradedModule builtin(const std::string& name)
{
    for (const auto& e : builtinEntries())
        if (e.name == name)
            return buildEntry(e).module;
    throw std::runtime_error("no builtin " + name);
}

Matrix scalar(long long x)
{
    return Matrix::Constant(1, 1, Rational(x));
}

/// Irreducible sl2 module of highest weight n with d = delta = 0.
GradedModule irreducible(int n)
{
    std::vector<Index> dims(static_cast<std::size_t>(2 * n + 1), 0);
    for (int w = -n; w <= n; w += 2)
        dims[static_cast<std::size_t>(w + n)] = 1;
    GradedModule m(n, dims);
    long long a = 0;
    for (int w = n; w >= -n; w -= 2)
    {
        a += w;
        if (w > -n)
            m.setMap(Op::F, w, scalar(a));
        if (w < n)
            m.setMap(Op::E, w, scalar(1));
        m.setMap(Op::H, w, scalar(w));
    }
    return m;
}

Vector unit(Index size, Index i)
{
    return Vector::Unit(size, i);
}

} // namespace

TEST_CASE("verdict classification")
{
    CHECK(Verdict::classify(2, 2, 2).kind == VerdictKind::Isomorphism);
    CHECK(Verdict::classify(0, 0, 0).kind == VerdictKind::Isomorphism);
    CHECK(Verdict::classify(1, 2, 1).kind == VerdictKind::SurjectionOnly);
    CHECK(Verdict::classify(0, 1, 0).kind == VerdictKind::SurjectionOnly);
    CHECK(Verdict::classify(1, 1, 2).kind == VerdictKind::InjectionOnly);
    CHECK(Verdict::classify(2, 3, 4).kind == VerdictKind::Neither);
    CHECK(Verdict::classify(0, 2, 2).kind == VerdictKind::ZeroMap);
}

TEST_CASE("irreducible sl2 modules with zero differential")
{
    for (int n : {0, 1, 2, 3, 4})
    {
        GradedModule m = irreducible(n);
        CHECK(verifyRelations(m).empty());
        CHECK(derivedRelationsCheck(m).empty());
        LefschetzReport r = fullReport(m);
        CHECK(r.lefschetz());
        CHECK(r.consistent);
        CHECK(r.deeDeebar);
        CHECK(sl2OnCohomologyCheck(m));
        // one primitive vector, at the lowest weight
        for (int w = -n; w <= 0; ++w)
            CHECK(primitiveBasis(m, w).dim() == (w == -n ? 1 : 0));
    }
}

TEST_CASE("a wrong f is caught by the relations")
{
    GradedModule m = irreducible(2);
    m.setMap(Op::F, 2, scalar(3));
    auto v = verifyRelations(m);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().relation == "[e,f]=h");
    CHECK_THROWS_AS(fullReport(m), RelationError);
}

TEST_CASE("dropping delta breaks [f,d]=delta at weight 0")
{
    GradedModule m = builtin("kt4");
    for (int w = -2; w <= 2; ++w)
        m.setMap(Op::Delta, w, Matrix::Zero(m.dim(w - 1), m.dim(w)));
    auto v = verifyRelations(m);
    bool found = false;
    for (const auto& x : v)
        found = found || (x.relation == "[f,d]=delta" && x.weight == 0);
    CHECK(found);
}

TEST_CASE("Kodaira-Thurston report")
{
    GradedModule m = builtin("kt4");
    LefschetzReport r = fullReport(m);
    CHECK(r.betti == std::vector<Index>{1, 3, 4, 3, 1});
    CHECK(r.lefschetzMaps[1].kind == VerdictKind::Neither);
    CHECK(r.lefschetzMaps[1].rank == 2);
    CHECK(r.lefschetzMaps[1].sourceDim == 3);
    CHECK(r.lefschetzMaps[2].kind == VerdictKind::Isomorphism);
    CHECK(r.sLefschetz == 1);
    CHECK(r.weakDegree == 1);
    CHECK_FALSE(r.brylinskiEverywhere());
    CHECK_FALSE(r.ddeltaEverywhere());
    CHECK_FALSE(r.deeDeebar);
    CHECK(r.consistent);
    CHECK(r.lefschetzThreshold == 2);
    CHECK(r.brylinskiThreshold == 2);
    CHECK_THROWS_AS(sl2OnCohomologyCheck(m), PreconditionError);
}

TEST_CASE("abelian report")
{
    for (const char* name : {"abelian2", "abelian4", "abelian6"})
    {
        GradedModule m = builtin(name);
        LefschetzReport r = fullReport(m);
        CHECK(r.lefschetz());
        CHECK(r.brylinskiEverywhere());
        CHECK(r.ddeltaEverywhere());
        CHECK(r.deeDeebar);
        CHECK(r.weakDegree == 0);
        CHECK(sl2OnCohomologyCheck(m));
        CHECK(starDualityCheck(m).empty());
    }
}

TEST_CASE("the nonabelian two-dimensional algebra is not Lefschetz")
{
    LefschetzReport r = fullReport(builtin("nonabelian2"));
    CHECK(r.betti == std::vector<Index>{1, 1, 0});
    CHECK(r.lefschetzMaps[1].kind == VerdictKind::SurjectionOnly);
    CHECK_FALSE(r.sLefschetz);
    CHECK_FALSE(r.weakDegree);
    CHECK_FALSE(r.deeDeebar);
    CHECK(r.consistent);
}

TEST_CASE("primitive decomposition of e12 in R^4")
{
    GradedModule m = builtin("abelian4");
    // weight 0 is Lambda^2 with basis 12,13,14,23,24,34
    Vector v = unit(6, 0);
    auto parts = primitiveDecompose(m, 0, v);
    REQUIRE(parts.size() == 2);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
    Vector p0 = Vector::Zero(6);
    p0(0) = Rational(1, 2);
    p0(5) = Rational(-1, 2);
    CHECK(parts[0].k == 0);
    CHECK(parts[0].primitive == p0);
    CHECK(parts[1].k == 1);
    CHECK(parts[1].weight == -2);
    CHECK(parts[1].primitive == Vector::Constant(1, Rational(1, 2)));
    CHECK(reassemble(m, 0, parts) == v);
}

TEST_CASE("primitive dimensions")
{
    GradedModule m = builtin("abelian4");
    CHECK(primitiveBasis(m, -2).dim() == 1);
    CHECK(primitiveBasis(m, -1).dim() == 4);
    CHECK(primitiveBasis(m, 0).dim() == 5);
    CHECK_THROWS_AS(primitiveBasis(m, 1), std::invalid_argument);
}

TEST_CASE("d+ and d- on the Kodaira-Thurston algebra")
{
    GradedModule m = builtin("kt4");
    // e4 is primitive of weight -1 and d e4 = e23 is primitive, so d- e4 = 0
    Vector e4 = unit(4, 3);
    Vector plus = dee(m, -1, e4);
    CHECK(plus == unit(6, 3));
    CHECK(isZeroMatrix(deebar(m, -1, e4)));
    CHECK_THROWS(dee(m, 0, unit(6, 0)));
}

TEST_CASE("module suites pass on builtins and generated presentations")
{
    std::vector<std::pair<std::string, GradedModule>> modules;
    for (const char* name : {"kt4", "abelian4", "nonabelian2", "nil6-01", "nil6-26"})
        modules.emplace_back(name, builtin(name));
    PresentationGenerator gen(11);
    for (int i = 0; i < 10; ++i)
    {
        RandomPresentation rp = gen.next();
        modules.emplace_back(rp.signature + " " + rp.omega, buildOperators(rp.structure, rp.presentation));
    }
    for (int n : {1, 3})
        modules.emplace_back("irreducible" + std::to_string(n), irreducible(n));

    for (const auto& [name, m] : modules)
        for (const auto& r : moduleSuites(m, name))
        {
            INFO(r.suite << " " << r.subject << ": " << r.detail);
            CHECK(r.passed);
        }
}
