#include <random>

#include <catch_amalgamated.hpp>

#include "lefschetz/cealg.hpp"
#include "lefschetz/random.hpp"

using namespace lefschetz;

namespace {

const Mask e1 = 1, e2 = 2, e3 = 4, e4 = 8;

LiePresentation kt4() { return parseSignature("(0,0,0,23)"); }

} // namespace

TEST_CASE("wedge signs")
{
    CHECK(wedgeSign(e1, e2) == 1);
    CHECK(wedgeSign(e2, e1) == -1);
    CHECK(wedgeSign(e1, e1) == 0);
    CHECK(wedgeSign(e2 | e3, e1) == 1);
    CHECK(wedgeSign(e3, e1 | e2 | e4) == 1);
    CHECK(wedgeSign(e4, e1 | e2 | e3) == -1);
}

TEST_CASE("omega squared in four dimensions")
{
    Form w = parseForm("12+34", 4);
    CHECK(wedge(w, w) == Form::monomial(4, e1 | e2 | e3 | e4, Rational(2)));
}

TEST_CASE("degree bases are lexicographic")
{
    const auto& b = degreeBasis(4, 2);
    REQUIRE(b.size() == 6);
    CHECK(b[0] == (e1 | e2));
    CHECK(b[1] == (e1 | e3));
    CHECK(b[2] == (e1 | e4));
    CHECK(b[3] == (e2 | e3));
    CHECK(b[5] == (e3 | e4));
    CHECK(basisPosition(4, e2 | e4) == 4);
}

TEST_CASE("signature parsing")
{
    LiePresentation p = parseSignature("(0,0,0,0,12,14+25)");
    CHECK(p.dim == 6);
    CHECK(p.diff[4] == Form::monomial(6, e1 | e2));
    CHECK(p.diff[5] == parseForm("14+25", 6));
    CHECK(renderSignature(p) == "(0,0,0,0,12,14+25)");

    LiePresentation q = parseSignature(" ( 0 , 0 , 12 , 13 , 14 + 23 , 24 + 15 ) ");
    CHECK(renderSignature(q) == "(0,0,12,13,14+23,15+24)");

    LiePresentation r = parseSignature("(0,0,0,0,13+42,14+23)");
    CHECK(r.diff[4] == parseForm("13-24", 6));
}

TEST_CASE("scaled terms and canonical rendering")
{
    Form f = parseForm("16+2x34-25", 6);
    CHECK(f.coeff(e3 | e4) == 2);
    CHECK(f.coeff(e2 | 16) == -1);
    CHECK(renderForm(f) == "16-25+2x34");
    CHECK(renderForm(parseForm("21", 2)) == "-12");
    CHECK(renderForm(parseForm("0", 4)) == "0");
    CHECK(renderForm(parseForm("12-12", 4)) == "0");
}

TEST_CASE("parse errors carry positions")
{
    auto column = [](auto&& fn) {
        try
        {
            fn();
        }
        catch (const ParseError& e)
        {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(column([] { parseSignature("(0,0,1x)"); }) >= 5);
    CHECK(column([] { parseSignature("0,0"); }) == 0);
    CHECK(column([] { parseForm("12+35", 4); }) == 3);
    CHECK(column([] { parseForm("3+26+45", 6); }) >= 0);
    CHECK(column([] { parseForm("11", 4); }) >= 0);
    CHECK(column([] { parseSignature("(0,0,14)"); }) >= 0);
    CHECK(column([] { parseSignature("(0,0,0,12"); }) >= 0);
    CHECK_THROWS_WITH(parseForm("12+3", 4), Catch::Matchers::ContainsSubstring("column"));
}

TEST_CASE("Jacobi failure is reported at the generator")
{
    LiePresentation p = parseSignature("(23,12,0)");
    CHECK(checkDSquared(p) == std::vector<int>{1});
    CHECK(checkDSquared(kt4()).empty());
}

TEST_CASE("CE differential of the Kodaira-Thurston algebra")
{
    LiePresentation p = kt4();
    CHECK(ceDifferential(p, Form::monomial(4, e4)) == Form::monomial(4, e2 | e3));
    CHECK(ceDifferential(p, Form::monomial(4, e1 | e4)) == Form::monomial(4, e1 | e2 | e3, Rational(-1)));
    for (int k = 0; k + 1 < 4; ++k)
        CHECK(isZeroMatrix(ceDifferential(p, k + 1) * ceDifferential(p, k)));
}

TEST_CASE("Betti numbers")
{
    CHECK(bettiNumbers(kt4()) == std::vector<Index>{1, 3, 4, 3, 1});
    CHECK(bettiNumbers(parseSignature("(0,0,0,0,0,0)")) == std::vector<Index>{1, 6, 15, 20, 15, 6, 1});
    CHECK(bettiNumbers(parseSignature("(0,12)")) == std::vector<Index>{1, 1, 0});

    auto b = bettiNumbers(parseSignature("(0,0,0,0,12,15)"));
    CHECK(b == std::vector<Index>(b.rbegin(), b.rend()));
}

TEST_CASE("the second cohomology generators of the Kodaira-Thurston algebra are independent")
{
    // e12, e13, e24, e34 are closed and span a complement of the exact 2-forms
    LiePresentation p = kt4();
    Matrix reps(6, 4);
    int col = 0;
    for (Mask m : {e1 | e2, e1 | e3, e2 | e4, e3 | e4})
    {
        Form f = Form::monomial(4, m);
        CHECK(ceDifferential(p, f).isZero());
        reps.col(col++) = f.toVector(2);
    }
    Matrix withExact(6, 4 + 4);
    withExact << reps, ceDifferential(p, 1);
    CHECK(rank(withExact) == 4 + rank(ceDifferential(p, 1)));
}

TEST_CASE("symplectic validation")
{
    LiePresentation ab4 = parseSignature("(0,0,0,0)");
    CHECK_NOTHROW(checkSymplectic(ab4, parseForm("12+34", 4)));
    CHECK_THROWS_AS(checkSymplectic(ab4, parseForm("12+13", 4)), ValidationError);
    CHECK_THROWS_AS(checkSymplectic(parseSignature("(0,0,0)"), parseForm("12", 3)), ValidationError);
    // d(e14) = -e123
    CHECK_THROWS_AS(checkSymplectic(kt4(), parseForm("14+23", 4)), ValidationError);
}

TEST_CASE("Lambda and star on R^4")
{
    SymplecticStructure s = checkSymplectic(parseSignature("(0,0,0,0)"), parseForm("12+34", 4));
    CHECK(s.m == 2);
    CHECK(applyLambda(s, Form::monomial(4, e1 | e2)) == Form::unit(4));
    CHECK(applyLambda(s, s.omega) == Form::monomial(4, 0, Rational(2)));
    // star 1 = omega^2 / 2 and star omega = omega
    CHECK(applyStar(s, Form::unit(4)) == Form::monomial(4, e1 | e2 | e3 | e4));
    CHECK(applyStar(s, s.omega) == s.omega);
    for (int k = 0; k <= 4; ++k)
    {
        Matrix st = starMatrix(s, k);
        CHECK(starMatrix(s, 4 - k) * st == Matrix::Identity(st.cols(), st.cols()));
    }
}

TEST_CASE("primitive 2-forms in R^4 have dimension 5")
{
    SymplecticStructure s = checkSymplectic(parseSignature("(0,0,0,0)"), parseForm("12+34", 4));
    CHECK(kernel(lambdaMatrix(s, 2)).dim() == 5);
}

TEST_CASE("the module has the expected weight dimensions")
{
    LiePresentation p = kt4();
    SymplecticStructure s = checkSymplectic(p, parseForm("12+34", 4));
    GradedModule m = buildOperators(s, p);
    CHECK(m.maxWeight() == 2);
    CHECK(m.dim(-2) == 1);
    CHECK(m.dim(0) == 6);
    CHECK(m.dim(1) == 4);
    CHECK(verifyRelations(m).empty());
    CHECK(m.hasStar());
}

TEST_CASE("flat and non-flat coefficients")
{
    LiePresentation p = parseSignature("(0,12)");
    Representation bad;
    bad.fiberDim = 1;
    bad.action = {Matrix::Zero(1, 1), Matrix::Constant(1, 1, Rational(1))};
    try
    {
        checkFlat(p, bad);
        FAIL("non-flat action accepted");
    }
    catch (const FlatnessError& e)
    {
        CHECK(e.pair() == std::pair<int, int>{1, 2});
    }

    for (int c : {-2, 0, 3})
    {
        Representation good;
        good.fiberDim = 1;
        good.action = {Matrix::Constant(1, 1, Rational(c)), Matrix::Zero(1, 1)};
        CHECK_NOTHROW(checkFlat(p, good));
        SymplecticStructure s = checkSymplectic(p, parseForm("12", 2));
        GradedModule m = withCoefficients(s, p, good);
        CHECK(verifyRelations(m).empty());
    }
}

TEST_CASE("trivial coefficients reproduce plain cohomology")
{
    for (const char* sig : {"(0,0,0,23)", "(0,0,0,0,12,15)"})
    {
        LiePresentation p = parseSignature(sig);
        SymplecticStructure s = checkSymplectic(p, parseForm(p.dim == 4 ? "12+34" : "16+25+34", p.dim));
        GradedModule plain = buildOperators(s, p);
        GradedModule twisted = withCoefficients(s, p, trivialRepresentation(p));
        for (int w = -s.m; w <= s.m; ++w)
            CHECK(twisted.map(Op::D, w) == plain.map(Op::D, w));
    }
}

TEST_CASE("generated presentations are valid and deterministic")
{
    PresentationGenerator a(42), b(42);
    for (int i = 0; i < 30; ++i)
    {
        RandomPresentation x = a.next(), y = b.next();
        CHECK(x.signature == y.signature);
        CHECK(x.omega == y.omega);
        CHECK(checkDSquared(x.presentation).empty());
        CHECK_NOTHROW(checkSymplectic(x.presentation, parseForm(x.omega, x.presentation.dim)));
        CHECK(renderSignature(parseSignature(x.signature)) == x.signature);
    }
}

TEST_CASE("render and parse round trip on random forms")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial)
    {
        const int dim = 2 + static_cast<int>(rng() % 7);
        Form f(dim);
        for (Mask m : degreeBasis(dim, 2))
            if (rng() % 3 == 0)
                f.add(m, Rational(static_cast<long long>(rng() % 9) - 4));
        CHECK(parseForm(renderForm(f), dim) == f);
    }
}
