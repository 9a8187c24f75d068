#include <catch_amalgamated.hpp>
#include <json.hpp>

#include "lefschetz/report.hpp"

using namespace lefschetz;

namespace {

CatalogEntry entry(const std::string& signature, const std::string& omega, std::vector<Expectation> expected = {})
{
    CatalogEntry e;
    e.name = "test";
    e.signature = signature;
    e.omega = omega;
    e.expected = std::move(expected);
    return e;
}

} // namespace

TEST_CASE("analyze the six-dimensional abelian algebra")
{
    ReportDocument d = analyzeEntry(entry("(0,0,0,0,0,0)", "12+34+56"));
    REQUIRE(d.ok());
    CHECK(d.betti == std::vector<Index>{1, 6, 15, 20, 15, 6, 1});
    CHECK(d.report.sLefschetz == 0);
    for (int k = 1; k <= 3; ++k)
        CHECK(d.report.lefschetzMaps[static_cast<std::size_t>(k)].isIsomorphism());
    CHECK_FALSE(d.matches);
    CHECK_FALSE(d.counted());
}

TEST_CASE("analyze the abelian plane")
{
    ReportDocument d = analyzeEntry(entry("(0,0)", "12", {Expectation::Yes}));
    REQUIRE(d.ok());
    CHECK(d.report.lefschetz());
    CHECK(d.matches == true);
}

TEST_CASE("analysis errors are captured in the document")
{
    ReportDocument jac = analyzeEntry(entry("(23,12,0,0)", "12+34"));
    REQUIRE(jac.error);
    CHECK_THAT(*jac.error, Catch::Matchers::ContainsSubstring("generator 1"));
    CHECK(jac.counted());

    ReportDocument parse = analyzeEntry(entry("(0,0,0,0)", "12+3"));
    REQUIRE(parse.error);
    CHECK_THAT(*parse.error, Catch::Matchers::ContainsSubstring("column"));

    CatalogEntry suspect = entry("(0,0,0,0)", "12+13");
    suspect.suspect = true;
    ReportDocument s = analyzeEntry(suspect);
    CHECK(s.error);
    CHECK_FALSE(s.counted());
}

TEST_CASE("expected mismatch counts unless suspect")
{
    CatalogEntry e = entry("(0,0,0,23)", "12+34", {Expectation::Yes, Expectation::Yes});
    ReportDocument d = analyzeEntry(e);
    CHECK(d.matches == false);
    CHECK(d.counted());
    e.suspect = true;
    CHECK_FALSE(analyzeEntry(e).counted());
}

TEST_CASE("surjection and zero vocabulary on the nonabelian plane")
{
    ReportDocument surj = analyzeEntry(entry("(0,12)", "12", {Expectation::Surj}));
    CHECK(surj.matches == true);
    ReportDocument zero = analyzeEntry(entry("(0,12)", "12", {Expectation::Zero}));
    CHECK(zero.matches == false);
}

TEST_CASE("trivial coefficients reproduce plain Betti numbers")
{
    CatalogEntry e = entry("(0,0,0,23)", "12+34");
    Representation r = parseRepresentation(R"j({"fiber_dim": 1, "action": [[[0]],[[0]],[[0]],[[0]]]})j", 4);
    ReportDocument twisted = analyzeEntry(e, &r);
    ReportDocument plain = analyzeEntry(e);
    REQUIRE(twisted.ok());
    CHECK(twisted.betti == plain.betti);
    CHECK(twisted.fiberDim == 1);
}

TEST_CASE("coefficient files")
{
    Representation r = parseRepresentation(R"j({"fiber_dim": 1, "action": [[["1/2"]], [[0]]]})j", 2);
    REQUIRE(r.action.size() == 2);
    CHECK(r.action[0](0, 0) == Rational(1, 2));
    CHECK(r.action[1](0, 0) == 0);
}

TEST_CASE("non-flat coefficients name the generator pair")
{
    Representation r = parseRepresentation(R"j({"fiber_dim": 1, "action": [[[0]], [[1]]]})j", 2);
    ReportDocument d = analyzeEntry(entry("(0,12)", "12"), &r);
    REQUIRE(d.error);
    CHECK_THAT(*d.error, Catch::Matchers::ContainsSubstring("generator pair (1,2)"));
    CHECK_THROWS_AS(parseRepresentation(R"j({"fiber_dim": 1, "action": [[[0]]]})j", 2), ValidationError);
    CHECK_THROWS_AS(parseRepresentation("not json", 2), ValidationError);
}

TEST_CASE("json reports are deterministic and self-describing")
{
    std::vector<ReportDocument> docs = {analyzeEntry(entry("(0,0,0,23)", "12+34")),
                                        analyzeEntry(entry("(0,12)", "12"))};
    std::vector<ReportDocument> again = {analyzeEntry(entry("(0,0,0,23)", "12+34")),
                                         analyzeEntry(entry("(0,12)", "12"))};
    const std::string text = renderJson("table", docs);
    CHECK(text == renderJson("table", again));

    auto j = nlohmann::json::parse(text);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "table");
    REQUIRE(j["reports"].size() == 2);
    const auto& kt = j["reports"][0];
    CHECK(kt["betti"] == nlohmann::json({1, 3, 4, 3, 1}));
    CHECK(kt["s_degree"] == 1);
    CHECK(kt["weak_degree"] == 1);
    CHECK(kt["consistent"] == true);
    CHECK(kt["dee_deebar"] == false);
    CHECK(kt["brylinski"].size() == 5);
    CHECK(kt["ddelta"].size() == 5);
    CHECK(kt["maps"].size() == 2);
    CHECK(j["reports"][1]["s_degree"].is_null());
    CHECK(j["failures"] == 0);
    CHECK(text.find("seconds") == std::string::npos);
}

TEST_CASE("text renderings")
{
    ReportDocument d = analyzeEntry(entry("(0,0,0,23)", "12+34", {Expectation::Neither, Expectation::Iso}));
    const std::string text = renderAnalysisText(d);
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("s-degree:  1"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("neither"));
    const std::string table = renderTableText({d});
    CHECK_THAT(table, Catch::Matchers::ContainsSubstring("MATCH"));
    CHECK_THAT(table, Catch::Matchers::ContainsSubstring("1 entries, 0 counted failures"));
    CHECK(verdictCell(Verdict::classify(1, 1, 1), Expectation::Yes) == "Yes");
    CHECK(verdictCell(Verdict::classify(0, 1, 1), Expectation::No) == "No");
    CHECK(verdictCell(Verdict::classify(0, 1, 1), Expectation::Zero) == "zero");
}
