#include <filesystem>
#include <fstream>

#include <catch_amalgamated.hpp>

#include "lefschetz/catalog.hpp"

using namespace lefschetz;

namespace {

std::string tempFile(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / ("lefschetz_catalog_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("builtin catalog layout")
{
    const auto& all = builtinEntries();
    CHECK(all.size() == 31);
    auto nil6 = builtinGroup("nil6");
    REQUIRE(nil6.size() == 26);
    CHECK(nil6.front().name == "nil6-01");
    CHECK(nil6.back().signature == "(0,0,0,0,0,0)");
    std::size_t suspects = 0;
    for (const auto& e : nil6)
    {
        suspects += e.suspect ? 1 : 0;
        CHECK(e.expected.size() == 3);
        if (e.suspect)
            CHECK_FALSE(e.notes.empty());
    }
    CHECK(suspects == 4);
    CHECK(builtinGroup("kt4").size() == 1);
    CHECK(builtinGroup("abelian").size() == 3);
}

TEST_CASE("every builtin entry validates")
{
    for (const auto& e : builtinEntries())
    {
        INFO(e.name);
        CHECK_FALSE(validateEntry(e));
    }
}

TEST_CASE("expectation vocabulary")
{
    CHECK(parseExpectation("Yes") == Expectation::Yes);
    CHECK(parseExpectation("surj") == Expectation::Surj);
    CHECK(parseExpectation("ZERO") == Expectation::Zero);
    CHECK_FALSE(parseExpectation("maybe"));

    Verdict iso = Verdict::classify(2, 2, 2), surj = Verdict::classify(1, 2, 1), zero = Verdict::classify(0, 2, 2),
            inj = Verdict::classify(1, 1, 2), neither = Verdict::classify(1, 2, 2);
    CHECK(expectationMatches(Expectation::Iso, iso));
    CHECK(expectationMatches(Expectation::Yes, iso));
    CHECK(expectationMatches(Expectation::No, neither));
    CHECK(expectationMatches(Expectation::No, zero));
    CHECK_FALSE(expectationMatches(Expectation::No, iso));
    CHECK(expectationMatches(Expectation::Surj, surj));
    CHECK_FALSE(expectationMatches(Expectation::Surj, iso));
    CHECK(expectationMatches(Expectation::Zero, zero));
    CHECK(expectationMatches(Expectation::Neither, neither));
    CHECK_FALSE(expectationMatches(Expectation::Neither, inj));
}

TEST_CASE("user catalog with one abelian entry")
{
    auto entries = parseCatalog(R"j({"entries": [
        {"name": "flat", "signature": "(0,0,0,0)", "omega": "12+34", "expected": ["iso", "iso"]}
    ]})j");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].name == "flat");
    CHECK(entries[0].group == "user");
    CHECK(entries[0].expected == std::vector<Expectation>{Expectation::Iso, Expectation::Iso});
}

TEST_CASE("bare arrays and default names")
{
    auto entries = parseCatalog(R"j([{"signature": "(0,0)", "omega": "12"}])j");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].name == "entry1");
    CHECK(entries[0].expected.empty());
}

TEST_CASE("an entry violating Jacobi is rejected or marked suspect")
{
    const std::string text = R"j({"entries": [{"name": "bad", "signature": "(23,12,0,0)", "omega": "12+34"}]})j";
    CHECK_THROWS_WITH(parseCatalog(text), Catch::Matchers::ContainsSubstring("generator 1"));
    auto lenient = parseCatalog(text, true);
    REQUIRE(lenient.size() == 1);
    CHECK(lenient[0].suspect);
    CHECK_THAT(lenient[0].notes, Catch::Matchers::ContainsSubstring("Jacobi"));
}

TEST_CASE("degenerate and unparsable forms are reported")
{
    CHECK_THROWS_WITH(parseCatalog(R"j([{"signature": "(0,0,0,0)", "omega": "12+13"}])j"),
                      Catch::Matchers::ContainsSubstring("degenerate"));
    CHECK_THROWS_WITH(parseCatalog(R"j([{"signature": "(0,0,0,0,0,0)", "omega": "3+26+45"}])j"),
                      Catch::Matchers::ContainsSubstring("column"));
}

TEST_CASE("malformed catalog files")
{
    CHECK(parseCatalog("").empty());
    CHECK(parseCatalog("  \n").empty());
    CHECK_THROWS_WITH(parseCatalog("{\"entries\": [\n{\"signature\": }\n]}"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_AS(parseCatalog(R"j({"rows": []})j"), CatalogError);
    CHECK_THROWS_AS(parseCatalog(R"j([{"omega": "12"}])j"), CatalogError);
    CHECK_THROWS_WITH(parseCatalog(R"j([{"signature": "(0,0)", "omega": "12", "expected": ["maybe"]}])j"),
                      Catch::Matchers::ContainsSubstring("unknown verdict"));
    CHECK_THROWS_AS(loadFile("/nonexistent/catalog.json"), CatalogError);
}

TEST_CASE("empty file loads as an empty catalog")
{
    CHECK(loadFile(tempFile("empty.json", "")).empty());
}

TEST_CASE("catalog serialization round trips")
{
    auto original = builtinEntries();
    auto text = catalogToJson(original);
    auto back = parseCatalog(text);
    REQUIRE(back.size() == original.size());
    for (std::size_t i = 0; i < back.size(); ++i)
    {
        CHECK(back[i].name == original[i].name);
        CHECK(back[i].signature == original[i].signature);
        CHECK(back[i].omega == original[i].omega);
        CHECK(back[i].expected == original[i].expected);
        CHECK(back[i].suspect == original[i].suspect);
    }
    CHECK(catalogToJson(back) == catalogToJson(original));
    auto path = tempFile("roundtrip.json", text);
    CHECK(loadFile(path).size() == original.size());
}

TEST_CASE("buildEntry produces a module named after the entry")
{
    for (const auto& e : builtinGroup("abelian"))
    {
        BuiltEntry b = buildEntry(e);
        CHECK(b.module.name() == e.name);
        CHECK(b.module.maxWeight() == b.presentation.dim / 2);
    }
}
