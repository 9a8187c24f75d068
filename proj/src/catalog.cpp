#include "lefschetz/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lefschetz {

const char* expectationName(Expectation e)
{
    switch (e)
    {
        case Expectation::Yes: return "yes";
        case Expectation::No: return "no";
        case Expectation::Iso: return "iso";
        case Expectation::Surj: return "surj";
        case Expectation::Neither: return "neither";
        case Expectation::Zero: return "zero";
    }
    return "?";
}

std::optional<Expectation> parseExpectation(const std::string& word)
{
    std::string w = word;
    std::transform(w.begin(), w.end(), w.begin(), [](unsigned char c) { return std::tolower(c); });
    for (Expectation e : {Expectation::Yes, Expectation::No, Expectation::Iso, Expectation::Surj,
                          Expectation::Neither, Expectation::Zero})
        if (w == expectationName(e))
            return e;
    return std::nullopt;
}

bool expectationMatches(Expectation e, const Verdict& v)
{
    switch (e)
    {
        case Expectation::Yes:
        case Expectation::Iso: return v.kind == VerdictKind::Isomorphism;
        case Expectation::No: return v.kind != VerdictKind::Isomorphism;
        case Expectation::Surj: return v.kind == VerdictKind::SurjectionOnly;
        case Expectation::Neither: return v.kind == VerdictKind::Neither;
        case Expectation::Zero: return v.kind == VerdictKind::ZeroMap;
    }
    return false;
}

namespace {

std::vector<Expectation> yesNo(const std::string& pattern)
{
    std::vector<Expectation> out;
    for (char c : pattern)
        out.push_back(c == 'Y' ? Expectation::Yes : Expectation::No);
    return out;
}

CatalogEntry nil6(int row, std::string signature, std::string omega, const std::string& verdicts,
                  bool suspect = false, std::string notes = {})
{
    CatalogEntry e;
    e.name = "nil6-" + std::string(row < 10 ? "0" : "") + std::to_string(row);
    e.signature = std::move(signature);
    e.omega = std::move(omega);
    e.expected = yesNo(verdicts);
    e.suspect = suspect;
    e.notes = std::move(notes);
    e.group = "nil6";
    return e;
}

std::vector<CatalogEntry> makeBuiltins()
{
    std::vector<CatalogEntry> v = {
        nil6(1, "(0,0,12,13,14,15)", "16+34-25", "NNY"),
        nil6(2, "(0,0,12,13,14,23+15)", "16+24+34-25", "NNY", true,
             "printed form 16+24+34-26 is not closed; last term read as -25"),
        nil6(3, "(0,0,12,13,23,14)", "15+24+34-26", "YNY"),
        nil6(4, "(0,0,12,13,23,14-25)", "15+24-35+16", "YNY"),
        nil6(5, "(0,0,12,13,23,14+25)", "15+24+35+16", "YNY"),
        nil6(6, "(0,0,12,13,14+23,24+15)", "16+2x34-25", "NNY"),
        nil6(7, "(0,0,0,12,13,14+23)", "16-2x34-25", "NNY"),
        nil6(8, "(0,0,0,12,13,24)", "26+14+35", "NNY"),
        nil6(9, "(0,0,0,12,13,14)", "16+24+35", "NNY"),
        nil6(10, "(0,0,0,12,13,23)", "15+24+36", "NNY"),
        nil6(11, "(0,0,0,12,14,15+23)", "13+26-45", "NNY"),
        nil6(12, "(0,0,0,12,14,15+23+24)", "13+26-45", "NNY", true,
             "printed with five entries as (0,0,0,12,14+15+23+24); comma restored after 14"),
        nil6(13, "(0,0,0,12,14,15+24)", "13+26-45", "NNY"),
        nil6(14, "(0,0,0,12,14,15)", "13+26-45", "NNY"),
        nil6(15, "(0,0,0,12,14,13+42)", "15+26+34", "NNY"),
        nil6(16, "(0,0,0,12,14,23+24)", "16-34+25", "NNY"),
        nil6(17, "(0,0,0,12,14-23,15+34)", "16+35+24", "NNY", true,
             "printed signature (0,0,0,12,14,15+34) violates Jacobi; fifth entry read as 14-23"),
        nil6(18, "(0,0,0,12,14+23,13+42)", "15+2x26+34", "NNY"),
        nil6(19, "(0,0,0,0,12,15)", "16+25+34", "NNY"),
        nil6(20, "(0,0,0,0,12,14+25)", "13+26+45", "NNY"),
        nil6(21, "(0,0,0,0,12,14+23)", "13+26+45", "NNY", true,
             "printed form 3+26+45 is not a 2-form; leading 1 restored"),
        nil6(22, "(0,0,0,0,12,34)", "15+36+24", "NNY"),
        nil6(23, "(0,0,0,0,12,13)", "16+25+34", "NNY"),
        nil6(24, "(0,0,0,0,13+42,14+23)", "16+25+34", "NNY"),
        nil6(25, "(0,0,0,0,0,12)", "16+23+45", "NNY"),
        nil6(26, "(0,0,0,0,0,0)", "12+34+56", "YYY"),
    };

    CatalogEntry kt;
    kt.name = "kt4";
    // coframe e4 = dx4 + x2 dx3 gives de4 = dx2 ^ dx3 = e2 ^ e3
    kt.signature = "(0,0,0,23)";
    kt.omega = "12+34";
    kt.expected = {Expectation::Neither, Expectation::Iso};
    kt.notes = "Kodaira-Thurston nilmanifold";
    kt.group = "kt4";
    v.push_back(kt);

    for (int d : {2, 4, 6})
    {
        CatalogEntry a;
        a.name = "abelian" + std::to_string(d);
        a.signature = "(";
        a.omega.clear();
        for (int i = 0; i < d; ++i)
            a.signature += (i ? ",0" : "0");
        a.signature += ")";
        for (int i = 0; i < d / 2; ++i)
            a.omega += (i ? "+" : "") + std::to_string(2 * i + 1) + std::to_string(2 * i + 2);
        a.expected.assign(static_cast<std::size_t>(d / 2), Expectation::Yes);
        a.group = "abelian";
        v.push_back(a);
    }

    CatalogEntry na;
    na.name = "nonabelian2";
    na.signature = "(0,12)";
    na.omega = "12";
    na.expected = {Expectation::No};
    na.notes = "the non-abelian two-dimensional Lie algebra";
    na.group = "dim2";
    v.push_back(na);
    return v;
}

std::size_t lineOf(const std::string& text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

} // namespace

const std::vector<CatalogEntry>& builtinEntries()
{
    static const std::vector<CatalogEntry> entries = makeBuiltins();
    return entries;
}

std::vector<CatalogEntry> builtinGroup(const std::string& group)
{
    std::vector<CatalogEntry> out;
    for (const auto& e : builtinEntries())
        if (e.group == group)
            out.push_back(e);
    return out;
}

BuiltEntry buildEntry(const CatalogEntry& entry)
{
    BuiltEntry b;
    b.presentation = parseSignature(entry.signature);
    if (auto bad = checkDSquared(b.presentation); !bad.empty())
        throw ValidationError("d^2 != 0 on generator " + std::to_string(bad.front()) + " (Jacobi identity fails)");
    Form omega = parseForm(entry.omega, b.presentation.dim);
    b.structure = checkSymplectic(b.presentation, omega);
    b.module = buildOperators(b.structure, b.presentation);
    b.module.setName(entry.name);
    return b;
}

std::optional<std::string> validateEntry(const CatalogEntry& entry)
{
    try
    {
        LiePresentation p = parseSignature(entry.signature);
        if (auto bad = checkDSquared(p); !bad.empty())
            return "d^2 != 0 on generator " + std::to_string(bad.front()) + " (Jacobi identity fails)";
        checkSymplectic(p, parseForm(entry.omega, p.dim));
        if (entry.expected.size() > static_cast<std::size_t>(p.dim / 2))
            return "more expected verdicts than Lefschetz maps";
    }
    catch (const ParseError& e)
    {
        return std::string("parse error: ") + e.what();
    }
    catch (const ValidationError& e)
    {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::vector<CatalogEntry> parseCatalog(const std::string& text, bool lenient)
{
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
        return {};

    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw CatalogError("catalog parse error on line " + std::to_string(lineOf(text, e.byte)) + ": " + e.what());
    }

    const nlohmann::json* list = &doc;
    if (doc.is_object())
    {
        if (!doc.contains("entries"))
            throw CatalogError("catalog object has no \"entries\" field");
        list = &doc["entries"];
    }
    if (!list->is_array())
        throw CatalogError("catalog entries must be an array");

    std::vector<CatalogEntry> out;
    std::size_t index = 0;
    for (const auto& item : *list)
    {
        ++index;
        const std::string where = "entry " + std::to_string(index);
        if (!item.is_object())
            throw CatalogError(where + " is not an object");
        auto field = [&](const char* key, bool required) -> std::string {
            if (!item.contains(key))
            {
                if (required)
                    throw CatalogError(where + " is missing \"" + key + "\"");
                return {};
            }
            if (!item[key].is_string())
                throw CatalogError(where + ": \"" + key + "\" must be a string");
            return item[key].get<std::string>();
        };

        CatalogEntry e;
        e.signature = field("signature", true);
        e.omega = field("omega", true);
        e.name = field("name", false);
        if (e.name.empty())
            e.name = "entry" + std::to_string(index);
        e.notes = field("notes", false);
        e.group = "user";
        if (item.contains("expected"))
        {
            if (!item["expected"].is_array())
                throw CatalogError(where + ": \"expected\" must be an array");
            for (const auto& w : item["expected"])
            {
                auto v = w.is_string() ? parseExpectation(w.get<std::string>()) : std::nullopt;
                if (!v)
                    throw CatalogError(where + ": unknown verdict " + w.dump() +
                                       " (use yes, no, iso, surj, neither, zero)");
                e.expected.push_back(*v);
            }
        }
        if (item.contains("suspect"))
            e.suspect = item["suspect"].is_boolean() && item["suspect"].get<bool>();

        if (auto problem = validateEntry(e))
        {
            if (!lenient)
                throw CatalogError(where + " (" + e.name + "): " + *problem);
            e.suspect = true;
            e.notes += (e.notes.empty() ? "" : "; ") + ("invalid: " + *problem);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> loadFile(const std::string& path, bool lenient)
{
    std::ifstream in(path);
    if (!in)
        throw CatalogError("cannot open catalog file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseCatalog(buffer.str(), lenient);
}

std::string catalogToJson(const std::vector<CatalogEntry>& entries)
{
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& e : entries)
    {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["signature"] = e.signature;
        j["omega"] = e.omega;
        nlohmann::ordered_json exp = nlohmann::ordered_json::array();
        for (Expectation x : e.expected)
            exp.push_back(expectationName(x));
        j["expected"] = exp;
        if (e.suspect)
            j["suspect"] = true;
        if (!e.notes.empty())
            j["notes"] = e.notes;
        list.push_back(j);
    }
    nlohmann::ordered_json doc;
    doc["entries"] = list;
    return doc.dump(2) + "\n";
}

} // namespace lefschetz
