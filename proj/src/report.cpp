#include "lefschetz/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace lefschetz {

using Json = nlohmann::ordered_json;

ReportDocument analyzeEntry(const CatalogEntry& entry, const Representation* coefficients)
{
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.name = entry.name;
    doc.signature = entry.signature;
    doc.omega = entry.omega;
    doc.expected = entry.expected;
    doc.suspect = entry.suspect;
    doc.notes = entry.notes;
    try
    {
        LiePresentation p = parseSignature(entry.signature);
        doc.dim = p.dim;
        if (auto bad = checkDSquared(p); !bad.empty())
            throw ValidationError("d^2 != 0 on generator " + std::to_string(bad.front()) +
                                  " (Jacobi identity fails)");
        SymplecticStructure s = checkSymplectic(p, parseForm(entry.omega, p.dim));
        GradedModule m;
        if (coefficients)
        {
            m = withCoefficients(s, p, *coefficients);
            doc.fiberDim = coefficients->fiberDim;
        }
        else
        {
            m = buildOperators(s, p);
        }
        m.setName(entry.name);
        doc.report = fullReport(m);
        doc.betti = doc.report.betti;
        if (!doc.expected.empty())
        {
            bool all = doc.expected.size() <= static_cast<std::size_t>(doc.report.n);
            for (std::size_t i = 0; all && i < doc.expected.size(); ++i)
                all = expectationMatches(doc.expected[i], doc.report.lefschetzMaps[i + 1]);
            doc.matches = all;
        }
    }
    catch (const RelationError& e)
    {
        doc.relationViolations = e.violations();
        doc.error = e.what();
    }
    catch (const ParseError& e)
    {
        doc.error = std::string("parse error: ") + e.what();
    }
    catch (const ValidationError& e)
    {
        doc.error = e.what();
    }
    doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return doc;
}

std::vector<ReportDocument> analyzeCatalog(const std::vector<CatalogEntry>& entries)
{
    std::vector<ReportDocument> docs;
    docs.reserve(entries.size());
    for (const auto& e : entries)
        docs.push_back(analyzeEntry(e));
    return docs;
}

// Coefficients -------------------------------------------------------------

Representation parseRepresentation(const std::string& text, int algebraDim)
{
    Json doc;
    try
    {
        doc = Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw ValidationError(std::string("coefficient file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("fiber_dim") || !doc["fiber_dim"].is_number_integer() ||
        !doc.contains("action") || !doc["action"].is_array())
        throw ValidationError("coefficient file needs an integer \"fiber_dim\" and an \"action\" array");
    Representation r;
    r.fiberDim = doc["fiber_dim"].get<int>();
    if (r.fiberDim < 1)
        throw ValidationError("fiber_dim must be positive");
    if (doc["action"].size() != static_cast<std::size_t>(algebraDim))
        throw ValidationError("coefficient file gives " + std::to_string(doc["action"].size()) +
                              " matrices for " + std::to_string(algebraDim) + " generators");
    for (const auto& mat : doc["action"])
    {
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(r.fiberDim))
            throw ValidationError("each action matrix must have fiber_dim rows");
        Matrix m(r.fiberDim, r.fiberDim);
        for (Index i = 0; i < r.fiberDim; ++i)
        {
            const auto& row = mat[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(r.fiberDim))
                throw ValidationError("each action matrix row must have fiber_dim entries");
            for (Index j = 0; j < r.fiberDim; ++j)
            {
                const auto& x = row[static_cast<std::size_t>(j)];
                if (x.is_number_integer())
                    m(i, j) = Rational(x.get<long long>());
                else if (x.is_string())
                {
                    try
                    {
                        m(i, j) = Rational(x.get<std::string>());
                    }
                    catch (const std::exception&)
                    {
                        throw ValidationError("bad rational entry " + x.dump());
                    }
                }
                else
                    throw ValidationError("matrix entries must be integers or \"p/q\" strings");
            }
        }
        r.action.push_back(std::move(m));
    }
    return r;
}

Representation loadRepresentation(const std::string& path, int algebraDim)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open coefficient file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parseRepresentation(buffer.str(), algebraDim);
}

// Rendering --------------------------------------------------------------

namespace {

Json optionalInt(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json toJson(const ReportDocument& d)
{
    Json j;
    j["name"] = d.name;
    j["signature"] = d.signature;
    j["omega"] = d.omega;
    j["dim"] = d.dim;
    j["fiber_dim"] = d.fiberDim == 0 ? Json(nullptr) : Json(d.fiberDim);
    j["error"] = d.error ? Json(*d.error) : Json(nullptr);
    j["suspect"] = d.suspect;
    if (!d.notes.empty())
        j["notes"] = d.notes;

    Json exp = Json::array();
    for (Expectation e : d.expected)
        exp.push_back(expectationName(e));
    j["expected"] = exp;
    j["match"] = d.matches ? Json(*d.matches) : Json(nullptr);

    Json viol = Json::array();
    for (const auto& v : d.relationViolations)
        viol.push_back({{"relation", v.relation}, {"weight", v.weight}, {"witness", v.witness}});
    j["relation_violations"] = viol;
    if (!d.ok())
        return j;

    const auto& r = d.report;
    j["betti"] = d.betti;
    Json maps = Json::array();
    for (int k = 1; k <= r.n; ++k)
    {
        const Verdict& v = r.lefschetzMaps[static_cast<std::size_t>(k)];
        maps.push_back({{"k", k},
                        {"verdict", verdictName(v.kind)},
                        {"rank", v.rank},
                        {"source_dim", v.sourceDim},
                        {"target_dim", v.targetDim}});
    }
    j["maps"] = maps;
    j["s_degree"] = optionalInt(r.sLefschetz);
    j["weak_degree"] = optionalInt(r.weakDegree);
    j["weak_degree_literal"] = optionalInt(r.weakDegreeLiteral);

    Json dd = Json::array();
    Json bry = Json::array();
    for (int w = -r.n; w <= r.n; ++w)
    {
        const auto& f = r.ddelta[static_cast<std::size_t>(w + r.n)];
        dd.push_back({{"weight", w},
                      {"exact_coclosed_eq_coexact_closed", f.exactCoclosedEqualsCoexactClosed},
                      {"coexact_closed_eq_im_ddelta", f.coexactClosedEqualsImDdelta},
                      {"exact_coclosed_eq_im_ddelta", f.exactCoclosedEqualsImDdelta},
                      {"holds", f.holds()}});
        const auto& b = r.brylinski[static_cast<std::size_t>(w + r.n)];
        bry.push_back({{"weight", w}, {"surjective", b.surjective}, {"isomorphism", b.isomorphism()}});
    }
    j["ddelta"] = dd;
    j["brylinski"] = bry;
    j["dee_deebar"] = r.deeDeebar;
    j["dee_deebar_literal"] = r.deeDeebarLiteral;
    j["lefschetz_threshold"] = r.lefschetzThreshold;
    j["brylinski_threshold"] = r.brylinskiThreshold;
    j["consistent"] = r.consistent;
    return j;
}

const char* yesNo(bool b)
{
    return b ? "yes" : "no";
}

std::string optionalText(const std::optional<int>& v)
{
    return v ? std::to_string(*v) : "none";
}

std::string status(const ReportDocument& d)
{
    if (d.error)
        return d.suspect ? "SUSPECT (error)" : "ERROR";
    if (!d.matches)
        return d.suspect ? "SUSPECT" : "-";
    if (d.suspect)
        return *d.matches ? "SUSPECT (match)" : "SUSPECT (mismatch)";
    return *d.matches ? "MATCH" : "MISMATCH";
}

} // namespace

std::string verdictCell(const Verdict& v, std::optional<Expectation> expected)
{
    if (!expected || *expected == Expectation::Yes || *expected == Expectation::No)
        return v.isIsomorphism() ? "Yes" : "No";
    return verdictName(v.kind);
}

std::string renderJson(const std::string& command, const std::vector<ReportDocument>& docs)
{
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    std::size_t counted = 0;
    Json list = Json::array();
    for (const auto& d : docs)
    {
        list.push_back(toJson(d));
        counted += d.counted() ? 1 : 0;
    }
    doc["reports"] = list;
    doc["failures"] = counted;
    return doc.dump(2) + "\n";
}

std::string renderAnalysisText(const ReportDocument& d)
{
    std::ostringstream out;
    out << "name:      " << d.name << "\n";
    out << "signature: " << d.signature << "\n";
    out << "omega:     " << d.omega << "\n";
    if (d.fiberDim)
        out << "coefficients: fiber dimension " << d.fiberDim << "\n";
    if (d.error)
    {
        out << "error:     " << *d.error << "\n";
        for (const auto& v : d.relationViolations)
            out << "  violated " << v.relation << " at weight " << v.weight << " (basis vector " << v.witness
                << ")\n";
        return out.str();
    }
    const auto& r = d.report;
    out << "dim:       " << d.dim << "\n";
    out << "betti:    ";
    for (Index b : d.betti)
        out << ' ' << b;
    out << "\n";
    for (int k = 1; k <= r.n; ++k)
    {
        const Verdict& v = r.lefschetzMaps[static_cast<std::size_t>(k)];
        out << "[L]^" << k << ":     " << std::left << std::setw(12) << verdictName(v.kind) << std::right << " rank "
            << v.rank << ", H^" << (r.n - k) << " dim " << v.sourceDim << " -> H^" << (r.n + k) << " dim "
            << v.targetDim << "\n";
    }
    out << "s-degree:  " << optionalText(r.sLefschetz) << "\n";
    out << "weak d-delta degree: " << optionalText(r.weakDegree) << " (literal reading "
        << optionalText(r.weakDegreeLiteral) << ")\n";
    out << "weight         ";
    for (int w = -r.n; w <= r.n; ++w)
        out << std::setw(4) << w;
    out << "\nbrylinski iso  ";
    for (int w = -r.n; w <= r.n; ++w)
        out << std::setw(4) << (r.brylinski[static_cast<std::size_t>(w + r.n)].isomorphism() ? "y" : "n");
    out << "\nd-delta lemma  ";
    for (int w = -r.n; w <= r.n; ++w)
        out << std::setw(4) << (r.ddelta[static_cast<std::size_t>(w + r.n)].holds() ? "y" : "n");
    out << "\n";
    out << "lefschetz:           " << yesNo(r.lefschetz()) << "\n";
    out << "brylinski:           " << yesNo(r.brylinskiEverywhere()) << "\n";
    out << "d-delta lemma:       " << yesNo(r.ddeltaEverywhere()) << "\n";
    out << "d+ d- lemma:         " << yesNo(r.deeDeebar) << " (literal reading " << yesNo(r.deeDeebarLiteral)
        << ")\n";
    out << "thresholds:          lefschetz " << r.lefschetzThreshold << ", brylinski " << r.brylinskiThreshold
        << "\n";
    out << "consistent:          " << yesNo(r.consistent) << "\n";
    if (!d.expected.empty())
        out << "expected:            " << (d.matches && *d.matches ? "match" : "MISMATCH") << "\n";
    out << "time:                " << std::fixed << std::setprecision(3) << d.seconds << " s\n";
    return out.str();
}

std::string renderTableText(const std::vector<ReportDocument>& docs)
{
    std::size_t nameW = 4, sigW = 9, omegaW = 5;
    for (const auto& d : docs)
    {
        nameW = std::max(nameW, d.name.size());
        sigW = std::max(sigW, d.signature.size());
        omegaW = std::max(omegaW, d.omega.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(nameW)) << "name" << "  " << std::setw(static_cast<int>(sigW))
        << "signature" << "  " << std::setw(static_cast<int>(omegaW)) << "omega" << "  "
        << std::setw(28) << "computed [L]^k" << std::setw(28) << "expected" << "status\n";
    std::size_t counted = 0;
    double total = 0.0;
    for (const auto& d : docs)
    {
        std::string computed, expected;
        if (d.ok())
            for (int k = 1; k <= d.report.n; ++k)
            {
                std::optional<Expectation> e;
                if (static_cast<std::size_t>(k) <= d.expected.size())
                    e = d.expected[static_cast<std::size_t>(k - 1)];
                computed += (k > 1 ? "/" : "") + verdictCell(d.report.lefschetzMaps[static_cast<std::size_t>(k)], e);
            }
        else
            computed = "-";
        for (std::size_t i = 0; i < d.expected.size(); ++i)
        {
            std::string word = expectationName(d.expected[i]);
            if (d.expected[i] == Expectation::Yes || d.expected[i] == Expectation::No)
                word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
            expected += (i ? "/" : "") + word;
        }
        out << std::setw(static_cast<int>(nameW)) << d.name << "  " << std::setw(static_cast<int>(sigW)) << d.signature
            << "  " << std::setw(static_cast<int>(omegaW)) << d.omega << "  " << std::setw(28) << computed
            << std::setw(28) << (expected.empty() ? "-" : expected) << status(d) << "\n";
        if (d.error)
            out << "    " << *d.error << "\n";
        counted += d.counted() ? 1 : 0;
        total += d.seconds;
    }
    out << std::right << "\n" << docs.size() << " entries, " << counted << " counted failures, " << std::fixed
        << std::setprecision(2) << total << " s\n";
    return out.str();
}

} // namespace lefschetz
