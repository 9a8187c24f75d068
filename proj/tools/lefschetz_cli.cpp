#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lefschetz/catalog.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;

namespace {

std::string joined(int argc, char** argv)
{
    std::ostringstream out;
    for (int i = 1; i < argc; ++i)
        out << (i > 1 ? " " : "") << argv[i];
    return out.str();
}

int runAnalyze(const std::string& signature, const std::string& omega, const std::string& coeffs,
               OutputFormat format, const std::string& command)
{
    CatalogEntry entry;
    entry.name = "input";
    entry.signature = signature;
    entry.omega = omega;

    std::optional<Representation> rep;
    if (!coeffs.empty())
    {
        try
        {
            LiePresentation p = parseSignature(signature);
            rep = loadRepresentation(coeffs, p.dim);
        }
        catch (const std::exception& e)
        {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    ReportDocument doc = analyzeEntry(entry, rep ? &*rep : nullptr);
    if (doc.error)
        std::cerr << "error: " << *doc.error << "\n";
    if (format == OutputFormat::Json)
        std::cout << renderJson(command, {doc});
    else if (doc.ok())
        std::cout << renderAnalysisText(doc);
    return doc.ok() ? 0 : 1;
}

int runTable(const std::string& source, OutputFormat format, bool lenient, const std::string& command)
{
    std::vector<CatalogEntry> entries;
    try
    {
        if (source == "builtin")
            entries = builtinGroup("nil6");
        else if (source == "all")
            entries = builtinEntries();
        else
            entries = loadFile(source, lenient);
    }
    catch (const CatalogError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<ReportDocument> docs = analyzeCatalog(entries);

    bool failed = false;
    for (const auto& d : docs)
    {
        failed = failed || d.counted();
        if (d.error)
            std::cerr << d.name << ": " << *d.error << "\n";
    }
    std::cout << (format == OutputFormat::Json ? renderJson(command, docs) : renderTableText(docs));
    return failed ? 1 : 0;
}

int runVerify(std::size_t count, std::uint64_t seed)
{
    VerifySummary summary = runVerification(count, seed);
    std::cout << renderVerification(summary, count, seed);
    return summary.failures() == 0 ? 0 : 1;
}

int runBetti(const std::string& signature)
{
    try
    {
        LiePresentation p = parseSignature(signature);
        if (auto bad = checkDSquared(p); !bad.empty())
        {
            std::cerr << "error: d^2 != 0 on generator " << bad.front() << " (Jacobi identity fails)\n";
            return 1;
        }
        auto betti = bettiNumbers(p);
        for (std::size_t k = 0; k < betti.size(); ++k)
            std::cout << (k ? "," : "") << betti[k];
        std::cout << "\n";
    }
    catch (const ParseError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lefschetz and symplectic Hodge verdicts for Lie algebra presentations"};
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text}, {"json", OutputFormat::Json}};

    std::string signature, omega, coeffs;
    OutputFormat analyzeFormat = OutputFormat::Text;
    auto* analyze = app.add_subcommand("analyze", "analyze one presentation");
    analyze->add_option("--signature", signature, "structure equations, e.g. (0,0,0,23)")->required();
    analyze->add_option("--omega", omega, "symplectic form, e.g. 12+34")->required();
    analyze->add_option("--coeffs", coeffs, "JSON representation file for twisted coefficients");
    analyze->add_option("--format", analyzeFormat, "text or json")->transform(CLI::CheckedTransformer(formats));

    std::string source = "builtin";
    OutputFormat tableFormat = OutputFormat::Text;
    bool lenient = false;
    auto* table = app.add_subcommand("table", "compute a catalog of entries against expected verdicts");
    table->add_option("--catalog", source, "builtin (six-dimensional nilpotent table), all, or a JSON file");
    table->add_option("--format", tableFormat, "text or json")->transform(CLI::CheckedTransformer(formats));
    table->add_flag("--lenient", lenient, "mark invalid entries suspect instead of failing");

    std::size_t count = 100;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--count", count, "number of generated presentations");
    verify->add_option("--seed", seed, "generator seed");

    std::string bettiSignature;
    auto* betti = app.add_subcommand("betti", "Betti numbers of a presentation");
    betti->add_option("--signature", bettiSignature, "structure equations")->required();

    CLI11_PARSE(app, argc, argv);
    const std::string command = joined(argc, argv);

    if (analyze->parsed())
        return runAnalyze(signature, omega, coeffs, analyzeFormat, command);
    if (table->parsed())
        return runTable(source, tableFormat, lenient, command);
    if (verify->parsed())
        return runVerify(count, seed);
    return runBetti(bettiSignature);
}
