/**
 * One analysis run per input and its text / JSON renderings.
 */
#ifndef LEFSCHETZ_REPORT_HPP
#define LEFSCHETZ_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/catalog.hpp"
#include "lefschetz/cealg.hpp"
#include "lefschetz/superalg.hpp"

namespace lefschetz {

struct ReportDocument
{
    std::string name;
    std::string signature;
    std::string omega;
    int dim = 0;
    /// Fiber dimension of the coefficient representation, 0 for plain forms.
    int fiberDim = 0;
    /// dim H^k by form degree k = 0..dim.
    std::vector<Index> betti;
    LefschetzReport report;
    std::vector<Violation> relationViolations;

    std::vector<Expectation> expected;
    bool suspect = false;
    std::string notes;
    /// Unset without expectations or when analysis failed.
    std::optional<bool> matches;
    /// Parse or validation failure; the verdict fields are then meaningless.
    std::optional<std::string> error;
    double seconds = 0.0;

    bool ok() const { return !error; }
    /// Counts against the exit status: a failure or mismatch on a non-suspect entry.
    bool counted() const { return !suspect && (error || (matches && !*matches)); }
};

/// Parse, validate, build and analyze; errors are recorded in the document, not thrown.
ReportDocument analyzeEntry(const CatalogEntry& entry, const Representation* coefficients = nullptr);
/// One document per entry, in catalog order.
std::vector<ReportDocument> analyzeCatalog(const std::vector<CatalogEntry>& entries);

/// Reads {"fiber_dim": n, "action": [matrix per generator]}; entries are integers or "p/q" strings.
Representation loadRepresentation(const std::string& path, int algebraDim);
Representation parseRepresentation(const std::string& text, int algebraDim);

enum class OutputFormat { Text, Json };

/// Self-describing document {"schema": 1, "command": ..., "reports": [...]}; byte-deterministic.
std::string renderJson(const std::string& command, const std::vector<ReportDocument>& docs);
std::string renderAnalysisText(const ReportDocument& doc);
std::string renderTableText(const std::vector<ReportDocument>& docs);

/// Yes/No for expectations phrased that way, otherwise the verdict name.
std::string verdictCell(const Verdict& v, std::optional<Expectation> expected);

} // namespace lefschetz

#endif // LEFSCHETZ_REPORT_HPP
