/**
 * Built-in symplectic Lie algebras and loading of user catalogs.
 *
 * Catalog file format (JSON):
 *
 *     {"entries": [{"name": "...", "signature": "(0,0,12)", "omega": "13+...",
 *                   "expected": ["yes", "no", "yes"], "notes": "..."}]}
 *
 * A bare top-level array of entries is accepted too.  expected[i] is the
 * verdict of [L]^{i+1}.
 */
#ifndef LEFSCHETZ_CATALOG_HPP
#define LEFSCHETZ_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/cealg.hpp"
#include "lefschetz/superalg.hpp"

namespace lefschetz {

enum class Expectation { Yes, No, Iso, Surj, Neither, Zero };

const char* expectationName(Expectation e);
/// Accepts yes/no/iso/surj/neither/zero, case-insensitive.
std::optional<Expectation> parseExpectation(const std::string& word);
bool expectationMatches(Expectation e, const Verdict& v);

struct CatalogEntry
{
    std::string name;
    std::string signature;
    std::string omega;
    std::vector<Expectation> expected;
    bool suspect = false;
    std::string notes;
    /// Entries of the six-dimensional nilmanifold table share the group "nil6".
    std::string group;
};

/// Every builtin entry: the 26 six-dimensional nilmanifold rows, KT4, abelian 2/4/6, nonabelian dim 2.
const std::vector<CatalogEntry>& builtinEntries();
/// The subset with the given group tag.
std::vector<CatalogEntry> builtinGroup(const std::string& group);

class CatalogError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Returns a description of the first validation failure, or nullopt.
std::optional<std::string> validateEntry(const CatalogEntry& entry);

/// Parse a catalog document; on invalid entries throws CatalogError unless `lenient`,
/// in which case the entry is kept with `suspect` set.
std::vector<CatalogEntry> parseCatalog(const std::string& text, bool lenient = false);
std::vector<CatalogEntry> loadFile(const std::string& path, bool lenient = false);
std::string catalogToJson(const std::vector<CatalogEntry>& entries);

struct BuiltEntry
{
    LiePresentation presentation;
    SymplecticStructure structure;
    GradedModule module;
};

/// Parse and validate the entry and build its module; throws ParseError or ValidationError.
BuiltEntry buildEntry(const CatalogEntry& entry);

} // namespace lefschetz

#endif // LEFSCHETZ_CATALOG_HPP
