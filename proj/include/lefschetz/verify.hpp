/**
 * Property suites.  Module suites I-1..I-9 apply to any GradedModule;
 * geometric suites G-1..G-6 need the presentation and symplectic form it
 * was built from.
 */
#ifndef LEFSCHETZ_VERIFY_HPP
#define LEFSCHETZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/cealg.hpp"
#include "lefschetz/superalg.hpp"

namespace lefschetz {

struct SuiteResult
{
    std::string suite;
    std::string subject;
    bool passed = true;
    std::string detail;
};

/// I-1 relations            I-2 bijectivity of e^i and e^i on harmonics
/// I-3 commutator lemmas     I-4 primitive count and decomposition
/// I-5 two-term lemma        I-6 harmonic iff symphonic
/// I-7 verdict equivalences  I-8 star duality (skipped without a star)
/// I-9 im(d delta) containments
std::vector<SuiteResult> moduleSuites(const GradedModule& m, const std::string& subject, std::uint64_t seed = 1);

/// G-1 constructed module passes I-1 and I-3   G-2 Lambda = star L star, star star = id
/// G-3 delta = [Lambda, d] = (-1)^{k+1} star d star   G-4 the six commutators and [L, Lambda] = H
/// G-5 parse / render round trip               G-6 abelian Betti numbers are binomials
std::vector<SuiteResult> geometricSuites(const LiePresentation& p, const SymplecticStructure& s,
                                         const GradedModule& m, const std::string& subject);

struct VerifySummary
{
    std::vector<SuiteResult> results;
    std::size_t subjects = 0;
    std::size_t failures() const;
};

/// Every suite on every builtin entry plus `count` generated presentations.
VerifySummary runVerification(std::size_t count, std::uint64_t seed);
std::string renderVerification(const VerifySummary& summary, std::size_t count, std::uint64_t seed);

} // namespace lefschetz

#endif // LEFSCHETZ_VERIFY_HPP
