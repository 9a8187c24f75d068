/**
 * Seeded source of symplectic Lie algebras for property tests.
 *
 * Dimension is drawn from {2, 4, 6}.  Each d e^i is a sparse integer
 * combination of pairs e^j ^ e^k with j < k <= i, so mostly nilpotent
 * algebras with occasional solvable ones; candidates failing d^2 = 0 are
 * discarded.  The symplectic form is a random integer combination of a
 * basis of closed 2-forms, kept when nondegenerate.  Only the raw 64-bit
 * engine output is used, so sequences are identical on every platform.
 */
#ifndef LEFSCHETZ_RANDOM_HPP
#define LEFSCHETZ_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>

#include "lefschetz/cealg.hpp"

namespace lefschetz {

struct RandomPresentation
{
    std::string signature;
    std::string omega;
    LiePresentation presentation;
    SymplecticStructure structure;
};

class PresentationGenerator
{
public:
    explicit PresentationGenerator(std::uint64_t seed) : engine_(seed) {}

    RandomPresentation next();

private:
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    long long between(long long lo, long long hi);
    bool chance(unsigned percent);

    LiePresentation candidateAlgebra(int dim);

    std::mt19937_64 engine_;
};

} // namespace lefschetz

#endif // LEFSCHETZ_RANDOM_HPP
