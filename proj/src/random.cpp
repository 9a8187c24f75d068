#include "lefschetz/random.hpp"

namespace lefschetz {

std::uint64_t PresentationGenerator::below(std::uint64_t bound)
{
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % bound;
}

long long PresentationGenerator::between(long long lo, long long hi)
{
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool PresentationGenerator::chance(unsigned percent)
{
    return below(100) < percent;
}

LiePresentation PresentationGenerator::candidateAlgebra(int dim)
{
    LiePresentation p;
    p.dim = dim;
    p.diff.assign(static_cast<std::size_t>(dim), Form(dim));
    for (int i = 2; i <= dim; ++i)
    {
        if (!chance(65))
            continue;
        const int terms = static_cast<int>(between(1, 2));
        for (int t = 0; t < terms; ++t)
        {
            // pairs below i keep the algebra nilpotent; pairs touching i make it solvable
            const bool solvable = chance(12);
            int a, b;
            if (solvable)
            {
                a = static_cast<int>(between(1, i - 1));
                b = i;
            }
            else
            {
                if (i < 3)
                    continue;
                a = static_cast<int>(between(1, i - 2));
                b = static_cast<int>(between(a + 1, i - 1));
            }
            long long c = between(1, 2);
            if (chance(30))
                c = -c;
            const Mask mask = (Mask(1) << (a - 1)) | (Mask(1) << (b - 1));
            p.diff[static_cast<std::size_t>(i - 1)].add(mask, Rational(c));
        }
    }
    return p;
}

RandomPresentation PresentationGenerator::next()
{
    for (;;)
    {
        const std::uint64_t pick = below(20);
        const int dim = pick < 3 ? 2 : (pick < 9 ? 4 : 6);
        LiePresentation p = candidateAlgebra(dim);
        if (!checkDSquared(p).empty())
            continue;

        Matrix closed = kernel(ceDifferential(p, 2)).basis();
        if (closed.cols() == 0)
            continue;
        for (int attempt = 0; attempt < 8; ++attempt)
        {
            Vector coeffs(closed.cols());
            for (Index j = 0; j < closed.cols(); ++j)
                coeffs(j) = Rational(between(-2, 2));
            Vector raw = closed * coeffs;
            // clear denominators so the form has integer text
            for (Index j = 0; j < raw.size(); ++j)
            {
                Rational den(boost::multiprecision::denominator(raw(j)));
                if (den != 1)
                    raw *= den;
            }
            Form omega = Form::fromVector(dim, 2, raw);
            if (omega.isZero())
                continue;
            try
            {
                RandomPresentation out;
                out.structure = checkSymplectic(p, omega);
                out.signature = renderSignature(p);
                out.omega = renderForm(omega);
                out.presentation = std::move(p);
                return out;
            }
            catch (const ValidationError&)
            {
            }
        }
    }
}

} // namespace lefschetz
