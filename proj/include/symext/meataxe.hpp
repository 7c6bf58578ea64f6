#ifndef SYMEXT_MEATAXE_HPP
#define SYMEXT_MEATAXE_HPP

#include <vector>

#include "symext/gmodule.hpp"

namespace symext {

/// Polynomial over F_p, coefficients low to high, no leading zeros.
struct FpPoly {
    int p = 2;
    std::vector<u8> c;

    FpPoly() = default;
    FpPoly(int p, std::vector<u8> coeffs);
    static FpPoly x(int p);
    static FpPoly constant(int p, u8 v);
    int deg() const { return int(c.size()) - 1; } // -1 for the zero polynomial
    bool isZero() const { return c.empty(); }
    bool operator==(const FpPoly&) const = default;

    FpPoly add(const FpPoly& o) const;
    FpPoly sub(const FpPoly& o) const;
    FpPoly mul(const FpPoly& o) const;
    /// quotient and remainder by a non-zero divisor
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& o) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    std::string str() const;
};

FpPoly polyGcd(FpPoly a, FpPoly b);

/// Distinct monic irreducible factors (multiplicities dropped), sorted.
std::vector<FpPoly> irreducibleFactors(const FpPoly& f);

/// Evaluate f at a square matrix.
FpMatrix evalPoly(const FpPoly& f, const FpMatrix& m);

/// Minimal polynomial, via annihilators of the coordinate vectors.
FpPoly minPoly(const FpMatrix& m);

struct IrreducibilityResult {
    bool irreducible = false;
    FpMatrix submoduleRows; // a proper non-zero submodule when reducible
};

/// Norton's test with random algebra elements; deterministic for a fixed
/// seed. Throws MeataxeStall when the retry budget is exhausted.
IrreducibilityResult meataxeIsIrreducible(const GModule& m, u64 seed);

/// Composition factors with multiplicity (repeated entries), by random
/// spinning and recursion; sum of dimensions equals dim m.
std::vector<GModule> meataxeFactors(const GModule& m, u64 seed);

/// Both sides must be irreducible (certified here; throws NotIrreducible);
/// then isomorphy is detected by a non-zero hom space.
bool isIsomorphic(const GModule& a, const GModule& b, u64 seed = 0x15a5eed);

} // namespace symext

#endif
