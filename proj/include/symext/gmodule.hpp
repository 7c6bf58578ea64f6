#ifndef SYMEXT_GMODULE_HPP
#define SYMEXT_GMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "symext/fp_matrix.hpp"
#include "symext/partition.hpp"

namespace symext {

/// Dimension guardrail for derived modules; keeps desk-scale runs bounded.
/// CLI --force lifts it.
class EnvelopeGuard {
public:
    static int maxDim();
    static void setMaxDim(int dim); // <=0 means unlimited
    static void check(long long dim, const char* who);
};

/// A representation of the symmetric group on n letters over F_p, given by
/// the images of the adjacent transpositions s_1..s_{n-1}. Generators square
/// to the identity and satisfy the braid and commuting relations; this is
/// verified on construction (exactly for small dimensions, by seeded random
/// probes above kExactVerifyDim). n = 0 and n = 1 both mean a plain vector
/// space with no generators.
struct GModule {
    int p = 2;
    int n = 1;
    int dim = 0;
    std::vector<FpMatrix> gens; // n-1 matrices, dim x dim
    std::string label;
    std::optional<Content> block; // content tag when known to be a single block

    static constexpr int kExactVerifyDim = 192;

    GModule() = default;
    GModule(int p, int n, int dim, std::vector<FpMatrix> gens, std::string label = "",
            std::optional<Content> block = std::nullopt);

    const FpMatrix& gen(int k) const; // 1-based, k in 1..n-1
    bool isZero() const { return dim == 0; }

    /// Apply generator s_k to a column vector.
    std::vector<u8> apply(int k, const std::vector<u8>& v) const;

    void verifyRelationsExact() const;
    void verifyRelationsProbed(u64 seed, int probes) const;
};

/// Zero module placeholder (dim 0) for vanishing functor outputs.
GModule zeroModule(int p, int n, std::string label = "0");

/// Module of a trivial group (n <= 1): a bare vector space.
GModule spaceModule(int p, int n, int dim, std::string label = "");

/// Contragredient module; generators are involutions so this is plain
/// transposition.
GModule dual(const GModule& m);

GModule directSum(const GModule& a, const GModule& b);

/// Submodule on an invariant row-space basis; generators are restricted
/// through the basis (throws if the space is not invariant).
GModule subModuleOnBasis(const GModule& m, const FpMatrix& basisRows, std::string label = "");

/// Quotient by the row space of `subBasis` (must be invariant); the induced
/// action is taken on the complement coordinates of the reduced basis.
GModule quotientByBasis(const GModule& m, const FpMatrix& subBasis, std::string label = "");

/// Fixed vectors of the listed generators (1-based indices), as basis rows.
FpMatrix fixedSpace(const GModule& m, const std::vector<int>& genIdx);

/// Invariants of the whole group: fixed vectors of all generators.
FpMatrix invariants(const GModule& m);

} // namespace symext

#endif
