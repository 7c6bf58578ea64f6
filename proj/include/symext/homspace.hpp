#ifndef SYMEXT_HOMSPACE_HPP
#define SYMEXT_HOMSPACE_HPP

#include <vector>

#include "symext/gmodule.hpp"

namespace symext {

/// Submodule generated by the given vectors (rows); echelonized basis rows.
FpMatrix spinVectors(const GModule& m, const FpMatrix& seedRows);
FpMatrix spinVector(const GModule& m, const std::vector<u8>& seed);

/// Spin record of a module from a small generating set: raw basis vectors in
/// spin order, their provenance, and the expansion of every g_k * raw[m]
/// back in the raw basis. This is the data the hom solver walks.
struct SpinTree {
    std::vector<std::vector<u8>> raw;
    struct Src {
        int parent = -1; // -1 for seeds
        int gen = 0;
        int seedIndex = -1;
    };
    std::vector<Src> src;
    struct Dep {
        int m;
        int k;
        std::vector<u8> coeffs; // g_k raw[m] = sum coeffs[t] raw[t]
    };
    std::vector<Dep> deps;
    int seedCount = 0;
};

SpinTree buildSpinTree(const GModule& m);

/// Basis of intertwiners A -> B (matrices of shape dim B x dim A with
/// X rho_A(g) = rho_B(g) X), via parallel spinning along a generating set of
/// A. Each returned element is verified against all generators.
struct HomSpace {
    std::vector<FpMatrix> basis;
    int dim() const { return int(basis.size()); }
};
HomSpace homSpace(const GModule& a, const GModule& b);

/// dim Hom(A,B) without materializing the intertwiners.
int homDim(const GModule& a, const GModule& b);

/// Factor out the image of the unique (up to scalar) copy of the irreducible
/// d inside m; requires dim Hom(d, m) = 1.
GModule quotientBySocleCopy(const GModule& m, const GModule& d);

} // namespace symext

#endif
