#ifndef SYMEXT_EXT_HPP
#define SYMEXT_EXT_HPP

#include "symext/cohomology.hpp"
#include "symext/engine.hpp"

namespace symext {

/// A uniserial self-extension D|D realised with block upper-triangular
/// generators from a one-cocycle on End(D).
struct ExtensionModule {
    Partition lam;
    int p = 2;
    GModule base;  // D
    GModule total; // dim 2 dim D
    Cocycle cocycle;
};

/// Total space of the extension attached to a cocycle d: generators
/// [[rho, d(g) rho], [0, rho]]. No uniseriality requirement here.
GModule extensionTotal(const GModule& d, const Cocycle& cocycle);

/// Length-2 uniseriality with both factors D: dim Hom(D, V) = dim Hom(V, D) = 1.
bool isUniserialDD(const GModule& total, const GModule& d);

/// Extension from the classIndex-th basis class of H^1(End D); throws
/// NoSelfExtension when that many classes do not exist.
ExtensionModule buildExtension(Engine& eng, const Partition& lam, int p, int classIndex);

/// V embeds into M. Requires soc M simple isomorphic to D (operationally
/// dim Hom(D, M) = 1); then an embedding exists iff dim Hom(V.total, M) >= 2.
bool embedsIn(const ExtensionModule& v, const GModule& m);

struct MinimalBResult {
    int b = 0;
    int c = 0;
    int epsI = 0;
    int phiI = 0;
};

/// Smallest b with V inside f_i^(b) D^{e-tilde^b lambda}, and the dual-side
/// minimal c (V a quotient of e_i^(c) D^{f-tilde^c lambda}); asserts b = c.
MinimalBResult minimalB(Engine& eng, const ExtensionModule& v, int i);

} // namespace symext

#endif
