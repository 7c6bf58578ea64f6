#ifndef SYMEXT_COHOMOLOGY_HPP
#define SYMEXT_COHOMOLOGY_HPP

#include <vector>

#include "symext/gmodule.hpp"

namespace symext {

/// One-cocycle data on the Coxeter presentation of the symmetric group: a
/// value d_k in V per generator, subject to d(w) = 0 for every defining
/// relation w, where d(g1..gm) = sum_j (g1..g_{j-1}) d(g_j).
///
/// The square relations are folded in from the start: d_k ranges over
/// ker(1 + rho(s_k)). Braid and commuting relations become the row blocks of
/// a constraint matrix over the folded coordinates.
struct CocycleSystem {
    int unknowns = 0;   // sum of folded block dimensions
    int dimZ1 = 0;      // cocycles
    int dimB1 = 0;      // coboundaries = dim V - dim V^G
    int dimInvariants = 0;
    int h1() const { return dimZ1 - dimB1; }
};

/// Dimension data only (no basis extraction); the cheap path for sweeps.
CocycleSystem cocycleDims(const GModule& v);

/// A cocycle as the list of its generator values (each a vector in V).
using Cocycle = std::vector<std::vector<u8>>;

struct CocycleBasis {
    CocycleSystem dims;
    std::vector<Cocycle> h1Classes; // representatives of an H^1 basis
};

/// Full solve including representatives of one-cohomology classes.
CocycleBasis cocycleClasses(const GModule& v);

/// dim H^1(S_n, V) = dim Z^1 - dim B^1.
int h1Dim(const GModule& v);

/// The conjugation module End(D): g.X = rho(g) X rho(g)^{-1}, of dimension
/// (dim d)^2, tagged with d's degree data.
GModule endModule(const GModule& d);

} // namespace symext

#endif
