#ifndef SYMEXT_SPECHT_HPP
#define SYMEXT_SPECHT_HPP

#include <vector>

#include "symext/gmodule.hpp"
#include "symext/partition.hpp"

namespace symext {

/// Standard Young tableaux of a shape, rows as vectors of letters 1..n,
/// increasing along rows and down columns.
std::vector<std::vector<std::vector<int>>> standardTableaux(const Partition& lam);
long long standardTableauxCount(const Partition& lam);

/// The Specht module over F_p on the standard polytabloid basis. The action
/// of each adjacent transposition is expanded inside the tabloid permutation
/// module and re-expressed in the standard basis (straightening as linear
/// algebra). Tagged with its block content.
GModule spechtModule(const Partition& lam, int p);

/// Gram matrix of the canonical bilinear form on the standard polytabloids.
FpMatrix spechtGram(const Partition& lam, int p);

/// Head of the Specht module for p-regular lambda: quotient by the radical of
/// the bilinear form; dim = rank of the Gram matrix.
GModule simpleModuleUncached(const Partition& lam, int p);

} // namespace symext

#endif
