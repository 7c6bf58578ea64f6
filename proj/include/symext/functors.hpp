#ifndef SYMEXT_FUNCTORS_HPP
#define SYMEXT_FUNCTORS_HPP

#include <vector>

#include "symext/gmodule.hpp"

namespace symext {

/// Forget the action of the last letter: drop s_{n-1}.
GModule restrictModule(const GModule& m);

/// Induced module to the symmetric group on n+1 letters, on the coset basis
/// (dimension grows by the factor n+1).
GModule induceModule(const GModule& m);

/// Jucys-Murphy matrices L_1..L_n on the module (L_1 = 0), via the recursion
/// L_{k+1} = s_k L_k s_k + s_k.
std::vector<FpMatrix> jucysMurphy(const GModule& m);

/// Matrices of the elementary symmetric polynomials e_1..e_n in the
/// Jucys-Murphy elements; these are central.
std::vector<FpMatrix> centralSymmetricOps(const GModule& m);

/// Expected eigenvalues of e_1..e_n on the block with the given content.
std::vector<u8> contentEigentuple(const Content& c, int n);

struct BlockPiece {
    Content content;
    GModule piece;
};

/// Split into joint generalized eigenspaces of the central operators, tagged
/// by the unique content of a partition of n matching each eigentuple.
std::vector<BlockPiece> blockSplit(const GModule& m);

/// Component of m in the block of the given content (the zero module when
/// that block does not occur).
GModule blockProject(const GModule& m, const Content& target);

/// Divided power restriction e_i^(r): restrict r times, take the fixed points
/// of the top r letters, and project to content - r*delta_i. Input must carry
/// a block tag. r = 0 is the identity.
GModule dividedE(const GModule& m, int i, int r);

/// Divided power induction f_i^(r): induce the outer tensor with the trivial
/// module of r extra letters (coset basis over r-subsets) and project to
/// content + r*delta_i. Input must carry a block tag. r = 0 is the identity.
GModule dividedF(const GModule& m, int i, int r);

} // namespace symext

#endif
