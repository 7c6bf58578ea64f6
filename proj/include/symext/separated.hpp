#ifndef SYMEXT_SEPARATED_HPP
#define SYMEXT_SEPARATED_HPP

#include <string>
#include <vector>

#include "symext/abacus.hpp"
#include "symext/partition.hpp"

namespace symext {

struct SeparationViolation {
    int i = 0, j = 0;
    int lhs = 0, rhs = 0;
    bool operator==(const SeparationViolation&) const = default;
};

struct SeparationReport {
    bool separated = false;
    Abacus display;
    std::vector<SeparationViolation> violations;
};

/// Runner inequality check: for every pair (i,j) with m_i > m_j on the core
/// display, h(lambda^(i)) + lambda^(j)_1 <= r_i - r_j (i<j) or r_i - r_j + 1
/// (i>j). Cross-checked against the gap-after-bead formulation. No runner of
/// the display may be empty.
SeparationReport isPSeparated(const Partition& lam, int p, const Abacus& display);
SeparationReport isPSeparated(const Partition& lam, int p);

/// Gap-after-bead formulation, used as an independent oracle: for every pair
/// with m_i > m_j, the first gap on runner i sits at a higher position than
/// the last bead on runner j.
bool isPSeparatedByGaps(const Abacus& display);

struct SwapMove {
    Partition from;
    Partition to;
    Abacus displayBefore;
    Abacus displayAfter;
    int j = 0;       // runner index of the move (0 means wrap move)
    int residue = 0; // residue of the nodes added
    int added = 0;   // number of nodes added
};

/// One runner-swap move at j in 1..p-1 (needs r_{j-1} > r_j) or the wrap
/// move at j=0 (needs r_{p-1} >= r_0, realised as addBead then the swap at
/// j=1). The image partition equals hatF at the runner residue and is checked
/// to stay p-separated.
SwapMove swapMove(const Partition& lam, int p, const Abacus& display, int j);

/// Rouquier core condition at weight d: bead counts of the core display
/// satisfy r_j >= r_{j-1} + d - 1 for all j in 1..p-1.
bool isRouquier(const Abacus& display, int d);

struct ReductionStep {
    enum class Kind { swap, wrap, fullRow } kind;
    SwapMove move; // for fullRow steps the partition is unchanged
};

struct ReductionTrace {
    Partition start;
    std::vector<ReductionStep> steps;
    Abacus terminal;
    Partition terminalPartition;
    int weight = 0;
};

/// Repeated swap moves (smallest descent j first, wrap move otherwise) until
/// the display is Rouquier for its weight. Every intermediate partition is
/// checked p-separated and weights are checked invariant.
ReductionTrace rockReduce(const Partition& lam, int p);
ReductionTrace rockReduce(const Partition& lam, int p, Abacus display);

} // namespace symext

#endif
