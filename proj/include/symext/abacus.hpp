#ifndef SYMEXT_ABACUS_HPP
#define SYMEXT_ABACUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symext/partition.hpp"

namespace symext {

/// Beta-set displayed on p runners: bead at position b sits on runner b mod p,
/// row b div p. Positions follow the convention lambda_k = a_k + (beads - k),
/// so {h-1,...,1,0} encodes the empty partition.
struct Abacus {
    int p = 2;
    std::vector<int> beads; // strictly decreasing, all >= 0

    Abacus() = default;
    Abacus(int p, std::vector<int> beads);

    int beadCount() const { return int(beads.size()); }
    bool occupied(int pos) const;
    bool normalized() const { return !beads.empty() && beads.back() == 0; }

    bool operator==(const Abacus&) const = default;

    std::string render() const; // ASCII rows, '●' bead / '·' gap
    std::string str() const;    // {6,3,0}
};

struct RunnerStats {
    std::vector<int> r;                           // beads per runner
    std::vector<std::optional<int>> m;            // largest core-display position per runner
    std::vector<Partition> quotient;              // runner partitions
    int weight() const;
};

Abacus displayOf(const Partition& lam, int p, int beadCount);
Partition partitionOf(const Abacus& g);

RunnerStats runnerStats(const Abacus& g);
/// Display with all beads pushed to the top of their runners.
Abacus pushedUp(const Abacus& g);
Partition coreOf(const Abacus& g);
int weightOf(const Abacus& g);

/// Adds a full row of p beads at the top: every position shifts by p and
/// 0..p-1 fill in. Encoded partition, core and weight are unchanged; every
/// runner gains one bead.
Abacus addFullRow(const Abacus& g);
/// Adds a single bead: every position shifts by 1 and 0 fills in. Encoded
/// partition unchanged; runner contents rotate by one.
Abacus addBead(const Abacus& g);

/// Exchange runners j-1 and j row by row (positions j-1+pc <-> j+pc).
Abacus swapRunners(const Abacus& g, int j);

/// Residue of the addable/removable positions sitting on runner j.
int runnerResidue(const Abacus& g, int j);

/// Smallest display satisfying the house convention: bead count is the least
/// multiple of p that is >= h(lambda)+1, padded with one further full row if
/// some runner would be empty.
Abacus defaultDisplay(const Partition& lam, int p);

} // namespace symext

#endif
