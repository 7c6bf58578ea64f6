#ifndef SYMEXT_CRYSTAL_HPP
#define SYMEXT_CRYSTAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "symext/partition.hpp"

namespace symext {

enum class Sign : unsigned char { plus, minus };

struct SignatureEntry {
    Node node;
    Sign sign;
    bool operator==(const SignatureEntry&) const = default;
};

/// Signed i-addable/i-removable nodes read along the rim from bottom left to
/// top right (equivalently in strictly decreasing row order).
std::vector<SignatureEntry> signature(const Partition& lam, int i, int p);

struct CrystalProfile {
    int eps = 0;       // #normal
    int phi = 0;       // #conormal
    int epsPrime = 0;  // #removable
    int phiPrime = 0;  // #addable
    std::vector<Node> normal;   // bottom to top
    std::vector<Node> conormal; // top to bottom
    std::optional<Node> good() const { return normal.empty() ? std::nullopt : std::optional<Node>(normal.front()); }
    std::optional<Node> cogood() const { return conormal.empty() ? std::nullopt : std::optional<Node>(conormal.front()); }
};

/// Cancel -+ neighbours until none remain; survivors are the normal (-) and
/// conormal (+) nodes. The outcome is order independent (tested).
CrystalProfile reduceSignature(const std::vector<SignatureEntry>& sig);

CrystalProfile crystalProfile(const Partition& lam, int i, int p);

/// Remove the r bottom i-normal nodes; nullopt when r exceeds eps_i.
std::optional<Partition> tildeE(const Partition& lam, int i, int r, int p);
/// Add the r top i-conormal nodes; nullopt when r exceeds phi_i.
std::optional<Partition> tildeF(const Partition& lam, int i, int r, int p);

/// Remove all i-removable nodes.
Partition hatE(const Partition& lam, int i, int p);
/// Add all i-addable nodes.
Partition hatF(const Partition& lam, int i, int p);

std::string signatureString(const std::vector<SignatureEntry>& sig);

} // namespace symext

#endif
