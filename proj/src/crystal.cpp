#include "symext/crystal.hpp"

#include <algorithm>
#include <sstream>

namespace symext {

std::vector<SignatureEntry> signature(const Partition& lam, int i, int p) {
    require(i >= 0 && i < p, Err::BadInput, "signature: residue out of range");
    // Addable and removable nodes never share a row, so the rim walk from
    // bottom left to top right is plain decreasing row order.
    std::vector<SignatureEntry> sig;
    for (const Node& a : addableNodes(lam, i, p))
        sig.push_back({a, Sign::plus});
    for (const Node& a : removableNodes(lam, i, p))
        sig.push_back({a, Sign::minus});
    std::sort(sig.begin(), sig.end(),
              [](const SignatureEntry& x, const SignatureEntry& y) { return x.node.row > y.node.row; });
    return sig;
}

CrystalProfile reduceSignature(const std::vector<SignatureEntry>& sig) {
    CrystalProfile prof;
    for (const auto& e : sig)
        (e.sign == Sign::minus ? prof.epsPrime : prof.phiPrime)++;
    // A stack pass: a + cancels the most recent surviving -.
    std::vector<SignatureEntry> stack;
    for (const auto& e : sig) {
        if (e.sign == Sign::plus && !stack.empty() && stack.back().sign == Sign::minus)
            stack.pop_back();
        else
            stack.push_back(e);
    }
    for (const auto& e : stack) {
        if (e.sign == Sign::minus)
            prof.normal.push_back(e.node); // signature order is bottom to top
        else
            prof.conormal.push_back(e.node);
    }
    std::reverse(prof.conormal.begin(), prof.conormal.end()); // top to bottom
    prof.eps = int(prof.normal.size());
    prof.phi = int(prof.conormal.size());
    return prof;
}

CrystalProfile crystalProfile(const Partition& lam, int i, int p) { return reduceSignature(signature(lam, i, p)); }

std::optional<Partition> tildeE(const Partition& lam, int i, int r, int p) {
    require(isPRegular(lam, p), Err::NotPRegular, "tildeE: " + lam.str());
    require(r >= 0, Err::BadInput, "tildeE: negative count");
    if (r == 0)
        return lam;
    auto prof = crystalProfile(lam, i, p);
    if (r > prof.eps)
        return std::nullopt;
    std::vector<Node> rem(prof.normal.begin(), prof.normal.begin() + r);
    return modifyNodes(lam, rem, {});
}

std::optional<Partition> tildeF(const Partition& lam, int i, int r, int p) {
    require(isPRegular(lam, p), Err::NotPRegular, "tildeF: " + lam.str());
    require(r >= 0, Err::BadInput, "tildeF: negative count");
    if (r == 0)
        return lam;
    auto prof = crystalProfile(lam, i, p);
    if (r > prof.phi)
        return std::nullopt;
    std::vector<Node> add(prof.conormal.begin(), prof.conormal.begin() + r);
    return modifyNodes(lam, {}, add);
}

Partition hatE(const Partition& lam, int i, int p) { return modifyNodes(lam, removableNodes(lam, i, p), {}); }

Partition hatF(const Partition& lam, int i, int p) { return modifyNodes(lam, {}, addableNodes(lam, i, p)); }

std::string signatureString(const std::vector<SignatureEntry>& sig) {
    std::ostringstream os;
    for (const auto& e : sig)
        os << (e.sign == Sign::plus ? '+' : '-');
    return os.str();
}

} // namespace symext
