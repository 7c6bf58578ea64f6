#ifndef SYMEXT_VERIFY_HPP
#define SYMEXT_VERIFY_HPP

#include <nlohmann/json.hpp>

#include "symext/engine.hpp"
#include "symext/ext.hpp"
#include "symext/separated.hpp"

namespace symext {

struct VerifyCase {
    std::string key;
    std::string status; // pass | fail | skip
    std::string reason; // skip reason or failure description
    nlohmann::json data;
};

struct VerificationReport {
    std::string theorem;
    int p = 0;
    int nMax = 0;
    u64 seed = 0;
    std::string displayPolicy = "default";
    std::vector<VerifyCase> cases;
    long long wallMs = 0;

    int count(const std::string& status) const;
    bool ok() const { return count("fail") == 0; }
    void add(std::string key, bool pass, std::string reason = "", nlohmann::json data = {});
    void skip(std::string key, std::string reason, nlohmann::json data = {});
    void sortCases();
    nlohmann::json toJson(bool includeWall = true) const;
};

/// Every p-separated alpha up to nMax: no composition factor of the Specht
/// module has self-extensions (p >= 3). With allDisplays, the separation
/// verdict is re-tested on up to three extra full rows of beads and any
/// sensitivity is reported as a failure.
VerificationReport verifyTheoremA(Engine& eng, int p, int nMax, int jobs = 1, bool allDisplays = false);

/// Two clean lower levels at distinct residues force a clean level; minimal
/// partitions with self-extensions have all normal nodes of one residue.
VerificationReport verifyTheoremB(Engine& eng, int p, int nMax, int jobs = 1);

/// For every self-extension witness: the minimal embedding depth b satisfies
/// 1 <= b <= min(eps_i, phi_i), b equals the dual-side c, and the 2b modified
/// partitions are p-singular.
VerificationReport verifyTheoremC(Engine& eng, int p, int nMax, int jobs = 1);

/// Shape template and node coordinates for every Theorem C case.
VerificationReport verifyCorollaryShape(Engine& eng, int p, int nMax);

/// Property batteries: runner-swap equivalence, the Hom <= 1 bound, the
/// divided-power engine identities, and block/content/core consistency.
VerificationReport lemmaSuite(Engine& eng, int p, int nMax, int jobs = 1);

// individual batteries (the lemma suite runs them all)
void swapEquivalenceBattery(Engine& eng, int p, int nMax, VerificationReport& rep);
void homBoundBattery(Engine& eng, int p, int nMax, VerificationReport& rep);
void engineBattery(Engine& eng, int p, int nMax, VerificationReport& rep);
void blockConsistencyBattery(Engine& eng, int p, int nMax, VerificationReport& rep);

/// Corollary shape template: lambda = (prefix of h parts, a+b, (a+b-1)^(p-1),
/// ..., (a+1)^(p-1), a^(p-2), (a-1)^(p-1), ..., (a-b+1)^(p-1), a-b, tail),
/// with a >= b >= 1 and tail parts at most a-b.
struct TemplateMatch {
    int h = 0;
    int a = 0;
};
std::optional<TemplateMatch> matchCorollaryTemplate(const Partition& lam, int p, int b);

/// Build the template partition for given parameters (prefix and tail given
/// explicitly); used by the matcher tests and the instance enumerator.
Partition corollaryTemplatePartition(const std::vector<int>& prefix, int a, int b, int p,
                                     const std::vector<int>& tail);

/// Expected coordinates of the bottom b normal nodes of residue i (bottom-up)
/// and the top b conormal nodes (top-down) on a template shape.
std::vector<Node> templateBottomNormal(int h, int a, int b, int p);
std::vector<Node> templateTopConormal(int h, int a, int b, int p);

} // namespace symext

#endif
