#ifndef SYMEXT_ENGINE_HPP
#define SYMEXT_ENGINE_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "symext/gmodule.hpp"
#include "symext/partition.hpp"

namespace symext {

struct ExtTraceEntry {
    Partition level;
    int residue = 0;
    int eps = 0;
    int homDimAtLevel = 0; // dim Hom(D, f^(eps)D^{e-tilde}/D)
};

struct ExtReport {
    Partition lam;
    int p = 2;
    enum class Method { oracle, recursive } method = Method::oracle;
    int lower = 0;
    int upper = 0;
    bool exact = true;
    std::vector<ExtTraceEntry> trace; // recursive only
    int cocycleUnknowns = 0;          // oracle only
    int dimZ1 = 0;
    int dimB1 = 0;
    int value() const {
        require(exact, Err::PreconditionFailed, "ext report is an interval, not exact");
        return lower;
    }
};

/// Shared computation context: memoized modules and reports, plus the disk
/// cache of simple modules. Safe for concurrent use; parallel callers may
/// duplicate a computation but results are identical and first write wins.
class Engine {
public:
    struct Config {
        std::string cacheDir; // empty = no disk cache
        u64 seed = 0x5eedbeefcafeULL;
    };

    Engine() : Engine(Config{}) {}
    explicit Engine(Config cfg);

    const Config& config() const { return cfg_; }
    u64 seed() const { return cfg_.seed; }

    std::shared_ptr<const GModule> specht(const Partition& lam, int p);
    std::shared_ptr<const GModule> simple(const Partition& lam, int p);
    /// f_i^(r) applied to the simple indexed by mu (日 lives one level up).
    std::shared_ptr<const GModule> dividedFSimple(const Partition& mu, int p, int i, int r);
    /// e_i^(r) applied to the simple indexed by mu.
    std::shared_ptr<const GModule> dividedESimple(const Partition& mu, int p, int i, int r);

    ExtReport selfExtOracle(const Partition& lam, int p);
    ExtReport selfExtRecursive(const Partition& lam, int p, bool allResidues = false);

    /// Label an irreducible module by matching content, dimension and a hom
    /// test against the simples of its degree.
    Partition identifyFactor(const GModule& irred);

    /// Composition factors of the Specht module, identified; pairs of
    /// (partition label, multiplicity).
    std::vector<std::pair<Partition, int>> spechtFactors(const Partition& lam, int p);

private:
    Config cfg_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const GModule>> modules_;
    std::map<std::string, ExtReport> extReports_;

    std::shared_ptr<const GModule> memoized(const std::string& key, const std::function<GModule()>& make);
    std::optional<GModule> loadSimple(const Partition& lam, int p);
    void storeSimple(const Partition& lam, int p, const GModule& d);
};

} // namespace symext

#endif
