#include "symext/engine.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <thread>

#include <nlohmann/json.hpp>

#include "symext/crystal.hpp"
#include "symext/functors.hpp"
#include "symext/homspace.hpp"
#include "symext/meataxe.hpp"
#include "symext/specht.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace symext {

namespace {

constexpr int kCacheFormat = 1;

std::string partitionSlug(const Partition& lam) {
    if (lam.empty())
        return "empty";
    std::string s;
    for (size_t i = 0; i < lam.parts().size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(lam.parts()[i]);
    }
    return s;
}

u64 fnvString(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(u64 v) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
    return buf;
}

/// Exclusive-writer lock; readers never lock.
class FileLock {
public:
    explicit FileLock(const fs::path& path) : path_(path) {
        for (int attempt = 0;; ++attempt) {
            int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
            if (fd >= 0) {
                ::close(fd);
                held_ = true;
                return;
            }
            require(attempt < 600, Err::CacheError, "cache lock busy: " + path_.string());
            std::this_thread::sleep_for(std::chrono::milliseconds(50));
        }
    }
    ~FileLock() {
        if (held_) {
            std::error_code ec;
            fs::remove(path_, ec);
        }
    }

private:
    fs::path path_;
    bool held_ = false;
};

} // namespace

Engine::Engine(Config cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.cacheDir.empty()) {
        std::error_code ec;
        fs::create_directories(cfg_.cacheDir, ec);
    }
}

std::shared_ptr<const GModule> Engine::memoized(const std::string& key, const std::function<GModule()>& make) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = modules_.find(key);
        if (it != modules_.end())
            return it->second;
    }
    auto built = std::make_shared<const GModule>(make());
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = modules_.emplace(key, built);
    return it->second;
}

std::shared_ptr<const GModule> Engine::specht(const Partition& lam, int p) {
    return memoized("S|" + std::to_string(p) + "|" + lam.str(), [&] { return spechtModule(lam, p); });
}

std::shared_ptr<const GModule> Engine::simple(const Partition& lam, int p) {
    return memoized("D|" + std::to_string(p) + "|" + lam.str(), [&]() -> GModule {
        require(isPRegular(lam, p), Err::NotPRegular, "simple: " + lam.str());
        if (lam.empty())
            return GModule(p, 0, 1, {}, "D[]", Content{p, std::vector<int>(p, 0)});
        if (auto cached = loadSimple(lam, p))
            return std::move(*cached);
        GModule d = simpleModuleUncached(lam, p);
        if (!cfg_.cacheDir.empty())
            storeSimple(lam, p, d);
        return d;
    });
}

std::optional<GModule> Engine::loadSimple(const Partition& lam, int p) {
    if (cfg_.cacheDir.empty())
        return std::nullopt;
    fs::path dir = fs::path(cfg_.cacheDir) / ("simple_p" + std::to_string(p) + "_" + partitionSlug(lam));
    fs::path manifestPath = dir / "manifest.json";
    std::error_code ec;
    if (!fs::exists(manifestPath, ec))
        return std::nullopt;
    try {
        std::ifstream is(manifestPath);
        json m = json::parse(is);
        if (m.at("format").get<int>() != kCacheFormat || m.at("p").get<int>() != p ||
            m.at("partition").get<std::string>() != lam.str())
            return std::nullopt;
        int n = m.at("n").get<int>();
        int dim = m.at("dim").get<int>();
        std::vector<FpMatrix> gens;
        auto files = m.at("files").get<std::vector<std::string>>();
        auto sums = m.at("checksums").get<std::vector<std::string>>();
        require(files.size() == sums.size(), Err::CacheError, "manifest checksum count");
        for (size_t k = 0; k < files.size(); ++k) {
            FpMatrix g = readFpmFile((dir / files[k]).string());
            require(hex64(fpmChecksum(g)) == sums[k], Err::CacheError, "manifest checksum mismatch");
            gens.push_back(std::move(g));
        }
        Content block{p, m.at("blockContent").get<std::vector<int>>()};
        GModule d(p, n, dim, std::move(gens), m.at("label").get<std::string>(), block);
        return d;
    } catch (const std::exception&) {
        return std::nullopt; // treat unreadable cache entries as absent
    }
}

void Engine::storeSimple(const Partition& lam, int p, const GModule& d) {
    fs::path root(cfg_.cacheDir);
    fs::path dir = root / ("simple_p" + std::to_string(p) + "_" + partitionSlug(lam));
    std::error_code ec;
    FileLock lock(root / ".writer.lock");
    fs::path tmp = dir;
    tmp += ".tmp";
    fs::remove_all(tmp, ec);
    fs::create_directories(tmp, ec);
    json m;
    m["format"] = kCacheFormat;
    m["p"] = p;
    m["n"] = d.n;
    m["dim"] = d.dim;
    m["label"] = d.label;
    m["partition"] = lam.str();
    m["blockContent"] = d.block ? d.block->counts : std::vector<int>();
    std::vector<std::string> files, sums;
    for (size_t k = 0; k < d.gens.size(); ++k) {
        std::string name = "gen" + std::to_string(k + 1) + ".fpm";
        writeFpmFile((tmp / name).string(), d.gens[k]);
        files.push_back(name);
        sums.push_back(hex64(fpmChecksum(d.gens[k])));
    }
    m["files"] = files;
    m["checksums"] = sums;
    std::ofstream os(tmp / "manifest.json");
    os << m.dump(2) << "\n";
    os.close();
    fs::remove_all(dir, ec);
    fs::rename(tmp, dir, ec);
    if (ec) {
        fs::remove_all(tmp, ec);
    }
}

std::shared_ptr<const GModule> Engine::dividedFSimple(const Partition& mu, int p, int i, int r) {
    std::string key = "f|" + std::to_string(p) + "|" + mu.str() + "|" + std::to_string(i) + "^" + std::to_string(r);
    return memoized(key, [&] { return dividedF(*simple(mu, p), i, r); });
}

std::shared_ptr<const GModule> Engine::dividedESimple(const Partition& mu, int p, int i, int r) {
    std::string key = "e|" + std::to_string(p) + "|" + mu.str() + "|" + std::to_string(i) + "^" + std::to_string(r);
    return memoized(key, [&] { return dividedE(*simple(mu, p), i, r); });
}

Partition Engine::identifyFactor(const GModule& irred) {
    require(irred.dim > 0, Err::BadInput, "identifyFactor on the zero module");
    Content tag = irred.block ? *irred.block : blockSplit(irred).at(0).content;
    int n = irred.n;
    std::optional<Partition> found;
    for (const auto& mu : pRegularPartitionsOf(n, irred.p)) {
        if (!(contentOf(mu, irred.p) == tag))
            continue;
        auto d = simple(mu, irred.p);
        if (d->dim != irred.dim)
            continue;
        if (homDim(irred, *d) >= 1) {
            require(!found.has_value(), Err::InternalError, "factor matches two distinct simples");
            found = mu;
        }
    }
    require(found.has_value(), Err::InternalError, "factor matches no simple of its block");
    return *found;
}

std::vector<std::pair<Partition, int>> Engine::spechtFactors(const Partition& lam, int p) {
    auto S = specht(lam, p);
    auto factors = meataxeFactors(*S, seed() ^ (u64(p) << 24) ^ fnvString(lam.str()));
    std::map<std::string, std::pair<Partition, int>> grouped;
    for (const auto& f : factors) {
        GModule tagged = f;
        if (!tagged.block)
            tagged.block = contentOf(lam, p); // factors inherit the block of the Specht module
        Partition mu = identifyFactor(tagged);
        auto [it, fresh] = grouped.emplace(mu.str(), std::make_pair(mu, 0));
        ++it->second.second;
    }
    std::vector<std::pair<Partition, int>> out;
    for (auto& [k, v] : grouped)
        out.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.parts() > b.first.parts(); });
    return out;
}

} // namespace symext
