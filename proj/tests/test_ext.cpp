#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "symext/crystal.hpp"
#include "symext/ext.hpp"
#include "symext/homspace.hpp"
#include "symext/specht.hpp"

using namespace symext;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("oracle on one-row partitions") {
    Engine eng;
    for (int n = 2; n <= 5; ++n) {
        CHECK(eng.selfExtOracle(P({n}), 3).value() == 0);
        CHECK(eng.selfExtOracle(P({n}), 5).value() == 0);
        CHECK(eng.selfExtOracle(P({n}), 2).value() == 1);
    }
    CHECK(eng.selfExtOracle(P({}), 3).value() == 0);
    CHECK(eng.selfExtOracle(P({1}), 2).value() == 0);
}

TEST_CASE("odd primes carry no self-extensions at desk scale (small sweep)") {
    Engine eng;
    for (int n = 2; n <= 5; ++n)
        for (const auto& lam : pRegularPartitionsOf(n, 3)) {
            auto oracle = eng.selfExtOracle(lam, 3);
            CHECK(oracle.value() == 0);
            auto rec = eng.selfExtRecursive(lam, 3);
            CHECK(rec.exact);
            CHECK(rec.lower == 0);
            for (const auto& te : rec.trace)
                CHECK(te.homDimAtLevel == 0);
        }
}

TEST_CASE("recursive intervals always contain the oracle value at p=2") {
    Engine eng;
    for (int n = 2; n <= 5; ++n)
        for (const auto& lam : pRegularPartitionsOf(n, 2)) {
            int oracle = eng.selfExtOracle(lam, 2).value();
            auto rec = eng.selfExtRecursive(lam, 2);
            CHECK(rec.lower <= oracle);
            CHECK(oracle <= rec.upper);
            if (rec.exact)
                CHECK(rec.lower == oracle);
            auto tight = eng.selfExtRecursive(lam, 2, true);
            CHECK(tight.lower <= oracle);
            CHECK(oracle <= tight.upper);
            CHECK(tight.lower >= rec.lower);
            CHECK(tight.upper <= rec.upper);
        }
}

TEST_CASE("extension construction at the smallest witness") {
    Engine eng;
    ExtensionModule v = buildExtension(eng, P({2}), 2, 0);
    CHECK(v.total.dim == 2);
    CHECK(isUniserialDD(v.total, v.base));
    CHECK(homDim(v.total, v.total) >= 1);
    // the dual is again a self-extension of the same simple
    GModule dt = dual(v.total);
    CHECK(homDim(v.total, dt) >= 1);
    // requesting a class beyond H^1 fails
    CHECK_THROWS_AS((void)buildExtension(eng, P({2}), 2, 5), SymError);
    // p=3 has no class at all
    CHECK_THROWS_AS((void)buildExtension(eng, P({3}), 3, 0), SymError);
}

TEST_CASE("a coboundary builds a split extension and fails uniseriality") {
    Engine eng;
    auto d = eng.simple(P({2}), 2);
    // coboundary of v: d(g) = (g - 1).v in the conjugation module
    GModule end = endModule(*d);
    std::vector<u8> v(end.dim, 0);
    v[0] = 1;
    Cocycle cob;
    for (int k = 1; k < end.n; ++k) {
        auto w = end.gen(k).mulVec(v);
        for (size_t t = 0; t < w.size(); ++t)
            w[t] = u8((w[t] + end.p - v[t]) % end.p);
        cob.push_back(w);
    }
    GModule total = extensionTotal(*d, cob);
    CHECK_FALSE(isUniserialDD(total, *d));
    CHECK(homDim(*d, total) == 2); // split: two copies in the socle
}

TEST_CASE("embedding tests") {
    Engine eng;
    ExtensionModule v = buildExtension(eng, P({2}), 2, 0);
    CHECK(embedsIn(v, v.total));
    CHECK_FALSE(embedsIn(v, v.base));
}

TEST_CASE("minimal embedding depth at the smallest witness") {
    Engine eng;
    ExtensionModule v = buildExtension(eng, P({2}), 2, 0);
    auto prof = crystalProfile(P({2}), 1, 2);
    REQUIRE(prof.eps == 1);
    REQUIRE(prof.phi == 1);
    MinimalBResult mb = minimalB(eng, v, 1);
    CHECK(mb.b == 1);
    CHECK(mb.c == 1);
}

TEST_CASE("memoized reports are stable") {
    Engine eng;
    auto a = eng.selfExtOracle(P({3, 1}), 2);
    auto b = eng.selfExtOracle(P({3, 1}), 2);
    CHECK(a.lower == b.lower);
    CHECK(a.dimZ1 == b.dimZ1);
}

TEST_CASE("self-extensions are dual-stable with an invertible witness") {
    Engine eng;
    ExtensionModule v = buildExtension(eng, P({3, 1}), 2, 0);
    GModule dt = dual(v.total);
    bool invertibleWitness = false;
    for (const auto& x : homSpace(v.total, dt).basis)
        invertibleWitness = invertibleWitness || rankOf(x) == v.total.dim;
    CHECK(invertibleWitness);
}

TEST_CASE("disk cache round trip for simple modules") {
    std::string dir = "ext_cache_test_dir";
    std::filesystem::remove_all(dir);
    {
        Engine eng(Engine::Config{dir, 1});
        auto d = eng.simple(P({3, 1}), 2);
        CHECK(d->dim > 0);
    }
    // a fresh engine must load identical matrices from disk
    Engine eng2(Engine::Config{dir, 1});
    auto d2 = eng2.simple(P({3, 1}), 2);
    GModule fresh = simpleModuleUncached(P({3, 1}), 2);
    REQUIRE(d2->gens.size() == fresh.gens.size());
    for (size_t k = 0; k < fresh.gens.size(); ++k)
        CHECK(d2->gens[k] == fresh.gens[k]);
    CHECK(d2->block == fresh.block);
    // a corrupted generator file is detected and recomputed transparently
    {
        std::ofstream os(dir + "/simple_p2_3.1/gen1.fpm", std::ios::binary | std::ios::trunc);
        os << "garbage";
    }
    Engine eng3(Engine::Config{dir, 1});
    auto d3 = eng3.simple(P({3, 1}), 2);
    CHECK(d3->dim == fresh.dim);
    std::filesystem::remove_all(dir);
}

TEST_CASE("every cohomology class of a two-dimensional ext space builds a uniserial extension") {
    Engine eng;
    REQUIRE(eng.selfExtOracle(P({5, 2}), 2).value() == 2);
    ExtensionModule v0 = buildExtension(eng, P({5, 2}), 2, 0);
    ExtensionModule v1 = buildExtension(eng, P({5, 2}), 2, 1);
    CHECK(isUniserialDD(v0.total, v0.base));
    CHECK(isUniserialDD(v1.total, v1.base));
    CHECK_THROWS_AS((void)buildExtension(eng, P({5, 2}), 2, 2), SymError);
}

TEST_CASE("shared engine serves concurrent requests") {
    std::string dir = "ext_thread_cache_dir";
    std::filesystem::remove_all(dir);
    Engine eng(Engine::Config{dir, 7});
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int n = 2; n <= 5; ++n)
                    for (const auto& lam : pRegularPartitionsOf(n, 2 + (t % 2))) {
                        auto d = eng.simple(lam, 2 + (t % 2));
                        if (d->dim <= 0)
                            ++bad;
                        if (eng.selfExtOracle(lam, 2 + (t % 2)).lower < 0)
                            ++bad;
                    }
            } catch (const std::exception&) {
                ++bad;
            }
        });
    for (auto& th : pool)
        th.join();
    CHECK(bad.load() == 0);
    std::filesystem::remove_all(dir);
}
