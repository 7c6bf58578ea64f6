#include <doctest.h>

#include <random>

#include "symext/abacus.hpp"
#include "symext/crystal.hpp"

using namespace symext;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Oracle reducer: delete one random adjacent -+ pair at a time.
CrystalProfile randomOrderReduce(std::vector<SignatureEntry> sig, std::mt19937_64& rng) {
    while (true) {
        std::vector<size_t> spots;
        for (size_t t = 0; t + 1 < sig.size(); ++t)
            if (sig[t].sign == Sign::minus && sig[t + 1].sign == Sign::plus)
                spots.push_back(t);
        if (spots.empty())
            break;
        size_t pick = spots[rng() % spots.size()];
        sig.erase(sig.begin() + pick, sig.begin() + pick + 2);
    }
    CrystalProfile prof;
    for (const auto& e : sig)
        if (e.sign == Sign::minus)
            prof.normal.push_back(e.node);
        else
            prof.conormal.push_back(e.node);
    std::reverse(prof.conormal.begin(), prof.conormal.end());
    prof.eps = int(prof.normal.size());
    prof.phi = int(prof.conormal.size());
    return prof;
}

} // namespace

TEST_CASE("signature examples") {
    auto s1 = signature(P({2, 1}), 1, 2);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].sign == Sign::minus);
    CHECK(s1[0].node == Node{2, 1});
    CHECK(s1[1].node == Node{1, 2});

    auto s0 = signature(P({2, 1}), 0, 2);
    CHECK(signatureString(s0) == "+++");
    CHECK(s0[0].node == Node{3, 1});
    CHECK(s0[2].node == Node{1, 3});

    CHECK(signature(P({}), 0, 3).size() == 1);
    CHECK(signature(P({}), 1, 3).empty());
    CHECK(signature(P({}), 2, 3).empty());
}

TEST_CASE("reduce examples") {
    // one cancellation
    std::vector<SignatureEntry> mp{{{2, 1}, Sign::minus}, {{1, 2}, Sign::plus}};
    auto r = reduceSignature(mp);
    CHECK(r.eps == 0);
    CHECK(r.phi == 0);
    CHECK(r.epsPrime == 1);
    CHECK(r.phiPrime == 1);

    auto r2 = crystalProfile(P({2, 1}), 1, 2);
    CHECK(r2.eps == 2);
    CHECK(r2.normal == std::vector<Node>{{2, 1}, {1, 2}});
    CHECK(r2.good() == Node{2, 1});

    auto r3 = crystalProfile(P({2, 1}), 0, 2);
    CHECK(r3.phi == 3);
    CHECK(r3.conormal == std::vector<Node>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(r3.cogood() == Node{1, 3});
}

TEST_CASE("reduction is order independent") {
    std::mt19937_64 rng(0xabc);
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : partitionsOf(n))
            for (int p : {2, 3})
                for (int i = 0; i < p; ++i) {
                    auto sig = signature(lam, i, p);
                    auto prof = reduceSignature(sig);
                    for (int t = 0; t < 10; ++t) {
                        auto alt = randomOrderReduce(sig, rng);
                        CHECK(alt.normal == prof.normal);
                        CHECK(alt.conormal == prof.conormal);
                    }
                }
}

TEST_CASE("phi - eps equals phi' - eps'") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : partitionsOf(n))
            for (int p : {2, 3, 5})
                for (int i = 0; i < p; ++i) {
                    auto prof = crystalProfile(lam, i, p);
                    CHECK(prof.phi - prof.eps == prof.phiPrime - prof.epsPrime);
                }
}

TEST_CASE("ladder operator examples") {
    CHECK(tildeE(P({2, 1}), 1, 1, 2) == P({2}));
    CHECK(tildeE(P({2, 1}), 1, 2, 2) == P({1}));
    CHECK(tildeE(P({2, 1}), 1, 3, 2) == std::nullopt);
    CHECK(tildeF(P({1}), 1, 2, 2) == P({2, 1})); // inverse of the removal above
    CHECK(tildeE(P({2, 1}), 1, 0, 2) == P({2, 1}));
    CHECK_THROWS_AS((void)tildeE(P({1, 1}), 0, 1, 2), SymError);
}

TEST_CASE("hat operators") {
    CHECK(hatF(P({2, 1}), 0, 2) == P({3, 2, 1}));
    CHECK(hatE(P({2, 1}), 0, 2) == P({2, 1}));
    CHECK(hatE(hatF(P({}), 0, 3), 0, 3) == P({}));
}

TEST_CASE("tilde operators invert each other and preserve regularity") {
    for (int n = 0; n <= 12; ++n)
        for (int p : {2, 3, 5})
            for (const auto& lam : pRegularPartitionsOf(n, p))
                for (int i = 0; i < p; ++i) {
                    auto prof = crystalProfile(lam, i, p);
                    for (int r = 0; r <= prof.eps; ++r) {
                        auto down = tildeE(lam, i, r, p);
                        REQUIRE(down.has_value());
                        CHECK(isPRegular(*down, p));
                        CHECK(tildeF(*down, i, r, p) == lam);
                    }
                    for (int r = 0; r <= prof.phi; ++r) {
                        auto up = tildeF(lam, i, r, p);
                        REQUIRE(up.has_value());
                        CHECK(isPRegular(*up, p));
                        CHECK(tildeE(*up, i, r, p) == lam);
                    }
                }
}

TEST_CASE("every non-empty p-regular partition has a normal node") {
    for (int n = 1; n <= 14; ++n)
        for (int p : {2, 3, 5})
            for (const auto& lam : pRegularPartitionsOf(n, p)) {
                int eps = 0;
                for (int i = 0; i < p; ++i)
                    eps += crystalProfile(lam, i, p).eps;
                CHECK(eps >= 1);
            }
}

TEST_CASE("node residue classes match runners of any display") {
    // i-removable/addable nodes correspond to removable/addable positions on
    // a single runner
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : partitionsOf(n))
            for (int p : {2, 3}) {
                Abacus g = defaultDisplay(lam, p);
                int b = g.beadCount();
                for (int i = 0; i < p; ++i) {
                    int runner = ((i + b) % p + p) % p; // inverse of (j - b) mod p
                    // removable positions on that runner
                    int removablePositions = 0;
                    for (int bead : g.beads)
                        if (bead % p == runner && bead > 0 && !g.occupied(bead - 1))
                            ++removablePositions;
                    int addablePositions = 0;
                    int maxPos = g.beads.front() + p;
                    for (int pos = 1; pos <= maxPos; ++pos)
                        if (pos % p == runner && !g.occupied(pos) && g.occupied(pos - 1))
                            ++addablePositions;
                    CHECK(removablePositions == int(removableNodes(lam, i, p).size()));
                    CHECK(addablePositions == int(addableNodes(lam, i, p).size()));
                }
            }
}
