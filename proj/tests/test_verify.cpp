#include <doctest.h>

#include <functional>
#include <set>

#include "symext/verify.hpp"

using namespace symext;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Independent template oracle: enumerate every template instance up to a
/// size bound, with full recursive prefix and tail generation.
void genDecreasing(int lo, int hi, int budget, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
    emit(cur);
    int top = cur.empty() ? hi : std::min(hi, cur.back());
    for (int v = lo; v <= std::min(top, budget); ++v) {
        cur.push_back(v);
        genDecreasing(lo, hi, budget - v, cur, emit);
        cur.pop_back();
    }
}

std::set<std::string> enumerateTemplates(int p, int b, int maxSize) {
    std::set<std::string> out;
    for (int a = b;; ++a) {
        Partition core = corollaryTemplatePartition({}, a, b, p, {});
        if (core.size() > maxSize)
            break;
        int budget = maxSize - core.size();
        std::vector<int> pre;
        genDecreasing(a + b, maxSize, budget, pre, [&](const std::vector<int>& prefix) {
            int used = 0;
            for (int v : prefix)
                used += v;
            int rest = budget - used;
            if (a - b == 0) {
                out.insert(corollaryTemplatePartition(prefix, a, b, p, {}).str());
                return;
            }
            std::vector<int> tl;
            genDecreasing(1, a - b, rest, tl, [&](const std::vector<int>& tail) {
                out.insert(corollaryTemplatePartition(prefix, a, b, p, tail).str());
            });
        });
    }
    return out;
}

} // namespace

TEST_CASE("template matcher agrees with the brute-force enumerator") {
    for (int p : {2, 3})
        for (int b : {1, 2}) {
            auto instances = enumerateTemplates(p, b, 14);
            CHECK(!instances.empty());
            for (int n = 1; n <= 14; ++n)
                for (const auto& lam : partitionsOf(n)) {
                    bool expected = instances.count(lam.str()) > 0;
                    CHECK(matchCorollaryTemplate(lam, p, b).has_value() == expected);
                }
        }
}

TEST_CASE("template worked examples") {
    // p=3, b=1, a=1, h=0 reads (2,1)
    auto m = matchCorollaryTemplate(P({2, 1}), 3, 1);
    REQUIRE(m.has_value());
    CHECK(m->h == 0);
    CHECK(m->a == 1);
    // depth above a never matches
    CHECK_FALSE(matchCorollaryTemplate(P({2, 1}), 3, 2).has_value());
    CHECK_FALSE(matchCorollaryTemplate(P({3}), 2, 2).has_value());
    // p=2, b=1: gapped staircases, possibly under a prefix
    CHECK(matchCorollaryTemplate(P({2}), 2, 1).has_value());
    CHECK(matchCorollaryTemplate(P({3, 1}), 2, 1).has_value());
    CHECK(matchCorollaryTemplate(P({2, 2}), 2, 1).has_value()); // prefix (2), a = 1
    CHECK_FALSE(matchCorollaryTemplate(P({2, 2}), 3, 1).has_value());
    CHECK_FALSE(matchCorollaryTemplate(P({1, 1}), 2, 1).has_value());
}

TEST_CASE("template node coordinates on worked instances") {
    // lambda = (2) at p=2, b=1, h=0, a=1
    auto B = templateBottomNormal(0, 1, 1, 2);
    REQUIRE(B.size() == 1);
    CHECK(B[0] == Node{1, 2});
    auto C = templateTopConormal(0, 1, 1, 2);
    REQUIRE(C.size() == 1);
    CHECK(C[0] == Node{2, 1});
    // lambda = (4,3,1) at p=2, b=2, h=0, a=2
    auto B2 = templateBottomNormal(0, 2, 2, 2);
    CHECK(B2 == std::vector<Node>{{2, 3}, {1, 4}});
    auto C2 = templateTopConormal(0, 2, 2, 2);
    CHECK(C2 == std::vector<Node>{{3, 2}, {4, 1}});
}

TEST_CASE("verifier smoke runs on small envelopes") {
    Engine eng;
    auto a = verifyTheoremA(eng, 3, 4);
    CHECK(a.ok());
    CHECK(a.count("pass") >= 1);

    auto b2 = verifyTheoremB(eng, 2, 4);
    CHECK(b2.ok());
    auto b3 = verifyTheoremB(eng, 3, 4);
    CHECK(b3.ok());

    auto c = verifyTheoremC(eng, 2, 4);
    CHECK(c.ok());
    CHECK(c.count("pass") >= 1); // (2) and more carry witnesses at p=2

    auto cor = verifyCorollaryShape(eng, 2, 4);
    CHECK(cor.ok());

    auto c3 = verifyTheoremC(eng, 3, 4);
    CHECK(c3.ok());
    CHECK(c3.count("pass") == 1); // vacuous
}

TEST_CASE("reports are reproducible and machine readable") {
    Engine eng1, eng2;
    auto r1 = verifyTheoremB(eng1, 3, 4);
    auto r2 = verifyTheoremB(eng2, 3, 4);
    CHECK(r1.toJson(false) == r2.toJson(false));
    auto j = r1.toJson();
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["envelope"]["p"] == 3);
    CHECK(j.contains("cases"));
    CHECK(j["summary"].contains("fail"));
}

TEST_CASE("lemma batteries on a tiny envelope") {
    Engine eng;
    VerificationReport rep;
    rep.theorem = "lemmas";
    rep.p = 3;
    rep.nMax = 4;
    swapEquivalenceBattery(eng, 3, 4, rep);
    homBoundBattery(eng, 3, 4, rep);
    blockConsistencyBattery(eng, 3, 4, rep);
    CHECK(rep.ok());
}

TEST_CASE("engine battery on a tiny envelope") {
    Engine eng;
    VerificationReport rep;
    rep.theorem = "lemmas";
    rep.p = 2;
    rep.nMax = 4;
    engineBattery(eng, 2, 4, rep);
    CHECK(rep.ok());
    for (const auto& c : rep.cases)
        if (c.status == "fail")
            MESSAGE(c.key, ": ", c.data.dump());
}

TEST_CASE("parallel verification matches the serial report") {
    Engine eng1, eng2;
    auto serial = verifyTheoremB(eng1, 2, 5, 1);
    auto parallel = verifyTheoremB(eng2, 2, 5, 2);
    CHECK(serial.toJson(false) == parallel.toJson(false));
}

TEST_CASE("full lemma suite passes with non-trivial swap-equivalence cases at p=2") {
    Engine eng;
    auto rep = lemmaSuite(eng, 2, 5);
    CHECK(rep.ok());
    bool sawNontrivial = false;
    for (const auto& c : rep.cases)
        if (c.key == "swap-equivalence|battery") {
            CHECK(c.data["checked"].get<int>() >= 1);
            sawNontrivial = c.data["nontrivial"].get<int>() >= 1;
        }
    CHECK(sawNontrivial);
}
