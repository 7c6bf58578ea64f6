#include <doctest.h>
#include <map>

#include "symext/partition.hpp"

using namespace symext;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Second route for regularity: multiplicity count per value.
bool regularByMultiplicity(const Partition& lam, int p) {
    std::map<int, int> mult;
    for (int v : lam.parts())
        if (++mult[v] >= p)
            return false;
    return true;
}

} // namespace

TEST_CASE("residue formula") {
    CHECK(residue({1, 1}, 3) == 0);
    CHECK(residue({2, 1}, 3) == 2);
    CHECK(residue({1, 3}, 2) == 0);
}

TEST_CASE("content examples") {
    CHECK(contentOf(P({}), 3).counts == std::vector<int>{0, 0, 0});
    // enumerate the three nodes of (2,1) and their residues directly
    CHECK(contentOf(P({2, 1}), 3).counts == std::vector<int>{1, 1, 1});
    CHECK(contentOf(P({3}), 2).counts == std::vector<int>{2, 1});
}

TEST_CASE("content sums to the size") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : partitionsOf(n))
            for (int p : {2, 3, 5}) {
                auto c = contentOf(lam, p);
                int sum = 0;
                for (int x : c.counts)
                    sum += x;
                CHECK(sum == n);
            }
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(isPRegular(P({2, 1, 1}), 2));
    CHECK(isPRegular(P({2, 1, 1}), 3));
    CHECK_FALSE(isPRegular(P({1, 1, 1}), 3));
}

TEST_CASE("two regularity implementations agree") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : partitionsOf(n))
            for (int p : {2, 3, 5})
                CHECK(isPRegular(lam, p) == regularByMultiplicity(lam, p));
}

TEST_CASE("removable and addable nodes") {
    CHECK(removableNodes(P({2, 1})) == std::vector<Node>{{1, 2}, {2, 1}});
    CHECK(addableNodes(P({2, 1})) == std::vector<Node>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(removableNodes(P({})).empty());
    CHECK(addableNodes(P({})) == std::vector<Node>{{1, 1}});
}

TEST_CASE("modify nodes") {
    CHECK(modifyNodes(P({2, 1}), {{1, 2}, {2, 1}}, {}) == P({1}));
    CHECK(modifyNodes(P({2, 1}), {}, {{1, 3}}) == P({3, 1}));
    CHECK_THROWS_AS((void)modifyNodes(P({2}), {{1, 1}}, {}), SymError);
}

TEST_CASE("removable nodes round trip") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : partitionsOf(n))
            for (const Node& a : removableNodes(lam)) {
                Partition cut = modifyNodes(lam, {a}, {});
                CHECK(modifyNodes(cut, {}, {a}) == lam);
            }
}

TEST_CASE("dominance order examples and axioms") {
    CHECK(dominates(P({3}), P({2, 1})));
    CHECK(dominates(P({2, 1}), P({2, 1})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK_THROWS_AS((void)dominates(P({2}), P({1})), SymError);

    for (int n = 1; n <= 8; ++n) {
        auto parts = partitionsOf(n);
        for (const auto& a : parts) {
            CHECK(dominates(a, a));
            for (const auto& b : parts) {
                if (dominates(a, b) && dominates(b, a))
                    CHECK(a == b);
                for (const auto& c : parts)
                    if (dominates(a, b) && dominates(b, c))
                        CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("transpose") {
    CHECK(transpose(P({3, 1})) == P({2, 1, 1}));
    CHECK(transpose(P({})) == P({}));
    CHECK(transpose(transpose(P({4, 2, 1}))) == P({4, 2, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : partitionsOf(n))
            CHECK(transpose(transpose(lam)) == lam);
}

TEST_CASE("text form round trip") {
    CHECK(parsePartition("[4,2,1]") == P({4, 2, 1}));
    CHECK(parsePartition("[]") == P({}));
    CHECK(P({4, 2, 1}).str() == "[4,2,1]");
    CHECK(P({}).str() == "[]");
    CHECK_THROWS_AS((void)parsePartition("[2,3]"), SymError);
    CHECK_THROWS_AS((void)parsePartition("4,2"), SymError);
}

TEST_CASE("partitions enumeration") {
    CHECK(partitionsOf(0).size() == 1);
    CHECK(partitionsOf(5).size() == 7);
    CHECK(partitionsOf(8).size() == 22);
    CHECK(pRegularPartitionsOf(5, 2).size() == 3);
}
