#ifndef SYMEXT_PARTITION_HPP
#define SYMEXT_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "symext/errors.hpp"

namespace symext {

/// A node (k,l) of a Young diagram, 1-indexed.
struct Node {
    int row = 0;
    int col = 0;
    auto operator<=>(const Node&) const = default;
};

/// Weakly decreasing sequence of positive parts; trailing zeros are never
/// stored, so the empty partition has no parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition fromUnchecked(std::vector<int> parts) { return Partition(std::move(parts), 0); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // |lambda|
    int height() const { return int(parts_.size()); }
    /// Part at 1-indexed row k; rows past the height read as 0.
    int part(int k) const;
    bool empty() const { return parts_.empty(); }
    bool contains(Node a) const { return a.row >= 1 && a.col >= 1 && a.col <= part(a.row); }

    auto operator<=>(const Partition&) const = default;

    std::vector<Node> nodes() const;
    std::string str() const; // "[4,2,1]", "[]"

private:
    Partition(std::vector<int> parts, int) : parts_(std::move(parts)) {}
    std::vector<int> parts_;
};

Partition parsePartition(const std::string& text);

/// Residue-indexed node counts of a partition; counts sum to |lambda|.
struct Content {
    int p = 0;
    std::vector<int> counts;

    bool operator==(const Content&) const = default;
    std::string str() const;
};

int residue(Node a, int p);
Content contentOf(const Partition& lam, int p);

bool isPRegular(const Partition& lam, int p);

std::vector<Node> removableNodes(const Partition& lam);
std::vector<Node> addableNodes(const Partition& lam);
std::vector<Node> removableNodes(const Partition& lam, int residueFilter, int p);
std::vector<Node> addableNodes(const Partition& lam, int residueFilter, int p);

/// Remove all of `remove`, then add all of `add`; both intermediate and final
/// shapes must be Young diagrams.
Partition modifyNodes(const Partition& lam, const std::vector<Node>& remove, const std::vector<Node>& add);

bool dominates(const Partition& lam, const Partition& mu);
Partition transpose(const Partition& lam);

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitionsOf(int n);
std::vector<Partition> pRegularPartitionsOf(int n, int p);

} // namespace symext

#endif
