#include "symext/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symext {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 1, Err::BadInput, "partition parts must be positive");
        if (i + 1 < parts_.size())
            require(parts_[i] >= parts_[i + 1], Err::BadInput, "partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int k) const {
    require(k >= 1, Err::BadInput, "part index is 1-based");
    return k <= height() ? parts_[k - 1] : 0;
}

std::vector<Node> Partition::nodes() const {
    std::vector<Node> out;
    for (int r = 1; r <= height(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c)
            out.push_back({r, c});
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition parsePartition(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    require(s.size() >= 2 && s.front() == '[' && s.back() == ']', Err::BadInput, "partition must look like [4,2,1] or []");
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos, Err::BadInput,
                    "bad partition entry: " + tok);
            parts.push_back(std::stoi(tok));
        }
    }
    return Partition(std::move(parts));
}

std::string Content::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i)
            os << ',';
        os << counts[i];
    }
    os << ')';
    return os.str();
}

int residue(Node a, int p) {
    require(p >= 2, Err::BadInput, "residue: p must be at least 2");
    int r = (a.col - a.row) % p;
    return r < 0 ? r + p : r;
}

Content contentOf(const Partition& lam, int p) {
    require(p >= 2, Err::BadInput, "content: p must be at least 2");
    Content c{p, std::vector<int>(p, 0)};
    for (int r = 1; r <= lam.height(); ++r)
        for (int col = 1; col <= lam.part(r); ++col)
            ++c.counts[residue({r, col}, p)];
    return c;
}

bool isPRegular(const Partition& lam, int p) {
    require(p >= 2, Err::BadInput, "isPRegular: p must be at least 2");
    int run = 1;
    for (int k = 2; k <= lam.height(); ++k) {
        run = lam.part(k) == lam.part(k - 1) ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return lam.height() > 0 ? run < p : true;
}

std::vector<Node> removableNodes(const Partition& lam) {
    std::vector<Node> out;
    for (int r = 1; r <= lam.height(); ++r)
        if (lam.part(r) > lam.part(r + 1))
            out.push_back({r, lam.part(r)});
    return out;
}

std::vector<Node> addableNodes(const Partition& lam) {
    std::vector<Node> out;
    for (int r = 1; r <= lam.height() + 1; ++r)
        if (r == 1 || lam.part(r - 1) > lam.part(r))
            out.push_back({r, lam.part(r) + 1});
    return out;
}

namespace {
std::vector<Node> filterRes(std::vector<Node> v, int i, int p) {
    std::erase_if(v, [&](Node a) { return residue(a, p) != i; });
    return v;
}
} // namespace

std::vector<Node> removableNodes(const Partition& lam, int i, int p) { return filterRes(removableNodes(lam), i, p); }
std::vector<Node> addableNodes(const Partition& lam, int i, int p) { return filterRes(addableNodes(lam), i, p); }

namespace {

std::optional<Partition> shapeOfRowCounts(const std::vector<int>& rowLen, const std::vector<std::vector<bool>>& grid) {
    // valid iff rows are prefixes and lengths weakly decreasing
    for (size_t r = 0; r < rowLen.size(); ++r) {
        for (int c = 0; c < rowLen[r]; ++c)
            if (!grid[r][c])
                return std::nullopt;
        if (r + 1 < rowLen.size() && rowLen[r] < rowLen[r + 1])
            return std::nullopt;
    }
    std::vector<int> parts(rowLen);
    return Partition(std::move(parts));
}

} // namespace

Partition modifyNodes(const Partition& lam, const std::vector<Node>& remove, const std::vector<Node>& add) {
    int maxRow = lam.height() + 1;
    int maxCol = lam.part(1) + 1;
    for (const auto& a : add) {
        require(a.row >= 1 && a.col >= 1, Err::InvalidNodeSet, "node coordinates must be positive");
        maxRow = std::max(maxRow, a.row);
        maxCol = std::max(maxCol, a.col);
    }
    for (const auto& a : remove)
        require(a.row >= 1 && a.col >= 1, Err::InvalidNodeSet, "node coordinates must be positive");

    std::vector<std::vector<bool>> grid(maxRow, std::vector<bool>(maxCol, false));
    std::vector<int> rowLen(maxRow, 0);
    for (int r = 1; r <= lam.height(); ++r) {
        rowLen[r - 1] = lam.part(r);
        for (int c = 1; c <= lam.part(r); ++c)
            grid[r - 1][c - 1] = true;
    }
    for (const auto& a : remove) {
        require(lam.contains(a) && grid[a.row - 1][a.col - 1], Err::InvalidNodeSet,
                "node " + std::to_string(a.row) + "," + std::to_string(a.col) + " not removable");
        grid[a.row - 1][a.col - 1] = false;
        --rowLen[a.row - 1];
    }
    auto mid = shapeOfRowCounts(rowLen, grid);
    require(mid.has_value(), Err::InvalidNodeSet, "removals do not leave a Young diagram");
    for (const auto& a : add) {
        require(!grid[a.row - 1][a.col - 1], Err::InvalidNodeSet,
                "node " + std::to_string(a.row) + "," + std::to_string(a.col) + " already present");
        grid[a.row - 1][a.col - 1] = true;
        ++rowLen[a.row - 1];
    }
    auto fin = shapeOfRowCounts(rowLen, grid);
    require(fin.has_value(), Err::InvalidNodeSet, "additions do not produce a Young diagram");
    return *fin;
}

bool dominates(const Partition& lam, const Partition& mu) {
    require(lam.size() == mu.size(), Err::SizeMismatch, "dominance needs equal sizes");
    int sl = 0, sm = 0;
    int h = std::max(lam.height(), mu.height());
    for (int k = 1; k <= h; ++k) {
        sl += lam.part(k);
        sm += mu.part(k);
        if (sl < sm)
            return false;
    }
    return true;
}

Partition transpose(const Partition& lam) {
    std::vector<int> cols(lam.part(1), 0);
    for (int r = 1; r <= lam.height(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            ++cols[c - 1];
    return Partition(std::move(cols));
}

namespace {
void genParts(int n, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int k = std::min(n, maxPart); k >= 1; --k) {
        cur.push_back(k);
        genParts(n - k, k, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitionsOf(int n) {
    require(n >= 0, Err::BadInput, "partitionsOf: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    genParts(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::vector<Partition> pRegularPartitionsOf(int n, int p) {
    auto all = partitionsOf(n);
    std::erase_if(all, [&](const Partition& lam) { return !isPRegular(lam, p); });
    return all;
}

} // namespace symext
