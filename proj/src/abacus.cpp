#include "symext/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symext {

Abacus::Abacus(int p_, std::vector<int> beads_) : p(p_), beads(std::move(beads_)) {
    require(p >= 2, Err::BadInput, "abacus needs p >= 2");
    std::sort(beads.begin(), beads.end(), std::greater<int>());
    for (size_t i = 0; i < beads.size(); ++i) {
        require(beads[i] >= 0, Err::BadInput, "bead positions must be non-negative");
        if (i + 1 < beads.size())
            require(beads[i] != beads[i + 1], Err::BadInput, "bead positions must be distinct");
    }
}

bool Abacus::occupied(int pos) const { return std::find(beads.begin(), beads.end(), pos) != beads.end(); }

std::string Abacus::render() const {
    std::ostringstream os;
    os << " ";
    for (int i = 0; i < p; ++i)
        os << i << " ";
    os << "\n";
    int maxRow = beads.empty() ? 0 : beads.front() / p;
    for (int row = 0; row <= maxRow; ++row) {
        os << " ";
        for (int i = 0; i < p; ++i)
            os << (occupied(row * p + i) ? "●" : "·") << " ";
        os << "\n";
    }
    return os.str();
}

std::string Abacus::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < beads.size(); ++i) {
        if (i)
            os << ',';
        os << beads[i];
    }
    os << '}';
    return os.str();
}

int RunnerStats::weight() const {
    int w = 0;
    for (const auto& q : quotient)
        w += q.size();
    return w;
}

Abacus displayOf(const Partition& lam, int p, int beadCount) {
    require(beadCount >= lam.height(), Err::BeadCountTooSmall,
            "need at least h(lambda) beads, got " + std::to_string(beadCount));
    std::vector<int> beads(beadCount);
    for (int k = 1; k <= beadCount; ++k)
        beads[k - 1] = lam.part(k) + beadCount - k;
    return Abacus(p, std::move(beads));
}

Partition partitionOf(const Abacus& g) {
    int h = g.beadCount();
    std::vector<int> parts(h);
    for (int k = 1; k <= h; ++k)
        parts[k - 1] = g.beads[k - 1] - (h - k);
    return Partition(std::move(parts));
}

RunnerStats runnerStats(const Abacus& g) {
    RunnerStats st;
    st.r.assign(g.p, 0);
    st.m.assign(g.p, std::nullopt);
    std::vector<std::vector<int>> runnerRows(g.p);
    for (int b : g.beads) {
        ++st.r[b % g.p];
        runnerRows[b % g.p].push_back(b / g.p);
    }
    for (int i = 0; i < g.p; ++i) {
        if (st.r[i] > 0)
            st.m[i] = i + g.p * (st.r[i] - 1);
        if (runnerRows[i].empty()) {
            st.quotient.push_back(Partition{});
        } else {
            st.quotient.push_back(partitionOf(Abacus(2, runnerRows[i])));
        }
    }
    return st;
}

Abacus pushedUp(const Abacus& g) {
    std::vector<int> counts(g.p, 0);
    for (int b : g.beads)
        ++counts[b % g.p];
    std::vector<int> beads;
    for (int i = 0; i < g.p; ++i)
        for (int c = 0; c < counts[i]; ++c)
            beads.push_back(i + c * g.p);
    return Abacus(g.p, std::move(beads));
}

Partition coreOf(const Abacus& g) { return partitionOf(pushedUp(g)); }

int weightOf(const Abacus& g) { return runnerStats(g).weight(); }

Abacus addFullRow(const Abacus& g) {
    std::vector<int> beads;
    beads.reserve(g.beads.size() + g.p);
    for (int b : g.beads)
        beads.push_back(b + g.p);
    for (int i = g.p - 1; i >= 0; --i)
        beads.push_back(i);
    return Abacus(g.p, std::move(beads));
}

Abacus addBead(const Abacus& g) {
    std::vector<int> beads;
    beads.reserve(g.beads.size() + 1);
    for (int b : g.beads)
        beads.push_back(b + 1);
    beads.push_back(0);
    return Abacus(g.p, std::move(beads));
}

Abacus swapRunners(const Abacus& g, int j) {
    require(j >= 1 && j <= g.p - 1, Err::BadRunnerIndex, "runner index must be in 1..p-1");
    std::vector<int> beads;
    beads.reserve(g.beads.size());
    for (int b : g.beads) {
        int i = b % g.p;
        if (i == j - 1)
            beads.push_back(b + 1);
        else if (i == j)
            beads.push_back(b - 1);
        else
            beads.push_back(b);
    }
    return Abacus(g.p, std::move(beads));
}

int runnerResidue(const Abacus& g, int j) {
    require(j >= 0 && j < g.p, Err::BadRunnerIndex, "runner index out of range");
    int r = (j - g.beadCount()) % g.p;
    return r < 0 ? r + g.p : r;
}

Abacus defaultDisplay(const Partition& lam, int p) {
    require(p >= 2, Err::BadInput, "defaultDisplay needs p >= 2");
    int h = lam.height() + 1;
    int beadCount = ((h + p - 1) / p) * p;
    Abacus g = displayOf(lam, p, beadCount);
    auto st = runnerStats(g);
    if (std::any_of(st.r.begin(), st.r.end(), [](int c) { return c == 0; }))
        g = addFullRow(g);
    return g;
}

} // namespace symext
