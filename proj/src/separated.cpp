#include "symext/separated.hpp"

#include <algorithm>

#include "symext/crystal.hpp"

namespace symext {

namespace {

void checkDisplayMatches(const Partition& lam, const Abacus& display, const char* who) {
    require(partitionOf(display) == lam, Err::BadInput, std::string(who) + ": display does not encode the partition");
}

} // namespace

SeparationReport isPSeparated(const Partition& lam, int p, const Abacus& display) {
    checkDisplayMatches(lam, display, "isPSeparated");
    auto st = runnerStats(display);
    for (int i = 0; i < p; ++i)
        require(st.r[i] > 0, Err::EmptyRunner, "runner " + std::to_string(i) + " is empty");
    SeparationReport rep;
    rep.display = display;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i == j || *st.m[i] <= *st.m[j])
                continue;
            int lhs = st.quotient[i].height() + st.quotient[j].part(1);
            int rhs = i < j ? st.r[i] - st.r[j] : st.r[i] - st.r[j] + 1;
            if (lhs > rhs)
                rep.violations.push_back({i, j, lhs, rhs});
        }
    }
    rep.separated = rep.violations.empty();
    return rep;
}

SeparationReport isPSeparated(const Partition& lam, int p) { return isPSeparated(lam, p, defaultDisplay(lam, p)); }

bool isPSeparatedByGaps(const Abacus& display) {
    int p = display.p;
    auto st = runnerStats(display);
    for (int i = 0; i < p; ++i)
        require(st.r[i] > 0, Err::EmptyRunner, "runner " + std::to_string(i) + " is empty");
    // first gap / last bead positions per runner of the working display
    std::vector<int> firstGap(p), lastBead(p);
    for (int i = 0; i < p; ++i) {
        int row = 0;
        while (display.occupied(i + row * p))
            ++row;
        firstGap[i] = i + row * p;
        int last = -1;
        for (int b : display.beads)
            if (b % p == i)
                last = std::max(last, b);
        lastBead[i] = last;
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j || *st.m[i] <= *st.m[j])
                continue;
            if (firstGap[i] < lastBead[j])
                return false;
            // same position cannot happen; same row is fine only for i > j,
            // which the position comparison already encodes
        }
    return true;
}

SwapMove swapMove(const Partition& lam, int p, const Abacus& display, int j) {
    require(j >= 0 && j <= p - 1, Err::BadRunnerIndex, "swapMove: j out of range");
    checkDisplayMatches(lam, display, "swapMove");

    if (j == 0) {
        auto st = runnerStats(display);
        require(st.r[p - 1] >= st.r[0], Err::PreconditionFailed,
                "wrap move needs r_{p-1} >= r_0");
        Abacus lifted = addBead(display);
        SwapMove mv = swapMove(lam, p, lifted, 1);
        mv.j = 0;
        mv.displayBefore = display;
        return mv;
    }

    auto st = runnerStats(display);
    require(st.r[j - 1] > st.r[j], Err::PreconditionFailed,
            "swapMove needs r_{j-1} > r_j at j=" + std::to_string(j));
    SeparationReport sep = isPSeparated(lam, p, display);
    require(sep.separated, Err::NotSeparated, "swapMove input is not p-separated: " + lam.str());

    int res = runnerResidue(display, j);
    Partition mu = hatF(lam, res, p);
    Abacus swapped = swapRunners(display, j);
    require(partitionOf(swapped) == mu, Err::InternalError,
            "runner swap disagrees with adding all addable nodes of residue " + std::to_string(res));

    SeparationReport after = isPSeparated(mu, p, swapped);
    require(after.separated, Err::InternalError, "swap image lost p-separation: " + mu.str());

    SwapMove mv;
    mv.from = lam;
    mv.to = mu;
    mv.displayBefore = display;
    mv.displayAfter = swapped;
    mv.j = j;
    mv.residue = res;
    mv.added = mu.size() - lam.size();
    return mv;
}

bool isRouquier(const Abacus& display, int d) {
    Abacus core = pushedUp(display);
    auto st = runnerStats(core);
    for (int j = 1; j < display.p; ++j)
        if (st.r[j] < st.r[j - 1] + d - 1)
            return false;
    return true;
}

ReductionTrace rockReduce(const Partition& lam, int p) { return rockReduce(lam, p, defaultDisplay(lam, p)); }

namespace {

/// Shared driver state for the reduction. A full row of beads keeps the
/// runner alignment, so it is the normalization of choice between moves.
struct Reducer {
    int p;
    Partition cur;
    Abacus display;
    ReductionTrace trace;
    long long budget;
    long long steps = 0;

    void normalize() {
        if (display.normalized())
            return;
        SwapMove mv;
        mv.from = cur;
        mv.to = cur;
        mv.displayBefore = display;
        display = addFullRow(display);
        mv.displayAfter = display;
        trace.steps.push_back({ReductionStep::Kind::fullRow, mv});
    }

    void move(int j) {
        require(++steps <= budget, Err::BudgetExceeded, "rockReduce exceeded its step budget on " + trace.start.str());
        SwapMove mv = swapMove(cur, p, display, j);
        require(weightOf(mv.displayAfter) == trace.weight, Err::InternalError, "weight changed along a swap move");
        trace.steps.push_back({j >= 1 ? ReductionStep::Kind::swap : ReductionStep::Kind::wrap, mv});
        cur = mv.to;
        display = mv.displayAfter;
        normalize();
    }

    std::vector<int> counts() const { return runnerStats(display).r; }
};

} // namespace

ReductionTrace rockReduce(const Partition& lam, int p, Abacus display) {
    SeparationReport sep = isPSeparated(lam, p, display);
    require(sep.separated, Err::NotSeparated, "rockReduce input is not p-separated: " + lam.str());

    Reducer rd;
    rd.p = p;
    rd.cur = lam;
    rd.display = display;
    rd.trace.start = lam;
    rd.trace.weight = weightOf(display);
    int d = rd.trace.weight;
    long long h = lam.height();
    rd.budget = 10LL * p * (d + h + p) * (d + h + p);
    rd.normalize();

    // Sort the runner counts weakly increasing; every descent swap is a legal
    // move and strictly reduces the inversion count.
    while (!isRouquier(rd.display, d)) {
        auto r = rd.counts();
        int j = -1;
        for (int k = 1; k < p; ++k)
            if (r[k - 1] > r[k]) {
                j = k;
                break;
            }
        if (j < 0)
            break;
        rd.move(j);
    }

    // Grow a staircase: with counts sorted, the composite "wrap, then bubble
    // to slot p-k" increments the k largest counts by one each over k rounds.
    // Target increments delta_j are the least weakly increasing solution of
    // r_j + delta_j >= r_{j-1} + delta_{j-1} + d - 1.
    if (!isRouquier(rd.display, d)) {
        auto r = rd.counts();
        std::vector<long long> delta(p, 0);
        for (int j = 1; j < p; ++j)
            delta[j] = std::max(delta[j - 1], delta[j - 1] + r[j - 1] + d - 1 - r[j]);
        for (int k = p - 1; k >= 1; --k) {
            long long reps = delta[p - k] - (p - k - 1 >= 0 ? delta[p - k - 1] : 0);
            for (long long t = 0; t < reps * k; ++t) {
                rd.move(0);
                for (int j = 2; j <= p - k; ++j)
                    rd.move(j);
            }
        }
    }

    require(isRouquier(rd.display, d), Err::InternalError, "reduction failed to reach a Rouquier display");
    rd.trace.terminal = rd.display;
    rd.trace.terminalPartition = rd.cur;
    return rd.trace;
}

} // namespace symext
