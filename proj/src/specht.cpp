#include "symext/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symext {

namespace {

using Tableau = std::vector<std::vector<int>>;

void genStandard(const Partition& lam, int next, int n, std::vector<int>& filled, Tableau& cur,
                 std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(cur);
        return;
    }
    for (int r = 0; r < lam.height(); ++r) {
        if (filled[r] >= lam.part(r + 1))
            continue;
        if (r > 0 && filled[r - 1] <= filled[r])
            continue; // entry above must exist and be smaller
        cur[r].push_back(next);
        ++filled[r];
        genStandard(lam, next + 1, n, filled, cur, out);
        --filled[r];
        cur[r].pop_back();
    }
}

/// Tabloids of shape lambda are encoded by the row of each letter; indexing
/// enumerates the distinct row words in lexicographic order.
struct TabloidSpace {
    int n;
    std::vector<std::vector<u8>> words; // sorted
    int dim() const { return int(words.size()); }

    explicit TabloidSpace(const Partition& lam) : n(lam.size()) {
        std::vector<u8> w;
        for (int r = 0; r < lam.height(); ++r)
            w.insert(w.end(), size_t(lam.part(r + 1)), u8(r));
        std::sort(w.begin(), w.end());
        do {
            words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        std::sort(words.begin(), words.end());
    }

    int indexOf(const std::vector<u8>& w) const {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        require(it != words.end() && *it == w, Err::InternalError, "unknown tabloid");
        return int(it - words.begin());
    }
};

/// Expansion of the polytabloid of t over the tabloid basis: sum over the
/// column group with signs.
std::vector<u8> polytabloid(const Tableau& t, const TabloidSpace& ts, int p) {
    int n = ts.n;
    // columns as letter lists
    int width = int(t[0].size());
    std::vector<std::vector<int>> cols(width);
    for (const auto& row : t)
        for (size_t c = 0; c < row.size(); ++c)
            cols[c].push_back(row[c]);

    std::vector<u8> vec(ts.dim(), 0);
    std::vector<u8> word(n);
    std::vector<int> perm;
    // iterate over the product of column permutation groups
    std::vector<std::vector<int>> perms(width);
    std::vector<int> idx(width, 0);
    std::vector<std::vector<std::vector<int>>> all(width);
    for (int c = 0; c < width; ++c) {
        std::vector<int> base(cols[c].size());
        std::iota(base.begin(), base.end(), 0);
        std::sort(base.begin(), base.end());
        do {
            all[c].push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    std::vector<int> counter(width, 0);
    auto signOf = [](const std::vector<int>& q) {
        int s = 0;
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = i + 1; j < q.size(); ++j)
                if (q[i] > q[j])
                    ++s;
        return s % 2;
    };
    while (true) {
        int sgn = 0;
        for (int c = 0; c < width; ++c) {
            const auto& q = all[c][counter[c]];
            sgn ^= signOf(q);
            for (size_t r = 0; r < q.size(); ++r)
                word[cols[c][r] - 1] = u8(q[r]); // letter at row r of column c moves to row q[r]
        }
        int id = ts.indexOf(word);
        u8 coeff = sgn ? u8(p - 1) : u8(1);
        vec[id] = u8((vec[id] + coeff) % p);
        int c = 0;
        while (c < width && ++counter[c] == int(all[c].size())) {
            counter[c] = 0;
            ++c;
        }
        if (c == width)
            break;
    }
    return vec;
}

} // namespace

std::vector<Tableau> standardTableaux(const Partition& lam) {
    std::vector<Tableau> out;
    if (lam.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<int> filled(lam.height(), 0);
    Tableau cur(lam.height());
    genStandard(lam, 1, lam.size(), filled, cur, out);
    return out;
}

long long standardTableauxCount(const Partition& lam) { return (long long)(standardTableaux(lam).size()); }

namespace {

struct SpechtData {
    std::vector<Tableau> tabs;
    TabloidSpace ts;
    FpMatrix B; // polytabloid coordinates, dimS x dimM

    SpechtData(const Partition& lam, int p) : tabs(standardTableaux(lam)), ts(lam) {
        EnvelopeGuard::check(ts.dim(), "spechtModule tabloid space");
        EnvelopeGuard::check(int(tabs.size()), "spechtModule standard basis");
        B = FpMatrix(p, int(tabs.size()), ts.dim());
        for (size_t t = 0; t < tabs.size(); ++t)
            B.setRow(int(t), polytabloid(tabs[t], ts, p));
    }
};

} // namespace

GModule spechtModule(const Partition& lam, int p) {
    int n = lam.size();
    require(n >= 1, Err::BadInput, "spechtModule needs |lambda| >= 1");
    SpechtData sd(lam, p);
    int dimS = sd.B.rows;
    RowspaceSolver solver(sd.B);
    std::vector<FpMatrix> gens;
    for (int k = 1; k < n; ++k) {
        // s_k permutes tabloids by swapping the rows of letters k and k+1
        std::vector<int> img(sd.ts.dim());
        for (int t = 0; t < sd.ts.dim(); ++t) {
            auto w = sd.ts.words[t];
            std::swap(w[k - 1], w[k]);
            img[t] = sd.ts.indexOf(w);
        }
        FpMatrix A(p, dimS, dimS);
        std::vector<u8> moved(sd.ts.dim());
        for (int t = 0; t < dimS; ++t) {
            const u8* src = sd.B.row(t);
            for (int c = 0; c < sd.ts.dim(); ++c)
                moved[img[c]] = src[c];
            auto x = solver.coordsOrThrow(moved, "spechtModule action");
            for (int s = 0; s < dimS; ++s)
                A.at(s, t) = x[s];
        }
        gens.push_back(std::move(A));
    }
    return GModule(p, n, dimS, std::move(gens), "S" + lam.str(), contentOf(lam, p));
}

FpMatrix spechtGram(const Partition& lam, int p) {
    require(lam.size() >= 1, Err::BadInput, "spechtGram needs |lambda| >= 1");
    SpechtData sd(lam, p);
    return sd.B.mul(sd.B.transpose());
}

GModule simpleModuleUncached(const Partition& lam, int p) {
    require(isPRegular(lam, p), Err::NotPRegular, "simpleModule: " + lam.str());
    int n = lam.size();
    if (n == 0)
        fail(Err::BadInput, "simpleModule needs |lambda| >= 1");
    GModule S = spechtModule(lam, p);
    FpMatrix G = spechtGram(lam, p);
    FpMatrix rad = nullspaceOf(G);
    GModule D = quotientByBasis(S, rad, "D" + lam.str());
    require(D.dim == rankOf(G), Err::InternalError, "simple dimension disagrees with the Gram rank");
    require(D.dim > 0, Err::InternalError, "simple module collapsed to zero for " + lam.str());
    D.block = contentOf(lam, p);
    return D;
}

} // namespace symext
