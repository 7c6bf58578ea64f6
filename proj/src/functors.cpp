#include "symext/functors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symext {

GModule restrictModule(const GModule& m) {
    require(m.n >= 1, Err::BadInput, "restrict needs n >= 1");
    std::vector<FpMatrix> gens;
    if (m.n >= 3)
        gens.assign(m.gens.begin(), m.gens.end() - 1);
    return GModule(m.p, m.n - 1, m.dim, std::move(gens), m.label.empty() ? "" : m.label + "|res", std::nullopt);
}

GModule induceModule(const GModule& m) {
    // Basis blocks are indexed by the coset representative tau_j sending the
    // new letter n+1 to j; tau_j = s_j s_{j+1} ... s_n. For a generator s_k of
    // the bigger group:
    //   j = k     -> block moves to k+1, inner action trivial
    //   j = k+1   -> block moves to k, inner action trivial
    //   j < k     -> block fixed, inner action s_{k-1}
    //   j > k+1   -> block fixed, inner action s_k
    int n = m.n;
    long long newDim = (long long)(n + 1) * m.dim;
    EnvelopeGuard::check(newDim, "induce");
    std::vector<FpMatrix> gens;
    for (int k = 1; k <= n; ++k) {
        FpMatrix g(m.p, int(newDim), int(newDim));
        for (int j = 1; j <= n + 1; ++j) {
            int tgt;
            const FpMatrix* inner = nullptr; // nullptr = identity
            if (j == k)
                tgt = k + 1;
            else if (j == k + 1)
                tgt = k;
            else {
                tgt = j;
                inner = j < k ? &m.gen(k - 1) : &m.gen(k);
            }
            int ro = (tgt - 1) * m.dim, co = (j - 1) * m.dim;
            if (!inner) {
                for (int t = 0; t < m.dim; ++t)
                    g.at(ro + t, co + t) = 1;
            } else {
                for (int r = 0; r < m.dim; ++r)
                    for (int c = 0; c < m.dim; ++c)
                        g.at(ro + r, co + c) = inner->at(r, c);
            }
        }
        gens.push_back(std::move(g));
    }
    return GModule(m.p, n + 1, int(newDim), std::move(gens), m.label.empty() ? "" : m.label + "|ind", std::nullopt);
}

std::vector<FpMatrix> jucysMurphy(const GModule& m) {
    std::vector<FpMatrix> L;
    L.push_back(FpMatrix(m.p, m.dim, m.dim)); // L_1 = 0
    for (int k = 1; k < m.n; ++k)
        L.push_back(m.gen(k).mul(L.back()).mul(m.gen(k)).add(m.gen(k)));
    return L;
}

std::vector<FpMatrix> centralSymmetricOps(const GModule& m) {
    auto L = jucysMurphy(m);
    // iterate prod (1 + x L_k), collecting coefficients
    std::vector<FpMatrix> e;
    e.push_back(FpMatrix::identity(m.p, m.dim)); // e_0
    for (int k = 0; k < m.n; ++k) {
        e.push_back(FpMatrix(m.p, m.dim, m.dim));
        for (int j = int(e.size()) - 1; j >= 1; --j)
            e[j] = e[j].add(e[j - 1].mul(L[k]));
    }
    return std::vector<FpMatrix>(e.begin() + 1, e.end()); // e_1..e_n
}

std::vector<u8> contentEigentuple(const Content& c, int n) {
    int p = c.p;
    // residue multiset, then elementary symmetric values over F_p
    std::vector<u8> vals;
    for (int i = 0; i < p; ++i)
        vals.insert(vals.end(), size_t(c.counts[i]), u8(i));
    require(int(vals.size()) == n, Err::SizeMismatch, "content does not sum to n");
    std::vector<u8> e(size_t(n) + 1, 0);
    e[0] = 1;
    for (u8 v : vals)
        for (int j = n; j >= 1; --j)
            e[j] = u8((e[j] + v * e[j - 1]) % p);
    return std::vector<u8>(e.begin() + 1, e.end());
}

namespace {

std::map<std::vector<u8>, Content> eigentupleTable(int p, int n) {
    std::map<std::vector<u8>, Content> table;
    std::map<std::vector<int>, bool> seenContent;
    for (const auto& lam : partitionsOf(n)) {
        Content c = contentOf(lam, p);
        if (seenContent.count(c.counts))
            continue;
        seenContent[c.counts] = true;
        auto tup = contentEigentuple(c, n);
        auto it = table.find(tup);
        require(it == table.end() || it->second == c, Err::UnrecognizedEigentuple,
                "two distinct contents share an eigentuple at n=" + std::to_string(n));
        table.emplace(std::move(tup), std::move(c));
    }
    return table;
}

} // namespace

std::vector<BlockPiece> blockSplit(const GModule& m) {
    std::vector<BlockPiece> out;
    if (m.dim == 0)
        return out;
    auto ops = centralSymmetricOps(m);
    auto pieces = simultaneousSplit(m.p, m.dim, ops);
    auto table = eigentupleTable(m.p, m.n);
    for (auto& piece : pieces) {
        auto it = table.find(piece.eigentuple);
        require(it != table.end(), Err::UnrecognizedEigentuple, "block eigentuple matches no content of n=" + std::to_string(m.n));
        GModule sub = subModuleOnBasis(m, piece.basisRows, m.label);
        sub.block = it->second;
        out.push_back({it->second, std::move(sub)});
    }
    std::sort(out.begin(), out.end(), [](const BlockPiece& a, const BlockPiece& b) { return a.content.counts < b.content.counts; });
    return out;
}

GModule blockProject(const GModule& m, const Content& target) {
    require(target.p == m.p, Err::BlockMismatch, "blockProject: modulus mismatch");
    if (m.dim == 0) {
        GModule z = zeroModule(m.p, m.n, m.label);
        z.block = target;
        return z;
    }
    auto want = contentEigentuple(target, m.n);
    auto ops = centralSymmetricOps(m);
    FpMatrix basis = FpMatrix::identity(m.p, m.dim);
    for (int t = 0; t < m.n && basis.rows > 0; ++t) {
        RowspaceSolver solver(basis);
        FpMatrix r = solver.restrictOperator(ops[t]);
        FpMatrix K = generalizedEigenspace(r, want[t]);
        basis = K.rows ? rowBasisOf(K.mul(basis)) : FpMatrix(m.p, 0, m.dim);
    }
    GModule piece = subModuleOnBasis(m, basis, m.label);
    piece.block = target;
    return piece;
}

namespace {

Content shiftedContent(const Content& c, int i, int r) {
    Content out = c;
    out.counts[i] += r;
    require(out.counts[i] >= 0, Err::InternalError, "content shift went negative");
    return out;
}

/// Induced module with a trivial factor on r extra letters: basis blocks are
/// indexed by the r-subsets T of {1..n+r} (the slots of the extra letters),
/// with the order-preserving coset representatives. A generator s_k moves a
/// block to T xor {k,k+1} when it meets exactly one of k,k+1; it acts inside
/// a block by s_m when k,k+1 both sit in the complement at slots m,m+1; it
/// fixes blocks with k,k+1 both in T.
GModule induceWithTrivial(const GModule& m, int r) {
    int n = m.n, p = m.p;
    int N = n + r;
    std::vector<std::vector<int>> subsets; // sorted r-subsets of 1..N
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == r) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v <= N; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::map<std::vector<int>, int> indexOf;
    for (size_t t = 0; t < subsets.size(); ++t)
        indexOf[subsets[t]] = int(t);

    long long newDim = (long long)(subsets.size()) * m.dim;
    EnvelopeGuard::check(newDim, "dividedF");
    std::vector<FpMatrix> gens;
    for (int k = 1; k <= N - 1; ++k) {
        FpMatrix g(p, int(newDim), int(newDim));
        for (size_t t = 0; t < subsets.size(); ++t) {
            const auto& T = subsets[t];
            bool hasK = std::binary_search(T.begin(), T.end(), k);
            bool hasK1 = std::binary_search(T.begin(), T.end(), k + 1);
            int co = int(t) * m.dim;
            if (hasK != hasK1) {
                std::vector<int> T2 = T;
                for (auto& v : T2)
                    v = v == k ? k + 1 : (v == k + 1 ? k : v);
                std::sort(T2.begin(), T2.end());
                int ro = indexOf.at(T2) * m.dim;
                for (int x = 0; x < m.dim; ++x)
                    g.at(ro + x, co + x) = 1;
            } else if (hasK && hasK1) {
                for (int x = 0; x < m.dim; ++x)
                    g.at(co + x, co + x) = 1;
            } else {
                // position of k among the complement of T
                int pos = 0;
                for (int v = 1; v < k; ++v)
                    if (!std::binary_search(T.begin(), T.end(), v))
                        ++pos;
                const FpMatrix& inner = m.gen(pos + 1);
                for (int a = 0; a < m.dim; ++a)
                    for (int b = 0; b < m.dim; ++b)
                        g.at(co + a, co + b) = inner.at(a, b);
            }
        }
        gens.push_back(std::move(g));
    }
    return GModule(p, N, int(newDim), std::move(gens), m.label + "|f^(" + std::to_string(r) + ")", std::nullopt);
}

} // namespace

GModule dividedE(const GModule& m, int i, int r) {
    require(m.block.has_value(), Err::BlockMismatch, "dividedE needs a block tag; run blockSplit first");
    require(r >= 0 && r <= m.n, Err::BadInput, "dividedE: power out of range");
    require(i >= 0 && i < m.p, Err::BadInput, "dividedE: residue out of range");
    if (r == 0)
        return m;
    std::string outLabel = m.label + "|e" + std::to_string(i) + "^(" + std::to_string(r) + ")";
    if (m.block->counts[i] < r || m.dim == 0)
        return zeroModule(m.p, m.n - r, outLabel); // vanishing, not an error
    GModule res = m;
    for (int t = 0; t < r; ++t)
        res = restrictModule(res);
    std::vector<int> topGens;
    for (int k = m.n - r + 1; k <= m.n - 1; ++k)
        topGens.push_back(k);
    FpMatrix fixed = fixedSpace(m, topGens);
    GModule onFixed = subModuleOnBasis(res, fixed, m.label + "|fix");
    GModule out = blockProject(onFixed, shiftedContent(*m.block, i, -r));
    out.label = outLabel;
    return out;
}

GModule dividedF(const GModule& m, int i, int r) {
    require(m.block.has_value(), Err::BlockMismatch, "dividedF needs a block tag; run blockSplit first");
    require(r >= 0, Err::BadInput, "dividedF: negative power");
    require(i >= 0 && i < m.p, Err::BadInput, "dividedF: residue out of range");
    if (r == 0)
        return m;
    if (m.dim == 0) {
        GModule z = zeroModule(m.p, m.n + r, m.label + "|f0");
        z.block = shiftedContent(*m.block, i, r);
        return z;
    }
    GModule ind = induceWithTrivial(m, r);
    GModule out = blockProject(ind, shiftedContent(*m.block, i, r));
    out.label = m.label + "|f" + std::to_string(i) + "^(" + std::to_string(r) + ")";
    return out;
}

} // namespace symext
