#include "symext/cohomology.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace symext {

namespace {

/// Folded unknown blocks: a basis of ker(1 + rho(s_k)) per generator, which
/// is exactly the solution set of the square relation d_k + s_k d_k = 0.
struct FoldedBlocks {
    std::vector<FpMatrix> basis; // kappa_k x dim, rows
    std::vector<int> offset;     // prefix offsets into the unknown vector
    int total = 0;
};

FoldedBlocks foldSquares(const GModule& v) {
    FoldedBlocks fb;
    for (int k = 1; k < v.n; ++k) {
        FpMatrix onePlus = v.gen(k).add(FpMatrix::identity(v.p, v.dim));
        fb.basis.push_back(nullspaceOf(onePlus));
        fb.offset.push_back(fb.total);
        fb.total += fb.basis.back().rows;
    }
    return fb;
}

/// Constraint rows of one relation word over two generators. The word is a
/// list of generator indices g_1..g_m; the constraint is
/// sum_j rho(g_1..g_{j-1}) d_{g_j} = 0, expressed on folded coordinates.
void feedRelation(const GModule& v, const FoldedBlocks& fb, const std::vector<int>& word, RowReducer& red) {
    // prefix-weighted sums per generator
    std::map<int, FpMatrix> sums;
    FpMatrix prefix = FpMatrix::identity(v.p, v.dim);
    for (size_t j = 0; j < word.size(); ++j) {
        int gidx = word[j];
        auto it = sums.find(gidx);
        if (it == sums.end())
            sums.emplace(gidx, prefix);
        else
            it->second = it->second.add(prefix);
        if (j + 1 < word.size())
            prefix = prefix.mul(v.gen(gidx));
    }
    // project onto the folded unknowns: C_k = sums[k] * basis_k^T
    std::vector<std::pair<int, FpMatrix>> blocks;
    for (auto& [gidx, s] : sums)
        blocks.emplace_back(gidx, s.mul(fb.basis[gidx - 1].transpose()));
    std::vector<u8> row(size_t(fb.total));
    for (int r = 0; r < v.dim; ++r) {
        std::fill(row.begin(), row.end(), u8(0));
        bool nonzero = false;
        for (auto& [gidx, c] : blocks) {
            int off = fb.offset[gidx - 1];
            for (int t = 0; t < c.cols; ++t) {
                row[off + t] = c.at(r, t);
                nonzero = nonzero || c.at(r, t);
            }
        }
        if (nonzero)
            red.addRow(row);
    }
}

std::vector<std::vector<int>> relationWords(int n) {
    std::vector<std::vector<int>> words;
    for (int k = 1; k + 1 < n; ++k)
        words.push_back({k, k + 1, k, k + 1, k, k + 1});
    for (int k = 1; k < n; ++k)
        for (int l = k + 2; l < n; ++l)
            words.push_back({k, l, k, l});
    return words;
}

} // namespace

CocycleSystem cocycleDims(const GModule& v) {
    CocycleSystem sys;
    sys.dimInvariants = invariants(v).rows;
    sys.dimB1 = v.dim - sys.dimInvariants;
    if (v.n <= 1) {
        sys.unknowns = 0;
        sys.dimZ1 = 0;
        require(sys.dimB1 == 0, Err::InternalError, "trivial group has no coboundaries");
        return sys;
    }
    FoldedBlocks fb = foldSquares(v);
    sys.unknowns = fb.total;
    RowReducer red(v.p, std::max(fb.total, 1));
    for (const auto& w : relationWords(v.n))
        feedRelation(v, fb, w, red);
    sys.dimZ1 = fb.total - red.rank();
    require(sys.dimZ1 >= sys.dimB1, Err::InternalError, "Z1 smaller than B1");
    return sys;
}

int h1Dim(const GModule& v) { return cocycleDims(v).h1(); }

CocycleBasis cocycleClasses(const GModule& v) {
    CocycleBasis out;
    out.dims.dimInvariants = invariants(v).rows;
    out.dims.dimB1 = v.dim - out.dims.dimInvariants;
    if (v.n <= 1) {
        out.dims.unknowns = 0;
        out.dims.dimZ1 = 0;
        return out;
    }
    FoldedBlocks fb = foldSquares(v);
    out.dims.unknowns = fb.total;
    RowReducer red(v.p, std::max(fb.total, 1));
    for (const auto& w : relationWords(v.n))
        feedRelation(v, fb, w, red);
    FpMatrix z1 = red.nullspace(); // folded coordinates
    out.dims.dimZ1 = z1.rows;
    require(out.dims.dimZ1 >= out.dims.dimB1, Err::InternalError, "Z1 smaller than B1");

    auto unfold = [&](const std::vector<u8>& x) {
        Cocycle d;
        for (int k = 1; k < v.n; ++k) {
            const FpMatrix& B = fb.basis[k - 1];
            std::vector<u8> xr(x.begin() + fb.offset[k - 1], x.begin() + fb.offset[k - 1] + B.rows);
            d.push_back(B.vecMul(xr));
        }
        return d;
    };
    std::vector<std::unique_ptr<RowspaceSolver>> blockSolvers;
    for (int k = 1; k < v.n; ++k)
        blockSolvers.push_back(fb.basis[k - 1].rows ? std::make_unique<RowspaceSolver>(fb.basis[k - 1]) : nullptr);
    auto foldCoords = [&](const Cocycle& d) {
        // coboundaries arrive as raw vectors; express them on the folded blocks
        std::vector<u8> x(size_t(fb.total), 0);
        for (int k = 1; k < v.n; ++k) {
            if (!blockSolvers[k - 1]) {
                bool zero = std::all_of(d[k - 1].begin(), d[k - 1].end(), [](u8 t) { return t == 0; });
                require(zero, Err::InternalError, "coboundary outside the folded block");
                continue;
            }
            auto c = blockSolvers[k - 1]->coordsOrThrow(d[k - 1], "cocycle fold");
            for (size_t t = 0; t < c.size(); ++t)
                x[fb.offset[k - 1] + t] = c[t];
        }
        return x;
    };

    // span B^1 inside the folded coordinates, then extend by Z^1 vectors to
    // pick class representatives
    RowReducer span(v.p, std::max(fb.total, 1));
    int b1 = 0;
    for (int j = 0; j < v.dim && b1 < out.dims.dimB1; ++j) {
        Cocycle d;
        for (int k = 1; k < v.n; ++k) {
            std::vector<u8> e(v.dim, 0);
            e[j] = 1;
            auto w = v.gen(k).mulVec(e);
            for (int t = 0; t < v.dim; ++t)
                w[t] = u8((w[t] + v.p - e[t]) % v.p);
            d.push_back(std::move(w));
        }
        if (span.addRow(foldCoords(d)))
            ++b1;
    }
    require(b1 == out.dims.dimB1, Err::InternalError, "coboundary span fell short");
    for (int r = 0; r < z1.rows; ++r) {
        if (span.addRow(z1.row(r)))
            out.h1Classes.push_back(unfold(z1.rowVec(r)));
    }
    require(int(out.h1Classes.size()) == out.dims.h1(), Err::InternalError, "class count mismatch");
    return out;
}

GModule endModule(const GModule& d) {
    EnvelopeGuard::check((long long)(d.dim) * d.dim, "endModule");
    std::vector<FpMatrix> gens;
    gens.reserve(d.gens.size());
    for (const auto& g : d.gens)
        gens.push_back(FpMatrix::kron(g, g.transpose()));
    return GModule(d.p, d.n, d.dim * d.dim, std::move(gens), "End(" + d.label + ")");
}

} // namespace symext
