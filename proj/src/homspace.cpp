#include "symext/homspace.hpp"

#include <algorithm>

namespace symext {

FpMatrix spinVectors(const GModule& m, const FpMatrix& seedRows) {
    require(seedRows.cols == m.dim, Err::SizeMismatch, "spinVectors");
    RowReducer rr(m.p, m.dim);
    std::vector<std::vector<u8>> queue;
    for (int i = 0; i < seedRows.rows; ++i) {
        auto v = seedRows.rowVec(i);
        if (rr.addRow(v))
            queue.push_back(std::move(v));
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        auto v = queue[head];
        for (int k = 1; k < m.n; ++k) {
            auto w = m.apply(k, v);
            if (rr.addRow(w))
                queue.push_back(std::move(w));
        }
    }
    return rr.rref();
}

FpMatrix spinVector(const GModule& m, const std::vector<u8>& seed) {
    FpMatrix s(m.p, 1, m.dim);
    s.setRow(0, seed);
    return spinVectors(m, s);
}

SpinTree buildSpinTree(const GModule& m) {
    SpinTree tree;
    ExprReducer red(m.p, m.dim);
    size_t head = 0;
    for (int j = 0; j < m.dim; ++j) {
        if (red.rank() == m.dim)
            break;
        // next seed: first coordinate vector outside the current span
        std::vector<u8> e(m.dim, 0);
        e[j] = 1;
        auto dep = red.add(e);
        if (dep.has_value())
            continue;
        tree.raw.push_back(e);
        tree.src.push_back({-1, 0, tree.seedCount});
        ++tree.seedCount;
        // close under the action before trying another seed
        for (; head < tree.raw.size(); ++head) {
            for (int k = 1; k < m.n; ++k) {
                auto w = m.apply(k, tree.raw[head]);
                auto d = red.add(w);
                if (d.has_value()) {
                    tree.deps.push_back({int(head), k, std::move(*d)});
                } else {
                    tree.raw.push_back(std::move(w));
                    tree.src.push_back({int(head), k, -1});
                }
            }
        }
    }
    require(red.rank() == m.dim || m.dim == 0, Err::InternalError, "spin tree failed to exhaust the module");
    return tree;
}

namespace {

struct HomSolver {
    const GModule& A;
    const GModule& B;
    SpinTree tree;
    int g = 0;     // number of seeds
    int width = 0; // unknowns: g * dim B
    std::vector<FpMatrix> W; // per raw vector, dim B x width
    RowReducer red;

    HomSolver(const GModule& a, const GModule& b) : A(a), B(b), tree(buildSpinTree(a)), red(a.p, 1) {
        g = tree.seedCount;
        width = g * B.dim;
        red = RowReducer(A.p, std::max(width, 1));
        W.resize(tree.raw.size());
        for (size_t t = 0; t < tree.raw.size(); ++t) {
            if (tree.src[t].parent < 0) {
                W[t] = FpMatrix(A.p, B.dim, width);
                int off = tree.src[t].seedIndex * B.dim;
                for (int x = 0; x < B.dim; ++x)
                    W[t].at(x, off + x) = 1;
            } else {
                W[t] = B.gen(tree.src[t].gen).mul(W[tree.src[t].parent]);
            }
        }
        for (const auto& dep : tree.deps) {
            FpMatrix lhs = B.gen(dep.k).mul(W[dep.m]);
            for (size_t t = 0; t < dep.coeffs.size(); ++t) {
                if (!dep.coeffs[t])
                    continue;
                lhs = lhs.sub(W[t].scaled(dep.coeffs[t]));
            }
            for (int r = 0; r < lhs.rows; ++r)
                red.addRow(lhs.row(r));
        }
    }

    FpMatrix solutions() { return red.nullspace(); } // rows = stacked seed images
};

} // namespace

int homDim(const GModule& a, const GModule& b) {
    require(a.p == b.p, Err::DegreeMismatch, "homDim: modulus mismatch");
    require(a.n == b.n, Err::DegreeMismatch, "homDim: degree mismatch");
    if (a.dim == 0 || b.dim == 0)
        return 0;
    if (a.block && b.block && !(*a.block == *b.block))
        return 0;
    if (a.n <= 1)
        return a.dim * b.dim;
    HomSolver hs(a, b);
    return hs.width - hs.red.rank();
}

HomSpace homSpace(const GModule& a, const GModule& b) {
    require(a.p == b.p, Err::DegreeMismatch, "homSpace: modulus mismatch");
    require(a.n == b.n, Err::DegreeMismatch, "homSpace: degree mismatch");
    HomSpace out;
    if (a.dim == 0 || b.dim == 0)
        return out;
    if (a.block && b.block && !(*a.block == *b.block))
        return out;
    if (a.n <= 1) {
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                FpMatrix x(a.p, b.dim, a.dim);
                x.at(i, j) = 1;
                out.basis.push_back(std::move(x));
            }
        return out;
    }
    HomSolver hs(a, b);
    FpMatrix sols = hs.solutions();
    if (sols.rows == 0)
        return out;
    FpMatrix raw(a.p, a.dim, a.dim);
    for (int t = 0; t < a.dim; ++t)
        raw.setRow(t, hs.tree.raw[t]);
    RowspaceSolver solver(raw);

    for (int s = 0; s < sols.rows; ++s) {
        auto u = sols.rowVec(s);
        // images of raw vectors, as columns
        FpMatrix img(a.p, b.dim, a.dim);
        for (int t = 0; t < a.dim; ++t) {
            auto bt = hs.W[t].mulVec(u);
            for (int x = 0; x < b.dim; ++x)
                img.at(x, t) = bt[x];
        }
        // X is determined by X raw_t = img_t: express each unit vector over
        // the raw basis and combine the image columns accordingly.
        FpMatrix X(a.p, b.dim, a.dim);
        for (int j = 0; j < a.dim; ++j) {
            std::vector<u8> e(a.dim, 0);
            e[j] = 1;
            auto coords = solver.coordsOrThrow(e, "homSpace basis inversion");
            // column j of X = img * coords
            for (int x = 0; x < b.dim; ++x) {
                u32 acc = 0;
                for (int t = 0; t < a.dim; ++t)
                    acc += u32(img.at(x, t)) * coords[t];
                X.at(x, j) = u8(acc % a.p);
            }
        }
        for (int k = 1; k < a.n; ++k)
            require(X.mul(a.gen(k)) == b.gen(k).mul(X), Err::InternalError, "intertwiner verification failed");
        out.basis.push_back(std::move(X));
    }
    return out;
}

GModule quotientBySocleCopy(const GModule& m, const GModule& d) {
    HomSpace hs = homSpace(d, m);
    require(hs.dim() == 1, Err::NonUniqueSocleCopy,
            "dim Hom(D, M) = " + std::to_string(hs.dim()) + ", need exactly 1");
    const FpMatrix& X = hs.basis[0];
    FpMatrix imageRows = rowBasisOf(X.transpose());
    require(imageRows.rows == d.dim, Err::NonUniqueSocleCopy, "socle copy embedding is not injective");
    GModule q = quotientByBasis(m, imageRows, m.label + "/" + d.label);
    require(q.dim == m.dim - d.dim, Err::InternalError, "quotient dimension mismatch");
    return q;
}

} // namespace symext
