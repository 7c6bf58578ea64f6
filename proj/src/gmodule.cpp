#include "symext/gmodule.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace symext {

namespace {
std::atomic<int> g_maxDim{20000};
}

int EnvelopeGuard::maxDim() { return g_maxDim.load(); }

void EnvelopeGuard::setMaxDim(int dim) { g_maxDim.store(dim); }

void EnvelopeGuard::check(long long dim, const char* who) {
    int cap = g_maxDim.load();
    require(cap <= 0 || dim <= cap, Err::EnvelopeExceeded,
            std::string(who) + ": dimension " + std::to_string(dim) + " exceeds the envelope (use --force to lift)");
}

GModule::GModule(int p_, int n_, int dim_, std::vector<FpMatrix> gens_, std::string label_, std::optional<Content> block_)
    : p(p_), n(n_), dim(dim_), gens(std::move(gens_)), label(std::move(label_)), block(std::move(block_)) {
    require(isSmallPrime(p), Err::BadInput, "GModule: bad modulus");
    require(n >= 0 && dim >= 0, Err::BadInput, "GModule: bad degree or dimension");
    require(int(gens.size()) == std::max(n - 1, 0), Err::BadInput, "GModule: expected n-1 generators");
    for (const auto& g : gens)
        require(g.p == p && g.rows == dim && g.cols == dim, Err::BadInput, "GModule: generator shape mismatch");
    EnvelopeGuard::check(dim, "GModule");
    if (dim > 0) {
        if (dim <= kExactVerifyDim)
            verifyRelationsExact();
        else
            verifyRelationsProbed(0x5eed5eedULL ^ (u64(p) << 32) ^ u64(dim), 8);
    }
}

const FpMatrix& GModule::gen(int k) const {
    require(k >= 1 && k <= n - 1, Err::BadInput, "generator index out of range");
    return gens[k - 1];
}

std::vector<u8> GModule::apply(int k, const std::vector<u8>& v) const { return gen(k).mulVec(v); }

void GModule::verifyRelationsExact() const {
    FpMatrix id = FpMatrix::identity(p, dim);
    for (int k = 1; k < n; ++k)
        require(gen(k).mul(gen(k)) == id, Err::BadInput, "generator " + std::to_string(k) + " is not an involution");
    for (int k = 1; k + 1 < n; ++k) {
        FpMatrix ab = gen(k).mul(gen(k + 1));
        require(ab.mul(ab).mul(ab) == id, Err::BadInput, "braid relation fails at " + std::to_string(k));
    }
    for (int k = 1; k < n; ++k)
        for (int l = k + 2; l < n; ++l)
            require(gen(k).mul(gen(l)) == gen(l).mul(gen(k)), Err::BadInput, "commuting relation fails");
}

void GModule::verifyRelationsProbed(u64 seed, int probes) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (int t = 0; t < probes; ++t) {
        std::vector<u8> v(dim);
        for (auto& x : v)
            x = u8(dist(rng));
        for (int k = 1; k < n; ++k)
            require(apply(k, apply(k, v)) == v, Err::BadInput, "involution probe failed");
        for (int k = 1; k + 1 < n; ++k) {
            auto w = v;
            for (int rep = 0; rep < 3; ++rep)
                w = apply(k, apply(k + 1, w));
            require(w == v, Err::BadInput, "braid probe failed");
        }
        for (int k = 1; k < n; ++k)
            for (int l = k + 2; l < n; ++l)
                require(apply(k, apply(l, v)) == apply(l, apply(k, v)), Err::BadInput, "commuting probe failed");
    }
}

GModule zeroModule(int p, int n, std::string label) {
    std::vector<FpMatrix> gens(size_t(std::max(0, n - 1)), FpMatrix(p, 0, 0));
    return GModule(p, n, 0, std::move(gens), std::move(label));
}

GModule spaceModule(int p, int n, int dim, std::string label) {
    require(n <= 1, Err::BadInput, "spaceModule is for trivial groups only");
    return GModule(p, n, dim, {}, std::move(label));
}

GModule dual(const GModule& m) {
    std::vector<FpMatrix> gens;
    gens.reserve(m.gens.size());
    for (const auto& g : m.gens)
        gens.push_back(g.transpose());
    return GModule(m.p, m.n, m.dim, std::move(gens), m.label.empty() ? "" : m.label + "*", m.block);
}

GModule directSum(const GModule& a, const GModule& b) {
    require(a.p == b.p && a.n == b.n, Err::DegreeMismatch, "directSum");
    std::vector<FpMatrix> gens;
    for (int k = 1; k < a.n; ++k) {
        FpMatrix g(a.p, a.dim + b.dim, a.dim + b.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j)
                g.at(i, j) = a.gen(k).at(i, j);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                g.at(a.dim + i, a.dim + j) = b.gen(k).at(i, j);
        gens.push_back(std::move(g));
    }
    auto block = a.block == b.block ? a.block : std::nullopt;
    return GModule(a.p, a.n, a.dim + b.dim, std::move(gens), a.label + "+" + b.label, block);
}

GModule subModuleOnBasis(const GModule& m, const FpMatrix& basisRows, std::string label) {
    require(basisRows.cols == m.dim, Err::SizeMismatch, "subModuleOnBasis");
    if (basisRows.rows == 0)
        return zeroModule(m.p, m.n, label.empty() ? "0" : label);
    RowspaceSolver solver(basisRows);
    std::vector<FpMatrix> gens;
    gens.reserve(m.gens.size());
    for (const auto& g : m.gens)
        gens.push_back(solver.restrictOperator(g));
    return GModule(m.p, m.n, basisRows.rows, std::move(gens), std::move(label), m.block);
}

GModule quotientByBasis(const GModule& m, const FpMatrix& subBasis, std::string label) {
    require(subBasis.cols == m.dim, Err::SizeMismatch, "quotientByBasis");
    FpMatrix N = rowBasisOf(subBasis); // reduced, with pivot bookkeeping
    RowReducer rr(m.p, m.dim);
    for (int i = 0; i < N.rows; ++i)
        rr.addRow(N.row(i));
    std::vector<bool> isPivot(m.dim, false);
    for (int c : rr.pivots())
        isPivot[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < m.dim; ++c)
        if (!isPivot[c])
            comp.push_back(c);
    // reduce a vector modulo the subspace, then read complement coordinates
    auto project = [&](std::vector<u8> v) {
        for (int r = 0; r < N.rows; ++r) {
            int pc = rr.pivots()[r];
            u8 x = v[pc];
            if (!x)
                continue;
            u32 c = u32(m.p) - x;
            for (int j = 0; j < m.dim; ++j)
                v[j] = u8((v[j] + c * N.at(r, j)) % m.p);
        }
        std::vector<u8> out(comp.size());
        for (size_t t = 0; t < comp.size(); ++t)
            out[t] = v[comp[t]];
        return out;
    };
    std::vector<FpMatrix> gens;
    for (const auto& g : m.gens) {
        FpMatrix q(m.p, int(comp.size()), int(comp.size()));
        for (size_t t = 0; t < comp.size(); ++t) {
            std::vector<u8> e(m.dim, 0);
            e[comp[t]] = 1;
            auto img = project(g.mulVec(e));
            for (size_t s = 0; s < comp.size(); ++s)
                q.at(int(s), int(t)) = img[s];
        }
        gens.push_back(std::move(q));
    }
    return GModule(m.p, m.n, int(comp.size()), std::move(gens), std::move(label), m.block);
}

FpMatrix fixedSpace(const GModule& m, const std::vector<int>& genIdx) {
    FpMatrix basis = FpMatrix::identity(m.p, m.dim);
    for (int k : genIdx) {
        if (basis.rows == 0)
            break;
        FpMatrix diff = m.gen(k).sub(FpMatrix::identity(m.p, m.dim));
        // solve (g - 1) * (x^T basis) = 0 for coefficient vectors x
        FpMatrix sys = diff.mul(basis.transpose()); // dim x basis.rows
        FpMatrix ker = nullspaceOf(sys);            // rows: coefficient vectors
        basis = rowBasisOf(ker.mul(basis));
    }
    return basis;
}

FpMatrix invariants(const GModule& m) {
    std::vector<int> all;
    for (int k = 1; k < m.n; ++k)
        all.push_back(k);
    return fixedSpace(m, all);
}

} // namespace symext
