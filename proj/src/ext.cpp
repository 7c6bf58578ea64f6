#include "symext/ext.hpp"

#include <algorithm>

#include "symext/crystal.hpp"
#include "symext/functors.hpp"
#include "symext/homspace.hpp"

namespace symext {

ExtReport Engine::selfExtOracle(const Partition& lam, int p) {
    std::string key = "oracle|" + std::to_string(p) + "|" + lam.str();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = extReports_.find(key);
        if (it != extReports_.end())
            return it->second;
    }
    require(isPRegular(lam, p), Err::NotPRegular, "selfExtOracle: " + lam.str());
    ExtReport rep;
    rep.lam = lam;
    rep.p = p;
    rep.method = ExtReport::Method::oracle;
    rep.exact = true;
    if (lam.size() <= 1) {
        rep.lower = rep.upper = 0;
    } else {
        auto d = simple(lam, p);
        GModule end = endModule(*d);
        CocycleSystem sys = cocycleDims(end);
        rep.lower = rep.upper = sys.h1();
        rep.cocycleUnknowns = sys.unknowns;
        rep.dimZ1 = sys.dimZ1;
        rep.dimB1 = sys.dimB1;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = extReports_.emplace(key, rep);
    return it->second;
}

namespace {

struct LevelData {
    int residue = 0;
    int eps = 0;
    Partition child;
    long long inducedDim = 0;
};

std::vector<LevelData> levelCandidates(Engine& eng, const Partition& lam, int p) {
    std::vector<LevelData> out;
    for (int i = 0; i < p; ++i) {
        auto prof = crystalProfile(lam, i, p);
        if (prof.eps < 1)
            continue;
        LevelData ld;
        ld.residue = i;
        ld.eps = prof.eps;
        auto child = tildeE(lam, i, prof.eps, p);
        require(child.has_value(), Err::InternalError, "tildeE vanished below eps");
        ld.child = *child;
        // full induced dimension before block projection, the cost heuristic
        long long binom = 1;
        int n = lam.size();
        for (int t = 1; t <= prof.eps; ++t)
            binom = binom * (n - prof.eps + t) / t;
        ld.inducedDim = binom * eng.simple(ld.child, p)->dim;
        out.push_back(std::move(ld));
    }
    return out;
}

} // namespace

ExtReport Engine::selfExtRecursive(const Partition& lam, int p, bool allResidues) {
    std::string key = std::string("rec") + (allResidues ? "*" : "") + "|" + std::to_string(p) + "|" + lam.str();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = extReports_.find(key);
        if (it != extReports_.end())
            return it->second;
    }
    require(isPRegular(lam, p), Err::NotPRegular, "selfExtRecursive: " + lam.str());
    ExtReport rep;
    rep.lam = lam;
    rep.p = p;
    rep.method = ExtReport::Method::recursive;
    if (lam.size() <= 1) {
        rep.lower = rep.upper = 0;
        rep.exact = true;
    } else {
        auto cands = levelCandidates(*this, lam, p);
        require(!cands.empty(), Err::InternalError, "no residue with a normal node for " + lam.str());
        std::sort(cands.begin(), cands.end(), [](const LevelData& a, const LevelData& b) {
            return a.inducedDim != b.inducedDim ? a.inducedDim < b.inducedDim : a.residue < b.residue;
        });
        if (!allResidues)
            cands.resize(1);
        bool first = true;
        for (const auto& ld : cands) {
            auto d = simple(lam, p);
            auto m = dividedFSimple(ld.child, p, ld.residue, ld.eps);
            GModule quot = quotientBySocleCopy(*m, *d);
            int h = homDim(*d, quot);
            ExtReport child = selfExtRecursive(ld.child, p, allResidues);
            int lower = h;
            int upper = h + child.upper;
            if (first || lower > rep.lower)
                rep.lower = lower;
            if (first || upper < rep.upper)
                rep.upper = upper;
            first = false;
            ExtTraceEntry te;
            te.level = lam;
            te.residue = ld.residue;
            te.eps = ld.eps;
            te.homDimAtLevel = h;
            rep.trace.push_back(te);
            rep.trace.insert(rep.trace.end(), child.trace.begin(), child.trace.end());
        }
        require(rep.lower <= rep.upper, Err::InternalError, "ext interval is empty for " + lam.str());
        rep.exact = rep.lower == rep.upper;
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = extReports_.emplace(key, rep);
    return it->second;
}

GModule extensionTotal(const GModule& d, const Cocycle& cocycle) {
    require(int(cocycle.size()) == std::max(d.n - 1, 0), Err::BadInput, "cocycle arity mismatch");
    int dim = d.dim;
    std::vector<FpMatrix> gens;
    for (int k = 1; k < d.n; ++k) {
        const FpMatrix& A = d.gen(k);
        require(int(cocycle[k - 1].size()) == dim * dim, Err::BadInput, "cocycle value has wrong shape");
        FpMatrix D(d.p, dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                D.at(r, c) = cocycle[k - 1][size_t(r) * dim + c];
        FpMatrix DA = D.mul(A);
        FpMatrix g(d.p, 2 * dim, 2 * dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) {
                g.at(r, c) = A.at(r, c);
                g.at(r, dim + c) = DA.at(r, c);
                g.at(dim + r, dim + c) = A.at(r, c);
            }
        gens.push_back(std::move(g));
    }
    return GModule(d.p, d.n, 2 * dim, std::move(gens), d.label + "|" + d.label, d.block);
}

bool isUniserialDD(const GModule& total, const GModule& d) {
    return homDim(d, total) == 1 && homDim(total, d) == 1;
}

ExtensionModule buildExtension(Engine& eng, const Partition& lam, int p, int classIndex) {
    require(classIndex >= 0, Err::BadInput, "class index must be non-negative");
    auto d = eng.simple(lam, p);
    require(lam.size() >= 2, Err::NoSelfExtension, "no self-extensions below degree 2");
    GModule end = endModule(*d);
    CocycleBasis cb = cocycleClasses(end);
    require(classIndex < int(cb.h1Classes.size()), Err::NoSelfExtension,
            "H^1 has dimension " + std::to_string(cb.h1Classes.size()) + " for " + lam.str());
    ExtensionModule v;
    v.lam = lam;
    v.p = p;
    v.base = *d;
    v.cocycle = cb.h1Classes[classIndex];
    v.total = extensionTotal(*d, v.cocycle);
    require(isUniserialDD(v.total, v.base), Err::InternalError, "extension is not uniserial D|D");
    return v;
}

bool embedsIn(const ExtensionModule& v, const GModule& m) {
    require(v.total.p == m.p && v.total.n == m.n, Err::DegreeMismatch, "embedsIn");
    int socHom = homDim(v.base, m);
    require(socHom == 1, Err::PreconditionFailed,
            "embedsIn needs dim Hom(D, M) = 1, got " + std::to_string(socHom));
    // maps killing the socle of V account for exactly that one dimension;
    // anything further is injective on the socle and hence an embedding
    return homDim(v.total, m) >= 2;
}

MinimalBResult minimalB(Engine& eng, const ExtensionModule& v, int i) {
    const Partition& lam = v.lam;
    int p = v.p;
    auto prof = crystalProfile(lam, i, p);
    MinimalBResult out;
    out.epsI = prof.eps;
    out.phiI = prof.phi;
    require(prof.eps >= 1, Err::PreconditionFailed, "minimalB needs a normal node of residue i");

    // hypothesis of the reduction: V embeds at b = eps_i
    {
        auto child = tildeE(lam, i, prof.eps, p);
        require(child.has_value(), Err::InternalError, "tildeE vanished below eps");
        auto m = eng.dividedFSimple(*child, p, i, prof.eps);
        require(embedsIn(v, *m), Err::PreconditionFailed, "V does not embed at b = eps_i");
    }

    int b = -1;
    for (int t = 0; t <= prof.eps; ++t) {
        auto child = tildeE(lam, i, t, p);
        require(child.has_value(), Err::InternalError, "tildeE vanished below eps");
        auto m = eng.dividedFSimple(*child, p, i, t);
        if (embedsIn(v, *m)) {
            b = t;
            break;
        }
    }
    require(b >= 1, Err::InternalError, "minimal b outside 1..eps_i");
    out.b = b;

    // dual side: V is a quotient of e_i^(c) D^{f-tilde^c lambda} iff the dual
    // of V embeds into the dual module, whose socle is again a copy of D*
    ExtensionModule vdual;
    vdual.lam = lam;
    vdual.p = p;
    vdual.base = dual(v.base);
    vdual.total = dual(v.total);
    int c = -1;
    for (int t = 0; t <= prof.phi; ++t) {
        auto parent = tildeF(lam, i, t, p);
        require(parent.has_value(), Err::InternalError, "tildeF vanished below phi");
        auto w = eng.dividedESimple(*parent, p, i, t);
        GModule wd = dual(*w);
        if (embedsIn(vdual, wd)) {
            c = t;
            break;
        }
    }
    require(c >= 1, Err::InternalError, "minimal c not found within 0..phi_i");
    out.c = c;
    require(out.b == out.c, Err::InternalError,
            "b = " + std::to_string(out.b) + " and c = " + std::to_string(out.c) + " disagree");
    return out;
}

} // namespace symext
