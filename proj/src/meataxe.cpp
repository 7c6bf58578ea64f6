#include "symext/meataxe.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "symext/homspace.hpp"

namespace symext {

FpPoly::FpPoly(int p_, std::vector<u8> coeffs) : p(p_), c(std::move(coeffs)) {
    require(isSmallPrime(p), Err::BadInput, "FpPoly: bad modulus");
    for (auto& x : c)
        x = u8(x % p);
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

FpPoly FpPoly::x(int p) { return FpPoly(p, {0, 1}); }

FpPoly FpPoly::constant(int p, u8 v) { return FpPoly(p, {v}); }

FpPoly FpPoly::add(const FpPoly& o) const {
    std::vector<u8> out(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        int v = (i < c.size() ? c[i] : 0) + (i < o.c.size() ? o.c[i] : 0);
        out[i] = u8(v % p);
    }
    return FpPoly(p, std::move(out));
}

FpPoly FpPoly::sub(const FpPoly& o) const {
    std::vector<u8> out(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        int v = (i < c.size() ? c[i] : 0) + p - (i < o.c.size() ? o.c[i] : 0);
        out[i] = u8(v % p);
    }
    return FpPoly(p, std::move(out));
}

FpPoly FpPoly::mul(const FpPoly& o) const {
    if (isZero() || o.isZero())
        return FpPoly(p, {});
    std::vector<u32> acc(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            acc[i + j] += u32(c[i]) * o.c[j];
    std::vector<u8> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i)
        out[i] = u8(acc[i] % p);
    return FpPoly(p, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& o) const {
    require(!o.isZero(), Err::BadInput, "polynomial division by zero");
    std::vector<u8> rem(c);
    std::vector<u8> quo(c.size() > o.c.size() - 1 ? c.size() - o.c.size() + 1 : 0, 0);
    u8 leadInv = 1;
    for (int y = 1; y < p; ++y)
        if (int(o.c.back()) * y % p == 1)
            leadInv = u8(y);
    for (int i = int(rem.size()) - 1; i >= int(o.c.size()) - 1; --i) {
        u8 coeff = u8(rem[i] * leadInv % p);
        if (!coeff)
            continue;
        quo[i - (o.c.size() - 1)] = coeff;
        for (size_t j = 0; j < o.c.size(); ++j) {
            int idx = i - int(o.c.size()) + 1 + int(j);
            rem[idx] = u8((rem[idx] + p - u8(coeff * o.c[j] % p)) % p);
        }
    }
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly FpPoly::monic() const {
    if (isZero())
        return *this;
    u8 inv = 1;
    for (int y = 1; y < p; ++y)
        if (int(c.back()) * y % p == 1)
            inv = u8(y);
    std::vector<u8> out(c);
    for (auto& x : out)
        x = u8(x * inv % p);
    return FpPoly(p, std::move(out));
}

FpPoly FpPoly::derivative() const {
    std::vector<u8> out;
    for (size_t i = 1; i < c.size(); ++i)
        out.push_back(u8(c[i] * (i % p) % p));
    return FpPoly(p, std::move(out));
}

std::string FpPoly::str() const {
    std::ostringstream os;
    if (isZero())
        return "0";
    for (int i = deg(); i >= 0; --i) {
        if (!c[i])
            continue;
        if (i < deg())
            os << " + ";
        if (i == 0 || c[i] != 1)
            os << int(c[i]);
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

FpPoly polyGcd(FpPoly a, FpPoly b) {
    while (!b.isZero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

/// x^(p^k) mod f table rows for the Berlekamp matrix.
FpPoly powModXp(const FpPoly& f, const FpPoly& base) {
    // base^p mod f by square-and-multiply on the exponent p
    int p = f.p;
    FpPoly result = FpPoly::constant(p, 1);
    FpPoly acc = base;
    int e = p;
    while (e) {
        if (e & 1)
            result = result.mul(acc).divmod(f).second;
        acc = acc.mul(acc).divmod(f).second;
        e >>= 1;
    }
    return result;
}

void berlekampSplit(const FpPoly& f, std::vector<FpPoly>& out) {
    int p = f.p;
    int d = f.deg();
    if (d <= 0)
        return;
    if (d == 1) {
        out.push_back(f.monic());
        return;
    }
    // Berlekamp subalgebra: kernel of (Q - I) where Q_ij = coeff_j(x^{ip} mod f)
    FpMatrix Q(p, d, d);
    FpPoly xp = powModXp(f, FpPoly::x(p));
    FpPoly cur = FpPoly::constant(p, 1);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= cur.deg(); ++j)
            Q.at(i, j) = cur.c[j];
        cur = cur.mul(xp).divmod(f).second;
    }
    FpMatrix QmI = Q.sub(FpMatrix::identity(p, d));
    FpMatrix ker = nullspaceOf(QmI.transpose()); // row vectors v with vQ = v
    if (ker.rows <= 1) {
        out.push_back(f.monic()); // irreducible
        return;
    }
    // pick a non-constant kernel element and split with gcds
    for (int r = 0; r < ker.rows; ++r) {
        FpPoly g(p, ker.rowVec(r));
        if (g.deg() < 1)
            continue;
        for (int s = 0; s < p; ++s) {
            FpPoly h = polyGcd(f, g.sub(FpPoly::constant(p, u8(s))));
            if (h.deg() >= 1 && h.deg() < d) {
                berlekampSplit(h, out);
                berlekampSplit(f.divmod(h).first, out);
                return;
            }
        }
    }
    fail(Err::InternalError, "Berlekamp failed to split a reducible polynomial");
}

} // namespace

namespace {

void distinctFactorsRec(FpPoly f, std::vector<FpPoly>& out) {
    int p = f.p;
    f = f.monic();
    if (f.deg() <= 0)
        return;
    FpPoly d = f.derivative();
    if (d.isZero()) {
        // f = g(x^p); over F_p the p-th root contracts exponents
        std::vector<u8> contracted;
        for (size_t i = 0; i < f.c.size(); i += size_t(p))
            contracted.push_back(f.c[i]);
        distinctFactorsRec(FpPoly(p, std::move(contracted)), out);
        return;
    }
    FpPoly g = polyGcd(f, d);
    FpPoly s = f.divmod(g).first; // squarefree
    berlekampSplit(s, out);
    if (g.deg() >= 1) {
        // strip the factors of s out of g, then recurse on what is left
        for (const FpPoly& q : out) {
            while (true) {
                auto [quo, rem] = g.divmod(q);
                if (!rem.isZero())
                    break;
                g = quo;
            }
        }
        distinctFactorsRec(g, out);
    }
}

} // namespace

std::vector<FpPoly> irreducibleFactors(const FpPoly& f) {
    require(!f.isZero(), Err::BadInput, "factoring the zero polynomial");
    std::vector<FpPoly> out;
    distinctFactorsRec(f, out);
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.deg() != b.deg())
            return a.deg() < b.deg();
        return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FpMatrix evalPoly(const FpPoly& f, const FpMatrix& m) {
    require(m.rows == m.cols, Err::SizeMismatch, "evalPoly needs a square matrix");
    FpMatrix acc(m.p, m.rows, m.rows);
    for (int i = f.deg(); i >= 0; --i) {
        acc = acc.mul(m);
        for (int d = 0; d < m.rows; ++d)
            acc.at(d, d) = u8((acc.at(d, d) + f.c[i]) % m.p);
    }
    return acc;
}

FpPoly minPoly(const FpMatrix& m) {
    require(m.rows == m.cols, Err::SizeMismatch, "minPoly needs a square matrix");
    int p = m.p;
    FpPoly lcm = FpPoly::constant(p, 1);
    for (int j = 0; j < m.rows; ++j) {
        // annihilator of e_j via the Krylov chain
        ExprReducer red(p, m.rows);
        std::vector<u8> v(m.rows, 0);
        v[j] = 1;
        std::vector<u8> cur = v;
        FpPoly ann;
        for (int step = 0; step <= m.rows; ++step) {
            auto dep = red.add(cur);
            if (dep.has_value()) {
                std::vector<u8> coeffs = *dep; // cur = sum coeffs[t] * M^t v
                size_t degree = coeffs.size();
                std::vector<u8> poly(degree + 1, 0);
                for (size_t t = 0; t < degree; ++t)
                    poly[t] = u8((p - coeffs[t]) % p);
                poly[degree] = 1;
                ann = FpPoly(p, std::move(poly));
                break;
            }
            cur = m.mulVec(cur);
        }
        require(!ann.isZero(), Err::InternalError, "Krylov chain did not terminate");
        lcm = lcm.mul(ann.divmod(polyGcd(lcm, ann)).first);
        if (lcm.deg() == m.rows)
            break; // cannot grow further
    }
    return lcm.monic();
}

namespace {

FpMatrix randomAlgebraElement(const GModule& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(0, m.p - 1);
    std::uniform_int_distribution<int> pick(1, std::max(1, m.n - 1));
    FpMatrix theta(m.p, m.dim, m.dim);
    for (int k = 1; k < m.n; ++k) {
        u8 c = u8(coeff(rng));
        if (c)
            theta = theta.add(m.gen(k).scaled(c));
    }
    if (m.n >= 3) {
        for (int t = 0; t < 2; ++t) {
            int a = pick(rng), b = pick(rng);
            u8 c = u8(coeff(rng));
            if (c && a != b)
                theta = theta.add(m.gen(a).mul(m.gen(b)).scaled(c));
        }
    }
    return theta;
}

} // namespace

IrreducibilityResult meataxeIsIrreducible(const GModule& m, u64 seed) {
    require(m.dim > 0, Err::BadInput, "meataxe on the zero module");
    if (m.dim == 1)
        return {true, {}};
    if (m.n <= 1) {
        FpMatrix sub(m.p, 1, m.dim);
        sub.at(0, 0) = 1;
        return {false, sub};
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    GModule dualM = dual(m);
    constexpr int kTries = 40;
    for (int attempt = 0; attempt < kTries; ++attempt) {
        FpMatrix theta = randomAlgebraElement(m, rng);
        FpPoly mp = minPoly(theta);
        if (mp.deg() < 1)
            continue;
        for (const FpPoly& q : irreducibleFactors(mp)) {
            FpMatrix qt = evalPoly(q, theta);
            FpMatrix null = nullspaceOf(qt);
            if (null.rows == 0)
                continue;
            FpMatrix spun = spinVector(m, null.rowVec(0));
            if (spun.rows < m.dim)
                return {false, spun};
            if (null.rows == q.deg()) {
                // Norton: also spin a null vector of the transpose under the
                // dual action; a proper dual submodule flips to a submodule
                // as its orthogonal complement.
                FpMatrix nullT = nullspaceOf(qt.transpose());
                require(nullT.rows == null.rows, Err::InternalError, "transpose nullity mismatch");
                FpMatrix spunT = spinVector(dualM, nullT.rowVec(0));
                if (spunT.rows < m.dim)
                    return {false, nullspaceOf(spunT)};
                return {true, {}};
            }
        }
    }
    fail(Err::MeataxeStall, "no decisive element found for " + m.label + "; re-seed and retry");
}

namespace {

void factorsRec(const GModule& m, u64 seed, std::vector<GModule>& out) {
    if (m.dim == 0)
        return;
    IrreducibilityResult r = meataxeIsIrreducible(m, seed);
    if (r.irreducible) {
        out.push_back(m);
        return;
    }
    GModule sub = subModuleOnBasis(m, rowBasisOf(r.submoduleRows), m.label + "|sub");
    GModule quot = quotientByBasis(m, r.submoduleRows, m.label + "|quot");
    factorsRec(sub, seed * 2 + 1, out);
    factorsRec(quot, seed * 2 + 2, out);
}

} // namespace

std::vector<GModule> meataxeFactors(const GModule& m, u64 seed) {
    std::vector<GModule> out;
    factorsRec(m, seed, out);
    int total = 0;
    for (const auto& f : out)
        total += f.dim;
    require(total == m.dim, Err::InternalError, "factor dimensions do not sum to dim M");
    return out;
}

bool isIsomorphic(const GModule& a, const GModule& b, u64 seed) {
    require(a.p == b.p && a.n == b.n, Err::DegreeMismatch, "isIsomorphic");
    require(meataxeIsIrreducible(a, seed).irreducible, Err::NotIrreducible, "left side reducible: " + a.label);
    require(meataxeIsIrreducible(b, seed + 1).irreducible, Err::NotIrreducible, "right side reducible: " + b.label);
    if (a.dim != b.dim)
        return false;
    if (a.block && b.block && !(*a.block == *b.block))
        return false;
    return homDim(a, b) >= 1;
}

} // namespace symext
