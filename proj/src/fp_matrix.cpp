#include "symext/fp_matrix.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

namespace symext {

bool isSmallPrime(int p) {
    if (p < 2 || p > 251)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

u8 invMod(int p, u8 x) {
    // p is tiny, brute force
    for (int y = 1; y < p; ++y)
        if ((x * y) % p == 1)
            return u8(y);
    fail(Err::InternalError, "invMod of 0");
}

void checkSameShape(const FpMatrix& a, const FpMatrix& b, const char* who) {
    require(a.p == b.p && a.rows == b.rows && a.cols == b.cols, Err::SizeMismatch, who);
}

} // namespace

FpMatrix::FpMatrix(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_), a(size_t(rows_) * cols_, 0) {
    require(isSmallPrime(p_), Err::BadInput, "modulus must be a small prime");
    require(rows_ >= 0 && cols_ >= 0, Err::BadInput, "negative dimension");
}

FpMatrix FpMatrix::identity(int p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool FpMatrix::isZero() const {
    return std::all_of(a.begin(), a.end(), [](u8 x) { return x == 0; });
}

bool FpMatrix::isIdentity() const {
    if (rows != cols)
        return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

FpMatrix FpMatrix::mul(const FpMatrix& o) const {
    require(p == o.p, Err::SizeMismatch, "mul: modulus mismatch");
    require(cols == o.rows, Err::SizeMismatch, "mul: inner dimension mismatch");
    // (p-1)^2 * cols must stay below 2^32; at 250^2 that allows cols ~ 68000.
    require(size_t(p - 1) * (p - 1) * size_t(cols) < (u64(1) << 32), Err::EnvelopeExceeded, "mul: inner dimension too large");
    FpMatrix c(p, rows, o.cols);
    std::vector<u32> acc(size_t(o.cols));
    for (int i = 0; i < rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        const u8* ai = row(i);
        for (int k = 0; k < cols; ++k) {
            u32 v = ai[k];
            if (!v)
                continue;
            const u8* bk = o.row(k);
            u32* out = acc.data();
            for (int j = 0; j < o.cols; ++j)
                out[j] += v * bk[j];
        }
        u8* ci = c.row(i);
        for (int j = 0; j < o.cols; ++j)
            ci[j] = u8(acc[j] % p);
    }
    return c;
}

FpMatrix FpMatrix::add(const FpMatrix& o) const {
    checkSameShape(*this, o, "add: shape mismatch");
    FpMatrix c(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        c.a[i] = u8((a[i] + o.a[i]) % p);
    return c;
}

FpMatrix FpMatrix::sub(const FpMatrix& o) const {
    checkSameShape(*this, o, "sub: shape mismatch");
    FpMatrix c(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        c.a[i] = u8((a[i] + p - o.a[i]) % p);
    return c;
}

FpMatrix FpMatrix::scaled(u8 s) const {
    FpMatrix c(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i)
        c.a[i] = u8((a[i] * s) % p);
    return c;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

std::vector<u8> FpMatrix::mulVec(const std::vector<u8>& v) const {
    require(int(v.size()) == cols, Err::SizeMismatch, "mulVec");
    std::vector<u8> out(rows);
    for (int i = 0; i < rows; ++i) {
        const u8* ai = row(i);
        u32 s = 0;
        for (int j = 0; j < cols; ++j)
            s += u32(ai[j]) * v[j];
        out[i] = u8(s % p);
    }
    return out;
}

std::vector<u8> FpMatrix::vecMul(const std::vector<u8>& v) const {
    require(int(v.size()) == rows, Err::SizeMismatch, "vecMul");
    std::vector<u32> acc(size_t(cols), 0);
    for (int i = 0; i < rows; ++i) {
        u32 c = v[i];
        if (!c)
            continue;
        const u8* ai = row(i);
        for (int j = 0; j < cols; ++j)
            acc[j] += c * ai[j];
    }
    std::vector<u8> out(cols);
    for (int j = 0; j < cols; ++j)
        out[j] = u8(acc[j] % p);
    return out;
}

void FpMatrix::setRow(int r, const std::vector<u8>& v) {
    require(int(v.size()) == cols, Err::SizeMismatch, "setRow");
    std::memcpy(row(r), v.data(), v.size());
}

std::vector<u8> FpMatrix::rowVec(int r) const { return std::vector<u8>(row(r), row(r) + cols); }

FpMatrix FpMatrix::vstack(const FpMatrix& top, const FpMatrix& bottom) {
    require(top.p == bottom.p && top.cols == bottom.cols, Err::SizeMismatch, "vstack");
    FpMatrix c(top.p, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), c.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), c.a.begin() + top.a.size());
    return c;
}

FpMatrix FpMatrix::kron(const FpMatrix& A, const FpMatrix& B) {
    require(A.p == B.p, Err::SizeMismatch, "kron");
    FpMatrix c(A.p, A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int a = 0; a < A.cols; ++a) {
            u32 v = A.at(i, a);
            if (!v)
                continue;
            for (int j = 0; j < B.rows; ++j) {
                u8* out = c.row(i * B.rows + j) + size_t(a) * B.cols;
                const u8* bj = B.row(j);
                for (int b = 0; b < B.cols; ++b)
                    out[b] = u8(v * bj[b] % A.p);
            }
        }
    return c;
}

// ---------------------------------------------------------------- RowReducer

RowReducer::RowReducer(int p, int cols) : p_(p), cols_(cols) {
    require(isSmallPrime(p), Err::BadInput, "RowReducer: bad modulus");
    // delayed reduction: one 32-bit accumulator must survive a full sweep
    require(size_t(p - 1) * (p - 1) * size_t(std::max(cols, 1)) < (u64(1) << 32), Err::EnvelopeExceeded,
            "RowReducer: too many columns for delayed reduction");
    if (p_ == 2)
        words_ = (cols + 63) / 64;
}

bool RowReducer::addRow(const std::vector<u8>& v) {
    require(int(v.size()) == cols_, Err::SizeMismatch, "addRow");
    return addRow(v.data());
}

bool RowReducer::addRow(const u8* v) { return p_ == 2 ? addRowBits(v) : addRowGeneric(v); }

bool RowReducer::addRowGeneric(const u8* v) {
    // Delayed reduction: products are at most (p-1)^2 <= 62500 per pivot, so
    // a 32-bit accumulator survives ~68k pivot eliminations without overflow.
    std::vector<u32> work(v, v + cols_);
    size_t nr = rws_.size();
    for (size_t r = 0; r < nr; ++r) {
        int pc = pivcol_[r];
        u32 x = work[pc] % p_;
        if (!x)
            continue;
        u32 c = u32(p_) - x; // pivot entries are 1
        const u8* rr = rws_[r].data();
        u32* w = work.data();
        for (int j = pc; j < cols_; ++j)
            w[j] += c * rr[j];
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j) {
        work[j] %= p_;
        if (piv < 0 && work[j])
            piv = j;
    }
    if (piv < 0)
        return false;
    std::vector<u8> nrow(cols_, 0);
    u8 inv = invMod(p_, u8(work[piv]));
    for (int j = piv; j < cols_; ++j)
        nrow[j] = u8(work[j] * inv % p_);
    // keep echelon ordered by pivot column
    size_t pos = 0;
    while (pos < pivcol_.size() && pivcol_[pos] < piv)
        ++pos;
    rws_.insert(rws_.begin() + pos, std::move(nrow));
    pivcol_.insert(pivcol_.begin() + pos, piv);
    return true;
}

bool RowReducer::addRowBits(const u8* v) {
    std::vector<u64> work(words_, 0);
    for (int j = 0; j < cols_; ++j)
        if (v[j] & 1)
            work[j >> 6] |= u64(1) << (j & 63);
    size_t nr = bits_.size();
    for (size_t r = 0; r < nr; ++r) {
        int pc = pivcol_[r];
        if ((work[pc >> 6] >> (pc & 63)) & 1) {
            const u64* rr = bits_[r].data();
            for (int w = pc >> 6; w < words_; ++w)
                work[w] ^= rr[w];
        }
    }
    int piv = -1;
    for (int w = 0; w < words_ && piv < 0; ++w)
        if (work[w])
            piv = w * 64 + __builtin_ctzll(work[w]);
    if (piv < 0)
        return false;
    size_t pos = 0;
    while (pos < pivcol_.size() && pivcol_[pos] < piv)
        ++pos;
    bits_.insert(bits_.begin() + pos, std::move(work));
    pivcol_.insert(pivcol_.begin() + pos, piv);
    return true;
}

FpMatrix RowReducer::echelon() const {
    FpMatrix m(p_, rank(), cols_);
    if (p_ == 2) {
        for (int r = 0; r < m.rows; ++r)
            for (int j = 0; j < cols_; ++j)
                m.at(r, j) = u8((bits_[r][j >> 6] >> (j & 63)) & 1);
    } else {
        for (int r = 0; r < m.rows; ++r)
            std::memcpy(m.row(r), rws_[r].data(), cols_);
    }
    return m;
}

FpMatrix RowReducer::rref() const {
    FpMatrix m = echelon();
    for (int r = m.rows - 1; r >= 0; --r) {
        int pc = pivcol_[r];
        for (int i = 0; i < r; ++i) {
            u32 c = m.at(i, pc);
            if (!c)
                continue;
            u32 f = u32(p_) - c;
            for (int j = pc; j < m.cols; ++j)
                m.at(i, j) = u8((m.at(i, j) + f * m.at(r, j)) % p_);
        }
    }
    return m;
}

FpMatrix RowReducer::nullspace() const {
    FpMatrix R = rref();
    std::vector<int> pivOf(cols_, -1);
    for (int r = 0; r < R.rows; ++r)
        pivOf[pivcol_[r]] = r;
    int nf = cols_ - R.rows;
    FpMatrix N(p_, nf, cols_);
    int k = 0;
    for (int j = 0; j < cols_; ++j) {
        if (pivOf[j] >= 0)
            continue;
        N.at(k, j) = 1;
        for (int c = 0; c < cols_; ++c)
            if (pivOf[c] >= 0)
                N.at(k, c) = u8((p_ - R.at(pivOf[c], j)) % p_);
        ++k;
    }
    return N;
}


std::optional<std::vector<u8>> ExprReducer::add(const std::vector<u8>& v) {
    require(int(v.size()) == cols_, Err::SizeMismatch, "ExprReducer::add");
    std::vector<u32> work(v.begin(), v.end());
    std::vector<u8> expr(rawCount_, 0); // combination subtracted so far
    for (size_t r = 0; r < rows_.size(); ++r) {
        int pc = piv_[r];
        u32 x = work[pc] % p_;
        if (!x)
            continue;
        u32 c = u32(p_) - x;
        const u8* rr = rows_[r].data();
        for (int j = 0; j < cols_; ++j)
            work[j] += c * rr[j];
        const u8* er = exprRows_[r].data();
        for (size_t t = 0; t < exprRows_[r].size(); ++t)
            expr[t] = u8((expr[t] + x * er[t]) % p_);
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j) {
        work[j] %= p_;
        if (piv < 0 && work[j])
            piv = j;
    }
    if (piv < 0)
        return expr;
    u8 inv = invMod(p_, u8(work[piv]));
    std::vector<u8> nrow(cols_, 0);
    for (int j = piv; j < cols_; ++j)
        nrow[j] = u8(work[j] * inv % p_);
    std::vector<u8> nexpr(rawCount_ + 1, 0);
    for (size_t t = 0; t < expr.size(); ++t)
        nexpr[t] = u8((p_ - expr[t]) % p_ * inv % p_);
    nexpr[rawCount_] = inv;
    ++rawCount_;
    size_t pos = 0;
    while (pos < piv_.size() && piv_[pos] < piv)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(nrow));
    piv_.insert(piv_.begin() + pos, piv);
    exprRows_.insert(exprRows_.begin() + pos, std::move(nexpr));
    return std::nullopt;
}

int rankOf(const FpMatrix& m) {
    RowReducer rr(m.p, m.cols);
    for (int i = 0; i < m.rows; ++i)
        rr.addRow(m.row(i));
    return rr.rank();
}

FpMatrix nullspaceOf(const FpMatrix& m) {
    RowReducer rr(m.p, m.cols);
    for (int i = 0; i < m.rows; ++i)
        rr.addRow(m.row(i));
    FpMatrix N = rr.nullspace();
    for (int i = 0; i < N.rows; ++i) {
        auto prod = m.mulVec(N.rowVec(i));
        require(std::all_of(prod.begin(), prod.end(), [](u8 x) { return x == 0; }), Err::InternalError,
                "nullspace vector failed verification");
    }
    return N;
}

FpMatrix rowBasisOf(const FpMatrix& m) {
    RowReducer rr(m.p, m.cols);
    for (int i = 0; i < m.rows; ++i)
        rr.addRow(m.row(i));
    return rr.rref();
}

RrefTransform rrefWithTransform(const FpMatrix& m) {
    // Eliminate on [m | I]; pivots are restricted to the left block.
    int w = m.cols + m.rows;
    RowReducer rr(m.p, w);
    std::vector<u8> aug(w);
    for (int i = 0; i < m.rows; ++i) {
        std::fill(aug.begin(), aug.end(), u8(0));
        std::memcpy(aug.data(), m.row(i), m.cols);
        aug[m.cols + i] = 1;
        rr.addRow(aug);
    }
    FpMatrix R = rr.rref();
    RrefTransform out;
    out.rref = FpMatrix(m.p, 0, m.cols);
    out.transform = FpMatrix(m.p, 0, m.rows);
    out.rowDeps = FpMatrix(m.p, 0, m.rows);
    std::vector<u8> left(m.cols), right(m.rows);
    for (int r = 0; r < R.rows; ++r) {
        std::memcpy(left.data(), R.row(r), m.cols);
        std::memcpy(right.data(), R.row(r) + m.cols, m.rows);
        bool leftZero = std::all_of(left.begin(), left.end(), [](u8 x) { return x == 0; });
        if (leftZero) {
            out.rowDeps = FpMatrix::vstack(out.rowDeps, FpMatrix(m.p, 0, m.rows));
            FpMatrix one(m.p, 1, m.rows);
            one.setRow(0, right);
            out.rowDeps = FpMatrix::vstack(out.rowDeps, one);
        } else {
            FpMatrix l1(m.p, 1, m.cols), r1(m.p, 1, m.rows);
            l1.setRow(0, left);
            r1.setRow(0, right);
            out.rref = FpMatrix::vstack(out.rref, l1);
            out.transform = FpMatrix::vstack(out.transform, r1);
            out.pivots.push_back(rr.pivots()[r]);
        }
    }
    return out;
}

RowspaceSolver::RowspaceSolver(FpMatrix basisRows) : basis_(std::move(basisRows)), rt_(rrefWithTransform(basis_)) {
    require(rt_.rref.rows == basis_.rows, Err::BadInput, "RowspaceSolver: rows are dependent");
}

std::optional<std::vector<u8>> RowspaceSolver::coords(const std::vector<u8>& v) const {
    require(int(v.size()) == basis_.cols, Err::SizeMismatch, "coords");
    int p = basis_.p;
    // coordinates along the rref rows come straight off the pivot columns
    std::vector<u8> xr(rt_.rref.rows);
    for (int r = 0; r < rt_.rref.rows; ++r)
        xr[r] = v[rt_.pivots[r]];
    // residual check
    std::vector<u32> acc(v.begin(), v.end());
    for (int r = 0; r < rt_.rref.rows; ++r) {
        u32 c = (u32(p) - xr[r]) % p;
        if (!c)
            continue;
        const u8* rr = rt_.rref.row(r);
        for (int j = 0; j < basis_.cols; ++j)
            acc[j] += c * rr[j];
    }
    for (int j = 0; j < basis_.cols; ++j)
        if (acc[j] % p)
            return std::nullopt;
    return rt_.transform.vecMul(xr);
}

std::vector<u8> RowspaceSolver::coordsOrThrow(const std::vector<u8>& v, const char* who) const {
    auto c = coords(v);
    require(c.has_value(), Err::InternalError, std::string(who) + ": vector outside subspace");
    return *c;
}

FpMatrix RowspaceSolver::restrictOperator(const FpMatrix& op) const {
    require(op.cols == basis_.cols && op.rows == basis_.cols, Err::SizeMismatch, "restrictOperator");
    FpMatrix imgRows = basis_.mul(op.transpose()); // row i = op * basis_i, as a row
    FpMatrix R(basis_.p, basis_.rows, basis_.rows);
    for (int i = 0; i < basis_.rows; ++i) {
        auto x = coordsOrThrow(imgRows.rowVec(i), "restrictOperator");
        for (int j = 0; j < basis_.rows; ++j)
            R.at(j, i) = x[j]; // column i = coordinates of image of basis_i
    }
    return R;
}

FpMatrix generalizedEigenspace(const FpMatrix& m, u8 c) {
    require(m.rows == m.cols, Err::SizeMismatch, "generalizedEigenspace: square matrix required");
    FpMatrix N = m;
    for (int i = 0; i < m.rows; ++i)
        N.at(i, i) = u8((N.at(i, i) + m.p - c % m.p) % m.p);
    FpMatrix P = N;
    FpMatrix K = nullspaceOf(P);
    for (int it = 1; it < m.rows; ++it) {
        P = P.mul(N);
        FpMatrix K2 = nullspaceOf(P);
        if (K2.rows == K.rows)
            break;
        K = std::move(K2);
    }
    if (K.rows > 0) {
        RowspaceSolver solver(rowBasisOf(K));
        FpMatrix img = K.mul(m.transpose());
        for (int i = 0; i < img.rows; ++i)
            solver.coordsOrThrow(img.rowVec(i), "generalizedEigenspace invariance");
        return solver.basis();
    }
    return K;
}

std::vector<JointPiece> simultaneousSplit(int p, int dim, const std::vector<FpMatrix>& ops) {
    for (const auto& op : ops) {
        require(op.p == p && op.rows == dim && op.cols == dim, Err::SizeMismatch, "simultaneousSplit: bad operator shape");
    }
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            require(ops[i].mul(ops[j]) == ops[j].mul(ops[i]), Err::NonCommuting, "simultaneousSplit: operators do not commute");

    std::vector<JointPiece> pieces;
    pieces.push_back({{}, FpMatrix::identity(p, dim)});
    for (const auto& op : ops) {
        std::vector<JointPiece> next;
        for (auto& piece : pieces) {
            if (piece.basisRows.rows == 0)
                continue;
            RowspaceSolver solver(piece.basisRows);
            FpMatrix r = solver.restrictOperator(op);
            int found = 0;
            for (int c = 0; c < p; ++c) {
                FpMatrix K = generalizedEigenspace(r, u8(c));
                if (K.rows == 0)
                    continue;
                found += K.rows;
                JointPiece np;
                np.eigentuple = piece.eigentuple;
                np.eigentuple.push_back(u8(c));
                np.basisRows = rowBasisOf(K.mul(piece.basisRows));
                next.push_back(std::move(np));
            }
            require(found == piece.basisRows.rows, Err::UnrecognizedEigentuple,
                    "simultaneousSplit: characteristic polynomial does not split over F_p");
        }
        pieces = std::move(next);
    }
    int total = 0;
    for (auto& piece : pieces)
        total += piece.basisRows.rows;
    require(total == dim, Err::InternalError, "simultaneousSplit: dimensions do not sum");
    return pieces;
}

// ------------------------------------------------------------------- file IO

namespace {

constexpr u32 kMagic = 0x46504d58; // "FPMX"
constexpr u32 kVersion = 1;

void putU32(std::ostream& os, u32 v) {
    u8 b[4] = {u8(v), u8(v >> 8), u8(v >> 16), u8(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void putU64(std::ostream& os, u64 v) {
    u8 b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = u8(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

u32 getU32(std::istream& is) {
    u8 b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    require(bool(is), Err::CacheError, "truncated matrix file");
    return u32(b[0]) | u32(b[1]) << 8 | u32(b[2]) << 16 | u32(b[3]) << 24;
}

u64 getU64(std::istream& is) {
    u8 b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    require(bool(is), Err::CacheError, "truncated matrix file");
    u64 v = 0;
    for (int i = 0; i < 8; ++i)
        v |= u64(b[i]) << (8 * i);
    return v;
}

u64 fnv1a(u64 h, const u8* data, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<u8> payloadOf(const FpMatrix& m) {
    if (m.p != 2)
        return m.a;
    std::vector<u8> out;
    int wpr = (m.cols + 7) / 8;
    out.assign(size_t(wpr) * m.rows, 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c))
                out[size_t(r) * wpr + (c >> 3)] |= u8(1 << (c & 7));
    return out;
}

} // namespace

u64 fpmChecksum(const FpMatrix& m) {
    u64 h = 1469598103934665603ull;
    u8 hdr[12] = {u8(m.p), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    hdr[4] = u8(m.rows);
    hdr[5] = u8(m.rows >> 8);
    hdr[6] = u8(m.rows >> 16);
    hdr[7] = u8(m.rows >> 24);
    hdr[8] = u8(m.cols);
    hdr[9] = u8(m.cols >> 8);
    hdr[10] = u8(m.cols >> 16);
    hdr[11] = u8(m.cols >> 24);
    h = fnv1a(h, hdr, sizeof hdr);
    auto payload = payloadOf(m);
    return fnv1a(h, payload.data(), payload.size());
}

void writeFpm(std::ostream& os, const FpMatrix& m) {
    putU32(os, kMagic);
    putU32(os, kVersion);
    putU32(os, u32(m.p));
    putU32(os, u32(m.rows));
    putU32(os, u32(m.cols));
    auto payload = payloadOf(m);
    os.write(reinterpret_cast<const char*>(payload.data()), std::streamsize(payload.size()));
    putU64(os, fpmChecksum(m));
}

FpMatrix readFpm(std::istream& is) {
    require(getU32(is) == kMagic, Err::CacheError, "bad matrix file magic");
    require(getU32(is) == kVersion, Err::CacheError, "unsupported matrix file version");
    int p = int(getU32(is));
    int rows = int(getU32(is));
    int cols = int(getU32(is));
    require(isSmallPrime(p) && rows >= 0 && cols >= 0 && size_t(rows) * cols < (u64(1) << 31), Err::CacheError,
            "bad matrix file header");
    FpMatrix m(p, rows, cols);
    if (p == 2) {
        int wpr = (cols + 7) / 8;
        std::vector<u8> buf(size_t(wpr) * rows);
        is.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size()));
        require(bool(is), Err::CacheError, "truncated matrix payload");
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = u8((buf[size_t(r) * wpr + (c >> 3)] >> (c & 7)) & 1);
    } else {
        is.read(reinterpret_cast<char*>(m.a.data()), std::streamsize(m.a.size()));
        require(bool(is), Err::CacheError, "truncated matrix payload");
        for (u8 x : m.a)
            require(x < p, Err::CacheError, "matrix entry out of range");
    }
    u64 sum = getU64(is);
    require(sum == fpmChecksum(m), Err::CacheError, "matrix checksum mismatch");
    return m;
}

void writeFpmFile(const std::string& path, const FpMatrix& m) {
    std::ofstream os(path, std::ios::binary);
    require(bool(os), Err::CacheError, "cannot open for write: " + path);
    writeFpm(os, m);
    require(bool(os), Err::CacheError, "write failed: " + path);
}

FpMatrix readFpmFile(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(bool(is), Err::CacheError, "cannot open for read: " + path);
    return readFpm(is);
}

const char* errName(Err e) {
    switch (e) {
    case Err::InvalidNodeSet: return "InvalidNodeSet";
    case Err::SizeMismatch: return "SizeMismatch";
    case Err::BeadCountTooSmall: return "BeadCountTooSmall";
    case Err::BadRunnerIndex: return "BadRunnerIndex";
    case Err::EmptyRunner: return "EmptyRunner";
    case Err::NotPRegular: return "NotPRegular";
    case Err::PreconditionFailed: return "PreconditionFailed";
    case Err::NotSeparated: return "NotSeparated";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NonCommuting: return "NonCommuting";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::BlockMismatch: return "BlockMismatch";
    case Err::UnrecognizedEigentuple: return "UnrecognizedEigentuple";
    case Err::MeataxeStall: return "MeataxeStall";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NonUniqueSocleCopy: return "NonUniqueSocleCopy";
    case Err::NoSelfExtension: return "NoSelfExtension";
    case Err::EnvelopeExceeded: return "EnvelopeExceeded";
    case Err::BadInput: return "BadInput";
    case Err::CacheError: return "CacheError";
    case Err::InternalError: return "InternalError";
    }
    return "Unknown";
}

} // namespace symext
