#ifndef SYMEXT_FP_MATRIX_HPP
#define SYMEXT_FP_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symext/errors.hpp"

namespace symext {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool isSmallPrime(int p);

/// Dense matrix over the prime field F_p, entries stored row-major in [0,p).
/// Elimination kernels use delayed reduction in 32-bit accumulators; for p=2
/// a bit-packed path is used and must agree with the generic one entry for
/// entry (tested).
struct FpMatrix {
    int p = 2;
    int rows = 0;
    int cols = 0;
    std::vector<u8> a;

    FpMatrix() = default;
    FpMatrix(int p, int rows, int cols);
    static FpMatrix identity(int p, int n);

    u8 at(int r, int c) const { return a[size_t(r) * cols + c]; }
    u8& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const u8* row(int r) const { return a.data() + size_t(r) * cols; }
    u8* row(int r) { return a.data() + size_t(r) * cols; }

    bool operator==(const FpMatrix& o) const = default;

    bool isZero() const;
    bool isIdentity() const;

    FpMatrix mul(const FpMatrix& o) const;
    FpMatrix add(const FpMatrix& o) const;
    FpMatrix sub(const FpMatrix& o) const;
    FpMatrix scaled(u8 c) const;
    FpMatrix transpose() const;

    /// A*v for a column vector v.
    std::vector<u8> mulVec(const std::vector<u8>& v) const;
    /// v*A for a row vector v.
    std::vector<u8> vecMul(const std::vector<u8>& v) const;

    void setRow(int r, const std::vector<u8>& v);
    std::vector<u8> rowVec(int r) const;

    /// Vertical stack; operands must share p and cols.
    static FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
    /// Kronecker product, row-major convention: (A kron B)((i,j),(a,b)) = A(i,a)B(j,b).
    static FpMatrix kron(const FpMatrix& A, const FpMatrix& B);
};

inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return a.mul(b); }

/// Incremental row-echelon accumulator. Rows are fed one at a time; pivoting
/// is deterministic (first non-zero column), so results are reproducible.
/// Generic byte path for odd p, packed 64-bit words for p=2.
class RowReducer {
public:
    RowReducer(int p, int cols);

    /// Reduce a row against the current echelon; if a non-zero remainder is
    /// left it joins the echelon. Returns true when the rank grew.
    bool addRow(const u8* v);
    bool addRow(const std::vector<u8>& v);

    int rank() const { return int(pivcol_.size()); }
    int cols() const { return cols_; }
    const std::vector<int>& pivots() const { return pivcol_; }

    /// Echelon rows as a matrix (unit pivots, not reduced above).
    FpMatrix echelon() const;
    /// Fully reduced echelon rows.
    FpMatrix rref() const;
    /// Basis of {v : R v = 0} for the matrix R formed by all rows ever fed,
    /// one basis vector per non-pivot column, as rows of the result.
    FpMatrix nullspace() const;

private:
    int p_, cols_;
    std::vector<int> pivcol_;
    // generic path
    std::vector<std::vector<u8>> rws_;
    // p=2 path
    int words_ = 0;
    std::vector<std::vector<u64>> bits_;

    bool addRowGeneric(const u8* v);
    bool addRowBits(const u8* v);
};

/// Echelon reducer that records, for every vector it keeps, an expression of
/// the echelon row over the kept ("raw") vectors, and reports the expansion
/// of dependent vectors over the raw ones.
class ExprReducer {
public:
    ExprReducer(int p, int cols) : p_(p), cols_(cols) {}

    /// Expansion coefficients over the previously kept vectors when v is
    /// dependent; nothing when v was kept as a new raw vector.
    std::optional<std::vector<u8>> add(const std::vector<u8>& v);
    int rank() const { return int(rows_.size()); }
    int kept() const { return rawCount_; }

private:
    int p_, cols_;
    int rawCount_ = 0;
    std::vector<std::vector<u8>> rows_;
    std::vector<std::vector<u8>> exprRows_;
    std::vector<int> piv_;
};

int rankOf(const FpMatrix& m);

/// Nullspace basis of m (rows of the result), each vector verified by
/// multiplication.
FpMatrix nullspaceOf(const FpMatrix& m);

/// Row space of m in reduced echelon form.
FpMatrix rowBasisOf(const FpMatrix& m);

/// Reduced echelon form with recorded transform: rref = transform * m,
/// rowDeps spans the left kernel of m (dependencies among input rows).
struct RrefTransform {
    FpMatrix rref;      // rank x cols
    FpMatrix transform; // rank x m.rows
    FpMatrix rowDeps;   // (m.rows - rank) x m.rows
    std::vector<int> pivots;
};
RrefTransform rrefWithTransform(const FpMatrix& m);

/// Coordinate solver for the row space of a fixed basis matrix.
class RowspaceSolver {
public:
    explicit RowspaceSolver(FpMatrix basisRows);
    const FpMatrix& basis() const { return basis_; }
    int dim() const { return basis_.rows; }

    /// Coordinates x with x * basis = v, or nullopt if v is outside.
    std::optional<std::vector<u8>> coords(const std::vector<u8>& v) const;
    std::vector<u8> coordsOrThrow(const std::vector<u8>& v, const char* who) const;

    /// Matrix of a linear operator (acting on column vectors) restricted to
    /// the row space, which must be invariant: returns R with
    /// R[j][i] = coordinate of op*basis_i along basis_j.
    FpMatrix restrictOperator(const FpMatrix& op) const;

private:
    FpMatrix basis_;
    RrefTransform rt_;
};

/// Basis of ker((m - c)^rows), rows of the result; verified m-invariant.
FpMatrix generalizedEigenspace(const FpMatrix& m, u8 c);

/// Joint generalized eigenspace decomposition of commuting operators.
/// Commutation is checked; result pairs (eigenvalue tuple, basis rows) and
/// dimensions must sum to the full space.
struct JointPiece {
    std::vector<u8> eigentuple;
    FpMatrix basisRows;
};
std::vector<JointPiece> simultaneousSplit(int p, int dim, const std::vector<FpMatrix>& ops);

// Binary cache format: magic, version, p, rows, cols (little-endian u32),
// row-major entries one byte each (bit-packed rows for p=2), FNV-1a 64
// trailing checksum.
void writeFpm(std::ostream& os, const FpMatrix& m);
FpMatrix readFpm(std::istream& is);
void writeFpmFile(const std::string& path, const FpMatrix& m);
FpMatrix readFpmFile(const std::string& path);
u64 fpmChecksum(const FpMatrix& m);

} // namespace symext

#endif
