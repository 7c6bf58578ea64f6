#ifndef SYMEXT_ERRORS_HPP
#define SYMEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symext {

enum class Err {
    InvalidNodeSet,
    SizeMismatch,
    BeadCountTooSmall,
    BadRunnerIndex,
    EmptyRunner,
    NotPRegular,
    PreconditionFailed,
    NotSeparated,
    BudgetExceeded,
    NonCommuting,
    DegreeMismatch,
    BlockMismatch,
    UnrecognizedEigentuple,
    MeataxeStall,
    NotIrreducible,
    NonUniqueSocleCopy,
    NoSelfExtension,
    EnvelopeExceeded,
    BadInput,
    CacheError,
    InternalError,
};

const char* errName(Err e);

class SymError : public std::runtime_error {
public:
    SymError(Err code, const std::string& what)
        : std::runtime_error(std::string(errName(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw SymError(code, what); }

inline void require(bool cond, Err code, const std::string& what) {
    if (!cond)
        fail(code, what);
}

} // namespace symext

#endif
