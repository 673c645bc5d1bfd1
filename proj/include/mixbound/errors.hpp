#ifndef MIXBOUND_ERRORS_HPP
#define MIXBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixbound {

/// Base class for all library errors. Input errors (bad matrices, bad
/// arguments) derive from InputError; failures of a numerical procedure or
/// of a hypothesis discovered mid-computation derive from ComputeError.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : Error {
    using Error::Error;
};

struct ComputeError : Error {
    using Error::Error;
};

// --- matrix validation ---

struct NonSquare : InputError {
    NonSquare(long rows, long cols)
        : InputError("matrix is not square: " + std::to_string(rows) + "x" +
                     std::to_string(cols)) {}
};

struct RowSumViolation : InputError {
    long row;
    double deviation;
    RowSumViolation(long row_, double dev)
        : InputError("row " + std::to_string(row_) + " sums to 1" +
                     (dev >= 0 ? "+" : "") + std::to_string(dev)),
          row(row_), deviation(dev) {}
};

struct NegativeEntry : InputError {
    long row, col;
    double value;
    NegativeEntry(long r, long c, double v)
        : InputError("negative entry " + std::to_string(v) + " at (" +
                     std::to_string(r) + "," + std::to_string(c) + ")"),
          row(r), col(c), value(v) {}
};

// --- spectral analysis ---

struct NonUniqueStationary : ComputeError {
    NonUniqueStationary()
        : ComputeError("eigenvalue 1 has multiplicity > 1; stationary "
                       "distribution is not unique") {}
};

struct EigensolverFailure : ComputeError {
    EigensolverFailure() : ComputeError("dense eigensolver did not converge") {}
};

struct ZeroStationaryMass : ComputeError {
    ZeroStationaryMass()
        : ComputeError("stationary distribution has a zero entry") {}
};

// --- distances ---

struct DimensionMismatch : InputError {
    DimensionMismatch() : InputError("vector/matrix dimensions do not match") {}
};

struct NotAProbabilityVector : InputError {
    NotAProbabilityVector()
        : InputError("vector is not a probability distribution") {}
};

struct BudgetExceeded : InputError {
    BudgetExceeded(const std::string& what) : InputError("compute budget exceeded: " + what) {}
};

struct HorizonTooShort : ComputeError {
    HorizonTooShort()
        : ComputeError("profile never reaches the requested epsilon") {}
};

// --- bounds ---

struct EpsilonOutOfRange : InputError {
    explicit EpsilonOutOfRange(double eps)
        : InputError("epsilon " + std::to_string(eps) + " out of range") {}
};

struct ZeroPiMin : ComputeError {
    ZeroPiMin() : ComputeError("pi_min = 0: bound gives no information") {}
};

struct InfiniteRelaxation : ComputeError {
    InfiniteRelaxation()
        : ComputeError("beta_star = 1: relaxation time is infinite") {}
};

struct TimeTooSmall : InputError {
    TimeTooSmall(long t, long n)
        : InputError("t = " + std::to_string(t) + " below N-1 = " +
                     std::to_string(n - 1)) {}
};

struct BetaOutOfRange : InputError {
    explicit BetaOutOfRange(double b)
        : InputError("beta " + std::to_string(b) + " outside [0,1)") {}
};

struct DeltaNegative : ComputeError {
    DeltaNegative() : ComputeError("t too small for the Chernoff bound") {}
};

struct StateSpaceTooLarge : InputError {
    explicit StateSpaceTooLarge(long n)
        : InputError("N = " + std::to_string(n) +
                     " too large for exhaustive subset enumeration") {}
};

struct ZeroPhi : ComputeError {
    ZeroPhi() : ComputeError("Cheeger constant is zero") {}
};

struct AlphaOne : ComputeError {
    AlphaOne() : ComputeError("multiplicative reversibilization does not converge (alpha = 1)") {}
};

// --- duality ---

struct NotSorted : InputError {
    NotSorted() : InputError("beta sequence is not weakly increasing") {}
};

struct NegativeSpectrum : ComputeError {
    NegativeSpectrum()
        : ComputeError("spectrum is not real nonnegative within tolerance") {}
};

struct NegativeLinkEntry : ComputeError {
    long row, col;
    double value;
    NegativeLinkEntry(long r, long c, double v)
        : ComputeError("link entry (" + std::to_string(r) + "," +
                       std::to_string(c) + ") = " + std::to_string(v) +
                       " is negative beyond tolerance"),
          row(r), col(c), value(v) {}
};

struct DegenerateGap : ComputeError {
    DegenerateGap() : ComputeError("some beta_j is within tolerance of 1") {}
};

struct NotSkipFree : InputError {
    NotSkipFree() : InputError("matrix is not skip-free upward") {}
};

// --- schur ---

struct IndexOutOfRange : InputError {
    IndexOutOfRange() : InputError("companion matrix index out of range") {}
};

struct TooLarge : InputError {
    TooLarge(const std::string& what) : InputError("enumeration too large: " + what) {}
};

// --- examples ---

struct NotAProbabilityTriple : InputError {
    NotAProbabilityTriple()
        : InputError("p, q, r must be nonnegative and sum to 1") {}
};

struct NTooSmall : InputError {
    explicit NTooSmall(long n)
        : InputError("N = " + std::to_string(n) + " too small") {}
};

struct DimensionTooLarge : InputError {
    explicit DimensionTooLarge(long n)
        : InputError("dimension " + std::to_string(n) + " too large") {}
};

// --- io ---

struct ParseError : InputError {
    long line, column;
    ParseError(long line_, long col, const std::string& msg)
        : InputError("parse error at line " + std::to_string(line_) +
                     ", column " + std::to_string(col) + ": " + msg),
          line(line_), column(col) {}
};

} // namespace mixbound

#endif
