#pragma once

#include <stdexcept>
#include <string>

namespace dccrisk {

// All library failures derive from Error so callers can catch one base.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-file problems: missing cells, bad dates, non-numeric fields.
struct IngestError : Error {
    using Error::Error;
};

// Shape or length mismatch between series/matrices.
struct DimError : Error {
    using Error::Error;
};

// Value outside the mathematical domain of an operation (e.g. ES >= 0
// in the joint score, nonpositive diagonal in a correlation rescale).
struct DomainError : Error {
    using Error::Error;
};

// No feasible point found (all optimizer starts rejected, or an
// unattainable portfolio constraint).
struct InfeasibleError : Error {
    using Error::Error;
};

// Parameter vector outside the admissible region of a filter recursion.
struct InfeasibleParams : Error {
    using Error::Error;
};

// Estimation failure (propagated optimizer failures, too-short samples).
struct FitError : Error {
    using Error::Error;
};

// Invalid recursion initialisation (e.g. non-PD starting correlation).
struct InitError : Error {
    using Error::Error;
};

// Violated internal invariant; indicates a bug upstream, not bad input.
struct InternalError : Error {
    using Error::Error;
};

// Rank-deficient regressor matrix.
struct RankError : Error {
    using Error::Error;
};

// A statistical test could not be computed (singular design, etc.).
struct TestError : Error {
    using Error::Error;
};

// Simulation produced an invalid state.
struct SimError : Error {
    using Error::Error;
};

}  // namespace dccrisk
