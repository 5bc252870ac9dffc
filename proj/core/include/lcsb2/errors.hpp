#ifndef LCSB2_ERRORS_HPP
#define LCSB2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcsb2 {

/// Base for inputs outside the verifiable regime (CLI exit code 2).
struct HypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input violates the quasihomogeneity hypothesis (no positive weights work).
struct NotQuasihomogeneousError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Abelianized input has a repeated factor (or is zero).
struct NotSquareFreeError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Zero or constant relation: rejected up front with a targeted message.
struct InvalidRelationError : HypothesisError {
    using HypothesisError::HypothesisError;
};

/// Shape decomposition found a monomial factor x^U y^V with U >= 2 or V >= 2.
struct SquarePartError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exponents of a quasihomogeneous polynomial failed to fit the coprime-weight
/// grid; indicates a broken precondition upstream.
struct ShapeMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A rank or determinant certificate did not hold.
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lcsb2

#endif
