#ifndef ZF_ERRORS_HPP
#define ZF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zf {

// Argument outside the mathematical domain of an operation (sigma <= 1,
// log of a nonpositive value, odd index where an even one is required, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Integer rejected as a fundamental discriminant.
struct NotFundamental : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Closed-form evaluation requested where the character parity forbids it.
struct ParityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested working precision cannot resolve the quantity being computed.
struct PrecisionInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent exact algorithms disagreed; an arithmetic bug, not user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// A computed value violated an invariant that holds mathematically
// (e.g. q_i outside (0,1)); signals precision loss or a bug upstream.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Input exceeds a configured resource cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Result magnitude exceeded the representable range of the precision policy.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

} // namespace zf

#endif
