#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stampkit {

/// Base class for all domain errors. `code()` is the stable machine-readable
/// name surfaced by the CLI diagnostics and the JSON error field.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class EmptyBasisError : public Error {
public:
    explicit EmptyBasisError(const std::string& m = "basis has no denominations")
        : Error("Empty", m) {}
};

class NonPositiveError : public Error {
public:
    explicit NonPositiveError(const std::string& m = "denominations must be positive")
        : Error("NonPositive", m) {}
};

class NotStrictlyIncreasingError : public Error {
public:
    explicit NotStrictlyIncreasingError(const std::string& m = "denominations must be strictly increasing")
        : Error("NotStrictlyIncreasing", m) {}
};

class LengthMismatchError : public Error {
public:
    explicit LengthMismatchError(const std::string& m = "coefficient vector length does not match basis size")
        : Error("LengthMismatch", m) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& m = "exact 64-bit arithmetic overflow")
        : Error("Overflow", m) {}
};

class RequiresUnitDenominationError : public Error {
public:
    explicit RequiresUnitDenominationError(const std::string& m = "operation requires a basis whose smallest denomination is 1")
        : Error("RequiresUnitDenomination", m) {}
};

class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& m = "requested table exceeds the entry cap")
        : Error("ResourceLimit", m) {}
};

class GcdNotOneError : public Error {
public:
    explicit GcdNotOneError(const std::string& m = "Frobenius number requires gcd 1")
        : Error("GcdNotOne", m) {}
};

class NeedAtLeastTwoDenominationsError : public Error {
public:
    explicit NeedAtLeastTwoDenominationsError(const std::string& m = "operation requires at least two denominations")
        : Error("NeedAtLeastTwoDenominations", m) {}
};

class SmallestElementOneError : public Error {
public:
    explicit SmallestElementOneError(const std::string& m = "reduction input must have smallest element >= 2")
        : Error("SmallestElementOne", m) {}
};

class LemmaViolationError : public Error {
public:
    explicit LemmaViolationError(const std::string& m)
        : Error("LemmaViolation", m) {}
};

class IdentityViolationError : public Error {
public:
    explicit IdentityViolationError(const std::string& m)
        : Error("IdentityViolation", m) {}
};

}  // namespace stampkit
