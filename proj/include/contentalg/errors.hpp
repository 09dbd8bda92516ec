#pragma once

#include <stdexcept>
#include <string>

namespace contentalg {

// Structural axiom failure detected while validating a ring or monoid table.
class AxiomViolation : public std::runtime_error {
public:
    explicit AxiomViolation(const std::string& what) : std::runtime_error(what) {}
};

// Requested ring would exceed the configured order cap.
class OrderCapExceeded : public std::runtime_error {
public:
    explicit OrderCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Two operands live over different rings/monoids.
class Mismatch : public std::runtime_error {
public:
    explicit Mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations of the same object disagree. This signals an
// implementation bug, never a property of the input.
class CrossValidationMismatch : public std::runtime_error {
public:
    explicit CrossValidationMismatch(const std::string& what) : std::runtime_error(what) {}
};

// A caller invoked an operation whose stated precondition does not hold.
class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran past its cap. For the Dedekind-Mertens search this is
// the loudest possible alarm: either a hypothesis was violated or a theorem
// just failed on a concrete input.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed configuration input.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace contentalg
