#pragma once

#include <stdexcept>
#include <string>

namespace schroq {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct DenominatorVanishes : std::domain_error {
    explicit DenominatorVanishes(const std::string& what) : std::domain_error(what) {}
};

struct NonRationalRoot : std::domain_error {
    explicit NonRationalRoot(const std::string& what) : std::domain_error(what) {}
};

struct SyntaxError : std::runtime_error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct InvalidWeight : std::domain_error {
    explicit InvalidWeight(const std::string& what) : std::domain_error(what) {}
};

struct ZeroCentralCharge : std::domain_error {
    explicit ZeroCentralCharge(const std::string& what) : std::domain_error(what) {}
};

struct TruncationOverflow : std::runtime_error {
    explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct RelationViolation : std::runtime_error {
    explicit RelationViolation(const std::string& what) : std::runtime_error(what) {}
};

struct UnrealizableCTilde : std::runtime_error {
    explicit UnrealizableCTilde(const std::string& what) : std::runtime_error(what) {}
};

struct NoIsoFound : std::runtime_error {
    explicit NoIsoFound(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schroq
