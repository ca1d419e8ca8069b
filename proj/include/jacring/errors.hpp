#pragma once

#include <stdexcept>
#include <string>

namespace jacring {

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& m) : std::runtime_error("OutOfRange: " + m) {}
};

struct UnknownEdge : std::runtime_error {
    explicit UnknownEdge(const std::string& m) : std::runtime_error("UnknownEdge: " + m) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& m) : std::runtime_error("Unsupported: " + m) {}
};

struct NondegeneracyViolation : std::runtime_error {
    explicit NondegeneracyViolation(const std::string& m)
        : std::runtime_error("NondegeneracyViolation: " + m) {}
};

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& m) : std::runtime_error("InvalidInput: " + m) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& m)
        : std::runtime_error("DimensionMismatch: " + m) {}
};

struct NoRule : std::runtime_error {
    explicit NoRule(const std::string& m) : std::runtime_error("NoRule: " + m) {}
};

struct TypeMismatch : std::runtime_error {
    explicit TypeMismatch(const std::string& m) : std::runtime_error("TypeMismatch: " + m) {}
};

struct UnsupportedRelation : std::runtime_error {
    explicit UnsupportedRelation(const std::string& m)
        : std::runtime_error("UnsupportedRelation: " + m) {}
};

struct DegenerateFamily : std::runtime_error {
    explicit DegenerateFamily(const std::string& m)
        : std::runtime_error("DegenerateFamily: " + m) {}
};

}  // namespace jacring
