#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sweb {

/// Base class for all engine errors.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed expression text. Carries the byte offset of the offending token.
class SyntaxError : public EngineError {
public:
    SyntaxError(std::size_t offset, const std::string& msg)
        : EngineError("syntax error at offset " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public EngineError {
public:
    UnknownIdentifier(std::size_t offset, const std::string& name)
        : EngineError("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DivisionByZero : public EngineError {
public:
    DivisionByZero() : EngineError("division by zero") {}
};

class DomainError : public EngineError {
public:
    explicit DomainError(const std::string& msg) : EngineError(msg) {}
};

/// Exact mode met a transcendental node without an exact rational image.
class ExactnessError : public EngineError {
public:
    explicit ExactnessError(const std::string& msg) : EngineError(msg) {}
};

class UnboundVariable : public EngineError {
public:
    explicit UnboundVariable(const std::string& name)
        : EngineError("unbound variable '" + name + "'") {}
};

/// Differentiation would produce a W-indeterminate past the order cap.
class WOrderOverflow : public EngineError {
public:
    explicit WOrderOverflow(int order)
        : EngineError("W-indeterminate order " + std::to_string(order) + " exceeds cap 6") {}
};

/// The web data violates a nondegeneracy requirement (f_x f_y = 0, b in {0,1}, ...).
class DegenerateWeb : public EngineError {
public:
    explicit DegenerateWeb(const std::string& msg) : EngineError(msg) {}
};

class RepeatedDirection : public EngineError {
public:
    RepeatedDirection() : EngineError("two web covectors share a direction") {}
};

/// The elimination determinant vanishes on a proper subset of the domain.
class MixedBranch : public EngineError {
public:
    explicit MixedBranch(const std::string& msg) : EngineError(msg) {}
};

class PoleError : public EngineError {
public:
    explicit PoleError(const std::string& msg) : EngineError(msg) {}
};

class ConfigError : public EngineError {
public:
    explicit ConfigError(const std::string& msg) : EngineError(msg) {}
};

}  // namespace sweb
