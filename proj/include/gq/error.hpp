#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gq {

enum class ErrKind {
    NotAccumulating,            // finite block set where an accumulating one is required
    IndeterminateAtPrecision,   // germ known only modulo O(eps^N), cannot certify vanishing
    NotInvertible,              // vanishes on an accumulating branch; witness idempotent attached
    ZeroInput,                  // operation undefined on exactly zero
    IsUnit,                     // annihilator requested for a unit
    NotQPositive,               // element has a branch with negative leading coefficient
    NotQPositiveLeading,        // germ square root of a non-positive leading coefficient
    NotExact,                   // decision refused on approx-tagged coefficients
    BadValue,                   // malformed input (partition, literal, arity, ...)
    ParseError,
    EvalError,
};

const char* err_name(ErrKind k);

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

    ErrKind kind() const { return kind_; }

    /// Printable witness, e.g. the annihilating idempotent of NotInvertible.
    const std::optional<std::string>& witness() const { return witness_; }
    Error& with_witness(std::string w) { witness_ = std::move(w); return *this; }

    /// Byte offset for ParseError.
    std::optional<std::size_t> position() const { return pos_; }
    Error& at_position(std::size_t p) { pos_ = p; return *this; }

    /// Library error kind wrapped by an EvalError.
    std::optional<ErrKind> inner() const { return inner_; }
    Error& wrapping(ErrKind k) { inner_ = k; return *this; }

private:
    ErrKind kind_;
    std::optional<std::string> witness_;
    std::optional<std::size_t> pos_;
    std::optional<ErrKind> inner_;
};

}  // namespace gq
