#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base for failures while parsing a bit stream. Carries the bit offset at
/// which the offending codeword started.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t bit_offset)
        : std::runtime_error(what + " (bit offset " + std::to_string(bit_offset) + ")"),
          bit_offset_(bit_offset) {}

    std::size_t bit_offset() const noexcept { return bit_offset_; }

private:
    std::size_t bit_offset_;
};

class StreamExhausted : public DecodeError {
public:
    using DecodeError::DecodeError;
};

class MalformedCodeword : public DecodeError {
public:
    using DecodeError::DecodeError;
};

/// A region oracle cannot classify a cube soundly.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SamplingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Target density puts too much mass outside a truncated implied table.
class CoverageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace udc
