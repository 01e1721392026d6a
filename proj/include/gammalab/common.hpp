#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

/// Bit mask over at most 64 items (vertices, ground elements or variables).
using Mask = std::uint64_t;

inline constexpr int kMaxBits = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr Mask low_bits(int count) {
    return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
}

/// Indices of the set bits of `m`, ascending.
std::vector<int> bits_of(Mask m);

/// Error categories surfaced to callers and to the CLI error JSON.
enum class ErrorKind {
    validation,          // malformed input value (bad edge, bad label size, ...)
    parse,               // text/JSON could not be decoded
    too_large,           // an enumeration or brute-force guard was exceeded
    not_equidimensional,
    verification_failed,
    undecided,           // search gave up before reaching a verdict
    precondition,
    invariant_violation, // internal consistency check failed; a bug if ever seen
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gammalab
