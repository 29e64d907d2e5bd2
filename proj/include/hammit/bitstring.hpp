#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hammit {

/// A measured binary outcome of a fixed number of qubits, packed into a
/// 64-bit word. Bit i of `bits` is the i-th qubit counted from the least
/// significant (rightmost) character of the textual form.
struct BitString {
    std::uint64_t bits = 0;
    int width = 1;

    friend bool operator==(const BitString&, const BitString&) = default;
};

/// All-ones mask for a register of `width` qubits (1 <= width <= 64).
std::uint64_t width_mask(int width);

/// Builds a BitString from a raw word, rejecting words that do not fit.
BitString bitstring_from_bits(std::uint64_t bits, int width);

/// Parses an MSB-first '0'/'1' literal of exactly `width` characters.
BitString parse_bitstring(std::string_view text, int width);

/// Inverse of parse_bitstring: MSB-first textual form of exactly
/// `bs.width` characters.
std::string format_bitstring(const BitString& bs);

} // namespace hammit
