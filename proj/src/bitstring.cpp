#include "hammit/bitstring.hpp"

#include <limits>

#include "hammit/errors.hpp"

namespace hammit {

namespace {

void check_width(int width) {
    if (width < 1 || width > 64) {
        throw ConsistencyError("bit-string width must be in [1, 64], got " +
                               std::to_string(width));
    }
}

} // namespace

std::uint64_t width_mask(int width) {
    check_width(width);
    if (width == 64) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return (std::uint64_t{1} << width) - 1;
}

BitString bitstring_from_bits(std::uint64_t bits, int width) {
    if ((bits & ~width_mask(width)) != 0) {
        throw ConsistencyError("value " + std::to_string(bits) +
                               " does not fit in " + std::to_string(width) + " bits");
    }
    return BitString{bits, width};
}

BitString parse_bitstring(std::string_view text, int width) {
    check_width(width);
    if (static_cast<int>(text.size()) != width) {
        throw FormatError("bit-string '" + std::string(text) + "' has length " +
                          std::to_string(text.size()) + ", expected " +
                          std::to_string(width));
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw FormatError("bit-string '" + std::string(text) +
                              "' contains non-binary character '" + std::string(1, c) + "'");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString{bits, width};
}

std::string format_bitstring(const BitString& bs) {
    check_width(bs.width);
    std::string out(static_cast<std::size_t>(bs.width), '0');
    for (int i = 0; i < bs.width; ++i) {
        if ((bs.bits >> i) & 1u) {
            out[static_cast<std::size_t>(bs.width - 1 - i)] = '1';
        }
    }
    return out;
}

} // namespace hammit
