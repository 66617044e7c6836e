#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "spirality/errors.hpp"

namespace spirality {

/// Arbitrary-precision signed integer. Every genus, degree, coefficient
/// and family parameter in the library uses this type; nothing overflows.
using BigInt = boost::multiprecision::cpp_int;

inline std::string decimal(const BigInt& v) {
    return v.str();
}

/// Parses an optionally signed decimal integer. Throws ParameterError on
/// anything else (empty string, sign alone, stray characters).
inline BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParameterError("not an integer: \"" + text + "\"");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParameterError("not an integer: \"" + text + "\"");
    }
    return BigInt(text);
}

inline bool fits_int64(const BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw ParameterError("integer too large for int64: " + decimal(v));
    return v.convert_to<std::int64_t>();
}

} // namespace spirality
