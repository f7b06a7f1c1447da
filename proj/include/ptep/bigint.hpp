#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ptep {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// that arithmetic results have type BigInt.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline bool is_zero(const BigInt& v) { return v.is_zero(); }

inline BigInt zero_like(const BigInt&) { return BigInt{0}; }

inline BigInt scale(const BigInt& v, const BigInt& k) { return v * k; }

/// +1 or -1 when v is a unit of Z, otherwise nullopt.
inline std::optional<int> unit_sign(const BigInt& v)
{
    if (v == 1) return 1;
    if (v == -1) return -1;
    return std::nullopt;
}

} // namespace ptep
