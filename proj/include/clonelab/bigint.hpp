#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace clonelab {

/// Arbitrary-precision signed integer.  All exact arithmetic in the
/// library goes through this type; fixed-width overflow is never
/// acceptable because identity checks multiply by powers of the base.
using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline bool divisible_by(const BigInt& value, long divisor) {
    return mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(divisor)) != 0;
}

/// Exact division; the caller must know the divisor divides the value.
inline BigInt divide_exact(const BigInt& value, long divisor) {
    BigInt out;
    mpz_divexact_ui(out.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(divisor));
    return out;
}

inline std::string to_string(const BigInt& value) {
    return value.get_str();
}

} // namespace clonelab
