#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>

#include "errors.hpp"

namespace eulercong {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned k_exp) { return BigInt(1) << k_exp; }

// Canonical representative of x mod 2^k_exp, in [0, 2^k_exp).
// cpp_int is sign-magnitude, so % of a negative is negative; adjust.
inline BigInt mod_pow2(const BigInt& x, unsigned k_exp) {
    BigInt m = pow2(k_exp);
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Largest v with 2^v | x. nullopt encodes the infinite valuation of 0.
inline std::optional<std::size_t> two_adic_valuation(const BigInt& x) {
    if (x == 0) return std::nullopt;
    const BigInt a = x < 0 ? BigInt(-x) : x;
    return static_cast<std::size_t>(boost::multiprecision::lsb(a));
}

inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0 || num % den != 0)
        throw InexactDivision("exact_div: division is not exact");
    return num / den;
}

inline BigInt pow_mod2k(const BigInt& base, const BigInt& exponent, unsigned k_exp) {
    if (k_exp < 1) throw BadModulus("pow_mod2k: modulus exponent must be >= 1");
    if (exponent < 0) throw RangeViolation("pow_mod2k: exponent must be >= 0");
    return boost::multiprecision::powm(mod_pow2(base, k_exp), exponent, pow2(k_exp));
}

// Inverse of an odd value mod 2^k_exp by Newton lifting: correct bits
// double each round, so ceil(log2 k) rounds suffice.
inline BigInt inverse_mod2k(const BigInt& x, unsigned k_exp) {
    if (k_exp < 1) throw BadModulus("inverse_mod2k: modulus exponent must be >= 1");
    BigInt xr = mod_pow2(x, k_exp);
    if (xr % 2 == 0) throw NonInvertible("inverse_mod2k: even values have no inverse");
    BigInt y = 1;
    for (unsigned bits = 1; bits < k_exp; bits *= 2)
        y = mod_pow2(y * (2 - xr * y), k_exp);
    return y;
}

// Binomial coefficient extended to arbitrary integer tops via the
// falling factorial: C(x, j) = x(x-1)...(x-j+1) / j!. In particular
// C(-1, 0) = 1 and C(x, j) = 0 for 0 <= x < j.
inline BigInt binomial_ext(const BigInt& x, std::uint64_t j) {
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        num *= x - BigInt(i);
        den *= BigInt(i + 1);
    }
    return exact_div(num, den);
}

}  // namespace eulercong
