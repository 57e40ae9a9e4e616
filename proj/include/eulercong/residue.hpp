#pragma once

#include <stdexcept>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace eulercong {

// A value mod 2^k_exp, stored canonically in [0, 2^k_exp).
class Residue {
public:
    Residue() : value_(0), k_exp_(1) {}

    Residue(BigInt value, unsigned k_exp) : value_(std::move(value)), k_exp_(k_exp) {
        if (k_exp_ < 1) throw BadModulus("Residue: modulus exponent must be >= 1");
        if (value_ < 0 || value_ >= pow2(k_exp_))
            throw RangeViolation("Residue: value not in canonical range");
    }

    const BigInt& value() const { return value_; }
    unsigned k_exp() const { return k_exp_; }
    BigInt modulus() const { return pow2(k_exp_); }

    // Reduction to a coarser modulus. Widening is not a thing: the extra
    // bits were never known.
    Residue truncated(unsigned k_exp) const {
        if (k_exp > k_exp_)
            throw BadModulus("Residue::truncated: cannot widen the modulus");
        return Residue(mod_pow2(value_, k_exp), k_exp);
    }

    // Signed representative in (-2^{k-1}, 2^{k-1}].
    BigInt balanced() const {
        BigInt half = pow2(k_exp_ - 1);
        return value_ > half ? BigInt(value_ - pow2(k_exp_)) : value_;
    }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.k_exp_ == b.k_exp_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    BigInt value_;
    unsigned k_exp_;
};

inline Residue reduce_signed(const BigInt& x, unsigned k_exp) {
    if (k_exp < 1) throw BadModulus("reduce_signed: modulus exponent must be >= 1");
    return Residue(mod_pow2(x, k_exp), k_exp);
}

}  // namespace eulercong
