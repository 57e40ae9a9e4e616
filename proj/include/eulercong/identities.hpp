#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "euler.hpp"
#include "report.hpp"
#include "rules.hpp"

namespace eulercong {

namespace detail {

// (3^e + 1) / 4 mod 2^k_exp for odd e. 3^odd is 3 mod 4, so the sum is
// divisible by 4; two guard bits above the target make the quotient
// exact before the final reduction.
inline BigInt quarter_pow3_plus1_mod(const BigInt& e, unsigned k_exp) {
    BigInt t = pow_mod2k(BigInt(3), e, k_exp + 2) + 1;
    return mod_pow2(exact_div(t, 4), k_exp);
}

inline void validate_even_b(long long b, const char* who) {
    if (b < 0) throw RangeViolation(std::string(who) + ": b must be >= 0");
    if (b % 2 != 0) throw OddIndexError(std::string(who) + ": b must be even");
}

}  // namespace detail

// f(k) = (3^{2k+b+1} + 1)/4 * E_{2k+b}, exact.
inline BigInt f_value(EulerTable& table, long long b, long long k) {
    detail::validate_even_b(b, "f_value");
    if (k < 0) throw RangeViolation("f_value: k must be >= 0");
    const std::uint64_t e = static_cast<std::uint64_t>(2 * k + b + 1);
    const BigInt t = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e)) + 1;
    return exact_div(t, 4) * table.exact(static_cast<std::uint64_t>(2 * k + b));
}

// F(k) = 2^{-3k} * sum_{r=0}^{k} C(k,r) (-1)^r f(r), exact. The sum
// must be divisible by 2^{3k}; if it is not, that is a counterexample
// to the 2-adic integrality the proof relies on, and it throws rather
// than rounding.
inline BigInt F_value(EulerTable& table, long long b, long long k) {
    detail::validate_even_b(b, "F_value");
    if (k < 0) throw RangeViolation("F_value: k must be >= 0");
    BigInt sum = 0;
    for (long long r = 0; r <= k; ++r) {
        const BigInt term = binomial_ext(BigInt(k), static_cast<std::uint64_t>(r))
                            * f_value(table, b, r);
        sum += (r % 2 == 0) ? term : -term;
    }
    const unsigned need = static_cast<unsigned>(3 * k);
    const auto v = two_adic_valuation(sum);
    if (v.has_value() && *v < need) {
        std::ostringstream os;
        os << "F_value: 2^" << need << " does not divide the alternating sum at b="
           << b << " k=" << k << " (valuation " << *v << ")";
        throw IntegralityViolation(os.str());
    }
    return exact_div(sum, pow2(need));
}

// Binomial inversion round trip: f(k) = sum_{r=0}^{k} C(k,r) (-8)^r F(r),
// checked as an exact identity.
inline bool inversion_check(EulerTable& table, long long b, long long k) {
    detail::validate_even_b(b, "inversion_check");
    if (k < 0) throw RangeViolation("inversion_check: k must be >= 0");
    BigInt sum = 0;
    BigInt pw = 1;  // (-8)^r
    for (long long r = 0; r <= k; ++r) {
        sum += binomial_ext(BigInt(k), static_cast<std::uint64_t>(r)) * pw
               * F_value(table, b, r);
        pw *= -8;
    }
    return sum == f_value(table, b, k);
}

// (3^{2k+1}+1)/4 * E_{2k} against its length-n backward combination,
// compared mod 2^{3n}. Binomials whose top argument goes negative use
// the falling-factorial extension.
inline CheckReport eq15_check(EulerTable& table, long long k, long long n) {
    if (k < 0) throw RangeViolation("eq15_check: k must be >= 0");
    if (n < 1) throw RangeViolation("eq15_check: n must be >= 1");
    const unsigned kx = static_cast<unsigned>(3 * n);

    const BigInt lhs = exact_div(
        boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(2 * k + 1)) + 1, 4)
        * table.exact(static_cast<std::uint64_t>(2 * k));

    BigInt rhs = 0;
    for (long long r = 0; r <= n - 1; ++r) {
        const BigInt coeff =
            binomial_ext(BigInt(k - 1 - r), static_cast<std::uint64_t>(n - 1 - r))
            * binomial_ext(BigInt(k), static_cast<std::uint64_t>(r));
        const BigInt fr = exact_div(
            boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(2 * r + 1)) + 1, 4)
            * table.exact(static_cast<std::uint64_t>(2 * r));
        const BigInt term = coeff * fr;
        rhs += ((n - 1 - r) % 2 == 0) ? term : -term;
    }

    CheckReport rep;
    rep.id_key = "step";
    rep.id = "EQ15";
    rep.params = {{"k", k}, {"n", n}};
    rep.modulus_exp = kx;
    rep.lhs = reduce_signed(rhs, kx);
    rep.rhs = reduce_signed(lhs, kx);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

// 3^{2^m k} mod 2^{m+9} against its quadratic expansion in 2^m k.
inline CheckReport pow3_expansion_check(long long m, long long k) {
    if (m < 4) throw GuardViolation("pow3_expansion_check requires m >= 4");
    if (m > 57) throw RangeViolation("pow3_expansion_check: m must be <= 57");
    if (k < 1) throw RangeViolation("pow3_expansion_check: k must be >= 1");
    const unsigned kx = static_cast<unsigned>(m + 9);
    const BigInt kk = k;
    const BigInt exponent = pow2(static_cast<unsigned>(m)) * kk;
    const BigInt expanded = 1 + 61 * pow2(static_cast<unsigned>(m + 2)) * kk
                            + pow2(static_cast<unsigned>(2 * m + 3)) * kk * kk;

    CheckReport rep;
    rep.id_key = "step";
    rep.id = "POW3";
    rep.params = {{"m", m}, {"k", k}};
    rep.modulus_exp = kx;
    rep.lhs = reduce_signed(expanded, kx);
    rep.rhs = Residue(pow_mod2k(BigInt(3), exponent, kx), kx);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

// Intermediate steps in the derivation of the main theorem. Each step
// compares a combination of f/F values or table residues against the
// displayed closed form at that step's modulus.
enum class StepId { EQ21, EQ22, EQ23, EQ26 };

constexpr std::string_view step_name(StepId s) {
    switch (s) {
        case StepId::EQ21: return "EQ21";
        case StepId::EQ22: return "EQ22";
        case StepId::EQ23: return "EQ23";
        case StepId::EQ26: return "EQ26";
    }
    return "?";
}

inline std::optional<StepId> step_from_name(std::string_view name) {
    for (StepId s : {StepId::EQ21, StepId::EQ22, StepId::EQ23, StepId::EQ26})
        if (step_name(s) == name) return s;
    return std::nullopt;
}

inline CheckReport proof_step_check(StepId step, long long m, long long k,
                                    long long b, EulerTable& table) {
    if (m < 4) throw GuardViolation("proof_step_check requires m >= 4");
    if (m > 57) throw RangeViolation("proof_step_check: m must be <= 57");
    if (k < 1) throw RangeViolation("proof_step_check: k must be >= 1");
    detail::validate_even_b(b, "proof_step_check");

    const unsigned kx = (step == StepId::EQ22) ? 9u : static_cast<unsigned>(m + 7);
    const BigInt kk = k;
    const BigInt bb = b;
    const BigInt m2k = pow2(static_cast<unsigned>(m)) * kk;

    BigInt closed, combined;
    switch (step) {
        case StepId::EQ21: {
            // f at the shifted argument, in residue arithmetic, vs the
            // three-term F combination computed exactly
            const std::uint64_t idx = shifted_index(m, k, b);
            combined = detail::quarter_pow3_plus1_mod(BigInt(idx) + 1, kx)
                       * table.mod(idx, kx).value();
            const BigInt f0 = F_value(table, b, 0);
            const BigInt f1 = F_value(table, b, 1);
            const BigInt f2 = F_value(table, b, 2);
            closed = f0 - pow2(static_cast<unsigned>(m + 2)) * kk * f1
                     + pow2(static_cast<unsigned>(m + 4)) * kk
                           * (pow2(static_cast<unsigned>(m - 1)) * kk - 1) * f2;
            break;
        }
        case StepId::EQ22:
            combined = 3 * f_value(table, b, 0) - 4 * f_value(table, b, 1)
                       + f_value(table, b, 2);
            closed = -176 - 64 * bb;
            break;
        case StepId::EQ23:
        case StepId::EQ26: {
            const std::uint64_t idx = shifted_index(m, k, b);
            const BigInt top = table.mod(idx, kx).value();
            const BigInt base = table.mod(static_cast<std::uint64_t>(b), kx).value();
            combined = detail::quarter_pow3_plus1_mod(bb + 1, kx) * (top - base);
            if (step == StepId::EQ23)
                closed = m2k * (pow2(static_cast<unsigned>(m + 1)) * kk - 55)
                             * pow_mod2k(BigInt(3), bb, kx) * top
                         + m2k * (44 + 16 * bb);
            else if (b % 4 == 0)
                closed = m2k * (-bb * bb + bb - 11 - m2k);
            else
                closed = m2k * (bb * bb + 5 * bb + 45 + 3 * m2k);
            break;
        }
    }

    CheckReport rep;
    rep.id_key = "step";
    rep.id = std::string(step_name(step));
    rep.params = {{"m", m}, {"k", k}, {"b", b}};
    rep.modulus_exp = kx;
    rep.lhs = reduce_signed(closed, kx);
    rep.rhs = reduce_signed(combined, kx);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace eulercong
