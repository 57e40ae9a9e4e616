#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euler.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace eulercong {

// Congruences for E_{2^m k + b}. The first eight predict the difference
// E_{2^m k + b} - E_b; the last two pin E_b itself by a polynomial in b.
enum class RuleId {
    STERN11,
    SUN12,
    SUN13,
    SUN14,
    EQ16,
    THM21,
    COR22,
    COR23,
    EQ24,
    LEMMA21,
};

enum class RuleKind { delta, value };

inline constexpr std::array<RuleId, 10> kAllRules = {
    RuleId::STERN11, RuleId::SUN12, RuleId::SUN13, RuleId::SUN14, RuleId::EQ16,
    RuleId::THM21,   RuleId::COR22, RuleId::COR23, RuleId::EQ24,  RuleId::LEMMA21,
};

inline constexpr std::array<RuleId, 8> kDeltaRules = {
    RuleId::STERN11, RuleId::SUN12, RuleId::SUN13, RuleId::SUN14,
    RuleId::EQ16,    RuleId::THM21, RuleId::COR22, RuleId::COR23,
};

constexpr std::string_view rule_name(RuleId id) {
    switch (id) {
        case RuleId::STERN11: return "STERN11";
        case RuleId::SUN12:   return "SUN12";
        case RuleId::SUN13:   return "SUN13";
        case RuleId::SUN14:   return "SUN14";
        case RuleId::EQ16:    return "EQ16";
        case RuleId::THM21:   return "THM21";
        case RuleId::COR22:   return "COR22";
        case RuleId::COR23:   return "COR23";
        case RuleId::EQ24:    return "EQ24";
        case RuleId::LEMMA21: return "LEMMA21";
    }
    return "?";
}

inline std::optional<RuleId> rule_from_name(std::string_view name) {
    for (RuleId id : kAllRules)
        if (rule_name(id) == name) return id;
    return std::nullopt;
}

constexpr RuleKind rule_kind(RuleId id) {
    return (id == RuleId::EQ24 || id == RuleId::LEMMA21) ? RuleKind::value
                                                         : RuleKind::delta;
}

// Smallest m for which the rule is asserted.
constexpr long long rule_min_m(RuleId id) {
    switch (id) {
        case RuleId::STERN11: return 1;
        case RuleId::SUN12:   return 2;
        case RuleId::SUN13:   return 3;
        case RuleId::SUN14:   return 4;
        case RuleId::EQ16:    return 7;
        case RuleId::THM21:   return 1;
        case RuleId::COR22:   return 3;
        case RuleId::COR23:   return 5;
        case RuleId::EQ24:    return 1;
        case RuleId::LEMMA21: return 1;
    }
    return 1;
}

// Exponent of the modulus the rule holds at, as a function of m.
constexpr unsigned rule_modulus_exp(RuleId id, long long m) {
    switch (id) {
        case RuleId::STERN11: return static_cast<unsigned>(m + 1);
        case RuleId::SUN12:   return static_cast<unsigned>(m + 2);
        case RuleId::SUN13:   return static_cast<unsigned>(m + 3);
        case RuleId::SUN14:   return static_cast<unsigned>(m + 4);
        case RuleId::EQ16:    return static_cast<unsigned>(m + 7);
        case RuleId::THM21:   return static_cast<unsigned>(m + 7);
        case RuleId::COR22:   return static_cast<unsigned>(m + 6);
        case RuleId::COR23:   return static_cast<unsigned>(m + 5);
        case RuleId::EQ24:    return 7;
        case RuleId::LEMMA21: return 10;
    }
    return 1;
}

// Point at which a rule is evaluated: index 2^m * k + b against base b.
struct CongruenceQuery {
    long long m = 1;
    long long k = 1;
    long long b = 0;
};

inline void validate(const CongruenceQuery& q) {
    if (q.m < 1 || q.m > 57)
        throw RangeViolation("query: m must be in [1, 57]");
    if (q.k < 1) throw RangeViolation("query: k must be >= 1");
    if (q.b < 0) throw RangeViolation("query: b must be >= 0");
    if (q.b % 2 != 0) throw OddIndexError("query: b must be even");
}

inline bool rule_guard(RuleId id, const CongruenceQuery& q) {
    return q.m >= rule_min_m(id);
}

inline std::uint64_t shifted_index(long long m, long long k, long long b) {
    if (m < 1 || m > 57)
        throw RangeViolation("shifted_index: m must be in [1, 57]");
    if (k < 1) throw RangeViolation("shifted_index: k must be >= 1");
    if (b < 0) throw RangeViolation("shifted_index: b must be >= 0");
    const std::uint64_t p = std::uint64_t{1} << static_cast<unsigned>(m);
    const std::uint64_t kk = static_cast<std::uint64_t>(k);
    const std::uint64_t bb = static_cast<std::uint64_t>(b);
    if (kk > (std::numeric_limits<std::uint64_t>::max() - bb) / p)
        throw RangeViolation("shifted_index: 2^m*k+b overflows 64 bits");
    return p * kk + bb;
}

inline std::uint64_t shifted_index(const CongruenceQuery& q) {
    return shifted_index(q.m, q.k, q.b);
}

// E_b mod 2^10 as a quartic in b, split on b mod 4.
inline Residue lemma21_value(long long b) {
    if (b < 0) throw RangeViolation("lemma21_value: b must be >= 0");
    if (b % 2 != 0) throw OddIndexError("lemma21_value: b must be even");
    const BigInt x = b;
    BigInt v;
    if (b % 4 == 0)
        v = 1 - 11 * x + 15 * x * x + x * x * x - x * x * x * x;
    else
        v = 289 - 91 * x - 17 * x * x - 7 * x * x * x + x * x * x * x;
    return reduce_signed(v, 10);
}

// E_b mod 2^7 as a quadratic in b, split on b mod 4.
inline Residue eq24_value(long long b) {
    if (b < 0) throw RangeViolation("eq24_value: b must be >= 0");
    if (b % 2 != 0) throw OddIndexError("eq24_value: b must be even");
    const BigInt x = b;
    BigInt v;
    if (b % 4 == 0)
        v = 3 * x * x - 11 * x + 1;
    else
        v = x * x - 23 * x + 41;
    return reduce_signed(v, 7);
}

namespace detail {

// Rule formula evaluation without the guard check. Exists so tests can
// record (not assert) what each formula does just below its stated
// hypothesis bound; everything user-facing goes through the guarded
// wrapper below.
inline Residue predicted_residue_unguarded(RuleId id, const CongruenceQuery& q) {
    validate(q);
    if (rule_kind(id) == RuleKind::value)
        return id == RuleId::EQ24 ? eq24_value(q.b) : lemma21_value(q.b);

    const unsigned kx = rule_modulus_exp(id, q.m);
    const BigInt b = q.b;
    const BigInt k = q.k;
    const BigInt m2k = pow2(static_cast<unsigned>(q.m)) * k;
    // sign of (-1)^{b/2} for even b
    const int s = (q.b % 4 == 0) ? 1 : -1;

    BigInt v;
    switch (id) {
        case RuleId::STERN11:
        case RuleId::SUN12:
            v = m2k;
            break;
        case RuleId::SUN13:
            v = 5 * m2k;
            break;
        case RuleId::SUN14:
            v = ((q.b % 8 == 0 || q.b % 8 == 6) ? 5 : -3) * m2k;
            break;
        case RuleId::EQ16:
            v = m2k * (7 * (b + 1) * (b + 1) - 18);
            break;
        case RuleId::THM21:
            if (q.m == 1 && q.k % 2 == 0)
                v = 2 * k * (-(b - 7) * (b - 7) + 38 + 2 * k * (3 * b - 1 + 2 * k));
            else if (q.m == 1)
                v = 2 * k * (-(b + 1) * (b + 1) + 6 + 2 * k * (3 * b - 1 + 2 * k))
                    - 16 * (b + s);
            else if (q.m == 2)
                v = 4 * k * (7 * (b + 1) * (b + 1) - 18 + 12 * k * (b + 1 + 4 * (s - k)));
            else
                v = m2k * (7 * (b + 1) * (b + 1) - 18 + m2k * (7 - b));
            break;
        case RuleId::COR22:
            v = -m2k * ((b + 1) * (b + 1) + 10 + m2k * (b + 1));
            break;
        case RuleId::COR23: {
            int c = 0;
            switch (q.b % 16) {
                case 0: case 14: c = -11; break;
                case 2: case 12: c = 13;  break;
                case 4: case 10: c = -3;  break;
                case 6: case 8:  c = 5;   break;
            }
            v = c * m2k;
            break;
        }
        default:
            throw std::logic_error("predicted_residue: unhandled rule");
    }
    return reduce_signed(v, kx);
}

}  // namespace detail

// Predicted residue of E_{2^m k + b} - E_b (delta rules) or of E_b
// itself (value rules) at the rule's own modulus.
inline Residue predicted_residue(RuleId id, const CongruenceQuery& q) {
    validate(q);
    if (!rule_guard(id, q)) {
        std::ostringstream os;
        os << rule_name(id) << " requires m >= " << rule_min_m(id)
           << ", got m = " << q.m;
        throw GuardViolation(os.str());
    }
    return detail::predicted_residue_unguarded(id, q);
}

// E_{2^m k + b} mod 2^{m+7} in closed form, for base index b in {0, 2}.
inline Residue corollary21_value(int b, long long m, long long k) {
    if (b != 0 && b != 2)
        throw RangeViolation("corollary21_value: b must be 0 or 2");
    if (m < 2) throw GuardViolation("corollary21_value requires m >= 2");
    if (m > 57) throw RangeViolation("corollary21_value: m must be <= 57");
    if (k < 1) throw RangeViolation("corollary21_value: k must be >= 1");
    const unsigned kx = static_cast<unsigned>(m + 7);
    const BigInt kk = k;
    const BigInt m2k = pow2(static_cast<unsigned>(m)) * kk;
    BigInt v;
    if (b == 0 && m == 2)
        v = 4 * kk * (-48 * kk * kk + 60 * kk - 11) + 1;
    else if (b == 0)
        v = m2k * (-11 + 7 * m2k) + 1;
    else if (m == 2)
        v = 4 * kk * (-48 * kk * kk - 12 * kk + 45) - 1;
    else
        v = m2k * (45 + 5 * m2k) - 1;
    return reduce_signed(v, kx);
}

namespace detail {

inline CheckReport make_rule_report(RuleId id, const CongruenceQuery& q,
                                    Residue lhs, Residue rhs) {
    CheckReport rep;
    rep.id_key = "rule";
    rep.id = std::string(rule_name(id));
    if (rule_kind(id) == RuleKind::delta)
        rep.params = {{"m", q.m}, {"k", q.k}, {"b", q.b}};
    else
        rep.params = {{"b", q.b}};
    rep.modulus_exp = lhs.k_exp();
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace detail

// Evaluate one rule at one point against table residues. oracle_k_exp
// picks the table width to read (0 means the rule's own modulus); it
// must not be narrower than the rule needs. The const overload only
// does lookups and is safe to fan out across threads once the table
// covers the grid.
inline CheckReport check_rule(RuleId id, const CongruenceQuery& q,
                              const EulerTable& table, unsigned oracle_k_exp = 0) {
    validate(q);
    if (!rule_guard(id, q)) {
        std::ostringstream os;
        os << rule_name(id) << " requires m >= " << rule_min_m(id)
           << ", got m = " << q.m;
        throw GuardViolation(os.str());
    }
    const unsigned kx = rule_kind(id) == RuleKind::value
                            ? rule_modulus_exp(id, 1)
                            : rule_modulus_exp(id, q.m);
    if (oracle_k_exp == 0) oracle_k_exp = kx;
    if (oracle_k_exp < kx)
        throw BadModulus("check_rule: oracle modulus narrower than the rule modulus");

    Residue pred = predicted_residue(id, q);
    Residue act;
    if (rule_kind(id) == RuleKind::delta) {
        const std::uint64_t idx = shifted_index(q);
        const Residue top = table.mod_lookup(idx, oracle_k_exp);
        const Residue base = table.mod_lookup(q.b, oracle_k_exp);
        act = reduce_signed(top.value() - base.value(), kx);
    } else {
        act = table.mod_lookup(q.b, oracle_k_exp).truncated(kx);
    }
    return detail::make_rule_report(id, q, std::move(pred), std::move(act));
}

inline CheckReport check_rule(RuleId id, const CongruenceQuery& q,
                              EulerTable& table, unsigned oracle_k_exp = 0) {
    validate(q);
    const unsigned kx = rule_kind(id) == RuleKind::value
                            ? rule_modulus_exp(id, 1)
                            : rule_modulus_exp(id, q.m);
    if (oracle_k_exp == 0) oracle_k_exp = kx;
    if (rule_kind(id) == RuleKind::delta)
        table.mod(shifted_index(q), oracle_k_exp);
    else
        table.mod(q.b, oracle_k_exp);
    return check_rule(id, q, static_cast<const EulerTable&>(table), oracle_k_exp);
}

// E_{2^m k + b} mod 2^{m+7} closed form against the table.
inline CheckReport check_corollary21(int b, long long m, long long k,
                                     const EulerTable& table, unsigned oracle_k_exp = 0) {
    Residue pred = corollary21_value(b, m, k);
    const unsigned kx = pred.k_exp();
    if (oracle_k_exp == 0) oracle_k_exp = kx;
    if (oracle_k_exp < kx)
        throw BadModulus("check_corollary21: oracle modulus narrower than needed");
    const std::uint64_t idx = shifted_index(m, k, b);
    Residue act = table.mod_lookup(idx, oracle_k_exp).truncated(kx);

    CheckReport rep;
    rep.id_key = "rule";
    rep.id = "COR21";
    rep.params = {{"m", m}, {"k", k}, {"b", b}};
    rep.modulus_exp = kx;
    rep.lhs = std::move(pred);
    rep.rhs = std::move(act);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

inline CheckReport check_corollary21(int b, long long m, long long k,
                                     EulerTable& table, unsigned oracle_k_exp = 0) {
    Residue pred = corollary21_value(b, m, k);  // validates parameters
    if (oracle_k_exp == 0) oracle_k_exp = pred.k_exp();
    table.mod(shifted_index(m, k, b), oracle_k_exp);
    return check_corollary21(b, m, k, static_cast<const EulerTable&>(table), oracle_k_exp);
}

// E_b mod 2^10 as a ratio of polynomials with odd denominator, checked
// by clearing the denominator through its inverse mod 2^10.
inline CheckReport lemma21_rational_check(long long b, const EulerTable& table) {
    if (b < 0) throw RangeViolation("lemma21_rational_check: b must be >= 0");
    if (b % 2 != 0) throw OddIndexError("lemma21_rational_check: b must be even");
    const BigInt x = b;
    BigInt num, den;
    if (b % 4 == 0) {
        num = 1 + 172 * x - 24 * x * x;
        den = 1 - 329 * x - 74 * x * x - 24 * x * x * x;
    } else {
        const BigInt c = x - 2;
        num = -7 - 308 * c + 40 * c * c;
        den = 7 + 111 * c + 102 * c * c - 24 * c * c * c;
    }
    Residue pred = reduce_signed(num * inverse_mod2k(den, 10), 10);
    Residue act = table.mod_lookup(static_cast<std::uint64_t>(b), 10);

    CheckReport rep;
    rep.id_key = "rule";
    rep.id = "LEMMA21_RATIONAL";
    rep.params = {{"b", b}};
    rep.modulus_exp = 10;
    rep.lhs = std::move(pred);
    rep.rhs = std::move(act);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

inline CheckReport lemma21_rational_check(long long b, EulerTable& table) {
    if (b < 0) throw RangeViolation("lemma21_rational_check: b must be >= 0");
    if (b % 2 != 0) throw OddIndexError("lemma21_rational_check: b must be even");
    table.mod(static_cast<std::uint64_t>(b), 10);
    return lemma21_rational_check(b, static_cast<const EulerTable&>(table));
}

// Delta rules whose hypotheses hold at the query, in declaration order.
inline std::vector<RuleId> applicable_rules(const CongruenceQuery& q) {
    validate(q);
    std::vector<RuleId> out;
    for (RuleId id : kDeltaRules)
        if (rule_guard(id, q)) out.push_back(id);
    return out;
}

// --- grid sweeps ------------------------------------------------------------

struct RuleGrid {
    long long m_lo = 1, m_hi = 1;
    long long k_lo = 1, k_hi = 1;
    long long b_lo = 0, b_hi = 0;
};

inline void validate(const RuleGrid& g) {
    if (g.m_lo < 1 || g.m_lo > g.m_hi || g.m_hi > 57)
        throw RangeViolation("grid: need 1 <= m_lo <= m_hi <= 57");
    if (g.k_lo < 1 || g.k_lo > g.k_hi)
        throw RangeViolation("grid: need 1 <= k_lo <= k_hi");
    if (g.b_lo < 0 || g.b_lo > g.b_hi)
        throw RangeViolation("grid: need 0 <= b_lo <= b_hi");
    if (g.b_lo % 2 != 0 || g.b_hi % 2 != 0)
        throw OddIndexError("grid: b bounds must be even");
}

namespace detail {

inline std::string grid_region(const RuleGrid& g, bool with_mk) {
    std::ostringstream os;
    if (with_mk)
        os << "m=" << g.m_lo << ":" << g.m_hi << " k=" << g.k_lo << ":" << g.k_hi << " ";
    os << "b=" << g.b_lo << ":" << g.b_hi;
    return os.str();
}

inline SweepReport aggregate(std::vector<CheckReport> results, std::uint64_t skipped,
                             std::string region,
                             std::chrono::steady_clock::time_point t0,
                             const std::function<void(const CheckReport&)>& sink) {
    SweepReport out;
    out.region = std::move(region);
    out.guard_skipped = skipped;
    for (auto& r : results) {
        ++out.checked;
        if (r.pass) {
            ++out.passed;
        } else {
            ++out.failed;
            if (!out.first_failure) out.first_failure = r;
        }
        if (sink) sink(r);
    }
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

}  // namespace detail

// Every in-guard grid point of one rule, checked against a single
// covering table. Reports reach the sink in (m, k, b) order regardless
// of parallelism.
inline SweepReport sweep_rule(RuleId id, const RuleGrid& g, EulerTable& table,
                              unsigned parallelism = 1,
                              const std::function<void(const CheckReport&)>& sink = {}) {
    validate(g);
    const auto t0 = std::chrono::steady_clock::now();
    const bool value_kind = rule_kind(id) == RuleKind::value;

    std::vector<CongruenceQuery> jobs;
    std::uint64_t skipped = 0;
    if (value_kind) {
        for (long long b = g.b_lo; b <= g.b_hi; b += 2) jobs.push_back({1, 1, b});
    } else {
        for (long long m = g.m_lo; m <= g.m_hi; ++m)
            for (long long k = g.k_lo; k <= g.k_hi; ++k)
                for (long long b = g.b_lo; b <= g.b_hi; b += 2) {
                    const CongruenceQuery q{m, k, b};
                    if (rule_guard(id, q))
                        jobs.push_back(q);
                    else
                        ++skipped;
                }
    }

    unsigned oracle_k = rule_modulus_exp(id, value_kind ? 1 : g.m_hi);
    if (!jobs.empty()) {
        const std::uint64_t n_need =
            value_kind ? static_cast<std::uint64_t>(g.b_hi)
                       : shifted_index(g.m_hi, g.k_hi, g.b_hi);
        table.build_mod(n_need, oracle_k);
    }

    std::vector<CheckReport> results(jobs.size());
    const EulerTable& ct = table;
    parallel_for(jobs.size(), parallelism, [&](std::uint64_t i) {
        results[i] = check_rule(id, jobs[i], ct, oracle_k);
    });
    return detail::aggregate(std::move(results), skipped,
                             detail::grid_region(g, !value_kind), t0, sink);
}

// Rational closed form of E_b mod 2^10 over a b range.
inline SweepReport sweep_lemma21_rational(const RuleGrid& g, EulerTable& table,
                                          unsigned parallelism = 1,
                                          const std::function<void(const CheckReport&)>& sink = {}) {
    validate(g);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<long long> jobs;
    for (long long b = g.b_lo; b <= g.b_hi; b += 2) jobs.push_back(b);
    if (!jobs.empty()) table.build_mod(static_cast<std::uint64_t>(g.b_hi), 10);

    std::vector<CheckReport> results(jobs.size());
    const EulerTable& ct = table;
    parallel_for(jobs.size(), parallelism, [&](std::uint64_t i) {
        results[i] = lemma21_rational_check(jobs[i], ct);
    });
    return detail::aggregate(std::move(results), 0,
                             detail::grid_region(g, false), t0, sink);
}

// Closed-form values at base indices 0 and 2 over an (m, k) grid.
// The b bounds of the grid must stay within {0, 2}.
inline SweepReport sweep_corollary21(const RuleGrid& g, EulerTable& table,
                                     unsigned parallelism = 1,
                                     const std::function<void(const CheckReport&)>& sink = {}) {
    validate(g);
    if (g.b_hi > 2)
        throw RangeViolation("sweep_corollary21: base index is 0 or 2 only");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<CongruenceQuery> jobs;
    std::uint64_t skipped = 0;
    for (long long m = g.m_lo; m <= g.m_hi; ++m)
        for (long long k = g.k_lo; k <= g.k_hi; ++k)
            for (long long b = g.b_lo; b <= g.b_hi; b += 2) {
                if (m >= 2)
                    jobs.push_back({m, k, b});
                else
                    ++skipped;
            }

    const unsigned oracle_k = static_cast<unsigned>(g.m_hi + 7);
    if (!jobs.empty())
        table.build_mod(shifted_index(g.m_hi, g.k_hi, 2), oracle_k);

    std::vector<CheckReport> results(jobs.size());
    const EulerTable& ct = table;
    parallel_for(jobs.size(), parallelism, [&](std::uint64_t i) {
        results[i] = check_corollary21(static_cast<int>(jobs[i].b), jobs[i].m,
                                       jobs[i].k, ct, oracle_k);
    });
    return detail::aggregate(std::move(results), skipped,
                             detail::grid_region(g, true), t0, sink);
}

}  // namespace eulercong
