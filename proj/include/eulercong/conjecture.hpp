#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "euler.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "rules.hpp"

namespace eulercong {

// One point of the reflection symmetry: does E_{2^m k + b} - E_b agree
// with the same delta at the reflected base b' = 2^{m+n-1} - 2 - b,
// mod 2^{m+n}?
struct ConjectureQuery {
    long long m = 1;
    long long n = 1;
    long long k = 1;
    long long b = 0;
};

inline void validate(const ConjectureQuery& q) {
    if (q.n < 1) throw RangeViolation("conjecture: n must be >= 1");
    if (q.m < q.n) throw RangeViolation("conjecture: m must be >= n");
    if (q.m > 57 || q.m + q.n > 40)
        throw RangeViolation("conjecture: m + n too large for a desk-scale sweep");
    if (q.k < 1) throw RangeViolation("conjecture: k must be >= 1");
    if (q.b % 2 != 0) throw OddIndexError("conjecture: b must be even");
    const long long top = (1ll << (q.m + q.n - 1)) - 2;
    if (q.b < 0 || q.b > top)
        throw RangeViolation("conjecture: b must lie in [0, 2^{m+n-1} - 2]");
}

inline long long reflected_index(const ConjectureQuery& q) {
    return (1ll << (q.m + q.n - 1)) - 2 - q.b;
}

// Lookup-only evaluation; the table must already cover index
// 2^m k + max(b, b') at width m + n.
inline CheckReport conjecture_report(const ConjectureQuery& q, const EulerTable& table) {
    validate(q);
    const unsigned kx = static_cast<unsigned>(q.m + q.n);
    const long long br = reflected_index(q);
    const std::uint64_t idx = shifted_index(q.m, q.k, q.b);
    const std::uint64_t idxr = shifted_index(q.m, q.k, br);

    const BigInt delta = table.mod_lookup(idx, kx).value()
                         - table.mod_lookup(static_cast<std::uint64_t>(q.b), kx).value();
    const BigInt delta_r = table.mod_lookup(idxr, kx).value()
                           - table.mod_lookup(static_cast<std::uint64_t>(br), kx).value();

    CheckReport rep;
    rep.id_key = "conjecture";
    rep.id = "CONJ21";
    rep.params = {{"m", q.m}, {"n", q.n}, {"k", q.k}, {"b", q.b}, {"b_reflected", br}};
    rep.modulus_exp = kx;
    rep.lhs_key = "delta_b";
    rep.rhs_key = "delta_reflected";
    rep.lhs = reduce_signed(delta, kx);
    rep.rhs = reduce_signed(delta_r, kx);
    rep.pass = (rep.lhs == rep.rhs);
    return rep;
}

inline CheckReport conjecture_report(const ConjectureQuery& q, EulerTable& table) {
    validate(q);
    const unsigned kx = static_cast<unsigned>(q.m + q.n);
    table.mod(shifted_index(q.m, q.k, std::max(q.b, reflected_index(q))), kx);
    return conjecture_report(q, static_cast<const EulerTable&>(table));
}

inline bool conjecture_check(const ConjectureQuery& q, EulerTable& table) {
    return conjecture_report(q, table).pass;
}

struct ConjectureRegion {
    long long m_max = 1;
    long long n_max = 1;
    long long k_max = 1;
};

inline void validate(const ConjectureRegion& rg) {
    if (rg.n_max < 1) throw RangeViolation("region: n_max must be >= 1");
    if (rg.m_max < rg.n_max) throw RangeViolation("region: m_max must be >= n_max");
    if (rg.m_max > 57 || rg.m_max + rg.n_max > 40)
        throw RangeViolation("region: m_max + n_max too large for a desk-scale sweep");
    if (rg.k_max < 1) throw RangeViolation("region: k_max must be >= 1");
}

struct ConjectureSweepOptions {
    bool continue_after_failure = false;
    unsigned parallelism = 1;
    std::function<void(const CheckReport&)> on_failure;  // called in (m,n,k,b) order
};

// Exhaustive sweep over 1 <= n <= min(m, n_max), m <= m_max, k <= k_max
// and the full even b range, checking only b <= b' since the statement
// is symmetric under reflection. Work is striped by m; stripes merge in
// m order, so reports and counts are independent of parallelism. In
// first-failure mode counting stops at the end of the first failing
// stripe prefix, matching a sequential scan.
inline SweepReport conjecture_sweep(const ConjectureRegion& rg, EulerTable& table,
                                    const ConjectureSweepOptions& opt = {}) {
    validate(rg);
    const auto t0 = std::chrono::steady_clock::now();

    const unsigned kx = static_cast<unsigned>(rg.m_max + rg.n_max);
    const std::uint64_t top_index =
        shifted_index(rg.m_max, rg.k_max, (1ll << (rg.m_max + rg.n_max - 1)) - 2);
    table.build_mod(top_index, kx);
    const EulerTable& ct = table;

    struct Stripe {
        std::uint64_t checked = 0;
        std::uint64_t passed = 0;
        std::vector<CheckReport> failures;
    };
    std::vector<Stripe> stripes(static_cast<std::size_t>(rg.m_max));

    parallel_for(static_cast<std::uint64_t>(rg.m_max), opt.parallelism,
                 [&](std::uint64_t mi) {
        Stripe& s = stripes[mi];
        const long long m = static_cast<long long>(mi) + 1;
        for (long long n = 1; n <= std::min(m, rg.n_max); ++n)
            for (long long k = 1; k <= rg.k_max; ++k) {
                const long long top = (1ll << (m + n - 1)) - 2;
                for (long long b = 0; b <= top - b; b += 2) {
                    CheckReport rep = conjecture_report({m, n, k, b}, ct);
                    ++s.checked;
                    if (rep.pass) {
                        ++s.passed;
                    } else {
                        s.failures.push_back(std::move(rep));
                        if (!opt.continue_after_failure) return;
                    }
                }
            }
    });

    SweepReport out;
    {
        std::ostringstream os;
        os << "m<=" << rg.m_max << " n<=" << rg.n_max << " k<=" << rg.k_max;
        out.region = os.str();
    }
    for (const Stripe& s : stripes) {
        out.checked += s.checked;
        out.passed += s.passed;
        out.failed += s.failures.size();
        for (const CheckReport& f : s.failures) {
            if (!out.first_failure) out.first_failure = f;
            if (opt.on_failure) opt.on_failure(f);
        }
        if (!opt.continue_after_failure && !s.failures.empty()) break;
    }
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

}  // namespace eulercong
