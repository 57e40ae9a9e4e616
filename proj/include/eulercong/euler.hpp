#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "residue.hpp"

namespace eulercong {

// Largest even index a single residue table may cover. Keeps a typo'd
// sweep bound from silently allocating gigabytes.
inline constexpr std::uint64_t kMaxTableIndex = std::uint64_t{1} << 24;

// Default width for tables grown on demand.
inline constexpr unsigned kDefaultTableExp = 32;

struct PascalRow {
    std::uint64_t n = 0;
    unsigned k_exp = 1;
    std::vector<BigInt> entries;  // canonical residues, size n + 1
};

namespace detail {

// One row step of Pascal's triangle in place, C(n, .) -> C(n+1, .).
// Purely additive; entries stay canonical under the mask.
template <class Word, class Mask>
void pascal_extend(std::vector<Word>& row, const Mask& mask) {
    row.push_back(row.back());
    for (std::size_t i = row.size() - 2; i >= 1; --i)
        row[i] = (row[i] + row[i - 1]) & mask;
}

// Residues of E_0, E_2, ..., E_{2*jmax} mod 2^k_exp in machine words.
// Products wrap mod 2^64, which agrees with mod 2^k for k <= 64, so the
// final mask recovers the exact residue. Valid for k_exp <= 63 (the
// mask shift needs one spare bit).
inline std::vector<BigInt> build_mod_words(std::uint64_t jmax, unsigned k_exp) {
    const std::uint64_t mask = (std::uint64_t{1} << k_exp) - 1;
    std::vector<std::uint64_t> row{1};
    std::vector<std::uint64_t> res{1};
    row.reserve(2 * jmax + 1);
    res.reserve(jmax + 1);
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        pascal_extend(row, mask);
        pascal_extend(row, mask);
        std::uint64_t acc = 0;
        for (std::uint64_t r = 0; r < j; ++r) acc += row[2 * r] * res[r];
        res.push_back((0 - acc) & mask);
    }
    return std::vector<BigInt>(res.begin(), res.end());
}

// Same recurrence over cpp_int, for k_exp beyond the word path.
inline std::vector<BigInt> build_mod_wide(std::uint64_t jmax, unsigned k_exp) {
    const BigInt mask = pow2(k_exp) - 1;
    std::vector<BigInt> row{BigInt(1)};
    std::vector<BigInt> res{BigInt(1)};
    row.reserve(2 * jmax + 1);
    res.reserve(jmax + 1);
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        pascal_extend(row, mask);
        pascal_extend(row, mask);
        BigInt acc = 0;
        for (std::uint64_t r = 0; r < j; ++r) acc += row[2 * r] * res[r];
        // negate the masked sum without touching cpp_int sign handling
        res.push_back((mask + 1 - (acc & mask)) & mask);
    }
    return res;
}

}  // namespace detail

inline PascalRow pascal_row_mod(std::uint64_t n, unsigned k_exp) {
    if (k_exp < 1) throw BadModulus("pascal_row_mod: modulus exponent must be >= 1");
    const BigInt mask = pow2(k_exp) - 1;
    std::vector<BigInt> row{BigInt(1)};
    row.reserve(n + 1);
    for (std::uint64_t i = 0; i < n; ++i) detail::pascal_extend(row, mask);
    return PascalRow{n, k_exp, std::move(row)};
}

// Dense residue table: residues[j] = E_{2j} mod 2^k_exp for 2j <= n_max.
struct ModTable {
    std::uint64_t n_max = 0;
    unsigned k_exp = 1;
    std::vector<BigInt> residues;

    bool covers(std::uint64_t n, unsigned k) const {
        return k >= 1 && k <= k_exp && n <= n_max;
    }

    // Caller must ensure covers(n, k) and n even.
    Residue at(std::uint64_t n, unsigned k) const {
        return Residue(mod_pow2(residues[n / 2], k), k);
    }
};

inline ModTable build_mod_table(std::uint64_t n_max, unsigned k_exp) {
    if (k_exp < 1) throw BadModulus("build_mod_table: modulus exponent must be >= 1");
    if (n_max > kMaxTableIndex)
        throw RangeViolation("build_mod_table: table bound exceeds supported size");
    const std::uint64_t jmax = n_max / 2;
    auto residues = k_exp <= 63 ? detail::build_mod_words(jmax, k_exp)
                                : detail::build_mod_wide(jmax, k_exp);
    return ModTable{n_max, k_exp, std::move(residues)};
}

// Exact and modular Euler numbers behind one interface.
//
// The exact side memoizes E_0, E_2, ... and extends with the defining
// recurrence, building each row of even binomials multiplicatively; the
// modular side keeps dense tables per (n_max, k_exp) built additively.
// The two routes share no arithmetic, which is what makes comparing
// them a meaningful test.
//
// Concurrency: const lookups (exact_ref on materialized values,
// mod_lookup, covers) are safe from many threads. Anything that can
// grow state (exact, mod, build_mod, adopt) needs external
// serialization. Sweeps prebuild one covering table, then fan out
// const lookups.
class EulerTable {
public:
    // Exact E_n. Odd indices are zero by definition.
    const BigInt& exact(std::uint64_t n) {
        if (n % 2 == 1) return zero_;
        ensure_exact(n / 2);
        return exact_even_[n / 2];
    }

    // Lookup-only variant; throws if E_n was never materialized.
    const BigInt& exact_ref(std::uint64_t n) const {
        if (n % 2 == 1) return zero_;
        if (n / 2 >= exact_even_.size())
            throw std::logic_error("EulerTable::exact_ref: value not materialized");
        return exact_even_[n / 2];
    }

    // E_n mod 2^k_exp, building a covering table on demand. Growth is
    // geometric in n (next power of two, floor 128) and jumps straight
    // to kDefaultTableExp bits so nearby queries land in one table.
    Residue mod(std::uint64_t n, unsigned k_exp) {
        if (k_exp < 1) throw BadModulus("EulerTable::mod: modulus exponent must be >= 1");
        if (n % 2 == 1) return Residue(BigInt(0), k_exp);
        if (const ModTable* t = find_covering(n, k_exp)) return t->at(n, k_exp);
        if (n > kMaxTableIndex)
            throw RangeViolation("EulerTable::mod: index exceeds supported table size");
        std::uint64_t n_build = std::bit_ceil(std::max<std::uint64_t>(n, 128));
        return build_mod(n_build, std::max(k_exp, kDefaultTableExp)).at(n, k_exp);
    }

    // Lookup-only variant, safe for concurrent use once covered.
    Residue mod_lookup(std::uint64_t n, unsigned k_exp) const {
        if (k_exp < 1) throw BadModulus("EulerTable::mod_lookup: modulus exponent must be >= 1");
        if (n % 2 == 1) return Residue(BigInt(0), k_exp);
        if (const ModTable* t = find_covering(n, k_exp)) return t->at(n, k_exp);
        throw std::logic_error("EulerTable::mod_lookup: no covering table; build_mod first");
    }

    bool mod_covered(std::uint64_t n, unsigned k_exp) const {
        return find_covering(n, k_exp) != nullptr;
    }

    const ModTable& build_mod(std::uint64_t n_max, unsigned k_exp) {
        if (k_exp < 1) throw BadModulus("EulerTable::build_mod: modulus exponent must be >= 1");
        const auto key = std::make_pair(n_max, k_exp);
        if (auto it = tables_.find(key); it != tables_.end()) return it->second;
        if (const ModTable* t = find_covering(n_max, k_exp)) return *t;
        return tables_.emplace(key, build_mod_table(n_max, k_exp)).first->second;
    }

    // Take ownership of an externally built table (cache loads).
    const ModTable& adopt(ModTable table) {
        if (table.residues.size() != table.n_max / 2 + 1)
            throw CacheFormatError("adopt: entry count does not match table bound");
        const auto key = std::make_pair(table.n_max, table.k_exp);
        auto [it, inserted] = tables_.emplace(key, std::move(table));
        return it->second;
    }

    std::size_t table_count() const { return tables_.size(); }

    const std::map<std::pair<std::uint64_t, unsigned>, ModTable>& tables() const {
        return tables_;
    }

private:
    const ModTable* find_covering(std::uint64_t n, unsigned k_exp) const {
        for (const auto& [key, t] : tables_)
            if (t.covers(n, k_exp)) return &t;
        return nullptr;
    }

    void ensure_exact(std::uint64_t jmax) {
        if (exact_even_.empty()) exact_even_.push_back(BigInt(1));
        for (std::uint64_t j = exact_even_.size(); j <= jmax; ++j) {
            // march C(2j, 2r) across the row; product-then-divide keeps
            // every intermediate an integer
            BigInt c = 1, sum = 0;
            for (std::uint64_t r = 0; r < j; ++r) {
                if (r > 0) {
                    c *= BigInt(2 * j - 2 * r + 2) * BigInt(2 * j - 2 * r + 1);
                    c = exact_div(c, BigInt(2 * r - 1) * BigInt(2 * r));
                }
                sum += c * exact_even_[r];
            }
            exact_even_.push_back(BigInt(-sum));
        }
    }

    std::deque<BigInt> exact_even_;  // deque keeps references stable across growth
    std::map<std::pair<std::uint64_t, unsigned>, ModTable> tables_;
    inline static const BigInt zero_{0};
};

// --- cache file round trip ------------------------------------------------
//
// Line format, all decimal:
//   eulercache v1 N=<n_max> K=<k_exp>
//   n=0 r=1
//   n=2 r=<residue>
//   ...
// Exactly one line per even index through n_max, in order.

inline void save_cache(const std::filesystem::path& path, const ModTable& table) {
    std::ofstream out(path);
    if (!out) throw CacheFormatError("cannot open cache file for writing: " + path.string());
    out << "eulercache v1 N=" << table.n_max << " K=" << table.k_exp << "\n";
    for (std::uint64_t j = 0; j < table.residues.size(); ++j)
        out << "n=" << 2 * j << " r=" << table.residues[j] << "\n";
    out.flush();
    if (!out) throw CacheFormatError("write failed: " + path.string());
}

inline ModTable load_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheFormatError("cannot open cache file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw CacheFormatError("cache file is empty");

    std::uint64_t n_max = 0;
    unsigned k_exp = 0;
    {
        std::istringstream hdr(line);
        std::string magic, version, ntok, ktok, extra;
        hdr >> magic >> version >> ntok >> ktok;
        if (magic != "eulercache" || version != "v1" ||
            !ntok.starts_with("N=") || !ktok.starts_with("K=") || (hdr >> extra))
            throw CacheFormatError("bad cache header: " + line);
        try {
            n_max = std::stoull(ntok.substr(2));
            k_exp = static_cast<unsigned>(std::stoul(ktok.substr(2)));
        } catch (const std::exception&) {
            throw CacheFormatError("bad cache header numbers: " + line);
        }
    }
    if (k_exp < 1) throw CacheFormatError("cache header has modulus exponent < 1");
    if (n_max % 2 != 0) throw CacheFormatError("cache header bound must be even");
    if (n_max > kMaxTableIndex) throw CacheFormatError("cache table bound exceeds supported size");

    const BigInt modulus = pow2(k_exp);
    std::vector<BigInt> residues;
    residues.reserve(n_max / 2 + 1);
    std::uint64_t expect_n = 0;
    while (std::getline(in, line)) {
        if (line.empty() && residues.size() == n_max / 2 + 1) continue;
        std::istringstream row(line);
        std::string ntok, rtok, extra;
        row >> ntok >> rtok;
        if (!ntok.starts_with("n=") || !rtok.starts_with("r=") || (row >> extra))
            throw CacheFormatError("bad cache line: " + line);
        BigInt r;
        std::uint64_t n = 0;
        try {
            n = std::stoull(ntok.substr(2));
            r = BigInt(rtok.substr(2));
        } catch (const std::exception&) {
            throw CacheFormatError("bad cache line numbers: " + line);
        }
        if (n != expect_n) throw CacheFormatError("cache lines out of order at n=" + ntok.substr(2));
        if (r < 0 || r >= modulus) throw CacheFormatError("cache residue out of range at n=" + ntok.substr(2));
        residues.push_back(std::move(r));
        expect_n += 2;
    }
    if (residues.size() != n_max / 2 + 1)
        throw CacheFormatError("cache entry count does not match header bound");
    if (residues[0] != 1) throw CacheFormatError("cache must start with n=0 r=1");
    return ModTable{n_max, k_exp, std::move(residues)};
}

}  // namespace eulercong
