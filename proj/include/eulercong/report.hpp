#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "residue.hpp"

namespace eulercong {

// Canonical value, plus its negative alias. "360 (= -664 mod 1024)"
// reads better against formulas stated with signed arithmetic.
inline std::string describe(const Residue& r) {
    std::ostringstream os;
    os << r.value();
    if (r.value() != 0)
        os << " (= " << r.value() - r.modulus() << " mod " << r.modulus() << ")";
    else
        os << " (mod " << r.modulus() << ")";
    return os.str();
}

// One evaluated congruence, ready for any of the output formats.
// id_key is "rule", "step" or "conjecture" depending on the family;
// params are emitted in the order given.
struct CheckReport {
    std::string id_key = "rule";
    std::string id;
    std::vector<std::pair<std::string, long long>> params;
    unsigned modulus_exp = 1;
    std::string lhs_key = "predicted";
    std::string rhs_key = "actual";
    Residue lhs;
    Residue rhs;
    bool pass = false;
};

inline std::string to_json(const CheckReport& r) {
    std::ostringstream os;
    os << "{\"" << r.id_key << "\":\"" << r.id << "\"";
    for (const auto& [key, val] : r.params) os << ",\"" << key << "\":" << val;
    os << ",\"modulus_exp\":" << r.modulus_exp
       << ",\"" << r.lhs_key << "\":\"" << r.lhs.value() << "\""
       << ",\"" << r.rhs_key << "\":\"" << r.rhs.value() << "\""
       << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
    return os.str();
}

inline std::string csv_header(const CheckReport& r) {
    std::ostringstream os;
    os << r.id_key;
    for (const auto& [key, val] : r.params) os << "," << key;
    os << ",modulus_exp," << r.lhs_key << "," << r.rhs_key << ",pass";
    return os.str();
}

inline std::string to_csv(const CheckReport& r) {
    std::ostringstream os;
    os << r.id;
    for (const auto& [key, val] : r.params) os << "," << val;
    os << "," << r.modulus_exp << "," << r.lhs.value() << "," << r.rhs.value()
       << "," << (r.pass ? "true" : "false");
    return os.str();
}

inline std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    os << r.id;
    for (const auto& [key, val] : r.params) os << " " << key << "=" << val;
    os << " mod 2^" << r.modulus_exp << ": " << r.lhs_key << " " << describe(r.lhs)
       << ", " << r.rhs_key << " " << describe(r.rhs)
       << (r.pass ? "  PASS" : "  FAIL");
    return os.str();
}

// Aggregate over a grid of checks. guard_skipped counts points whose
// hypotheses failed; they are neither passes nor failures.
struct SweepReport {
    std::string region;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t guard_skipped = 0;
    std::optional<CheckReport> first_failure;
    std::chrono::duration<double> elapsed{0};
};

}  // namespace eulercong
