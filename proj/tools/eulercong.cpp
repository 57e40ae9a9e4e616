// Command-line front end: exact/modular Euler numbers, congruence rule
// verification, proof-identity checks, conjecture sweeps, and residue
// cache maintenance.
//
// Exit codes: 0 verified/success, 1 mathematical failure, 2 usage error.
// Stdout is deterministic in json/csv modes; wall-clock timing goes to
// stderr there and into the trailing summary line in text mode.

#include <CLI11.hpp>
#include <eulercong/eulercong.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace eulercong;

namespace {

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::text;
}

long long ms_of(std::chrono::duration<double> d) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

struct RangeLL {
    long long lo = 0;
    long long hi = 0;
};

RangeLL parse_range(const std::string& s, const std::string& flag) {
    try {
        const auto pos = s.find(':');
        if (pos == std::string::npos) {
            const long long v = std::stoll(s);
            return {v, v};
        }
        const long long lo = std::stoll(s.substr(0, pos));
        const long long hi = std::stoll(s.substr(pos + 1));
        if (lo > hi)
            throw RangeViolation(flag + ": lower bound exceeds upper bound in '" + s + "'");
        return {lo, hi};
    } catch (const RangeViolation&) {
        throw;
    } catch (const std::exception&) {
        throw RangeViolation(flag + ": expected INT or LO:HI, got '" + s + "'");
    }
}

void require_even_range(const RangeLL& r, const std::string& flag) {
    if (r.lo < 0)
        throw RangeViolation(flag + ": bounds must be >= 0");
    if (r.lo % 2 != 0 || r.hi % 2 != 0)
        throw OddIndexError(flag + ": b is even-only (step 2); odd bounds are not rounded");
}

// Buffered, in-order emission. CSV gets a header line whenever the
// column set changes (rule families differ in parameter columns).
class Emitter {
public:
    explicit Emitter(Format f) : fmt_(f) {}

    Format format() const { return fmt_; }

    void report(const CheckReport& r) {
        switch (fmt_) {
            case Format::json:
                std::cout << to_json(r) << "\n";
                break;
            case Format::csv: {
                const std::string h = csv_header(r);
                if (h != last_header_) {
                    std::cout << h << "\n";
                    last_header_ = h;
                }
                std::cout << to_csv(r) << "\n";
                break;
            }
            case Format::text:
                std::cout << to_text(r) << "\n";
                break;
        }
    }

    // For checks whose outcome is a bare boolean (integrality of F,
    // inversion round trip).
    void report_flag(const char* id,
                     std::initializer_list<std::pair<const char*, long long>> params,
                     bool pass) {
        switch (fmt_) {
            case Format::json: {
                std::cout << "{\"step\":\"" << id << "\"";
                for (const auto& [k, v] : params) std::cout << ",\"" << k << "\":" << v;
                std::cout << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
                break;
            }
            case Format::csv: {
                std::string h = "step";
                for (const auto& [k, v] : params) h += std::string(",") + k;
                h += ",pass";
                if (h != last_header_) {
                    std::cout << h << "\n";
                    last_header_ = h;
                }
                std::cout << id;
                for (const auto& [k, v] : params) std::cout << "," << v;
                std::cout << "," << (pass ? "true" : "false") << "\n";
                break;
            }
            case Format::text:
                std::cout << id;
                for (const auto& [k, v] : params) std::cout << " " << k << "=" << v;
                std::cout << (pass ? "  PASS" : "  FAIL") << "\n";
                break;
        }
    }

    void summary(const SweepReport& s) {
        switch (fmt_) {
            case Format::json:
                std::cout << "{\"summary\":{\"region\":\"" << s.region
                          << "\",\"checked\":" << s.checked
                          << ",\"passed\":" << s.passed
                          << ",\"failed\":" << s.failed
                          << ",\"guard_skipped\":" << s.guard_skipped << "}}\n";
                break;
            case Format::csv:
                std::cout << "# summary region=\"" << s.region
                          << "\" checked=" << s.checked << " passed=" << s.passed
                          << " failed=" << s.failed
                          << " guard_skipped=" << s.guard_skipped << "\n";
                break;
            case Format::text:
                std::cout << "summary: " << s.region << " checked=" << s.checked
                          << " passed=" << s.passed << " failed=" << s.failed
                          << " guard_skipped=" << s.guard_skipped
                          << " elapsed_ms=" << ms_of(s.elapsed) << "\n";
                break;
        }
        if (fmt_ != Format::text)
            std::cerr << "elapsed_ms=" << ms_of(s.elapsed) << "\n";
    }

private:
    Format fmt_;
    std::string last_header_;
};

EulerTable table_with_cache(const std::string& cache_path) {
    EulerTable t;
    std::error_code ec;
    if (!cache_path.empty() && std::filesystem::exists(cache_path, ec)) {
        try {
            t.adopt(load_cache(cache_path));
        } catch (const CacheFormatError& e) {
            std::cerr << "warning: ignoring cache file: " << e.what() << "\n";
        }
    }
    return t;
}

void merge_into(SweepReport& total, const SweepReport& part) {
    total.checked += part.checked;
    total.passed += part.passed;
    total.failed += part.failed;
    total.guard_skipped += part.guard_skipped;
    if (!total.first_failure && part.first_failure)
        total.first_failure = part.first_failure;
    total.elapsed += part.elapsed;
}

int cmd_compute_exact(std::uint64_t n, Emitter& em) {
    EulerTable t;
    const BigInt& v = t.exact(n);
    switch (em.format()) {
        case Format::json:
            std::cout << "{\"n\":" << n << ",\"value\":\"" << v << "\"}\n";
            break;
        case Format::csv:
            std::cout << "n,value\n" << n << "," << v << "\n";
            break;
        case Format::text:
            std::cout << v << "\n";
            break;
    }
    return 0;
}

int cmd_compute_mod(std::uint64_t n, unsigned k2, const std::string& cache_path,
                    Emitter& em) {
    EulerTable t = table_with_cache(cache_path);
    const Residue r = t.mod(n, k2);
    switch (em.format()) {
        case Format::json:
            std::cout << "{\"n\":" << n << ",\"modulus_exp\":" << k2
                      << ",\"residue\":\"" << r.value() << "\"}\n";
            break;
        case Format::csv:
            std::cout << "n,modulus_exp,residue\n"
                      << n << "," << k2 << "," << r.value() << "\n";
            break;
        case Format::text:
            std::cout << describe(r) << "\n";
            break;
    }
    return 0;
}

// What `verify` can sweep: the ten named rules, the rational form of
// the mod-2^10 polynomial, and the closed-form shifted values.
struct Selection {
    enum What { named_rule, cor21, rational } what = named_rule;
    RuleId id = RuleId::STERN11;
};

std::vector<Selection> parse_selection(const std::string& rule_s) {
    std::vector<Selection> sel;
    if (rule_s == "all") {
        for (RuleId id : kDeltaRules) sel.push_back({Selection::named_rule, id});
        sel.push_back({Selection::named_rule, RuleId::EQ24});
        sel.push_back({Selection::named_rule, RuleId::LEMMA21});
        sel.push_back({Selection::rational, {}});
        sel.push_back({Selection::cor21, {}});
        return sel;
    }
    if (rule_s == "COR21") return {{Selection::cor21, {}}};
    if (rule_s == "LEMMA21_RATIONAL") return {{Selection::rational, {}}};
    if (auto id = rule_from_name(rule_s)) return {{Selection::named_rule, *id}};
    throw RangeViolation("--rule: unknown rule '" + rule_s +
                         "' (STERN11, SUN12, SUN13, SUN14, EQ16, THM21, COR22, "
                         "COR23, EQ24, LEMMA21, LEMMA21_RATIONAL, COR21, all)");
}

int cmd_verify(const std::string& rule_s, const RangeLL& mr, const RangeLL& kr,
               const RangeLL& br, bool br_given, unsigned k2, Emitter& em,
               EulerTable& table, unsigned parallelism) {
    const std::vector<Selection> sel = parse_selection(rule_s);

    const RuleGrid base{mr.lo, mr.hi, kr.lo, kr.hi, br.lo, br.hi};
    validate(base);
    // the closed-form rule lives at base indices 0 and 2 only; default
    // its b range rather than inheriting the delta-rule default, and in
    // 'all' mode clamp to that domain instead of erroring out
    RuleGrid cor21_grid = base;
    bool run_cor21 = true;
    if (!br_given) {
        cor21_grid.b_lo = 0;
        cor21_grid.b_hi = 2;
    } else if (rule_s == "all") {
        cor21_grid.b_hi = std::min<long long>(cor21_grid.b_hi, 2);
        run_cor21 = cor21_grid.b_lo <= cor21_grid.b_hi;
    }

    // One covering table for everything selected.
    std::uint64_t n_need = 0;
    unsigned k_need = 0;
    for (const Selection& s : sel) {
        switch (s.what) {
            case Selection::named_rule:
                if (rule_kind(s.id) == RuleKind::value) {
                    n_need = std::max(n_need, static_cast<std::uint64_t>(base.b_hi));
                    k_need = std::max(k_need, rule_modulus_exp(s.id, 1));
                } else {
                    n_need = std::max(n_need, shifted_index(base.m_hi, base.k_hi, base.b_hi));
                    k_need = std::max(k_need, rule_modulus_exp(s.id, base.m_hi));
                }
                break;
            case Selection::cor21:
                if (base.m_hi >= 2) {
                    n_need = std::max(n_need, shifted_index(base.m_hi, base.k_hi, 2));
                    k_need = std::max(k_need, static_cast<unsigned>(base.m_hi + 7));
                }
                break;
            case Selection::rational:
                n_need = std::max(n_need, static_cast<std::uint64_t>(base.b_hi));
                k_need = std::max(k_need, 10u);
                break;
        }
    }
    if (k2 != 0) {
        if (k2 < k_need)
            throw BadModulus("--k2: narrower than the widest selected rule needs (2^" +
                             std::to_string(k_need) + ")");
        k_need = k2;
    }
    if (k_need > 0) table.build_mod(n_need, k_need);

    SweepReport total;
    total.region = rule_s + " " +
                   detail::grid_region(rule_s == "COR21" ? cor21_grid : base, true);
    auto sink = [&em](const CheckReport& r) { em.report(r); };
    for (const Selection& s : sel) {
        switch (s.what) {
            case Selection::named_rule:
                merge_into(total, sweep_rule(s.id, base, table, parallelism, sink));
                break;
            case Selection::cor21:
                if (run_cor21)
                    merge_into(total, sweep_corollary21(cor21_grid, table, parallelism, sink));
                break;
            case Selection::rational:
                merge_into(total, sweep_lemma21_rational(base, table, parallelism, sink));
                break;
        }
    }
    em.summary(total);
    return total.failed > 0 ? 1 : 0;
}

int cmd_identities(const std::string& check, const std::string& step_s,
                   std::optional<RangeLL> mr, std::optional<RangeLL> kr,
                   std::optional<RangeLL> br, std::optional<RangeLL> nr,
                   Emitter& em, EulerTable& table) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport total;
    auto done = [&](std::string region) {
        total.region = std::move(region);
        total.elapsed = std::chrono::steady_clock::now() - t0;
        em.summary(total);
        return total.failed > 0 ? 1 : 0;
    };
    auto count = [&total](bool pass) {
        ++total.checked;
        pass ? ++total.passed : ++total.failed;
    };

    if (check == "f" || check == "F" || check == "inversion") {
        const RangeLL b = br.value_or(RangeLL{0, 40});
        const RangeLL k = kr.value_or(RangeLL{0, 12});
        require_even_range(b, "--b-range");
        if (k.lo < 0) throw RangeViolation("--k-range: bounds must be >= 0");
        constexpr unsigned kConsistencyExp = 24;
        for (long long bb = b.lo; bb <= b.hi; bb += 2)
            for (long long kk = k.lo; kk <= k.hi; ++kk) {
                if (check == "f") {
                    // exact route vs pure-residue route at a fixed width
                    const BigInt exact = f_value(table, bb, kk);
                    const std::uint64_t idx = static_cast<std::uint64_t>(2 * kk + bb);
                    const BigInt modular =
                        detail::quarter_pow3_plus1_mod(BigInt(idx) + 1, kConsistencyExp)
                        * table.mod(idx, kConsistencyExp).value();
                    CheckReport rep;
                    rep.id_key = "step";
                    rep.id = "FVAL";
                    rep.params = {{"b", bb}, {"k", kk}};
                    rep.modulus_exp = kConsistencyExp;
                    rep.lhs_key = "modular";
                    rep.rhs_key = "exact";
                    rep.lhs = reduce_signed(modular, kConsistencyExp);
                    rep.rhs = reduce_signed(exact, kConsistencyExp);
                    rep.pass = (rep.lhs == rep.rhs);
                    em.report(rep);
                    count(rep.pass);
                } else if (check == "F") {
                    bool pass = true;
                    try {
                        F_value(table, bb, kk);
                    } catch (const IntegralityViolation& e) {
                        pass = false;
                        std::cerr << "MATH FAILURE: " << e.what() << "\n";
                    }
                    em.report_flag("FINT", {{"b", bb}, {"k", kk}}, pass);
                    count(pass);
                } else {
                    const bool pass = inversion_check(table, bb, kk);
                    em.report_flag("FINV", {{"b", bb}, {"k", kk}}, pass);
                    count(pass);
                }
            }
        std::ostringstream os;
        os << check << " b=" << b.lo << ":" << b.hi << " k=" << k.lo << ":" << k.hi;
        return done(os.str());
    }

    if (check == "eq15") {
        const RangeLL k = kr.value_or(RangeLL{0, 40});
        const RangeLL n = nr.value_or(RangeLL{1, 6});
        if (k.lo < 0) throw RangeViolation("--k-range: bounds must be >= 0");
        if (n.lo < 1) throw RangeViolation("--n-range: bounds must be >= 1");
        for (long long kk = k.lo; kk <= k.hi; ++kk)
            for (long long nn = n.lo; nn <= n.hi; ++nn) {
                const CheckReport rep = eq15_check(table, kk, nn);
                em.report(rep);
                count(rep.pass);
            }
        std::ostringstream os;
        os << "eq15 k=" << k.lo << ":" << k.hi << " n=" << n.lo << ":" << n.hi;
        return done(os.str());
    }

    if (check == "pow3") {
        const RangeLL m = mr.value_or(RangeLL{4, 12});
        const RangeLL k = kr.value_or(RangeLL{1, 8});
        if (m.lo < 1 || m.hi > 57)
            throw RangeViolation("--m-range: bounds must be in [1, 57]");
        if (k.lo < 1) throw RangeViolation("--k-range: bounds must be >= 1");
        for (long long mm = m.lo; mm <= m.hi; ++mm)
            for (long long kk = k.lo; kk <= k.hi; ++kk) {
                if (mm < 4) {
                    ++total.guard_skipped;
                    continue;
                }
                const CheckReport rep = pow3_expansion_check(mm, kk);
                em.report(rep);
                count(rep.pass);
            }
        std::ostringstream os;
        os << "pow3 m=" << m.lo << ":" << m.hi << " k=" << k.lo << ":" << k.hi;
        return done(os.str());
    }

    if (check == "steps") {
        std::vector<StepId> steps;
        if (step_s.empty()) {
            steps = {StepId::EQ21, StepId::EQ22, StepId::EQ23, StepId::EQ26};
        } else if (auto s = step_from_name(step_s)) {
            steps = {*s};
        } else {
            throw RangeViolation("--step: unknown step '" + step_s +
                                 "' (EQ21, EQ22, EQ23, EQ26)");
        }
        const RangeLL m = mr.value_or(RangeLL{4, 8});
        const RangeLL k = kr.value_or(RangeLL{1, 4});
        const RangeLL b = br.value_or(RangeLL{0, 32});
        if (m.lo < 1 || m.hi > 57)
            throw RangeViolation("--m-range: bounds must be in [1, 57]");
        if (k.lo < 1) throw RangeViolation("--k-range: bounds must be >= 1");
        require_even_range(b, "--b-range");
        for (StepId step : steps)
            for (long long mm = m.lo; mm <= m.hi; ++mm)
                for (long long kk = k.lo; kk <= k.hi; ++kk)
                    for (long long bb = b.lo; bb <= b.hi; bb += 2) {
                        if (mm < 4) {
                            ++total.guard_skipped;
                            continue;
                        }
                        const CheckReport rep = proof_step_check(step, mm, kk, bb, table);
                        em.report(rep);
                        count(rep.pass);
                    }
        std::ostringstream os;
        os << "steps m=" << m.lo << ":" << m.hi << " k=" << k.lo << ":" << k.hi
           << " b=" << b.lo << ":" << b.hi;
        return done(os.str());
    }

    throw RangeViolation("--check: unknown check '" + check + "'");
}

int cmd_conjecture(long long m_max, long long n_max, long long k_max,
                   bool continue_after_failure, Emitter& em, EulerTable& table,
                   unsigned parallelism) {
    ConjectureSweepOptions opt;
    opt.continue_after_failure = continue_after_failure;
    opt.parallelism = parallelism;
    opt.on_failure = [&em](const CheckReport& r) {
        em.report(r);
        // the exit-code contract promises counterexample detail as JSON
        // on stdout regardless of the display format
        if (em.format() != Format::json) std::cout << to_json(r) << "\n";
    };
    const SweepReport sw = conjecture_sweep({m_max, n_max, k_max}, table, opt);
    em.summary(sw);
    return sw.failed > 0 ? 1 : 0;
}

int cmd_cache_build(std::uint64_t n, unsigned k2, const std::string& path, Emitter& em) {
    if (n % 2 != 0)
        throw OddIndexError("--n: cache tables cover even indices; give an even bound");
    const ModTable t = build_mod_table(n, k2);
    save_cache(path, t);
    switch (em.format()) {
        case Format::json:
            std::cout << "{\"cache\":\"" << path << "\",\"n_max\":" << t.n_max
                      << ",\"k_exp\":" << t.k_exp
                      << ",\"entries\":" << t.residues.size() << "}\n";
            break;
        case Format::csv:
            std::cout << "cache,n_max,k_exp,entries\n"
                      << path << "," << t.n_max << "," << t.k_exp << ","
                      << t.residues.size() << "\n";
            break;
        case Format::text:
            std::cout << "wrote " << path << " N=" << t.n_max << " K=" << t.k_exp
                      << " entries=" << t.residues.size() << "\n";
            break;
    }
    return 0;
}

int cmd_cache_info(const std::string& path, Emitter& em) {
    const ModTable t = load_cache(path);
    switch (em.format()) {
        case Format::json:
            std::cout << "{\"cache\":\"" << path << "\",\"n_max\":" << t.n_max
                      << ",\"k_exp\":" << t.k_exp
                      << ",\"entries\":" << t.residues.size() << "}\n";
            break;
        case Format::csv:
            std::cout << "cache,n_max,k_exp,entries\n"
                      << path << "," << t.n_max << "," << t.k_exp << ","
                      << t.residues.size() << "\n";
            break;
        case Format::text:
            std::cout << path << ": eulercache v1 N=" << t.n_max << " K=" << t.k_exp
                      << " entries=" << t.residues.size() << "\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler number congruence toolkit: exact/modular values, "
                 "congruence rule verification, proof identities, and an "
                 "exhaustive reflection-symmetry sweep"};
    app.require_subcommand(1);

    std::string format_s = "text";
    app.add_option("--format", format_s, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    std::string cache_path = "./euler.cache";
    app.add_option("--cache-path", cache_path, "residue cache file")
        ->envname("EULERCONG_CACHE")
        ->capture_default_str();
    unsigned parallelism = default_parallelism();
    app.add_option("--parallelism,-j", parallelism, "worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // compute exact|mod
    auto* compute = app.add_subcommand("compute", "compute one Euler number");
    compute->require_subcommand(1);
    std::uint64_t n_exact = 0;
    auto* c_exact = compute->add_subcommand("exact", "exact value of E_n");
    c_exact->add_option("--n", n_exact, "index n")->required();
    std::uint64_t n_mod = 0;
    unsigned k2_mod = 32;
    auto* c_mod = compute->add_subcommand("mod", "E_n mod 2^K");
    c_mod->add_option("--n", n_mod, "index n")->required();
    c_mod->add_option("--k2", k2_mod, "modulus exponent K")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "sweep a congruence rule over a grid");
    std::string rule_s;
    verify->add_option("--rule", rule_s, "rule id or 'all'")->required();
    std::string mr_s = "1:4", kr_s = "1:8", br_s = "0:64";
    auto* br_opt = verify->add_option("--b-range", br_s, "even base indices LO:HI");
    verify->add_option("--m-range", mr_s, "m values LO:HI")->capture_default_str();
    verify->add_option("--k-range", kr_s, "k values LO:HI")->capture_default_str();
    br_opt->capture_default_str();
    unsigned k2_verify = 0;
    verify->add_option("--k2", k2_verify, "oracle table width (default: widest rule)");

    // identities
    auto* identities = app.add_subcommand("identities", "check proof-level identities");
    std::string check_s;
    identities->add_option("--check", check_s, "which identity family")
        ->check(CLI::IsMember({"f", "F", "inversion", "eq15", "pow3", "steps"}))
        ->required();
    std::string step_s;
    identities->add_option("--step", step_s, "restrict 'steps' to one of EQ21/EQ22/EQ23/EQ26");
    std::string imr_s, ikr_s, ibr_s, inr_s;
    auto* imr = identities->add_option("--m-range", imr_s, "m values LO:HI");
    auto* ikr = identities->add_option("--k-range", ikr_s, "k values LO:HI");
    auto* ibr = identities->add_option("--b-range", ibr_s, "even base indices LO:HI");
    auto* inr = identities->add_option("--n-range", inr_s, "n values LO:HI");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "exhaustive reflection-symmetry sweep");
    long long cm = 0, cn = 0, ck = 0;
    conjecture->add_option("--m-max", cm, "largest m")->required();
    conjecture->add_option("--n-max", cn, "largest n")->required();
    conjecture->add_option("--k-max", ck, "largest k")->required();
    bool c_continue = false;
    conjecture->add_flag("--continue", c_continue, "enumerate all failures instead of stopping");

    // cache build|info
    auto* cache = app.add_subcommand("cache", "residue cache maintenance");
    cache->require_subcommand(1);
    std::uint64_t cache_n = 0;
    unsigned cache_k2 = 32;
    auto* cache_build = cache->add_subcommand("build", "build and persist a residue table");
    cache_build->add_option("--n", cache_n, "largest (even) index")->required();
    cache_build->add_option("--k2", cache_k2, "modulus exponent K")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* cache_info = cache->add_subcommand("info", "describe the cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Emitter em(parse_format(format_s));
    try {
        if (c_exact->parsed()) return cmd_compute_exact(n_exact, em);
        if (c_mod->parsed()) return cmd_compute_mod(n_mod, k2_mod, cache_path, em);
        if (verify->parsed()) {
            const RangeLL mr = parse_range(mr_s, "--m-range");
            const RangeLL kr = parse_range(kr_s, "--k-range");
            const RangeLL br = parse_range(br_s, "--b-range");
            require_even_range(br, "--b-range");
            EulerTable table = table_with_cache(cache_path);
            return cmd_verify(rule_s, mr, kr, br, br_opt->count() > 0, k2_verify,
                              em, table, parallelism);
        }
        if (identities->parsed()) {
            std::optional<RangeLL> mr, kr, br, nr;
            if (imr->count()) mr = parse_range(imr_s, "--m-range");
            if (ikr->count()) kr = parse_range(ikr_s, "--k-range");
            if (ibr->count()) br = parse_range(ibr_s, "--b-range");
            if (inr->count()) nr = parse_range(inr_s, "--n-range");
            EulerTable table = table_with_cache(cache_path);
            return cmd_identities(check_s, step_s, mr, kr, br, nr, em, table);
        }
        if (conjecture->parsed()) {
            EulerTable table = table_with_cache(cache_path);
            return cmd_conjecture(cm, cn, ck, c_continue, em, table, parallelism);
        }
        if (cache_build->parsed()) return cmd_cache_build(cache_n, cache_k2, cache_path, em);
        if (cache_info->parsed()) return cmd_cache_info(cache_path, em);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const IntegralityViolation& e) {
        std::cerr << "MATH FAILURE: " << e.what() << "\n";
        return 1;
    } catch (const GuardViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RangeViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OddIndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CacheFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
