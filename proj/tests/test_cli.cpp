#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

// EULERCONG_CLI_PATH is injected by the build; everything here drives
// the real binary through a shell and inspects streams and exit codes.

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(::getpid()) + "_" + std::to_string(++counter);
    const auto out = dir / ("eulercong_out_" + tag + ".txt");
    const auto err = dir / ("eulercong_err_" + tag + ".txt");
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(EULERCONG_CLI_PATH) + " " + args + " >" + out.string() +
           " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw != -1 && WIFEXITED(raw)) r.rc = WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::filesystem::path temp_cache(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("exact computation on stdout") {
    const RunResult r = run_cli("compute exact --n 16");
    CHECK(r.rc == 0);
    CHECK(r.out == "19391512145\n");

    const RunResult odd = run_cli("compute exact --n 3");
    CHECK(odd.rc == 0);
    CHECK(odd.out == "0\n");
}

TEST_CASE("missing required flags are usage errors") {
    CHECK(run_cli("compute exact").rc == 2);
    CHECK(run_cli("verify").rc == 2);
    CHECK(run_cli("conjecture --m-max 2 --n-max 1").rc == 2);
    CHECK(run_cli("").rc == 2);
    CHECK(run_cli("frobnicate").rc == 2);
}

TEST_CASE("modular computation in each format") {
    const RunResult text = run_cli("compute mod --n 16 --k2 10");
    CHECK(text.rc == 0);
    CHECK(text.out == "593 (= -431 mod 1024)\n");

    const RunResult json = run_cli("--format json compute mod --n 16 --k2 10");
    CHECK(json.rc == 0);
    CHECK(json.out == "{\"n\":16,\"modulus_exp\":10,\"residue\":\"593\"}\n");
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["residue"] == "593");

    const RunResult csv = run_cli("--format csv compute mod --n 16 --k2 10");
    CHECK(csv.out == "n,modulus_exp,residue\n16,10,593\n");
}

TEST_CASE("verify emits one report per grid point plus a summary") {
    const RunResult r =
        run_cli("--format json verify --rule THM21 --m-range 1:4 --k-range 1:2 --b-range 0:8");
    REQUIRE(r.rc == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 41);  // 4*2*5 reports and one summary
    for (const auto& line : lines) {
        const auto j = nlohmann::json::parse(line);  // throws on malformed output
        if (j.contains("summary")) {
            CHECK(j["summary"]["checked"] == 40);
            CHECK(j["summary"]["failed"] == 0);
        } else {
            CHECK(j["rule"] == "THM21");
            CHECK(j["pass"] == true);
        }
    }
    // timing stays off stdout in machine formats
    CHECK(r.out.find("elapsed") == std::string::npos);
    CHECK(r.err.find("elapsed_ms=") != std::string::npos);
}

TEST_CASE("verify counts guard skips") {
    const RunResult r =
        run_cli("--format json verify --rule SUN12 --m-range 1:2 --k-range 1:3 --b-range 0:6");
    REQUIRE(r.rc == 0);
    const auto lines = lines_of(r.out);
    const auto summary = nlohmann::json::parse(lines.back());
    CHECK(summary["summary"]["checked"] == 12);
    CHECK(summary["summary"]["guard_skipped"] == 12);
}

TEST_CASE("verify usage errors name the offending flag") {
    const RunResult odd = run_cli("verify --rule THM21 --b-range 1:5");
    CHECK(odd.rc == 2);
    CHECK(odd.err.find("--b-range") != std::string::npos);

    const RunResult rule = run_cli("verify --rule NOTARULE");
    CHECK(rule.rc == 2);
    CHECK(rule.err.find("--rule") != std::string::npos);

    const RunResult backwards = run_cli("verify --rule THM21 --m-range 4:1");
    CHECK(backwards.rc == 2);
    CHECK(backwards.err.find("--m-range") != std::string::npos);

    const RunResult narrow = run_cli("verify --rule THM21 --m-range 1:4 --k2 5");
    CHECK(narrow.rc == 2);
    CHECK(narrow.err.find("--k2") != std::string::npos);
}

TEST_CASE("verify all covers every rule family") {
    const RunResult r = run_cli(
        "--format json verify --rule all --m-range 1:3 --k-range 1:2 --b-range 0:8");
    REQUIRE(r.rc == 0);
    std::set<std::string> seen;
    for (const auto& line : lines_of(r.out)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("rule")) seen.insert(j["rule"].get<std::string>());
    }
    for (const char* name : {"STERN11", "SUN12", "SUN13", "THM21", "COR22",
                             "EQ24", "LEMMA21", "LEMMA21_RATIONAL", "COR21"})
        CHECK(seen.count(name) == 1);
    // hypotheses out of reach on this grid appear only as skips
    CHECK(seen.count("SUN14") == 0);
    CHECK(seen.count("EQ16") == 0);
    CHECK(seen.count("COR23") == 0);
}

TEST_CASE("csv output re-emits headers when the column set changes") {
    const RunResult r = run_cli(
        "--format csv verify --rule all --m-range 1:2 --k-range 1:1 --b-range 0:2");
    REQUIRE(r.rc == 0);
    const auto lines = lines_of(r.out);
    int headers = 0;
    for (const auto& line : lines)
        if (line.rfind("rule,", 0) == 0) ++headers;
    CHECK(headers >= 2);  // delta rules and value rules differ in columns
    CHECK(lines.front() == "rule,m,k,b,modulus_exp,predicted,actual,pass");
    CHECK(lines.back().rfind("# summary", 0) == 0);
}

TEST_CASE("identity checks run from the command line") {
    const RunResult eq15 = run_cli("identities --check eq15 --k-range 0:10 --n-range 1:3");
    CHECK(eq15.rc == 0);
    CHECK(eq15.out.find("FAIL") == std::string::npos);

    const RunResult pow3 = run_cli("--format json identities --check pow3");
    CHECK(pow3.rc == 0);
    for (const auto& line : lines_of(pow3.out)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("step")) CHECK(j["pass"] == true);
    }

    const RunResult steps =
        run_cli("identities --check steps --step EQ22 --m-range 4:5 --k-range 1:2 --b-range 0:4");
    CHECK(steps.rc == 0);

    const RunResult inv = run_cli("identities --check inversion --b-range 0:8 --k-range 0:4");
    CHECK(inv.rc == 0);

    CHECK(run_cli("identities --check nonsense").rc == 2);
    CHECK(run_cli("identities --check steps --step EQ77").rc == 2);
}

TEST_CASE("conjecture sweep summary and region validation") {
    const RunResult ok = run_cli("--format json conjecture --m-max 3 --n-max 2 --k-max 2");
    REQUIRE(ok.rc == 0);
    const auto lines = lines_of(ok.out);
    REQUIRE(lines.size() == 1);  // no failures, summary only
    const auto j = nlohmann::json::parse(lines.front());
    CHECK(j["summary"]["checked"] == 20);
    CHECK(j["summary"]["failed"] == 0);

    const RunResult bad = run_cli("conjecture --m-max 1 --n-max 2 --k-max 1");
    CHECK(bad.rc == 2);
}

TEST_CASE("cache build, info and reuse") {
    const auto path = temp_cache("eulercong_cli_cache.txt");
    std::filesystem::remove(path);

    const RunResult build =
        run_cli("--cache-path " + path.string() + " cache build --n 256 --k2 16");
    REQUIRE(build.rc == 0);
    REQUIRE(std::filesystem::exists(path));

    const RunResult info = run_cli("--cache-path " + path.string() + " cache info");
    CHECK(info.rc == 0);
    CHECK(info.out.find("N=256 K=16") != std::string::npos);

    // the environment variable is an alternate spelling of the flag
    const RunResult env_info = run_cli("cache info", "EULERCONG_CACHE=" + path.string());
    CHECK(env_info.rc == 0);
    CHECK(env_info.out == info.out);

    const RunResult use =
        run_cli("--cache-path " + path.string() + " compute mod --n 16 --k2 10");
    CHECK(use.rc == 0);
    CHECK(use.out == "593 (= -431 mod 1024)\n");

    CHECK(run_cli("--cache-path " + path.string() + " cache build --n 31").rc == 2);

    std::ofstream(path) << "not a cache\n";
    const RunResult corrupt = run_cli("--cache-path " + path.string() + " cache info");
    CHECK(corrupt.rc == 2);
    CHECK(corrupt.err.find("error") != std::string::npos);

    // a corrupt cache must not break computation, only warn
    const RunResult degraded =
        run_cli("--cache-path " + path.string() + " compute mod --n 16 --k2 10");
    CHECK(degraded.rc == 0);
    CHECK(degraded.out == "593 (= -431 mod 1024)\n");
    CHECK(degraded.err.find("warning") != std::string::npos);

    std::filesystem::remove(path);
}

TEST_CASE("machine output is byte-stable across runs and thread counts") {
    const std::string args =
        "--format json verify --rule COR22 --m-range 3:6 --k-range 1:4 --b-range 0:16";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    const RunResult par = run_cli("-j 4 " + args);
    const RunResult ser = run_cli("-j 1 " + args);
    REQUIRE(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(par.out == ser.out);
    CHECK(a.out == par.out);
}
