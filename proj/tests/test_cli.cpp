#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "supercong/cli/commands.hpp"

using namespace supercong::cli;

namespace {

struct Captured {
    int status;
    std::string out;
};

// Runs the built tool through the shell; stderr is discarded.
Captured run_tool(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " \"" SUPERCONG_TOOL_PATH "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

TEST_CASE("compute prints index/value lines")
{
    std::ostringstream out, err;
    CHECK(cmd_compute("domb", 3, out, err) == kExitOk);
    CHECK(out.str() == "0 1\n1 4\n2 28\n3 256\n");

    std::ostringstream out2, err2;
    CHECK(cmd_compute("fibonacci", 3, out2, err2) == kExitUsage);
    CHECK(out2.str().empty());
    CHECK_FALSE(err2.str().empty());

    std::ostringstream out3, err3;
    CHECK(cmd_compute("euler", -1, out3, err3) == kExitUsage);
}

TEST_CASE("verify congruences on a tiny range")
{
    VerifyOptions o;
    o.suite = "congruences";
    o.ids = {"thm1"};
    o.prime_lo = 5;
    o.prime_hi = 7;
    const RunReport r = run_verify(o);
    REQUIRE(r.results.size() == 2);
    CHECK(r.summary().passed == 2);
    CHECK(r.results[0].lhs == "505");
    CHECK(r.results[1].lhs == "1708");

    std::ostringstream out, err;
    CHECK(cmd_verify(o, out, err) == kExitOk);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["summary"]["total"] == 2);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["results"][0]["modulus"] == "625");
}

TEST_CASE("transformation check at n_max = 0 yields one result")
{
    VerifyOptions o;
    o.suite = "identities";
    o.ids = {"cz"};
    o.n_max = 0;
    const RunReport r = run_verify(o);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].holds);
}

TEST_CASE("JSON layout and CSV header")
{
    VerifyOptions o;
    o.suite = "divisibility";
    o.n_max = 5;
    const std::string json = render(run_verify(o), "json");
    const auto j = nlohmann::ordered_json::parse(json);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) {
        keys.push_back(item.key());
    }
    CHECK(keys == std::vector<std::string>{"tool_version", "command", "params", "results", "summary", "wall_time_ms"});
    CHECK(j["wall_time_ms"].is_null());
    for (const auto& rec : j["results"]) {
        CHECK(rec.contains("suite"));
        CHECK(rec.contains("id"));
        CHECK(rec.contains("params"));
        CHECK(rec["holds"].is_boolean());
    }

    const std::string csv = render(run_verify(o), "csv");
    CHECK(csv.rfind("suite,id,p_or_n,aux_index,modulus,lhs,rhs,holds\n", 0) == 0);
}

TEST_CASE("reports do not depend on the worker count")
{
    VerifyOptions o;
    o.n_max = 20;
    o.prime_hi = 31;
    o.jobs = 1;
    const std::string one = render(run_verify(o), "json");
    o.jobs = 4;
    const std::string four = render(run_verify(o), "json");
    CHECK(one == four);
}

TEST_CASE("an injected failure is reported with exit code 1")
{
    VerifyOptions o;
    o.suite = "congruences";
    o.ids = {"b3"};
    o.prime_hi = 13;
    o.inject_failure = "b3";
    std::ostringstream out, err;
    CHECK(cmd_verify(o, out, err) == kExitFalsified);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["summary"]["failed"] == 1);
    CHECK(err.str().find("b3") != std::string::npos);

    VerifyOptions m;
    m.suite = "divisibility";
    m.ids = {"ratio_increasing"};
    m.n_max = 10;
    m.inject_failure = "ratio_increasing";
    std::ostringstream out2, err2;
    CHECK(cmd_verify(m, out2, err2) == kExitFalsified);
}

TEST_CASE("usage errors")
{
    VerifyOptions bad_suite;
    bad_suite.suite = "everything";
    CHECK_THROWS_AS(run_verify(bad_suite), UsageError);

    VerifyOptions bad_id;
    bad_id.ids = {"thm9"};
    CHECK_THROWS_AS(run_verify(bad_id), UsageError);

    VerifyOptions bad_format;
    bad_format.format = "xml";
    CHECK_THROWS_AS(run_verify(bad_format), UsageError);

    VerifyOptions bad_range;
    bad_range.suite = "congruences";
    bad_range.prime_lo = 11;
    bad_range.prime_hi = 7;
    std::ostringstream out, err;
    CHECK(cmd_verify(bad_range, out, err) == kExitUsage);

    CHECK(split_ids("a,b,,c") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("series output")
{
    std::ostringstream out, err;
    CHECK(cmd_series("ccl", 3, 10000, out, err) == kExitOk);
    CHECK(out.str().find("value=1.465820312500000") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_series("rogers", 2, 10000, out2, err2) == kExitOk);
    CHECK(out2.str().find("value=0.595703125000000") != std::string::npos);

    std::ostringstream out3, err3;
    CHECK(cmd_series("rogers", 1, 10000, out3, err3) == kExitUsage);
    std::ostringstream out4, err4;
    CHECK(cmd_series("ccl", 50, 10, out4, err4) == kExitUsage);
    std::ostringstream out5, err5;
    CHECK(cmd_series("ramanujan", 5, 10000, out5, err5) == kExitUsage);
}

TEST_CASE("tool binary exit codes")
{
    CHECK(run_tool("compute domb --n-max 2").out == "0 1\n1 4\n2 28\n");
    CHECK(run_tool("compute nope").status == 2);
    CHECK(run_tool("verify congruences --ids thm1 --prime-lo 5 --prime-hi 7").status == 0);
    CHECK(run_tool("verify congruences --ids b3 --prime-hi 13 --inject-failure b3").status == 1);
    CHECK(run_tool("verify nothing").status == 2);
    CHECK(run_tool("verify congruences --prime-lo 3").status == 2);
    CHECK(run_tool("--bogus-flag").status == 2);
    CHECK(run_tool("--help").status == 0);
}

TEST_CASE("TOOL_JOBS sets the worker count without changing output")
{
    const auto a = run_tool("verify all --n-max 8 --prime-hi 23", "TOOL_JOBS=1");
    const auto b = run_tool("verify all --n-max 8 --prime-hi 23", "TOOL_JOBS=3");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(run_tool("verify all --n-max 8 --prime-hi 23 --jobs 2").out == a.out);
}
