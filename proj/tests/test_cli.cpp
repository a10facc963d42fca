#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qseries/cli.hpp"
#include "qseries/etaq.hpp"

using namespace qseries;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, std::map<std::string, std::string> env = {})
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, [&](const std::string &name) -> std::optional<std::string> {
        const auto it = env.find(name);
        if (it == env.end()) {
            return std::nullopt;
        }
        return it->second;
    });
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expand emits nonzero coefficients as decimal strings")
{
    const auto r = run_cli({"expand", "--spec", "9^3*3^-1", "--order", "29", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out
          == R"({"spec":"9^3*3^-1","order":29,"coeffs":[[1,"1"],[4,"1"],[7,"2"],[13,"2"],[16,"1"],[19,"2"],[25,"1"],[28,"2"]]})"
             "\n");

    const auto csv = run_cli({"expand", "--spec", "3^8", "--order", "14", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "index,value\n1,1\n4,-8\n7,20\n13,-70\n");
}

TEST_CASE("expansion JSON round-trips byte for byte")
{
    const auto r = run_cli({"expand", "--spec", "1^-24", "--order", "3", "--format", "json"});
    CHECK(r.code == 2); // negative offset is not a power series

    const auto big = run_cli({"expand", "--spec", "1^48", "--order", "400"});
    REQUIRE(big.code == 0);
    const auto parsed = nlohmann::ordered_json::parse(big.out);
    CHECK(parsed.dump() + "\n" == big.out);
    // Coefficients past 2^53 survive because they are strings.
    bool has_huge = false;
    for (const auto &entry : parsed["coeffs"]) {
        if (entry[1].get<std::string>().size() > 16) {
            has_huge = true;
        }
    }
    CHECK(has_huge);

    const auto series = expand(parse_spec("1^48"), 400);
    CHECK(cli::expansion_json("1^48", series).dump() + "\n" == big.out);
}

TEST_CASE("coeff")
{
    const auto r = run_cli({"coeff", "--form", "A", "--index", "28"});
    CHECK(r.code == 0);
    CHECK(r.out == "-160\n");
    CHECK(run_cli({"coeff", "--form", "C", "--index", "28", "--format", "json"}).out
          == "{\"form\":\"C\",\"index\":28,\"value\":\"2\"}\n");
    CHECK(run_cli({"coeff", "--form", "D", "--index", "28"}).code == 2);
    CHECK(run_cli({"coeff", "--form", "A", "--index", "0"}).code == 2);
}

TEST_CASE("oracles")
{
    const auto r = run_cli({"oracle", "three-core", "--limit", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == R"({"oracle":"three-core","limit":4,"values":[[0,"1"],[1,"1"],[2,"2"],[3,"0"],[4,"2"]]})"
                   "\n");
    const auto h = run_cli({"oracle", "hook-sum", "--z", "9", "--limit", "2", "--format", "csv"});
    CHECK(h.code == 0);
    CHECK(h.out == "z,index,value\n9,0,1\n9,1,-8\n9,2,20\n");
    CHECK(run_cli({"oracle", "three-core", "--limit", "61"}).code == 2);
}

TEST_CASE("verify subcommands and exit codes")
{
    const auto r = run_cli({"verify", "supports", "--limit", "10000"});
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["check_id"] == "supports");
    CHECK(j["status"] == "pass");

    CHECK(run_cli({"verify", "closed-forms", "--limit", "300"}).code == 0);
    CHECK(run_cli({"verify", "identities", "--limit", "10", "--z", "2,4,9"}).code == 0);
    CHECK(run_cli({"verify", "three-core", "--limit", "20"}).code == 0);
    CHECK(run_cli({"verify", "divisibility", "--prime-limit", "5000"}).code == 0);

    const auto csv = run_cli({"verify", "supports", "--limit", "50", "--format", "csv"});
    CHECK(csv.out.rfind("check_id,range,status,counterexamples,elapsed_ms\nsupports,1 <= n <= 50,pass,0,", 0) == 0);
}

TEST_CASE("verify all emits an array of passing reports")
{
    const auto r = run_cli({"verify", "all", "--workers", "auto"});
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    for (const auto &report : j) {
        CHECK(report["status"] == "pass");
    }
}

TEST_CASE("usage errors exit 2 with help on stderr")
{
    const auto r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"expand"}).code == 2);
    CHECK(run_cli({"expand", "--spec", "3^8", "--order", "abc"}).code == 2);
    CHECK(run_cli({"expand", "--spec", "3^1", "--order", "5"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"verify", "supports", "--format", "xml"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("configuration precedence: defaults < environment < file < flags")
{
    const std::string path = "qseries_test_config.txt";
    {
        std::ofstream f(path);
        f << "# comment\n\ndefault_order = 8\noutput_format=csv\n";
    }
    // Environment alone.
    auto r = run_cli({"expand", "--spec", "3^8"}, {{"QSERIES_DEFAULT_ORDER", "5"}});
    CHECK(r.out == R"({"spec":"3^8","order":5,"coeffs":[[1,"1"],[4,"-8"]]})"
                   "\n");
    // File overrides environment.
    r = run_cli({"--config", path, "expand", "--spec", "3^8"}, {{"QSERIES_DEFAULT_ORDER", "5"}});
    CHECK(r.out == "index,value\n1,1\n4,-8\n7,20\n");
    // Flags override the file.
    r = run_cli({"expand", "--spec", "3^8", "--order", "2", "--config", path, "--format", "json"});
    CHECK(r.out == R"({"spec":"3^8","order":2,"coeffs":[[1,"1"]]})"
                   "\n");

    CHECK(run_cli({"--config", "does-not-exist.txt", "coeff", "--form", "A", "--index", "4"}).code == 2);
    CHECK(run_cli({"oracle", "three-core", "--limit", "3"}, {{"QSERIES_PARTITION_CAP", "61"}}).code == 2);
    {
        std::ofstream f(path);
        f << "bogus_key=1\n";
    }
    CHECK(run_cli({"--config", path, "coeff", "--form", "A", "--index", "4"}).code == 2);
    std::remove(path.c_str());

    cli::CliConfig cfg;
    CHECK_THROWS_AS(cli::apply_setting(cfg, "partition_cap", "61"), cli::ConfigError);
    cli::apply_setting(cfg, "partition_cap", "60");
    CHECK(cfg.partition_cap == 60);
    cli::apply_setting(cfg, "worker_count", "auto");
    CHECK(cfg.worker_count == 0);
}

TEST_CASE("a failing report makes the exit code 1")
{
    VerificationReport bad;
    bad.check_id = "synthetic";
    bad.range = "n = 1";
    bad.counterexamples.push_back({"n=1", "0", "1"});
    VerificationReport good;
    good.check_id = "ok";

    cli::CliConfig cfg;
    std::ostringstream out;
    CHECK(cli::write_reports(cfg, out, {good, bad}, true) == 1);
    const auto j = nlohmann::ordered_json::parse(out.str());
    CHECK(j[1]["status"] == "fail");
    CHECK(j[1]["counterexamples"][0]["actual"] == "1");

    std::ostringstream ok_out;
    CHECK(cli::write_reports(cfg, ok_out, {good}, false) == 0);
}
