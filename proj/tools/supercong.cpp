// supercong: compute Domb-type sequences and verify their identities,
// supercongruences and divisibility properties.
//
//   supercong compute <domb|franel|euler|catalan> --n-max N
//   supercong verify <identities|congruences|divisibility|all> [flags]
//   supercong series <rogers|ccl> --k K
//
// Exit codes: 0 all checks hold, 1 a check was falsified, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "supercong/cli/commands.hpp"
#include "supercong/error.hpp"

namespace cli = supercong::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Domb-number identities and supercongruences", "supercong"};
    app.set_version_flag("--version", std::string(cli::kToolVersion));
    app.require_subcommand(1);

    std::string sequence;
    std::int64_t n_max_compute = 10;
    auto* compute = app.add_subcommand("compute", "Print a sequence, one 'index value' pair per line");
    compute->add_option("sequence", sequence, "domb | franel | euler | catalan")->required();
    compute->add_option("--n-max", n_max_compute, "Largest index")->capture_default_str();

    cli::VerifyOptions vopt;
    std::string ids;
    std::string out_path;
    std::string inject;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a report");
    verify->add_option("suite", vopt.suite, "identities | congruences | divisibility | all")->required();
    verify->add_option("--n-max", vopt.n_max, "Largest n for identities and divisibility")->capture_default_str();
    verify->add_option("--prime-lo", vopt.prime_lo, "Smallest prime for congruences")->capture_default_str();
    verify->add_option("--prime-hi", vopt.prime_hi, "Largest prime for congruences")->capture_default_str();
    verify->add_option("--ids", ids, "Comma-separated check ids (default: all)");
    verify->add_option("--jobs", vopt.jobs, "Worker threads")->envname("TOOL_JOBS")->capture_default_str();
    verify->add_option("--out", out_path, "Report file (default: stdout)");
    verify->add_option("--format", vopt.format, "json | csv")->capture_default_str();
    verify->add_flag("--timing", vopt.timing, "Record wall_time_ms in the report");
    verify->add_option("--inject-failure", inject, "Debug: corrupt the first result with this id")
        ->group("");

    std::string which;
    std::int64_t k = 100;
    std::int64_t k_bound = 10000;
    auto* series = app.add_subcommand("series", "Partial sums of the Domb 1/pi series");
    series->add_option("which", which, "rogers | ccl")->required();
    series->add_option("--k", k, "Number of terms")->capture_default_str();
    series->add_option("--k-max", k_bound, "Upper bound accepted for --k")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    try {
        if (*compute) {
            return cli::cmd_compute(sequence, n_max_compute, std::cout, std::cerr);
        }
        if (*verify) {
            vopt.ids = cli::split_ids(ids);
            if (!out_path.empty()) {
                vopt.out = out_path;
            }
            if (!inject.empty()) {
                vopt.inject_failure = inject;
            }
            return cli::cmd_verify(vopt, std::cout, std::cerr);
        }
        return cli::cmd_series(which, k, k_bound, std::cout, std::cerr);
    } catch (const supercong::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitUsage;
    }
}
