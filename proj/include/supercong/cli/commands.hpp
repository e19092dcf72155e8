#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/cli/report.hpp"

namespace supercong::cli {

enum ExitCode : int { kExitOk = 0, kExitFalsified = 1, kExitUsage = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VerifyOptions {
    std::string suite = "all"; ///< identities | congruences | divisibility | all
    std::int64_t n_max = 100;
    std::uint64_t prime_lo = 5;
    std::uint64_t prime_hi = 199;
    std::vector<std::string> ids; ///< empty means every id of the selected suites
    unsigned jobs = 1;
    std::string format = "json"; ///< json | csv
    std::optional<std::string> out;
    std::optional<std::string> inject_failure; ///< debug: corrupt the first record with this id
    bool timing = false;
};

/// Runs the selected suites. Throws UsageError on bad options.
RunReport run_verify(const VerifyOptions& options);

std::string render(const RunReport& report, const std::string& format);

/// The three subcommands; each returns the process exit code.
int cmd_compute(const std::string& sequence, std::int64_t n_max, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_series(const std::string& which, std::int64_t k, std::int64_t k_bound, std::ostream& out,
               std::ostream& err);

/// Splits "a,b,,c" into {"a","b","c"}.
std::vector<std::string> split_ids(const std::string& list);

} // namespace supercong::cli
