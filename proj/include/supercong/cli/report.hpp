#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercong::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// One verified claim, already rendered to decimal strings.
struct CheckRecord {
    std::string suite;
    std::string id;
    int suite_rank = 0;
    int id_rank = 0;
    std::string param_name; ///< "n" or "p"
    std::int64_t param = 0;
    std::optional<std::int64_t> aux_index;
    std::optional<std::string> modulus;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

struct Summary {
    std::int64_t total = 0;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
};

struct RunReport {
    std::string tool_version = kToolVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckRecord> results;
    std::optional<std::int64_t> wall_time_ms;

    /// Sorts results by (suite, id, param, aux index).
    void sort_results();
    Summary summary() const;
};

/// Keys in fixed order, big numbers as decimal strings, trailing newline.
std::string to_json(const RunReport& report);

/// Header plus one row per check: suite,id,p_or_n,aux_index,modulus,lhs,rhs,holds.
std::string to_csv(const RunReport& report);

} // namespace supercong::cli
