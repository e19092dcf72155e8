#include "supercong/cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace supercong::cli {

void RunReport::sort_results()
{
    std::stable_sort(results.begin(), results.end(), [](const CheckRecord& a, const CheckRecord& b) {
        return std::tuple(a.suite_rank, a.id_rank, a.param, a.aux_index.value_or(-1)) <
               std::tuple(b.suite_rank, b.id_rank, b.param, b.aux_index.value_or(-1));
    });
}

Summary RunReport::summary() const
{
    Summary s;
    s.total = static_cast<std::int64_t>(results.size());
    s.passed = std::count_if(results.begin(), results.end(), [](const CheckRecord& r) { return r.holds; });
    s.failed = s.total - s.passed;
    return s;
}

std::string to_json(const RunReport& report)
{
    using nlohmann::ordered_json;
    ordered_json root;
    root["tool_version"] = report.tool_version;
    root["command"] = report.command;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.params) {
        params[key] = value;
    }
    root["params"] = std::move(params);

    ordered_json results = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json rec;
        rec["suite"] = r.suite;
        rec["id"] = r.id;
        ordered_json p;
        p[r.param_name] = r.param;
        if (r.aux_index) {
            p["i"] = *r.aux_index;
        }
        rec["params"] = std::move(p);
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["modulus"] = r.modulus ? ordered_json(*r.modulus) : ordered_json(nullptr);
        rec["holds"] = r.holds;
        results.push_back(std::move(rec));
    }
    root["results"] = std::move(results);

    const Summary s = report.summary();
    root["summary"] = ordered_json{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
    root["wall_time_ms"] = report.wall_time_ms ? ordered_json(*report.wall_time_ms) : ordered_json(nullptr);
    return root.dump(2) + "\n";
}

std::string to_csv(const RunReport& report)
{
    std::ostringstream os;
    os << "suite,id,p_or_n,aux_index,modulus,lhs,rhs,holds\n";
    for (const auto& r : report.results) {
        os << r.suite << ',' << r.id << ',' << r.param << ',';
        if (r.aux_index) {
            os << *r.aux_index;
        }
        os << ',' << r.modulus.value_or("") << ',' << r.lhs << ',' << r.rhs << ',' << (r.holds ? "true" : "false")
           << '\n';
    }
    return os.str();
}

} // namespace supercong::cli
