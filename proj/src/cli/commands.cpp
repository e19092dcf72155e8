#include "supercong/cli/commands.hpp"

#include "supercong/congruences.hpp"
#include "supercong/divisibility.hpp"
#include "supercong/error.hpp"
#include "supercong/identities.hpp"
#include "supercong/sequences.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace supercong::cli {

namespace {

constexpr int kSuiteIdentities = 0;
constexpr int kSuiteCongruences = 1;
constexpr int kSuiteDivisibility = 2;

constexpr std::array<std::string_view, 6> kDivisibilityIds = {
    "thm3_plus", "thm3_minus", "alt_positive", "ratio_increasing", "ratio_above_8", "a_k_increasing",
};

// Ids selected for one suite: all of them when the filter is empty, else the
// subset named in the filter. Names are consumed from `unclaimed`.
template <typename Id, typename Range, typename Parse>
std::vector<Id> select(const Range& all, Parse parse, const std::vector<std::string>& filter,
                       std::set<std::string>& unclaimed)
{
    std::vector<Id> out;
    if (filter.empty()) {
        out.assign(std::begin(all), std::end(all));
        return out;
    }
    for (const auto& name : filter) {
        if (auto id = parse(name)) {
            out.push_back(*id);
            unclaimed.erase(name);
        }
    }
    return out;
}

std::optional<int> parse_divisibility_id(std::string_view name)
{
    for (std::size_t k = 0; k < kDivisibilityIds.size(); ++k) {
        if (kDivisibilityIds[k] == name) {
            return static_cast<int>(k);
        }
    }
    return std::nullopt;
}

struct Injector {
    std::optional<std::string> target;
    bool used = false;

    bool fire(std::string_view id)
    {
        if (!used && target && *target == id) {
            used = true;
            return true;
        }
        return false;
    }
};

void add_identities(RunReport& report, const VerifyOptions& opt, const std::vector<IdentityId>& ids,
                    Injector& inject)
{
    auto reports = run_identities(ids, IdentityRanges::uniform(opt.n_max), opt.jobs);
    for (auto& r : reports) {
        if (inject.fire(to_string(r.id))) {
            r.rhs += Rational(1);
            r.holds = r.lhs == r.rhs;
        }
        CheckRecord rec;
        rec.suite = "identities";
        rec.suite_rank = kSuiteIdentities;
        rec.id = std::string(to_string(r.id));
        rec.id_rank = static_cast<int>(r.id);
        rec.param_name = "n";
        rec.param = r.n;
        rec.aux_index = r.i;
        rec.lhs = r.lhs.to_string();
        rec.rhs = r.rhs.to_string();
        rec.holds = r.holds;
        report.results.push_back(std::move(rec));
    }
}

void add_congruences(RunReport& report, const VerifyOptions& opt, const std::vector<CongruenceId>& ids,
                     Injector& inject)
{
    auto results = sweep(ids, opt.prime_lo, opt.prime_hi, opt.jobs);
    for (auto& r : results) {
        if (inject.fire(to_string(r.id))) {
            r.rhs += Residue(r.rhs.modulus(), std::int64_t{1});
            r.holds = r.lhs == r.rhs;
        }
        CheckRecord rec;
        rec.suite = "congruences";
        rec.suite_rank = kSuiteCongruences;
        rec.id = std::string(to_string(r.id));
        rec.id_rank = static_cast<int>(r.id);
        rec.param_name = "p";
        rec.param = static_cast<std::int64_t>(r.p);
        rec.aux_index = r.index;
        rec.modulus = std::to_string(r.modulus().m());
        rec.lhs = r.lhs.to_string();
        rec.rhs = r.rhs.to_string();
        rec.holds = r.holds;
        report.results.push_back(std::move(rec));
    }
}

CheckRecord divisibility_record(int id_rank, std::int64_t param)
{
    CheckRecord rec;
    rec.suite = "divisibility";
    rec.suite_rank = kSuiteDivisibility;
    rec.id = std::string(kDivisibilityIds[static_cast<std::size_t>(id_rank)]);
    rec.id_rank = id_rank;
    rec.param_name = "n";
    rec.param = param;
    return rec;
}

void add_divisibility(RunReport& report, const VerifyOptions& opt, const std::vector<int>& ids, Injector& inject)
{
    std::set<int> wanted(ids.begin(), ids.end());
    const std::int64_t n_max = opt.n_max;

    for (const int sign_rank : {0, 1}) {
        if (!wanted.count(sign_rank)) {
            continue;
        }
        const int sign = sign_rank == 0 ? 1 : -1;
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const NormalizedDombSum s = evaluate_thm3(n, sign);
            // lhs: the raw sum; rhs: n times the (truncated) quotient.
            Integer rhs = s.value.num() / s.value.den() * Integer(n);
            CheckRecord rec = divisibility_record(sign_rank, n);
            if (inject.fire(rec.id)) {
                rhs += Integer(1);
            }
            rec.lhs = s.sum.to_string();
            rec.rhs = rhs.to_string();
            rec.holds = s.holds() && s.sum == rhs;
            report.results.push_back(std::move(rec));
        }
    }
    if (wanted.count(2)) {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const Integer value = alternating_domb_sum(n);
            CheckRecord rec = divisibility_record(2, n);
            rec.lhs = value.to_string();
            rec.rhs = "0";
            rec.holds = value.sign() > 0 && !inject.fire(rec.id);
            report.results.push_back(std::move(rec));
        }
    }
    if (wanted.count(3) || wanted.count(4) || wanted.count(5)) {
        const MonotoneReport m = check_ratio_monotone(std::max<std::int64_t>(n_max, 3));
        const std::array<MonotoneProperty, 3> props = {MonotoneProperty::ratio_increasing,
                                                       MonotoneProperty::ratio_above_8,
                                                       MonotoneProperty::weighted_increasing};
        for (int rank = 3; rank <= 5; ++rank) {
            if (!wanted.count(rank)) {
                continue;
            }
            CheckRecord rec = divisibility_record(rank, std::max<std::int64_t>(n_max, 3));
            std::optional<std::int64_t> failure;
            if (!m.holds && m.failed_property == props[static_cast<std::size_t>(rank - 3)]) {
                failure = m.first_failure;
            }
            if (inject.fire(rec.id)) {
                failure = 0;
            }
            // lhs: first failing index; rhs: the expected "none".
            rec.lhs = failure ? std::to_string(*failure) : "none";
            rec.rhs = "none";
            rec.holds = !failure;
            report.results.push_back(std::move(rec));
        }
    }
}

std::string join(const std::vector<std::string>& v)
{
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) {
            out += ',';
        }
        out += s;
    }
    return out;
}

} // namespace

std::vector<std::string> split_ids(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

RunReport run_verify(const VerifyOptions& opt)
{
    static const std::set<std::string> kSuites = {"identities", "congruences", "divisibility", "all"};
    if (!kSuites.count(opt.suite)) {
        throw UsageError("unknown suite '" + opt.suite + "'");
    }
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("unknown format '" + opt.format + "'");
    }
    if (opt.n_max < 0) {
        throw UsageError("--n-max must be >= 0");
    }
    const bool want_id = opt.suite == "identities" || opt.suite == "all";
    const bool want_cong = opt.suite == "congruences" || opt.suite == "all";
    const bool want_div = opt.suite == "divisibility" || opt.suite == "all";
    if (want_cong) {
        if (opt.prime_lo < 5) {
            throw UsageError("--prime-lo must be >= 5");
        }
        if (opt.prime_lo > opt.prime_hi) {
            throw UsageError("--prime-lo exceeds --prime-hi");
        }
    }

    std::set<std::string> unclaimed(opt.ids.begin(), opt.ids.end());
    std::vector<IdentityId> identity_ids;
    std::vector<CongruenceId> congruence_ids;
    std::vector<int> divisibility_ids;
    if (want_id) {
        identity_ids = select<IdentityId>(kAllIdentities, parse_identity_id, opt.ids, unclaimed);
    }
    if (want_cong) {
        congruence_ids = select<CongruenceId>(kAllCongruences, parse_congruence_id, opt.ids, unclaimed);
    }
    if (want_div) {
        static constexpr std::array<int, 6> kAllDiv = {0, 1, 2, 3, 4, 5};
        divisibility_ids = select<int>(kAllDiv, parse_divisibility_id, opt.ids, unclaimed);
    }
    if (!unclaimed.empty()) {
        throw UsageError("unknown id '" + *unclaimed.begin() + "' for suite " + opt.suite);
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "verify";
    report.params = {
        {"suite", opt.suite},
        {"n_max", std::to_string(opt.n_max)},
        {"prime_lo", std::to_string(opt.prime_lo)},
        {"prime_hi", std::to_string(opt.prime_hi)},
        {"ids", opt.ids.empty() ? "all" : join(opt.ids)},
        {"format", opt.format},
    };

    Injector inject{opt.inject_failure};
    if (want_id) {
        add_identities(report, opt, identity_ids, inject);
    }
    if (want_cong) {
        add_congruences(report, opt, congruence_ids, inject);
    }
    if (want_div) {
        add_divisibility(report, opt, divisibility_ids, inject);
    }
    report.sort_results();
    if (opt.timing) {
        report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    }
    return report;
}

std::string render(const RunReport& report, const std::string& format)
{
    return format == "csv" ? to_csv(report) : to_json(report);
}

int cmd_compute(const std::string& sequence, std::int64_t n_max, std::ostream& out, std::ostream& err)
{
    std::optional<SequenceId> id;
    for (const SequenceId s : {SequenceId::domb, SequenceId::franel, SequenceId::euler, SequenceId::catalan}) {
        if (to_string(s) == sequence) {
            id = s;
        }
    }
    if (!id) {
        err << "error: unknown sequence '" << sequence << "' (expected domb, franel, euler or catalan)\n";
        return kExitUsage;
    }
    if (n_max < 0) {
        err << "error: --n-max must be >= 0\n";
        return kExitUsage;
    }
    const auto values = sequence_table(*id).prefix(n_max);
    for (std::size_t n = 0; n < values.size(); ++n) {
        out << n << ' ' << values[n] << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    RunReport report;
    try {
        report = run_verify(options);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::string text = render(report, options.format);
    if (options.out) {
        std::ofstream file(*options.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *options.out << '\n';
            return kExitUsage;
        }
        file << text;
    } else {
        out << text;
    }
    const Summary s = report.summary();
    if (s.failed > 0) {
        err << "FALSIFIED: " << s.failed << " of " << s.total << " checks failed\n";
        for (const auto& r : report.results) {
            if (!r.holds) {
                err << "  " << r.suite << ' ' << r.id << ' ' << r.param_name << '=' << r.param;
                if (r.aux_index) {
                    err << " i=" << *r.aux_index;
                }
                err << " lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
            }
        }
        return kExitFalsified;
    }
    return kExitOk;
}

int cmd_series(const std::string& which, std::int64_t k, std::int64_t k_bound, std::ostream& out, std::ostream& err)
{
    if (which != "rogers" && which != "ccl") {
        err << "error: unknown series '" << which << "' (expected rogers or ccl)\n";
        return kExitUsage;
    }
    const std::int64_t k_min = which == "rogers" ? 2 : 0;
    if (k < k_min || k > k_bound) {
        err << "error: --k must lie in [" << k_min << ", " << k_bound << "]\n";
        return kExitUsage;
    }
    const double value = which == "rogers" ? rogers_partial(k) : ccl_partial(k);
    const double target = which == "rogers" ? kRogersLimit : kCclLimit;
    std::ostringstream os;
    os << which << " K=" << k << std::fixed << std::setprecision(15) << " value=" << value << " target=" << target
       << std::scientific << std::setprecision(3) << " abs_error=" << std::fabs(value - target) << '\n';
    out << os.str();
    return kExitOk;
}

} // namespace supercong::cli
