#include "dsr/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <cstdio>
#include <tuple>

namespace dsr {

void Config::validate() const {
    if (!(eps_cmp > 0)) throw std::invalid_argument("config: eps_cmp must be positive");
    if (!(power_tol > 0)) throw std::invalid_argument("config: power_tol must be positive");
    if (power_iteration_cap < 1)
        throw std::invalid_argument("config: power_iteration_cap must be >= 1");
    if (exhaustive_max_n < 1 || exhaustive_max_n > 8)
        throw std::invalid_argument("config: exhaustive_max_n must be 1..8");
    if (subset_max_n < 1 || subset_max_n > 24)
        throw std::invalid_argument("config: subset_max_n must be 1..24");
    if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

void CheckResult::append(CheckResult&& other) {
    reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()),
                   std::make_move_iterator(other.reports.end()));
    sweep.insert(sweep.end(), std::make_move_iterator(other.sweep.begin()),
                 std::make_move_iterator(other.sweep.end()));
}

void sort_results(CheckResult& r) {
    std::stable_sort(r.reports.begin(), r.reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         return std::tie(a.check, a.params) < std::tie(b.check, b.params);
                     });
    std::stable_sort(r.sweep.begin(), r.sweep.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.check, a.n, a.s, a.k, a.b, a.delta, a.t) <
               std::tie(b.check, b.n, b.s, b.k, b.b, b.delta, b.t);
    });
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

void write_json(std::ostream& os, const CheckResult& r, const Config& cfg) {
    int pass = 0, fail = 0, inconclusive = 0, advisory = 0;
    for (const auto& rep : r.reports) {
        if (!rep.asserted) {
            ++advisory;
            continue;
        }
        switch (rep.outcome) {
            case Outcome::pass: ++pass; break;
            case Outcome::fail: ++fail; break;
            case Outcome::inconclusive: ++inconclusive; break;
        }
    }
    os << "{\"schema\":\"dsr-report/1\",\"config\":{"
       << "\"eps_cmp\":" << format_double(cfg.eps_cmp)
       << ",\"power_tol\":" << format_double(cfg.power_tol)
       << ",\"power_iteration_cap\":" << cfg.power_iteration_cap
       << ",\"exhaustive_max_n\":" << cfg.exhaustive_max_n
       << ",\"subset_max_n\":" << cfg.subset_max_n
       << ",\"seed\":" << cfg.seed << "},\"reports\":[";
    bool first = true;
    for (const auto& rep : r.reports) {
        if (!first) os << ',';
        first = false;
        os << "{\"check\":\"" << json_escape(rep.check) << "\",\"params\":\""
           << json_escape(rep.params) << "\",\"outcome\":\"" << outcome_name(rep.outcome)
           << "\",\"asserted\":" << (rep.asserted ? "true" : "false")
           << ",\"margin\":" << format_double(rep.margin) << ",\"witness\":\""
           << json_escape(rep.witness) << "\"}";
    }
    os << "],\"summary\":{\"pass\":" << pass << ",\"fail\":" << fail
       << ",\"inconclusive\":" << inconclusive << ",\"advisory\":" << advisory << "}}\n";
}

void write_csv(std::ostream& os, const CheckResult& r) {
    os << "check,n,s,k,b,delta,t,mu_s,mu_ref,margin,outcome\n";
    for (const auto& row : r.sweep) {
        os << row.check << ',' << row.n << ',' << row.s << ',' << row.k << ',' << row.b << ','
           << row.delta << ',' << row.t << ',' << format_double(row.mu_s) << ','
           << format_double(row.mu_ref) << ',' << format_double(row.margin) << ','
           << row.outcome << '\n';
    }
}

int exit_code(const CheckResult& r) {
    bool any_fail = false, any_inconclusive = false;
    for (const auto& rep : r.reports) {
        if (!rep.asserted) continue;
        if (rep.outcome == Outcome::fail) any_fail = true;
        if (rep.outcome == Outcome::inconclusive) any_inconclusive = true;
    }
    if (any_fail) return 1;
    if (any_inconclusive) return 2;
    return 0;
}

}  // namespace dsr
