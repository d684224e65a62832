#ifndef DSR_REPORT_HPP
#define DSR_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dsr {

// Harness configuration. Every knob that can influence a reported number
// lives here so that identical configs reproduce byte-identical reports.
struct Config {
    double eps_cmp = 1e-7;          // strict-inequality comparison margin
    double power_tol = 1e-13;       // power-iteration relative tolerance
    long power_iteration_cap = 1'000'000;
    int exhaustive_max_n = 7;       // labeled-enumeration cap
    int subset_max_n = 24;          // subset-enumeration cap
    bool parallel = true;
    int threads = 0;                // 0: leave the OpenMP default alone
    std::uint64_t seed = 987654321; // drives every randomized grid

    // tolerances must be positive, caps within the module limits
    void validate() const;
};

enum class Outcome { pass, fail, inconclusive };

const char* outcome_name(Outcome o);

// One check outcome. Failures always carry a machine-checkable witness
// (graph6 string and/or the two sides of the violated inequality).
// `asserted` is false for runs outside a statement's hypotheses, which are
// recorded for the data but never gate the exit code. wall_ms is for human
// output only and is never serialized into the canonical JSON.
struct VerificationReport {
    std::string check;
    std::string params;
    Outcome outcome = Outcome::pass;
    double margin = 0.0;
    std::string witness;
    bool asserted = true;
    double wall_ms = 0.0;
};

// One row of a radius-comparison sweep (CSV output).
struct SweepRow {
    std::string check;
    int n = 0, s = 0, k = 0, b = 0, delta = 0, t = 0;
    double mu_s = 0.0, mu_ref = 0.0, margin = 0.0;
    std::string outcome;
};

struct CheckResult {
    std::vector<VerificationReport> reports;
    std::vector<SweepRow> sweep;

    void append(CheckResult&& other);
};

// Deterministic ordering: reports by (check, params), sweep rows by
// (check, n, s, k, b, delta, t).
void sort_results(CheckResult& r);

// Canonical JSON (schema dsr-report/1): compact, fixed key order, doubles
// with 17 significant digits. Identical config + results give identical
// bytes.
void write_json(std::ostream& os, const CheckResult& r, const Config& cfg);

// CSV sweep table: check,n,s,k,b,delta,t,mu_s,mu_ref,margin,outcome.
void write_csv(std::ostream& os, const CheckResult& r);

// 0 = all asserted checks pass, 1 = some asserted fail,
// 2 = asserted inconclusive but no fail.
int exit_code(const CheckResult& r);

std::string format_double(double v);  // %.17g, C locale

}  // namespace dsr

#endif
