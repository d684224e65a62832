#ifndef DSR_HARNESS_HPP
#define DSR_HARNESS_HPP

#include "dsr/report.hpp"

namespace dsr {

// Executable verification of the statements the workbench covers. Each
// check returns its reports (and sweep rows where a radius comparison grid
// is involved); outcomes are pass / fail / inconclusive with margins
// measured against cfg.eps_cmp. Runs outside a statement's hypotheses are
// recorded with asserted = false.

// Deficiency and criterion baselines (exhaustive at desk scale).
CheckResult check_lemma_2_1(int n_max, const Config& cfg);   // blossom vs deficiency formula
CheckResult check_lemma_2_2(const Config& cfg);              // criterion vs constructed factor
CheckResult check_lemma_2_4(int tuples, const Config& cfg);  // quotient radius = full radius

// Monotonicity and join-family comparisons.
CheckResult check_edge_deletion(int n_max, const Config& cfg);        // lemma 2.5
CheckResult check_join_comparisons(const Config& cfg);                // lemmas 2.6 / 2.7

// Matching-number chain.
CheckResult check_lemma_3_1(int n_max, const Config& cfg);
CheckResult check_lemma_3_3(int n, int k, int t, const Config& cfg);
CheckResult check_lemma_3_4(int k, int t, int n_lo, int n_hi, const Config& cfg);
CheckResult check_theorem_3_2(int n, int k, int t, const Config& cfg);
CheckResult check_corollary_3_5(int n, int t, const Config& cfg);

// Odd-factor chain.
CheckResult check_theorem_4_1(int n, int b, int delta, const Config& cfg);
CheckResult check_corollary_4_2(int n, int delta, const Config& cfg);

// Closed-form fidelity: determinant expansions against the hand-derived
// coefficient tables, and the two ledgered transcription deviations.
CheckResult check_charpoly_closed_forms(int samples_per_variant, const Config& cfg);
CheckResult check_transcriptions(const Config& cfg);

// Everything above at desk-scale defaults, merged and sorted.
CheckResult run_all(const Config& cfg);

// Dispatch by statement id ("2.5", "3.3", "4.1", ...). Throws on unknown id.
CheckResult run_statement(const std::string& id, const Config& cfg);

}  // namespace dsr

#endif
