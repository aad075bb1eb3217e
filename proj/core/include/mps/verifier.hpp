#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mps/sequences.hpp"

namespace mps {

/// One offending run found by a sweep. Fields are preformatted literals so
/// reports serialize identically regardless of how they were produced.
struct Counterexample {
  int initial_index;        // joint ontic state index, 0..63
  std::string sequence;     // settings joined with ';'
  std::string observable;   // offending observable, or check-specific detail
  std::string values;       // the conflicting values observed
};

struct VerificationReport {
  std::string check;
  std::string universe;     // what was enumerated
  long long universe_size;
  bool pass;
  std::vector<Counterexample> counterexamples;
  std::optional<double> runtime_ms;  // filled only on request; reports stay
                                     // byte-stable without it
};

/// Enumerates all 64 point initial states x all ordered sequences of family
/// settings with length 1..max_len; passes iff every observable measured
/// more than once in a trace receives the same value each time.
VerificationReport check_repeatability(const std::vector<MeasurementSetting>& family,
                                       const std::string& family_label, int max_len,
                                       int workers = 1,
                                       const NonlocalTable& table = NonlocalTable::standard());

/// All 60 (setting, outcome) pairs: re-measuring the assigned post-state
/// must reproduce the outcome as the only branch, with the same post-state.
VerificationReport check_eigenstates(const NonlocalTable& table = NonlocalTable::standard());

/// First measurements are faithful: on every point state, every setting
/// yields a single branch whose outcome equals the observables evaluated on
/// the underlying ontic state.
VerificationReport check_faithfulness(const NonlocalTable& table = NonlocalTable::standard());

/// The four direct-pattern states partition the 32 joint states with an odd
/// number of -1 direct parities; the four swapped-pattern states partition
/// the 32 with an even number of -1 swapped parities; all supports have
/// size 8 with uniform weight 1/8.
VerificationReport check_support_partition();

/// Products of the six contexts from one initial ontic state.
struct SquareResult {
  std::array<Sign, 6> products;  // kAllContexts order: R1 R2 R3 C1 C2 C3
  int witness;                   // sum of the five +1 contexts minus C3
};

/// External constant: the noncontextual bound of the contextuality
/// inequality the witness is compared against. Not derived in this model;
/// taken from the inequality literature.
inline constexpr int kNoncontextualBound = 4;

/// Ordered two-setting sequence for a non-local context; local contexts run
/// their single setting once. order_index selects one of the 6 ordered
/// pairs of distinct family settings.
std::array<MeasurementSetting, 2> nonlocal_order(ContextId context, int order_index);

/// Runs each context independently from point_state(initial) (fresh
/// preparation per context, as the square compares contexts counterfactually)
/// and multiplies the assigned values.
SquareResult square_products(const JointOnticState& initial, int order_index = 0,
                             const NonlocalTable& table = NonlocalTable::standard());

/// Sweep of square_products over all 64 initials x all 6 non-local orders;
/// passes iff the products are always (+1,+1,+1,+1,+1,-1) and the witness 6.
VerificationReport check_square(int workers = 1,
                                const NonlocalTable& table = NonlocalTable::standard());

/// Negative control: the mixed family {XX&YY, X1 & X2} must FAIL
/// repeatability. This check passes iff a counterexample of length <= 3
/// exists in which Y1Y2 flips.
VerificationReport check_mixed_family_incompatibility();

/// The full suite: eigenstates, faithfulness, repeatability of both table
/// families, the square sweep, the support partition, and the mixed-family
/// negative control. Deterministic output for any worker count.
std::vector<VerificationReport> exhaustive_verify(
    int max_len = 4, int workers = 1, bool with_timings = false,
    const NonlocalTable& table = NonlocalTable::standard());

}  // namespace mps
