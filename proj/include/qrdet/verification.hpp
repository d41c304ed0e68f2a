// The sweep engine: enumerates (p, d, m) tuples inside a configured space,
// runs every requested check on its hypothesis set, and streams one
// TheoremReport per tuple. Mathematical failures are reports, never errors.
#pragma once

#include <functional>
#include <vector>

#include "qrdet/report.hpp"

namespace qrdet {

struct SweepConfig {
  enum class DMode { all, sampled, list };
  enum class MMode { tail, full, list };

  u32 p_min = 5;
  u32 p_max = 61;

  DMode d_mode = DMode::all;
  u32 d_sample_count = 8;   // per symbol class, sampled mode only
  std::vector<i64> d_list;  // list mode only; reduced mod p per prime

  MMode m_mode = MMode::full;
  std::vector<u64> m_list;  // list mode only

  std::vector<CheckId> checks;  // empty means every check
  u64 rng_seed = 0;
  bool emit_skipped = false;  // report out-of-hypothesis tuples as skipped
  unsigned jobs = 1;          // prime-level parallelism

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

/// Preset configurations: 1 = exhaustive p <= 61, 2 = tail exponents
/// p <= 149, 3 = sampled d for 149 < p <= 499.
SweepConfig tier_config(int tier);

struct SweepSummary {
  u64 checks_run = 0;  // pass + fail
  u64 pass = 0;
  u64 fail = 0;
  u64 skipped = 0;
};

/// Return false from the sink to stop the sweep early.
using ReportSink = std::function<bool(const TheoremReport&)>;

/// Runs every requested check over the configured space. Reports stream in
/// a deterministic order (p, then check, then d, then m) regardless of the
/// job count.
SweepSummary run_sweep(const SweepConfig& config, const ReportSink& sink);

std::vector<TheoremReport> collect_sweep(const SweepConfig& config);

struct IdentitySummary {
  u64 trials = 0;
  u64 checks_run = 0;
  u64 failures = 0;
};

/// Randomized cross-validation: per trial, one polynomial-kernel matrix
/// checked against its product closed form, and one unstructured matrix
/// checked elimination-vs-permutation-oracle. Failures stream to the sink.
IdentitySummary run_randomized_identities(const std::vector<u32>& p_set, u64 trials,
                                          u64 rng_seed, const ReportSink& sink = nullptr);

}  // namespace qrdet
