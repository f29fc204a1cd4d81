#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "letterstat/cipher.hpp"
#include "letterstat/model.hpp"

namespace letterstat {

struct SolverOptions {
  std::size_t restarts = 20;
  /// Consecutive non-improving sweeps that end a restart.
  std::size_t max_stale = 1;
  std::uint64_t seed = 0;
  std::size_t length_threshold = kDefaultLengthThreshold;
  /// Run restarts on OpenMP threads. The report is identical either way.
  bool parallel = true;
};

struct SolverReport {
  SubstitutionKey best_key;
  double best_score;
  LetterSequence plaintext;
  std::size_t restarts_run;
  std::optional<LengthWarning> length_warning;

  // diagnostics
  SubstitutionKey seed_key;
  double seed_score;
  std::size_t best_restart;
  std::vector<double> restart_scores;
};

/// Hill climbing over substitution keys.
///
/// Restart 0 starts from `frequency_match_key` against the model's unigram
/// table; restart r > 0 starts from a random key seeded by
/// derive_seed(seed, r). Each sweep scores every swap of two mapping targets
/// and applies the best one if it strictly improves the score. The best
/// restart wins; equal scores go to the lowest restart index.
SolverReport hill_climb_solve(const Cryptogram& c, const LanguageModel& model,
                              const SolverOptions& options = {});

}  // namespace letterstat
