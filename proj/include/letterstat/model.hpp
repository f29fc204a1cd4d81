#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "letterstat/alphabet.hpp"
#include "letterstat/freq.hpp"

namespace letterstat {

inline constexpr double kDefaultSmoothing = 0.5;

/// Unigram and digram counts of a reference language, with an additive
/// pseudo-count used when scoring.
///
/// The smoothed transition log-probability is
///     log((count(first, second) + λ) / (count(first) + λ·|A|))
/// with count(first) taken from the unigram table.
class LanguageModel {
 public:
  LanguageModel(FrequencyTable unigram, DigramTable digram, double smoothing = kDefaultSmoothing);

  static LanguageModel train(const LetterSequence& corpus, double smoothing = kDefaultSmoothing);
  /// Empty tables: every transition gets probability 1/|A|.
  static LanguageModel uniform(AlphabetRef alphabet, double smoothing = kDefaultSmoothing);

  const AlphabetRef& alphabet() const noexcept { return unigram_.alphabet; }
  const FrequencyTable& unigram() const noexcept { return unigram_; }
  const DigramTable& digram() const noexcept { return digram_; }
  double smoothing() const noexcept { return smoothing_; }

  double log_prob(Letter first, Letter second) const {
    return log_probs_[std::size_t{first} * alphabet()->size() + second];
  }
  /// Row-major |A|×|A| matrix of log_prob values.
  std::span<const double> log_probs() const noexcept { return log_probs_; }

 private:
  FrequencyTable unigram_;
  DigramTable digram_;
  double smoothing_;
  std::vector<double> log_probs_;
};

/// Sum of smoothed transition log-probabilities over adjacent pairs.
/// Throws `Error` for an empty sequence or an alphabet mismatch.
double score(const LetterSequence& seq, const LanguageModel& model);

/// Dot product of a row-major pair-count matrix with the model's log_probs,
/// accumulated in row-major order over nonzero counts. `score` and the
/// solver both reduce to this, so their values agree bit for bit.
double score_counts(std::span<const std::uint64_t> pair_counts, const LanguageModel& model);

/// A model on disk is a directory holding `unigram.csv` and `digram.csv`.
void save_model(const LanguageModel& model, const std::filesystem::path& dir);
LanguageModel load_model(const std::filesystem::path& dir, AlphabetRef alphabet,
                         double smoothing = kDefaultSmoothing);

}  // namespace letterstat
