#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "letterstat/alphabet.hpp"

namespace letterstat {

/// Per-letter counts, dense over the alphabet (zero-count letters present).
struct FrequencyTable {
  AlphabetRef alphabet;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  static FrequencyTable zeros(AlphabetRef alphabet);

  std::uint64_t count(Letter l) const { return counts[l]; }
  /// count / total, or 0 for an empty table.
  double proportion(Letter l) const;

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return *a.alphabet == *b.alphabet && a.counts == b.counts && a.total == b.total;
  }
};

/// Ordered-pair counts, row-major: counts[first * n + second].
struct DigramTable {
  AlphabetRef alphabet;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  static DigramTable zeros(AlphabetRef alphabet);

  std::uint64_t count(Letter first, Letter second) const {
    return counts[std::size_t{first} * alphabet->size() + second];
  }
  std::uint64_t row_total(Letter first) const;

  friend bool operator==(const DigramTable& a, const DigramTable& b) {
    return *a.alphabet == *b.alphabet && a.counts == b.counts && a.total == b.total;
  }
};

/// Positional tallies over words. `doubles[l]` counts adjacent equal pairs
/// "ll" inside words, so "aaa" contributes two.
struct PositionalStats {
  FrequencyTable initial;
  FrequencyTable second;
  FrequencyTable penultimate;
  FrequencyTable final;
  std::vector<std::uint64_t> doubles;
  std::uint64_t words = 0;
};

struct ConfidenceInterval {
  double estimate;
  double lower;
  double upper;
  double level;
};

struct TableDistance {
  double total_variation;
  double chi_square;
  double rank_correlation;
};

struct StabilityPoint {
  std::size_t size;
  TableDistance distance;
};

// Counting kernels. These split the sequence into per-thread chunks with
// OpenMP and merge the partial tables; the result is identical to the
// serial versions in `reference`.
FrequencyTable count_letters(const LetterSequence& seq);
DigramTable count_digrams(const LetterSequence& seq);

namespace reference {
FrequencyTable count_letters(const LetterSequence& seq);
DigramTable count_digrams(const LetterSequence& seq);
}  // namespace reference

/// Pointwise sum. Throws `Error` on alphabet mismatch.
FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b);
DigramTable merge(const DigramTable& a, const DigramTable& b);

/// Letters by non-increasing count; ties keep alphabet order.
std::vector<Letter> rank_order(const FrequencyTable& table);

/// Wilson score interval for count/total at the given two-sided level.
/// Throws `Error` when total is 0, count > total, or level is outside (0, 1).
ConfidenceInterval proportion_ci(std::uint64_t count, std::uint64_t total, double level);

/// Total variation, two-sample chi-square homogeneity statistic (pooled
/// expectations, all-zero categories skipped) and Spearman rank correlation
/// with averaged ties. Both tables must be nonempty and share an alphabet.
TableDistance compare_tables(const FrequencyTable& a, const FrequencyTable& b);

PositionalStats positional_stats(const WordSequence& words);

/// Distance from each prefix of `seq` of the requested length to the table
/// of the whole sequence. Sizes must lie in [1, seq.size()].
std::vector<StabilityPoint> stability_curve(const LetterSequence& seq,
                                            std::span<const std::size_t> sizes);

/// As stability_curve, but each sample is drawn uniformly without replacement
/// from all positions, using a SplitMix64 stream seeded by `seed`.
std::vector<StabilityPoint> stability_curve_sampled(const LetterSequence& seq,
                                                    std::span<const std::size_t> sizes,
                                                    std::uint64_t seed);

}  // namespace letterstat
