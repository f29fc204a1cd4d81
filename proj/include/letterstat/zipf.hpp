#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "letterstat/alphabet.hpp"

namespace letterstat {

struct RankEntry {
  std::size_t rank;
  Word word;
  std::uint64_t count;
};

/// Distinct words by non-increasing count, ranks 1..k; equal counts are
/// ordered lexicographically by alphabet order.
struct RankFrequency {
  AlphabetRef alphabet;
  std::vector<RankEntry> entries;
};

/// Throws `Error` for an empty word sequence.
RankFrequency word_rank_frequency(const WordSequence& words);

struct RankCount {
  double rank;
  double count;
};

struct PowerLawFit {
  double exponent;
  double intercept;
  double r_squared;
  std::size_t points_used;
};

inline constexpr double kDefaultMinCount = 5.0;

/// Ordinary least squares of ln(count) on ln(rank) over the points with
/// count >= min_count; exponent = -slope. Needs at least two usable points
/// with distinct ranks.
PowerLawFit fit_power_law(std::span<const RankCount> points, double min_count = kDefaultMinCount);
PowerLawFit fit_power_law(const RankFrequency& rf, double min_count = kDefaultMinCount);

}  // namespace letterstat
