#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "letterstat/alphabet.hpp"
#include "letterstat/freq.hpp"
#include "letterstat/rational.hpp"

namespace letterstat {

struct VCProfile {
  std::uint64_t vowel_count = 0;
  std::uint64_t consonant_count = 0;
  /// V / (V + C); 0 for an empty profile.
  double vowel_share = 0.0;
  /// 100 V / C; absent when there are no consonants.
  std::optional<double> vowels_per_100;

  std::uint64_t total() const noexcept { return vowel_count + consonant_count; }
  /// Exact V / (V + C). Requires a nonempty profile.
  Rational share() const;
};

VCProfile make_profile(std::uint64_t vowels, std::uint64_t consonants);
VCProfile vc_profile(const LetterSequence& seq);

/// Consecutive fixed-size blocks; a trailing partial block is dropped unless
/// it is the only block.
std::vector<VCProfile> block_profiles(const LetterSequence& seq, std::size_t block_size = 1000);

inline constexpr Rational kPoetryThreshold{7, 16};
inline constexpr Rational kOratorThreshold{3, 7};

enum class AlbertiLabel { poetry_consistent, orator_consistent, below_both, boundary };

std::string_view to_string(AlbertiLabel label);

struct AlbertiVerdict {
  Rational share;
  double vowel_share;
  bool above_poetry_threshold;
  bool above_orator_threshold;
  AlbertiLabel label;
};

/// Strict comparisons of the exact vowel share against 7/16 and 3/7.
///
///   share > 7/16         poetry-consistent
///   3/7 < share < 7/16   orator-consistent
///   share < 3/7          below-both
///   share = 7/16 or 3/7  boundary
AlbertiVerdict alberti_test(const VCProfile& profile);

struct ProportionTest {
  double z;
  double p_value;
};

/// Pooled two-proportion z-test on vowel shares, two-sided p-value.
ProportionTest two_sample_proportion_test(const VCProfile& a, const VCProfile& b);

struct VariationSummary {
  double minimum;
  double median;
  double maximum;
  std::size_t sample_count;
};

/// Range of vowels-per-100-consonants across samples. For an even number
/// of samples the median is the lower of the two middle values.
VariationSummary compass_of_variation(std::span<const VCProfile> profiles);

struct LipogramFlag {
  Letter letter;
  std::uint64_t observed;
  double expected;
  double p_value;
};

/// Letters that are significantly rarer than the reference predicts.
/// p-value = P(X <= observed) for X ~ Binomial(observed.total, reference
/// share); a letter is flagged when p < alpha / |A|. Letters absent from the
/// reference are never flagged.
std::vector<LipogramFlag> lipogram_scan(const FrequencyTable& observed,
                                        const FrequencyTable& reference, double alpha);

}  // namespace letterstat
