#include "letterstat/stylometry.hpp"

#include <algorithm>
#include <cmath>

#include "letterstat/error.hpp"
#include "letterstat/stats.hpp"

namespace letterstat {

Rational VCProfile::share() const {
  if (total() == 0) throw Error("vowel share of an empty profile");
  return Rational(static_cast<std::int64_t>(vowel_count), static_cast<std::int64_t>(total()));
}

VCProfile make_profile(std::uint64_t vowels, std::uint64_t consonants) {
  VCProfile p;
  p.vowel_count = vowels;
  p.consonant_count = consonants;
  const std::uint64_t total = vowels + consonants;
  p.vowel_share = total == 0 ? 0.0 : static_cast<double>(vowels) / static_cast<double>(total);
  if (consonants > 0) {
    p.vowels_per_100 = 100.0 * static_cast<double>(vowels) / static_cast<double>(consonants);
  }
  return p;
}

VCProfile vc_profile(const LetterSequence& seq) {
  const Alphabet& a = *seq.alphabet;
  const auto vowels = static_cast<std::uint64_t>(
      std::count_if(seq.symbols.begin(), seq.symbols.end(), [&](Letter l) { return a.is_vowel(l); }));
  return make_profile(vowels, seq.size() - vowels);
}

std::vector<VCProfile> block_profiles(const LetterSequence& seq, std::size_t block_size) {
  if (block_size == 0) throw Error("block_profiles: block size must be positive");
  std::vector<VCProfile> out;
  if (seq.size() < block_size) {
    out.push_back(vc_profile(seq));
    return out;
  }
  for (std::size_t start = 0; start + block_size <= seq.size(); start += block_size) {
    out.push_back(vc_profile(slice(seq, start, block_size)));
  }
  return out;
}

std::string_view to_string(AlbertiLabel label) {
  switch (label) {
    case AlbertiLabel::poetry_consistent:
      return "poetry-consistent";
    case AlbertiLabel::orator_consistent:
      return "orator-consistent";
    case AlbertiLabel::below_both:
      return "below-both";
    case AlbertiLabel::boundary:
      return "boundary";
  }
  return "unknown";
}

AlbertiVerdict alberti_test(const VCProfile& profile) {
  if (profile.total() == 0) throw Error("alberti_test: empty profile");
  const Rational share = profile.share();
  AlbertiVerdict v{share, profile.vowel_share, share > kPoetryThreshold, share > kOratorThreshold,
                   AlbertiLabel::below_both};
  if (share == kPoetryThreshold || share == kOratorThreshold) {
    v.label = AlbertiLabel::boundary;
  } else if (v.above_poetry_threshold) {
    v.label = AlbertiLabel::poetry_consistent;
  } else if (v.above_orator_threshold) {
    v.label = AlbertiLabel::orator_consistent;
  }
  return v;
}

ProportionTest two_sample_proportion_test(const VCProfile& a, const VCProfile& b) {
  if (a.total() == 0 || b.total() == 0) throw Error("two_sample_proportion_test: empty profile");
  const double na = static_cast<double>(a.total());
  const double nb = static_cast<double>(b.total());
  const double pa = static_cast<double>(a.vowel_count) / na;
  const double pb = static_cast<double>(b.vowel_count) / nb;
  const double pooled = static_cast<double>(a.vowel_count + b.vowel_count) / (na + nb);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb));
  // pooled share of 0 or 1 means both samples are all-vowel or all-consonant
  if (se == 0.0) return {0.0, 1.0};
  const double z = (pa - pb) / se;
  return {z, stats::normal_two_sided_p(z)};
}

VariationSummary compass_of_variation(std::span<const VCProfile> profiles) {
  if (profiles.empty()) throw Error("compass_of_variation: no samples");
  std::vector<double> values;
  values.reserve(profiles.size());
  for (const auto& p : profiles) {
    if (!p.vowels_per_100) throw Error("compass_of_variation: sample without consonants");
    values.push_back(*p.vowels_per_100);
  }
  std::sort(values.begin(), values.end());
  return {values.front(), values[(values.size() - 1) / 2], values.back(), values.size()};
}

std::vector<LipogramFlag> lipogram_scan(const FrequencyTable& observed,
                                        const FrequencyTable& reference, double alpha) {
  require_same_alphabet(*observed.alphabet, *reference.alphabet, "lipogram_scan");
  if (reference.total == 0) throw Error("lipogram_scan: empty reference table");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("lipogram_scan: alpha must lie in (0, 1]");
  const std::size_t n = observed.counts.size();
  const double threshold = alpha / static_cast<double>(n);
  std::vector<LipogramFlag> flags;
  for (std::size_t k = 0; k < n; ++k) {
    const auto l = static_cast<Letter>(k);
    const double q = reference.proportion(l);
    if (q == 0.0) continue;
    const double p = stats::binomial_cdf(observed.count(l), observed.total, q);
    if (p < threshold) {
      flags.push_back({l, observed.count(l), q * static_cast<double>(observed.total), p});
    }
  }
  return flags;
}

}  // namespace letterstat
