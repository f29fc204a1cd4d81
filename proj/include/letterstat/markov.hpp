#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "letterstat/alphabet.hpp"
#include "letterstat/freq.hpp"
#include "letterstat/model.hpp"

namespace letterstat {

enum class VC : std::uint8_t { vowel = 0, consonant = 1 };

struct BinarySequence {
  std::vector<VC> states;
  std::string source;

  std::size_t size() const noexcept { return states.size(); }
};

BinarySequence to_vc_sequence(const LetterSequence& seq);

/// "VCCV..." rendering, and its inverse (any other character is an error).
std::string render(const BinarySequence& b);
BinarySequence parse_vc(std::string_view text);

/// Counts of adjacent state pairs, indexed [from][to] with V = 0, C = 1.
struct TransitionCounts {
  std::array<std::array<std::uint64_t, 2>, 2> n{};
  std::optional<VC> initial;

  std::uint64_t count(VC from, VC to) const {
    return n[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }
  std::uint64_t row_total(VC from) const {
    const auto& r = n[static_cast<std::size_t>(from)];
    return r[0] + r[1];
  }
  std::uint64_t total() const { return n[0][0] + n[0][1] + n[1][0] + n[1][1]; }
};

/// Throws `Error` for sequences shorter than 2.
TransitionCounts fit_transitions(const BinarySequence& b);

struct MarkovTestReport {
  double chi_square;
  int degrees_of_freedom = 1;
  double p_value;
  double p_vc;
  double p_cv;
  double p_vv;
  double p_cc;
  bool continuity_corrected = false;
};

/// Pearson chi-square on the 2×2 transition table against the product of
/// its margins; p-value from the one-degree-of-freedom tail. With
/// `continuity_correction` each cell uses (|O − E| − 0.5)², floored at 0.
/// Throws `Error` if either row total is zero.
MarkovTestReport independence_test(const TransitionCounts& t, bool continuity_correction = false);

struct EntropyReport {
  double h0;
  double h1;
  double h2;
};

/// Bits per letter. h0 = log2 |A|; h1 is the unigram entropy; h2 is the
/// conditional entropy of the second letter of a pair given the first, with
/// the conditionals normalized by the digram row totals.
///
/// h2 <= h1 is guaranteed when the unigram table is the second-position
/// marginal of the digram table (e.g. cyclic counting). Tables counted from
/// one linear text differ from that by the first letter only.
EntropyReport entropy_estimates(const FrequencyTable& unigram, const DigramTable& digram);

/// Samples `length` letters. Order 0 draws i.i.d. from the unigram counts;
/// order 1 draws the first letter from the unigram counts and each next
/// letter from the digram row of the previous one. Sampling is integer:
/// with weights w and W = Σw, r = rng.below(W) selects the first index
/// whose running sum exceeds r.
LetterSequence generate(const LanguageModel& model, std::size_t length, std::uint64_t seed,
                        int order = 1);

/// Order-1 chain over {V, C}; the initial state is drawn from the row
/// totals.
BinarySequence generate(const TransitionCounts& t, std::size_t length, std::uint64_t seed);

}  // namespace letterstat
