#include "letterstat/markov.hpp"

#include <algorithm>
#include <cmath>

#include "letterstat/error.hpp"
#include "letterstat/rng.hpp"
#include "letterstat/stats.hpp"

namespace letterstat {

BinarySequence to_vc_sequence(const LetterSequence& seq) {
  BinarySequence b{{}, seq.source.label};
  b.states.reserve(seq.size());
  for (Letter l : seq.symbols) {
    b.states.push_back(seq.alphabet->is_vowel(l) ? VC::vowel : VC::consonant);
  }
  return b;
}

std::string render(const BinarySequence& b) {
  std::string out(b.size(), 'C');
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.states[i] == VC::vowel) out[i] = 'V';
  }
  return out;
}

BinarySequence parse_vc(std::string_view text) {
  BinarySequence b;
  b.states.reserve(text.size());
  for (char ch : text) {
    if (ch == 'V') {
      b.states.push_back(VC::vowel);
    } else if (ch == 'C') {
      b.states.push_back(VC::consonant);
    } else {
      throw Error(std::string("parse_vc: unexpected character '") + ch + "'");
    }
  }
  return b;
}

TransitionCounts fit_transitions(const BinarySequence& b) {
  if (b.size() < 2) throw Error("fit_transitions: need at least two states");
  TransitionCounts t;
  t.initial = b.states.front();
  for (std::size_t i = 1; i < b.size(); ++i) {
    ++t.n[static_cast<std::size_t>(b.states[i - 1])][static_cast<std::size_t>(b.states[i])];
  }
  return t;
}

MarkovTestReport independence_test(const TransitionCounts& t, bool continuity_correction) {
  const double row[2] = {static_cast<double>(t.row_total(VC::vowel)),
                         static_cast<double>(t.row_total(VC::consonant))};
  if (row[0] == 0.0 || row[1] == 0.0) {
    throw Error("independence_test: a state never transitions (zero row total)");
  }
  const double col[2] = {static_cast<double>(t.n[0][0] + t.n[1][0]),
                         static_cast<double>(t.n[0][1] + t.n[1][1])};
  const double total = row[0] + row[1];

  double chi = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double expected = row[i] * col[j] / total;
      if (expected == 0.0) continue;  // empty column: observed is 0 as well
      double dev = std::fabs(static_cast<double>(t.n[i][j]) - expected);
      if (continuity_correction) dev = std::max(0.0, dev - 0.5);
      chi += dev * dev / expected;
    }
  }

  MarkovTestReport r;
  r.chi_square = chi;
  r.p_value = stats::chi_square_df1_sf(chi);
  r.p_vv = static_cast<double>(t.n[0][0]) / row[0];
  r.p_vc = static_cast<double>(t.n[0][1]) / row[0];
  r.p_cv = static_cast<double>(t.n[1][0]) / row[1];
  r.p_cc = static_cast<double>(t.n[1][1]) / row[1];
  r.continuity_corrected = continuity_correction;
  return r;
}

EntropyReport entropy_estimates(const FrequencyTable& unigram, const DigramTable& digram) {
  require_same_alphabet(*unigram.alphabet, *digram.alphabet, "entropy_estimates");
  if (unigram.total == 0 || digram.total == 0) throw Error("entropy_estimates: empty table");
  const std::size_t n = unigram.alphabet->size();

  EntropyReport r{std::log2(static_cast<double>(n)), 0.0, 0.0};
  const double total1 = static_cast<double>(unigram.total);
  for (std::uint64_t c : unigram.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total1;
    r.h1 -= p * std::log2(p);
  }

  const double total2 = static_cast<double>(digram.total);
  for (std::size_t i = 0; i < n; ++i) {
    const double row = static_cast<double>(digram.row_total(static_cast<Letter>(i)));
    if (row == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t c = digram.counts[i * n + j];
      if (c == 0) continue;
      const double cd = static_cast<double>(c);
      r.h2 -= (cd / total2) * std::log2(cd / row);
    }
  }
  // -0.0 from a single certain outcome
  r.h1 = std::max(0.0, r.h1);
  r.h2 = std::max(0.0, r.h2);
  return r;
}

namespace {

template <class Weights>
std::size_t sample_index(SplitMix64& rng, const Weights& w, std::uint64_t total) {
  std::uint64_t r = rng.below(total);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (r < w[k]) return k;
    r -= w[k];
  }
  return w.size() - 1;  // unreachable for consistent totals
}

}  // namespace

LetterSequence generate(const LanguageModel& model, std::size_t length, std::uint64_t seed,
                        int order) {
  if (order != 0 && order != 1) throw Error("generate: order must be 0 or 1");
  const AlphabetRef& alpha = model.alphabet();
  const std::size_t n = alpha->size();
  const FrequencyTable& uni = model.unigram();
  const DigramTable& di = model.digram();

  if (uni.total == 0) throw Error("generate: unigram table is empty");
  std::vector<std::uint64_t> row_totals(n, 0);
  if (order == 1) {
    for (std::size_t i = 0; i < n; ++i) row_totals[i] = di.row_total(static_cast<Letter>(i));
    for (std::size_t i = 0; i < n; ++i) {
      bool reachable = uni.counts[i] > 0;
      for (std::size_t j = 0; j < n && !reachable; ++j) reachable = di.counts[j * n + i] > 0;
      if (reachable && row_totals[i] == 0) {
        throw Error("generate: digram row for '" + render(*alpha, std::vector<Letter>{static_cast<Letter>(i)}) +
                    "' has no transitions");
      }
    }
  }

  LetterSequence out{alpha, {}, {"generated", 0}};
  out.symbols.reserve(length);
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t next;
    if (order == 0 || k == 0) {
      next = sample_index(rng, uni.counts, uni.total);
    } else {
      const std::size_t prev = out.symbols.back();
      const std::span<const std::uint64_t> row(di.counts.data() + prev * n, n);
      next = sample_index(rng, row, row_totals[prev]);
    }
    out.symbols.push_back(static_cast<Letter>(next));
  }
  return out;
}

BinarySequence generate(const TransitionCounts& t, std::size_t length, std::uint64_t seed) {
  const std::array<std::uint64_t, 2> rows{t.row_total(VC::vowel), t.row_total(VC::consonant)};
  const std::uint64_t total = rows[0] + rows[1];
  if (total == 0) throw Error("generate: transition table is empty");
  for (std::size_t i = 0; i < 2; ++i) {
    const bool reachable = rows[i] > 0 || t.n[0][i] > 0 || t.n[1][i] > 0;
    if (reachable && rows[i] == 0) throw Error("generate: a reachable state has no transitions");
  }

  BinarySequence out{{}, "generated"};
  out.states.reserve(length);
  SplitMix64 rng(seed);
  for (std::size_t k = 0; k < length; ++k) {
    std::size_t next;
    if (k == 0) {
      next = sample_index(rng, rows, total);
    } else {
      const auto prev = static_cast<std::size_t>(out.states.back());
      next = sample_index(rng, t.n[prev], rows[prev]);
    }
    out.states.push_back(static_cast<VC>(next));
  }
  return out;
}

}  // namespace letterstat
