#include "letterstat/freq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "letterstat/error.hpp"
#include "letterstat/rng.hpp"
#include "letterstat/stats.hpp"

namespace letterstat {

namespace {

// Below this many symbols the thread start-up costs more than the count.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 15;

void check_nonempty(const FrequencyTable& t, const char* what) {
  if (t.total == 0) throw Error(std::string(what) + ": empty frequency table");
}

FrequencyTable count_span(const AlphabetRef& alphabet, std::span<const Letter> symbols) {
  FrequencyTable t = FrequencyTable::zeros(alphabet);
  for (Letter l : symbols) ++t.counts[l];
  t.total = symbols.size();
  return t;
}

}  // namespace

FrequencyTable FrequencyTable::zeros(AlphabetRef alphabet) {
  FrequencyTable t;
  t.counts.assign(alphabet->size(), 0);
  t.alphabet = std::move(alphabet);
  return t;
}

double FrequencyTable::proportion(Letter l) const {
  return total == 0 ? 0.0 : static_cast<double>(counts[l]) / static_cast<double>(total);
}

DigramTable DigramTable::zeros(AlphabetRef alphabet) {
  DigramTable t;
  t.counts.assign(alphabet->size() * alphabet->size(), 0);
  t.alphabet = std::move(alphabet);
  return t;
}

std::uint64_t DigramTable::row_total(Letter first) const {
  const std::size_t n = alphabet->size();
  const auto row = counts.begin() + static_cast<std::ptrdiff_t>(std::size_t{first} * n);
  return std::accumulate(row, row + static_cast<std::ptrdiff_t>(n), std::uint64_t{0});
}

namespace reference {

FrequencyTable count_letters(const LetterSequence& seq) {
  return count_span(seq.alphabet, seq.symbols);
}

DigramTable count_digrams(const LetterSequence& seq) {
  DigramTable t = DigramTable::zeros(seq.alphabet);
  const std::size_t n = seq.alphabet->size();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    ++t.counts[std::size_t{seq.symbols[i - 1]} * n + seq.symbols[i]];
  }
  t.total = seq.size() < 2 ? 0 : seq.size() - 1;
  return t;
}

}  // namespace reference

FrequencyTable count_letters(const LetterSequence& seq) {
  const auto len = static_cast<std::ptrdiff_t>(seq.size());
  const std::size_t n = seq.alphabet->size();
  const Letter* s = seq.symbols.data();
  FrequencyTable t = FrequencyTable::zeros(seq.alphabet);

#pragma omp parallel if (len >= kParallelThreshold)
  {
    std::vector<std::uint64_t> local(n, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < len; ++i) ++local[s[i]];
#pragma omp critical(letterstat_count_letters)
    for (std::size_t k = 0; k < n; ++k) t.counts[k] += local[k];
  }
  t.total = seq.size();
  return t;
}

DigramTable count_digrams(const LetterSequence& seq) {
  const auto len = static_cast<std::ptrdiff_t>(seq.size());
  const std::size_t n = seq.alphabet->size();
  const Letter* s = seq.symbols.data();
  DigramTable t = DigramTable::zeros(seq.alphabet);

#pragma omp parallel if (len >= kParallelThreshold)
  {
    std::vector<std::uint64_t> local(n * n, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 1; i < len; ++i) ++local[std::size_t{s[i - 1]} * n + s[i]];
#pragma omp critical(letterstat_count_digrams)
    for (std::size_t k = 0; k < n * n; ++k) t.counts[k] += local[k];
  }
  t.total = len < 2 ? 0 : static_cast<std::uint64_t>(len - 1);
  return t;
}

FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b) {
  require_same_alphabet(*a.alphabet, *b.alphabet, "merge");
  FrequencyTable out = a;
  for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] += b.counts[k];
  out.total += b.total;
  return out;
}

DigramTable merge(const DigramTable& a, const DigramTable& b) {
  require_same_alphabet(*a.alphabet, *b.alphabet, "merge");
  DigramTable out = a;
  for (std::size_t k = 0; k < out.counts.size(); ++k) out.counts[k] += b.counts[k];
  out.total += b.total;
  return out;
}

std::vector<Letter> rank_order(const FrequencyTable& table) {
  std::vector<Letter> order(table.counts.size());
  std::iota(order.begin(), order.end(), Letter{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Letter x, Letter y) { return table.counts[x] > table.counts[y]; });
  return order;
}

ConfidenceInterval proportion_ci(std::uint64_t count, std::uint64_t total, double level) {
  if (total == 0) throw Error("proportion_ci: total must be positive");
  if (count > total) throw Error("proportion_ci: count exceeds total");
  if (!(level > 0.0 && level < 1.0)) throw Error("proportion_ci: level must lie in (0, 1)");

  const double n = static_cast<double>(total);
  const double p = static_cast<double>(count) / n;
  const double z = stats::normal_quantile(1.0 - (1.0 - level) / 2.0);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));

  ConfidenceInterval ci{p, center - half, center + half, level};
  if (count == 0) ci.lower = 0.0;
  if (count == total) ci.upper = 1.0;
  ci.lower = std::clamp(ci.lower, 0.0, p);
  ci.upper = std::clamp(ci.upper, p, 1.0);
  return ci;
}

TableDistance compare_tables(const FrequencyTable& a, const FrequencyTable& b) {
  require_same_alphabet(*a.alphabet, *b.alphabet, "compare_tables");
  check_nonempty(a, "compare_tables");
  check_nonempty(b, "compare_tables");

  const std::size_t n = a.counts.size();
  const double ta = static_cast<double>(a.total);
  const double tb = static_cast<double>(b.total);
  const double pooled_total = ta + tb;

  double l1 = 0.0;
  double chi = 0.0;
  std::vector<double> pa(n);
  std::vector<double> pb(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ca = static_cast<double>(a.counts[k]);
    const double cb = static_cast<double>(b.counts[k]);
    pa[k] = ca / ta;
    pb[k] = cb / tb;
    l1 += std::fabs(pa[k] - pb[k]);
    const double pooled = ca + cb;
    if (pooled == 0.0) continue;
    const double ea = pooled * ta / pooled_total;
    const double eb = pooled * tb / pooled_total;
    chi += (ca - ea) * (ca - ea) / ea + (cb - eb) * (cb - eb) / eb;
  }

  const auto ra = stats::average_ranks(pa);
  const auto rb = stats::average_ranks(pb);
  return {std::min(1.0, l1 / 2.0), chi, stats::pearson(ra, rb)};
}

PositionalStats positional_stats(const WordSequence& words) {
  const AlphabetRef& alpha = words.alphabet;
  PositionalStats ps{FrequencyTable::zeros(alpha), FrequencyTable::zeros(alpha),
                     FrequencyTable::zeros(alpha), FrequencyTable::zeros(alpha),
                     std::vector<std::uint64_t>(alpha->size(), 0), words.size()};
  auto bump = [](FrequencyTable& t, Letter l) {
    ++t.counts[l];
    ++t.total;
  };
  for (const Word& w : words.words) {
    if (w.empty()) continue;
    bump(ps.initial, w.front());
    bump(ps.final, w.back());
    if (w.size() >= 2) {
      bump(ps.second, w[1]);
      bump(ps.penultimate, w[w.size() - 2]);
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1]) ++ps.doubles[w[i]];
    }
  }
  return ps;
}

namespace {

void check_sizes(const LetterSequence& seq, std::span<const std::size_t> sizes) {
  if (seq.empty()) throw Error("stability_curve: empty sequence");
  for (std::size_t s : sizes) {
    if (s == 0) throw Error("stability_curve: sample sizes must be positive");
    if (s > seq.size()) {
      throw Error("stability_curve: sample size " + std::to_string(s) + " exceeds corpus length " +
                  std::to_string(seq.size()));
    }
  }
}

}  // namespace

std::vector<StabilityPoint> stability_curve(const LetterSequence& seq,
                                            std::span<const std::size_t> sizes) {
  check_sizes(seq, sizes);
  const FrequencyTable full = count_letters(seq);
  std::vector<StabilityPoint> out;
  out.reserve(sizes.size());
  for (std::size_t s : sizes) {
    const auto prefix = std::span<const Letter>(seq.symbols).first(s);
    out.push_back({s, compare_tables(count_span(seq.alphabet, prefix), full)});
  }
  return out;
}

std::vector<StabilityPoint> stability_curve_sampled(const LetterSequence& seq,
                                                    std::span<const std::size_t> sizes,
                                                    std::uint64_t seed) {
  check_sizes(seq, sizes);
  const FrequencyTable full = count_letters(seq);
  std::vector<StabilityPoint> out;
  out.reserve(sizes.size());
  std::vector<std::size_t> positions(seq.size());
  for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
    const std::size_t s = sizes[idx];
    SplitMix64 rng(derive_seed(seed, idx));
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // partial Fisher-Yates: the first s slots become the sample
    FrequencyTable sample = FrequencyTable::zeros(seq.alphabet);
    for (std::size_t i = 0; i < s; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(positions.size() - i));
      std::swap(positions[i], positions[j]);
      ++sample.counts[seq.symbols[positions[i]]];
    }
    sample.total = s;
    out.push_back({s, compare_tables(sample, full)});
  }
  return out;
}

}  // namespace letterstat
