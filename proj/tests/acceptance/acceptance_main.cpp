// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Tolerances and oracle values are fixed here and nowhere else.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "letterstat/letterstat.hpp"
#include "letterstat/utf8.hpp"
#include "test_support.hpp"

namespace {

using namespace letterstat;
using Clock = std::chrono::steady_clock;

// AC2 oracle: Wilson interval, 400 of 2320 at 95%, computed independently.
constexpr double kWilsonLower = 0.15758767094264614;
constexpr double kWilsonUpper = 0.18832295724135595;
constexpr double kWilsonTol = 1e-9;

// AC3
constexpr std::size_t kHalfLetters = 10000;
constexpr double kHalvesMaxTV = 0.02;
constexpr std::size_t kTopK = 6;
constexpr double kStabilitySeconds = 1.0;

// AC4
constexpr std::size_t kPlainBegin = 250000;
constexpr std::size_t kPlainLetters = 2000;
constexpr std::size_t kTrainLetters = 200000;
constexpr std::size_t kTrials = 10;
constexpr std::size_t kRestarts = 20;
constexpr std::size_t kMinCorrectEntries = 24;
constexpr std::size_t kMinGoodTrials = 9;
constexpr double kSolveSeconds = 10.0;

// AC5
constexpr std::size_t kMarkovLetters = 20000;
constexpr double kMarkovMaxP = 1e-6;
constexpr int kShuffles = 100;
constexpr double kShuffleAlpha = 0.05;
constexpr int kShuffleMinReject = 1;
constexpr int kShuffleMaxReject = 11;

// AC6, AC7
constexpr double kExactTol = 1e-9;
constexpr int kRandomTables = 1000;
constexpr double kZipfSampledTol = 0.1;
constexpr int kZipfTokens = 100000;

// AC8
constexpr int kAlgebraCases = 1000;

// AC9
constexpr std::size_t kLipogramLetters = 5000;
constexpr double kLipogramAlpha = 1e-6;
constexpr double kNullAlpha = 0.01;
constexpr int kNullTrials = 100;
constexpr int kNullMinClean = 95;

struct Outcome {
  bool pass;
  std::string detail;
};

const AlphabetRef& en() {
  static const AlphabetRef a = builtin_alphabet("en");
  return a;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome ac1_thresholds() {
  const Rational gap = kPoetryThreshold - kOratorThreshold;
  const bool gap_ok = gap == Rational(1, 112) && gap < Rational(1, 100);
  const auto v = alberti_test(make_profile(300, 400));
  const bool verdict_ok = v.share == kOratorThreshold && v.label == AlbertiLabel::boundary &&
                          !v.above_orator_threshold;
  return {gap_ok && verdict_ok,
          fmt("7/16 - 3/7 = %s; (300,400) share %s label %s", gap.to_string().c_str(),
              v.share.to_string().c_str(), std::string(to_string(v.label)).c_str())};
}

Outcome ac2_ibn_adlan() {
  const auto alpha = Alphabet::make("adlan", U"hlmnwyā", U"ā");
  const auto ref = std::make_shared<const Alphabet>(alpha);
  auto t = FrequencyTable::zeros(ref);
  // counts listed in the order they are to come out
  const std::u32string expected = U"ālmhwyn";
  const std::uint64_t counts[] = {600, 400, 320, 270, 260, 250, 220};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    t.counts[*ref->index_of(expected[i])] = counts[i];
    t.total += counts[i];
  }
  const std::string got = render(*ref, rank_order(t));
  const bool rank_ok = got == utf8::encode(expected);
  const auto ci = proportion_ci(400, t.total, 0.95);
  const bool ci_ok = std::fabs(ci.lower - kWilsonLower) <= kWilsonTol &&
                     std::fabs(ci.upper - kWilsonUpper) <= kWilsonTol;
  return {rank_ok && ci_ok && t.total == 2320,
          fmt("rank %s; Wilson 400/%llu = [%.12f, %.12f]", got.c_str(),
              static_cast<unsigned long long>(t.total), ci.lower, ci.upper)};
}

Outcome ac3_stability() {
  const auto t0 = Clock::now();
  const auto& corpus = testing::english_corpus();
  const auto first = count_letters(slice(corpus, 0, kHalfLetters));
  const auto second = count_letters(slice(corpus, kHalfLetters, kHalfLetters));
  const double tv = compare_tables(first, second).total_variation;
  auto top = [](const FrequencyTable& t) {
    auto r = rank_order(t);
    r.resize(kTopK);
    return render(*t.alphabet, r);
  };
  const std::string top_a = top(first);
  const std::string top_b = top(second);
  const auto head = slice(corpus, 0, 2 * kHalfLetters);
  const std::vector<std::size_t> sizes{90, kHalfLetters};
  const auto curve = stability_curve(head, sizes);
  const bool curve_ok = curve[1].distance.total_variation < curve[0].distance.total_variation;
  const double secs = seconds_since(t0);
  return {tv < kHalvesMaxTV && top_a == top_b && curve_ok && secs < kStabilitySeconds,
          fmt("halves TV %.4f (< %.2f), top-6 %s vs %s, TV@90 %.4f TV@10000 %.4f, %.3f s", tv,
              kHalvesMaxTV, top_a.c_str(), top_b.c_str(), curve[0].distance.total_variation,
              curve[1].distance.total_variation, secs)};
}

Outcome ac4_solver() {
  const auto& corpus = testing::english_corpus();
  const auto model = LanguageModel::train(slice(corpus, 0, kTrainLetters));
  const auto plain = slice(corpus, kPlainBegin, kPlainLetters);
  std::size_t good = 0;
  bool monotone = true;
  double slowest = 0.0;
  std::string per_trial;
  for (std::size_t trial = 0; trial < kTrials; ++trial) {
    const auto key = SubstitutionKey::random(en(), derive_seed(2024, trial));
    const auto t0 = Clock::now();
    const auto rep = hill_climb_solve(encrypt(plain, key), model,
                                      {.restarts = kRestarts, .seed = trial});
    const double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    std::size_t correct = 0;
    for (Letter l = 0; l < 26; ++l) correct += rep.best_key.encrypt(l) == key.encrypt(l);
    good += correct >= kMinCorrectEntries && secs < kSolveSeconds;
    monotone = monotone && rep.best_score >= rep.seed_score;
    per_trial += (trial ? "," : "") + std::to_string(correct);
  }
  return {good >= kMinGoodTrials && monotone && slowest < kSolveSeconds,
          fmt("correct entries per trial [%s]; %zu/%zu trials >= %zu; slowest %.2f s; monotone %s",
              per_trial.c_str(), good, kTrials, kMinCorrectEntries, slowest,
              monotone ? "yes" : "no")};
}

Outcome ac5_markov() {
  auto letters = slice(testing::english_corpus(), 0, kMarkovLetters);
  const auto real = independence_test(fit_transitions(to_vc_sequence(letters)));
  int rejected = 0;
  SplitMix64 rng(5);
  for (int s = 0; s < kShuffles; ++s) {
    auto& v = letters.symbols;
    for (std::size_t i = v.size() - 1; i > 0; --i) std::swap(v[i], v[rng.below(i + 1)]);
    rejected += independence_test(fit_transitions(to_vc_sequence(letters))).p_value < kShuffleAlpha;
  }
  return {real.p_value < kMarkovMaxP && rejected >= kShuffleMinReject &&
              rejected <= kShuffleMaxReject,
          fmt("chi2 %.1f p %.3g on %zu letters; shuffles rejected %d/%d", real.chi_square,
              real.p_value, kMarkovLetters, rejected, kShuffles)};
}

Outcome ac6_entropy() {
  auto uni = FrequencyTable::zeros(en());
  auto di = DigramTable::zeros(en());
  for (std::size_t i = 0; i < 26; ++i) {
    uni.counts[i] = 26;
    for (std::size_t j = 0; j < 26; ++j) di.counts[i * 26 + j] = 1;
  }
  uni.total = di.total = 676;
  const auto u = entropy_estimates(uni, di);
  const bool uniform_ok = std::fabs(u.h1 - std::log2(26.0)) <= kExactTol;

  const auto& corpus = testing::english_corpus();
  const auto e = entropy_estimates(count_letters(corpus), count_digrams(corpus));
  const bool corpus_ok = e.h2 < e.h1 && e.h1 < e.h0;

  int violations = 0;
  SplitMix64 rng(6);
  for (int k = 0; k < kRandomTables; ++k) {
    // cyclic counts keep the unigram table equal to the digram column sums
    const std::size_t len = 2 + rng.below(200);
    const auto seq = testing::random_letters(en(), len, rng);
    auto d = DigramTable::zeros(en());
    for (std::size_t i = 0; i < len; ++i) {
      ++d.counts[std::size_t{seq.symbols[i]} * 26 + seq.symbols[(i + 1) % len]];
    }
    d.total = len;
    const auto r = entropy_estimates(count_letters(seq), d);
    violations += !(r.h2 <= r.h1 + 1e-12 && r.h1 <= r.h0 + 1e-12);
  }
  return {uniform_ok && corpus_ok && violations == 0,
          fmt("uniform h1 %.12f; corpus h0 %.4f h1 %.4f h2 %.4f; %d/%d random tables violate",
              u.h1, e.h0, e.h1, e.h2, violations, kRandomTables)};
}

Outcome ac7_zipf() {
  std::vector<RankCount> exact;
  for (int r = 1; r <= 1000; ++r) exact.push_back({double(r), 1e6 / r});
  const double s_exact = fit_power_law(exact, 0.0).exponent;

  const int types = 10000;
  std::vector<double> cdf(types);
  double acc = 0.0;
  for (int r = 1; r <= types; ++r) cdf[r - 1] = acc += 1.0 / r;
  std::vector<std::uint64_t> counts(types, 0);
  SplitMix64 rng(7);
  for (int i = 0; i < kZipfTokens; ++i) {
    ++counts[std::upper_bound(cdf.begin(), cdf.end(), rng.uniform() * acc) - cdf.begin()];
  }
  std::sort(counts.rbegin(), counts.rend());
  std::vector<RankCount> sampled;
  for (int r = 0; r < types; ++r) sampled.push_back({double(r + 1), double(counts[r])});
  const double s_sampled = fit_power_law(sampled).exponent;
  return {std::fabs(s_exact - 1.0) <= kExactTol && std::fabs(s_sampled - 1.0) <= kZipfSampledTol,
          fmt("exact exponent %.12f; sampled exponent %.4f", s_exact, s_sampled)};
}

Outcome ac8_algebra() {
  SplitMix64 rng(8);
  int merge_fail = 0, crypt_fail = 0, norm_fail = 0, token_fail = 0;
  for (int k = 0; k < kAlgebraCases; ++k) {
    const auto seq = testing::random_letters(en(), rng.below(300), rng);
    const std::size_t cut = rng.below(seq.size() + 1);
    const auto a = slice(seq, 0, cut);
    const auto b = slice(seq, cut, seq.size());
    const auto zero = FrequencyTable::zeros(en());
    const auto ta = count_letters(a);
    const auto tb = count_letters(b);
    merge_fail += !(merge(ta, tb) == count_letters(seq) && merge(ta, zero) == ta &&
                    merge(ta, tb) == merge(tb, ta));

    const auto key = SubstitutionKey::random(en(), rng.next());
    crypt_fail += decrypt(encrypt(seq, key), key).symbols != seq.symbols;

    const std::string raw = testing::random_text(rng.below(200), rng);
    const auto once = normalize(raw, en());
    norm_fail += normalize(render(once), en()).symbols != once.symbols;

    const std::string raw2 = testing::random_text(rng.below(200), rng);
    auto wa = tokenize_words(raw, en()).words;
    const auto wb = tokenize_words(raw2, en()).words;
    wa.insert(wa.end(), wb.begin(), wb.end());
    token_fail += tokenize_words(raw + " " + raw2, en()).words != wa;
  }
  return {merge_fail + crypt_fail + norm_fail + token_fail == 0,
          fmt("%d cases each; failures merge %d, encrypt/decrypt %d, normalize %d, tokenize %d",
              kAlgebraCases, merge_fail, crypt_fail, norm_fail, token_fail)};
}

Outcome ac9_lipogram() {
  const auto& corpus = testing::english_corpus();
  const auto reference = count_letters(slice(corpus, 0, kTrainLetters));
  const Letter e = *en()->index_of(U'e');

  // English words without an e, in corpus order
  const auto words = tokenize_words(testing::read_text(testing::corpus_path()), en());
  LetterSequence text{en(), {}, {}};
  for (const auto& w : words.words) {
    if (std::find(w.begin(), w.end(), e) != w.end()) continue;
    text.symbols.insert(text.symbols.end(), w.begin(), w.end());
    if (text.size() >= kLipogramLetters) break;
  }
  text.symbols.resize(kLipogramLetters);
  const auto flags = lipogram_scan(count_letters(text), reference, kLipogramAlpha);
  const auto hit = std::find_if(flags.begin(), flags.end(), [&](const auto& f) { return f.letter == e; });
  const bool e_flagged = hit != flags.end();

  int clean = 0;
  SplitMix64 rng(9);
  for (int trial = 0; trial < kNullTrials; ++trial) {
    auto t = FrequencyTable::zeros(en());
    for (std::size_t i = 0; i < kLipogramLetters; ++i) {
      std::uint64_t r = rng.below(reference.total);
      Letter l = 0;
      while (r >= reference.counts[l]) r -= reference.counts[l++];
      ++t.counts[l];
    }
    t.total = kLipogramLetters;
    clean += lipogram_scan(t, reference, kNullAlpha).empty();
  }
  return {e_flagged && clean >= kNullMinClean,
          fmt("e flagged %s (p %.3g, expected %.0f); null trials clean %d/%d",
              e_flagged ? "yes" : "no", e_flagged ? hit->p_value : 1.0,
              e_flagged ? hit->expected : 0.0, clean, kNullTrials)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 threshold arithmetic", ac1_thresholds},
      {"AC2 ibn Adlan fixture", ac2_ibn_adlan},
      {"AC3 sample stability", ac3_stability},
      {"AC4 substitution solver", ac4_solver},
      {"AC5 vowel/consonant dependence", ac5_markov},
      {"AC6 entropy inequalities", ac6_entropy},
      {"AC7 Zipf exponent", ac7_zipf},
      {"AC8 algebraic properties", ac8_algebra},
      {"AC9 lipogram detection", ac9_lipogram},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
