#include "letterstat/solver.hpp"

#include <algorithm>
#include <numeric>

#include "letterstat/error.hpp"
#include "letterstat/rng.hpp"

namespace letterstat {

namespace {

// Scores keys against fixed ciphertext pair counts. Iterates plaintext pairs
// in the same row-major order as score_counts, so a key's value here equals
// score(decrypt(c, key), model) exactly.
class KeyScorer {
 public:
  KeyScorer(const Cryptogram& c, const LanguageModel& model)
      : n_(c.inventory.size()), cipher_pairs_(n_ * n_, 0), log_probs_(model.log_probs()) {
    for (std::size_t i = 1; i < c.size(); ++i) {
      ++cipher_pairs_[std::size_t{c.symbols[i - 1]} * n_ + c.symbols[i]];
    }
  }

  double operator()(std::span<const Symbol> key) const {
    double total = 0.0;
    for (std::size_t p1 = 0; p1 < n_; ++p1) {
      const std::uint64_t* row = cipher_pairs_.data() + std::size_t{key[p1]} * n_;
      const double* lp = log_probs_.data() + p1 * n_;
      for (std::size_t p2 = 0; p2 < n_; ++p2) {
        const std::uint64_t cnt = row[key[p2]];
        if (cnt != 0) total += static_cast<double>(cnt) * lp[p2];
      }
    }
    return total;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> cipher_pairs_;
  std::span<const double> log_probs_;
};

struct ClimbResult {
  std::vector<Symbol> key;
  double score;
};

ClimbResult climb(const KeyScorer& scorer, std::vector<Symbol> key, std::size_t max_stale) {
  const std::size_t n = key.size();
  double current = scorer(key);
  std::size_t stale = 0;
  while (stale < max_stale) {
    double best = current;
    std::size_t best_a = 0;
    std::size_t best_b = 0;
    for (std::size_t a = 0; a + 1 < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::swap(key[a], key[b]);
        const double s = scorer(key);
        std::swap(key[a], key[b]);
        if (s > best) {
          best = s;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best > current) {
      std::swap(key[best_a], key[best_b]);
      current = best;
      stale = 0;
    } else {
      // deterministic neighborhood: a stale sweep changes nothing, so
      // max_stale > 1 only repeats the local-optimum check
      ++stale;
    }
  }
  return {std::move(key), current};
}

std::vector<Symbol> random_start(std::size_t n, std::uint64_t seed) {
  std::vector<Symbol> key(n);
  std::iota(key.begin(), key.end(), Symbol{0});
  SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(key[i - 1], key[rng.below(i)]);
  return key;
}

}  // namespace

SolverReport hill_climb_solve(const Cryptogram& c, const LanguageModel& model,
                              const SolverOptions& options) {
  if (c.empty()) throw Error("hill_climb_solve: empty cryptogram");
  if (options.restarts == 0) throw Error("hill_climb_solve: restarts must be at least 1");
  if (options.max_stale == 0) throw Error("hill_climb_solve: max_stale must be at least 1");
  require_same_alphabet(*c.alphabet, *model.alphabet(), "hill_climb_solve");
  if (c.inventory.size() != c.alphabet->size()) {
    throw Error("hill_climb_solve: inventory size differs from alphabet size");
  }

  const std::size_t n = c.inventory.size();
  const KeyScorer scorer(c, model);
  const SubstitutionKey seed_key = frequency_match_key(count_symbols(c), model.unigram());
  const std::vector<Symbol> seed_mapping(seed_key.mapping().begin(), seed_key.mapping().end());

  const auto restarts = static_cast<std::ptrdiff_t>(options.restarts);
  std::vector<ClimbResult> results(options.restarts);

#pragma omp parallel for schedule(dynamic, 1) if (options.parallel && restarts > 1)
  for (std::ptrdiff_t r = 0; r < restarts; ++r) {
    auto start = r == 0 ? seed_mapping
                        : random_start(n, derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    results[static_cast<std::size_t>(r)] = climb(scorer, std::move(start), options.max_stale);
  }

  std::size_t best = 0;
  std::vector<double> restart_scores;
  restart_scores.reserve(results.size());
  for (std::size_t r = 0; r < results.size(); ++r) {
    restart_scores.push_back(results[r].score);
    if (results[r].score > results[best].score) best = r;
  }

  SubstitutionKey best_key(c.alphabet, c.inventory, results[best].key);
  LetterSequence plaintext = decrypt(c, best_key);
  const double best_score = score(plaintext, model);
  return SolverReport{std::move(best_key),
                      best_score,
                      std::move(plaintext),
                      options.restarts,
                      length_check(c, options.length_threshold),
                      seed_key,
                      scorer(seed_mapping),
                      best,
                      std::move(restart_scores)};
}

}  // namespace letterstat
