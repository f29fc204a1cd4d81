#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "letterstat/error.hpp"
#include "letterstat/freq.hpp"
#include "test_support.hpp"

namespace letterstat {
namespace {

const AlphabetRef& en() {
  static const AlphabetRef a = builtin_alphabet("en");
  return a;
}

Letter L(char c) { return *en()->index_of(static_cast<char32_t>(c)); }

FrequencyTable table_of(std::initializer_list<std::pair<char, std::uint64_t>> counts) {
  auto t = FrequencyTable::zeros(en());
  for (auto [c, n] : counts) {
    t.counts[L(c)] = n;
    t.total += n;
  }
  return t;
}

TEST(CountLetters, Examples) {
  const auto t = count_letters(normalize("abb", en()));
  EXPECT_EQ(t.count(L('a')), 1u);
  EXPECT_EQ(t.count(L('b')), 2u);
  EXPECT_EQ(t.total, 3u);
  EXPECT_EQ(t.counts.size(), 26u);

  const auto empty = count_letters(normalize("", en()));
  EXPECT_EQ(empty.total, 0u);
  EXPECT_TRUE(std::all_of(empty.counts.begin(), empty.counts.end(), [](auto c) { return c == 0; }));
}

TEST(CountDigrams, Examples) {
  const auto t = count_digrams(normalize("aba", en()));
  EXPECT_EQ(t.count(L('a'), L('b')), 1u);
  EXPECT_EQ(t.count(L('b'), L('a')), 1u);
  EXPECT_EQ(t.total, 2u);
  EXPECT_EQ(count_digrams(normalize("a", en())).total, 0u);
  EXPECT_EQ(count_digrams(normalize("", en())).total, 0u);
}

// Brute force: enumerate every position pair directly.
std::uint64_t brute_pair_count(const LetterSequence& s, Letter x, Letter y) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) n += s.symbols[i] == x && s.symbols[i + 1] == y;
  return n;
}

TEST(CountDigrams, ConcatenationIsMergePlusBoundaryPair) {
  SplitMix64 rng(3);
  const auto abc = load_alphabet("name: abc\nletters: abc\nvowels: a\n");
  for (int trial = 0; trial < 200; ++trial) {
    const auto left = testing::random_letters(abc, 1 + rng.below(12), rng);
    const auto right = testing::random_letters(abc, 1 + rng.below(12), rng);
    LetterSequence whole = left;
    whole.symbols.insert(whole.symbols.end(), right.symbols.begin(), right.symbols.end());

    auto merged = merge(count_digrams(left), count_digrams(right));
    ++merged.counts[std::size_t{left.symbols.back()} * 3 + right.symbols.front()];
    ++merged.total;
    const auto direct = count_digrams(whole);
    EXPECT_EQ(merged, direct);
    for (Letter x = 0; x < 3; ++x) {
      for (Letter y = 0; y < 3; ++y) EXPECT_EQ(direct.count(x, y), brute_pair_count(whole, x, y));
    }
  }
}

TEST(CountLetters, ParallelMatchesReference) {
  SplitMix64 rng(99);
  for (std::size_t n : {0u, 1u, 1000u, 100000u, 333333u}) {
    const auto seq = testing::random_letters(en(), n, rng);
    EXPECT_EQ(count_letters(seq), reference::count_letters(seq)) << n;
    EXPECT_EQ(count_digrams(seq), reference::count_digrams(seq)) << n;
  }
}

TEST(Merge, ExamplesAndIdentity) {
  const auto ab = count_letters(normalize("ab", en()));
  const auto b = count_letters(normalize("b", en()));
  EXPECT_EQ(merge(ab, b), count_letters(normalize("abb", en())));
  const auto empty = FrequencyTable::zeros(en());
  EXPECT_EQ(merge(ab, empty), ab);
  EXPECT_EQ(merge(empty, ab), ab);
}

TEST(Merge, RandomSplitFoldEqualsWhole) {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto seq = testing::random_letters(en(), 500 + rng.below(500), rng);
    std::vector<std::size_t> cuts{0, seq.size()};
    for (int k = 0; k < 9; ++k) cuts.push_back(rng.below(seq.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    auto acc = FrequencyTable::zeros(en());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      acc = merge(acc, count_letters(slice(seq, cuts[k], cuts[k + 1] - cuts[k])));
    }
    EXPECT_EQ(acc, count_letters(seq));
  }
}

TEST(Merge, AlphabetMismatchThrows) {
  const auto la = count_letters(normalize("ab", builtin_alphabet("la")));
  const auto e = count_letters(normalize("ab", en()));
  EXPECT_THROW(merge(la, e), Error);
}

TEST(RankOrder, IbnAdlanFixture) {
  const auto ar = load_alphabet("name: adlan\nletters: hlmnwyā\nvowels: ā\n");
  auto t = FrequencyTable::zeros(ar);
  const std::pair<char32_t, std::uint64_t> counts[] = {{U'ā', 600}, {U'l', 400}, {U'm', 320},
                                                       {U'h', 270}, {U'w', 260}, {U'y', 250},
                                                       {U'n', 220}};
  for (auto [c, n] : counts) {
    t.counts[*ar->index_of(c)] = n;
    t.total += n;
  }
  const auto order = rank_order(t);
  EXPECT_EQ(render(*ar, order), "ālmhwyn");
}

TEST(RankOrder, TiesFollowAlphabetOrder) {
  EXPECT_EQ(render(*en(), rank_order(FrequencyTable::zeros(en()))), "abcdefghijklmnopqrstuvwxyz");
  EXPECT_EQ(render(*en(), rank_order(table_of({{'a', 2}, {'b', 2}, {'c', 1}}))).substr(0, 3), "abc");
  EXPECT_EQ(render(*en(), rank_order(table_of({{'z', 2}, {'b', 2}, {'c', 3}}))).substr(0, 3), "cbz");
}

TEST(RankOrder, IsPermutationWithNonIncreasingCounts) {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = count_letters(testing::random_letters(en(), rng.below(200), rng));
    auto order = rank_order(t);
    for (std::size_t i = 1; i < order.size(); ++i) {
      EXPECT_GE(t.count(order[i - 1]), t.count(order[i]));
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
  }
}

TEST(ProportionCI, WilsonOracle) {
  // closed-form Wilson interval, z = 1.959963984540054 (scipy)
  const auto ci = proportion_ci(300, 700, 0.95);
  EXPECT_NEAR(ci.lower, 0.39239944342145316, 1e-9);
  EXPECT_NEAR(ci.upper, 0.4655231061146984, 1e-9);
  EXPECT_DOUBLE_EQ(ci.estimate, 300.0 / 700.0);
  EXPECT_EQ(ci.level, 0.95);
}

TEST(ProportionCI, Boundaries) {
  const auto zero = proportion_ci(0, 100, 0.95);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_NEAR(zero.upper, 0.03699349820698568, 1e-9);
  const auto all = proportion_ci(100, 100, 0.95);
  EXPECT_EQ(all.upper, 1.0);

  const auto half = proportion_ci(50, 100, 0.95);
  EXPECT_EQ(half.estimate, 0.5);
  EXPECT_NEAR((half.lower + half.upper) / 2.0, 0.5, 1e-15);
  EXPECT_NEAR(half.lower, 0.4038315303659956, 1e-9);
}

TEST(ProportionCI, Errors) {
  EXPECT_THROW(proportion_ci(0, 0, 0.95), Error);
  EXPECT_THROW(proportion_ci(5, 4, 0.95), Error);
  EXPECT_THROW(proportion_ci(1, 4, 0.0), Error);
  EXPECT_THROW(proportion_ci(1, 4, 1.0), Error);
}

TEST(ProportionCI, ContainsEstimateAndNarrowsWithSampleSize) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t total = 1 + rng.below(2000);
    const std::uint64_t count = rng.below(total + 1);
    const double level = 0.5 + 0.49 * rng.uniform();
    const auto ci = proportion_ci(count, total, level);
    EXPECT_LE(0.0, ci.lower);
    EXPECT_LE(ci.lower, ci.estimate);
    EXPECT_LE(ci.estimate, ci.upper);
    EXPECT_LE(ci.upper, 1.0);
    const auto wide = proportion_ci(count, total, level);
    const auto narrow = proportion_ci(4 * count, 4 * total, level);
    EXPECT_LT(narrow.upper - narrow.lower, wide.upper - wide.lower);
  }
}

TEST(CompareTables, IdenticalTables) {
  const auto t = table_of({{'a', 5}, {'b', 3}, {'e', 9}});
  const auto d = compare_tables(t, t);
  EXPECT_EQ(d.total_variation, 0.0);
  EXPECT_EQ(d.chi_square, 0.0);
  EXPECT_DOUBLE_EQ(d.rank_correlation, 1.0);
}

TEST(CompareTables, HandComputed) {
  const auto a = table_of({{'x', 1}, {'y', 1}});
  const auto b = table_of({{'x', 2}, {'y', 0}});
  const auto d = compare_tables(a, b);
  EXPECT_DOUBLE_EQ(d.total_variation, 0.5);
  // pooled expectations 1.5 / 1.5 for x and 0.5 / 0.5 for y
  EXPECT_NEAR(d.chi_square, 0.25 / 1.5 * 2 + 0.25 / 0.5 * 2, 1e-12);
}

TEST(CompareTables, UniformTablesAreIdentical) {
  auto u = FrequencyTable::zeros(en());
  for (auto& c : u.counts) c = 1;
  u.total = 26;
  EXPECT_DOUBLE_EQ(compare_tables(u, u).rank_correlation, 1.0);
}

TEST(CompareTables, SymmetricAndBounded) {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = count_letters(testing::random_letters(en(), 1 + rng.below(100), rng));
    const auto b = count_letters(testing::random_letters(en(), 1 + rng.below(100), rng));
    const auto ab = compare_tables(a, b);
    const auto ba = compare_tables(b, a);
    EXPECT_DOUBLE_EQ(ab.total_variation, ba.total_variation);
    EXPECT_NEAR(ab.chi_square, ba.chi_square, 1e-9);
    EXPECT_NEAR(ab.rank_correlation, ba.rank_correlation, 1e-12);
    EXPECT_GE(ab.total_variation, 0.0);
    EXPECT_LE(ab.total_variation, 1.0);
    EXPECT_GE(ab.rank_correlation, -1.0);
    EXPECT_LE(ab.rank_correlation, 1.0);
    EXPECT_EQ(compare_tables(a, a).chi_square, 0.0);
  }
}

TEST(CompareTables, ProportionalTablesHaveZeroDistance) {
  const auto a = table_of({{'a', 1}, {'b', 3}});
  const auto b = table_of({{'a', 10}, {'b', 30}});
  const auto d = compare_tables(a, b);
  EXPECT_EQ(d.total_variation, 0.0);
  EXPECT_NEAR(d.chi_square, 0.0, 1e-12);
}

TEST(CompareTables, EmptyTableThrows) {
  EXPECT_THROW(compare_tables(FrequencyTable::zeros(en()), table_of({{'a', 1}})), Error);
}

TEST(PositionalStats, Doubles) {
  const auto ps = positional_stats(tokenize_words("letter bell", en()));
  EXPECT_EQ(ps.doubles[L('t')], 1u);
  EXPECT_EQ(ps.doubles[L('l')], 1u);
  EXPECT_EQ(std::accumulate(ps.doubles.begin(), ps.doubles.end(), std::uint64_t{0}), 2u);
  EXPECT_EQ(positional_stats(tokenize_words("aaa", en())).doubles[L('a')], 2u);
}

TEST(PositionalStats, InitialFinalSecondPenultimate) {
  const auto ps = positional_stats(tokenize_words("banana bread a", en()));
  EXPECT_EQ(ps.initial.count(L('b')), 2u);
  EXPECT_EQ(ps.final.count(L('a')), 2u);  // banana, a
  EXPECT_EQ(ps.final.count(L('d')), 1u);
  EXPECT_EQ(ps.initial.total, 3u);
  EXPECT_EQ(ps.final.total, 3u);
  EXPECT_EQ(ps.second.total, 2u);
  EXPECT_EQ(ps.penultimate.total, 2u);
  EXPECT_EQ(ps.second.count(L('a')), 1u);
  EXPECT_EQ(ps.second.count(L('r')), 1u);
  EXPECT_EQ(ps.penultimate.count(L('n')), 1u);
  EXPECT_EQ(ps.penultimate.count(L('a')), 1u);
}

TEST(Stability, FullLengthAndSingleLetter) {
  SplitMix64 rng(1);
  const auto seq = testing::random_letters(en(), 500, rng);
  const std::vector<std::size_t> sizes{seq.size(), 1};
  const auto curve = stability_curve(seq, sizes);
  ASSERT_EQ(curve.size(), 2u);
  EXPECT_EQ(curve[0].size, seq.size());
  EXPECT_EQ(curve[0].distance.total_variation, 0.0);
  const double first_share = count_letters(seq).proportion(seq.symbols[0]);
  EXPECT_NEAR(curve[1].distance.total_variation, 1.0 - first_share, 1e-12);
}

TEST(Stability, Errors) {
  const auto seq = normalize("abcabc", en());
  const std::vector<std::size_t> too_big{7};
  const std::vector<std::size_t> zero{0};
  EXPECT_THROW(stability_curve(seq, too_big), Error);
  EXPECT_THROW(stability_curve(seq, zero), Error);
  EXPECT_THROW(stability_curve_sampled(seq, too_big, 1), Error);
}

TEST(Stability, SampledIsSeedDeterministic) {
  SplitMix64 rng(2);
  const auto seq = testing::random_letters(en(), 2000, rng);
  const std::vector<std::size_t> sizes{10, 100, 2000};
  const auto a = stability_curve_sampled(seq, sizes, 7);
  const auto b = stability_curve_sampled(seq, sizes, 7);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].distance.total_variation, b[i].distance.total_variation);
  }
  EXPECT_EQ(a[2].distance.total_variation, 0.0);
}

}  // namespace
}  // namespace letterstat
