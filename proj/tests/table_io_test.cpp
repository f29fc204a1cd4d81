#include <gtest/gtest.h>

#include "letterstat/error.hpp"
#include "letterstat/table_io.hpp"
#include "test_support.hpp"

namespace letterstat {
namespace {

const AlphabetRef& abc() {
  static const AlphabetRef a = load_alphabet("name: abc\nletters: abc\nvowels: a\n");
  return a;
}

TEST(TableCsv, ExactFormat) {
  const auto t = count_letters(normalize("abb", abc()));
  EXPECT_EQ(io::table_csv(t),
            "letter,count,proportion\n"
            "a,1,0.333333\n"
            "b,2,0.666667\n"
            "c,0,0.000000\n");
  EXPECT_EQ(io::table_csv(t, true),
            "letter,count,proportion,rank\n"
            "a,1,0.333333,2\n"
            "b,2,0.666667,1\n"
            "c,0,0.000000,3\n");
}

TEST(TableJson, MirrorsFields) {
  const auto j = io::table_json(count_letters(normalize("abb", abc())));
  EXPECT_EQ(j["alphabet"], "abc");
  EXPECT_EQ(j["total"], 3);
  EXPECT_EQ(j["counts"][1]["letter"], "b");
  EXPECT_EQ(j["counts"][1]["count"], 2);
  EXPECT_EQ(j["counts"][1]["proportion"], 0.666667);
  EXPECT_EQ(j["rank_order"][0], "b");
}

TEST(DigramCsv, NonzeroPairsOnly) {
  EXPECT_EQ(io::digram_csv(count_digrams(normalize("aba", abc()))),
            "first,second,count,proportion\n"
            "a,b,1,0.500000\n"
            "b,a,1,0.500000\n");
}

TEST(ModelCsv, RoundTripOnRandomText) {
  SplitMix64 rng(4);
  const auto en = builtin_alphabet("en");
  for (int i = 0; i < 50; ++i) {
    const auto seq = testing::random_letters(en, rng.below(300), rng);
    const auto uni = count_letters(seq);
    const auto di = count_digrams(seq);
    EXPECT_EQ(io::parse_unigram_csv(io::unigram_model_csv(uni), en), uni);
    EXPECT_EQ(io::parse_digram_csv(io::digram_model_csv(di), en), di);
    // the report CSV carries the same counts plus extra columns
    EXPECT_EQ(io::parse_unigram_csv(io::table_csv(uni, true), en), uni);
  }
}

TEST(ModelCsv, Errors) {
  EXPECT_THROW(io::parse_unigram_csv("", abc()), Error);
  EXPECT_THROW(io::parse_unigram_csv("symbol,count\na,1\n", abc()), Error);
  EXPECT_THROW(io::parse_unigram_csv("letter,count\nz,1\n", abc()), Error);
  EXPECT_THROW(io::parse_unigram_csv("letter,count\na,1\na,2\n", abc()), Error);
  EXPECT_THROW(io::parse_unigram_csv("letter,count\na,-1\n", abc()), Error);
  EXPECT_THROW(io::parse_unigram_csv("letter,count\na\n", abc()), Error);
  EXPECT_THROW(io::parse_digram_csv("first,second,count\na,b,1\na,b,1\n", abc()), Error);
  EXPECT_NO_THROW(io::parse_unigram_csv("letter,count\r\na,1\r\n\r\n", abc()));
}

TEST(Fixed6, Rounding) {
  EXPECT_EQ(io::fixed6(0.1234567), "0.123457");
  EXPECT_EQ(io::fixed6(0.0), "0.000000");
  EXPECT_EQ(io::round6(2.0 / 3.0), 0.666667);
}

}  // namespace
}  // namespace letterstat
