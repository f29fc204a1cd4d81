#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "letterstat/freq.hpp"

// Text serializations for frequency tables. Counts are written exactly;
// proportions carry six decimal digits.
namespace letterstat::io {

std::string fixed6(double value);
/// value rounded to six decimals, for JSON output.
double round6(double value);

/// `letter,count,proportion`, one row per letter in alphabet order. With
/// `with_rank`, a fourth `rank` column (1 = most frequent) is appended.
std::string table_csv(const FrequencyTable& table, bool with_rank = false);
nlohmann::json table_json(const FrequencyTable& table);

/// `first,second,count,proportion` for every nonzero pair.
std::string digram_csv(const DigramTable& table);
nlohmann::json digram_json(const DigramTable& table);

// Language-model files: `letter,count` and `first,second,count`.
std::string unigram_model_csv(const FrequencyTable& table);
std::string digram_model_csv(const DigramTable& table);

/// Reads any CSV with `letter` and `count` columns (extra columns ignored).
/// Letters absent from the file count 0.
FrequencyTable parse_unigram_csv(std::string_view text, AlphabetRef alphabet);
/// Reads any CSV with `first`, `second` and `count` columns.
DigramTable parse_digram_csv(std::string_view text, AlphabetRef alphabet);

}  // namespace letterstat::io
