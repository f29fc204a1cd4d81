#include "letterstat/table_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

#include "letterstat/error.hpp"
#include "letterstat/utf8.hpp"

namespace letterstat::io {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

double round6(double value) { return std::round(value * 1e6) / 1e6; }

std::string table_csv(const FrequencyTable& table, bool with_rank) {
  const Alphabet& a = *table.alphabet;
  std::vector<std::size_t> rank(a.size());
  if (with_rank) {
    const auto order = rank_order(table);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i + 1;
  }
  std::string out = with_rank ? "letter,count,proportion,rank\n" : "letter,count,proportion\n";
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto l = static_cast<Letter>(k);
    out += utf8::encode(a.symbol(l)) + "," + std::to_string(table.count(l)) + "," +
           fixed6(table.proportion(l));
    if (with_rank) out += "," + std::to_string(rank[k]);
    out += "\n";
  }
  return out;
}

nlohmann::json table_json(const FrequencyTable& table) {
  const Alphabet& a = *table.alphabet;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto l = static_cast<Letter>(k);
    rows.push_back({{"letter", utf8::encode(a.symbol(l))},
                    {"count", table.count(l)},
                    {"proportion", round6(table.proportion(l))}});
  }
  nlohmann::json rank = nlohmann::json::array();
  for (Letter l : rank_order(table)) rank.push_back(utf8::encode(a.symbol(l)));
  return {{"alphabet", a.name()}, {"total", table.total}, {"counts", rows}, {"rank_order", rank}};
}

std::string digram_csv(const DigramTable& table) {
  const Alphabet& a = *table.alphabet;
  std::string out = "first,second,count,proportion\n";
  const double total = static_cast<double>(table.total);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto c = table.count(static_cast<Letter>(i), static_cast<Letter>(j));
      if (c == 0) continue;
      out += utf8::encode(a.symbol(static_cast<Letter>(i))) + "," +
             utf8::encode(a.symbol(static_cast<Letter>(j))) + "," + std::to_string(c) + "," +
             fixed6(static_cast<double>(c) / total) + "\n";
    }
  }
  return out;
}

nlohmann::json digram_json(const DigramTable& table) {
  const Alphabet& a = *table.alphabet;
  nlohmann::json rows = nlohmann::json::array();
  const double total = static_cast<double>(table.total);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto c = table.count(static_cast<Letter>(i), static_cast<Letter>(j));
      if (c == 0) continue;
      rows.push_back({{"first", utf8::encode(a.symbol(static_cast<Letter>(i)))},
                      {"second", utf8::encode(a.symbol(static_cast<Letter>(j)))},
                      {"count", c},
                      {"proportion", round6(static_cast<double>(c) / total)}});
    }
  }
  return {{"alphabet", a.name()}, {"total", table.total}, {"counts", rows}};
}

std::string unigram_model_csv(const FrequencyTable& table) {
  const Alphabet& a = *table.alphabet;
  std::string out = "letter,count\n";
  for (std::size_t k = 0; k < a.size(); ++k) {
    out += utf8::encode(a.symbol(static_cast<Letter>(k))) + "," +
           std::to_string(table.counts[k]) + "\n";
  }
  return out;
}

std::string digram_model_csv(const DigramTable& table) {
  const Alphabet& a = *table.alphabet;
  std::string out = "first,second,count\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto c = table.count(static_cast<Letter>(i), static_cast<Letter>(j));
      if (c == 0) continue;
      out += utf8::encode(a.symbol(static_cast<Letter>(i))) + "," +
             utf8::encode(a.symbol(static_cast<Letter>(j))) + "," + std::to_string(c) + "\n";
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

// Minimal CSV reader: header row names the columns, no quoting.
class CsvReader {
 public:
  CsvReader(std::string_view text, std::initializer_list<std::string_view> required)
      : text_(text) {
    std::string_view header;
    if (!next_line(header)) throw Error("csv: missing header row");
    const auto names = split_fields(header);
    for (std::string_view want : required) {
      std::optional<std::size_t> found;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == want) found = i;
      }
      if (!found) throw Error("csv: header lacks column '" + std::string(want) + "'");
      columns_.push_back(*found);
    }
  }

  /// Fills `out` with the required columns of the next data row.
  bool row(std::vector<std::string_view>& out) {
    std::string_view line;
    if (!next_line(line)) return false;
    const auto fields = split_fields(line);
    out.clear();
    for (std::size_t c : columns_) {
      if (c >= fields.size()) {
        throw Error("csv line " + std::to_string(line_no_) + ": too few fields");
      }
      out.push_back(fields[c]);
    }
    return true;
  }

  std::size_t line() const { return line_no_; }

 private:
  bool next_line(std::string_view& line) {
    while (pos_ < text_.size()) {
      auto nl = text_.find('\n', pos_);
      if (nl == std::string_view::npos) nl = text_.size();
      line = text_.substr(pos_, nl - pos_);
      pos_ = nl + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::vector<std::size_t> columns_;
};

Letter parse_letter(std::string_view field, const Alphabet& a, std::size_t line) {
  const auto cps = utf8::decode(field);
  if (cps.size() == 1) {
    if (auto l = a.index_of(cps[0])) return *l;
  }
  throw Error("csv line " + std::to_string(line) + ": '" + std::string(field) +
              "' is not a letter of alphabet '" + a.name() + "'");
}

std::uint64_t parse_count(std::string_view field, std::size_t line) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || p != field.data() + field.size()) {
    throw Error("csv line " + std::to_string(line) + ": bad count '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

FrequencyTable parse_unigram_csv(std::string_view text, AlphabetRef alphabet) {
  FrequencyTable t = FrequencyTable::zeros(alphabet);
  std::vector<bool> seen(alphabet->size(), false);
  CsvReader csv(text, {"letter", "count"});
  std::vector<std::string_view> f;
  while (csv.row(f)) {
    const Letter l = parse_letter(f[0], *alphabet, csv.line());
    if (seen[l]) throw Error("csv line " + std::to_string(csv.line()) + ": duplicate letter");
    seen[l] = true;
    t.counts[l] = parse_count(f[1], csv.line());
    t.total += t.counts[l];
  }
  return t;
}

DigramTable parse_digram_csv(std::string_view text, AlphabetRef alphabet) {
  DigramTable t = DigramTable::zeros(alphabet);
  const std::size_t n = alphabet->size();
  std::vector<bool> seen(n * n, false);
  CsvReader csv(text, {"first", "second", "count"});
  std::vector<std::string_view> f;
  while (csv.row(f)) {
    const Letter a = parse_letter(f[0], *alphabet, csv.line());
    const Letter b = parse_letter(f[1], *alphabet, csv.line());
    const std::size_t idx = std::size_t{a} * n + b;
    if (seen[idx]) throw Error("csv line " + std::to_string(csv.line()) + ": duplicate pair");
    seen[idx] = true;
    t.counts[idx] = parse_count(f[2], csv.line());
    t.total += t.counts[idx];
  }
  return t;
}

}  // namespace letterstat::io
