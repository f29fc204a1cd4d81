#include "letterstat/alphabet.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "letterstat/error.hpp"
#include "letterstat/utf8.hpp"

namespace letterstat {

namespace {

constexpr std::string_view kEnglish = R"(# English, y treated as a consonant
name: en
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiou
)";

constexpr std::string_view kEnglishYVowel = R"(# English, y treated as a vowel
name: en-y-vowel
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiouy
)";

constexpr std::string_view kLatin = R"(# Classical Latin: 23 letters, j and v folded onto i and u
name: la
letters: abcdefghiklmnopqrstuxyz
vowels: aeiouy
fold: j > i
fold: v > u
fold: w > -
fold: ā > a
fold: ē > e
fold: ī > i
fold: ō > o
fold: ū > u
fold: ȳ > y
)";

constexpr std::string_view kFrench = R"(name: fr
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiouy
fold: à > a
fold: â > a
fold: ä > a
fold: ç > c
fold: é > e
fold: è > e
fold: ê > e
fold: ë > e
fold: î > i
fold: ï > i
fold: ô > o
fold: ö > o
fold: ù > u
fold: û > u
fold: ü > u
fold: ÿ > y
)";

constexpr std::string_view kItalian = R"(name: it
letters: abcdefghijklmnopqrstuvwxyz
vowels: aeiou
fold: à > a
fold: á > a
fold: è > e
fold: é > e
fold: ì > i
fold: í > i
fold: ò > o
fold: ó > o
fold: ù > u
fold: ú > u
)";

struct Builtin {
  std::string_view name;
  std::string_view spec;
};

constexpr std::array kBuiltins{
    Builtin{"en", kEnglish},  Builtin{"en-y-vowel", kEnglishYVowel}, Builtin{"la", kLatin},
    Builtin{"fr", kFrench},   Builtin{"it", kItalian},
};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::u32string symbols_of(std::string_view value) {
  std::u32string out;
  for (char32_t c : utf8::decode(value)) {
    if (!utf8::is_space(c)) out.push_back(c);
  }
  return out;
}

std::string describe(char32_t c) { return "'" + utf8::encode(c) + "'"; }

}  // namespace

Alphabet Alphabet::make(std::string name, std::u32string letters, std::u32string vowels,
                        std::vector<FoldRule> folds) {
  return build(std::move(name), std::move(letters), std::move(vowels), std::move(folds), {}, 0, 0);
}

Alphabet Alphabet::build(std::string name, std::u32string letters, std::u32string vowels,
                         std::vector<FoldRule> folds, std::span<const std::size_t> fold_lines,
                         std::size_t letters_line, std::size_t vowels_line) {
  if (name.empty()) throw AlphabetError(0, "alphabet has no name");
  if (letters.empty()) throw AlphabetError(letters_line, "alphabet has no letters");
  if (letters.size() > 0xFFFF) throw AlphabetError(letters_line, "too many letters");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char32_t c = letters[i];
    if (utf8::to_lower(c) != c) {
      throw AlphabetError(letters_line, "letter " + describe(c) + " must be lowercase");
    }
    if (letters.find(c, i + 1) != std::u32string::npos) {
      throw AlphabetError(letters_line, "duplicate letter " + describe(c));
    }
  }
  for (std::size_t i = 0; i < vowels.size(); ++i) {
    const char32_t c = vowels[i];
    if (letters.find(c) == std::u32string::npos) {
      throw AlphabetError(vowels_line, "vowel " + describe(c) + " is not a letter");
    }
    if (vowels.find(c, i + 1) != std::u32string::npos) {
      throw AlphabetError(vowels_line, "duplicate vowel " + describe(c));
    }
  }
  if (vowels.empty()) throw AlphabetError(vowels_line, "vowel set is empty");
  if (vowels.size() == letters.size()) {
    throw AlphabetError(vowels_line, "vowels must be a strict subset of letters");
  }

  Alphabet a;
  a.name_ = std::move(name);
  a.letters_ = std::move(letters);
  a.vowels_ = std::move(vowels);
  a.vowel_mask_.assign(a.letters_.size(), false);
  for (char32_t v : a.vowels_) a.vowel_mask_[a.letters_.find(v)] = true;
  std::fill(std::begin(a.ascii_), std::end(a.ascii_), kUnknown);

  auto set_entry = [&a](char32_t c, std::int32_t value) {
    if (c < 128) {
      a.ascii_[c] = value;
    } else {
      a.wide_[c] = value;
    }
  };
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    set_entry(a.letters_[i], static_cast<std::int32_t>(i));
  }

  for (std::size_t k = 0; k < folds.size(); ++k) {
    const std::size_t line = k < fold_lines.size() ? fold_lines[k] : 0;
    FoldRule rule = folds[k];
    rule.from = utf8::to_lower(rule.from);
    if (a.letters_.find(rule.from) != std::u32string::npos) {
      throw AlphabetError(line, "fold source " + describe(rule.from) + " is already a letter");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (a.folds_[j].from == rule.from) {
        throw AlphabetError(line, "duplicate fold for " + describe(rule.from));
      }
    }
    std::int32_t value = kDiscard;
    if (rule.target) {
      const auto t = a.letters_.find(*rule.target);
      if (t == std::u32string::npos) {
        throw AlphabetError(line, "fold target " + describe(*rule.target) + " is not a letter");
      }
      value = static_cast<std::int32_t>(t);
    }
    set_entry(rule.from, value);
    a.folds_.push_back(rule);
  }
  return a;
}

std::optional<Letter> Alphabet::index_of(char32_t c) const {
  const auto i = letters_.find(c);
  if (i == std::u32string::npos) return std::nullopt;
  return static_cast<Letter>(i);
}

std::optional<Letter> Alphabet::classify(char32_t raw) const {
  const char32_t c = utf8::to_lower(raw);
  std::int32_t v;
  if (c < 128) {
    v = ascii_[c];
  } else {
    const auto it = wide_.find(c);
    v = it == wide_.end() ? kUnknown : it->second;
  }
  if (v < 0) return std::nullopt;
  return static_cast<Letter>(v);
}

std::string Alphabet::to_spec() const {
  std::string out = "name: " + name_ + "\nletters: " + utf8::encode(letters_) +
                    "\nvowels: " + utf8::encode(vowels_) + "\n";
  for (const auto& f : folds_) {
    out += "fold: " + utf8::encode(f.from) + " > " + (f.target ? utf8::encode(*f.target) : "-") +
           "\n";
  }
  return out;
}

AlphabetRef load_alphabet(std::string_view spec_text) {
  std::string name;
  std::u32string letters;
  std::u32string vowels;
  std::vector<FoldRule> folds;
  std::vector<std::size_t> fold_lines;
  std::size_t letters_line = 0;
  std::size_t vowels_line = 0;
  bool have_name = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= spec_text.size()) {
    auto nl = spec_text.find('\n', pos);
    if (nl == std::string_view::npos) nl = spec_text.size();
    const std::string_view line = trim(spec_text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw AlphabetError(line_no, "expected '<key>: <value>'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key == "name") {
      if (have_name) throw AlphabetError(line_no, "duplicate 'name' entry");
      if (value.empty()) throw AlphabetError(line_no, "empty name");
      name = std::string(value);
      have_name = true;
    } else if (key == "letters") {
      if (letters_line != 0) throw AlphabetError(line_no, "duplicate 'letters' entry");
      letters = symbols_of(value);
      letters_line = line_no;
    } else if (key == "vowels") {
      if (vowels_line != 0) throw AlphabetError(line_no, "duplicate 'vowels' entry");
      vowels = symbols_of(value);
      vowels_line = line_no;
    } else if (key == "fold") {
      const std::u32string parts = symbols_of(value);
      if (parts.size() != 3 || parts[1] != U'>') {
        throw AlphabetError(line_no, "expected 'fold: <char> > <letter|->'");
      }
      FoldRule rule{parts[0], std::nullopt};
      if (parts[2] != U'-') rule.target = parts[2];
      folds.push_back(rule);
      fold_lines.push_back(line_no);
    } else {
      throw AlphabetError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_name) throw AlphabetError(0, "missing 'name' entry");
  if (letters_line == 0) throw AlphabetError(0, "missing 'letters' entry");
  if (vowels_line == 0) throw AlphabetError(0, "missing 'vowels' entry");
  return std::make_shared<const Alphabet>(Alphabet::build(std::move(name), std::move(letters),
                                                          std::move(vowels), std::move(folds),
                                                          fold_lines, letters_line, vowels_line));
}

std::string_view builtin_alphabet_spec(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return b.spec;
  }
  return {};
}

AlphabetRef builtin_alphabet(std::string_view name) {
  const auto spec = builtin_alphabet_spec(name);
  if (spec.empty()) throw Error("unknown builtin alphabet '" + std::string(name) + "'");
  return load_alphabet(spec);
}

std::vector<std::string> builtin_alphabet_names() {
  std::vector<std::string> names;
  for (const auto& b : kBuiltins) names.emplace_back(b.name);
  return names;
}

AlphabetRef resolve_alphabet(std::string_view name_or_path) {
  if (!builtin_alphabet_spec(name_or_path).empty()) return builtin_alphabet(name_or_path);
  std::ifstream in{std::string(name_or_path), std::ios::binary};
  if (!in) {
    throw Error("'" + std::string(name_or_path) +
                "' is neither a builtin alphabet nor a readable alphabet file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_alphabet(buf.str());
  } catch (const AlphabetError& e) {
    throw AlphabetError(0, std::string(name_or_path) + ": " + e.what());
  }
}

LetterSequence normalize(std::string_view raw, AlphabetRef alphabet, std::string label) {
  LetterSequence seq{alphabet, {}, {std::move(label), 0}};
  seq.symbols.reserve(raw.size());
  for (char32_t c : utf8::decode(raw)) {
    if (auto l = alphabet->classify(c)) {
      seq.symbols.push_back(*l);
    } else {
      ++seq.source.discarded;
    }
  }
  return seq;
}

WordSequence tokenize_words(std::string_view raw, AlphabetRef alphabet, std::string label) {
  WordSequence out{alphabet, {}, {std::move(label), 0}};
  Word current;
  for (char32_t c : utf8::decode(raw)) {
    if (auto l = alphabet->classify(c)) {
      current.push_back(*l);
      continue;
    }
    ++out.source.discarded;
    if (!current.empty()) {
      out.words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.words.push_back(std::move(current));
  return out;
}

std::string render(const Alphabet& alphabet, std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter l : letters) utf8::append(out, alphabet.symbol(l));
  return out;
}

std::string render(const LetterSequence& seq) { return render(*seq.alphabet, seq.symbols); }

LetterSequence slice(const LetterSequence& seq, std::size_t begin, std::size_t count) {
  begin = std::min(begin, seq.size());
  count = std::min(count, seq.size() - begin);
  LetterSequence out{seq.alphabet, {}, seq.source};
  out.symbols.assign(seq.symbols.begin() + static_cast<std::ptrdiff_t>(begin),
                     seq.symbols.begin() + static_cast<std::ptrdiff_t>(begin + count));
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (&a == &b || a == b) return;
  throw Error(std::string(what) + ": alphabet mismatch ('" + a.name() + "' vs '" + b.name() + "')");
}

}  // namespace letterstat
