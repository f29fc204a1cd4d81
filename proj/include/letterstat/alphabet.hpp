#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace letterstat {

/// Index of a letter within its alphabet's `letters()` order.
using Letter = std::uint16_t;

/// A fold rule maps an external character onto a letter, or discards it
/// when `target` is empty.
struct FoldRule {
  char32_t from;
  std::optional<char32_t> target;

  friend bool operator==(const FoldRule&, const FoldRule&) = default;
};

/// Ordered symbol inventory with a vowel subset and character folds.
///
/// Letter order is significant: it is the tie-break order for every ranking
/// in the library. Construct through `Alphabet::make`, `load_alphabet` or
/// `builtin_alphabet`; all of them enforce:
///   - letters pairwise distinct, at most 65535 of them;
///   - vowels a nonempty strict subset of letters;
///   - every fold target is a letter.
class Alphabet {
 public:
  static Alphabet make(std::string name, std::u32string letters, std::u32string vowels,
                       std::vector<FoldRule> folds = {});

  const std::string& name() const noexcept { return name_; }
  std::u32string_view letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char32_t symbol(Letter l) const { return letters_[l]; }
  bool is_vowel(Letter l) const { return vowel_mask_[l]; }
  std::u32string_view vowels() const noexcept { return vowels_; }
  std::span<const FoldRule> folds() const noexcept { return folds_; }

  /// Exact membership: the letter index of `c`, without case or fold mapping.
  std::optional<Letter> index_of(char32_t c) const;

  /// Maps a raw character through lowercasing and the fold table.
  /// Returns nullopt when the character is discarded.
  std::optional<Letter> classify(char32_t raw) const;

  /// Renders the alphabet back into the line-oriented document format.
  std::string to_spec() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.name_ == b.name_ && a.letters_ == b.letters_ && a.vowels_ == b.vowels_ &&
           a.folds_ == b.folds_;
  }

 private:
  Alphabet() = default;

  // Validates and assembles; line numbers (0 = unknown) are used in errors.
  static Alphabet build(std::string name, std::u32string letters, std::u32string vowels,
                        std::vector<FoldRule> folds, std::span<const std::size_t> fold_lines,
                        std::size_t letters_line, std::size_t vowels_line);
  friend std::shared_ptr<const Alphabet> load_alphabet(std::string_view spec_text);

  static constexpr std::int32_t kDiscard = -1;
  static constexpr std::int32_t kUnknown = -2;

  std::string name_;
  std::u32string letters_;
  std::u32string vowels_;
  std::vector<FoldRule> folds_;
  std::vector<bool> vowel_mask_;
  std::int32_t ascii_[128];
  std::unordered_map<char32_t, std::int32_t> wide_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

/// Parses an alphabet document:
///
///     # comment
///     name: en
///     letters: abcdefghijklmnopqrstuvwxyz
///     vowels: aeiou
///     fold: é > e
///     fold: ' > -
///
/// Whitespace inside `letters:`/`vowels:` values is ignored. Errors carry
/// the offending line number.
AlphabetRef load_alphabet(std::string_view spec_text);

/// Built-in alphabets: "en", "en-y-vowel", "la", "fr", "it".
AlphabetRef builtin_alphabet(std::string_view name);
std::vector<std::string> builtin_alphabet_names();
std::string_view builtin_alphabet_spec(std::string_view name);

/// A builtin name, or else a path to an alphabet document.
AlphabetRef resolve_alphabet(std::string_view name_or_path);

/// Number of raw characters dropped during normalization travels with the
/// sequence.
struct Provenance {
  std::string label;
  std::size_t discarded = 0;
};

struct LetterSequence {
  AlphabetRef alphabet;
  std::vector<Letter> symbols;
  Provenance source;

  std::size_t size() const noexcept { return symbols.size(); }
  bool empty() const noexcept { return symbols.empty(); }
};

using Word = std::vector<Letter>;

struct WordSequence {
  AlphabetRef alphabet;
  std::vector<Word> words;
  Provenance source;

  std::size_t size() const noexcept { return words.size(); }
};

/// Lowercase, fold, drop everything that is not a letter.
LetterSequence normalize(std::string_view raw, AlphabetRef alphabet, std::string label = {});

/// Maximal runs of letters become words; any discarded character (space,
/// punctuation, apostrophe, hyphen, digit) separates words.
WordSequence tokenize_words(std::string_view raw, AlphabetRef alphabet, std::string label = {});

std::string render(const Alphabet& alphabet, std::span<const Letter> letters);
std::string render(const LetterSequence& seq);

/// Contiguous sub-sequence `[begin, begin + count)`, clamped to the end.
LetterSequence slice(const LetterSequence& seq, std::size_t begin, std::size_t count);

/// Throws `Error` unless both alphabets are the same value.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

}  // namespace letterstat
