#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letterstat/alphabet.hpp"
#include "letterstat/freq.hpp"

namespace letterstat {

/// Index into a ciphertext symbol inventory.
using Symbol = std::uint16_t;

/// Ciphertext over a fixed inventory of exactly `alphabet->size()` distinct
/// symbols. `symbols` holds inventory indices.
struct Cryptogram {
  AlphabetRef alphabet;
  std::u32string inventory;
  std::vector<Symbol> symbols;
  Provenance source;

  std::size_t size() const noexcept { return symbols.size(); }
  bool empty() const noexcept { return symbols.empty(); }
};

/// Bijection from plaintext letters onto a ciphertext inventory.
class SubstitutionKey {
 public:
  /// Validates that `mapping` is a permutation of [0, n) and that the
  /// inventory has n distinct symbols.
  SubstitutionKey(AlphabetRef alphabet, std::u32string inventory, std::vector<Symbol> mapping);

  /// Inventory = the alphabet's own letters, every letter maps to itself.
  static SubstitutionKey identity(AlphabetRef alphabet);
  /// Letter i maps to letter (i + k) mod n of the alphabet.
  static SubstitutionKey shift(AlphabetRef alphabet, std::size_t k);
  /// Uniformly random permutation of the alphabet's letters (Fisher-Yates
  /// driven by SplitMix64).
  static SubstitutionKey random(AlphabetRef alphabet, std::uint64_t seed);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  std::u32string_view inventory() const noexcept { return inventory_; }
  std::span<const Symbol> mapping() const noexcept { return forward_; }

  Symbol encrypt(Letter l) const { return forward_[l]; }
  Letter decrypt(Symbol s) const { return inverse_[s]; }
  char32_t symbol_for(Letter l) const { return inventory_[forward_[l]]; }

  /// Cipher symbols written in plaintext-letter order, e.g. "qwerty...".
  std::string to_string() const;

  friend bool operator==(const SubstitutionKey& a, const SubstitutionKey& b) {
    return *a.alphabet_ == *b.alphabet_ && a.inventory_ == b.inventory_ &&
           a.forward_ == b.forward_;
  }

 private:
  AlphabetRef alphabet_;
  std::u32string inventory_;
  std::vector<Symbol> forward_;
  std::vector<Letter> inverse_;
};

/// Key K with decrypt(c, K) == decrypt(as_cryptogram(decrypt(c, first)), second).
/// `second` must use the alphabet's letters as its inventory.
SubstitutionKey compose(const SubstitutionKey& first, const SubstitutionKey& second);

/// Reads ciphertext where every non-whitespace character is one symbol.
/// Symbols are matched exactly, then after lowercasing; anything outside the
/// inventory is an error. The default inventory is the alphabet's letters.
Cryptogram parse_cryptogram(std::string_view text, AlphabetRef alphabet,
                            std::optional<std::u32string> inventory = std::nullopt,
                            std::string label = {});

/// Reinterprets plaintext as ciphertext over the alphabet's own letters.
Cryptogram as_cryptogram(const LetterSequence& seq);

std::string render(const Cryptogram& c);

Cryptogram encrypt(const LetterSequence& seq, const SubstitutionKey& key);
LetterSequence decrypt(const Cryptogram& c, const SubstitutionKey& key);

/// Occurrences of each inventory symbol.
struct SymbolCounts {
  std::u32string inventory;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

SymbolCounts count_symbols(const Cryptogram& c);

/// Rank matching: the i-th most frequent reference letter maps to the i-th
/// most frequent cipher symbol. Ties resolve by alphabet order on the
/// reference side and inventory order on the cipher side.
SubstitutionKey frequency_match_key(const SymbolCounts& cipher, const FrequencyTable& reference);

struct LengthWarning {
  std::size_t length;
  std::size_t threshold;
};

inline constexpr std::size_t kDefaultLengthThreshold = 90;

/// Warns when the cryptogram is shorter than `threshold` symbols.
std::optional<LengthWarning> length_check(const Cryptogram& c,
                                          std::size_t threshold = kDefaultLengthThreshold);

}  // namespace letterstat
