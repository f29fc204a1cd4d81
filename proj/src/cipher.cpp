#include "letterstat/cipher.hpp"

#include <algorithm>
#include <numeric>

#include "letterstat/error.hpp"
#include "letterstat/rng.hpp"
#include "letterstat/utf8.hpp"

namespace letterstat {

SubstitutionKey::SubstitutionKey(AlphabetRef alphabet, std::u32string inventory,
                                 std::vector<Symbol> mapping)
    : alphabet_(std::move(alphabet)),
      inventory_(std::move(inventory)),
      forward_(std::move(mapping)) {
  const std::size_t n = alphabet_->size();
  if (inventory_.size() != n) {
    throw Error("substitution key: inventory has " + std::to_string(inventory_.size()) +
                " symbols, alphabet has " + std::to_string(n) + " letters");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (inventory_.find(inventory_[i], i + 1) != std::u32string::npos) {
      throw Error("substitution key: duplicate inventory symbol '" +
                  utf8::encode(inventory_[i]) + "'");
    }
  }
  if (forward_.size() != n) throw Error("substitution key: mapping is not total");
  inverse_.assign(n, Letter{0});
  std::vector<bool> hit(n, false);
  for (std::size_t l = 0; l < n; ++l) {
    const Symbol s = forward_[l];
    if (s >= n || hit[s]) throw Error("substitution key: mapping is not injective");
    hit[s] = true;
    inverse_[s] = static_cast<Letter>(l);
  }
}

SubstitutionKey SubstitutionKey::identity(AlphabetRef alphabet) { return shift(alphabet, 0); }

SubstitutionKey SubstitutionKey::shift(AlphabetRef alphabet, std::size_t k) {
  const std::size_t n = alphabet->size();
  std::vector<Symbol> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Symbol>((i + k) % n);
  std::u32string inv(alphabet->letters());
  return SubstitutionKey(std::move(alphabet), std::move(inv), std::move(m));
}

SubstitutionKey SubstitutionKey::random(AlphabetRef alphabet, std::uint64_t seed) {
  const std::size_t n = alphabet->size();
  std::vector<Symbol> m(n);
  std::iota(m.begin(), m.end(), Symbol{0});
  SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(m[i - 1], m[rng.below(i)]);
  }
  std::u32string inv(alphabet->letters());
  return SubstitutionKey(std::move(alphabet), std::move(inv), std::move(m));
}

std::string SubstitutionKey::to_string() const {
  std::string out;
  for (Symbol s : forward_) utf8::append(out, inventory_[s]);
  return out;
}

SubstitutionKey compose(const SubstitutionKey& first, const SubstitutionKey& second) {
  require_same_alphabet(*first.alphabet(), *second.alphabet(), "compose");
  if (second.inventory() != first.alphabet()->letters()) {
    throw Error("compose: second key must map onto the alphabet's letters");
  }
  const std::size_t n = first.alphabet()->size();
  std::vector<Symbol> m(n);
  for (std::size_t l = 0; l < n; ++l) {
    m[l] = first.encrypt(static_cast<Letter>(second.encrypt(static_cast<Letter>(l))));
  }
  return SubstitutionKey(first.alphabet(), std::u32string(first.inventory()), std::move(m));
}

Cryptogram parse_cryptogram(std::string_view text, AlphabetRef alphabet,
                            std::optional<std::u32string> inventory, std::string label) {
  Cryptogram c;
  c.inventory = inventory ? std::move(*inventory) : std::u32string(alphabet->letters());
  if (c.inventory.size() != alphabet->size()) {
    throw Error("cryptogram: inventory size differs from alphabet size");
  }
  c.alphabet = std::move(alphabet);
  c.source.label = std::move(label);
  std::size_t line = 1;
  for (char32_t ch : utf8::decode(text)) {
    if (ch == U'\n') ++line;
    if (utf8::is_space(ch)) {
      ++c.source.discarded;
      continue;
    }
    auto pos = c.inventory.find(ch);
    if (pos == std::u32string::npos) pos = c.inventory.find(utf8::to_lower(ch));
    if (pos == std::u32string::npos) {
      throw Error("cryptogram line " + std::to_string(line) + ": symbol '" + utf8::encode(ch) +
                  "' is outside the cipher inventory");
    }
    c.symbols.push_back(static_cast<Symbol>(pos));
  }
  return c;
}

Cryptogram as_cryptogram(const LetterSequence& seq) {
  Cryptogram c{seq.alphabet, std::u32string(seq.alphabet->letters()), {}, seq.source};
  c.symbols.assign(seq.symbols.begin(), seq.symbols.end());
  return c;
}

std::string render(const Cryptogram& c) {
  std::string out;
  out.reserve(c.size());
  for (Symbol s : c.symbols) utf8::append(out, c.inventory[s]);
  return out;
}

Cryptogram encrypt(const LetterSequence& seq, const SubstitutionKey& key) {
  require_same_alphabet(*seq.alphabet, *key.alphabet(), "encrypt");
  Cryptogram c{seq.alphabet, std::u32string(key.inventory()), {}, seq.source};
  c.symbols.resize(seq.size());
  std::transform(seq.symbols.begin(), seq.symbols.end(), c.symbols.begin(),
                 [&](Letter l) { return key.encrypt(l); });
  return c;
}

LetterSequence decrypt(const Cryptogram& c, const SubstitutionKey& key) {
  require_same_alphabet(*c.alphabet, *key.alphabet(), "decrypt");
  if (c.inventory != key.inventory()) throw Error("decrypt: key and cryptogram inventories differ");
  LetterSequence seq{c.alphabet, {}, c.source};
  seq.symbols.resize(c.size());
  std::transform(c.symbols.begin(), c.symbols.end(), seq.symbols.begin(),
                 [&](Symbol s) { return key.decrypt(s); });
  return seq;
}

SymbolCounts count_symbols(const Cryptogram& c) {
  SymbolCounts sc{c.inventory, std::vector<std::uint64_t>(c.inventory.size(), 0), c.size()};
  for (Symbol s : c.symbols) ++sc.counts[s];
  return sc;
}

SubstitutionKey frequency_match_key(const SymbolCounts& cipher, const FrequencyTable& reference) {
  const std::size_t n = reference.alphabet->size();
  if (cipher.counts.size() != n || cipher.inventory.size() != n) {
    throw Error("frequency_match_key: cipher has " + std::to_string(cipher.counts.size()) +
                " symbols, reference alphabet has " + std::to_string(n) + " letters");
  }
  std::vector<Symbol> cipher_rank(n);
  std::iota(cipher_rank.begin(), cipher_rank.end(), Symbol{0});
  std::stable_sort(cipher_rank.begin(), cipher_rank.end(),
                   [&](Symbol a, Symbol b) { return cipher.counts[a] > cipher.counts[b]; });
  const auto ref_rank = rank_order(reference);
  std::vector<Symbol> m(n);
  for (std::size_t i = 0; i < n; ++i) m[ref_rank[i]] = cipher_rank[i];
  return SubstitutionKey(reference.alphabet, cipher.inventory, std::move(m));
}

std::optional<LengthWarning> length_check(const Cryptogram& c, std::size_t threshold) {
  if (c.size() < threshold) return LengthWarning{c.size(), threshold};
  return std::nullopt;
}

}  // namespace letterstat
