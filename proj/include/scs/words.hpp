#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace scs {

/// Ordered finite alphabet. Symbol order is total and fixed; it defines the
/// lexicographic order used everywhere downstream.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  static std::shared_ptr<const Alphabet> binary();
  /// One symbol per character, e.g. "01" or "abc".
  static std::shared_ptr<const Alphabet> from_chars(const std::string& chars);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int i) const { return symbols_.at(i); }
  std::optional<int> index_of(const std::string& name) const;
  bool single_char() const { return single_char_; }
  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  bool single_char_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Immutable finite word over an alphabet; symbols stored as indices.
class Word {
 public:
  Word() = default;
  Word(AlphabetPtr alphabet, std::vector<uint8_t> symbols);
  /// Parses a serialized word: one character per symbol for single-character
  /// alphabets, comma-separated symbol names otherwise.
  static Word parse(AlphabetPtr alphabet, const std::string& text);
  static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

  int size() const { return static_cast<int>(symbols_.size()); }
  bool is_empty() const { return symbols_.empty(); }
  uint8_t operator[](int i) const { return symbols_[i]; }
  const std::vector<uint8_t>& symbols() const { return symbols_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  Word subword(int pos, int len) const;
  std::string str() const;

  bool operator==(const Word& other) const { return symbols_ == other.symbols_; }
  bool operator<(const Word& other) const { return symbols_ < other.symbols_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<uint8_t> symbols_;
};

/// The |w|-k+1 length-k windows of w, in order (multiset semantics).
std::vector<Word> subwords(const Word& w, int k);

/// w without its last j symbols.
Word suffchop(const Word& w, int j);

Word concat(const Word& a, const Word& b);

/// Word repeated m times.
Word power(const Word& w, int m);

/// Base-sigma encoding of a length-k pattern; first symbol is most significant.
int pattern_index(const Word& pattern);
int pattern_index(const std::vector<uint8_t>& symbols, int sigma);
Word index_to_pattern(const AlphabetPtr& alphabet, int index, int k);

}  // namespace scs
