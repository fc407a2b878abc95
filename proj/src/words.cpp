#include "scs/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scs/rational.hpp"

namespace scs {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  single_char_ = true;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw std::invalid_argument("empty symbol name");
    if (symbols_[i].size() != 1) single_char_ = false;
    for (size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j]) throw std::invalid_argument("duplicate symbol name");
  }
}

std::shared_ptr<const Alphabet> Alphabet::binary() { return from_chars("01"); }

std::shared_ptr<const Alphabet> Alphabet::from_chars(const std::string& chars) {
  std::vector<std::string> symbols;
  for (char c : chars) symbols.emplace_back(1, c);
  return std::make_shared<Alphabet>(std::move(symbols));
}

std::optional<int> Alphabet::index_of(const std::string& name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Word::Word(AlphabetPtr alphabet, std::vector<uint8_t> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
  if (!alphabet_) throw std::invalid_argument("word without alphabet");
  for (uint8_t s : symbols_)
    if (s >= alphabet_->size()) throw std::invalid_argument("symbol index out of range");
}

Word Word::parse(AlphabetPtr alphabet, const std::string& text) {
  std::vector<uint8_t> symbols;
  if (alphabet->single_char()) {
    for (char c : text) {
      auto idx = alphabet->index_of(std::string(1, c));
      if (!idx) throw parse_error("unknown symbol '" + std::string(1, c) + "'");
      symbols.push_back(static_cast<uint8_t>(*idx));
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      auto idx = alphabet->index_of(tok);
      if (!idx) throw parse_error("unknown symbol '" + tok + "'");
      symbols.push_back(static_cast<uint8_t>(*idx));
    }
  }
  return Word(std::move(alphabet), std::move(symbols));
}

Word Word::subword(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > size()) throw std::out_of_range("subword range");
  return Word(alphabet_, std::vector<uint8_t>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < symbols_.size(); ++i) {
    if (i && !alphabet_->single_char()) out += ',';
    out += alphabet_->name(symbols_[i]);
  }
  return out;
}

std::vector<Word> subwords(const Word& w, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  if (w.size() < k) throw std::length_error("word shorter than k");
  std::vector<Word> out;
  out.reserve(w.size() - k + 1);
  for (int i = 0; i + k <= w.size(); ++i) out.push_back(w.subword(i, k));
  return out;
}

Word suffchop(const Word& w, int j) {
  if (j < 0 || w.size() < j) throw std::length_error("suffchop beyond word length");
  return w.subword(0, w.size() - j);
}

Word concat(const Word& a, const Word& b) {
  std::vector<uint8_t> symbols = a.symbols();
  symbols.insert(symbols.end(), b.symbols().begin(), b.symbols().end());
  return Word(a.alphabet() ? a.alphabet() : b.alphabet(), std::move(symbols));
}

Word power(const Word& w, int m) {
  std::vector<uint8_t> symbols;
  symbols.reserve(static_cast<size_t>(w.size()) * m);
  for (int i = 0; i < m; ++i)
    symbols.insert(symbols.end(), w.symbols().begin(), w.symbols().end());
  return Word(w.alphabet(), std::move(symbols));
}

int pattern_index(const Word& pattern) {
  return pattern_index(pattern.symbols(), pattern.alphabet()->size());
}

int pattern_index(const std::vector<uint8_t>& symbols, int sigma) {
  int idx = 0;
  for (uint8_t s : symbols) idx = idx * sigma + s;
  return idx;
}

Word index_to_pattern(const AlphabetPtr& alphabet, int index, int k) {
  std::vector<uint8_t> symbols(k);
  int sigma = alphabet->size();
  for (int i = k - 1; i >= 0; --i) {
    symbols[i] = static_cast<uint8_t>(index % sigma);
    index /= sigma;
  }
  return Word(alphabet, std::move(symbols));
}

}  // namespace scs
