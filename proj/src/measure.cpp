#include "scs/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace scs {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw parse_error("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text), 1);
    std::string intpart = text.substr(0, dot);
    std::string fracpart = text.substr(dot + 1);
    bool negative = !intpart.empty() && intpart[0] == '-';
    if (intpart.empty() || intpart == "-" || intpart == "+") intpart += "0";
    BigInt den = 1;
    for (size_t i = 0; i < fracpart.size(); ++i) den *= 10;
    Rational value(BigInt(intpart), 1);
    Rational frac(fracpart.empty() ? BigInt(0) : BigInt(fracpart), den);
    return negative ? Rational(value - frac) : Rational(value + frac);
  } catch (const std::exception& e) {
    throw parse_error("bad rational '" + text + "': " + e.what());
  }
}

std::string to_string(const Rational& q) { return q.str(); }

Measure::Measure(AlphabetPtr alphabet, int k, VectorXq values)
    : alphabet_(std::move(alphabet)), k_(k), values_(std::move(values)) {
  if (k_ <= 0) throw std::invalid_argument("k must be positive");
  long expected = 1;
  for (int i = 0; i < k_; ++i) expected *= alphabet_->size();
  if (values_.size() != expected) throw std::invalid_argument("measure dimension mismatch");
  Rational sum = 0;
  for (long i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw std::invalid_argument("negative measure value");
    sum += values_[i];
  }
  if (sum != 1) throw std::invalid_argument("measure values must sum to 1");
}

Measure Measure::uniform(AlphabetPtr alphabet, int k) {
  long n = 1;
  for (int i = 0; i < k; ++i) n *= alphabet->size();
  VectorXq values = VectorXq::Constant(n, Rational(1, n));
  return Measure(std::move(alphabet), k, std::move(values));
}

Measure Measure::dirac(const Word& pattern) {
  long n = 1;
  for (int i = 0; i < pattern.size(); ++i) n *= pattern.alphabet()->size();
  VectorXq values = VectorXq::Zero(n);
  values[pattern_index(pattern)] = 1;
  return Measure(pattern.alphabet(), pattern.size(), std::move(values));
}

const Rational& Measure::at(const Word& pattern) const {
  if (pattern.size() != k_) throw std::invalid_argument("pattern length mismatch");
  return values_[pattern_index(pattern)];
}

bool Measure::is_shift_invariant() const {
  int sigma = alphabet_->size();
  long n_prefix = values_.size() / sigma;
  for (long phi = 0; phi < n_prefix; ++phi) {
    Rational left = 0, right = 0;
    for (int a = 0; a < sigma; ++a) {
      left += values_[a * n_prefix + phi];   // a phi
      right += values_[phi * sigma + a];     // phi a
    }
    if (left != right) return false;
  }
  return true;
}

BigInt Measure::common_denominator() const {
  BigInt m = 1;
  for (long i = 0; i < values_.size(); ++i)
    m = boost::multiprecision::lcm(m, boost::multiprecision::denominator(values_[i]));
  return m;
}

Measure kmer_frequency(const Word& w, int k) {
  if (k <= 0) throw std::invalid_argument("k must be positive");
  if (w.size() < k) throw std::length_error("word shorter than k");
  int sigma = w.alphabet()->size();
  long n = 1;
  for (int i = 0; i < k; ++i) n *= sigma;
  std::vector<long> counts(n, 0);
  long window = 0;
  long mod = n / sigma;
  for (int i = 0; i < w.size(); ++i) {
    window = (window % mod) * sigma + w[i];
    if (i >= k - 1) ++counts[window];
  }
  long total = w.size() - k + 1;
  VectorXq values(n);
  for (long i = 0; i < n; ++i) values[i] = Rational(counts[i], total);
  return Measure(w.alphabet(), k, std::move(values));
}

Measure mix(const std::vector<Measure>& measures, const std::vector<Rational>& weights) {
  if (measures.empty() || measures.size() != weights.size())
    throw std::invalid_argument("mix needs matching nonempty inputs");
  VectorXq values = VectorXq::Zero(measures[0].num_patterns());
  for (size_t i = 0; i < measures.size(); ++i) values += weights[i] * measures[i].values();
  return Measure(measures[0].alphabet(), measures[0].k(), std::move(values));
}

}  // namespace scs
