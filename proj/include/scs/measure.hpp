#pragma once

#include "scs/rational.hpp"
#include "scs/words.hpp"

namespace scs {

/// Probability assignment on Sigma^k with exact rational values.
class Measure {
 public:
  Measure(AlphabetPtr alphabet, int k, VectorXq values);

  static Measure uniform(AlphabetPtr alphabet, int k);
  /// Point mass at the given length-k pattern.
  static Measure dirac(const Word& pattern);

  int k() const { return k_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  int num_patterns() const { return static_cast<int>(values_.size()); }
  const VectorXq& values() const { return values_; }
  const Rational& operator[](int pattern) const { return values_[pattern]; }
  const Rational& at(const Word& pattern) const;

  /// Exact marginal equality of the two (k-1)-marginals.
  bool is_shift_invariant() const;

  /// Least common denominator M: M * values is an integer vector.
  BigInt common_denominator() const;

  bool operator==(const Measure& other) const {
    return k_ == other.k_ && values_ == other.values_;
  }

 private:
  AlphabetPtr alphabet_;
  int k_;
  VectorXq values_;
};

/// fr_w^k: the empirical distribution of the length-k windows of w.
Measure kmer_frequency(const Word& w, int k);

/// Convex combination sum_i weights[i] * measures[i]; weights must sum to 1.
Measure mix(const std::vector<Measure>& measures, const std::vector<Rational>& weights);

}  // namespace scs
