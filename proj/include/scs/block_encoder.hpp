#pragma once

#include "scs/constraints.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace scs {

/// R_m = B_m(Gamma_eps)^*: the single-state block code with enumerative
/// (rank/unrank) coding over the sorted codeword list.
struct BlockCode {
  AlphabetPtr alphabet;
  int k = 0;
  int m = 0;
  Rational eps = 0;
  std::vector<Word> codewords;  // lexicographically sorted, distinct
  int bits_per_block = 0;       // floor(log2 |codewords|)
};

/// M_eps = ceil((k-1)/eps): block lengths above this always concatenate safely.
long min_block_length(int k, const Rational& eps);

struct BlockVerification {
  bool ok = false;
  /// When !ok: the constraint index whose limit frequency is exceeded and the
  /// worst-case asymptotic value of a.fr over concatenations.
  int violated_constraint = -1;
  Rational limit_value = 0;
  /// A codeword in B_m(Gamma_eps) whose self-concatenation realizes the
  /// violation, when one could be synthesized.
  std::optional<Word> witness;
};

/// Decides whether every concatenation from B_m(Gamma_eps)^* stays admissible
/// in Gamma, by maximizing each constraint's asymptotic frequency over the
/// per-codeword count polytope plus the worst-case junction contribution.
BlockVerification verify_block_length(const ConstraintSet& gamma, const Rational& eps, int m);

/// Enumerates B_m(shrink(gamma, eps)) and freezes the rank table.
/// Throws infeasible_error when the codebook is empty or carries no bits,
/// and when gamma is relatively fat but not fat (junction-string synthesis
/// for such systems is not supported).
BlockCode build_block_code(const ConstraintSet& gamma, const Rational& eps, int m,
                           bool skip_safety_check = false);

struct BlockRate {
  double achieved;  // bits_per_block / m
  double ceiling;   // log2 |codewords| / m
};
BlockRate block_rate(const BlockCode& code);

/// Bits are 0/1 bytes. Payload length must be a multiple of bits_per_block.
Word block_encode(const BlockCode& code, const std::vector<uint8_t>& bits);
std::vector<uint8_t> block_decode(const BlockCode& code, const Word& w);

/// Versioned binary code-table format (magic, version, m, k, eps, alphabet,
/// codeword list).
void save_block_code(const BlockCode& code, std::ostream& out);
BlockCode load_block_code(std::istream& in);

}  // namespace scs
