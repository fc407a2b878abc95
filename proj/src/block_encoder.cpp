#include "scs/block_encoder.hpp"

#include "scs/graphs.hpp"
#include "scs/stream_io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace scs {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Rational floor_rational(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f, 1);
}

Rational ceil_rational(const Rational& q) { return -floor_rational(-q); }

/// Per-codeword count polytope of B_m(Gamma_eps): counts c >= 0 over patterns
/// with sum = m-k+1 satisfying the closed shrunk constraints scaled by the
/// window count.
LpProblem count_polytope(const ConstraintSet& gs_closed, int m) {
  const int n = gs_closed.num_patterns();
  const Rational windows(m - gs_closed.k() + 1);
  LpProblem lp(n);
  lp.add_eq(VectorXq::Constant(n, 1), windows);
  for (const auto& c : gs_closed.constraints()) {
    if (c.rel == Relation::EQ)
      lp.add_eq(c.coeffs, c.bound * windows);
    else
      lp.add_le(c.coeffs, c.bound * windows);
  }
  return lp;
}

/// Branch-and-bound over integer count vectors in the polytope, maximizing
/// obj subject to obj.c > threshold. Returns the first integral maximizer
/// found, if any.
struct CountSearch {
  const ConstraintSet* gs_closed;
  int m;
  VectorXq obj;
  Rational threshold;
  VectorXq balance_rhs;  // per vertex: required out-in surplus of c
  std::vector<Rational> forced_lower;

  int nodes = 0;
  bool found = false;
  VectorXq best;

  void run() {
    const int n = gs_closed->num_patterns();
    std::vector<Rational> lb(n, 0), ub(n, Rational(m));
    for (int i = 0; i < n; ++i)
      if (forced_lower[i] > lb[i]) lb[i] = forced_lower[i];
    descend(lb, ub);
  }

  void descend(std::vector<Rational> lb, std::vector<Rational> ub) {
    if (found || ++nodes > 2000) return;
    const int n = gs_closed->num_patterns();
    const int sigma = gs_closed->alphabet()->size();
    const int nv = n / sigma;
    LpProblem lp = count_polytope(*gs_closed, m);
    for (int v = 0; v < nv; ++v) {
      VectorXq row = VectorXq::Zero(n);
      for (int a = 0; a < sigma; ++a) row[v * sigma + a] += 1;   // out
      for (int p = 0; p < n; ++p)
        if (p % nv == v) row[p] -= 1;                             // in
      lp.add_eq(std::move(row), balance_rhs[v]);
    }
    for (int i = 0; i < n; ++i) {
      VectorXq e = VectorXq::Zero(n);
      e[i] = 1;
      if (lb[i] > 0) lp.add_ge(e, lb[i]);
      if (ub[i] < Rational(m)) lp.add_le(e, ub[i]);
    }
    lp.set_objective(obj);
    LpResult r = lp.maximize();
    if (r.status != LpStatus::Optimal || r.objective <= threshold) return;
    int frac = -1;
    for (int i = 0; i < n; ++i)
      if (denominator(r.x[i]) != 1) {
        frac = i;
        break;
      }
    if (frac < 0) {
      found = true;
      best = r.x;
      return;
    }
    Rational up = ceil_rational(r.x[frac]), down = floor_rational(r.x[frac]);
    {
      auto lb2 = lb;
      lb2[frac] = up;
      descend(lb2, ub);
    }
    {
      auto ub2 = ub;
      ub2[frac] = down;
      descend(lb, ub2);
    }
  }
};

/// Tries to realize a violating codeword for one constraint: a codeword in
/// B_m(Gamma_eps) ending in u and (conceptually) followed by a copy starting
/// with w, so that the periodic frequency of the constraint exceeds its bound.
std::optional<Word> synthesize_witness(const ConstraintSet& gamma, const ConstraintSet& gs,
                                       const ConstraintSet& gs_closed,
                                       const LinearConstraint& c, int m) {
  const auto& alphabet = gamma.alphabet();
  const int k = gamma.k();
  const int sigma = alphabet->size();
  const int n = gamma.num_patterns();
  const int nv = n / sigma;

  // Pattern-wise achievable upper bounds, for the connectivity-forcing pass.
  std::vector<bool> achievable(n, false);
  for (int i = 0; i < n; ++i) {
    LpProblem lp = count_polytope(gs_closed, m);
    VectorXq e = VectorXq::Zero(n);
    e[i] = 1;
    lp.set_objective(e);
    LpResult r = lp.maximize();
    achievable[i] = r.status == LpStatus::Optimal && r.objective >= 1;
  }

  for (int u = 0; u < nv; ++u) {
    for (int w = 0; w < nv; ++w) {
      Word junction = concat(index_to_pattern(alphabet, u, k - 1),
                             index_to_pattern(alphabet, w, k - 1));
      std::vector<int> j_path;
      Rational gain = 0;
      VectorXq j_count = VectorXq::Zero(n);
      for (const Word& phi : subwords(junction, k)) {
        int p = pattern_index(phi);
        j_path.push_back(p);
        gain += c.coeffs[p];
        j_count[p] += 1;
      }
      Rational threshold = c.bound * m - gain;

      for (int pass = 0; pass < 2; ++pass) {
        CountSearch search;
        search.gs_closed = &gs_closed;
        search.m = m;
        search.obj = c.coeffs;
        search.threshold = threshold;
        search.balance_rhs = VectorXq::Zero(nv);
        for (int v = 0; v < nv; ++v) {
          Rational out = 0, in = 0;
          for (int a = 0; a < sigma; ++a) out += j_count[v * sigma + a];
          for (int p = 0; p < n; ++p)
            if (p % nv == v) in += j_count[p];
          search.balance_rhs[v] = in - out;  // c must cancel J's surplus
        }
        search.forced_lower.assign(n, Rational(0));
        if (pass == 1)
          for (int i = 0; i < n; ++i)
            if (achievable[i]) search.forced_lower[i] = 1;
        search.run();
        if (!search.found) continue;

        std::vector<BigInt> mult(n);
        for (int i = 0; i < n; ++i) mult[i] = numerator(Rational(search.best[i] + j_count[i]));
        MultiDigraph g(alphabet, k, mult);
        if (!g.support_strongly_connected()) continue;
        std::vector<int> route;
        try {
          route = eulerian_cycle(g, u, j_path);
        } catch (const std::invalid_argument&) {
          continue;
        }
        // Rotate the junction path to the back so the linear reading starts
        // at w and ends at u.
        std::vector<int> rotated(route.begin() + (k - 1), route.end());
        rotated.insert(rotated.end(), route.begin(), route.begin() + (k - 1));
        Word word = word_from_route(alphabet, k, w, rotated).subword(0, m);
        if (is_admissible(gs, word)) return word;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

long min_block_length(int k, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  Rational threshold = Rational(k - 1) / eps;
  return numerator(ceil_rational(threshold)).convert_to<long>();
}

BlockVerification verify_block_length(const ConstraintSet& gamma, const Rational& eps, int m) {
  if (m < gamma.k()) throw std::invalid_argument("block length must be at least k");
  BlockVerification out;
  ConstraintSet gs = shrink(gamma, eps);
  ConstraintSet gs_closed = gs.closure();
  if (!is_feasible(gs_closed, /*shift_invariant=*/false)) {
    out.ok = true;  // empty codebook concatenates vacuously
    return out;
  }
  const int n = gamma.num_patterns();
  const int k = gamma.k();

  for (size_t ci = 0; ci < gamma.constraints().size(); ++ci) {
    const auto& c = gamma.constraints()[ci];
    BigInt scale = 1;
    for (int i = 0; i < n; ++i)
      scale = boost::multiprecision::lcm(scale, denominator(c.coeffs[i]));

    auto worst_limit = [&](bool maximize) -> Rational {
      LpProblem lp = count_polytope(gs_closed, m);
      lp.set_objective(c.coeffs);
      LpResult r = maximize ? lp.maximize() : lp.minimize();
      if (r.status != LpStatus::Optimal)
        throw std::logic_error("count polytope should be bounded and feasible");
      // Integer codeword counts put a.c on the grid (1/scale)Z.
      Rational grid = maximize ? Rational(floor_rational(r.objective * scale)) / scale
                               : Rational(ceil_rational(r.objective * scale)) / scale;
      Rational extreme = c.coeffs[0];
      for (int i = 1; i < n; ++i)
        if (maximize ? c.coeffs[i] > extreme : c.coeffs[i] < extreme) extreme = c.coeffs[i];
      return (grid + Rational(k - 1) * extreme) / m;
    };

    Rational hi = worst_limit(true);
    bool violated = c.rel == Relation::LE ? hi > c.bound : hi >= c.bound;
    if (c.rel == Relation::EQ) {
      Rational lo = worst_limit(false);
      violated = hi > c.bound || lo < c.bound;
    }
    if (violated) {
      out.ok = false;
      out.violated_constraint = static_cast<int>(ci);
      out.limit_value = hi;
      if (c.rel != Relation::EQ)
        out.witness = synthesize_witness(gamma, gs, gs_closed, c, m);
      return out;
    }
  }
  out.ok = true;
  return out;
}

BlockCode build_block_code(const ConstraintSet& gamma, const Rational& eps, int m,
                           bool skip_safety_check) {
  if (m < gamma.k()) throw std::invalid_argument("block length must be at least k");
  if (!skip_safety_check) {
    FatnessResult fat = is_fat(gamma);
    if (!fat.fat) {
      if (is_relatively_fat(gamma).fat)
        throw infeasible_error(
            "system is relatively fat but not fat; block coding for such "
            "systems needs junction-string synthesis, which is not supported");
      throw infeasible_error("system is not fat; no eps-shrunk codebook exists");
    }
    if (m <= min_block_length(gamma.k(), eps)) {
      BlockVerification v = verify_block_length(gamma, eps, m);
      if (!v.ok) {
        std::ostringstream msg;
        msg << "block length " << m << " is unsafe: concatenations can reach "
            << "frequency " << to_string(v.limit_value) << " on constraint "
            << v.violated_constraint;
        throw infeasible_error(msg.str());
      }
    }
  }
  BlockCode code;
  code.alphabet = gamma.alphabet();
  code.k = gamma.k();
  code.m = m;
  code.eps = eps;
  code.codewords = enumerate_admissible(shrink(gamma, eps), m);
  if (code.codewords.empty()) throw infeasible_error("empty codeword set");
  size_t count = code.codewords.size();
  int bits = 0;
  while ((size_t(1) << (bits + 1)) <= count) ++bits;
  code.bits_per_block = bits;
  if (bits == 0) throw infeasible_error("codebook carries no bits per block");
  return code;
}

BlockRate block_rate(const BlockCode& code) {
  return {static_cast<double>(code.bits_per_block) / code.m,
          std::log2(static_cast<double>(code.codewords.size())) / code.m};
}

Word block_encode(const BlockCode& code, const std::vector<uint8_t>& bits) {
  if (bits.size() % static_cast<size_t>(code.bits_per_block) != 0)
    throw std::invalid_argument("payload length must be a multiple of bits_per_block");
  std::vector<uint8_t> symbols;
  for (size_t pos = 0; pos < bits.size(); pos += code.bits_per_block) {
    size_t index = 0;
    for (int b = 0; b < code.bits_per_block; ++b) index = (index << 1) | bits[pos + b];
    const Word& cw = code.codewords[index];
    symbols.insert(symbols.end(), cw.symbols().begin(), cw.symbols().end());
  }
  return Word(code.alphabet, std::move(symbols));
}

std::vector<uint8_t> block_decode(const BlockCode& code, const Word& w) {
  if (w.size() % code.m != 0)
    throw decode_error("word length is not a multiple of the block length");
  std::vector<uint8_t> bits;
  for (int pos = 0; pos < w.size(); pos += code.m) {
    Word block = w.subword(pos, code.m);
    auto it = std::lower_bound(code.codewords.begin(), code.codewords.end(), block);
    if (it == code.codewords.end() || !(*it == block))
      throw decode_error("unknown block at offset " + std::to_string(pos));
    size_t index = static_cast<size_t>(it - code.codewords.begin());
    for (int b = code.bits_per_block - 1; b >= 0; --b)
      bits.push_back(static_cast<uint8_t>((index >> b) & 1));
  }
  return bits;
}

namespace {
constexpr char kCodeMagic[4] = {'S', 'C', 'S', 'B'};
constexpr uint8_t kCodeVersion = 1;
}  // namespace

void save_block_code(const BlockCode& code, std::ostream& out) {
  out.write(kCodeMagic, 4);
  io::write_u8(out, kCodeVersion);
  io::write_u32(out, static_cast<uint32_t>(code.k));
  io::write_u32(out, static_cast<uint32_t>(code.m));
  io::write_string(out, to_string(code.eps));
  io::write_u32(out, static_cast<uint32_t>(code.alphabet->size()));
  for (int i = 0; i < code.alphabet->size(); ++i) io::write_string(out, code.alphabet->name(i));
  io::write_u64(out, code.codewords.size());
  for (const Word& w : code.codewords)
    out.write(reinterpret_cast<const char*>(w.symbols().data()), w.size());
}

BlockCode load_block_code(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != std::string(kCodeMagic, 4))
    throw parse_error("not a block-code file (bad magic)");
  if (io::read_u8(in) != kCodeVersion) throw parse_error("unsupported block-code version");
  BlockCode code;
  code.k = static_cast<int>(io::read_u32(in));
  code.m = static_cast<int>(io::read_u32(in));
  code.eps = parse_rational(io::read_string(in));
  uint32_t sigma = io::read_u32(in);
  std::vector<std::string> symbols(sigma);
  for (auto& s : symbols) s = io::read_string(in);
  code.alphabet = std::make_shared<const Alphabet>(std::move(symbols));
  uint64_t count = io::read_u64(in);
  code.codewords.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    std::vector<uint8_t> sym(code.m);
    in.read(reinterpret_cast<char*>(sym.data()), code.m);
    if (in.gcount() != code.m) throw parse_error("truncated block-code file");
    code.codewords.emplace_back(code.alphabet, std::move(sym));
  }
  int bits = 0;
  while ((uint64_t(1) << (bits + 1)) <= count) ++bits;
  code.bits_per_block = bits;
  return code;
}

}  // namespace scs
