#include "scs/constraints.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace scs {

Rational LinearConstraint::l1_norm() const {
  Rational s = 0;
  for (long i = 0; i < coeffs.size(); ++i) s += abs(coeffs[i]);
  return s;
}

bool LinearConstraint::satisfied_by(const VectorXq& mu) const {
  Rational v = 0;
  for (long i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v += coeffs[i] * mu[i];
  switch (rel) {
    case Relation::LE: return v <= bound;
    case Relation::LT: return v < bound;
    case Relation::EQ: return v == bound;
  }
  return false;
}

ToleranceFn ToleranceFn::constant(Rational value) {
  ToleranceFn fn;
  fn.description_ = "constant " + value.str();
  fn.eval_ = [value](long) { return value; };
  return fn;
}

ToleranceFn ToleranceFn::window_slack(int k, int m) {
  ToleranceFn fn;
  fn.description_ = "S(" + std::to_string(k) + "," + std::to_string(m) + ",n)";
  fn.eval_ = [k, m](long n) {
    return Rational(BigInt(2 * m - 2) * (m - k), BigInt(n) - k + 1);
  };
  return fn;
}

ConstraintSet::ConstraintSet(AlphabetPtr alphabet, int k, std::vector<LinearConstraint> constraints)
    : alphabet_(std::move(alphabet)), k_(k), constraints_(std::move(constraints)) {
  if (k_ <= 0) throw std::invalid_argument("k must be positive");
  long n = 1;
  for (int i = 0; i < k_; ++i) n *= alphabet_->size();
  num_patterns_ = static_cast<int>(n);
  for (const auto& c : constraints_) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint dimension mismatch");
    bool nonzero = false;
    for (long i = 0; i < n; ++i) nonzero |= (c.coeffs[i] != 0);
    if (!nonzero) throw std::invalid_argument("constraint with all-zero coefficients");
  }
}

bool ConstraintSet::is_closed() const {
  for (const auto& c : constraints_)
    if (c.rel == Relation::LT) return false;
  return true;
}

ConstraintSet ConstraintSet::closure() const {
  std::vector<LinearConstraint> rows = constraints_;
  for (auto& c : rows)
    if (c.rel == Relation::LT) c.rel = Relation::LE;
  return ConstraintSet(alphabet_, k_, std::move(rows));
}

bool contains(const ConstraintSet& gamma, const Measure& mu) {
  if (mu.k() != gamma.k() || mu.num_patterns() != gamma.num_patterns())
    throw std::invalid_argument("measure/constraint dimension mismatch");
  for (const auto& c : gamma.constraints())
    if (!c.satisfied_by(mu.values())) return false;
  return true;
}

bool is_admissible(const ConstraintSet& gamma, const Word& w) {
  return contains(gamma, kmer_frequency(w, gamma.k()));
}

bool is_weakly_admissible(const ConstraintSet& gamma, const Word& w, const ToleranceFn& xi) {
  return contains(expand(gamma, xi(w.size())), kmer_frequency(w, gamma.k()));
}

namespace {

// DFS over Sigma^n carrying the pattern-count vector. Pruning: per constraint,
// the achievable final value of a.count lies in
// [dot + r*min(a), dot + r*max(a)] with r windows left to place.
template <typename Scalar>
struct AdmissibleDfs {
  int sigma, k, n, num_patterns;
  long total_windows;
  struct Row {
    std::vector<Scalar> coeffs;  // scaled by pattern
    Scalar bound;                // scaled b * W
    Relation rel;
    Scalar min_coeff, max_coeff;
  };
  std::vector<Row> rows;
  std::vector<Scalar> dots;
  std::vector<uint8_t> current;
  const std::function<void(const std::vector<uint8_t>&)>* sink = nullptr;
  unsigned long long count = 0;

  bool prune(long windows_done) const {
    long r = total_windows - windows_done;
    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& row = rows[i];
      Scalar lo = dots[i] + Scalar(r) * row.min_coeff;
      Scalar hi = dots[i] + Scalar(r) * row.max_coeff;
      switch (row.rel) {
        case Relation::LE:
          if (lo > row.bound) return true;
          break;
        case Relation::LT:
          if (lo >= row.bound) return true;
          break;
        case Relation::EQ:
          if (lo > row.bound || hi < row.bound) return true;
          break;
      }
    }
    return false;
  }

  void run(int depth, int window) {
    if (depth == n) {
      ++count;
      if (sink) (*sink)(current);
      return;
    }
    int mod = num_patterns / sigma;
    for (int a = 0; a < sigma; ++a) {
      current[depth] = static_cast<uint8_t>(a);
      int next_window = (window % mod) * sigma + a;
      if (depth >= k - 1) {
        for (size_t i = 0; i < rows.size(); ++i) dots[i] += rows[i].coeffs[next_window];
        if (!prune(depth - k + 2)) run(depth + 1, next_window);
        for (size_t i = 0; i < rows.size(); ++i) dots[i] -= rows[i].coeffs[next_window];
      } else {
        run(depth + 1, next_window);
      }
    }
  }
};

template <typename Scalar>
unsigned long long dfs_admissible(const ConstraintSet& gamma, int n,
                                  const std::function<void(const std::vector<uint8_t>&)>* sink,
                                  bool* fits) {
  AdmissibleDfs<Scalar> dfs;
  dfs.sigma = gamma.alphabet()->size();
  dfs.k = gamma.k();
  dfs.n = n;
  dfs.num_patterns = gamma.num_patterns();
  dfs.total_windows = n - gamma.k() + 1;
  dfs.sink = sink;
  *fits = true;
  for (const auto& c : gamma.constraints()) {
    typename AdmissibleDfs<Scalar>::Row row;
    Rational scaled_bound = c.bound * dfs.total_windows;
    BigInt denom = boost::multiprecision::denominator(scaled_bound);
    for (long i = 0; i < c.coeffs.size(); ++i)
      denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(c.coeffs[i]));
    if constexpr (std::is_same_v<Scalar, long long>) {
      // Integer fast path: scale rationals out; bail to the exact path on overflow risk.
      auto to_ll = [&](const Rational& q) -> long long {
        Rational scaled = q * Rational(denom, 1);
        BigInt v = boost::multiprecision::numerator(scaled);
        if (abs(v) > BigInt(1) << 40) *fits = false;
        return v.convert_to<long long>();
      };
      for (long i = 0; i < c.coeffs.size(); ++i) row.coeffs.push_back(to_ll(c.coeffs[i]));
      row.bound = to_ll(scaled_bound);
      if (!*fits) return 0;
    } else {
      for (long i = 0; i < c.coeffs.size(); ++i) row.coeffs.push_back(c.coeffs[i]);
      row.bound = scaled_bound;
    }
    row.rel = c.rel;
    row.min_coeff = *std::min_element(row.coeffs.begin(), row.coeffs.end());
    row.max_coeff = *std::max_element(row.coeffs.begin(), row.coeffs.end());
    dfs.rows.push_back(std::move(row));
  }
  dfs.dots.assign(dfs.rows.size(), Scalar(0));
  dfs.current.assign(n, 0);
  dfs.run(0, 0);
  return dfs.count;
}

unsigned long long admissible_walk(const ConstraintSet& gamma, int n,
                                   const std::function<void(const std::vector<uint8_t>&)>* sink) {
  if (n < gamma.k()) throw std::length_error("n shorter than k");
  bool fits = false;
  unsigned long long c = dfs_admissible<long long>(gamma, n, sink, &fits);
  if (fits) return c;
  return dfs_admissible<Rational>(gamma, n, sink, &fits);
}

}  // namespace

std::vector<Word> enumerate_admissible(const ConstraintSet& gamma, int n) {
  std::vector<Word> out;
  std::function<void(const std::vector<uint8_t>&)> sink =
      [&](const std::vector<uint8_t>& symbols) { out.emplace_back(gamma.alphabet(), symbols); };
  admissible_walk(gamma, n, &sink);
  return out;  // DFS emits in lexicographic order
}

unsigned long long count_admissible(const ConstraintSet& gamma, int n) {
  return admissible_walk(gamma, n, nullptr);
}

ConstraintSet shrink(const ConstraintSet& gamma, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("negative eps");
  if (eps == 0) return gamma;
  std::vector<LinearConstraint> rows;
  for (const auto& c : gamma.constraints()) {
    Rational margin = eps * c.l1_norm();
    if (c.rel == Relation::EQ) {
      rows.push_back({c.coeffs, Relation::LE, c.bound - margin});
      rows.push_back({-c.coeffs, Relation::LE, -c.bound - margin});
    } else {
      rows.push_back({c.coeffs, c.rel, c.bound - margin});
    }
  }
  return ConstraintSet(gamma.alphabet(), gamma.k(), std::move(rows));
}

ConstraintSet expand(const ConstraintSet& gamma, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("negative eps");
  if (eps == 0) return gamma;
  std::vector<LinearConstraint> rows;
  for (const auto& c : gamma.constraints()) {
    Rational margin = eps * c.l1_norm();
    if (c.rel == Relation::EQ) {
      rows.push_back({c.coeffs, Relation::LE, c.bound + margin});
      rows.push_back({-c.coeffs, Relation::LE, -c.bound + margin});
    } else {
      rows.push_back({c.coeffs, Relation::LE, c.bound + margin});
    }
  }
  return ConstraintSet(gamma.alphabet(), gamma.k(), std::move(rows));
}

LpProblem measure_lp(const ConstraintSet& gamma, bool shift_invariant, int extra_vars) {
  const int n = gamma.num_patterns();
  const int sigma = gamma.alphabet()->size();
  LpProblem lp(n + extra_vars);
  VectorXq ones = VectorXq::Zero(n + extra_vars);
  for (int i = 0; i < n; ++i) ones[i] = 1;
  lp.add_eq(ones, 1);
  if (shift_invariant) {
    int n_prefix = n / sigma;
    for (int phi = 0; phi < n_prefix; ++phi) {
      VectorXq row = VectorXq::Zero(n + extra_vars);
      for (int a = 0; a < sigma; ++a) {
        row[a * n_prefix + phi] += 1;  // a phi
        row[phi * sigma + a] -= 1;     // phi a
      }
      lp.add_eq(std::move(row), 0);
    }
  }
  for (const auto& c : gamma.constraints()) {
    VectorXq row = VectorXq::Zero(n + extra_vars);
    row.head(n) = c.coeffs;
    if (c.rel == Relation::EQ)
      lp.add_eq(std::move(row), c.bound);
    else
      lp.add_le(std::move(row), c.bound);  // strict rows closed for LP purposes
  }
  return lp;
}

bool is_feasible(const ConstraintSet& gamma, bool shift_invariant) {
  LpProblem lp = measure_lp(gamma, shift_invariant);
  return lp.maximize().status == LpStatus::Optimal;
}

std::set<int> forbidden_set(const ConstraintSet& gamma) {
  std::set<int> forbidden;
  LpProblem lp = measure_lp(gamma, false);
  for (int phi = 0; phi < gamma.num_patterns(); ++phi) {
    VectorXq obj = VectorXq::Zero(gamma.num_patterns());
    obj[phi] = 1;
    lp.set_objective(obj);
    LpResult res = lp.maximize();
    if (res.status != LpStatus::Optimal || res.objective == 0) forbidden.insert(phi);
  }
  return forbidden;
}

namespace {

// Margin LP within P_si restricted to support D: maximize t subject to
// mu(phi) >= t on D, mu(phi) = 0 off D, and a.mu + t <= b for every
// constraint whose value actually varies over the slice.
FatnessResult fatness_margin(const ConstraintSet& gamma, const std::set<int>& forbidden) {
  const int n = gamma.num_patterns();
  FatnessResult out;

  // The slice: simplex + shift-invariance + pinned coordinates.
  auto add_slice = [&](LpProblem& lp) {
    for (int phi : forbidden) {
      VectorXq row = VectorXq::Zero(lp.num_vars());
      row[phi] = 1;
      lp.add_eq(std::move(row), 0);
    }
  };

  ConstraintSet empty(gamma.alphabet(), gamma.k(), {});
  LpProblem slice = measure_lp(empty, true);
  add_slice(slice);
  // Classify each constraint: does a.mu vary over the slice?
  std::vector<bool> varies;
  bool dimension_cut = false;
  for (const auto& c : gamma.constraints()) {
    VectorXq obj = VectorXq::Zero(n);
    obj = c.coeffs;
    slice.set_objective(obj);
    LpResult hi = slice.maximize();
    if (hi.status != LpStatus::Optimal) return out;  // slice empty
    LpResult lo = slice.minimize();
    bool constant = hi.objective == lo.objective;
    if (constant) {
      if ((c.rel == Relation::EQ && hi.objective != c.bound) ||
          (c.rel == Relation::LE && hi.objective > c.bound) ||
          (c.rel == Relation::LT && hi.objective >= c.bound))
        return out;  // gamma misses the slice entirely
      varies.push_back(false);
    } else {
      if (c.rel == Relation::EQ) dimension_cut = true;
      varies.push_back(true);
    }
  }
  if (dimension_cut) return out;

  LpProblem lp = measure_lp(empty, true, /*extra_vars=*/1);
  add_slice(lp);
  const int t = n;
  lp.mark_free(t);
  for (size_t i = 0; i < gamma.constraints().size(); ++i) {
    if (!varies[i]) continue;
    const auto& c = gamma.constraints()[i];
    VectorXq row = VectorXq::Zero(n + 1);
    row.head(n) = c.coeffs;
    row[t] = 1;
    if (c.rel == Relation::EQ) {
      lp.add_eq(std::move(row), c.bound);  // unreachable: EQ varies => dimension_cut
    } else {
      lp.add_le(std::move(row), c.bound);
    }
  }
  for (int phi = 0; phi < n; ++phi) {
    if (forbidden.count(phi)) continue;
    VectorXq row = VectorXq::Zero(n + 1);
    row[phi] = -1;
    row[t] = 1;
    lp.add_le(std::move(row), 0);  // mu(phi) >= t
  }
  VectorXq obj = VectorXq::Zero(n + 1);
  obj[t] = 1;
  lp.set_objective(obj);
  LpResult res = lp.maximize();
  if (res.status != LpStatus::Optimal) return out;
  out.margin = res.objective;
  out.fat = res.objective > 0;
  if (out.fat)
    out.witness = Measure(gamma.alphabet(), gamma.k(), res.x.head(n));
  return out;
}

}  // namespace

FatnessResult is_fat(const ConstraintSet& gamma) { return fatness_margin(gamma, {}); }

FatnessResult is_relatively_fat(const ConstraintSet& gamma) {
  return fatness_margin(gamma, forbidden_set(gamma));
}

Rational max_admissible_epsilon(const ConstraintSet& gamma, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (!is_fat(gamma).fat) return 0;
  Rational lo = 0, hi = 1;
  if (is_fat(shrink(gamma, hi)).fat) return hi;
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (is_fat(shrink(gamma, mid)).fat)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace scs
