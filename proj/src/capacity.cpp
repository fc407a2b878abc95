#include "scs/capacity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scs {
namespace {

constexpr double kFloor = 1e-300;

double xlog2x(double x) { return x > kFloor ? x * std::log2(x) : 0.0; }

// f(x) = -sum x log2 x + sum_prefix p log2 p, the conditional entropy.
double objective(const std::vector<double>& x, int sigma) {
  const int n = static_cast<int>(x.size());
  double f = 0;
  for (int phi = 0; phi < n; phi += sigma) {
    double p = 0;
    for (int a = 0; a < sigma; ++a) p += x[phi + a];
    f += xlog2x(p);
    for (int a = 0; a < sigma; ++a) f -= xlog2x(x[phi + a]);
  }
  return f;
}

// grad_i = log2(p(prefix(i)) / x_i).
void gradient(const std::vector<double>& x, int sigma, std::vector<double>* g) {
  const int n = static_cast<int>(x.size());
  g->resize(n);
  for (int phi = 0; phi < n; phi += sigma) {
    double p = 0;
    for (int a = 0; a < sigma; ++a) p += x[phi + a];
    double pc = std::max(p, kFloor);
    for (int a = 0; a < sigma; ++a)
      (*g)[phi + a] = std::log2(pc / std::max(x[phi + a], kFloor));
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double conditional_entropy(const Measure& eta) {
  const int sigma = eta.alphabet()->size();
  std::vector<double> x(eta.num_patterns());
  for (int i = 0; i < eta.num_patterns(); ++i) x[i] = to_double(eta[i]);
  return objective(x, sigma);
}

double relative_entropy_term(const Measure& eta) {
  return std::log2(static_cast<double>(eta.alphabet()->size())) - conditional_entropy(eta);
}

CapacityResult capacity_scs(const ConstraintSet& gamma, const CapacityOptions& opts) {
  CapacityResult result;
  const int n = gamma.num_patterns();
  const int sigma = gamma.alphabet()->size();
  LpProblem oracle = measure_lp(gamma, /*shift_invariant=*/true);

  // Start from any vertex of the polytope.
  {
    VectorXq obj = VectorXq::Zero(n);
    oracle.set_objective(obj);
    LpResult feas = oracle.maximize();
    if (feas.status != LpStatus::Optimal) return result;  // Gamma cap P_si empty
  }

  struct Atom {
    VectorXq point;
    std::vector<double> dbl;
    double weight;
  };
  std::vector<Atom> atoms;
  auto push_atom = [&](const VectorXq& v, double w) -> int {
    for (size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i].point == v) {
        atoms[i].weight += w;
        return static_cast<int>(i);
      }
    Atom a;
    a.point = v;
    a.dbl.resize(n);
    for (int i = 0; i < n; ++i) a.dbl[i] = to_double(v[i]);
    a.weight = w;
    atoms.push_back(std::move(a));
    return static_cast<int>(atoms.size()) - 1;
  };

  std::vector<double> x(n), g, dir(n), s_dbl(n);
  {
    VectorXq obj = VectorXq::Constant(n, 1);  // arbitrary first vertex
    oracle.set_objective(obj);
    LpResult first = oracle.maximize();
    push_atom(first.x, 1.0);
    x = atoms[0].dbl;
  }

  double gap = std::numeric_limits<double>::infinity();
  long iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    gradient(x, sigma, &g);
    VectorXq obj(n);
    // Quantized gradient keeps the oracle's exact arithmetic small; the
    // direction only needs to be approximately steepest.
    const long long grid = 1LL << 32;
    for (int i = 0; i < n; ++i)
      obj[i] = Rational(static_cast<long long>(std::llround(g[i] * grid)), grid);
    oracle.set_objective(obj);
    LpResult lin = oracle.maximize();
    if (lin.status != LpStatus::Optimal) throw std::logic_error("linear oracle failed");
    for (int i = 0; i < n; ++i) s_dbl[i] = to_double(lin.x[i]);
    double fw_gap = dot(g, s_dbl) - dot(g, x);
    gap = fw_gap;
    if (fw_gap <= opts.gap_tolerance) break;

    // Away atom: active vertex with the worst gradient alignment.
    int away = 0;
    double away_val = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < atoms.size(); ++i) {
      double v = dot(g, atoms[i].dbl);
      if (v < away_val) {
        away_val = v;
        away = static_cast<int>(i);
      }
    }
    double away_gap = dot(g, x) - away_val;

    bool fw_step = fw_gap >= away_gap || atoms.size() == 1;
    double gamma_max;
    if (fw_step) {
      for (int i = 0; i < n; ++i) dir[i] = s_dbl[i] - x[i];
      gamma_max = 1.0;
    } else {
      for (int i = 0; i < n; ++i) dir[i] = x[i] - atoms[away].dbl[i];
      double w = atoms[away].weight;
      gamma_max = w / (1.0 - w);
      if (!std::isfinite(gamma_max) || gamma_max <= 0) gamma_max = w > 0.5 ? 1.0 : 0.0;
    }
    if (gamma_max <= 0) continue;

    // Exact line search: bisect the (decreasing) directional derivative.
    auto deriv = [&](double t) {
      double d = 0;
      for (int i = 0; i < n; ++i) {
        double xi = x[i] + t * dir[i];
        double p = 0;
        int base = (i / sigma) * sigma;
        for (int a = 0; a < sigma; ++a) p += x[base + a] + t * dir[base + a];
        d += dir[i] * std::log2(std::max(p, kFloor) / std::max(xi, kFloor));
      }
      return d;
    };
    double step = gamma_max;
    if (deriv(gamma_max) < 0) {
      double lo = 0, hi = gamma_max;
      for (int it2 = 0; it2 < 80; ++it2) {
        double mid = 0.5 * (lo + hi);
        if (deriv(mid) > 0)
          lo = mid;
        else
          hi = mid;
      }
      step = 0.5 * (lo + hi);
    }
    if (step <= 0) continue;

    if (fw_step) {
      for (auto& a : atoms) a.weight *= (1.0 - step);
      push_atom(lin.x, step);
    } else {
      for (auto& a : atoms) a.weight *= (1.0 + step);
      atoms[away].weight -= step;
      if (atoms[away].weight < 1e-15) atoms.erase(atoms.begin() + away);
    }
    std::fill(x.begin(), x.end(), 0.0);
    for (const auto& a : atoms)
      for (int i = 0; i < n; ++i) x[i] += a.weight * a.dbl[i];
  }

  result.feasible = true;
  result.value = objective(x, sigma);
  result.iterations = iter;
  result.duality_gap_estimate = gap;
  // Rationalize the optimizer: exact convex combination of the atoms.
  VectorXq opt = VectorXq::Zero(n);
  Rational total = 0;
  for (const auto& a : atoms) {
    if (a.weight <= 0) continue;
    Rational w(a.weight);
    opt += w * a.point;
    total += w;
  }
  if (total > 0) opt /= total;
  result.optimizer = Measure(gamma.alphabet(), gamma.k(), std::move(opt));
  return result;
}

CapacityBounds capacity_bounds(const ConstraintSet& gamma) {
  CapacityBounds out;
  CapacityResult upper = capacity_scs(gamma.closure());
  if (upper.feasible) {
    out.upper_finite = true;
    out.upper = upper.value;
  }
  // Strict-interior sample: capacities of a shrinking sequence Gamma_eps.
  double last = 0;
  bool any = false;
  for (int j = 3; j <= 12; ++j) {
    Rational eps(1, 1L << j);
    CapacityResult r = capacity_scs(shrink(gamma, eps));
    if (!r.feasible) {
      if (any) break;
      continue;
    }
    any = true;
    last = r.value;
  }
  if (any) {
    out.lower_finite = true;
    out.lower = std::min(last, out.upper_finite ? out.upper : last);
  }
  return out;
}

std::vector<GrowthSample> capacity_bruteforce(const ConstraintSet& gamma, int n_max) {
  std::vector<GrowthSample> out;
  for (int n = gamma.k(); n <= n_max; ++n) {
    unsigned long long c = count_admissible(gamma, n);
    GrowthSample s{n, c, c == 0, 0.0};
    if (c > 0) s.rate = std::log2(static_cast<double>(c)) / n;
    out.push_back(s);
  }
  return out;
}

bool graph_capacity(const LabeledDigraph& g, double* bits) {
  double best = 0;  // spectral radius
  auto components = strongly_connected_components(g);
  for (const auto& comp : components) {
    LabeledDigraph sub = g.induced(comp);
    if (sub.num_edges() == 0) continue;
    const int n = sub.num_vertices();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : sub.edges()) a(e.src, e.dst) += 1.0;
    // Shift by I so periodic components still converge; Collatz-Wielandt
    // ratios bracket the Perron value.
    Eigen::MatrixXd m = a + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    double rho = 0;
    for (int it = 0; it < 100000; ++it) {
      Eigen::VectorXd w = m * v;
      double lo = std::numeric_limits<double>::infinity(), hi = 0;
      for (int i = 0; i < n; ++i) {
        double r = w[i] / v[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      rho = 0.5 * (lo + hi);
      v = w / w.maxCoeff();
      if (hi - lo < 1e-12 * hi) break;
    }
    rho -= 1.0;
    double snapped = std::round(rho);
    if (std::abs(rho - snapped) < 1e-9) rho = snapped;
    best = std::max(best, rho);
  }
  if (best < 1.0) return false;  // no cycle
  *bits = std::log2(best);
  return true;
}

double graph_capacity_or_throw(const LabeledDigraph& g) {
  double bits;
  if (!graph_capacity(g, &bits)) throw infeasible_error("graph has no recurrent part");
  return bits;
}

}  // namespace scs
