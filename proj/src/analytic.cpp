#include "booklab/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "booklab/parallel.hpp"
#include "booklab/splitmix.hpp"

namespace booklab::analytic {
namespace {

struct Interval {
  double lo, hi;
};

// Feasible set for one coordinate: [0,1], or [0, p-eps0] U [p+eps0, 1] for the
// coordinate that carries the restriction.
std::vector<Interval> coordinate_domain(double p, std::optional<double> eps0) {
  if (!eps0) return {{0.0, 1.0}};
  std::vector<Interval> out;
  if (p - *eps0 >= 0.0) out.push_back({0.0, p - *eps0});
  if (p + *eps0 <= 1.0) out.push_back({p + *eps0, 1.0});
  return out;
}

struct Form {
  double p;
  int k;
  double blue_weight;  // p^{1-k}
  double red_weight;   // (1-p)^{1-k} / k

  Form(double p_, int k_)
      : p(p_), k(k_), blue_weight(std::pow(p_, 1.0 - k_)), red_weight(std::pow(1.0 - p_, 1.0 - k_) / k_) {}

  double operator()(const Eigen::VectorXd& x) const {
    return blue_weight * x.prod() + red_weight * (1.0 - x.array()).pow(k).sum();
  }
};

// Coordinate descent; each coordinate solves min_t A t + B (1-t)^k exactly (convex in t).
double descend(const Form& f, Eigen::VectorXd& x, int restricted, const std::vector<Interval>& far_domain,
               double tolerance) {
  const int k = f.k;
  const std::vector<Interval> free_domain{{0.0, 1.0}};
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double max_step = 0.0;
    for (int i = 0; i < k; ++i) {
      double others = 1.0;
      for (int l = 0; l < k; ++l) {
        if (l != i) others *= x[l];
      }
      const double a = f.blue_weight * others;
      const double b = f.red_weight;
      const double t_star = 1.0 - std::pow(a / (k * b), 1.0 / (k - 1));
      const auto& domain = i == restricted ? far_domain : free_domain;
      double best_t = x[i];
      double best_v = std::numeric_limits<double>::infinity();
      for (const auto& iv : domain) {
        const double t = std::clamp(t_star, iv.lo, iv.hi);
        const double v = a * t + b * std::pow(1.0 - t, k);
        if (v < best_v) best_v = v, best_t = t;
      }
      max_step = std::max(max_step, std::abs(best_t - x[i]));
      x[i] = best_t;
    }
    if (max_step < tolerance) break;
  }
  return f(x);
}

struct Candidate {
  double value;
  std::vector<int> index;  // nondecreasing grid indices
  bool operator<(const Candidate& o) const { return value != o.value ? value < o.value : index < o.index; }
};

void keep_best(std::vector<Candidate>& best, Candidate c, std::size_t limit) {
  if (best.size() == limit && !(c < best.back())) return;
  best.insert(std::upper_bound(best.begin(), best.end(), c), std::move(c));
  if (best.size() > limit) best.pop_back();
}

}  // namespace

std::pair<double, double> diagonal_average_min(double p, int k) {
  require_probability(p);
  if (k < 2) throw DomainError("diagonal_average_min needs k >= 2");
  const double bw = std::pow(p, 1.0 - k), rw = std::pow(1.0 - p, 1.0 - k);
  auto slope = [&](double w) { return bw * std::pow(w, k - 1) - rw * std::pow(1.0 - w, k - 1); };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  const double w = 0.5 * (lo + hi);
  return {w, diagonal_average(w, p, k)};
}

double p_from_c(double c, int k) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("c must lie in (0, 1]");
  return 1.0 / (std::pow(c, 1.0 / k) + 1.0);
}

double c_from_p(double p, int k) {
  require_probability(p);
  return std::pow((1.0 - p) / p, k);
}

C1Result threshold_c1(int k) {
  if (k < 2) throw DomainError("threshold_c1 needs k >= 2");
  // t = c^{1/k}; p = 1/(t+1) and k2(p) = k1(t/(t+1)) is nonincreasing in t.
  auto qualifies = [k](double t) { return static_cast<double>(k) >= threshold_k2(1.0 / (t + 1.0)); };
  if (!qualifies(1.0)) return {};
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mid > 0.0 && qualifies(mid) ? hi : lo) = mid;
  }
  return {std::pow(hi, k), hi, true};
}

MinimizationReport minimize_extension_average(double p, int k, const MinimizeOptions& options) {
  require_probability(p);
  if (k < 2) throw DomainError("minimize_extension_average needs k >= 2");
  if (options.eps0) {
    if (!(*options.eps0 > 0.0)) throw DomainError("eps0 must be positive");
    if (coordinate_domain(p, options.eps0).empty()) throw DomainError("eps0 leaves no feasible point");
  }
  const bool stochastic = options.mode == MinimizeOptions::Mode::Stochastic ||
                          (options.mode == MinimizeOptions::Mode::Auto && k > 6);
  if (!stochastic) {
    if (k > 10) throw DomainError("k=" + std::to_string(k) + " too large for an exhaustive grid (max 10)");
    if (options.resolution < 11) throw DomainError("grid resolution must be at least 11 points per axis");
  }

  const Form form(p, k);
  const auto far_domain = coordinate_domain(p, options.eps0);

  MinimizationReport report;
  report.p = p;
  report.k = k;
  report.eps0 = options.eps0;
  report.refine_tolerance = options.refine_tolerance;
  report.stochastic = stochastic;
  report.k1 = threshold_k1(p);
  report.hypothesis_holds = static_cast<double>(k) >= report.k1;

  std::vector<std::pair<Eigen::VectorXd, int>> starts;  // (point, restricted coordinate)

  if (!stochastic) {
    const int g = options.resolution;
    report.resolution = g;
    std::vector<double> value(g), red_term(g);
    std::vector<bool> far(g);
    for (int i = 0; i < g; ++i) {
      value[i] = static_cast<double>(i) / (g - 1);
      red_term[i] = std::pow(1.0 - value[i], k);
      // grid points sitting on the boundary |x - p| = eps0 count as feasible
      far[i] = options.eps0 && std::abs(value[i] - p) >= *options.eps0 - 1e-12;
    }
    const std::size_t limit = std::max<std::size_t>(1, options.refine_candidates);

    struct Partial {
      std::vector<Candidate> best;
      std::uint64_t probes = 0;
    };
    // F is symmetric, so nondecreasing index tuples cover the grid exactly.
    auto partial = parallel_map<Partial>(static_cast<std::size_t>(g), [&](std::size_t first) {
      Partial out;
      std::vector<int> idx(k);
      idx[0] = static_cast<int>(first);
      auto rec = [&](auto&& self, int depth, double prod, double sum, bool any_far) -> void {
        if (depth == k) {
          ++out.probes;
          if (options.eps0 && !any_far) return;
          keep_best(out.best, {form.blue_weight * prod + form.red_weight * sum, idx}, limit);
          return;
        }
        for (int i = idx[depth - 1]; i < g; ++i) {
          idx[depth] = i;
          self(self, depth + 1, prod * value[i], sum + red_term[i], any_far || far[i]);
        }
      };
      rec(rec, 1, value[first], red_term[first], far[first]);
      return out;
    });
    std::vector<Candidate> best;
    for (auto& part : partial) {
      report.probes += part.probes;
      for (auto& c : part.best) keep_best(best, std::move(c), limit);
    }
    if (best.empty()) throw DomainError("no grid point satisfies the eps0 restriction");
    report.grid_minimum = best.front().value;
    for (const auto& c : best) {
      Eigen::VectorXd x(k);
      for (int i = 0; i < k; ++i) x[i] = value[c.index[i]];
      int restricted = -1;
      if (options.eps0) {
        Eigen::Index j = 0;
        (x.array() - p).abs().maxCoeff(&j);
        restricted = static_cast<int>(j);
      }
      starts.emplace_back(std::move(x), restricted);
    }
  } else {
    report.resolution = 0;
    const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
    report.probes = restarts;
    double best_seed_value = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < restarts; ++r) {
      SplitMix64 rng(derive_seed(options.seed, r));
      Eigen::VectorXd x(k);
      for (int i = 0; i < k; ++i) x[i] = rng.uniform();
      int restricted = -1;
      if (options.eps0) {
        restricted = 0;
        const auto& iv = far_domain[rng.below(far_domain.size())];
        x[0] = iv.lo + (iv.hi - iv.lo) * rng.uniform();
      }
      best_seed_value = std::min(best_seed_value, form(x));
      starts.emplace_back(std::move(x), restricted);
    }
    report.grid_minimum = best_seed_value;
  }

  auto refined = parallel_map<std::pair<double, Eigen::VectorXd>>(starts.size(), [&](std::size_t i) {
    Eigen::VectorXd x = starts[i].first;
    const double v = descend(form, x, starts[i].second, far_domain, options.refine_tolerance);
    return std::make_pair(v, x);
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < refined.size(); ++i) {
    if (refined[i].first < refined[arg].first) arg = i;
  }
  report.minimum = std::min(refined[arg].first, report.grid_minimum);
  report.argmin = refined[arg].second;
  return report;
}

double multiplicative_jensen_gap(const Eigen::Ref<const Eigen::VectorXd>& x) {
  const auto k = x.size();
  if (k < 1) throw DomainError("multiplicative_jensen_gap needs at least one coordinate");
  if ((x.array() <= 0.0).any() || (x.array() >= 1.0).any()) {
    throw DomainError("multiplicative_jensen_gap: coordinates must lie in the open interval (0, 1)");
  }
  const double kk = static_cast<double>(k);
  const double z = x.prod();
  return (1.0 - x.array()).pow(kk).sum() / kk - std::pow(1.0 - std::pow(z, 1.0 / kk), kk);
}

double holder_defect_gap(const Eigen::Ref<const Eigen::VectorXd>& y, int k, double m) {
  if (y.size() < 1) throw DomainError("holder_defect_gap needs at least one sample");
  const double mu = y.mean();
  const double var = (y.array() - mu).square().mean();
  double phi_mean = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) phi_mean += jensen_phi(y[i], k);
  phi_mean /= static_cast<double>(y.size());
  return phi_mean - jensen_phi(mu, k) - m * var / 2.0;
}

double phi_curvature_floor(double a, double b, int k) {
  if (k < 2) throw DomainError("phi_curvature_floor needs k >= 2");
  if (!(a > std::log(1.0 / k) && a <= b && b < 0.0)) {
    throw DomainError("interval not inside the convexity region (log(1/k), 0)");
  }
  double floor = std::min(jensen_phi_second(a, k), jensen_phi_second(b, k));
  constexpr int kGrid = 1000;
  for (int i = 1; i < kGrid; ++i) {
    floor = std::min(floor, jensen_phi_second(a + (b - a) * i / kGrid, k));
  }
  return 0.99 * floor;
}

Rational kpartite_stability_rho(std::int64_t k) {
  if (k < 2) throw DomainError("kpartite_stability_rho needs k >= 2");
  return Rational(1, 3 * k * k - k);
}

}  // namespace booklab::analytic
