#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "booklab/error.hpp"
#include "booklab/rational.hpp"

namespace booklab::analytic {

// Closed forms around the inequality
//   p^{1-k} prod x_i + (1-p)^{1-k}/k sum (1 - x_i)^k >= 1,
// valid for k >= k1(p). Scalar templates let the reference constants be
// re-evaluated in extended precision.

template <class Scalar>
Scalar e_constant() {
  using std::exp;
  return exp(Scalar(1));
}

/// 1 - 5/(4e): from here up, k1(p) = 6.
template <class Scalar = double>
Scalar k1_cutoff() {
  return Scalar(1) - Scalar(5) / (Scalar(4) * e_constant<Scalar>());
}

inline void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
}

/// p^{1-k} prod x_i + (1-p)^{1-k}/k sum (1 - x_i)^k with k = x.size().
template <class Derived>
typename Derived::Scalar extension_average(const Eigen::MatrixBase<Derived>& x, typename Derived::Scalar p) {
  using Scalar = typename Derived::Scalar;
  using std::pow;
  if (!(p > Scalar(0) && p < Scalar(1))) throw DomainError("p must lie in (0, 1)");
  const auto k = x.size();
  if (k < 1) throw DomainError("extension_average needs at least one coordinate");
  if ((x.array() < Scalar(0)).any() || (x.array() > Scalar(1)).any()) {
    throw DomainError("extension_average: coordinates must lie in [0, 1]");
  }
  const Scalar kk = static_cast<Scalar>(k);
  return pow(p, Scalar(1) - kk) * x.prod() +
         pow(Scalar(1) - p, Scalar(1) - kk) / kk * (Scalar(1) - x.array()).pow(kk).sum();
}

/// The same form on the diagonal x = (w, ..., w). Its minimum over [0,1] is 1, at w = p.
template <class Scalar>
Scalar diagonal_average(Scalar w, Scalar p, int k) {
  using std::pow;
  if (!(w >= Scalar(0) && w <= Scalar(1))) throw DomainError("diagonal_average: w must lie in [0, 1]");
  if (!(p > Scalar(0) && p < Scalar(1))) throw DomainError("p must lie in (0, 1)");
  const Scalar kk(k);
  return pow(p, Scalar(1) - kk) * pow(w, kk) + pow(Scalar(1) - p, Scalar(1) - kk) * pow(Scalar(1) - w, kk);
}

/// (w*, value) minimizing diagonal_average over [0, 1], by bisection on the sign of the
/// derivative (the function is convex).
std::pair<double, double> diagonal_average_min(double p, int k);

/// (1-p)^{1-k} / (e^2 k): lower bound on the form once some x_j <= 1/k.
template <class Scalar>
Scalar small_coordinate_floor(Scalar p, int k) {
  using std::pow;
  const Scalar kk(k);
  const Scalar e = e_constant<Scalar>();
  return pow(Scalar(1) - p, Scalar(1) - kk) / (e * e * kk);
}

/// With lambda = log 1/(1-p):
///   1 + lambda/log(1/lambda) + 5/log(1/lambda) + log log(1/lambda)/log(1/lambda).
/// small_coordinate_floor(p, k1(p)) = e^3 / k1_margin_ratio(p). Defined for p < 1 - 5/(4e).
template <class Scalar>
Scalar k1_margin_ratio(Scalar p) {
  using std::log;
  using std::log1p;
  if (!(p > Scalar(0) && p < k1_cutoff<Scalar>())) {
    throw DomainError("k1_margin_ratio is defined only for 0 < p < 1 - 5/(4e)");
  }
  const Scalar lambda = -log1p(-p);
  const Scalar inv = log(Scalar(1) / lambda);
  return Scalar(1) + lambda / inv + Scalar(5) / inv + log(inv) / inv;
}

/// Smallest k (as a real) for which the inequality is guaranteed: 6 when
/// p >= 1 - 5/(4e), else 1 + (5 - log lambda + log log(1/lambda)) / lambda.
template <class Scalar>
Scalar threshold_k1(Scalar p) {
  using std::log;
  using std::log1p;
  if (!(p > Scalar(0) && p < Scalar(1))) throw DomainError("p must lie in (0, 1)");
  if (p >= k1_cutoff<Scalar>()) return Scalar(6);
  const Scalar lambda = -log1p(-p);
  return Scalar(1) + (Scalar(5) - log(lambda) + log(log(Scalar(1) / lambda))) / lambda;
}

/// k2(p) = k1(1 - p): the blocked-configuration threshold.
template <class Scalar>
Scalar threshold_k2(Scalar p) {
  if (!(p > Scalar(0) && p < Scalar(1))) throw DomainError("p must lie in (0, 1)");
  return threshold_k1<Scalar>(Scalar(1) - p);
}

/// p = 1/(c^{1/k} + 1) and its inverse c = ((1-p)/p)^k.
double p_from_c(double c, int k);
double c_from_p(double p, int k);

/// c1(k): infimum of c in (0, 1] with k >= k2(1/(c^{1/k} + 1)); 1 when no c qualifies.
/// `root` is c1^{1/k}, reported separately because c1 underflows for large k.
struct C1Result {
  double c1 = 1.0;
  double root = 1.0;
  bool qualifies = false;  // false when no c in (0, 1] satisfies the condition
};
C1Result threshold_c1(int k);

// --------------------------------------------------------------------------------------
// Numerical minimization of extension_average over [0,1]^k.

struct MinimizeOptions {
  int resolution = 21;                 // grid points per axis, >= 11
  std::optional<double> eps0;          // restrict to max_j |x_j - p| >= eps0
  double refine_tolerance = 1e-13;     // coordinate-descent stopping step
  std::size_t refine_candidates = 4;   // best grid points handed to refinement
  std::size_t restarts = 2000;         // stochastic mode only
  std::uint64_t seed = 1;              // stochastic mode only
  /// Auto: grid for k <= 6, stochastic above. Grid refuses k > 10.
  enum class Mode { Auto, Grid, Stochastic } mode = Mode::Auto;
};

struct MinimizationReport {
  double p = 0;
  int k = 0;
  double minimum = 0;
  Eigen::VectorXd argmin;
  double grid_minimum = 0;   // best probed grid (or restart) point before refinement
  int resolution = 0;
  double refine_tolerance = 0;
  std::optional<double> eps0;
  bool stochastic = false;   // coordinate descent from random restarts instead of a full grid
  std::uint64_t probes = 0;  // points evaluated on the grid or as restart seeds
  double k1 = 0;
  bool hypothesis_holds = false;  // k >= k1(p); otherwise the inequality is not guaranteed
  /// minimum - 1; with eps0 this is an empirical (upper) estimate of the stability margin
  double margin() const { return minimum - 1.0; }
};

/// Exhaustive over the symmetric grid (nondecreasing index tuples, exact by symmetry)
/// for k <= 6, random-restart coordinate descent for k > 6; then coordinate descent
/// with closed-form convex 1-D steps from the best candidates.
MinimizationReport minimize_extension_average(double p, int k, const MinimizeOptions& options = {});

// --------------------------------------------------------------------------------------
// Convexity inequalities.

/// (1/k) sum (1-x_i)^k - (1 - z^{1/k})^k with z = prod x_i, k = x.size(). Non-negative
/// whenever every x_i lies in (1/k, 1), where y -> (1-e^y)^k is convex.
double multiplicative_jensen_gap(const Eigen::Ref<const Eigen::VectorXd>& x);

/// phi(y) = (1 - e^y)^k and phi''(y) = k e^y (1 - e^y)^{k-2} (k e^y - 1).
template <class Scalar>
Scalar jensen_phi(Scalar y, int k) {
  using std::exp;
  using std::pow;
  return pow(Scalar(1) - exp(y), Scalar(k));
}

template <class Scalar>
Scalar jensen_phi_second(Scalar y, int k) {
  using std::exp;
  using std::pow;
  const Scalar u = exp(y);
  return Scalar(k) * u * pow(Scalar(1) - u, Scalar(k - 2)) * (Scalar(k) * u - Scalar(1));
}

/// mean phi(y_i) - phi(mean y) - m sigma^2 / 2 (population variance).
double holder_defect_gap(const Eigen::Ref<const Eigen::VectorXd>& y, int k, double m);

/// A valid curvature floor m <= inf phi'' on (a, b), for [a, b] inside (log(1/k), 0).
/// phi'' is log-concave there, so its minimum sits at an endpoint; an interior grid
/// double-checks and the result carries a 0.99 safety factor.
double phi_curvature_floor(double a, double b, int k);

/// 1/(3k^2 - k), the minimum-degree slack for K_{k+1}-free graphs to be k-partite.
Rational kpartite_stability_rho(std::int64_t k);

}  // namespace booklab::analytic
