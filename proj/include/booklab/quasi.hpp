#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "booklab/coloring.hpp"
#include "booklab/constructions.hpp"
#include "booklab/rational.hpp"

namespace booklab {

// ---------------------------------------------------------------------------------
// (p, theta)-quasirandomness: |e_B(X,Y) - p|X||Y|| <= theta N^2 for all disjoint X, Y.

enum class QuasiMethod { Exhaustive, Sampled };
enum class QuasiVerdict { Violated, NoViolationFound, Quasirandom };

std::string_view to_string(QuasiMethod m);
std::string_view to_string(QuasiVerdict v);

struct QuasiReport {
  Rational p;
  Rational theta;
  VertexSet x;
  VertexSet y;
  Rational deviation;  // |e_B(X,Y) - p|X||Y||
  QuasiMethod method = QuasiMethod::Exhaustive;
  std::uint64_t probes = 0;
  QuasiVerdict verdict = QuasiVerdict::NoViolationFound;
};

/// |e_B(X,Y) - p|X||Y|| recomputed from scratch.
Rational quasi_deviation(const TwoColoring& g, const VertexSet& x, const VertexSet& y, const Rational& p);

/// Exact maximum over disjoint X, Y (n <= 18). For each X the optimal Y is the set of
/// outside vertices whose weight e_B(v,X) - p|X| has the right sign, so 2^n choices of X
/// suffice. Verdict is Violated or Quasirandom. Throws InconclusiveError above n = 18.
QuasiReport quasi_exhaustive(const TwoColoring& g, const Rational& p, const Rational& theta);

/// Seeded random disjoint pairs improved by alternating best responses and single-vertex
/// moves. "Violated" is sound; "NoViolationFound" proves nothing. probes >= 1.
QuasiReport quasi_sampled(const TwoColoring& g, const Rational& p, const Rational& theta, std::uint64_t probes,
                          std::uint64_t seed);

// ---------------------------------------------------------------------------------
// Exact identity for E = sum over blue K_k of (ext(Q) - p^k N)^2.

struct IdentityReport {
  std::size_t k = 0;
  Rational p;
  BigInt cliques_k;         // B(K_k)
  BigInt cliques_k1;        // B(K_{k+1})
  BigInt near_cliques_k2;   // B(K_{k+2} - e), subgraph copies
  Rational e_direct;        // from the extension spectrum
  Rational e_identity;      // 2B(K_{k+2}-e) + (1 - 2p^k N)(k+1)B(K_{k+1}) + p^{2k} N^2 B(K_k)
  bool equal = false;
};

/// Copies of K_{k+2} minus an edge in color c, counted independently of any spectrum:
/// C(k+2, 2) #K_{k+2} plus, for each non-c pair {u, w}, the c-colored K_k inside
/// N_c(u) & N_c(w).
BigInt count_near_cliques(const TwoColoring& g, Color c, std::size_t k);

/// Both sides in exact arithmetic. Requires n <= 60 and 1 <= k <= 5; throws
/// InconclusiveError otherwise.
IdentityReport identity_check(const TwoColoring& g, std::size_t k, const Rational& p);

// ---------------------------------------------------------------------------------
// epsilon-regularity witnesses.

enum class RegularityMode { Exhaustive, Heuristic, Auto };

struct RegularityResult {
  bool refuted = false;
  VertexSet x_sub;  // witness X' (when refuted), else the largest-gap pair found
  VertexSet y_sub;
  Rational gap;     // |d(X,Y) - d(X',Y')|
  RegularityMode mode = RegularityMode::Exhaustive;
};

/// Searches X' in X, Y' in Y with |X'| >= eps|X|, |Y'| >= eps|Y| and
/// |d(X,Y) - d(X',Y')| > eps in color c. Exhaustive mode (|X|, |Y| <= 12) is exact:
/// for every X' and every size of Y' the extreme densities come from the top and bottom
/// of the sorted per-vertex counts. Heuristic mode only reports sound refutations.
RegularityResult regularity_witness(const TwoColoring& g, const VertexSet& x, const VertexSet& y, const Rational& eps,
                                    Color c, RegularityMode mode = RegularityMode::Auto, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------------
// (k, eta, delta)-blocked configurations.

struct BlockedConfigReport {
  std::size_t k = 0;
  Rational eta;
  Rational delta;
  std::vector<std::vector<Rational>> blue_density;  // d_B(C_i, C_j), diagonal = internal
  // density conditions alone
  bool red_pattern_dense = false;   // internal red >= delta, cross blue >= delta
  bool blue_pattern_dense = false;  // internal blue >= delta, cross red >= delta
  // regularity of every (C_i, C_i) and (C_i, C_j); not-refuted is evidence only
  bool regularity_refuted = false;
  std::optional<RegularityResult> refutation;
  std::size_t refuted_i = 0, refuted_j = 0;
  bool red_blocked = false;   // dense pattern and no regularity refutation
  bool blue_blocked = false;
};

/// Sets must be pairwise disjoint and nonempty. Self-regularity is tested in the
/// internal color of each pattern; disjoint pairs are color-symmetric.
BlockedConfigReport blocked_config_check(const TwoColoring& g, std::span<const VertexSet> sets, const Rational& eta,
                                         const Rational& delta);

// ---------------------------------------------------------------------------------
// Distance to a balanced complete k-partite red graph.

struct KPartiteDistance {
  std::uint64_t edits = 0;  // blue across parts + red inside parts, for `partition`
  Partition partition;
};

/// Local search over balanced partitions by improving vertex swaps, from `restarts`
/// seeded random starts. The result is an upper bound on the true distance.
KPartiteDistance kpartite_distance(const TwoColoring& g, std::size_t k, std::uint64_t restarts, std::uint64_t seed);

/// Exact recolor count for a given partition.
std::uint64_t kpartite_edits(const TwoColoring& g, const Partition& partition);

}  // namespace booklab
