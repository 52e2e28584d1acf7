#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "booklab/coloring.hpp"
#include "booklab/error.hpp"
#include "booklab/rational.hpp"

namespace booklab {

/// A monochromatic spine (a k-clique) and the number of vertices extending it.
struct BookReport {
  Color color = Color::Blue;
  std::size_t k = 0;
  std::vector<Vertex> spine;  // sorted
  std::uint64_t pages = 0;
};

/// Distribution of extension counts over all monochromatic K_k of one color.
struct Spectrum {
  Color color = Color::Blue;
  std::size_t k = 0;
  std::size_t n = 0;                                  // vertex count of the coloring
  std::map<std::uint64_t, std::uint64_t> histogram;  // pages -> number of spines
  std::uint64_t total_spines = 0;

  /// sum of ext(Q); equals (k+1) * #K_{k+1}
  BigInt page_sum() const;
  /// sum of C(ext(Q), 2); equals #(K_{k+2} - e)
  BigInt page_pair_sum() const;
  std::optional<std::uint64_t> max_pages() const;
  /// number of spines with pages >= threshold (threshold measured in vertices)
  std::uint64_t count_at_least(const Rational& threshold) const;
};

/// Thrown by max_book when the coloring has no monochromatic K_k in the requested color.
class NoSpineError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Thrown by markov_floor_check when its hypotheses do not hold.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact number of monochromatic k-cliques (1 <= k <= n), via degeneracy-ordered
/// bitset recursion.
std::uint64_t count_cliques(const TwoColoring& g, Color c, std::size_t k);
/// Same, restricted to cliques inside `within`.
std::uint64_t count_cliques_within(const TwoColoring& g, Color c, std::size_t k, const VertexSet& within);

/// Common color-neighborhood of the spine. Throws DomainError if the spine is not a
/// monochromatic clique in c.
VertexSet extensions(const TwoColoring& g, std::span<const Vertex> spine, Color c);

Spectrum spectrum(const TwoColoring& g, Color c, std::size_t k);

/// Spine with the most pages, ties to the lexicographically smallest spine.
BookReport max_book(const TwoColoring& g, Color c, std::size_t k);

/// Thresholds for "(c, gamma)-many books". Standard mode uses (c/k + gamma)N for red and
/// (1/k + gamma)N for blue; the quasirandom variant uses ((1-p)^k + gamma)N and
/// (p^k + gamma)N.
struct ManyBooksParams {
  enum class Mode { Standard, Quasirandom };
  Mode mode = Mode::Standard;
  Rational c;  // standard mode
  Rational p;  // quasirandom mode
  Rational gamma;

  static ManyBooksParams standard(Rational c, Rational gamma);
  static ManyBooksParams quasirandom(Rational p, Rational gamma);
};

struct ManyBooksReport {
  ManyBooksParams params;
  std::size_t k = 0;
  std::size_t n = 0;
  Rational red_threshold;   // pages needed by a red spine
  Rational blue_threshold;  // pages needed by a blue spine
  Rational spine_floor;     // gamma N^k
  std::uint64_t red_qualifying = 0;
  std::uint64_t blue_qualifying = 0;
  bool verdict = false;

  // Quasirandom mode also reports the c/k and 1/k normalization, c = ((1-p)/p)^k.
  struct Alternate {
    Rational c;
    Rational red_threshold;
    Rational blue_threshold;
    std::uint64_t red_qualifying = 0;
    std::uint64_t blue_qualifying = 0;
    bool verdict = false;
  };
  std::optional<Alternate> alternate;
};

ManyBooksReport many_books(const TwoColoring& g, const ManyBooksParams& params, std::size_t k);

/// Number of k-subsets of B whose members have at least zeta|A| common color-neighbors
/// in A. Exhaustive; throws InconclusiveError when C(|B|, k) exceeds max_tuples.
std::uint64_t common_neighbor_tuples(const TwoColoring& g, const VertexSet& a, const VertexSet& b, std::size_t k,
                                     Color c, const Rational& zeta, std::uint64_t max_tuples = 100'000'000);

/// Given mean pages >= xi N, total_spines >= kappa N^k and 0 < nu < xi, reports whether
/// at least (xi - nu) kappa N^k spines have >= nu N pages. Always true when the
/// hypotheses hold; throws PreconditionError when they do not.
bool markov_floor_check(const Spectrum& s, const Rational& xi, const Rational& nu, const Rational& kappa);

/// Labeled K_k count with vertex i in parts[i], against the counting-lemma window
/// (prod d(V_i,V_j) +- eps C(k,2)) prod |V_i|. Regularity is not checked.
struct CountingReport {
  BigInt exact;
  Rational predicted;  // prod d * prod |V_i|
  Rational lower;
  Rational upper;
  bool within = false;
};
CountingReport counting_report(const TwoColoring& g, std::span<const VertexSet> parts, Color c, const Rational& eps);

}  // namespace booklab
