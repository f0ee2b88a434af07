#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/sturmian.hpp"

namespace sturmian {

/// Level (k, l) of the projective system, k <= l.
struct IndexPair {
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend std::strong_ordering operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// a precedes b: a.k <= b.k and a.l - a.k <= b.l - b.k.
bool index_leq(const IndexPair& a, const IndexPair& b);

/// A class of points sharing the k-prefix and the l-past after k shifts.
///
/// Equality and ordering ignore the representative.
struct EqClass {
  IndexPair index;
  Word prefix;
  std::vector<Word> past;  // sorted, one or two words
  OrbitPoint representative;

  friend bool operator==(const EqClass& a, const EqClass& b) {
    return a.index == b.index && a.prefix == b.prefix && a.past == b.past;
  }
  friend std::strong_ordering operator<=>(const EqClass& a, const EqClass& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    if (auto c = a.prefix <=> b.prefix; c != 0) return c;
    return a.past <=> b.past;
  }
};

struct FiniteQuotient {
  IndexPair index;
  std::vector<EqClass> classes;  // sorted
  std::uint64_t seed = 0;
  std::size_t samples_checked = 0;
};

/// A compatible family of classes at every level (k, l) with k <= K, l <= L.
struct Thread {
  std::size_t K = 0;
  std::size_t L = 0;
  OrbitPoint base;
  std::map<IndexPair, EqClass> levels;

  /// Throws Error if (k, l) lies outside the truncation.
  const EqClass& at(std::size_t k, std::size_t l) const;

  friend bool operator==(const Thread& a, const Thread& b) {
    return a.K == b.K && a.L == b.L && a.base == b.base && a.levels == b.levels;
  }
};

/// Smallest truncation at which the fibre over a point has its final size.
struct ResolutionBound {
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t expected = 1;  // fibre size once resolved
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Finite quotients and truncated threads of the cover of a Sturmian subshift.
class Cover {
 public:
  explicit Cover(SturmianSystem system) : sys_(std::move(system)) {}

  const SturmianSystem& system() const noexcept { return sys_; }

  /// Throws Error if idx.k > idx.l.
  EqClass eq_class(const OrbitPoint& x, IndexPair idx) const;
  bool equivalent(const OrbitPoint& x, const OrbitPoint& y, IndexPair idx) const {
    return eq_class(x, idx) == eq_class(y, idx);
  }

  /// All classes at idx, enumerated from cell points and orbit points.
  std::vector<EqClass> enumerate_classes(IndexPair idx) const;
  /// enumerate_classes cross-checked against `samples` seeded random points.
  /// Throws IncompleteEnumeration if a sample falls outside every class.
  FiniteQuotient quotient(IndexPair idx, std::size_t samples = 200,
                          std::uint64_t seed = kDefaultSeed) const;

  /// Image of c at a coarser level. Throws Error unless target precedes c.index.
  EqClass q_map(const EqClass& c, IndexPair target) const;
  /// The class of the shifted representative at (k-1, l). Throws Error if k = 0.
  EqClass shift_map(const EqClass& c) const;

  /// The thread whose representative is x at every level.
  Thread thread_of(const OrbitPoint& x, std::size_t K, std::size_t L) const;
  /// The shifted thread, truncated to (K-1, L-1).
  Thread shift_thread(const Thread& th) const;

  /// A point off the orbit of omega whose |mu|-past is exactly {mu}.
  OrbitPoint property_star_witness(const Word& mu) const;

  /// The non-isolated thread over x in the orbit of omega whose past carries
  /// `letter` immediately before omega. For x = mu omega that letter is the
  /// last letter of mu; any other value throws Error.
  Thread construct_fibre_element(const OrbitPoint& x, Letter letter, std::size_t K,
                                 std::size_t L) const;
  /// The thread selected by the negative coordinates of x; lies over its truncation.
  Thread two_sided_embed(const TwoSidedPoint& x, std::size_t K, std::size_t L) const;

  ResolutionBound resolution_bound(const OrbitPoint& x) const;
  /// Every thread over x at truncation (K, L), without a resolution check.
  std::vector<Thread> search_fibre(const OrbitPoint& x, std::size_t K, std::size_t L) const;
  /// search_fibre, throwing Unresolved below resolution_bound(x).
  std::vector<Thread> fibre(const OrbitPoint& x, std::size_t K, std::size_t L) const;

  /// Whether th is the isolated thread over an orbit point of omega.
  /// Throws Unresolved when the deciding level lies outside the truncation.
  bool is_isolated(const Thread& th) const;

  /// A point of the orbit of omega, at orbit index |m| <= max_index, lying in c.
  std::optional<OrbitPoint> orbit_representative(const EqClass& c, std::size_t max_index) const;

 private:
  // Class (w suffix of length k, {w}) with a generic representative.
  EqClass singleton_class(const Word& w, IndexPair idx) const;
  Thread embed_thread(const TwoSidedPoint& x, const OrbitPoint& base, std::size_t K,
                      std::size_t L) const;

  SturmianSystem sys_;
};

/// The levels of th inside (K, L). Throws Error if (K, L) exceeds th's truncation.
Thread truncate(const Thread& th, std::size_t K, std::size_t L);

std::string to_string(const EqClass& c);
std::string to_string(const Thread& th);

}  // namespace sturmian
