#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/quadratic.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Closure convention of the coding map.
///
/// L codes [0, 1-alpha) -> 0 and [1-alpha, 1) -> 1; R codes
/// (0, 1-alpha] -> 0 and (1-alpha, 1] -> 1. The two differ only on the
/// rotation orbit of 0.
enum class Variant : std::uint8_t { L, R };

/// A point of the one-sided subshift: the coding of the circle point t.
///
/// Built through SturmianSystem::point, which reduces t into [0, 1) and
/// resets the variant to L whenever the forward rotation orbit of t
/// avoids 0 (both codings then agree). Equal points compare equal.
struct OrbitPoint {
  QuadraticNumber t;
  Variant variant = Variant::L;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
  friend std::strong_ordering operator<=>(const OrbitPoint&, const OrbitPoint&) = default;
};

/// A point of the two-sided subshift; the variant is kept only when the
/// full rotation orbit of t meets 0.
struct TwoSidedPoint {
  QuadraticNumber t;
  Variant variant = Variant::L;

  friend bool operator==(const TwoSidedPoint&, const TwoSidedPoint&) = default;
};

/// A circle arc whose endpoints are the points -tag*alpha mod 1.
///
/// Closure flags describe the L convention; the R convention uses the
/// mirrored flags. Equal tags denote the full circle.
struct Arc {
  std::int64_t start_tag = 0;
  std::int64_t end_tag = 0;
  bool start_closed = true;
  bool end_closed = false;

  bool is_full() const noexcept { return start_tag == end_tag; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Position of a point relative to the orbit of the branch point.
enum class OrbitKind { Forward, Backward, Generic };

struct OrbitLocation {
  OrbitKind kind = OrbitKind::Generic;
  /// Forward: x = shift^distance(omega). Backward: x = mu omega with
  /// |mu| = distance >= 1. Generic: 0.
  std::size_t distance = 0;
  /// Backward only: the letter immediately before omega.
  Letter branch_letter = 0;
};

std::string to_string(Variant v);
std::string to_string(const OrbitPoint& x);

/// The Sturmian subshift of an irrational slope alpha in (0, 1).
///
/// All queries are exact; the object is immutable after construction.
class SturmianSystem {
 public:
  /// Throws Error unless 0 < alpha < 1.
  explicit SturmianSystem(QuadraticIrrational alpha);

  const QuadraticIrrational& alpha() const noexcept { return alpha_; }

  // -- points ---------------------------------------------------------

  /// Canonical point for (t mod 1, variant).
  OrbitPoint point(const QuadraticNumber& t, Variant v = Variant::L) const;
  /// The integer m with t = m*alpha (mod 1), if any.
  std::optional<std::int64_t> orbit_index(const QuadraticNumber& t) const;
  /// frac(m * alpha).
  QuadraticNumber orbit_position(std::int64_t m) const;
  OrbitPoint orbit_point(std::int64_t m, Variant v = Variant::L) const {
    return point(orbit_position(m), v);
  }
  OrbitLocation locate(const OrbitPoint& x) const;

  /// omega: the coding of t = alpha, the unique point with two preimages.
  OrbitPoint branch_point() const { return point(alpha_.value()); }
  /// shift^j(omega).
  OrbitPoint forward_point(std::size_t j) const {
    return orbit_point(static_cast<std::int64_t>(j) + 1);
  }
  /// The point mu omega. Throws NotAdmissible if mu omega is not in the subshift.
  OrbitPoint omega_preimage(const Word& mu) const;

  OrbitPoint shift(const OrbitPoint& x, std::size_t n = 1) const;
  /// Every y with shift(y) = x; two points exactly at omega.
  std::vector<OrbitPoint> preimages(const OrbitPoint& x) const;

  // -- coding ---------------------------------------------------------

  Letter code_letter(const OrbitPoint& x, std::size_t i) const;
  Word code_word(const OrbitPoint& x, std::size_t n) const;

  TwoSidedPoint two_sided_point(const QuadraticNumber& t, Variant v = Variant::L) const;
  /// The canonical truncation x -> x_[0, inf).
  OrbitPoint truncate(const TwoSidedPoint& x) const { return point(x.t, x.variant); }
  TwoSidedPoint shift(const TwoSidedPoint& x, std::int64_t n = 1) const;
  /// Letters at indices m, ..., n-1.
  Word two_sided_word(const TwoSidedPoint& x, std::int64_t m, std::int64_t n) const;

  // -- language -------------------------------------------------------

  /// {t : the L-coding of t starts with mu}, or nullopt if mu is not a factor.
  std::optional<Arc> cylinder_arc(const Word& mu) const;
  /// Whether the coding of x starts with the word whose cylinder is `arc`.
  bool arc_contains(const Arc& arc, const OrbitPoint& x) const;
  bool is_admissible(const Word& w) const { return cylinder_arc(w).has_value(); }
  /// All factors of length n, sorted.
  std::vector<Word> language(std::size_t n) const;
  /// {a : a w is a factor}. Throws NotAdmissible if w is not a factor.
  std::vector<Letter> left_extensions(const Word& w) const;
  /// P_l(x): the length-l words mu with mu x in the subshift, sorted.
  std::vector<Word> past_set(const OrbitPoint& x, std::size_t l) const;
  /// Least b such that every factor of length b contains mu.
  /// Throws NotAdmissible if mu is not a factor.
  std::size_t recurrence_bound(const Word& mu) const;

  /// Whether two cylinder arcs share a point.
  bool arcs_meet(const Arc& a, const Arc& b) const;

  /// A point strictly inside `arc` whose rotation orbit avoids 0.
  QuadraticNumber generic_point_in(const Arc& arc) const;

 private:
  struct PartitionPoint {
    QuadraticNumber position;
    std::int64_t tag;
  };
  // The points frac(-j alpha), j = 0..n, sorted (tag 0 first). Cell c is
  // [sorted[c], sorted[c+1]), the last one ending at 1.
  struct Partition {
    std::vector<PartitionPoint> sorted;
    std::vector<std::size_t> rank;  // rank[j] = sorted index of tag j
  };
  Partition partition(std::size_t n) const;
  static Word cell_word(const Partition& part, std::size_t cell);
  static Arc cell_arc(const Partition& part, std::size_t cell);

  QuadraticIrrational alpha_;
  QuadraticNumber one_minus_alpha_;
};

/// Parses an alpha specification "quad:p,q,d,r" or "cf:[...]".
QuadraticIrrational parse_alpha(std::string_view spec);

}  // namespace sturmian
