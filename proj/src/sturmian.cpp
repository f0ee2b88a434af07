#include "sturmian/sturmian.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/error.hpp"

namespace sturmian {

namespace {

using Interval = std::pair<QuadraticNumber, QuadraticNumber>;  // [first, second)

// Letters x_0 .. x_{n-1} of the point t under convention v, without
// reducing the variant first.
Word code_run(const QuadraticNumber& t, Variant v, std::size_t n, const QuadraticNumber& alpha,
              const QuadraticNumber& threshold) {
  Word w;
  QuadraticNumber f = t.frac();
  if (v == Variant::R && f.is_zero()) f = QuadraticNumber::integer(1);
  const QuadraticNumber one = QuadraticNumber::integer(1);
  for (std::size_t i = 0; i < n; ++i) {
    bool a = v == Variant::L ? f >= threshold : f > threshold;
    w.push_back(a ? 1 : 0);
    f += alpha;
    if (a) f -= one;
  }
  return w;
}

bool in_arc(const QuadraticNumber& t, const QuadraticNumber& a, const QuadraticNumber& b,
            bool lo_closed, bool hi_closed) {
  bool above = t > a || (lo_closed && t == a);
  bool below = t < b || (hi_closed && t == b);
  return a < b ? (above && below) : (above || below);
}

// The circular arc [a, b) as at most two linear intervals in [0, 1).
std::vector<Interval> linear_pieces(const QuadraticNumber& a, const QuadraticNumber& b) {
  std::vector<Interval> out;
  const QuadraticNumber zero, one = QuadraticNumber::integer(1);
  if (a < b) {
    out.emplace_back(a, b);
  } else {
    if (a < one) out.emplace_back(a, one);
    if (zero < b) out.emplace_back(zero, b);
  }
  return out;
}

std::vector<Interval> subtract(const std::vector<Interval>& from, const Interval& cut) {
  std::vector<Interval> out;
  for (const auto& [x, y] : from) {
    const QuadraticNumber& left_end = std::min(y, cut.first);
    if (x < left_end) out.emplace_back(x, left_end);
    const QuadraticNumber& right_start = std::max(x, cut.second);
    if (right_start < y) out.emplace_back(right_start, y);
  }
  return out;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::L ? "L" : "R"; }

std::string to_string(const OrbitPoint& x) { return x.t.to_string() + ":" + to_string(x.variant); }

SturmianSystem::SturmianSystem(QuadraticIrrational alpha)
    : alpha_(std::move(alpha)), one_minus_alpha_(QuadraticNumber::integer(1) - alpha_.value()) {
  if (alpha_.value().sign() <= 0 || one_minus_alpha_.sign() <= 0) {
    throw Error("alpha must lie in (0, 1), got " + alpha_.to_string());
  }
}

OrbitPoint SturmianSystem::point(const QuadraticNumber& t, Variant v) const {
  QuadraticNumber f = t.frac();
  if (v == Variant::R) {
    auto m = orbit_index(f);
    if (!m || *m > 0) v = Variant::L;
  }
  return {std::move(f), v};
}

std::optional<std::int64_t> SturmianSystem::orbit_index(const QuadraticNumber& t) const {
  if (t.is_rational()) {
    if (t.r() == 1) return 0;
    return std::nullopt;
  }
  if (t.d() != alpha_.d()) return std::nullopt;
  BigInt num = t.q() * alpha_.r();
  BigInt den = t.r() * alpha_.q();
  if (num % den != 0) return std::nullopt;
  BigInt m = num / den;
  QuadraticNumber rest = t - QuadraticNumber::rational(m) * alpha_.value();
  if (!rest.is_rational() || rest.r() != 1) return std::nullopt;
  if (m > std::numeric_limits<std::int64_t>::max() || m < std::numeric_limits<std::int64_t>::min()) {
    throw Error("orbit index out of range: " + m.str());
  }
  return static_cast<std::int64_t>(m);
}

QuadraticNumber SturmianSystem::orbit_position(std::int64_t m) const {
  return (QuadraticNumber::integer(m) * alpha_.value()).frac();
}

OrbitLocation SturmianSystem::locate(const OrbitPoint& x) const {
  auto m = orbit_index(x.t);
  if (!m) return {};
  if (*m >= 1) return {OrbitKind::Forward, static_cast<std::size_t>(*m - 1), 0};
  return {OrbitKind::Backward, static_cast<std::size_t>(1 - *m),
          static_cast<Letter>(x.variant == Variant::R ? 1 : 0)};
}

OrbitPoint SturmianSystem::omega_preimage(const Word& mu) const {
  if (mu.empty()) return branch_point();
  const auto m = static_cast<std::int64_t>(mu.size());
  for (Variant v : {Variant::L, Variant::R}) {
    OrbitPoint y = orbit_point(1 - m, v);
    if (code_word(y, mu.size()) == mu) return y;
  }
  throw NotAdmissible(mu.str() + " omega is not in the subshift");
}

OrbitPoint SturmianSystem::shift(const OrbitPoint& x, std::size_t n) const {
  return point(x.t + QuadraticNumber::rational(BigInt(n)) * alpha_.value(), x.variant);
}

std::vector<OrbitPoint> SturmianSystem::preimages(const OrbitPoint& x) const {
  const QuadraticNumber back = x.t - alpha_.value();
  if (x == branch_point()) return {point(back, Variant::L), point(back, Variant::R)};
  return {point(back, x.variant)};
}

Letter SturmianSystem::code_letter(const OrbitPoint& x, std::size_t i) const {
  QuadraticNumber s = x.t + QuadraticNumber::rational(BigInt(i)) * alpha_.value();
  if (x.variant == Variant::L) return s.frac() >= one_minus_alpha_ ? 1 : 0;
  QuadraticNumber upper = s - QuadraticNumber::rational(s.ceil()) + QuadraticNumber::integer(1);
  return upper > one_minus_alpha_ ? 1 : 0;
}

Word SturmianSystem::code_word(const OrbitPoint& x, std::size_t n) const {
  return code_run(x.t, x.variant, n, alpha_.value(), one_minus_alpha_);
}

TwoSidedPoint SturmianSystem::two_sided_point(const QuadraticNumber& t, Variant v) const {
  QuadraticNumber f = t.frac();
  if (!orbit_index(f)) v = Variant::L;
  return {std::move(f), v};
}

TwoSidedPoint SturmianSystem::shift(const TwoSidedPoint& x, std::int64_t n) const {
  return two_sided_point(x.t + QuadraticNumber::integer(n) * alpha_.value(), x.variant);
}

Word SturmianSystem::two_sided_word(const TwoSidedPoint& x, std::int64_t m, std::int64_t n) const {
  if (n <= m) return {};
  QuadraticNumber start = x.t + QuadraticNumber::integer(m) * alpha_.value();
  return code_run(start, x.variant, static_cast<std::size_t>(n - m), alpha_.value(), one_minus_alpha_);
}

SturmianSystem::Partition SturmianSystem::partition(std::size_t n) const {
  Partition part;
  part.sorted.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    auto tag = static_cast<std::int64_t>(j);
    part.sorted.push_back({orbit_position(-tag), tag});
  }
  std::sort(part.sorted.begin(), part.sorted.end(),
            [](const PartitionPoint& a, const PartitionPoint& b) { return a.position < b.position; });
  part.rank.resize(n + 1);
  for (std::size_t c = 0; c <= n; ++c) part.rank[static_cast<std::size_t>(part.sorted[c].tag)] = c;
  return part;
}

// Letter i is 1 exactly on the arc [-(i+1)alpha, -i alpha), so the word of
// a cell follows from the ranks of the partition points alone.
Word SturmianSystem::cell_word(const Partition& part, std::size_t cell) {
  const std::size_t n = part.rank.size() - 1;
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = part.rank[i + 1], hi = part.rank[i];
    bool one = lo < hi ? (cell >= lo && cell < hi) : (cell >= lo || cell < hi);
    w.push_back(one ? 1 : 0);
  }
  return w;
}

Arc SturmianSystem::cell_arc(const Partition& part, std::size_t cell) {
  bool last = cell + 1 == part.sorted.size();
  return Arc{part.sorted[cell].tag, last ? 0 : part.sorted[cell + 1].tag};
}

std::optional<Arc> SturmianSystem::cylinder_arc(const Word& mu) const {
  if (mu.empty()) return Arc{};
  auto part = partition(mu.size());
  for (std::size_t c = 0; c < part.sorted.size(); ++c) {
    if (cell_word(part, c) == mu) return cell_arc(part, c);
  }
  return std::nullopt;
}

bool SturmianSystem::arc_contains(const Arc& arc, const OrbitPoint& x) const {
  if (arc.is_full()) return true;
  QuadraticNumber a = orbit_position(-arc.start_tag);
  QuadraticNumber b = orbit_position(-arc.end_tag);
  if (x.variant == Variant::L) return in_arc(x.t, a, b, arc.start_closed, arc.end_closed);
  return in_arc(x.t, a, b, arc.end_closed, arc.start_closed);
}

std::vector<Word> SturmianSystem::language(std::size_t n) const {
  if (n == 0) return {Word()};
  auto part = partition(n);
  std::vector<Word> words;
  for (std::size_t c = 0; c < part.sorted.size(); ++c) words.push_back(cell_word(part, c));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<Letter> SturmianSystem::left_extensions(const Word& w) const {
  if (!is_admissible(w)) throw NotAdmissible(w.str() + " is not a factor");
  std::vector<Letter> out;
  for (Letter a : {Letter{0}, Letter{1}}) {
    if (is_admissible(a + w)) out.push_back(a);
  }
  return out;
}

std::vector<Word> SturmianSystem::past_set(const OrbitPoint& x, std::size_t l) const {
  std::vector<OrbitPoint> level{x};
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<OrbitPoint> next;
    for (const auto& y : level) {
      for (auto& z : preimages(y)) next.push_back(std::move(z));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::vector<Word> words;
  for (const auto& y : level) words.push_back(code_word(y, l));
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::size_t SturmianSystem::recurrence_bound(const Word& mu) const {
  if (mu.empty()) return 0;
  auto arc = cylinder_arc(mu);
  if (!arc) throw NotAdmissible(mu.str() + " is not a factor");
  auto pos = [this](std::int64_t tag) { return orbit_position(-tag); };
  std::vector<Interval> uncovered = linear_pieces(pos(arc->end_tag), pos(arc->start_tag));
  constexpr std::size_t kMaxSteps = 1'000'000;
  for (std::size_t i = 1; i <= kMaxSteps; ++i) {
    if (uncovered.empty()) return i - 1 + mu.size();
    auto shift_tag = static_cast<std::int64_t>(i);
    for (const auto& piece : linear_pieces(pos(arc->start_tag + shift_tag), pos(arc->end_tag + shift_tag))) {
      uncovered = subtract(uncovered, piece);
    }
  }
  throw BudgetExceeded("recurrence_bound: no cover within " + std::to_string(kMaxSteps) + " shifts");
}

bool SturmianSystem::arcs_meet(const Arc& a, const Arc& b) const {
  auto pieces = [this](const Arc& arc) {
    if (arc.is_full()) return std::vector<Interval>{{QuadraticNumber(), QuadraticNumber::integer(1)}};
    return linear_pieces(orbit_position(-arc.start_tag), orbit_position(-arc.end_tag));
  };
  for (const auto& [a0, a1] : pieces(a)) {
    for (const auto& [b0, b1] : pieces(b)) {
      if (std::max(a0, b0) < std::min(a1, b1)) return true;
    }
  }
  return false;
}

QuadraticNumber SturmianSystem::generic_point_in(const Arc& arc) const {
  QuadraticNumber a, len = QuadraticNumber::integer(1);
  if (!arc.is_full()) {
    a = orbit_position(-arc.start_tag);
    len = orbit_position(-arc.end_tag) - a;
    if (len.sign() <= 0) len += QuadraticNumber::integer(1);
  }
  for (std::int64_t den = 2;; ++den) {
    for (std::int64_t num = 1; num < den; ++num) {
      QuadraticNumber t = (a + len * QuadraticNumber::rational(num, den)).frac();
      if (!orbit_index(t)) return t;
    }
  }
}

QuadraticIrrational parse_alpha(std::string_view spec) {
  if (spec.starts_with("quad:")) return parse_quad(spec);
  if (spec.starts_with("cf:")) return cf_value(parse_cf(spec));
  throw ParseError("alpha", "expected 'quad:p,q,d,r' or 'cf:[...]', got '" + std::string(spec) + "'");
}

}  // namespace sturmian
