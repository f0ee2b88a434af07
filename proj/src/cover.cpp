#include "sturmian/cover.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

void require_index(const IndexPair& idx) {
  if (idx.k > idx.l) {
    throw Error("index (" + std::to_string(idx.k) + "," + std::to_string(idx.l) + ") needs k <= l");
  }
}

void require_truncation(std::size_t K, std::size_t L) {
  if (K > L) throw Error("truncation needs K <= L");
}

// Every level (k, l) of a (K, L) truncation, in increasing order.
std::vector<IndexPair> levels_of(std::size_t K, std::size_t L) {
  std::vector<IndexPair> out;
  for (std::size_t k = 0; k <= K; ++k) {
    for (std::size_t l = k; l <= L; ++l) out.push_back({k, l});
  }
  return out;
}

}  // namespace

bool index_leq(const IndexPair& a, const IndexPair& b) {
  return a.k <= b.k && a.l - a.k <= b.l - b.k;
}

const EqClass& Thread::at(std::size_t k, std::size_t l) const {
  auto it = levels.find({k, l});
  if (it == levels.end()) {
    throw Error("level (" + std::to_string(k) + "," + std::to_string(l) + ") outside truncation (" +
                std::to_string(K) + "," + std::to_string(L) + ")");
  }
  return it->second;
}

EqClass Cover::eq_class(const OrbitPoint& x, IndexPair idx) const {
  require_index(idx);
  return EqClass{idx, sys_.code_word(x, idx.k), sys_.past_set(sys_.shift(x, idx.k), idx.l), x};
}

std::vector<EqClass> Cover::enumerate_classes(IndexPair idx) const {
  require_index(idx);
  std::vector<OrbitPoint> reps;
  // A generic point y in each cell of the l-partition, moved forward so that
  // its l-past after k shifts is the cell word.
  const auto forward = QuadraticNumber::integer(static_cast<std::int64_t>(idx.l - idx.k)) * sys_.alpha().value();
  for (const auto& w : sys_.language(idx.l)) {
    reps.push_back(sys_.point(sys_.generic_point_in(*sys_.cylinder_arc(w)) + forward));
  }
  // Points whose past can branch.
  const auto reach = static_cast<std::int64_t>(idx.k + idx.l + 1);
  for (std::int64_t m = -reach; m <= reach; ++m) {
    reps.push_back(sys_.orbit_point(m, Variant::L));
    if (m <= 0) reps.push_back(sys_.orbit_point(m, Variant::R));
  }
  std::vector<EqClass> classes;
  for (const auto& x : reps) classes.push_back(eq_class(x, idx));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

FiniteQuotient Cover::quotient(IndexPair idx, std::size_t samples, std::uint64_t seed) const {
  FiniteQuotient fq{idx, enumerate_classes(idx), seed, 0};
  std::mt19937_64 rng(seed);
  const auto reach = static_cast<std::int64_t>(3 * (idx.k + idx.l + 2));
  std::uniform_int_distribution<std::int64_t> orbit(-reach, reach);
  std::uniform_int_distribution<std::int64_t> denom(2, 1'000'000'000);
  for (std::size_t s = 0; s < samples; ++s) {
    OrbitPoint x;
    if (s % 4 == 3) {
      x = sys_.orbit_point(orbit(rng), rng() % 2 ? Variant::R : Variant::L);
    } else {
      std::int64_t den = denom(rng);
      std::uniform_int_distribution<std::int64_t> numer(0, den - 1);
      x = sys_.point(QuadraticNumber::rational(numer(rng), den));
    }
    auto c = eq_class(x, idx);
    if (!std::binary_search(fq.classes.begin(), fq.classes.end(), c)) {
      throw IncompleteEnumeration("quotient at (" + std::to_string(idx.k) + "," + std::to_string(idx.l) +
                                  ") misses the class of " + to_string(x));
    }
    ++fq.samples_checked;
  }
  return fq;
}

EqClass Cover::q_map(const EqClass& c, IndexPair target) const {
  require_index(target);
  if (!index_leq(target, c.index)) throw Error("q_map: target level does not precede the class level");
  return eq_class(c.representative, target);
}

EqClass Cover::shift_map(const EqClass& c) const {
  if (c.index.k == 0) throw Error("shift_map needs k >= 1");
  return eq_class(sys_.shift(c.representative), {c.index.k - 1, c.index.l});
}

Thread Cover::thread_of(const OrbitPoint& x, std::size_t K, std::size_t L) const {
  require_truncation(K, L);
  Thread th{K, L, x, {}};
  for (const auto& idx : levels_of(K, L)) th.levels.emplace(idx, eq_class(x, idx));
  return th;
}

Thread Cover::shift_thread(const Thread& th) const {
  if (th.K == 0) throw Error("shift_thread needs K >= 1");
  Thread out{th.K - 1, th.L - 1, sys_.shift(th.base), {}};
  for (const auto& idx : levels_of(out.K, out.L)) {
    out.levels.emplace(idx, q_map(shift_map(th.at(idx.k + 1, idx.l + 1)), idx));
  }
  return out;
}

OrbitPoint Cover::property_star_witness(const Word& mu) const {
  auto arc = sys_.cylinder_arc(mu);
  if (!arc) throw NotAdmissible(mu.str() + " is not a factor");
  auto t = sys_.generic_point_in(*arc);
  return sys_.point(t + QuadraticNumber::integer(static_cast<std::int64_t>(mu.size())) * sys_.alpha().value());
}

EqClass Cover::singleton_class(const Word& w, IndexPair idx) const {
  auto witness = property_star_witness(w);
  auto back = QuadraticNumber::integer(static_cast<std::int64_t>(idx.k)) * sys_.alpha().value();
  return eq_class(sys_.point(witness.t - back), idx);
}

Thread Cover::embed_thread(const TwoSidedPoint& x, const OrbitPoint& base, std::size_t K,
                           std::size_t L) const {
  require_truncation(K, L);
  Thread th{K, L, base, {}};
  for (const auto& idx : levels_of(K, L)) {
    auto k = static_cast<std::int64_t>(idx.k), l = static_cast<std::int64_t>(idx.l);
    th.levels.emplace(idx, singleton_class(sys_.two_sided_word(x, k - l, k), idx));
  }
  return th;
}

Thread Cover::construct_fibre_element(const OrbitPoint& x, Letter letter, std::size_t K,
                                      std::size_t L) const {
  auto loc = sys_.locate(x);
  if (loc.kind == OrbitKind::Generic) throw Error(to_string(x) + " is not in the orbit of omega");
  Variant v = letter ? Variant::R : Variant::L;
  if (loc.kind == OrbitKind::Backward) {
    if (letter != loc.branch_letter) {
      throw Error("the letter before omega is forced to " + std::to_string(loc.branch_letter) + " at " +
                  to_string(x));
    }
    v = x.variant;
  }
  return embed_thread(sys_.two_sided_point(x.t, v), x, K, L);
}

Thread Cover::two_sided_embed(const TwoSidedPoint& x, std::size_t K, std::size_t L) const {
  auto base = sys_.truncate(x);
  if (sys_.locate(base).kind == OrbitKind::Generic) return thread_of(base, K, L);
  return embed_thread(x, base, K, L);
}

ResolutionBound Cover::resolution_bound(const OrbitPoint& x) const {
  auto loc = sys_.locate(x);
  switch (loc.kind) {
    case OrbitKind::Forward:
      return {0, loc.distance + 1, 3};
    case OrbitKind::Backward:
      return {loc.distance, loc.distance, 2};
    case OrbitKind::Generic:
      break;
  }
  return {0, 0, 1};
}

std::vector<Thread> Cover::search_fibre(const OrbitPoint& x, std::size_t K, std::size_t L) const {
  require_truncation(K, L);
  // Every level (k, l) precedes (k, L), so a thread is fixed by its classes
  // at the levels (k, L); those must agree wherever their images overlap.
  std::vector<std::vector<EqClass>> candidates(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    const Word prefix = sys_.code_word(x, k);
    const auto allowed = sys_.past_set(sys_.shift(x, k), L);
    for (auto& c : enumerate_classes({k, L})) {
      if (c.prefix == prefix &&
          std::includes(allowed.begin(), allowed.end(), c.past.begin(), c.past.end())) {
        candidates[k].push_back(std::move(c));
      }
    }
  }

  std::vector<Thread> out;
  std::map<IndexPair, EqClass> assigned;
  auto extend = [&](auto& self, std::size_t k) -> void {
    if (k > K) {
      out.push_back(Thread{K, L, x, assigned});
      return;
    }
    for (const auto& c : candidates[k]) {
      auto saved = assigned;
      bool ok = true;
      for (std::size_t a = 0; a <= k && ok; ++a) {
        for (std::size_t l = a; l <= L - k + a && ok; ++l) {
          auto image = q_map(c, {a, l});
          auto [it, inserted] = assigned.emplace(IndexPair{a, l}, image);
          ok = inserted || it->second == image;
        }
      }
      if (ok) self(self, k + 1);
      assigned = std::move(saved);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), [](const Thread& a, const Thread& b) { return a.levels < b.levels; });
  return out;
}

std::vector<Thread> Cover::fibre(const OrbitPoint& x, std::size_t K, std::size_t L) const {
  auto bound = resolution_bound(x);
  auto threads = search_fibre(x, K, L);
  if (K < bound.K || L < bound.L) {
    throw Unresolved("fibre over " + to_string(x) + " needs K >= " + std::to_string(bound.K) + " and L >= " +
                         std::to_string(bound.L) + "; found " + std::to_string(threads.size()) + " threads",
                     threads.size());
  }
  return threads;
}

bool Cover::is_isolated(const Thread& th) const {
  auto loc = sys_.locate(th.base);
  IndexPair idx;
  switch (loc.kind) {
    case OrbitKind::Generic:
      return false;
    case OrbitKind::Forward:
      idx = {0, loc.distance + 1};
      break;
    case OrbitKind::Backward:
      idx = {loc.distance, loc.distance};
      break;
  }
  if (idx.k > th.K || idx.l > th.L) {
    throw Unresolved("isolation of a thread over " + to_string(th.base) + " is decided at level (" +
                         std::to_string(idx.k) + "," + std::to_string(idx.l) + ")",
                     0);
  }
  return th.at(idx.k, idx.l) == eq_class(th.base, idx);
}

std::optional<OrbitPoint> Cover::orbit_representative(const EqClass& c, std::size_t max_index) const {
  for (std::size_t n = 0; n <= max_index; ++n) {
    for (std::int64_t m : {static_cast<std::int64_t>(n), -static_cast<std::int64_t>(n)}) {
      for (Variant v : {Variant::L, Variant::R}) {
        auto x = sys_.orbit_point(m, v);
        if (v == Variant::R && x.variant == Variant::L) continue;
        if (eq_class(x, c.index) == c) return x;
      }
      if (n == 0) break;
    }
  }
  return std::nullopt;
}

Thread truncate(const Thread& th, std::size_t K, std::size_t L) {
  require_truncation(K, L);
  if (K > th.K || L > th.L) throw Error("truncate: target exceeds the thread's truncation");
  Thread out{K, L, th.base, {}};
  for (const auto& idx : levels_of(K, L)) out.levels.emplace(idx, th.at(idx.k, idx.l));
  return out;
}

std::string to_string(const EqClass& c) {
  std::string out = "(" + std::to_string(c.index.k) + "," + std::to_string(c.index.l) + ") prefix=" +
                    c.prefix.str() + " past={";
  for (std::size_t i = 0; i < c.past.size(); ++i) out += (i ? "," : "") + c.past[i].str();
  return out + "}";
}

std::string to_string(const Thread& th) {
  std::string out = "thread over " + to_string(th.base) + " at (" + std::to_string(th.K) + "," +
                    std::to_string(th.L) + ")\n";
  for (const auto& [idx, c] : th.levels) out += "  " + to_string(c) + "\n";
  return out;
}

}  // namespace sturmian
