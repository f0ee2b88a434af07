#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "sturmian/cover.hpp"

namespace sturmian {

/// An arrow (range, cocycle, source) of the groupoid of the cover, with a
/// witness (k, l): shift^k(range) = shift^l(source) and cocycle = k - l.
///
/// Equality ignores the witness.
struct Arrow {
  Thread range;
  std::int64_t cocycle = 0;
  Thread source;
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.cocycle == b.cocycle && a.range == b.range && a.source == b.source;
  }
};

/// Checks the witness exactly on base points and on the thread levels the
/// truncations can still see. Throws Error if either check fails.
Arrow make_arrow(const Cover& cover, const Thread& range, const Thread& source, std::size_t k,
                 std::size_t l);
Arrow unit(const Thread& th);
Arrow inverse(const Arrow& a);
/// a followed by b: for a = (y, q, z) and b = (x, p, y) the result is
/// (x, p + q, z). Throws Error unless a.range == b.source.
Arrow compose(const Arrow& a, const Arrow& b);

struct BisectionReport {
  std::vector<Arrow> arrows;
  /// Isolated threads in the enumerated window.
  std::vector<Thread> isolated;
  /// Enumerated isolated threads outside the range / source of the arrows.
  std::vector<Thread> missing_from_range;
  std::vector<Thread> missing_from_source;
  bool sources_distinct = false;
  bool ranges_distinct = false;
};

/// The arrows of the bisection B built from nu 1 omega with 1 <= |nu| <= nu_len_max,
/// together with the units at the isolated points of the forward orbit and of
/// the 0-branch, and units at a few non-isolated threads.
BisectionReport bisection_B(const Cover& cover, std::size_t nu_len_max);

struct DadWitness {
  std::set<std::size_t> F;
  std::size_t lbar = 0;
  Word mu_prime, nu_prime;
  Word mu, nu;
  std::size_t beta_mu = 0;
  std::size_t beta_nu = 0;
  /// U is the union of the cylinders of mu_[j, 2 lbar) for j < lbar; V is its complement.
  std::vector<Word> u_words;
  std::vector<Word> nu_words;
};

/// Throws Error if F is empty or max F = 0.
DadWitness dad_witness(const SturmianSystem& sys, const std::set<std::size_t>& F);

struct DadReport {
  std::size_t window = 0;
  /// Every window meets U within beta_mu shifts.
  bool hits_u = false;
  /// The cylinders of nu_[j, 2 lbar), j < lbar, miss every cylinder of U.
  /// Reported only; some left extensions break it while the chain bounds hold.
  bool nu_in_v = false;
  /// Longest chain of steps in F (ignoring 0) staying inside V, resp. U.
  std::size_t max_chain_V = 0;
  std::size_t max_chain_U = 0;
  std::size_t cocycle_bound = 0;
  bool pass = false;
};

/// Exhaustive check over all factors of length `window`.
/// Throws Error if window < 2 lbar max(beta_mu, beta_nu).
DadReport check_witness(const SturmianSystem& sys, const DadWitness& w, std::size_t window);

/// Longest chain with steps in F inside a window of that length when the
/// whole space is a single set; every factor gives the same value.
std::size_t one_set_chain(const std::set<std::size_t>& F, std::size_t window);

}  // namespace sturmian
