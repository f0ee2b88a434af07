#include "sturmian/groupoid.hpp"

#include <algorithm>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

Thread shift_times(const Cover& cover, Thread th, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) th = cover.shift_thread(th);
  return th;
}

// Longest chain i_0 < ... < i_m with steps in F and every i_j allowed.
std::size_t longest_chain(const std::vector<bool>& allowed, const std::set<std::size_t>& F) {
  std::vector<long> best(allowed.size(), -1);
  long top = 0;
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    if (!allowed[i]) continue;
    best[i] = 0;
    for (std::size_t s : F) {
      if (s == 0 || s > i || best[i - s] < 0) continue;
      best[i] = std::max(best[i], best[i - s] + 1);
    }
    top = std::max(top, best[i]);
  }
  return static_cast<std::size_t>(top);
}

bool contains_thread(const std::vector<Thread>& ts, const Thread& t) {
  return std::find(ts.begin(), ts.end(), t) != ts.end();
}

}  // namespace

Arrow make_arrow(const Cover& cover, const Thread& range, const Thread& source, std::size_t k,
                 std::size_t l) {
  const auto& sys = cover.system();
  if (sys.shift(range.base, k) != sys.shift(source.base, l)) {
    throw Error("arrow witness fails on base points");
  }
  if (k <= range.K && l <= source.K) {
    auto a = shift_times(cover, range, k);
    auto b = shift_times(cover, source, l);
    std::size_t K = std::min(a.K, b.K), L = std::min(a.L, b.L);
    if (truncate(a, K, L) != truncate(b, K, L)) throw Error("arrow witness fails on threads");
  }
  return Arrow{range, static_cast<std::int64_t>(k) - static_cast<std::int64_t>(l), source, k, l};
}

Arrow unit(const Thread& th) { return Arrow{th, 0, th, 0, 0}; }

Arrow inverse(const Arrow& a) { return Arrow{a.source, -a.cocycle, a.range, a.l, a.k}; }

Arrow compose(const Arrow& a, const Arrow& b) {
  if (a.range != b.source) throw Error("compose: range of the first arrow is not the source of the second");
  return Arrow{b.range, a.cocycle + b.cocycle, a.source, a.k + b.k, a.l + b.l};
}

BisectionReport bisection_B(const Cover& cover, std::size_t nu_len_max) {
  const auto& sys = cover.system();
  const std::size_t N = nu_len_max;
  // Separating mu omega from its sibling needs prefixes of length |mu| + 1.
  const std::size_t K = N + 2, L = N + 3;
  auto iota = [&](const OrbitPoint& x) { return cover.thread_of(x, K, L); };
  auto branch = [&](std::size_t n, Variant v) { return sys.orbit_point(-static_cast<std::int64_t>(n), v); };

  BisectionReport rep;
  for (std::size_t n = 0; n < N; ++n) {
    rep.isolated.push_back(iota(sys.forward_point(n)));
    rep.isolated.push_back(iota(branch(n, Variant::L)));
  }
  for (std::size_t n = 0; n <= N; ++n) rep.isolated.push_back(iota(branch(n, Variant::R)));

  for (std::size_t n = 0; n < N; ++n) {
    rep.arrows.push_back(unit(iota(sys.forward_point(n))));
    rep.arrows.push_back(unit(iota(branch(n, Variant::L))));
  }
  for (std::size_t n = 1; n <= N; ++n) {
    rep.arrows.push_back(make_arrow(cover, iota(branch(n, Variant::R)), iota(branch(n - 1, Variant::R)), 1, 0));
  }
  // Non-isolated units.
  for (Letter a : {Letter{0}, Letter{1}}) {
    rep.arrows.push_back(unit(cover.construct_fibre_element(sys.branch_point(), a, K, L)));
  }
  rep.arrows.push_back(unit(cover.construct_fibre_element(branch(0, Variant::R), 1, K, L)));
  rep.arrows.push_back(unit(iota(sys.point(QuadraticNumber::rational(1, 2)))));

  std::vector<Thread> ranges, sources;
  for (const auto& a : rep.arrows) {
    ranges.push_back(a.range);
    sources.push_back(a.source);
  }
  for (const auto& t : rep.isolated) {
    if (!contains_thread(ranges, t)) rep.missing_from_range.push_back(t);
    if (!contains_thread(sources, t)) rep.missing_from_source.push_back(t);
  }
  auto distinct = [](const std::vector<Thread>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        if (ts[i] == ts[j]) return false;
      }
    }
    return true;
  };
  rep.sources_distinct = distinct(sources);
  rep.ranges_distinct = distinct(ranges);
  return rep;
}

DadWitness dad_witness(const SturmianSystem& sys, const std::set<std::size_t>& F) {
  if (F.empty()) throw Error("dad_witness needs a nonempty F");
  DadWitness w;
  w.F = F;
  w.lbar = *F.rbegin();
  if (w.lbar == 0) throw Error("dad_witness needs max F >= 1");
  auto short_words = sys.language(w.lbar);
  w.mu_prime = short_words[0];
  w.nu_prime = short_words[1];
  auto extend = [&](const Word& tail) {
    for (const auto& u : sys.language(2 * w.lbar)) {
      if (u.ends_with(tail)) return u;
    }
    throw Error("no left extension of " + tail.str());
  };
  w.mu = extend(w.mu_prime);
  w.nu = extend(w.nu_prime);
  w.beta_mu = sys.recurrence_bound(w.mu);
  w.beta_nu = sys.recurrence_bound(w.nu);
  for (std::size_t j = 0; j < w.lbar; ++j) {
    w.u_words.push_back(w.mu.drop(j));
    w.nu_words.push_back(w.nu.drop(j));
  }
  return w;
}

DadReport check_witness(const SturmianSystem& sys, const DadWitness& w, std::size_t window) {
  const std::size_t need = 2 * w.lbar * std::max(w.beta_mu, w.beta_nu);
  if (window < need) {
    throw Error("check_witness: window " + std::to_string(window) + " is below " + std::to_string(need));
  }
  DadReport rep;
  rep.window = window;

  rep.nu_in_v = true;
  for (const auto& a : w.u_words) {
    for (const auto& b : w.nu_words) {
      if (sys.arcs_meet(*sys.cylinder_arc(a), *sys.cylinder_arc(b))) rep.nu_in_v = false;
    }
  }

  // Positions whose U/V label is fixed by the window.
  const std::size_t decided = window - 2 * w.lbar + 1;
  rep.hits_u = true;
  for (const auto& text : sys.language(window)) {
    std::vector<bool> in_u(decided), in_v(decided);
    for (std::size_t i = 0; i < decided; ++i) {
      bool u = false;
      for (const auto& uw : w.u_words) u = u || text.substr(i, uw.size()) == uw;
      in_u[i] = u;
      in_v[i] = !u;
    }
    bool hit = false;
    for (std::size_t i = 0; i < std::min(w.beta_mu, decided) && !hit; ++i) hit = in_u[i];
    rep.hits_u = rep.hits_u && hit;
    rep.max_chain_V = std::max(rep.max_chain_V, longest_chain(in_v, w.F));
    rep.max_chain_U = std::max(rep.max_chain_U, longest_chain(in_u, w.F));
  }
  rep.cocycle_bound = std::max(rep.max_chain_V, rep.max_chain_U) * w.lbar;
  rep.pass = rep.hits_u && rep.max_chain_V <= w.beta_mu && rep.max_chain_U <= w.beta_nu;
  return rep;
}

std::size_t one_set_chain(const std::set<std::size_t>& F, std::size_t window) {
  return longest_chain(std::vector<bool>(window, true), F);
}

}  // namespace sturmian
