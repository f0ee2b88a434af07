#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sturmian/error.hpp"
#include "sturmian/sturmian.hpp"

using namespace sturmian;

namespace {

SturmianSystem fib() { return SturmianSystem(normalize(3, -1, 5, 2)); }

std::vector<SturmianSystem> systems() {
  return {fib(), SturmianSystem(normalize(-1, 1, 2, 1)), SturmianSystem(normalize(-1, 1, 5, 2))};
}

QuadraticNumber q(long n, long d) { return QuadraticNumber::rational(n, d); }

std::set<std::string> as_strings(const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

}  // namespace

TEST_CASE("code_letter examples") {
  auto s = fib();
  QuadraticNumber a = s.alpha().value();
  CHECK(s.code_letter(s.point(a), 0) == 0);
  CHECK(s.code_letter(s.point(QuadraticNumber()), 0) == 0);
  CHECK(s.code_letter(s.point(QuadraticNumber(), Variant::R), 0) == 1);
  for (auto& sys : systems()) {
    CHECK(sys.code_letter(sys.point(QuadraticNumber::integer(1) - sys.alpha().value()), 0) == 1);
  }
}

TEST_CASE("code_word examples") {
  auto s = fib();
  CHECK(s.code_word(s.branch_point(), 10).str() == "0100101001");
  CHECK(s.code_word(s.point(QuadraticNumber()), 5) == Word("0") + s.code_word(s.branch_point(), 4));
  CHECK(s.code_word(s.branch_point(), 0).empty());
}

TEST_CASE("omega matches the Fibonacci substitution fixed point") {
  auto s = fib();
  CHECK(s.code_word(s.branch_point(), 10000).str() == oracle::fibonacci_word(10000));
}

TEST_CASE("coding matches floor differences") {
  for (auto& s : systems()) {
    for (long c : {1L, 0L, -3L, 7L}) {
      auto x = s.orbit_point(c);
      INFO(s.alpha().to_string(), " c=", c);
      CHECK(s.code_word(x, 3000).str() == oracle::mechanical_word(s.alpha(), c, 3000));
    }
  }
}

TEST_CASE("code_letter agrees with code_word") {
  std::mt19937_64 rng(11);
  for (auto& s : systems()) {
    for (int trial = 0; trial < 20; ++trial) {
      long m = static_cast<long>(rng() % 41) - 20;
      Variant v = trial % 2 ? Variant::R : Variant::L;
      auto x = s.orbit_point(m, v);
      auto w = s.code_word(x, 40);
      for (std::size_t i = 0; i < 40; ++i) CHECK(s.code_letter(x, i) == w[i]);
    }
  }
}

TEST_CASE("points are canonical") {
  auto s = fib();
  QuadraticNumber a = s.alpha().value();
  CHECK(s.point(a, Variant::R) == s.point(a, Variant::L));
  CHECK(s.point(q(1, 2), Variant::R).variant == Variant::L);
  CHECK(s.point(QuadraticNumber(), Variant::R).variant == Variant::R);
  CHECK(s.point(a + QuadraticNumber::integer(3)).t == a);
  CHECK(s.orbit_index(a) == 1);
  CHECK(s.orbit_index(QuadraticNumber::integer(1) - a) == -1);
  CHECK_FALSE(s.orbit_index(q(1, 2)).has_value());
  CHECK_FALSE(s.orbit_index(QuadraticNumber(0, 1, 2, 1)).has_value());
  CHECK_THROWS_AS(SturmianSystem(normalize(1, 1, 5, 2)), Error);
}

TEST_CASE("locate classifies orbit positions") {
  auto s = fib();
  auto w = s.locate(s.branch_point());
  CHECK(w.kind == OrbitKind::Forward);
  CHECK(w.distance == 0);
  CHECK(s.locate(s.forward_point(3)).distance == 3);
  auto b = s.locate(s.orbit_point(-2, Variant::R));
  CHECK(b.kind == OrbitKind::Backward);
  CHECK(b.distance == 3);
  CHECK(b.branch_letter == 1);
  CHECK(s.locate(s.point(q(1, 2))).kind == OrbitKind::Generic);
}

TEST_CASE("branch point and preimages") {
  auto s = fib();
  auto w = s.branch_point();
  auto pre = s.preimages(w);
  REQUIRE(pre.size() == 2);
  std::set<OrbitPoint> expected{s.point(QuadraticNumber(), Variant::L), s.point(QuadraticNumber(), Variant::R)};
  CHECK(std::set<OrbitPoint>(pre.begin(), pre.end()) == expected);
  CHECK(s.shift(s.point(QuadraticNumber())) == w);
  auto half = s.point(q(1, 2));
  auto hp = s.preimages(half);
  REQUIRE(hp.size() == 1);
  CHECK(hp[0] == s.point(q(1, 2) - s.alpha().value()));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    long m = static_cast<long>(rng() % 21) - 10;
    auto x = s.orbit_point(m, i % 2 ? Variant::R : Variant::L);
    auto ps = s.preimages(s.shift(x));
    CHECK(std::find(ps.begin(), ps.end(), x) != ps.end());
    CHECK(ps.size() == (s.shift(x) == w ? 2u : 1u));
  }
}

TEST_CASE("omega_preimage") {
  auto s = fib();
  auto zero = s.omega_preimage(Word("0"));
  auto one = s.omega_preimage(Word("1"));
  CHECK(zero == s.point(QuadraticNumber(), Variant::L));
  CHECK(one == s.point(QuadraticNumber(), Variant::R));
  auto mu = Word("1001");
  auto x = s.omega_preimage(mu);
  CHECK(s.code_word(x, 14) == mu + s.code_word(s.branch_point(), 10));
  CHECK_THROWS_AS(s.omega_preimage(Word("11")), NotAdmissible);
}

TEST_CASE("two-sided words") {
  auto s = fib();
  auto x = s.two_sided_point(s.alpha().value());
  CHECK(s.two_sided_word(x, -2, 0).str() == "10");
  CHECK(s.two_sided_word(x, 0, 20) == s.code_word(s.truncate(x), 20));
  for (long m = -10; m < 5; ++m) {
    CHECK(s.two_sided_word(s.shift(x), m, m + 12) == s.two_sided_word(x, m + 1, m + 13));
  }
  auto y = s.two_sided_point(QuadraticNumber(), Variant::R);
  CHECK(s.two_sided_word(y, -5, 5).substr(5) == s.code_word(s.truncate(y), 5));
  CHECK(s.two_sided_word(y, -1, 1).str() == "01");
  CHECK(s.two_sided_word(s.two_sided_point(QuadraticNumber()), -1, 1).str() == "10");
}

TEST_CASE("cylinder arcs") {
  auto s = fib();
  CHECK(s.cylinder_arc(Word())->is_full());
  CHECK_FALSE(s.cylinder_arc(Word("11")).has_value());
  CHECK_FALSE(oracle::factors(oracle::fibonacci_word(10000), 2).contains("11"));
  auto zero = s.cylinder_arc(Word("0"));
  REQUIRE(zero.has_value());
  CHECK(zero->start_tag == 0);
  CHECK(zero->end_tag == 1);
  CHECK(s.orbit_position(-1) == QuadraticNumber::integer(1) - s.alpha().value());
}

TEST_CASE("coding and arcs are consistent on random points") {
  std::mt19937_64 rng(99);
  auto sys = systems();
  for (int trial = 0; trial < 500; ++trial) {
    auto& s = sys[trial % sys.size()];
    std::size_t n = 1 + rng() % 12;
    QuadraticNumber t;
    Variant v = Variant::L;
    if (trial % 3 == 0) {
      long m = static_cast<long>(rng() % 31) - 15;
      t = s.orbit_position(m);
      v = rng() % 2 ? Variant::R : Variant::L;
    } else {
      long den = 2 + static_cast<long>(rng() % 500);
      t = q(static_cast<long>(rng() % den), den);
    }
    auto x = s.point(t, v);
    auto mu = s.code_word(x, n);
    for (const auto& w : s.language(n)) {
      auto arc = s.cylinder_arc(w);
      REQUIRE(arc.has_value());
      CHECK(s.arc_contains(*arc, x) == (w == mu));
    }
  }
}

TEST_CASE("language examples") {
  auto s = fib();
  CHECK(as_strings(s.language(1)) == std::set<std::string>{"0", "1"});
  CHECK(as_strings(s.language(2)) == std::set<std::string>{"00", "01", "10"});
  CHECK(as_strings(s.language(3)) == std::set<std::string>{"001", "010", "100", "101"});
  CHECK(s.language(0) == std::vector<Word>{Word()});
}

TEST_CASE("language equals the factor set of a long coded word") {
  for (auto& s : systems()) {
    auto w = oracle::mechanical_word(s.alpha(), 0, 20000);
    for (std::size_t n = 1; n <= 24; ++n) {
      CHECK(as_strings(s.language(n)) == oracle::factors(w, n));
    }
  }
}

TEST_CASE("factor complexity and unique left special factor") {
  for (auto& s : systems()) {
    auto omega = s.code_word(s.branch_point(), 64);
    for (std::size_t n = 1; n <= 64; ++n) {
      auto lang = s.language(n);
      CHECK(lang.size() == n + 1);
      std::vector<Word> special;
      for (const auto& w : lang) {
        if (s.left_extensions(w).size() == 2) special.push_back(w);
      }
      REQUIRE(special.size() == 1);
      CHECK(special[0] == omega.prefix(n));
    }
  }
}

TEST_CASE("left extensions") {
  auto s = fib();
  CHECK(s.left_extensions(Word("01")) == std::vector<Letter>{0, 1});
  CHECK(s.left_extensions(Word("00")) == std::vector<Letter>{1});
  CHECK(s.left_extensions(Word()) == std::vector<Letter>{0, 1});
  CHECK_THROWS_AS(s.left_extensions(Word("11")), NotAdmissible);
}

TEST_CASE("past sets") {
  auto s = fib();
  auto omega = s.code_word(s.branch_point(), 12);
  for (std::size_t k = 0; k <= 6; ++k) {
    auto past = s.past_set(s.forward_point(k), k + 1);
    std::vector<Word> expected{Word("0") + omega.prefix(k), Word("1") + omega.prefix(k)};
    CHECK(past == expected);
  }
  CHECK(s.past_set(s.point(q(1, 2)), 0) == std::vector<Word>{Word()});
  auto half = s.point(q(1, 2));
  CHECK(s.past_set(half, 3) ==
        std::vector<Word>{s.code_word(s.point(q(1, 2) - QuadraticNumber::integer(3) * s.alpha().value()), 3)});
}

TEST_CASE("past sets agree with the window-scan method") {
  // mu is in P_l(x) iff mu x_[0,n) is a factor for every n.
  for (auto& s : systems()) {
    auto text = oracle::mechanical_word(s.alpha(), 0, 20000);
    std::vector<OrbitPoint> pts{s.point(q(1, 2)), s.point(q(2, 7)), s.branch_point(), s.forward_point(2),
                                s.orbit_point(-1, Variant::R), s.orbit_point(0, Variant::L)};
    for (const auto& x : pts) {
      for (std::size_t l = 0; l <= 5; ++l) {
        std::set<std::string> scan;
        auto pref = s.code_word(x, 40).str();
        auto facs = oracle::factors(text, l + pref.size());
        for (const auto& mu : oracle::factors(text, l)) {
          if (facs.contains(mu + pref)) scan.insert(mu);
        }
        INFO(to_string(x), " l=", l);
        CHECK(as_strings(s.past_set(x, l)) == scan);
      }
    }
  }
}

TEST_CASE("recurrence bound examples") {
  auto s = fib();
  CHECK(s.recurrence_bound(Word("0")) == 2);
  CHECK(s.recurrence_bound(Word()) == 0);
  CHECK_THROWS_AS(s.recurrence_bound(Word("11")), NotAdmissible);
  // Largest window free of "01", plus one, stable under doubling the sample.
  auto gap_bound = [](const std::string& w, const std::string& mu) {
    std::size_t best = 0, last = std::string::npos;
    for (std::size_t pos = w.find(mu); pos != std::string::npos; pos = w.find(mu, pos + 1)) {
      if (last != std::string::npos) best = std::max(best, pos - last);
      last = pos;
    }
    return best + mu.size() - 1;
  };
  auto b1 = gap_bound(oracle::fibonacci_word(10000), "01");
  auto b2 = gap_bound(oracle::fibonacci_word(20000), "01");
  CHECK(b1 == b2);
  CHECK(s.recurrence_bound(Word("01")) == b1);
}

TEST_CASE("recurrence bound is minimal and sufficient") {
  for (auto& s : systems()) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& mu : s.language(n)) {
        std::size_t b = s.recurrence_bound(mu);
        for (const auto& w : s.language(b)) CHECK(w.contains(mu));
        bool some_miss = false;
        for (const auto& w : s.language(b - 1)) some_miss = some_miss || !w.contains(mu);
        CHECK(some_miss);
      }
    }
  }
}

TEST_CASE("variants agree off the orbit of 0") {
  std::mt19937_64 rng(3);
  for (auto& s : systems()) {
    for (int trial = 0; trial < 50; ++trial) {
      long den = 3 + static_cast<long>(rng() % 200);
      auto t = q(1 + static_cast<long>(rng() % (den - 1)), den);
      CHECK(s.code_word({t, Variant::L}, 50) == s.code_word({t, Variant::R}, 50));
    }
    auto t = s.orbit_position(-5);
    CHECK(s.code_word({t, Variant::L}, 4) == s.code_word({t, Variant::R}, 4));
    CHECK(s.code_word({t, Variant::L}, 5) != s.code_word({t, Variant::R}, 5));
  }
}

TEST_CASE("arc midpoints and generic points code to their word") {
  for (auto& s : systems()) {
    for (std::size_t n = 1; n <= 16; ++n) {
      for (const auto& mu : s.language(n)) {
        auto arc = *s.cylinder_arc(mu);
        auto a = s.orbit_position(-arc.start_tag);
        auto b = s.orbit_position(-arc.end_tag);
        if (b <= a) b += QuadraticNumber::integer(1);
        auto mid = (a + b) * QuadraticNumber::rational(1, 2);
        CHECK(s.code_word(s.point(mid), n) == mu);
        auto t = s.generic_point_in(arc);
        CHECK_FALSE(s.orbit_index(t).has_value());
        CHECK(s.code_word(s.point(t), n) == mu);
      }
    }
  }
}

TEST_CASE("parse_alpha") {
  CHECK(parse_alpha("quad:3,-1,5,2") == normalize(3, -1, 5, 2));
  CHECK(parse_alpha("cf:[0;2,(1)]") == normalize(3, -1, 5, 2));
  CHECK_THROWS_AS(parse_alpha("0.38"), ParseError);
  CHECK_THROWS_AS(Word("012"), ParseError);
}
