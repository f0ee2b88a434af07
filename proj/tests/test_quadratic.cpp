#include <doctest.h>

#include <random>
#include <vector>

#include "sturmian/continued_fraction.hpp"
#include "sturmian/error.hpp"
#include "sturmian/moebius.hpp"
#include "sturmian/quadratic.hpp"

using namespace sturmian;

namespace {

// Floor square root by bisection on squares; independent of isqrt.
BigInt bisect_sqrt(const BigInt& n) {
  BigInt lo = 0, hi = 1;
  while (hi * hi <= n) hi *= 2;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid;
  }
  return lo;
}

// Sign of x - num/den by interval arithmetic on sqrt(d) with 2^bits
// resolution, doubling the precision from 128 bits until decided.
int interval_sign(const QuadraticIrrational& x, const BigInt& num, const BigInt& den) {
  for (unsigned bits = 128;; bits *= 2) {
    BigInt scale = BigInt(1) << bits;
    BigInt s = bisect_sqrt(x.d() * scale * scale);  // s <= sqrt(d)*scale < s+1
    // den*(p + q*sqrt d) - num*r, scaled; q*sqrt(d)*scale lies between q*s and q*(s+1).
    BigInt a = den * (x.p() * scale + x.q() * s) - num * x.r() * scale;
    BigInt b = den * (x.p() * scale + x.q() * (s + 1)) - num * x.r() * scale;
    if (a > b) std::swap(a, b);
    if (a > 0) return 1;
    if (b < 0) return -1;
  }
}

// Expansion by repeated floor and reciprocal, stopping at the first
// repeated complete quotient.
ContinuedFraction floor_reciprocal_cf(const QuadraticIrrational& x) {
  std::vector<QuadraticNumber> seen;
  std::vector<BigInt> quotients;
  QuadraticNumber y = x.value();
  for (;;) {
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (seen[i] == y) {
        ContinuedFraction cf;
        cf.preperiod.assign(quotients.begin(), quotients.begin() + i);
        cf.period.assign(quotients.begin() + i, quotients.end());
        return canonical_form(cf);
      }
    }
    seen.push_back(y);
    BigInt a = y.floor();
    quotients.push_back(a);
    y = QuadraticNumber::integer(1) / (y - QuadraticNumber::rational(a));
  }
}

std::vector<QuadraticIrrational> corpus() {
  std::vector<QuadraticIrrational> out;
  const int specs[][4] = {{3, -1, 5, 2}, {-1, 1, 5, 2}, {-1, 1, 2, 1}, {0, 1, 2, 2},  {1, 1, 3, 4},
                          {-1, 1, 3, 1}, {2, -1, 3, 1}, {-2, 1, 7, 1}, {-3, 1, 13, 2}, {5, -2, 6, 1},
                          {-3, 1, 11, 1}, {1, 1, 5, 4}, {-1, 2, 2, 3}, {7, -3, 5, 2},  {-1, 1, 10, 3},
                          {4, -1, 10, 5}, {-4, 1, 17, 1}, {3, 1, 2, 7}, {-5, 3, 3, 1}, {1, -1, 2, -3},
                          {-2, 1, 6, 1}, {9, -4, 5, 1}};
  for (const auto& s : specs) out.push_back(normalize(s[0], s[1], s[2], s[3]));
  return out;
}

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("normalize produces canonical forms") {
  auto a = normalize(3, -1, 5, 2);
  CHECK(a.p() == 3);
  CHECK(a.q() == -1);
  CHECK(a.d() == 5);
  CHECK(a.r() == 2);
  CHECK(normalize(6, -2, 5, 4) == a);
  auto s = normalize(0, 2, 8, 4);
  CHECK(s.p() == 0);
  CHECK(s.q() == 1);
  CHECK(s.d() == 2);
  CHECK(s.r() == 1);
  CHECK(normalize(1, 1, 5, -2) == normalize(-1, -1, 5, 2));
  CHECK_THROWS_AS(normalize(1, 0, 5, 2), RationalValueError);
  CHECK_THROWS_AS(normalize(1, 1, 9, 2), RationalValueError);
  CHECK_THROWS_AS(normalize(1, 1, 5, 0), Error);
}

TEST_CASE("compare_to_rational examples") {
  auto alpha = normalize(3, -1, 5, 2);
  CHECK(compare_to_rational(alpha, 1, 2) == Ordering::Less);
  CHECK(compare_to_rational(alpha, 0, 1) == Ordering::Greater);
  CHECK(compare_to_rational(normalize(0, 1, 2, 1), 3, 2) == Ordering::Less);
  CHECK_THROWS_AS(compare_to_rational(alpha, 1, 0), Error);
}

TEST_CASE("compare_to_rational agrees with interval arithmetic") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> small(-50, 50), pos(1, 40), rad(2, 200);
  int checked = 0;
  while (checked < 1000) {
    int q = small(rng), d = rad(rng);
    if (q == 0 || is_perfect_square(d)) continue;
    auto x = normalize(small(rng), q, d, pos(rng));
    BigInt num = small(rng) * 7, den = pos(rng);
    int expected = interval_sign(x, num, den);
    CHECK((compare_to_rational(x, num, den) == Ordering::Greater) == (expected > 0));
    ++checked;
  }
}

TEST_CASE("isqrt and floor_div") {
  for (int n = 0; n < 2000; ++n) CHECK(isqrt(n) == bisect_sqrt(n));
  BigInt big = BigInt(1) << 301;
  CHECK(isqrt(big) == bisect_sqrt(big));
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(square_part(72) == 6);
}

TEST_CASE("field arithmetic") {
  auto s5 = QuadraticNumber(0, 1, 5, 1);
  auto phi = (QuadraticNumber::integer(1) + s5) / QuadraticNumber::integer(2);
  CHECK(phi * phi == phi + QuadraticNumber::integer(1));
  CHECK(phi.floor() == 1);
  CHECK((-phi).floor() == -2);
  CHECK((-phi).ceil() == -1);
  CHECK(phi.frac() == phi - QuadraticNumber::integer(1));
  CHECK(phi.conjugate() == QuadraticNumber::integer(1) - phi);
  CHECK(QuadraticNumber::rational(2, 4) == QuadraticNumber::rational(1, 2));
  CHECK(QuadraticNumber::rational(1, 2) < phi);
  CHECK_THROWS_AS(s5 + QuadraticNumber(0, 1, 2, 1), Error);
}

TEST_CASE("cf_expand examples") {
  auto fib = cf_expand(normalize(3, -1, 5, 2));
  CHECK(fib.preperiod == ints({0, 2}));
  CHECK(fib.period == ints({1}));
  CHECK(fib.to_string() == "cf:[0;2,(1)]");
  CHECK(cf_expand(normalize(-1, 1, 5, 2)).to_string() == "cf:[0;(1)]");
  CHECK(cf_expand(normalize(0, 1, 2, 1)).to_string() == "cf:[1;(2)]");
  CHECK_THROWS_AS(cf_expand(normalize(0, 1, 94, 1), 3), BudgetExceeded);
}

TEST_CASE("cf_expand agrees with floor/reciprocal iteration") {
  for (const auto& x : corpus()) {
    INFO(x.to_string());
    CHECK(cf_expand(x) == floor_reciprocal_cf(x));
  }
}

TEST_CASE("cf reconstruction returns the same value") {
  for (const auto& x : corpus()) {
    INFO(x.to_string());
    CHECK(cf_value(cf_expand(x)) == x);
  }
  // A non-canonical spelling folds to the same value.
  ContinuedFraction loose{ints({0, 2, 1, 1}), ints({1, 1})};
  CHECK(canonical_form(loose) == cf_expand(normalize(3, -1, 5, 2)));
  CHECK(cf_value(loose) == normalize(3, -1, 5, 2));
}

TEST_CASE("cf text round-trips") {
  for (const auto& x : corpus()) {
    auto cf = cf_expand(x);
    CHECK(parse_cf(cf.to_string()) == cf);
    CHECK(parse_quad(x.to_string()) == x);
  }
  CHECK_THROWS_AS(parse_cf("cf:[0;2,1]"), ParseError);
  CHECK_THROWS_AS(parse_cf("cf:[0;2,(0)]"), ParseError);
  CHECK_THROWS_AS(parse_quad("quad:1,x,5,2"), ParseError);
}

TEST_CASE("tail equivalence") {
  auto a = cf_expand(normalize(3, -1, 5, 2));
  auto b = cf_expand(normalize(-1, 1, 5, 2));
  auto c = cf_expand(normalize(0, 1, 2, 1));
  CHECK(cf_tail_equivalent(a, b));
  CHECK_FALSE(cf_tail_equivalent(b, c));
  CHECK(cf_tail_equivalent(a, a));
  CHECK(least_rotation(ints({2, 1, 3})) == ints({1, 3, 2}));
}

TEST_CASE("tail equivalence is an equivalence relation on the corpus") {
  auto xs = corpus();
  REQUIRE(xs.size() >= 20);
  std::vector<ContinuedFraction> cfs;
  for (const auto& x : xs) cfs.push_back(cf_expand(x));
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    CHECK(cf_tail_equivalent(cfs[i], cfs[i]));
    for (std::size_t j = 0; j < cfs.size(); ++j) {
      CHECK(cf_tail_equivalent(cfs[i], cfs[j]) == cf_tail_equivalent(cfs[j], cfs[i]));
      for (std::size_t k = 0; k < cfs.size(); ++k) {
        if (cf_tail_equivalent(cfs[i], cfs[j]) && cf_tail_equivalent(cfs[j], cfs[k])) {
          CHECK(cf_tail_equivalent(cfs[i], cfs[k]));
        }
      }
    }
  }
}

TEST_CASE("gl2z action") {
  auto alpha = normalize(3, -1, 5, 2);
  CHECK(gl2z_apply(Moebius::identity(), alpha) == alpha);
  CHECK(gl2z_apply(Moebius{-1, 1, 0, 1}, alpha).value() ==
        QuadraticNumber::integer(1) - alpha.value());
  CHECK(gl2z_apply(Moebius{0, 1, 1, 0}, normalize(-1, 1, 5, 2)) == normalize(1, 1, 5, 2));
  CHECK_THROWS_AS(gl2z_apply(Moebius{2, 0, 0, 1}, alpha), Error);

  std::mt19937_64 rng(7);
  std::vector<Moebius> gens{{1, 1, 0, 1}, {0, 1, 1, 0}, {-1, 1, 0, 1}, {1, 0, 1, 1}, {1, -1, 0, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto random_matrix = [&] {
    Moebius m;
    for (int i = 0; i < 4; ++i) m = m * gens[pick(rng)];
    return m;
  };
  for (const auto& x : corpus()) {
    for (int trial = 0; trial < 5; ++trial) {
      Moebius m = random_matrix(), n = random_matrix();
      auto lhs = gl2z_apply(m * n, x);
      CHECK(lhs == gl2z_apply(m, gl2z_apply(n, x)));
      CHECK(cf_tail_equivalent(cf_expand(x), cf_expand(lhs)));
    }
  }
}
