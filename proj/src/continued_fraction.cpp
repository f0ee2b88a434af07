#include "sturmian/continued_fraction.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "sturmian/error.hpp"
#include "sturmian/moebius.hpp"

namespace sturmian {

namespace {

// floor((P + sqrt(D))/Q) for nonsquare D > 0 and Q != 0.
BigInt complete_quotient_floor(const BigInt& P, const BigInt& root_floor, const BigInt& Q) {
  if (Q > 0) return floor_div(P + root_floor, Q);
  // (P + sqrt D)/Q = (-P - sqrt D)/(-Q) and floor(-sqrt D) = -root_floor - 1.
  return floor_div(-P - root_floor - 1, -Q);
}

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

BigInt parse_quotient(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw ParseError("cf", "empty partial quotient");
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw ParseError("cf", "malformed partial quotient");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError("cf", "malformed partial quotient '" + std::string(s) + "'");
    }
  }
  BigInt v(std::string(s.substr(start)));
  return start ? BigInt(-v) : v;
}

std::vector<BigInt> parse_list(std::string_view s) {
  std::vector<BigInt> out;
  if (s.find_first_not_of(' ') == std::string_view::npos) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(parse_quotient(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Value of the continued fraction [a0; a1, ..., an-1, tail] as a matrix in tail.
Moebius convergent_matrix(const std::vector<BigInt>& quotients) {
  Moebius m = Moebius::identity();
  for (const auto& a : quotients) m = m * Moebius{a, 1, 1, 0};
  return m;
}

QuadraticNumber apply(const Moebius& m, const QuadraticNumber& x) {
  QuadraticNumber num = QuadraticNumber::rational(m.a) * x + QuadraticNumber::rational(m.b);
  QuadraticNumber den = QuadraticNumber::rational(m.c) * x + QuadraticNumber::rational(m.d);
  return num / den;
}

}  // namespace

std::string ContinuedFraction::to_string() const {
  std::string out = "cf:[";
  out += preperiod.empty() ? std::string("?") : preperiod.front().str();
  out += ';';
  std::vector<BigInt> rest(preperiod.begin() + (preperiod.empty() ? 0 : 1), preperiod.end());
  out += join(rest);
  if (!rest.empty()) out += ',';
  out += '(' + join(period) + ")]";
  return out;
}

ContinuedFraction cf_expand(const QuadraticIrrational& x, std::size_t max_steps) {
  // x = (p r + q r sqrt d)/r^2 = (P + sqrt D)/Q with Q | D - P^2.
  const BigInt& p = x.p();
  const BigInt& q = x.q();
  const BigInt& r = x.r();
  const BigInt D = q * q * r * r * x.d();
  BigInt P = p * r;
  BigInt Q = r * r;
  if (q < 0) {  // r > 0 in canonical form
    P = -P;
    Q = -Q;
  }
  const BigInt root = isqrt(D);

  std::vector<BigInt> quotients;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    if (i >= 1) {
      auto [it, inserted] = seen.emplace(std::make_pair(P, Q), i);
      if (!inserted) {
        ContinuedFraction cf;
        cf.preperiod.assign(quotients.begin(), quotients.begin() + it->second);
        cf.period.assign(quotients.begin() + it->second, quotients.end());
        return cf;
      }
    }
    BigInt a = complete_quotient_floor(P, root, Q);
    quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  throw BudgetExceeded("cf_expand: no period within " + std::to_string(max_steps) + " steps");
}

QuadraticIrrational cf_value(const ContinuedFraction& raw) {
  ContinuedFraction cf = canonical_form(raw);
  // The purely periodic tail y satisfies y = M(y), i.e. c y^2 + (d - a) y - b = 0,
  // and is the root > 1.
  Moebius m = convergent_matrix(cf.period);
  BigInt disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  QuadraticNumber tail(m.a - m.d, 1, disc, 2 * m.c);
  return QuadraticIrrational::from_value(apply(convergent_matrix(cf.preperiod), tail));
}

std::vector<BigInt> least_rotation(const std::vector<BigInt>& block) {
  std::vector<BigInt> best = block;
  std::vector<BigInt> rot = block;
  for (std::size_t i = 1; i < block.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

bool cf_tail_equivalent(const ContinuedFraction& a, const ContinuedFraction& b) {
  ContinuedFraction ca = canonical_form(a);
  ContinuedFraction cb = canonical_form(b);
  if (ca.period.size() != cb.period.size()) return false;
  return least_rotation(ca.period) == least_rotation(cb.period);
}

ContinuedFraction canonical_form(ContinuedFraction cf) {
  if (cf.preperiod.empty()) throw Error("continued fraction without a0");
  if (cf.period.empty()) throw Error("continued fraction with empty period");
  for (std::size_t i = 1; i < cf.preperiod.size(); ++i) {
    if (cf.preperiod[i] < 1) throw Error("partial quotient a" + std::to_string(i) + " < 1");
  }
  for (const auto& v : cf.period) {
    if (v < 1) throw Error("periodic partial quotient < 1");
  }
  const std::size_t n = cf.period.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len) continue;
    bool periodic = true;
    for (std::size_t i = len; i < n && periodic; ++i) periodic = cf.period[i] == cf.period[i - len];
    if (periodic) {
      cf.period.resize(len);
      break;
    }
  }
  while (cf.preperiod.size() > 1 && cf.preperiod.back() == cf.period.back()) {
    std::rotate(cf.period.rbegin(), cf.period.rbegin() + 1, cf.period.rend());
    cf.preperiod.pop_back();
  }
  return cf;
}

ContinuedFraction parse_cf(std::string_view text) {
  constexpr std::string_view head = "cf:[";
  if (text.substr(0, head.size()) != head || text.empty() || text.back() != ']') {
    throw ParseError("cf", "expected 'cf:[a0;a1,...,(p1,...,pk)]', got '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(head.size(), text.size() - head.size() - 1);
  auto semi = body.find(';');
  if (semi == std::string_view::npos) throw ParseError("cf", "missing ';' after a0");
  auto open = body.find('(', semi);
  auto close = body.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      body.find_first_not_of(' ', close + 1) != std::string_view::npos) {
    throw ParseError("cf", "missing parenthesised period at the end");
  }
  ContinuedFraction cf;
  cf.preperiod.push_back(parse_quotient(body.substr(0, semi)));
  std::string_view mid = body.substr(semi + 1, open - semi - 1);
  while (!mid.empty() && mid.back() == ' ') mid.remove_suffix(1);
  if (!mid.empty()) {
    if (mid.back() != ',') throw ParseError("cf", "expected ',' before the period");
    mid.remove_suffix(1);
    for (auto& v : parse_list(mid)) cf.preperiod.push_back(std::move(v));
  }
  cf.period = parse_list(body.substr(open + 1, close - open - 1));
  try {
    return canonical_form(std::move(cf));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("cf", e.what());
  }
}

QuadraticIrrational gl2z_apply(const Moebius& m, const QuadraticIrrational& x) {
  BigInt det = m.determinant();
  if (det != 1 && det != -1) {
    throw Error("gl2z_apply: determinant " + det.str() + " is not +-1");
  }
  return QuadraticIrrational::from_value(apply(m, x.value()));
}

}  // namespace sturmian
