#include "sturmian/quadratic.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

int sgn(const BigInt& x) { return x.sign(); }

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g = boost::multiprecision::gcd(abs(a), abs(b));
  return boost::multiprecision::gcd(g, abs(c));
}

// Radicand shared by two operands; 0 when both are rational.
const BigInt& common_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational()) return a.d();
  if (a.d() != b.d()) {
    throw Error("quadratic numbers from different fields: sqrt(" + a.d().str() +
                ") vs sqrt(" + b.d().str() + ")");
  }
  return a.d();
}

// floor(q * sqrt(d)) for squarefree d > 1.
BigInt floor_q_sqrt_d(const BigInt& q, const BigInt& d) {
  if (q == 0) return 0;
  BigInt s = isqrt(q * q * d);
  return q > 0 ? s : BigInt(-s - 1);
}

BigInt parse_int(std::string_view text, const char* field) {
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  std::size_t j = text.size();
  while (j > i && text[j - 1] == ' ') --j;
  std::string_view s = text.substr(i, j - i);
  if (s.empty()) throw ParseError(field, "empty integer");
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) throw ParseError(field, "malformed integer '" + std::string(s) + "'");
  for (std::size_t m = k; m < s.size(); ++m) {
    if (s[m] < '0' || s[m] > '9') {
      throw ParseError(field, "malformed integer '" + std::string(s) + "'");
    }
  }
  BigInt v(std::string(s.substr(k)));
  return s[0] == '-' ? BigInt(-v) : v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("division by zero");
  BigInt q = num / den;  // truncates toward zero
  BigInt rem = num - q * den;
  if (rem != 0 && (sgn(rem) != sgn(den))) q -= 1;
  return q;
}

BigInt square_part(const BigInt& n) {
  if (n <= 0) throw Error("square_part of a nonpositive integer");
  BigInt m = n;
  BigInt part = 1;
  for (BigInt f = 2; f * f <= m; ++f) {
    BigInt f2 = f * f;
    while (m % f2 == 0) {
      m /= f2;
      part *= f;
    }
  }
  return part;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  return s * s == n;
}

QuadraticNumber::QuadraticNumber(BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  canonicalize(true);
}

// Operands already share a squarefree radicand; skip the factoring.
QuadraticNumber::QuadraticNumber(SameField, BigInt p, BigInt q, BigInt d, BigInt r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  canonicalize(false);
}

QuadraticNumber QuadraticNumber::rational(BigInt num, BigInt den) {
  return QuadraticNumber(std::move(num), 0, 0, std::move(den));
}

void QuadraticNumber::canonicalize(bool reduce_radicand) {
  if (r_ == 0) throw Error("zero denominator");
  if (q_ != 0 && reduce_radicand) {
    if (d_ <= 0) throw Error("radicand must be positive, got " + d_.str());
    BigInt s = square_part(d_);
    if (s != 1) {
      q_ *= s;
      d_ /= s * s;
    }
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
    }
  }
  if (q_ == 0) d_ = 0;
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = gcd3(p_, q_, r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

int QuadraticNumber::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the larger magnitude wins; equality is impossible.
  BigInt lhs = p_ * p_;
  BigInt rhs = q_ * q_ * d_;
  return lhs > rhs ? sp : sq;
}

BigInt QuadraticNumber::floor() const {
  if (q_ == 0) return floor_div(p_, r_);
  // floor((p + y)/r) = floor((p + floor(y))/r) for integer p and r > 0.
  return floor_div(p_ + floor_q_sqrt_d(q_, d_), r_);
}

BigInt QuadraticNumber::ceil() const { return -(-*this).floor(); }

QuadraticNumber QuadraticNumber::frac() const {
  return *this - QuadraticNumber::rational(floor());
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber c = *this;
  c.q_ = -c.q_;
  return c;
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber c = *this;
  c.p_ = -c.p_;
  c.q_ = -c.q_;
  return c;
}

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  const BigInt& d = common_radicand(a, b);
  if (a.r_ == b.r_) return QuadraticNumber(QuadraticNumber::SameField{}, a.p_ + b.p_, a.q_ + b.q_, d, a.r_);
  return QuadraticNumber(QuadraticNumber::SameField{}, a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, d,
                         a.r_ * b.r_);
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a + (-b);
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  const BigInt& d = common_radicand(a, b);
  return QuadraticNumber(QuadraticNumber::SameField{}, a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d,
                         a.r_ * b.r_);
}

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (b.is_zero()) throw Error("division by zero");
  // b * conj(b) = (p^2 - q^2 d)/r^2 is a nonzero rational.
  BigInt norm = b.p_ * b.p_ - b.q_ * b.q_ * b.d_;
  QuadraticNumber num = a * b.conjugate();
  return QuadraticNumber(QuadraticNumber::SameField{}, num.p_ * b.r_ * b.r_, num.q_ * b.r_ * b.r_, num.d_, num.r_ * norm);
}

std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticNumber::to_string() const {
  if (q_ == 0) return r_ == 1 ? p_.str() : p_.str() + "/" + r_.str();
  return "quad:" + p_.str() + "," + q_.str() + "," + d_.str() + "," + r_.str();
}

double QuadraticNumber::approx() const {
  double v = p_.convert_to<double>();
  if (q_ != 0) v += q_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
  return v / r_.convert_to<double>();
}

std::string QuadraticIrrational::to_string() const { return value_.to_string(); }

QuadraticIrrational QuadraticIrrational::from_value(const QuadraticNumber& v) {
  if (v.is_rational()) throw RationalValueError("rational value " + v.to_string());
  return QuadraticIrrational(v);
}

QuadraticIrrational normalize(const BigInt& p, const BigInt& q, const BigInt& d, const BigInt& r) {
  if (r == 0) throw Error("zero denominator");
  if (d <= 0) throw Error("radicand must be positive, got " + d.str());
  if (q == 0) throw RationalValueError("rational value: q = 0");
  if (is_perfect_square(d)) throw RationalValueError("rational value: d = " + d.str() + " is a perfect square");
  return QuadraticIrrational::from_value(QuadraticNumber(p, q, d, r));
}

Ordering compare_to_rational(const QuadraticIrrational& x, const BigInt& num, const BigInt& den) {
  if (den <= 0) throw Error("compare_to_rational: denominator must be positive");
  const QuadraticNumber& v = x.value();
  // sign of (p + q sqrt d)/r - num/den  =  sign of (p*den - num*r) + q*den*sqrt(d)
  QuadraticNumber diff(v.p() * den - num * v.r(), v.q() * den, v.d(), BigInt(1));
  return diff.sign() < 0 ? Ordering::Less : Ordering::Greater;
}

QuadraticIrrational parse_quad(std::string_view text) {
  constexpr std::string_view prefix = "quad:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw ParseError("quad", "expected 'quad:p,q,d,r', got '" + std::string(text) + "'");
  }
  auto parts = split(text.substr(prefix.size()), ',');
  if (parts.size() != 4) throw ParseError("quad", "expected four integers p,q,d,r");
  BigInt p = parse_int(parts[0], "quad.p");
  BigInt q = parse_int(parts[1], "quad.q");
  BigInt d = parse_int(parts[2], "quad.d");
  BigInt r = parse_int(parts[3], "quad.r");
  if (r == 0) throw ParseError("quad.r", "denominator must be nonzero");
  if (d <= 0) throw ParseError("quad.d", "radicand must be positive");
  return normalize(p, q, d, r);
}

QuadraticNumber parse_number(std::string_view text) {
  if (text.substr(0, 5) == "quad:") {
    auto parts = split(text.substr(5), ',');
    if (parts.size() != 4) throw ParseError("quad", "expected four integers p,q,d,r");
    BigInt q = parse_int(parts[1], "quad.q");
    BigInt d = parse_int(parts[2], "quad.d");
    BigInt r = parse_int(parts[3], "quad.r");
    if (r == 0) throw ParseError("quad.r", "denominator must be nonzero");
    if (q != 0 && d <= 0) throw ParseError("quad.d", "radicand must be positive");
    return QuadraticNumber(parse_int(parts[0], "quad.p"), q, q == 0 ? BigInt(0) : d, r);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return QuadraticNumber::rational(parse_int(text, "number"));
  BigInt den = parse_int(text.substr(slash + 1), "number.den");
  if (den == 0) throw ParseError("number.den", "denominator must be nonzero");
  return QuadraticNumber::rational(parse_int(text.substr(0, slash), "number.num"), den);
}

}  // namespace sturmian
