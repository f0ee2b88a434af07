#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

/// Floor division for any sign combination; den must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);

/// Largest m with m*m dividing n, n > 0.
BigInt square_part(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// An element (p + q*sqrt(d))/r of the real quadratic field Q(sqrt d).
///
/// Values are kept canonical: r > 0, gcd(p, q, r) = 1, d squarefree.
/// Rational values have q = 0 and d = 0, so they combine with elements
/// of any field. Mixing two irrational values with different radicands
/// throws.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(BigInt p, BigInt q, BigInt d, BigInt r);

  static QuadraticNumber rational(BigInt num, BigInt den = 1);
  static QuadraticNumber integer(std::int64_t n) { return rational(BigInt(n)); }

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }
  const BigInt& d() const noexcept { return d_; }
  const BigInt& r() const noexcept { return r_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0 && q_ == 0; }

  /// Exact sign: -1, 0 or +1.
  int sign() const;

  /// Largest integer <= value.
  BigInt floor() const;
  /// Smallest integer >= value.
  BigInt ceil() const;
  /// value - floor(value), in [0, 1).
  QuadraticNumber frac() const;

  QuadraticNumber conjugate() const;
  QuadraticNumber operator-() const;

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);

  QuadraticNumber& operator+=(const QuadraticNumber& b) { return *this = *this + b; }
  QuadraticNumber& operator-=(const QuadraticNumber& b) { return *this = *this - b; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) = default;
  friend std::strong_ordering operator<=>(const QuadraticNumber& a, const QuadraticNumber& b);

  /// Rational values print as "num/den" (or "num"); others as "quad:p,q,d,r".
  std::string to_string() const;

  /// Approximate value, for diagnostics only.
  double approx() const;

 private:
  struct SameField {};
  QuadraticNumber(SameField, BigInt p, BigInt q, BigInt d, BigInt r);
  void canonicalize(bool reduce_radicand);

  BigInt p_ = 0;
  BigInt q_ = 0;
  BigInt d_ = 0;
  BigInt r_ = 1;
};

enum class Ordering { Less, Greater };

/// A canonical quadratic irrational (p + q*sqrt(d))/r with q != 0.
class QuadraticIrrational {
 public:
  const QuadraticNumber& value() const noexcept { return value_; }
  const BigInt& p() const noexcept { return value_.p(); }
  const BigInt& q() const noexcept { return value_.q(); }
  const BigInt& d() const noexcept { return value_.d(); }
  const BigInt& r() const noexcept { return value_.r(); }

  /// "quad:p,q,d,r" in canonical form.
  std::string to_string() const;

  /// Wraps an irrational field element; throws RationalValueError otherwise.
  static QuadraticIrrational from_value(const QuadraticNumber& v);

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;
  friend std::strong_ordering operator<=>(const QuadraticIrrational& a,
                                          const QuadraticIrrational& b) {
    return a.value_ <=> b.value_;
  }

 private:
  explicit QuadraticIrrational(QuadraticNumber v) : value_(std::move(v)) {}
  QuadraticNumber value_;
};

/// Canonical form of (p + q*sqrt(d))/r.
///
/// Throws RationalValueError when q = 0 or d is a perfect square, and
/// Error when r = 0 or d <= 0.
QuadraticIrrational normalize(const BigInt& p, const BigInt& q, const BigInt& d, const BigInt& r);

/// Exact sign of x - num/den using integer arithmetic only. den must be > 0.
Ordering compare_to_rational(const QuadraticIrrational& x, const BigInt& num, const BigInt& den);

/// Parses "quad:p,q,d,r".
QuadraticIrrational parse_quad(std::string_view text);

/// Parses "num", "num/den" or "quad:p,q,d,r" into a field element.
QuadraticNumber parse_number(std::string_view text);

}  // namespace sturmian
