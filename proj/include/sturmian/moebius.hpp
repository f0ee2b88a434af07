#pragma once

#include "sturmian/quadratic.hpp"

namespace sturmian {

/// Integer matrix ((a, b), (c, d)) acting by x -> (a x + b)/(c x + d).
struct Moebius {
  BigInt a = 1;
  BigInt b = 0;
  BigInt c = 0;
  BigInt d = 1;

  BigInt determinant() const { return a * d - c * b; }

  static Moebius identity() { return {}; }

  friend Moebius operator*(const Moebius& m, const Moebius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }

  friend bool operator==(const Moebius&, const Moebius&) = default;
};

/// Image of x under M. Throws Error unless det M = +-1.
QuadraticIrrational gl2z_apply(const Moebius& m, const QuadraticIrrational& x);

}  // namespace sturmian
