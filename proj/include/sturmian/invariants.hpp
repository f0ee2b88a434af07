#pragma once

#include <cstdint>
#include <string>

#include "sturmian/quadratic.hpp"

namespace sturmian {

/// alpha = beta or alpha = 1 - beta. Decides two-sided conjugacy of the
/// subshifts, orbit equivalence, and unital order isomorphism of Z + alpha Z.
/// Throws Error if either input lies outside (0, 1).
bool conjugate(const QuadraticIrrational& alpha, const QuadraticIrrational& beta);

/// Same GL(2, Z) orbit, decided by continued fraction tails. Decides flow
/// equivalence of the subshifts and Morita equivalence of their algebras.
bool flow_equivalent(const QuadraticIrrational& alpha, const QuadraticIrrational& beta);

/// Aliases kept for readability at call sites.
inline bool orbit_equivalent(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return conjugate(a, b);
}
inline bool morita_equivalent(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return flow_equivalent(a, b);
}

/// Sign of n + m alpha: -1, 0 or +1.
int k0_sign(const QuadraticIrrational& alpha, const BigInt& n, const BigInt& m);
/// n + m alpha > 0 in the ordered group Z + alpha Z.
inline bool k0_positive(const QuadraticIrrational& alpha, const BigInt& n, const BigInt& m) {
  return k0_sign(alpha, n, m) > 0;
}

struct KTheoryReport {
  std::string k0 = "Z+alphaZ";
  std::string order_unit = "1";
  std::string k1 = "0";
};

KTheoryReport k_theory_report(const QuadraticIrrational& alpha);

struct InvariantReport {
  QuadraticIrrational alpha;
  QuadraticIrrational beta;
  bool conjugate = false;
  bool flow_equivalent = false;
  KTheoryReport k_theory;
};

InvariantReport compare(const QuadraticIrrational& alpha, const QuadraticIrrational& beta);

}  // namespace sturmian
