#include "sturmian/invariants.hpp"

#include "sturmian/continued_fraction.hpp"
#include "sturmian/error.hpp"

namespace sturmian {

namespace {

void require_unit_interval(const QuadraticIrrational& x, const char* name) {
  if (x.value().sign() <= 0 || x.value() >= QuadraticNumber::integer(1)) {
    throw Error(std::string(name) + " = " + x.to_string() + " is outside (0, 1)");
  }
}

}  // namespace

bool conjugate(const QuadraticIrrational& alpha, const QuadraticIrrational& beta) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(beta, "beta");
  return alpha == beta || alpha.value() == QuadraticNumber::integer(1) - beta.value();
}

bool flow_equivalent(const QuadraticIrrational& alpha, const QuadraticIrrational& beta) {
  return cf_tail_equivalent(cf_expand(alpha), cf_expand(beta));
}

int k0_sign(const QuadraticIrrational& alpha, const BigInt& n, const BigInt& m) {
  if (m == 0) return n > 0 ? 1 : (n < 0 ? -1 : 0);
  // n + m alpha > 0  <=>  alpha > -n/m for m > 0, alpha < -n/m for m < 0.
  BigInt num = -n, den = m;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  bool above = compare_to_rational(alpha, num, den) == Ordering::Greater;
  return (above == (m > 0)) ? 1 : -1;
}

KTheoryReport k_theory_report(const QuadraticIrrational&) { return {}; }

InvariantReport compare(const QuadraticIrrational& alpha, const QuadraticIrrational& beta) {
  return InvariantReport{alpha, beta, conjugate(alpha, beta), flow_equivalent(alpha, beta),
                         k_theory_report(alpha)};
}

}  // namespace sturmian
