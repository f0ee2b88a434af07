#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/quadratic.hpp"

namespace sturmian {

/// Eventually periodic continued fraction [a0; a1, ..., am, (p1, ..., pk)].
///
/// `preperiod` always holds a0 followed by the shortest possible run
/// a1..am; `period` is the minimal repeating block as it occurs right
/// after the preperiod. With that convention structural equality is
/// value equality.
struct ContinuedFraction {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  /// "cf:[a0;a1,...,am,(p1,...,pk)]".
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Expansion by Lagrange's complete-quotient recurrence.
/// Throws BudgetExceeded if no period is found within max_steps quotients.
ContinuedFraction cf_expand(const QuadraticIrrational& x, std::size_t max_steps = 100000);

/// Folds the expansion back into its exact value.
QuadraticIrrational cf_value(const ContinuedFraction& cf);

/// True iff the two quotient streams share a common tail.
bool cf_tail_equivalent(const ContinuedFraction& a, const ContinuedFraction& b);

/// Lexicographically least rotation of a block; the tail-equivalence key.
std::vector<BigInt> least_rotation(const std::vector<BigInt>& block);

/// Shortest preperiod and minimal period for the same quotient stream.
/// Throws Error if a quotient after a0 is < 1 or the period is empty.
ContinuedFraction canonical_form(ContinuedFraction cf);

/// Parses "cf:[a0;a1,...,(p1,...,pk)]" and returns the canonical form.
ContinuedFraction parse_cf(std::string_view text);

}  // namespace sturmian
