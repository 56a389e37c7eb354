#pragma once

#include "slowsum/rational.hpp"

namespace slowsum {

/// Bernoulli number B_j for any j >= 0 with the B_1 = -1/2 convention.
/// Values are memoized process-wide; safe to call concurrently.
Rational bernoulli(int j);

/// B_m for even m >= 0. Throws std::domain_error for odd or negative m.
Rational bernoulli_even(int m);

/// Centered Euler-Maclaurin coefficient (2^{2s-1} - 1) B_{2s} / (2s)!.
/// Throws std::domain_error for s < 1.
Rational beta(int s);

/// 2^{2s-1} times the sum over all compositions of s of the products of
/// -1/(4^j (2j+1)!) over the parts j. Exponential in s; intended as a
/// cross-check of beta() for small s. Equals -beta(s).
Rational beta_via_compositions(int s);

}  // namespace slowsum
