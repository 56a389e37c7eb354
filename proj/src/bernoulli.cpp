#include "slowsum/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace slowsum {
namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

// Extends the table through index j using sum_{i=0}^{m} C(m+1, i) B_i = 0.
void extend_bernoulli_table(int j) {
  for (int m = static_cast<int>(bernoulli_table.size()); m <= j; ++m) {
    if (m > 1 && m % 2 == 1) {
      bernoulli_table.emplace_back(0);
      continue;
    }
    Rational acc;
    for (int i = 0; i < m; ++i) {
      if (bernoulli_table[i].is_zero()) continue;
      acc += Rational(binomial(m + 1, i), 1) * bernoulli_table[i];
    }
    bernoulli_table.push_back(-acc / Rational(m + 1));
  }
}

// Sum over compositions of `remaining` of the product of part weights.
Rational composition_sum(int remaining, const std::vector<Rational>& weight) {
  if (remaining == 0) return Rational(1);
  Rational acc;
  for (int part = 1; part <= remaining; ++part) {
    acc += weight[part] * composition_sum(remaining - part, weight);
  }
  return acc;
}

}  // namespace

Rational bernoulli(int j) {
  if (j < 0) {
    throw std::domain_error("bernoulli: negative index " + std::to_string(j));
  }
  std::lock_guard lock(bernoulli_mutex);
  extend_bernoulli_table(j);
  return bernoulli_table[j];
}

Rational bernoulli_even(int m) {
  if (m < 0 || m % 2 != 0) {
    throw std::domain_error("bernoulli_even: index must be even and non-negative, got " +
                            std::to_string(m));
  }
  return bernoulli(m);
}

Rational beta(int s) {
  if (s < 1) {
    throw std::domain_error("beta: order must be >= 1, got " + std::to_string(s));
  }
  const mpz_class two_pow = mpz_class(1) << (2 * s - 1);
  return Rational(two_pow - 1, 1) * bernoulli_even(2 * s) / Rational(factorial(2 * s), 1);
}

Rational beta_via_compositions(int s) {
  if (s < 1) {
    throw std::domain_error("beta_via_compositions: order must be >= 1, got " +
                            std::to_string(s));
  }
  // weight[j] = -1 / (4^j (2j+1)!)
  std::vector<Rational> weight(s + 1);
  for (int j = 1; j <= s; ++j) {
    const mpz_class four_pow = mpz_class(1) << (2 * j);
    weight[j] = Rational(mpz_class(-1), four_pow * factorial(2 * j + 1));
  }
  const mpz_class scale = mpz_class(1) << (2 * s - 1);
  return Rational(scale, 1) * composition_sum(s, weight);
}

}  // namespace slowsum
