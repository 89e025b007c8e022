#pragma once

// Exact integer and rational helpers: factorization, prime-set membership of
// divisors, lcm of rationals and multiplicative orders.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/numeric.hpp"

namespace gbs {

// Either every prime, or an explicit finite set of primes (sorted, unique).
class PrimeSet {
 public:
  static PrimeSet all() { return PrimeSet(); }
  static PrimeSet of(std::vector<Integer> primes);

  // "all" or a comma separated list such as "2,3,7".
  static PrimeSet parse(std::string_view text);

  bool is_all() const { return !primes_; }
  bool contains(const Integer& p) const;
  const std::vector<Integer>& primes() const;
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<Integer> primes) : primes_(std::move(primes)) {}

  std::optional<std::vector<Integer>> primes_;
};

bool is_prime(const Integer& n);

// Prime factors of |n| with multiplicity, ascending. Empty for +-1.
std::vector<Integer> factorize(const Integer& n);

// Distinct prime divisors of |n|, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

bool is_rho_number(const Integer& n, const PrimeSet& rho);

// Least positive rational that is an integer multiple of every value.
Rational rational_lcm(const std::vector<Rational>& values);

// Least k >= 1 with n^k = 1 (mod p).
Integer multiplicative_order(const Integer& n, const Integer& p);

}  // namespace gbs
