#include "gbs/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "gbs/error.hpp"

namespace gbs {

namespace {

constexpr unsigned long kTrialLimit = 1u << 20;

// Deterministic for n < 3.3e24 with these bases; GMP's probabilistic test
// (with its own BPSW) takes over above that.
bool miller_rabin(const Integer& n) {
  static const std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  Integer d = n - 1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++r;
  }
  for (unsigned long a : bases) {
    if (n == a) return true;
    Integer x;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n is composite and odd.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = abs_value(Integer(x - y));
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Integer(n / d), out);
}

}  // namespace

PrimeSet PrimeSet::of(std::vector<Integer> primes) {
  for (const auto& p : primes) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) throw Error(ErrorCode::EmptyInput, "prime set must not be empty");
  return PrimeSet(std::move(primes));
}

PrimeSet PrimeSet::parse(std::string_view text) {
  if (text == "all") return all();
  std::vector<Integer> primes;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    Integer p;
    if (item.empty() || p.set_str(item, 10) != 0 || p <= 0) {
      throw Error(ErrorCode::UsageError, "bad prime \"" + item + "\" in --rho");
    }
    primes.push_back(p);
  }
  return of(std::move(primes));
}

bool PrimeSet::contains(const Integer& p) const {
  if (!primes_) return true;
  return std::binary_search(primes_->begin(), primes_->end(), p);
}

const std::vector<Integer>& PrimeSet::primes() const {
  static const std::vector<Integer> none;
  return primes_ ? *primes_ : none;
}

std::string PrimeSet::to_string() const {
  if (!primes_) return "all";
  std::string out;
  for (const auto& p : *primes_) {
    if (!out.empty()) out += ',';
    out += p.get_str();
  }
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const Integer deterministic_bound("3317044064679887385961981");
  if (n < deterministic_bound) return miller_rabin(n);
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> factorize(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factorize 0");
  Integer rest = abs_value(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < kTrialLimit && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.emplace_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    std::vector<Integer> big;
    factor_into(rest, big);
    std::sort(big.begin(), big.end());
    out.insert(out.end(), big.begin(), big.end());
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool is_rho_number(const Integer& n, const PrimeSet& rho) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "0 is not a rho-number candidate");
  if (rho.is_all()) return true;
  Integer rest = abs_value(n);
  for (const auto& p : rho.primes()) {
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
  }
  return rest == 1;
}

Rational rational_lcm(const std::vector<Rational>& values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "rational_lcm of an empty list");
  Integer num = 0, den = 0;
  for (Rational v : values) {
    v.canonicalize();
    if (v <= 0) throw Error(ErrorCode::PreconditionViolated, "rational_lcm needs positive values");
    if (num == 0) {
      num = v.get_num();
      den = v.get_den();
    } else {
      mpz_lcm(num.get_mpz_t(), num.get_mpz_t(), v.get_num_mpz_t());
      mpz_gcd(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  return make_rational(num, den);
}

Integer multiplicative_order(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
  Integer residue = n % p;
  if (residue < 0) residue += p;
  if (residue == 0) {
    throw Error(ErrorCode::DividesModulus, p.get_str() + " divides " + n.get_str());
  }
  // the order divides p - 1: strip prime factors of p - 1 while n^k stays 1
  Integer order = p - 1;
  for (const auto& q : prime_divisors(order)) {
    while (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t())) {
      Integer candidate = order / q;
      Integer x;
      mpz_powm(x.get_mpz_t(), residue.get_mpz_t(), candidate.get_mpz_t(), p.get_mpz_t());
      if (x != 1) break;
      order = candidate;
    }
  }
  return order;
}

}  // namespace gbs
