#pragma once

// Exact integer arithmetic used by the number-theoretic classifiers:
// primality, perfect powers, factorization with an iteration budget,
// Euler's totient, and the prime-power / two-distinct-primes test.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pcg::numtheory {

using Nat = mpz_class;

/// Pollard-Brent iterations allowed per composite before giving up.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Upper bound (exclusive) for trial division inside factor().
inline constexpr unsigned kTrialDivisionBound = 1U << 14;

Nat nat_from_string(const std::string& decimal);
std::string to_string(const Nat& n);
Nat pow2(unsigned exponent);

/// Miller-Rabin. Deterministic below 3.3e24 (first thirteen primes as
/// witnesses); above that, 64 extra bases drawn from a generator seeded by n.
bool is_prime(const Nat& n);

struct PerfectPower {
  Nat base;
  unsigned exponent = 0;
};

/// Largest k >= 2 with n = b^k, if any.
std::optional<PerfectPower> perfect_power(const Nat& n);

struct PrimeFactor {
  Nat prime;
  unsigned exponent = 0;
};

struct Factorization {
  std::vector<PrimeFactor> factors;  // strictly increasing primes
  Nat cofactor = 1;                  // product of unsplit composites
  bool complete = true;

  Nat product() const;
};

/// Trial division below kTrialDivisionBound, then recursive Pollard-Brent
/// splitting. A composite that survives `budget` iterations is folded into
/// `cofactor` and the result is marked incomplete.
Factorization factor(const Nat& n, std::uint64_t budget = kDefaultBudget);

/// One nontrivial divisor of the odd composite n, or nothing if `budget`
/// iterations pass without a split.
std::optional<Nat> pollard_brent(const Nat& n, std::uint64_t budget);

enum class Niceness { PrimePower, TwoDistinctPrimes, Neither, Unknown };

std::string_view to_string(Niceness tag);

struct NicenessClass {
  Niceness tag = Niceness::Unknown;
  // PrimePower: (first, exponent) = (p, k). TwoDistinctPrimes: first < second.
  Nat first;
  Nat second;
  unsigned exponent = 0;
  // Neither: a nontrivial split n = split.first * split.second in which some
  // part is composite (or, for n = 1, nothing).
  std::optional<std::pair<Nat, Nat>> split;

  std::string describe() const;
};

/// Is n a prime power or a product of two distinct primes? Only the single
/// split needed to decide is computed; Unknown means the budget ran out
/// before any split of a composite n was found.
NicenessClass classify_nice(const Nat& n, std::uint64_t budget = kDefaultBudget);

/// Euler's phi via complete factorization; throws std::domain_error when the
/// factorization is incomplete.
Nat totient(const Nat& n, std::uint64_t budget = kDefaultBudget);

/// Same, for machine integers, by trial division.
std::uint64_t totient_u64(std::uint64_t n);

/// Sorted distinct prime divisors, by trial division.
std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n);

/// Number of prime factors counted with multiplicity.
unsigned big_omega_u64(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

/// Least t >= 1 with base^t = 1 (mod p) for a prime p not dividing base.
std::uint64_t multiplicative_order_mod_prime(std::uint64_t base, std::uint64_t p);

}  // namespace pcg::numtheory
