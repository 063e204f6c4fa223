#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pcg/numtheory.hpp"

namespace nt = pcg::numtheory;
using nt::Nat;
using nt::Niceness;

namespace {

Nat mersenne(unsigned k) { return nt::pow2(k) - 1; }

}  // namespace

TEST(IsPrime, FrozenValues) {
  EXPECT_TRUE(nt::is_prime(Nat(2)));
  EXPECT_FALSE(nt::is_prime(Nat(561)));
  EXPECT_TRUE(nt::is_prime(mersenne(31)));
  EXPECT_FALSE(nt::is_prime(Nat(0)));
  EXPECT_FALSE(nt::is_prime(Nat(1)));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(nt::is_prime(Nat(std::to_string(n))), pcg::testing::trial_division_prime(n)) << n;
  }
}

TEST(IsPrime, StrongPseudoprimesAndCarmichaelsRejected) {
  // Strong pseudoprimes to the first several prime bases.
  for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321",
                        "3825123056546413051", "318665857834031151167461", "3317044064679887385961981"}) {
    EXPECT_FALSE(nt::is_prime(nt::nat_from_string(s))) << s;
  }
  for (unsigned c : {561U, 1105U, 1729U, 2465U, 2821U, 6601U, 8911U}) EXPECT_FALSE(nt::is_prime(Nat(c)));
}

TEST(IsPrime, LargeMersenneNumbers) {
  for (unsigned k : {61U, 89U, 107U, 127U, 521U}) EXPECT_TRUE(nt::is_prime(mersenne(k))) << k;
  for (unsigned k : {67U, 101U, 137U, 149U}) EXPECT_FALSE(nt::is_prime(mersenne(k))) << k;
  EXPECT_FALSE(nt::is_prime(mersenne(127) * mersenne(61)));
}

TEST(PerfectPower, FrozenValues) {
  auto eight = nt::perfect_power(Nat(8));
  ASSERT_TRUE(eight);
  EXPECT_EQ(eight->base, 2);
  EXPECT_EQ(eight->exponent, 3U);
  auto thirty_six = nt::perfect_power(Nat(36));
  ASSERT_TRUE(thirty_six);
  EXPECT_EQ(thirty_six->base, 6);
  EXPECT_EQ(thirty_six->exponent, 2U);
  EXPECT_FALSE(nt::perfect_power(Nat(12)));
  EXPECT_EQ(nt::perfect_power(nt::pow2(64))->exponent, 64U);
}

TEST(PerfectPower, RandomPowersRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Nat b(static_cast<unsigned long>(2 + rng() % 5000));
    const unsigned k = 2 + static_cast<unsigned>(rng() % 6);
    Nat n;
    mpz_pow_ui(n.get_mpz_t(), b.get_mpz_t(), k);
    const auto pp = nt::perfect_power(n);
    ASSERT_TRUE(pp);
    Nat back;
    mpz_pow_ui(back.get_mpz_t(), pp->base.get_mpz_t(), pp->exponent);
    EXPECT_EQ(back, n);
    EXPECT_EQ(pp->exponent % k, 0U);
  }
}

TEST(PerfectPower, AbsentMeansNoIntegerRoot) {
  for (unsigned long n = 2; n < 20000; ++n) {
    const auto pp = nt::perfect_power(Nat(n));
    bool expected = false;
    for (unsigned long b = 2; b * b <= n && !expected; ++b) {
      for (unsigned long v = b * b; v <= n; v *= b) {
        if (v == n) expected = true;
      }
    }
    ASSERT_EQ(pp.has_value(), expected) << n;
  }
}

TEST(Factor, FrozenValues) {
  const auto one = nt::factor(Nat(1));
  EXPECT_TRUE(one.factors.empty());
  EXPECT_TRUE(one.complete);

  const auto m101 = nt::factor(mersenne(101));
  ASSERT_TRUE(m101.complete);
  ASSERT_EQ(m101.factors.size(), 2U);
  EXPECT_EQ(m101.factors[0].prime, nt::nat_from_string("7432339208719"));
  EXPECT_EQ(m101.factors[1].prime, nt::nat_from_string("341117531003194129"));
  EXPECT_EQ(m101.factors[0].exponent, 1U);

  const auto sixty = nt::factor(Nat(60));
  ASSERT_EQ(sixty.factors.size(), 3U);
  EXPECT_EQ(sixty.factors[0].prime, 2);
  EXPECT_EQ(sixty.factors[0].exponent, 2U);
  EXPECT_EQ(sixty.factors[1].prime, 3);
  EXPECT_EQ(sixty.factors[2].prime, 5);
}

TEST(Factor, CompleteFactorizationsReassemble) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Nat n = 1;
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < parts; ++j) n *= Nat(static_cast<unsigned long>(2 + rng() % 4000000000ULL));
    const auto f = nt::factor(n);
    ASSERT_TRUE(f.complete) << n.get_str();
    EXPECT_EQ(f.product(), n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      EXPECT_TRUE(nt::is_prime(f.factors[k].prime));
      if (k > 0) {
        EXPECT_LT(f.factors[k - 1].prime, f.factors[k].prime);
      }
    }
  }
}

TEST(Factor, BudgetExhaustionIsRecordedNotThrown) {
  // Two 31-bit primes: rho needs tens of thousands of steps.
  const Nat n = Nat(2147483647UL) * Nat(2147483629UL) * 12;
  const auto f = nt::factor(n, 10);
  EXPECT_FALSE(f.complete);
  EXPECT_EQ(f.product(), n);
  EXPECT_EQ(f.cofactor, Nat(2147483647UL) * Nat(2147483629UL));
}

TEST(ClassifyNice, FrozenValues) {
  auto c8 = nt::classify_nice(Nat(8));
  EXPECT_EQ(c8.tag, Niceness::PrimePower);
  EXPECT_EQ(c8.first, 2);
  EXPECT_EQ(c8.exponent, 3U);
  auto c15 = nt::classify_nice(Nat(15));
  EXPECT_EQ(c15.tag, Niceness::TwoDistinctPrimes);
  EXPECT_EQ(c15.first, 3);
  EXPECT_EQ(c15.second, 5);
  EXPECT_EQ(nt::classify_nice(Nat(12)).tag, Niceness::Neither);
  EXPECT_EQ(nt::classify_nice(mersenne(61)).tag, Niceness::PrimePower);
  EXPECT_EQ(nt::classify_nice(Nat(1)).tag, Niceness::Neither);
  EXPECT_EQ(nt::classify_nice(Nat(63)).describe(), "Neither[3*21]");
  EXPECT_EQ(c15.describe(), "TwoDistinctPrimes(3,5)");
}

TEST(ClassifyNice, AgreesWithTrialDivisionBelow200000) {
  for (std::uint64_t n = 1; n < 200000; ++n) {
    ASSERT_EQ(nt::classify_nice(Nat(std::to_string(n))).tag, pcg::testing::trial_division_nice(n)) << n;
  }
}

TEST(ClassifyNice, ProductsOfSmallPrimes) {
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p <= 1000; ++p) {
    if (pcg::testing::trial_division_prime(p)) primes.push_back(p);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const Nat p(primes[i]);
      const Nat q(primes[j]);
      const auto c = nt::classify_nice(p * q);
      ASSERT_EQ(c.tag, Niceness::TwoDistinctPrimes);
      EXPECT_EQ(c.first, p);
      EXPECT_EQ(c.second, q);
      ASSERT_EQ(nt::classify_nice(p * p * q).tag, Niceness::Neither);
    }
  }
}

TEST(ClassifyNice, UnknownOnlyWhenBudgetRunsOut) {
  const Nat n = Nat(2147483647UL) * Nat(2147483629UL);
  EXPECT_EQ(nt::classify_nice(n, 5).tag, Niceness::Unknown);
  EXPECT_EQ(nt::classify_nice(n).tag, Niceness::TwoDistinctPrimes);
  // A small factor decides Neither without any rho work.
  EXPECT_EQ(nt::classify_nice(n * 3, 1).tag, Niceness::Neither);
}

TEST(ClassifyNice, LargeDerivedNumbers) {
  // 2^64 + 1 = 274177 * 67280421310721.
  const auto c = nt::classify_nice(nt::pow2(64) + 1);
  EXPECT_EQ(c.tag, Niceness::TwoDistinctPrimes);
  EXPECT_EQ(c.first, 274177);
  // 2^101 - 1 is a product of two primes.
  EXPECT_EQ(nt::classify_nice(mersenne(101)).tag, Niceness::TwoDistinctPrimes);
  // 2^6 - 1 = 63.
  EXPECT_EQ(nt::classify_nice(mersenne(6)).tag, Niceness::Neither);
}

TEST(Totient, FrozenValues) {
  EXPECT_EQ(nt::totient(Nat(1)), 1);
  EXPECT_EQ(nt::totient(Nat(6)), 2);
  EXPECT_EQ(nt::totient(Nat(30)), 8);
  EXPECT_EQ(nt::totient_u64(30), 8U);
}

TEST(Totient, MatchesGcdCount) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
    ASSERT_EQ(nt::totient_u64(n), count) << n;
    ASSERT_EQ(nt::totient(Nat(std::to_string(n))), Nat(std::to_string(count))) << n;
  }
}

TEST(Totient, IncompleteFactorizationFails) {
  const Nat n = Nat(2147483647UL) * Nat(2147483629UL);
  EXPECT_THROW(nt::totient(n, 5), std::domain_error);
}

TEST(SmallHelpers, DivisorsOmegaAndOrders) {
  EXPECT_EQ(nt::prime_divisors_u64(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(nt::big_omega_u64(360), 6U);
  EXPECT_EQ(nt::big_omega_u64(1), 0U);
  EXPECT_EQ(nt::multiplicative_order_mod_prime(3, 7), 6U);
  EXPECT_EQ(nt::multiplicative_order_mod_prime(2, 7), 3U);
  EXPECT_EQ(nt::multiplicative_order_mod_prime(1, 13), 1U);
  for (std::uint64_t p : {5ULL, 101ULL, 65537ULL}) {
    for (std::uint64_t b = 1; b < 50; ++b) {
      if (b % p == 0) continue;
      const std::uint64_t t = nt::multiplicative_order_mod_prime(b, p);
      std::uint64_t x = 1;
      for (std::uint64_t i = 0; i < t; ++i) x = x * b % p;
      EXPECT_EQ(x, 1U);
      EXPECT_EQ((p - 1) % t, 0U);
    }
  }
}
