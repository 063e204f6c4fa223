#include "pcg/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pcg::numtheory {

namespace {

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j < kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test to base a; n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const Nat& n, const Nat& n_minus_1, const Nat& d, unsigned s,
                           const Nat& a) {
  Nat x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

const Nat& deterministic_bound() {
  static const Nat bound("3317044064679887385961981");
  return bound;
}

}  // namespace

Nat nat_from_string(const std::string& decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal natural number: '" + decimal + "'");
  }
  return Nat(decimal, 10);
}

std::string to_string(const Nat& n) { return n.get_str(10); }

Nat pow2(unsigned exponent) {
  Nat out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

bool is_prime(const Nat& n) {
  if (n < 2) return false;
  for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  const Nat n_minus_1 = n - 1;
  Nat d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t()) != 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (!strong_probable_prime(n, n_minus_1, d, s, Nat(a))) return false;
  }
  if (n < deterministic_bound()) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  const Nat span = n - 3;
  for (int round = 0; round < 64; ++round) {
    const Nat a = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

std::optional<PerfectPower> perfect_power(const Nat& n) {
  if (n < 4) return std::nullopt;
  const auto bits = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
  Nat root;
  for (unsigned k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) {
      return PerfectPower{root, k};
    }
  }
  return std::nullopt;
}

std::optional<Nat> pollard_brent(const Nat& n, std::uint64_t budget) {
  if (n < 4) return std::nullopt;
  if (mpz_even_p(n.get_mpz_t()) != 0) return Nat(2);

  constexpr std::uint64_t kBatch = 128;
  std::uint64_t spent = 0;
  Nat x, y, ys, q, g, diff;

  for (unsigned long c = 1; spent < budget; ++c) {
    y = 2;
    q = 1;
    g = 1;
    std::uint64_t r = 1;
    auto step = [&](Nat& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      spent += r;
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t span = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < span; ++i) {
          step(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += span;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

Nat Factorization::product() const {
  Nat out = cofactor;
  Nat term;
  for (const auto& f : factors) {
    mpz_pow_ui(term.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out *= term;
  }
  return out;
}

Factorization factor(const Nat& n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive");
  std::map<Nat, unsigned> counts;
  Factorization result;
  Nat rest = n;
  for (unsigned p : small_primes()) {
    if (rest == 1) break;
    if (Nat(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++counts[Nat(p)];
    }
  }

  std::vector<Nat> work;
  if (rest > 1) work.push_back(rest);
  while (!work.empty()) {
    Nat m = std::move(work.back());
    work.pop_back();
    if (is_prime(m)) {
      ++counts[m];
    } else if (auto pp = perfect_power(m)) {
      for (unsigned i = 0; i < pp->exponent; ++i) work.push_back(pp->base);
    } else if (auto d = pollard_brent(m, budget)) {
      work.push_back(m / *d);
      work.push_back(*d);
    } else {
      result.cofactor *= m;
      result.complete = false;
    }
  }
  for (auto& [p, e] : counts) result.factors.push_back({p, e});
  return result;
}

std::string_view to_string(Niceness tag) {
  switch (tag) {
    case Niceness::PrimePower: return "PrimePower";
    case Niceness::TwoDistinctPrimes: return "TwoDistinctPrimes";
    case Niceness::Neither: return "Neither";
    case Niceness::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string NicenessClass::describe() const {
  std::ostringstream out;
  out << to_string(tag);
  switch (tag) {
    case Niceness::PrimePower:
      out << '(' << first.get_str() << ',' << exponent << ')';
      break;
    case Niceness::TwoDistinctPrimes:
      out << '(' << first.get_str() << ',' << second.get_str() << ')';
      break;
    case Niceness::Neither:
      if (split) out << '[' << split->first.get_str() << '*' << split->second.get_str() << ']';
      break;
    case Niceness::Unknown:
      break;
  }
  return out.str();
}

NicenessClass classify_nice(const Nat& n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("classify_nice: n must be positive");
  NicenessClass out;
  if (n == 1) {
    out.tag = Niceness::Neither;
    return out;
  }
  if (is_prime(n)) {
    out.tag = Niceness::PrimePower;
    out.first = n;
    out.exponent = 1;
    return out;
  }
  if (auto pp = perfect_power(n)) {
    if (is_prime(pp->base)) {
      out.tag = Niceness::PrimePower;
      out.first = pp->base;
      out.exponent = pp->exponent;
    } else {
      // A composite, non-power base has two distinct primes, each squared in n.
      out.tag = Niceness::Neither;
      Nat rest = n / pp->base;
      out.split = std::make_pair(pp->base, rest);
    }
    return out;
  }

  auto decide = [&](Nat a, Nat b) {
    if (a > b) std::swap(a, b);
    if (is_prime(a) && is_prime(b)) {
      // a == b would make n a perfect square, excluded above.
      out.tag = Niceness::TwoDistinctPrimes;
      out.first = a;
      out.second = b;
    } else {
      out.tag = Niceness::Neither;
      out.split = std::make_pair(a, b);
    }
  };

  for (unsigned p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      decide(Nat(p), n / p);
      return out;
    }
  }
  if (auto d = pollard_brent(n, budget)) {
    decide(*d, n / *d);
    return out;
  }
  out.tag = Niceness::Unknown;
  return out;
}

Nat totient(const Nat& n, std::uint64_t budget) {
  const Factorization f = factor(n, budget);
  if (!f.complete) throw std::domain_error("totient: factorization of " + n.get_str() + " incomplete");
  Nat out = 1;
  Nat term;
  for (const auto& pf : f.factors) {
    mpz_pow_ui(term.get_mpz_t(), pf.prime.get_mpz_t(), pf.exponent - 1);
    out *= term * (pf.prime - 1);
  }
  return out;
}

std::uint64_t totient_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient of zero");
  std::uint64_t out = n;
  for (std::uint64_t p : prime_divisors_u64(n)) out = out / p * (p - 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned big_omega_u64(std::uint64_t n) {
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return count + (n > 1 ? 1 : 0);
}

bool is_prime_u64(std::uint64_t n) { return is_prime(Nat(std::to_string(n))); }

std::uint64_t multiplicative_order_mod_prime(std::uint64_t base, std::uint64_t p) {
  const Nat modulus(std::to_string(p));
  const Nat b(std::to_string(base % p));
  if (b == 0) throw std::invalid_argument("multiplicative order of a multiple of the modulus");
  Nat order = modulus - 1;
  const Factorization f = factor(order);
  if (!f.complete) throw std::domain_error("multiplicative order: cannot factor p-1");
  Nat x;
  for (const auto& pf : f.factors) {
    for (unsigned i = 0; i < pf.exponent; ++i) {
      const Nat candidate = order / pf.prime;
      mpz_powm(x.get_mpz_t(), b.get_mpz_t(), candidate.get_mpz_t(), modulus.get_mpz_t());
      if (x != 1) break;
      order = candidate;
    }
  }
  return std::stoull(order.get_str());
}

}  // namespace pcg::numtheory
