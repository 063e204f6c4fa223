#pragma once

// GF(p^k) in a polynomial basis over the least monic irreducible modulus.
// Elements are packed as base-p integers: coefficient i is digit i.

#include <cstdint>
#include <string>
#include <vector>

namespace pcg::field {

struct FieldElement {
  std::uint32_t packed = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

class FieldCtx {
 public:
  /// Throws std::invalid_argument unless p is prime, 1 <= k <= 8 and p^k <= 2^16.
  static FieldCtx build(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Monic modulus, constant term first; length k + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t packed) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  /// The class of the indeterminate x.
  FieldElement x() const;
  /// A generator of the multiplicative group.
  FieldElement primitive() const { return {exp_[1]}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// Least t >= 1 with a^t = 1, by descending through the prime divisors of
  /// q - 1. Throws std::domain_error for zero.
  std::uint64_t multiplicative_order(FieldElement a) const;

  std::string render(FieldElement a) const;

 private:
  FieldCtx() = default;
  // Schoolbook product reduced mod the modulus; used only to seed the tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

/// Exhaustive-trial irreducibility test for a monic polynomial (constant
/// term first) over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace pcg::field
