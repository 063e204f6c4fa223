#include "pcg/finite_field.hpp"

#include <sstream>
#include <stdexcept>

#include "pcg/numtheory.hpp"

namespace pcg::field {

namespace {

// Remainder of f modulo a monic g over GF(p); both constant term first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !f.empty()) {
    const std::uint32_t lead = f.back();
    if (lead != 0) {
      const std::size_t shift = f.size() - 1 - dg;
      for (std::size_t i = 0; i <= dg; ++i) {
        f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
      }
    }
    f.pop_back();
  }
  return f;
}

std::vector<std::uint32_t> unpack(std::uint32_t packed, std::uint32_t p, unsigned len) {
  std::vector<std::uint32_t> out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = packed % p;
    packed /= p;
  }
  return out;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw std::invalid_argument("is_irreducible: expected a monic polynomial of degree >= 1");
  }
  const unsigned n = static_cast<unsigned>(monic.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    std::uint32_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      auto g = unpack(low, p, d);
      g.push_back(1);
      const auto r = poly_mod(monic, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FieldCtx FieldCtx::build(std::uint32_t p, unsigned k) {
  if (p < 2 || !numtheory::is_prime_u64(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1 || k > 8) throw std::invalid_argument("field degree must lie in [1, 8]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q > (1U << 16)) throw std::invalid_argument("field size exceeds 2^16");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.k_ = k;
  ctx.q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    ctx.modulus_ = {0, 1};
  } else {
    for (std::uint32_t low = 0; low < ctx.q_; ++low) {
      auto candidate = unpack(low, p, k);
      candidate.push_back(1);
      if (candidate[0] == 0) continue;
      if (is_irreducible(candidate, p)) {
        ctx.modulus_ = std::move(candidate);
        break;
      }
    }
  }

  const std::uint32_t units = ctx.q_ - 1;
  ctx.log_.assign(ctx.q_, 0);
  ctx.exp_.assign(2 * static_cast<std::size_t>(units) + 1, 1);
  if (units == 1) return ctx;  // GF(2)
  for (std::uint32_t g = 2; g < ctx.q_; ++g) {
    std::uint32_t cur = 1;
    std::uint32_t t = 0;
    do {
      ctx.exp_[t] = cur;
      cur = ctx.slow_mul(cur, g);
      ++t;
    } while (cur != 1 && t <= units);
    if (t == units) break;
  }
  for (std::uint32_t i = 0; i < units; ++i) {
    ctx.log_[ctx.exp_[i]] = i;
    ctx.exp_[i + units] = ctx.exp_[i];
  }
  return ctx;
}

std::uint32_t FieldCtx::slow_mul(std::uint32_t a, std::uint32_t b) const {
  const auto ca = unpack(a, p_, k_);
  const auto cb = unpack(b, p_, k_);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  const auto r = poly_mod(std::move(prod), modulus_, p_);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

FieldElement FieldCtx::element(std::uint32_t packed) const {
  if (packed >= q_) throw std::out_of_range("field element out of range");
  return {packed};
}

FieldElement FieldCtx::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for field degree");
  std::uint32_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return {out};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement a) const { return unpack(a.packed, p_, k_); }

FieldElement FieldCtx::x() const { return {k_ > 1 ? p_ : 0}; }

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  if (p_ == 2) return {a.packed ^ b.packed};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a.packed % p_ + b.packed % p_) % p_) * scale;
    a.packed /= p_;
    b.packed /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldCtx::neg(FieldElement a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a.packed % p_) % p_) * scale;
    a.packed /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  if (a.packed == 0 || b.packed == 0) return {0};
  return {exp_[log_[a.packed] + log_[b.packed]]};
}

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.packed == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
  const std::uint32_t units = q_ - 1;
  return {exp_[(units - log_[a.packed]) % units]};
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.packed == 0) return zero();
  const std::uint64_t units = q_ - 1;
  return {exp_[(static_cast<std::uint64_t>(log_[a.packed]) * (e % units)) % units]};
}

std::uint64_t FieldCtx::multiplicative_order(FieldElement a) const {
  if (a.packed == 0) throw std::domain_error("multiplicative order of zero");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t r : numtheory::prime_divisors_u64(order)) {
    while (order % r == 0 && pow(a, order / r) == one()) order /= r;
  }
  return order;
}

std::string FieldCtx::render(FieldElement a) const {
  if (k_ == 1) return std::to_string(a.packed);
  const auto c = coeffs(a);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || c[i] != 1) out << c[i];
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace pcg::field
