#include <algorithm>
#include <sstream>

#include "pcg/finite_field.hpp"
#include "pcg/group_spec.hpp"

namespace pcg::groups {

namespace {

// Fixed-width little-endian integer tuples.
Encoding encode_u32(std::initializer_list<std::uint32_t> values) {
  Encoding out;
  out.reserve(values.size() * 4);
  for (std::uint32_t v : values) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
  }
  return out;
}

std::uint32_t decode_u32(const Encoding& e, std::size_t slot) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(e[slot * 4 + static_cast<std::size_t>(i)]);
  return v;
}

class CyclicRep final : public Representation {
 public:
  explicit CyclicRep(std::uint32_t n) : n_(n) {}
  Encoding identity() const override { return encode_u32({0}); }
  std::vector<Encoding> generators() const override {
    if (n_ == 1) return {};
    return {encode_u32({1})};
  }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    return encode_u32({static_cast<std::uint32_t>((std::uint64_t{decode_u32(a, 0)} + decode_u32(b, 0)) % n_)});
  }
  std::string render(const Encoding& a) const override { return "x^" + std::to_string(decode_u32(a, 0)); }

 private:
  std::uint32_t n_;
};

// r^i s^j with s r s = r^-1.
class DihedralRep final : public Representation {
 public:
  explicit DihedralRep(std::uint32_t m) : m_(m) {}
  Encoding identity() const override { return encode_u32({0, 0}); }
  std::vector<Encoding> generators() const override { return {encode_u32({1, 0}), encode_u32({0, 1})}; }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    const std::uint32_t r1 = decode_u32(a, 0), s1 = decode_u32(a, 1);
    const std::uint32_t r2 = decode_u32(b, 0), s2 = decode_u32(b, 1);
    const std::uint32_t r = s1 == 0 ? (r1 + r2) % m_ : (r1 + m_ - r2) % m_;
    return encode_u32({r, s1 ^ s2});
  }
  std::string render(const Encoding& a) const override {
    std::string out = "r^" + std::to_string(decode_u32(a, 0));
    if (decode_u32(a, 1) != 0) out += " s";
    return out;
  }

 private:
  std::uint32_t m_;
};

// Permutations of {0..n-1} as image bytes; the product applies the left
// factor first.
class PermutationRep final : public Representation {
 public:
  PermutationRep(unsigned n, std::vector<std::vector<std::vector<unsigned>>> generator_cycles) : n_(n) {
    for (const auto& cycles : generator_cycles) {
      Encoding perm = identity();
      for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          perm[cycle[i] - 1] = static_cast<char>(cycle[(i + 1) % cycle.size()] - 1);
        }
      }
      gens_.push_back(std::move(perm));
    }
  }
  Encoding identity() const override {
    Encoding out(n_, '\0');
    for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<char>(i);
    return out;
  }
  std::vector<Encoding> generators() const override { return gens_; }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    Encoding out(n_, '\0');
    for (unsigned i = 0; i < n_; ++i) out[i] = b[static_cast<unsigned char>(a[i])];
    return out;
  }
  std::string render(const Encoding& a) const override {
    std::ostringstream out;
    std::vector<bool> seen(n_, false);
    for (unsigned i = 0; i < n_; ++i) {
      if (seen[i] || static_cast<unsigned char>(a[i]) == i) continue;
      out << '(';
      for (unsigned j = i; !seen[j]; j = static_cast<unsigned char>(a[j])) {
        if (j != i) out << ',';
        out << j + 1;
        seen[j] = true;
      }
      out << ')';
    }
    const std::string s = out.str();
    return s.empty() ? "()" : s;
  }

 private:
  unsigned n_;
  std::vector<Encoding> gens_;
};

// Heisenberg group mod 3: (a,b,c) is [[1,a,c],[0,1,b],[0,0,1]].
using Heis = std::array<std::uint8_t, 3>;

Heis heis_mul(const Heis& u, const Heis& v) {
  return {static_cast<std::uint8_t>((u[0] + v[0]) % 3), static_cast<std::uint8_t>((u[1] + v[1]) % 3),
          static_cast<std::uint8_t>((u[2] + v[2] + u[0] * v[1]) % 3)};
}

Heis heis_pow(const Heis& u, unsigned e) {
  Heis out{0, 0, 0};
  for (unsigned i = 0; i < e; ++i) out = heis_mul(out, u);
  return out;
}

Heis heis_inv(const Heis& u) { return heis_pow(u, 2); }

unsigned heis_index(const Heis& u) { return u[0] * 9U + u[1] * 3U + u[2]; }

Heis heis_from_index(unsigned i) {
  return {static_cast<std::uint8_t>(i / 9), static_cast<std::uint8_t>((i / 3) % 3), static_cast<std::uint8_t>(i % 3)};
}

// The endomorphism sending x, y to images X, Y, tabulated on all 27 elements
// through (a,b,c) = x^a y^b z^(c-ab), z = [x,y].
std::array<unsigned, 27> heis_map(const Heis& image_x, const Heis& image_y) {
  const Heis image_z = heis_mul(heis_mul(image_x, image_y), heis_mul(heis_inv(image_x), heis_inv(image_y)));
  std::array<unsigned, 27> out{};
  for (unsigned i = 0; i < 27; ++i) {
    const Heis h = heis_from_index(i);
    const unsigned zexp = (h[2] + 9U - (h[0] * h[1]) % 3U) % 3U;
    const Heis img = heis_mul(heis_mul(heis_pow(image_x, h[0]), heis_pow(image_y, h[1])), heis_pow(image_z, zexp));
    out[i] = heis_index(img);
  }
  return out;
}

std::string render_heis(const Heis& h) {
  std::ostringstream out;
  out << "[[1," << int{h[0]} << ',' << int{h[2]} << "],[0,1," << int{h[1]} << "],[0,0,1]]";
  return out.str();
}

class Heis3Rep final : public Representation {
 public:
  Encoding identity() const override { return Encoding(3, '\0'); }
  std::vector<Encoding> generators() const override { return {Encoding{'\1', '\0', '\0'}, Encoding{'\0', '\1', '\0'}}; }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    const Heis r = heis_mul(unpack(a), unpack(b));
    return Encoding{static_cast<char>(r[0]), static_cast<char>(r[1]), static_cast<char>(r[2])};
  }
  std::string render(const Encoding& a) const override { return render_heis(unpack(a)); }

  static Heis unpack(const Encoding& e) {
    return {static_cast<std::uint8_t>(e[0]), static_cast<std::uint8_t>(e[1]), static_cast<std::uint8_t>(e[2])};
  }
};

// (h, s) in H3 x| C2 with (h1,s1)(h2,s2) = (h1 phi^s1(h2), s1+s2).
class Heis3C2Rep final : public Representation {
 public:
  explicit Heis3C2Rep(const Heis3Involution& inv) : phi_(heis_map(inv.image_x, inv.image_y)) {}
  Encoding identity() const override { return Encoding(4, '\0'); }
  std::vector<Encoding> generators() const override {
    return {Encoding{'\1', '\0', '\0', '\0'}, Encoding{'\0', '\1', '\0', '\0'}, Encoding{'\0', '\0', '\0', '\1'}};
  }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    Heis h2 = Heis3Rep::unpack(b);
    if (a[3] != 0) h2 = heis_from_index(phi_[heis_index(h2)]);
    const Heis r = heis_mul(Heis3Rep::unpack(a), h2);
    return Encoding{static_cast<char>(r[0]), static_cast<char>(r[1]), static_cast<char>(r[2]),
                    static_cast<char>(a[3] ^ b[3])};
  }
  std::string render(const Encoding& a) const override {
    return render_heis(Heis3Rep::unpack(a)) + (a[3] != 0 ? " t" : "");
  }

 private:
  std::array<unsigned, 27> phi_;
};

// n x n matrices over GF(q), entries as 2-byte packed field elements.
// Projective mode scales by the inverse of the first nonzero entry, which
// identifies exactly the scalar multiples inside SL(n,q).
class MatrixRep final : public Representation {
 public:
  MatrixRep(unsigned n, field::FieldCtx ctx, bool projective)
      : n_(n), ctx_(std::move(ctx)), projective_(projective) {
    const std::uint32_t p = ctx_.characteristic();
    std::uint32_t basis = 1;
    for (unsigned d = 0; d < ctx_.degree(); ++d, basis *= p) {
      for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) {
          if (i == j) continue;
          auto m = identity_matrix();
          m[i * n_ + j] = field::FieldElement{basis};
          gens_.push_back(pack(m));
        }
      }
    }
  }
  Encoding identity() const override { return pack(identity_matrix()); }
  std::vector<Encoding> generators() const override { return gens_; }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    const auto ma = unpack(a);
    const auto mb = unpack(b);
    std::vector<field::FieldElement> out(n_ * n_);
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) {
        field::FieldElement acc = ctx_.zero();
        for (unsigned k = 0; k < n_; ++k) acc = ctx_.add(acc, ctx_.mul(ma[i * n_ + k], mb[k * n_ + j]));
        out[i * n_ + j] = acc;
      }
    }
    return pack(out);
  }
  std::string render(const Encoding& a) const override {
    const auto m = unpack(a);
    std::ostringstream out;
    out << '[';
    for (unsigned i = 0; i < n_; ++i) {
      out << (i == 0 ? "[" : ",[");
      for (unsigned j = 0; j < n_; ++j) out << (j == 0 ? "" : ",") << ctx_.render(m[i * n_ + j]);
      out << ']';
    }
    out << ']';
    return out.str();
  }

 private:
  std::vector<field::FieldElement> identity_matrix() const {
    std::vector<field::FieldElement> m(n_ * n_, ctx_.zero());
    for (unsigned i = 0; i < n_; ++i) m[i * n_ + i] = ctx_.one();
    return m;
  }
  Encoding pack(std::vector<field::FieldElement> m) const {
    if (projective_) {
      auto lead = std::find_if(m.begin(), m.end(), [](field::FieldElement e) { return e.packed != 0; });
      const field::FieldElement scale = ctx_.inv(*lead);
      for (auto& e : m) e = ctx_.mul(e, scale);
    }
    Encoding out(2 * m.size(), '\0');
    for (std::size_t i = 0; i < m.size(); ++i) {
      out[2 * i] = static_cast<char>(m[i].packed & 0xFFU);
      out[2 * i + 1] = static_cast<char>(m[i].packed >> 8);
    }
    return out;
  }
  std::vector<field::FieldElement> unpack(const Encoding& e) const {
    std::vector<field::FieldElement> m(n_ * n_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i].packed = static_cast<unsigned char>(e[2 * i]) | (static_cast<std::uint32_t>(static_cast<unsigned char>(e[2 * i + 1])) << 8);
    }
    return m;
  }

  unsigned n_;
  field::FieldCtx ctx_;
  bool projective_;
  std::vector<Encoding> gens_;
};

class DirectProductRep final : public Representation {
 public:
  DirectProductRep(std::shared_ptr<const FiniteGroup> left, std::shared_ptr<const FiniteGroup> right)
      : left_(std::move(left)), right_(std::move(right)) {}
  Encoding identity() const override { return encode_u32({0, 0}); }
  std::vector<Encoding> generators() const override {
    std::vector<Encoding> out;
    for (ElementId g : left_->generator_ids()) out.push_back(encode_u32({g, 0}));
    for (ElementId h : right_->generator_ids()) out.push_back(encode_u32({0, h}));
    return out;
  }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    return encode_u32({left_->mul(decode_u32(a, 0), decode_u32(b, 0)), right_->mul(decode_u32(a, 1), decode_u32(b, 1))});
  }
  std::string render(const Encoding& a) const override {
    return "(" + left_->render(decode_u32(a, 0)) + ", " + right_->render(decode_u32(a, 1)) + ")";
  }

 private:
  std::shared_ptr<const FiniteGroup> left_;
  std::shared_ptr<const FiniteGroup> right_;
};

// a^i b^j in C_p x| C_n with b^-1 a b = a^k; b conjugates a^i to a^(i k^-1).
class SemidirectRep final : public Representation {
 public:
  SemidirectRep(std::uint32_t p, std::uint32_t n, std::uint32_t k) : p_(p), n_(n) {
    std::uint64_t k_inv = 1;
    for (std::uint32_t t = 1; t < p; ++t) {
      if ((std::uint64_t{k % p} * t) % p == 1) k_inv = t;
    }
    twist_.resize(n);
    std::uint64_t cur = 1;
    for (std::uint32_t j = 0; j < n; ++j) {
      twist_[j] = static_cast<std::uint32_t>(cur);
      cur = cur * k_inv % p;
    }
  }
  Encoding identity() const override { return encode_u32({0, 0}); }
  std::vector<Encoding> generators() const override {
    std::vector<Encoding> out;
    if (p_ > 1) out.push_back(encode_u32({1, 0}));
    if (n_ > 1) out.push_back(encode_u32({0, 1}));
    return out;
  }
  Encoding multiply(const Encoding& a, const Encoding& b) const override {
    const std::uint32_t i1 = decode_u32(a, 0), j1 = decode_u32(a, 1);
    const std::uint32_t i2 = decode_u32(b, 0), j2 = decode_u32(b, 1);
    const auto i = static_cast<std::uint32_t>((i1 + std::uint64_t{i2} * twist_[j1]) % p_);
    return encode_u32({i, (j1 + j2) % n_});
  }
  std::string render(const Encoding& a) const override {
    return "a^" + std::to_string(decode_u32(a, 0)) + " b^" + std::to_string(decode_u32(a, 1));
  }

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<std::uint32_t> twist_;
};

std::shared_ptr<const Representation> make_representation(const GroupSpec& spec, std::size_t cap) {
  auto u32 = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  switch (spec.kind) {
    case SpecKind::Cyclic:
      return std::make_shared<CyclicRep>(u32(spec.params[0]));
    case SpecKind::Dihedral:
      return std::make_shared<DihedralRep>(u32(spec.params[0]));
    case SpecKind::Sym: {
      const auto n = static_cast<unsigned>(spec.params[0]);
      std::vector<std::vector<std::vector<unsigned>>> gens;
      if (n >= 2) {
        std::vector<unsigned> cycle(n);
        for (unsigned i = 0; i < n; ++i) cycle[i] = i + 1;
        gens.push_back({{1, 2}});
        gens.push_back({cycle});
      }
      return std::make_shared<PermutationRep>(n, std::move(gens));
    }
    case SpecKind::Alt: {
      const auto n = static_cast<unsigned>(spec.params[0]);
      std::vector<std::vector<std::vector<unsigned>>> gens;
      for (unsigned k = 3; k <= n; ++k) gens.push_back({{1, 2, k}});
      return std::make_shared<PermutationRep>(n, std::move(gens));
    }
    case SpecKind::M11:
      return std::make_shared<PermutationRep>(
          11, std::vector<std::vector<std::vector<unsigned>>>{{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
                                                              {{3, 7, 11, 8}, {4, 10, 5, 6}}});
    case SpecKind::Heis3:
      return std::make_shared<Heis3Rep>();
    case SpecKind::Heis3C2:
      return std::make_shared<Heis3C2Rep>(heis3_involutions().at(spec.params[0]));
    case SpecKind::Psl2:
    case SpecKind::Psl3:
    case SpecKind::Sl3: {
      const auto [p, k] = prime_power_parts(spec.params[0]);
      const unsigned dim = spec.kind == SpecKind::Psl2 ? 2 : 3;
      return std::make_shared<MatrixRep>(dim, field::FieldCtx::build(p, k), spec.kind != SpecKind::Sl3);
    }
    case SpecKind::DirectProduct: {
      auto left = std::make_shared<const FiniteGroup>(build_group(spec.factors[0], cap));
      auto right = std::make_shared<const FiniteGroup>(build_group(spec.factors[1], cap));
      return std::make_shared<DirectProductRep>(std::move(left), std::move(right));
    }
    case SpecKind::Semidirect:
      return std::make_shared<SemidirectRep>(u32(spec.params[0]), u32(spec.params[1]), u32(spec.params[2]));
  }
  throw std::logic_error("unhandled group constructor");
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, std::size_t cap) {
  const numtheory::Nat predicted = expected_order(spec);
  if (predicted > numtheory::Nat(std::to_string(cap))) {
    throw CapExceeded(spec.to_string() + " has order " + predicted.get_str() + ", above the cap of " +
                          std::to_string(cap),
                      cap);
  }
  FiniteGroup g = FiniteGroup::enumerate(make_representation(spec, cap), spec.to_string(), cap);
  if (numtheory::Nat(std::to_string(g.order())) != predicted) {
    throw std::logic_error("enumerated " + std::to_string(g.order()) + " elements for " + spec.to_string() +
                           ", expected " + predicted.get_str());
  }
  return g;
}

const std::vector<Heis3Involution>& heis3_involutions() {
  static const std::vector<Heis3Involution> all = [] {
    std::vector<Heis3Involution> out;
    for (unsigned xi = 0; xi < 27; ++xi) {
      for (unsigned yi = 0; yi < 27; ++yi) {
        const Heis X = heis_from_index(xi);
        const Heis Y = heis_from_index(yi);
        const auto phi = heis_map(X, Y);
        std::array<bool, 27> hit{};
        bool ok = true;
        for (unsigned i = 0; i < 27 && ok; ++i) {
          ok = !hit[phi[i]];
          hit[phi[i]] = true;
        }
        for (unsigned i = 0; i < 27 && ok; ++i) {
          for (unsigned j = 0; j < 27 && ok; ++j) {
            const unsigned prod = heis_index(heis_mul(heis_from_index(i), heis_from_index(j)));
            ok = phi[prod] == heis_index(heis_mul(heis_from_index(phi[i]), heis_from_index(phi[j])));
          }
        }
        if (!ok) continue;
        bool identity = true;
        bool involutive = true;
        for (unsigned i = 0; i < 27; ++i) {
          identity = identity && phi[i] == i;
          involutive = involutive && phi[phi[i]] == i;
        }
        if (involutive && !identity) out.push_back({X, Y});
      }
    }
    return out;
  }();
  return all;
}

}  // namespace pcg::groups
