#include "pcg/group.hpp"

#include <algorithm>
#include <numeric>

#include "pcg/numtheory.hpp"

namespace pcg::groups {

namespace {
constexpr ElementId kNone = static_cast<ElementId>(-1);
}

// Right multiplication by generators is recorded during the closure as
// `right[a * ngens + k]`, together with a shortest word for every element:
// element b = parent[b] * generator[via[b]]. Products without a dense table
// replay the word of the right-hand factor.
struct CayleyData {
  std::vector<ElementId> right;
  std::vector<ElementId> parent;
  std::vector<std::uint32_t> via;
  std::size_t ngens = 0;
};

FiniteGroup FiniteGroup::enumerate(std::shared_ptr<const Representation> rep, std::string label,
                                   std::size_t cap) {
  FiniteGroup g;
  g.rep_ = std::move(rep);
  g.label_ = std::move(label);

  const auto gens = g.rep_->generators();
  auto cayley = std::make_shared<CayleyData>();
  cayley->ngens = gens.size();

  g.elements_.push_back(g.rep_->identity());
  g.index_.emplace(g.elements_.front(), 0);
  cayley->parent.push_back(kNone);
  cayley->via.push_back(0);

  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Encoding product = g.rep_->multiply(g.elements_[i], gens[k]);
      auto [it, inserted] = g.index_.try_emplace(std::move(product), static_cast<ElementId>(g.elements_.size()));
      if (inserted) {
        if (g.elements_.size() >= cap) {
          throw CapExceeded("group '" + g.label_ + "' has more than " + std::to_string(cap) + " elements", cap);
        }
        g.elements_.push_back(it->first);
        cayley->parent.push_back(static_cast<ElementId>(i));
        cayley->via.push_back(static_cast<std::uint32_t>(k));
      }
      cayley->right.push_back(it->second);
    }
  }
  for (const auto& e : gens) g.generator_ids_.push_back(g.index_.at(e));

  const std::size_t n = g.elements_.size();
  const std::size_t ng = cayley->ngens;
  if (n <= kDenseTableLimit) {
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      g.table_[a * n] = static_cast<ElementId>(a);
      for (std::size_t b = 1; b < n; ++b) {
        const ElementId left = g.table_[a * n + cayley->parent[b]];
        g.table_[a * n + b] = cayley->right[left * ng + cayley->via[b]];
      }
    }
  }
  g.cayley_ = cayley;

  g.orders_.assign(n, 0);
  g.inverse_.assign(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    ElementId prev = 0;
    ElementId cur = a;
    std::uint64_t t = 1;
    while (cur != 0) {
      prev = cur;
      cur = g.mul(cur, a);
      ++t;
    }
    g.orders_[a] = t;
    g.inverse_[a] = prev;
  }
  return g;
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n + b];
  const auto& c = *cayley_;
  std::uint32_t word[64];
  std::size_t len = 0;
  ElementId cur = b;
  while (cur != 0 && len < 64) {
    word[len++] = c.via[cur];
    cur = c.parent[cur];
  }
  ElementId out = cur == 0 ? a : mul(a, cur);
  for (std::size_t i = len; i-- > 0;) out = c.right[static_cast<std::size_t>(out) * c.ngens + word[i]];
  return out;
}

ElementId FiniteGroup::pow(ElementId a, std::uint64_t e) const {
  e %= orders_[a];
  ElementId result = 0;
  ElementId base = a;
  while (e != 0) {
    if ((e & 1U) != 0) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<ElementId> FiniteGroup::powers(ElementId a) const {
  std::vector<ElementId> out;
  out.reserve(orders_[a]);
  ElementId cur = 0;
  for (std::uint64_t t = 0; t < orders_[a]; ++t) {
    out.push_back(cur);
    cur = mul(cur, a);
  }
  return out;
}

std::vector<ElementId> FiniteGroup::cyclic_subgroup(ElementId a) const {
  auto out = powers(a);
  std::sort(out.begin(), out.end());
  return out;
}

ElementId FiniteGroup::conjugate(ElementId x, ElementId by) const { return mul(mul(by, x), inverse_[by]); }

std::vector<ElementId> FiniteGroup::conjugacy_class(ElementId x) const {
  std::vector<bool> seen(order(), false);
  std::vector<ElementId> out;
  for (ElementId t = 0; t < order(); ++t) {
    const ElementId y = conjugate(x, t);
    if (!seen[y]) {
      seen[y] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::are_conjugate(ElementId x, ElementId y) const {
  if (orders_[x] != orders_[y]) return false;
  const auto cls = conjugacy_class(x);
  return std::binary_search(cls.begin(), cls.end(), y);
}

std::optional<ElementId> FiniteGroup::find(const Encoding& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::lookup(const Encoding& e) const { return index_.at(e); }

bool is_nilpotent(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  for (std::uint64_t p : numtheory::prime_divisors_u64(n)) {
    std::uint64_t part = 1;
    for (std::uint64_t m = n; m % p == 0; m /= p) part *= p;
    std::uint64_t p_elements = 0;
    for (std::uint64_t o : g.element_orders()) {
      if (part % o == 0) ++p_elements;
    }
    if (p_elements != part) return false;
  }
  return true;
}

bool is_nilpotent_by_commutation(const FiniteGroup& g) {
  const auto& orders = g.element_orders();
  for (ElementId a = 0; a < g.order(); ++a) {
    for (ElementId b = a + 1; b < g.order(); ++b) {
      if (std::gcd(orders[a], orders[b]) == 1 && !g.commute(a, b)) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup& g) {
  const auto& orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

MaximalCyclicSubgroups maximal_cyclic_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  MaximalCyclicSubgroups out;
  if (n == 1) {
    out.subgroups.push_back({0});
    return out;
  }
  std::vector<bool> proper_power(n, false);
  proper_power[0] = true;
  for (ElementId y = 1; y < n; ++y) {
    const auto ps = g.powers(y);
    const std::uint64_t o = ps.size();
    for (std::uint64_t t = 2; t < o; ++t) {
      if (std::gcd(t, o) != 1) proper_power[ps[t]] = true;
    }
  }
  std::vector<bool> taken(n, false);
  std::vector<unsigned> cover(n, 0);
  for (ElementId x = 1; x < n; ++x) {
    if (proper_power[x] || taken[x]) continue;
    const auto ps = g.powers(x);
    const std::uint64_t o = ps.size();
    for (std::uint64_t t = 1; t < o; ++t) {
      if (std::gcd(t, o) == 1) taken[ps[t]] = true;
      if (++cover[ps[t]] > 1) out.pairwise_trivial = false;
    }
    auto sub = ps;
    std::sort(sub.begin(), sub.end());
    out.subgroups.push_back(std::move(sub));
  }
  return out;
}

}  // namespace pcg::groups
