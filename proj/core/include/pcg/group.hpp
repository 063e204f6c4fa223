#pragma once

// Finite groups enumerated by closure from generators. Elements are
// canonical byte strings supplied by a Representation; the enumerated group
// refers to them by dense index, with the identity at index 0.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pcg::groups {

/// Canonical element encoding: byte-equal iff the elements are equal.
using Encoding = std::string;
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 100'000;
inline constexpr std::size_t kDenseTableLimit = 2000;

class Representation {
 public:
  virtual ~Representation() = default;
  virtual Encoding identity() const = 0;
  virtual std::vector<Encoding> generators() const = 0;
  virtual Encoding multiply(const Encoding& a, const Encoding& b) const = 0;
  virtual std::string render(const Encoding& a) const = 0;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string what, std::size_t cap)
      : std::runtime_error(std::move(what)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct CayleyData;

class FiniteGroup {
 public:
  /// Breadth-first closure of the representation's generators. Throws
  /// CapExceeded as soon as more than `cap` elements are found.
  static FiniteGroup enumerate(std::shared_ptr<const Representation> rep, std::string label,
                               std::size_t cap = kDefaultCap);

  const std::string& label() const { return label_; }
  std::size_t order() const { return elements_.size(); }
  ElementId identity() const { return 0; }

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, std::uint64_t e) const;
  /// Least t >= 1 with a^t = identity.
  std::uint64_t element_order(ElementId a) const { return orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const { return orders_; }

  /// a^0, a^1, ..., a^(o(a)-1).
  std::vector<ElementId> powers(ElementId a) const;
  /// Index set of <a>, ascending.
  std::vector<ElementId> cyclic_subgroup(ElementId a) const;

  ElementId conjugate(ElementId x, ElementId by) const;  // by * x * by^-1
  std::vector<ElementId> conjugacy_class(ElementId x) const;
  bool are_conjugate(ElementId x, ElementId y) const;
  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  const Encoding& encoding(ElementId a) const { return elements_[a]; }
  std::optional<ElementId> find(const Encoding& e) const;
  std::string render(ElementId a) const { return rep_->render(elements_[a]); }
  const Representation& representation() const { return *rep_; }
  /// Indices of the representation's generators.
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  bool has_dense_table() const { return !table_.empty(); }

 private:
  FiniteGroup() = default;
  ElementId lookup(const Encoding& e) const;

  std::shared_ptr<const Representation> rep_;
  std::string label_;
  std::vector<Encoding> elements_;
  std::unordered_map<Encoding, ElementId> index_;
  std::vector<ElementId> generator_ids_;
  std::shared_ptr<const CayleyData> cayley_;
  std::vector<ElementId> table_;  // row-major, only when order <= kDenseTableLimit
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
};

// Structural queries used by the classifiers.

/// True iff elements of coprime order always commute. Computed as: every
/// Sylow subgroup is normal, i.e. for each prime p the number of p-elements
/// equals the p-part of |G|.
bool is_nilpotent(const FiniteGroup& g);

/// Pairwise commutation oracle for is_nilpotent, quadratic in |G|.
bool is_nilpotent_by_commutation(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

struct MaximalCyclicSubgroups {
  std::vector<std::vector<ElementId>> subgroups;  // each ascending; sorted by first generator
  bool pairwise_trivial = true;
};

MaximalCyclicSubgroups maximal_cyclic_subgroups(const FiniteGroup& g);

}  // namespace pcg::groups
