#pragma once

// Deciding whether a group's power graph is a cograph, two ways: directly
// from the graph (brute route) and through structural and number-theoretic
// criteria (criterion route).

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcg/cograph.hpp"
#include "pcg/group.hpp"
#include "pcg/group_spec.hpp"
#include "pcg/numtheory.hpp"

namespace pcg::criteria {

using groups::ElementId;
using groups::FiniteGroup;
using numtheory::Nat;

enum class VerdictTag { IsCograph, NotCograph, Unknown };
enum class Route { Brute, Criterion };

std::string_view to_string(VerdictTag tag);
std::string_view to_string(Route route);

/// Elements g, h of orders p*r and p*q, p != q primes, with g^r = h^q and,
/// when q == r, g^p outside <h^p>. Then (g, g^r, h, h^p) is an induced P4.
struct PairWitness {
  ElementId g = 0;
  ElementId h = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// A cotree whose leaf v stands for group element `elements[v]`.
struct CotreeEvidence {
  cograph::Cotree tree;
  std::vector<ElementId> elements;
};

/// An induced P4 of the power graph, as group elements.
struct ElementP4 {
  std::array<ElementId, 4> elements{};
};

/// A derived number and its classification.
struct NumberEvidence {
  std::string label;
  Nat value;
  numtheory::NicenessClass cls;
};

using Evidence = std::variant<std::monostate, CotreeEvidence, ElementP4, PairWitness, NumberEvidence, std::string>;

struct Verdict {
  VerdictTag tag = VerdictTag::Unknown;
  Route route = Route::Criterion;
  std::string rule;  // what decided it, in words
  Evidence evidence;
  std::vector<NumberEvidence> numbers;  // every number the rule looked at
};

// ---- brute route ----

/// Decomposes the power graph restricted to elements of order prime or a
/// product of two primes.
Verdict pcg_bruteforce(const FiniteGroup& g);

/// Independent check that an ElementP4 is an induced path of the power graph.
bool verify_element_p4(const FiniteGroup& g, const ElementP4& p4);

// ---- element-level criteria ----

bool is_eppo(const FiniteGroup& g);

struct EppoReport {
  bool eppo = false;
  bool gk_edgeless = false;
  bool power_equals_enhanced = false;
  bool pcg_confirmed = false;  // brute route agreed, when the conditions hold
};

/// Evaluates the three EPPO conditions; throws std::logic_error if they
/// disagree, or if they hold and the brute route finds a P4.
EppoReport eppo_equivalences(const FiniteGroup& g);

/// First pair under ascending g, then ascending h.
std::optional<PairWitness> minimal_pair_search(const FiniteGroup& g);

/// Re-checks orders, primality, g^r = h^q and the subgroup condition.
bool verify_pair_witness(const FiniteGroup& g, const PairWitness& w);

/// Elements a (order 4) and b (order 6) with a^2 = b^3, b taken up to
/// conjugacy; the pair is returned as a PairWitness with p = r = 2, q = 3.
std::optional<PairWitness> four_six_pair(const FiniteGroup& g);
bool four_six_test(const FiniteGroup& g);

/// Nilpotent groups: PCG iff |G| is a prime power or G is cyclic of order pq.
/// Throws std::invalid_argument for a non-nilpotent group.
Verdict classify_nilpotent(const FiniteGroup& g);

/// Criterion chain for an enumerated group: nilpotent, EPPO, 4-6 test,
/// pairwise-trivial maximal cyclic subgroups, then the minimal-pair search.
Verdict classify_group(const FiniteGroup& g, std::uint64_t budget = numtheory::kDefaultBudget);

// ---- parameter-level criteria ----

/// Families: cyclic[n], dihedral[m], sym[n], alt[n], sd[p,n,k], psl2[q],
/// psl2-char2[d], suzuki[e], psl3[q], and the simple-group table rows
/// (see simple_verdict_table()). Throws std::invalid_argument on an unknown
/// family or bad parameters.
Verdict classify_family(std::string_view family, std::span<const Nat> params,
                        std::uint64_t budget = numtheory::kDefaultBudget);

/// Criterion route for a parsed spec; builds small component groups only
/// where the structure of a factor matters (direct products) or no
/// parameter-level rule exists. May throw groups::CapExceeded.
Verdict classify_spec(const groups::GroupSpec& spec, std::uint64_t budget = numtheory::kDefaultBudget,
                      std::size_t cap = groups::kDefaultCap);

struct SweepRow {
  Nat param;
  Verdict verdict;
  std::string note;  // e.g. "not simple"
};

/// classify_family over param = first..last (for psl2, over prime powers
/// q >= 4 in range). Rows come back in parameter order; `workers` threads
/// share the range (0 = hardware concurrency).
std::vector<SweepRow> family_sweep(std::string_view family, std::uint64_t first, std::uint64_t last,
                                   std::uint64_t budget = numtheory::kDefaultBudget, unsigned workers = 0);

struct SimpleTableRow {
  std::string family;  // key accepted by classify_family
  std::string groups;  // human-readable name
  std::string reason;
};

/// Simple groups of Lie type and sporadic groups whose power graph is never
/// a cograph, with the argument that rules each family out.
const std::vector<SimpleTableRow>& simple_verdict_table();

}  // namespace pcg::criteria
