#include "pcg/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "pcg/power_graph.hpp"

namespace pcg::criteria {

using numtheory::Niceness;
using numtheory::NicenessClass;

namespace {

constexpr std::uint64_t kQuickBudget = 20'000;

std::string str(const Nat& n) { return numtheory::to_string(n); }

std::uint64_t to_u64(const Nat& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument(std::string(what) + " out of range");
  return n.get_ui();
}

Verdict make(VerdictTag tag, std::string rule, Evidence ev = {}) {
  Verdict v;
  v.tag = tag;
  v.route = Route::Criterion;
  v.rule = std::move(rule);
  v.evidence = ev.index() == 0 ? Evidence(v.rule) : std::move(ev);
  return v;
}

// Cheap pass over every number first, so that one easy non-nice number
// settles the verdict without spending the full budget on the others.
std::vector<NumberEvidence> classify_numbers(const std::vector<std::pair<std::string, Nat>>& items,
                                             std::uint64_t budget) {
  std::vector<NumberEvidence> out;
  bool decided = false;
  for (const auto& [label, value] : items) {
    out.push_back({label, value, numtheory::classify_nice(value, std::min(budget, kQuickBudget))});
    if (out.back().cls.tag == Niceness::Neither) decided = true;
  }
  if (decided || budget <= kQuickBudget) return out;
  for (auto& ne : out) {
    if (ne.cls.tag != Niceness::Unknown) continue;
    ne.cls = numtheory::classify_nice(ne.value, budget);
    if (ne.cls.tag == Niceness::Neither) break;
  }
  return out;
}

// Every number nice: IsCograph; any Neither: NotCograph; otherwise Unknown.
Verdict from_numbers(std::vector<NumberEvidence> nums, const std::string& rule) {
  for (const auto& ne : nums) {
    if (ne.cls.tag == Niceness::Neither) {
      Verdict v = make(VerdictTag::NotCograph, rule + "; " + ne.label + " = " + str(ne.value) + " is not nice", ne);
      v.numbers = std::move(nums);
      return v;
    }
  }
  for (const auto& ne : nums) {
    if (ne.cls.tag == Niceness::Unknown) {
      Verdict v = make(VerdictTag::Unknown,
                       rule + "; factorization budget exhausted on " + ne.label + " = " + str(ne.value));
      v.numbers = std::move(nums);
      return v;
    }
  }
  Verdict v = make(VerdictTag::IsCograph, rule + "; all nice");
  v.numbers = std::move(nums);
  return v;
}

bool is_prime_power(const Nat& q) {
  if (q < 2) return false;
  if (numtheory::is_prime(q)) return true;
  auto pp = numtheory::perfect_power(q);
  return pp && numtheory::is_prime(pp->base);
}

// Element orders and powers recomputed by plain multiplication, so the
// witness checks below do not trust the cached tables.
std::uint64_t slow_order(const FiniteGroup& g, ElementId x) {
  std::uint64_t t = 1;
  for (ElementId y = x; y != g.identity(); y = g.mul(y, x)) ++t;
  return t;
}

ElementId slow_pow(const FiniteGroup& g, ElementId x, std::uint64_t e) {
  ElementId y = g.identity();
  for (std::uint64_t i = 0; i < e; ++i) y = g.mul(y, x);
  return y;
}

bool slow_in_cyclic(const FiniteGroup& g, ElementId y, ElementId x) {
  ElementId z = g.identity();
  do {
    if (z == y) return true;
    z = g.mul(z, x);
  } while (z != g.identity());
  return false;
}

bool slow_adjacent(const FiniteGroup& g, ElementId x, ElementId y) {
  return slow_in_cyclic(g, y, x) || slow_in_cyclic(g, x, y);
}

}  // namespace

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::IsCograph: return "IsCograph";
    case VerdictTag::NotCograph: return "NotCograph";
    case VerdictTag::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Route route) { return route == Route::Brute ? "brute" : "criterion"; }

// ---- brute route ----

Verdict pcg_bruteforce(const FiniteGroup& g) {
  Verdict v;
  v.route = Route::Brute;
  const graphs::Graph p2 = powergraph::p2_restriction(g);
  if (p2.vertex_count() == 0) {
    v.tag = VerdictTag::IsCograph;
    v.rule = "trivial group";
    v.evidence = std::string("trivial group");
    return v;
  }
  auto d = cograph::decompose(p2);
  if (auto* tree = std::get_if<cograph::Cotree>(&d)) {
    v.tag = VerdictTag::IsCograph;
    v.rule = "cotree of the power graph on elements of order p or pq";
    CotreeEvidence ev{std::move(*tree), {}};
    for (auto l : p2.labels) ev.elements.push_back(static_cast<ElementId>(l));
    v.evidence = std::move(ev);
  } else {
    const auto& w = std::get<cograph::P4Witness>(d);
    v.tag = VerdictTag::NotCograph;
    v.rule = "induced P4 in the power graph on elements of order p or pq";
    ElementP4 ev;
    for (std::size_t i = 0; i < 4; ++i) ev.elements[i] = static_cast<ElementId>(p2.labels[w.path[i]]);
    v.evidence = ev;
  }
  return v;
}

bool verify_element_p4(const FiniteGroup& g, const ElementP4& p4) {
  const auto& e = p4.elements;
  for (std::size_t i = 0; i < 4; ++i) {
    if (e[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (e[i] == e[j]) return false;
      if (slow_adjacent(g, e[i], e[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

// ---- element-level criteria ----

bool is_eppo(const FiniteGroup& g) {
  return std::all_of(g.element_orders().begin(), g.element_orders().end(),
                     [](std::uint64_t o) { return numtheory::prime_divisors_u64(o).size() <= 1; });
}

EppoReport eppo_equivalences(const FiniteGroup& g) {
  EppoReport r;
  r.eppo = is_eppo(g);
  r.gk_edgeless = powergraph::derived_graph(g, powergraph::DerivedKind::GruenbergKegel).edge_count() == 0;
  r.power_equals_enhanced =
      powergraph::power_graph(g) == powergraph::derived_graph(g, powergraph::DerivedKind::Enhanced);
  if (r.eppo != r.gk_edgeless || r.eppo != r.power_equals_enhanced) {
    throw std::logic_error("EPPO conditions disagree on " + g.label());
  }
  if (r.eppo) {
    if (pcg_bruteforce(g).tag != VerdictTag::IsCograph) {
      throw std::logic_error("EPPO group " + g.label() + " has a non-cograph power graph");
    }
    r.pcg_confirmed = true;
  }
  return r;
}

std::optional<PairWitness> minimal_pair_search(const FiniteGroup& g) {
  const std::size_t n = g.order();
  // bucket[t]: (h, q) with o(h) = p*q, p = o(t) != q, h^q = t; h ascending.
  std::vector<std::vector<std::pair<ElementId, std::uint64_t>>> bucket(n);
  std::vector<std::vector<std::uint64_t>> splits(n);  // primes s with o(x)/s prime
  for (ElementId x = 1; x < n; ++x) {
    const std::uint64_t o = g.element_order(x);
    if (numtheory::big_omega_u64(o) != 2) continue;
    for (std::uint64_t s : numtheory::prime_divisors_u64(o)) {
      splits[x].push_back(s);
      if (o / s != s) bucket[g.pow(x, s)].emplace_back(x, s);
    }
  }
  for (ElementId x = 1; x < n; ++x) {
    std::optional<PairWitness> best;
    const std::uint64_t o = g.element_order(x);
    for (std::uint64_t r : splits[x]) {
      const std::uint64_t p = o / r;
      const ElementId t = g.pow(x, r);
      for (const auto& [h, q] : bucket[t]) {
        if (best && best->h <= h) break;
        if (q == r) {
          const auto sub = g.cyclic_subgroup(g.pow(h, p));
          if (std::binary_search(sub.begin(), sub.end(), g.pow(x, p))) continue;
        }
        best = PairWitness{x, h, p, q, r};
        break;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

bool verify_pair_witness(const FiniteGroup& g, const PairWitness& w) {
  if (w.g >= g.order() || w.h >= g.order()) return false;
  for (std::uint64_t x : {w.p, w.q, w.r}) {
    if (!numtheory::is_prime_u64(x)) return false;
  }
  if (w.p == w.q) return false;
  if (slow_order(g, w.g) != w.p * w.r || slow_order(g, w.h) != w.p * w.q) return false;
  if (slow_pow(g, w.g, w.r) != slow_pow(g, w.h, w.q)) return false;
  if (w.q == w.r && slow_in_cyclic(g, slow_pow(g, w.g, w.p), slow_pow(g, w.h, w.p))) return false;
  return true;
}

std::optional<PairWitness> four_six_pair(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const ElementId none = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> owner(n, none);  // involution -> an order-4 a with a^2 conjugate to it
  for (ElementId a = 1; a < n; ++a) {
    if (g.element_order(a) != 4) continue;
    const ElementId x = g.mul(a, a);
    if (owner[x] != none) continue;
    for (ElementId y : g.conjugacy_class(x)) {
      if (owner[y] == none) owner[y] = a;
    }
  }
  for (ElementId b = 1; b < n; ++b) {
    if (g.element_order(b) != 6) continue;
    const ElementId y = g.pow(b, 3);
    if (owner[y] == none) continue;
    const ElementId a = owner[y];
    const ElementId x = g.mul(a, a);
    for (ElementId t = 0; t < n; ++t) {
      if (g.conjugate(y, t) == x) return PairWitness{a, g.conjugate(b, t), 2, 3, 2};
    }
  }
  return std::nullopt;
}

bool four_six_test(const FiniteGroup& g) { return four_six_pair(g).has_value(); }

Verdict classify_nilpotent(const FiniteGroup& g) {
  if (!groups::is_nilpotent(g)) throw std::invalid_argument(g.label() + " is not nilpotent");
  const std::uint64_t n = g.order();
  if (n == 1) return make(VerdictTag::IsCograph, "trivial group");
  NumberEvidence ne{"|G|", Nat(std::to_string(n)), numtheory::classify_nice(Nat(std::to_string(n)))};
  Verdict v;
  if (ne.cls.tag == Niceness::PrimePower) {
    v = make(VerdictTag::IsCograph, "nilpotent of prime-power order");
  } else if (ne.cls.tag == Niceness::TwoDistinctPrimes && groups::is_cyclic(g)) {
    v = make(VerdictTag::IsCograph, "cyclic of order pq");
  } else {
    auto w = minimal_pair_search(g);
    std::string rule = "nilpotent, neither of prime-power order nor cyclic of order pq";
    v = w ? make(VerdictTag::NotCograph, rule, *w) : make(VerdictTag::NotCograph, rule);
  }
  v.numbers.push_back(std::move(ne));
  return v;
}

Verdict classify_group(const FiniteGroup& g, std::uint64_t budget) {
  if (g.order() == 1) return make(VerdictTag::IsCograph, "trivial group");
  if (groups::is_nilpotent(g)) return classify_nilpotent(g);
  if (is_eppo(g)) return make(VerdictTag::IsCograph, "EPPO: every element has prime-power order");
  if (auto w = four_six_pair(g)) return make(VerdictTag::NotCograph, "4-6 test", *w);
  const auto mc = groups::maximal_cyclic_subgroups(g);
  if (mc.pairwise_trivial) {
    std::vector<std::uint64_t> orders;
    for (const auto& c : mc.subgroups) orders.push_back(c.size());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    std::vector<std::pair<std::string, Nat>> items;
    for (auto o : orders) items.emplace_back("maximal cyclic order", Nat(std::to_string(o)));
    return from_numbers(classify_numbers(items, budget), "maximal cyclic subgroups meet trivially");
  }
  if (auto w = minimal_pair_search(g)) return make(VerdictTag::NotCograph, "minimal non-PCG element pair", *w);
  return make(VerdictTag::IsCograph, "no minimal non-PCG element pair");
}

// ---- parameter-level criteria ----

namespace {

void expect_params(std::string_view family, std::span<const Nat> params, std::size_t n) {
  if (params.size() != n) {
    throw std::invalid_argument(std::string(family) + " takes " + std::to_string(n) + " parameter(s)");
  }
}

Verdict classify_psl2_numbers(const Nat& q, std::uint64_t budget, bool drop_ones) {
  std::vector<std::pair<std::string, Nat>> items;
  std::string rule;
  if (q % 2 == 0) {
    items = {{"q-1", q - 1}, {"q+1", q + 1}};
    rule = "PSL(2,q), q = " + str(q) + " even: q-1 and q+1";
  } else {
    items = {{"(q-1)/2", (q - 1) / 2}, {"(q+1)/2", (q + 1) / 2}};
    rule = "PSL(2,q), q = " + str(q) + " odd: (q-1)/2 and (q+1)/2";
  }
  if (drop_ones) std::erase_if(items, [](const auto& it) { return it.second == 1; });
  return from_numbers(classify_numbers(items, budget), rule);
}

}  // namespace

Verdict classify_family(std::string_view family, std::span<const Nat> params, std::uint64_t budget) {
  const std::string fam(family);
  if (fam == "cyclic") {
    expect_params(family, params, 1);
    const Nat& n = params[0];
    if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
    if (n == 1) return make(VerdictTag::IsCograph, "trivial group");
    return from_numbers(classify_numbers({{"n", n}}, budget), "cyclic of order n: n a prime power or pq");
  }
  if (fam == "dihedral") {
    expect_params(family, params, 1);
    if (params[0] < 2) throw std::invalid_argument("dihedral: m must be >= 2");
    return from_numbers(classify_numbers({{"m", params[0]}}, budget), "dihedral of order 2m");
  }
  if (fam == "sym" || fam == "alt") {
    expect_params(family, params, 1);
    if (params[0] < 1) throw std::invalid_argument(fam + ": n must be >= 1");
    const unsigned bound = fam == "sym" ? 5 : 6;
    const bool ok = params[0] <= bound;
    const std::string rule = (fam == "sym" ? "S_n is PCG iff n <= 5" : "A_n is PCG iff n <= 6");
    return make(ok ? VerdictTag::IsCograph : VerdictTag::NotCograph, rule + " (n = " + str(params[0]) + ")");
  }
  if (fam == "sd") {
    expect_params(family, params, 3);
    const std::uint64_t p = to_u64(params[0], "sd: p");
    const std::uint64_t n = to_u64(params[1], "sd: n");
    const Nat k = params[2];
    if (!numtheory::is_prime_u64(p)) throw std::invalid_argument("sd: p must be prime");
    if (n == 0 || (p - 1) % n != 0) throw std::invalid_argument("sd: n must divide p-1");
    const std::uint64_t kr = to_u64(Nat(k % Nat(std::to_string(p))), "sd: k");
    if (kr == 0) throw std::invalid_argument("sd: k must be coprime to p");
    const std::uint64_t ord = numtheory::multiplicative_order_mod_prime(kr, p);
    if (ord != n) {
      throw std::invalid_argument("sd: k has multiplicative order " + std::to_string(ord) + " mod p, not " +
                                  std::to_string(n));
    }
    if (n == 1) return make(VerdictTag::IsCograph, "cyclic of prime order p");
    return from_numbers(classify_numbers({{"p", params[0]}, {"n", params[1]}}, budget),
                        "C_p : C_n acting faithfully; maximal cyclic subgroups of orders p and n meet trivially");
  }
  if (fam == "psl2") {
    expect_params(family, params, 1);
    const Nat& q = params[0];
    if (!is_prime_power(q)) throw std::invalid_argument("psl2: q must be a prime power");
    if (q < 4) throw std::invalid_argument("psl2: q must be >= 4 (PSL(2,2), PSL(2,3) are not simple)");
    return classify_psl2_numbers(q, budget, false);
  }
  if (fam == "psl2-char2") {
    expect_params(family, params, 1);
    const Nat& d = params[0];
    if (d < 1) throw std::invalid_argument("psl2-char2: d must be >= 1");
    return classify_psl2_numbers(numtheory::pow2(static_cast<unsigned>(to_u64(d, "psl2-char2: d"))), budget, true);
  }
  if (fam == "suzuki") {
    expect_params(family, params, 1);
    const Nat& e = params[0];
    if (e < 1) throw std::invalid_argument("suzuki: e must be >= 1 (q = 2^(2e+1) >= 8)");
    const auto eu = static_cast<unsigned>(to_u64(e, "suzuki: e"));
    const Nat q = numtheory::pow2(2 * eu + 1);
    const Nat s = numtheory::pow2(eu + 1);
    return from_numbers(classify_numbers({{"4", Nat(4)}, {"q-1", q - 1}, {"q-2^(e+1)+1", q - s + 1},
                                          {"q+2^(e+1)+1", q + s + 1}},
                                         budget),
                        "Sz(q), q = 2^" + std::to_string(2 * eu + 1) + ": pairwise coprime maximal cyclic orders");
  }
  if (fam == "psl3") {
    expect_params(family, params, 1);
    const Nat& q = params[0];
    if (!is_prime_power(q)) throw std::invalid_argument("psl3: q must be a prime power");
    const bool ok = q == 2 || q == 4;
    return make(ok ? VerdictTag::IsCograph : VerdictTag::NotCograph,
                ok ? "PSL(3,q), q in {2,4}: Gruenberg-Kegel graph has no edges"
                   : "PSL(3,q) with q not in {2,4} contains an induced P4");
  }
  for (const auto& row : simple_verdict_table()) {
    if (row.family != fam) continue;
    if (params.size() > 1) throw std::invalid_argument(fam + " takes at most one parameter");
    if (!params.empty()) {
      const Nat& x = params[0];
      if (fam == "ree" || fam == "2f4") {
        if (x < (fam == "ree" ? 1 : 0)) throw std::invalid_argument(fam + ": e out of range");
      } else if (fam == "psu3") {
        if (!is_prime_power(x) || x <= 2) throw std::invalid_argument("psu3: q must be a prime power > 2");
      } else if (fam != "sporadic" && fam != "higher-rank" && !is_prime_power(x)) {
        throw std::invalid_argument(fam + ": q must be a prime power");
      }
    }
    return make(VerdictTag::NotCograph, row.groups + ": " + row.reason);
  }
  throw std::invalid_argument("unknown family: " + fam);
}

namespace {

using groups::GroupSpec;
using groups::SpecKind;

// Order p*q^m, q^m | p-1, with a cyclic Sylow q-subgroup acting faithfully
// on the normal subgroup of order p.
bool is_faithful_metacyclic(const FiniteGroup& h, std::uint64_t p, std::uint64_t qm, std::uint64_t q) {
  std::optional<ElementId> a;
  std::optional<ElementId> b;
  for (ElementId x = 1; x < h.order() && !(a && b); ++x) {
    if (!a && h.element_order(x) == p) a = x;
    if (!b && h.element_order(x) == qm) b = x;
  }
  if (!a || !b) return false;
  return !h.commute(*a, h.pow(*b, qm / q));
}

Verdict classify_direct_product(const GroupSpec& spec, std::uint64_t budget, std::size_t cap) {
  const GroupSpec& gs = spec.factors[0];
  const GroupSpec& hs = spec.factors[1];
  const Nat ng = groups::expected_order(gs);
  const Nat nh = groups::expected_order(hs);
  if (ng == 1) return classify_spec(hs, budget, cap);
  if (nh == 1) return classify_spec(gs, budget, cap);
  const auto fg = numtheory::factor(ng, budget);
  const auto fh = numtheory::factor(nh, budget);
  if (!fg.complete || !fh.complete) return make(VerdictTag::Unknown, "factorization budget exhausted on a factor order");

  const bool gp = fg.factors.size() == 1;
  const bool hp = fh.factors.size() == 1;
  if (gp && hp && fg.factors[0].prime == fh.factors[0].prime) {
    return make(VerdictTag::IsCograph, "direct product, case (a): both orders powers of " + str(fg.factors[0].prime));
  }
  const bool g_prime = gp && fg.factors[0].exponent == 1;
  const bool h_prime = hp && fh.factors[0].exponent == 1;
  if (g_prime && h_prime) {
    return make(VerdictTag::IsCograph, "direct product, case (b): cyclic of distinct prime orders " + str(ng) +
                                           " and " + str(nh));
  }
  // Case (c): one factor cyclic of order q, the other of order p*q^m.
  for (int side = 0; side < 2; ++side) {
    const bool small_prime = side == 0 ? g_prime : h_prime;
    if (!small_prime) continue;
    const Nat q = side == 0 ? ng : nh;
    const auto& other = side == 0 ? fh : fg;
    const GroupSpec& other_spec = side == 0 ? hs : gs;
    if (other.factors.size() != 2) continue;
    const numtheory::PrimeFactor* pf = nullptr;
    const numtheory::PrimeFactor* qf = nullptr;
    for (const auto& f : other.factors) {
      if (f.prime == q) qf = &f;
      else if (f.exponent == 1) pf = &f;
    }
    if (!pf || !qf) continue;
    Nat qm;
    mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), qf->exponent);
    if ((pf->prime - 1) % qm != 0) continue;
    const FiniteGroup h = groups::build_group(other_spec, cap);
    if (is_faithful_metacyclic(h, to_u64(pf->prime, "p"), to_u64(qm, "q^m"), to_u64(q, "q"))) {
      return make(VerdictTag::IsCograph, "direct product, case (c): C_" + str(q) + " x (C_" + str(pf->prime) +
                                             " : C_" + str(qm) + ") with faithful action");
    }
  }
  return make(VerdictTag::NotCograph, "direct product of orders " + str(ng) + " and " + str(nh) +
                                          " matching none of cases (a), (b), (c)");
}

}  // namespace

Verdict classify_spec(const GroupSpec& spec, std::uint64_t budget, std::size_t cap) {
  auto nat = [&](std::size_t i) { return Nat(std::to_string(spec.params[i])); };
  auto one = [&](std::string_view fam) {
    const Nat n = nat(0);
    return classify_family(fam, std::span<const Nat>(&n, 1), budget);
  };
  switch (spec.kind) {
    case SpecKind::Cyclic: return one("cyclic");
    case SpecKind::Dihedral: return one("dihedral");
    case SpecKind::Sym: return one("sym");
    case SpecKind::Alt: return one("alt");
    case SpecKind::Semidirect: {
      const std::vector<Nat> ps{nat(0), nat(1), nat(2)};
      return classify_family("sd", ps, budget);
    }
    case SpecKind::Heis3: return make(VerdictTag::IsCograph, "group of order 27 = 3^3 is nilpotent of prime-power order");
    case SpecKind::Psl2:
      if (spec.params[0] >= 4) return one("psl2");
      return classify_group(groups::build_group(spec, cap), budget);
    case SpecKind::Psl3:
      if (spec.params[0] != 2 && spec.params[0] != 4) return one("psl3");
      return classify_group(groups::build_group(spec, cap), budget);
    case SpecKind::Sl3:
      if (spec.params[0] != 2 && spec.params[0] != 4) {
        return make(VerdictTag::NotCograph, "SL(3,q) with q not in {2,4} contains an induced P4");
      }
      return classify_group(groups::build_group(spec, cap), budget);
    case SpecKind::DirectProduct: return classify_direct_product(spec, budget, cap);
    case SpecKind::Heis3C2:
    case SpecKind::M11: return classify_group(groups::build_group(spec, cap), budget);
  }
  throw std::logic_error("classify_spec: unhandled kind");
}

std::vector<SweepRow> family_sweep(std::string_view family, std::uint64_t first, std::uint64_t last,
                                   std::uint64_t budget, unsigned workers) {
  const std::string fam(family);
  std::uint64_t lo = first;
  if (fam == "dihedral" || fam == "psl3") lo = std::max<std::uint64_t>(lo, 2);
  else if (fam == "psl2") lo = std::max<std::uint64_t>(lo, 4);
  else lo = std::max<std::uint64_t>(lo, 1);
  const bool prime_powers = fam == "psl2" || fam == "psl3";

  std::vector<std::uint64_t> params;
  for (std::uint64_t x = lo; x <= last && x >= lo; ++x) {
    if (!prime_powers || is_prime_power(Nat(std::to_string(x)))) params.push_back(x);
    if (x == std::numeric_limits<std::uint64_t>::max()) break;
  }
  // Validate the family once up front so errors surface on the caller's thread.
  if (!params.empty()) {
    const Nat probe(std::to_string(params.front()));
    (void)classify_family(family, std::span<const Nat>(&probe, 1), 1);
  }

  std::vector<SweepRow> rows(params.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      const Nat x(std::to_string(params[i]));
      rows[i].param = x;
      rows[i].verdict = classify_family(family, std::span<const Nat>(&x, 1), budget);
      if (fam == "psl2-char2" && params[i] == 1) rows[i].note = "not simple";
    }
  };
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, params.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace pcg::criteria
