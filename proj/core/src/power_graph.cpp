#include "pcg/power_graph.hpp"

#include <algorithm>

namespace pcg::powergraph {

using groups::ElementId;
using groups::FiniteGroup;
using graphs::Vertex;

graphs::Digraph directed_power_graph(const FiniteGroup& g) {
  graphs::Digraph out(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId y : g.powers(x)) {
      if (y != x) out.add_arc(x, y);
    }
  }
  return out;
}

graphs::Graph power_graph(const FiniteGroup& g) {
  graphs::Graph out(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    for (ElementId y : g.powers(x)) {
      if (y != x) out.add_edge(x, y);
    }
  }
  return out;
}

graphs::Graph derived_graph(const FiniteGroup& g, DerivedKind kind) {
  switch (kind) {
    case DerivedKind::Reduced: {
      graphs::Graph out(g.order() - 1);
      for (ElementId x = 1; x < g.order(); ++x) {
        out.labels.push_back(x);
        for (ElementId y : g.powers(x)) {
          if (y != x && y != 0) out.add_edge(x - 1, y - 1);
        }
      }
      return out;
    }
    case DerivedKind::Enhanced: {
      graphs::Graph out(g.order());
      for (const auto& cyc : groups::maximal_cyclic_subgroups(g).subgroups) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          for (std::size_t j = i + 1; j < cyc.size(); ++j) {
            if (!out.has_edge(cyc[i], cyc[j])) out.add_edge(cyc[i], cyc[j]);
          }
        }
      }
      return out;
    }
    case DerivedKind::GruenbergKegel: {
      const auto primes = numtheory::prime_divisors_u64(g.order());
      graphs::Graph out(primes.size());
      out.labels.assign(primes.begin(), primes.end());
      std::vector<std::uint64_t> distinct_orders = g.element_orders();
      std::sort(distinct_orders.begin(), distinct_orders.end());
      distinct_orders.erase(std::unique(distinct_orders.begin(), distinct_orders.end()), distinct_orders.end());
      for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
          const std::uint64_t pq = primes[i] * primes[j];
          const bool joined = std::any_of(distinct_orders.begin(), distinct_orders.end(),
                                          [pq](std::uint64_t o) { return o % pq == 0; });
          if (joined) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
      return out;
    }
  }
  return {};
}

numtheory::Nat edge_count_formula(const FiniteGroup& g) {
  std::uint64_t twice = 0;
  for (std::uint64_t o : g.element_orders()) twice += 2 * o - numtheory::totient_u64(o) - 1;
  return numtheory::Nat(std::to_string(twice / 2));
}

bool in_p2(std::uint64_t order) {
  const unsigned omega = numtheory::big_omega_u64(order);
  return omega == 1 || omega == 2;
}

graphs::Graph p2_restriction(const FiniteGroup& g) {
  std::vector<Vertex> position(g.order(), static_cast<Vertex>(-1));
  std::vector<std::uint64_t> members;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (in_p2(g.element_order(x))) {
      position[x] = static_cast<Vertex>(members.size());
      members.push_back(x);
    }
  }
  graphs::Graph out(members.size());
  out.labels = members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto x = static_cast<ElementId>(members[i]);
    for (ElementId y : g.powers(x)) {
      if (y != x && y != 0) out.add_edge(static_cast<Vertex>(i), position[y]);
    }
  }
  return out;
}

}  // namespace pcg::powergraph
