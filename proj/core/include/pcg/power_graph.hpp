#pragma once

// Graphs attached to an enumerated finite group. Vertex v of every
// element-level graph is group element v (so vertex 0 is the identity),
// except where a restriction renumbers densely; `labels` then maps each
// vertex back to its element id.

#include <cstdint>

#include "pcg/graph.hpp"
#include "pcg/group.hpp"
#include "pcg/numtheory.hpp"

namespace pcg::powergraph {

/// Arc x -> y iff x != y and y is a power of x.
graphs::Digraph directed_power_graph(const groups::FiniteGroup& g);

/// x ~ y iff one is a power of the other.
graphs::Graph power_graph(const groups::FiniteGroup& g);

enum class DerivedKind { Reduced, Enhanced, GruenbergKegel };

/// Reduced: the power graph without the identity (labels = element ids).
/// Enhanced: x ~ y iff both lie in one cyclic subgroup.
/// GruenbergKegel: primes dividing |G| (labels = primes), p ~ q iff some
/// element order is divisible by pq.
graphs::Graph derived_graph(const groups::FiniteGroup& g, DerivedKind kind);

/// Half of the sum over elements a of 2 o(a) - phi(o(a)) - 1.
numtheory::Nat edge_count_formula(const groups::FiniteGroup& g);

/// Non-identity elements whose order is a prime or a product of two primes.
bool in_p2(std::uint64_t order);

/// Induced subgraph of the power graph on those elements, ascending by id.
graphs::Graph p2_restriction(const groups::FiniteGroup& g);

}  // namespace pcg::powergraph
