#pragma once

// Cograph recognition with certificates: a cotree when the graph is P4-free,
// an induced P4 otherwise.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg::cograph {

using graphs::Graph;
using graphs::Vertex;

struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    Vertex vertex = 0;  // leaves only
    std::vector<std::size_t> children;
  };

  std::vector<Node> nodes;
  std::size_t root = 0;

  /// Nested text: U(...) and J(...) with comma-separated children, leaves as
  /// integers.
  std::string to_text() const;
};

/// Path a - b - c - d with no chords.
struct P4Witness {
  std::array<Vertex, 4> path{};
  friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

using Decomposition = std::variant<Cotree, P4Witness>;

/// Recursive split: one vertex is a leaf; a disconnected graph is the Union
/// of its components; a disconnected complement is the Join of its
/// co-components; otherwise an induced P4 is extracted and returned.
Decomposition decompose(const Graph& g);

bool is_cograph(const Graph& g);

/// Lexicographically least induced P4 (a,b,c,d), by direct search over
/// paths; independent of decompose().
std::optional<P4Witness> find_p4(const Graph& g);

/// Same, restricted to the vertices in `subset`.
std::optional<P4Witness> find_p4(const Graph& g, const graphs::BitRow& subset);

/// True iff the four vertices are distinct and induce exactly the path.
bool is_induced_p4(const Graph& g, const P4Witness& w);

/// Rebuilds the graph a cotree describes: Union is disjoint union, Join adds
/// every cross edge. Throws std::invalid_argument on a malformed cotree
/// (arity below two, repeated labels, leaves not exactly 0..n-1, or two
/// consecutive nodes of the same kind).
Graph cotree_eval(const Cotree& t);

}  // namespace pcg::cograph
