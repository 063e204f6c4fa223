#pragma once

// Dense graphs with packed bit-row adjacency.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcg::graphs {

using Vertex = std::uint32_t;

/// A set of vertices as a bit row of fixed width.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return ((words_[i >> 6] >> (i & 63)) & 1U) != 0; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  bool any() const;
  /// First set index >= from, or size() if none.
  std::size_t next(std::size_t from) const;
  std::vector<Vertex> members() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph: symmetric, loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const BitRow& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::uint64_t edge_count() const;

  Graph complement() const;
  /// Induced subgraph, vertices renumbered in the order given.
  Graph induced(std::span<const Vertex> vertices) const;
  bool is_connected() const;

  /// Optional vertex annotation (group element ids, primes).
  std::vector<std::uint64_t> labels;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t n_ = 0;
  std::vector<BitRow> rows_;
};

/// Loop-free directed graph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  void add_arc(Vertex from, Vertex to);
  bool has_arc(Vertex from, Vertex to) const { return rows_[from].test(to); }
  const BitRow& out_row(Vertex v) const { return rows_[v]; }
  std::uint64_t arc_count() const;
  bool is_transitive() const;
  /// Forget directions.
  Graph symmetrize() const;

  std::vector<std::uint64_t> labels;

 private:
  std::size_t n_ = 0;
  std::vector<BitRow> rows_;
};

std::string to_dot(const Graph& g, const std::string& name = "G");
std::string to_dot(const Digraph& g, const std::string& name = "G");

/// Line-based export: vertex count, then one hex row per vertex. Vertex j of
/// a row is bit (3 - j % 4) of hex digit j / 4 (most significant bit first);
/// rows are zero-padded to whole digits.
std::string to_hex_rows(const Graph& g);
std::string to_hex_rows(const Digraph& g);
Graph graph_from_hex_rows(const std::string& text);

}  // namespace pcg::graphs
