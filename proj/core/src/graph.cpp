#include "pcg/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace pcg::graphs {

std::size_t BitRow::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitRow::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitRow::next(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) {
      const std::size_t idx = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return idx < n_ ? idx : n_;
    }
    if (++wi >= words_.size()) return n_;
    w = words_[wi];
  }
}

std::vector<Vertex> BitRow::members() const {
  std::vector<Vertex> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

Graph::Graph(std::size_t n) : n_(n), rows_(n, BitRow(n)) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    auto dst = out.rows_[u].words();
    auto src = rows_[u].words();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~src[i];
    if (n_ % 64 != 0) dst.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    out.rows_[u].reset(u);
  }
  out.labels = labels;
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (!labels.empty()) {
    for (Vertex v : vertices) out.labels.push_back(labels[v]);
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  BitRow unvisited(n_);
  for (std::size_t i = 1; i < n_; ++i) unvisited.set(i);
  std::vector<Vertex> stack{0};
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    auto un = unvisited.words();
    auto adj = rows_[v].words();
    for (std::size_t wi = 0; wi < un.size(); ++wi) {
      std::uint64_t fresh = un[wi] & adj[wi];
      un[wi] &= ~fresh;
      for (; fresh != 0; fresh &= fresh - 1) {
        stack.push_back(static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(fresh))));
        ++reached;
      }
    }
  }
  return reached == n_;
}

Digraph::Digraph(std::size_t n) : n_(n), rows_(n, BitRow(n)) {}

void Digraph::add_arc(Vertex from, Vertex to) {
  if (from == to) throw std::invalid_argument("loops are not allowed");
  rows_[from].set(to);
}

std::uint64_t Digraph::arc_count() const {
  std::uint64_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

bool Digraph::is_transitive() const {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : rows_[u].members()) {
      auto reach = rows_[v].words();
      auto direct = rows_[u].words();
      for (std::size_t wi = 0; wi < reach.size(); ++wi) {
        std::uint64_t missing = reach[wi] & ~direct[wi];
        if (wi == (u >> 6)) missing &= ~(std::uint64_t{1} << (u & 63));
        if (missing != 0) return false;
      }
    }
  }
  return true;
}

Graph Digraph::symmetrize() const {
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : rows_[u].members()) out.add_edge(u, v);
  }
  out.labels = labels;
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!g.labels.empty()) out << " [label=\"" << g.labels[v] << "\"]";
    out << ";\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = g.row(u).next(u + 1); v < g.vertex_count(); v = g.row(u).next(v + 1)) {
      out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!g.labels.empty()) out << " [label=\"" << g.labels[v] << "\"]";
    out << ";\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.out_row(u).members()) out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

void append_hex_row(std::ostringstream& out, const BitRow& row) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = row.size();
  for (std::size_t base = 0; base < n; base += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1U;
      if (base + j < n && row.test(base + j)) nibble |= 1U;
    }
    out << kDigits[nibble];
  }
  out << '\n';
}

}  // namespace

std::string to_hex_rows(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) append_hex_row(out, g.row(v));
  return out.str();
}

std::string to_hex_rows(const Digraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) append_hex_row(out, g.out_row(v));
  return out.str();
}

Graph graph_from_hex_rows(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n)) throw std::invalid_argument("hex rows: missing vertex count");
  Graph g(n);
  std::string line;
  for (Vertex u = 0; u < n; ++u) {
    if (!(in >> line) || line.size() != (n + 3) / 4) throw std::invalid_argument("hex rows: malformed row");
    for (std::size_t d = 0; d < line.size(); ++d) {
      const unsigned nibble = static_cast<unsigned>(std::stoul(std::string(1, line[d]), nullptr, 16));
      for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t v = d * 4 + j;
        if ((nibble >> (3 - j) & 1U) == 0) continue;
        if (v >= n || v == u) throw std::invalid_argument("hex rows: bit outside the graph");
        g.add_edge(u, static_cast<Vertex>(v));
      }
    }
  }
  return g;
}

}  // namespace pcg::graphs
