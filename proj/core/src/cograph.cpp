#include "pcg/cograph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pcg::cograph {

using graphs::BitRow;

namespace {

template <typename Fn>
void for_each_bit(std::uint64_t w, std::size_t wi, Fn&& fn) {
  for (; w != 0; w &= w - 1) fn(static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
}

// Components of g[mask], or of its complement, by BFS over an unvisited set.
// Each component is ascending; components come in order of least vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, const BitRow& mask, bool in_complement) {
  BitRow unvisited = mask;
  auto un = unvisited.words();
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = unvisited.next(0); s < unvisited.size(); s = unvisited.next(s)) {
    std::vector<Vertex> comp{static_cast<Vertex>(s)};
    unvisited.reset(s);
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      auto adj = g.row(v).words();
      for (std::size_t wi = 0; wi < un.size(); ++wi) {
        const std::uint64_t fresh = un[wi] & (in_complement ? ~adj[wi] : adj[wi]);
        if (fresh == 0) continue;
        un[wi] &= ~fresh;
        for_each_bit(fresh, wi, [&](Vertex u) {
          stack.push_back(u);
          comp.push_back(u);
        });
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

BitRow mask_of(std::size_t n, const std::vector<Vertex>& vertices) {
  BitRow m(n);
  for (Vertex v : vertices) m.set(v);
  return m;
}

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g) {}

  // Returns the node index, or nothing after recording a witness.
  std::optional<std::size_t> run(const std::vector<Vertex>& vertices) {
    if (vertices.size() == 1) return leaf(vertices[0]);
    const BitRow mask = mask_of(g_.vertex_count(), vertices);
    auto parts = components(g_, mask, false);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (parts.size() == 1) {
      parts = components(g_, mask, true);
      kind = Cotree::Kind::Join;
    }
    if (parts.size() == 1) {
      witness_ = find_p4(g_, mask);
      if (!witness_) throw std::logic_error("connected, co-connected graph without an induced P4");
      return std::nullopt;
    }
    std::vector<std::size_t> children;
    for (const auto& part : parts) {
      auto child = run(part);
      if (!child) return std::nullopt;
      children.push_back(*child);
    }
    tree_.nodes.push_back({kind, 0, std::move(children)});
    return tree_.nodes.size() - 1;
  }

  Cotree tree_;
  std::optional<P4Witness> witness_;

 private:
  std::size_t leaf(Vertex v) {
    tree_.nodes.push_back({Cotree::Kind::Leaf, v, {}});
    return tree_.nodes.size() - 1;
  }

  const Graph& g_;
};

}  // namespace

std::string Cotree::to_text() const {
  std::ostringstream out;
  std::function<void(std::size_t)> emit = [&](std::size_t id) {
    const Node& node = nodes[id];
    if (node.kind == Kind::Leaf) {
      out << node.vertex;
      return;
    }
    out << (node.kind == Kind::Union ? "U(" : "J(");
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i != 0) out << ',';
      emit(node.children[i]);
    }
    out << ')';
  };
  if (!nodes.empty()) emit(root);
  return out.str();
}

Decomposition decompose(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("decompose: empty graph");
  std::vector<Vertex> all(g.vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  Decomposer d(g);
  auto root = d.run(all);
  if (!root) return *d.witness_;
  d.tree_.root = *root;
  return std::move(d.tree_);
}

bool is_cograph(const Graph& g) {
  return g.vertex_count() == 0 || std::holds_alternative<Cotree>(decompose(g));
}

std::optional<P4Witness> find_p4(const Graph& g, const BitRow& subset) {
  const std::size_t n = g.vertex_count();
  const auto sw = subset.words();
  BitRow cand(n);
  auto cw = cand.words();
  for (std::size_t a = subset.next(0); a < n; a = subset.next(a + 1)) {
    const auto aw = g.row(static_cast<Vertex>(a)).words();
    for (std::size_t b = g.row(static_cast<Vertex>(a)).next(0); b < n; b = g.row(static_cast<Vertex>(a)).next(b + 1)) {
      if (!subset.test(b)) continue;
      const auto bw = g.row(static_cast<Vertex>(b)).words();
      // c: neighbour of b, not a, not adjacent to a.
      BitRow cs(n);
      auto csw = cs.words();
      for (std::size_t wi = 0; wi < csw.size(); ++wi) csw[wi] = bw[wi] & sw[wi] & ~aw[wi];
      cs.reset(a);
      for (std::size_t c = cs.next(0); c < n; c = cs.next(c + 1)) {
        const auto ccw = g.row(static_cast<Vertex>(c)).words();
        for (std::size_t wi = 0; wi < cw.size(); ++wi) cw[wi] = ccw[wi] & sw[wi] & ~aw[wi] & ~bw[wi];
        cand.reset(a);
        cand.reset(b);
        const std::size_t d = cand.next(0);
        if (d < n) {
          return P4Witness{{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c), static_cast<Vertex>(d)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<P4Witness> find_p4(const Graph& g) {
  BitRow all(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) all.set(i);
  return find_p4(g, all);
}

bool is_induced_p4(const Graph& g, const P4Witness& w) {
  const auto& p = w.path;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return false;
      const bool should = j == i + 1;
      if (g.has_edge(p[i], p[j]) != should) return false;
    }
  }
  return true;
}

Graph cotree_eval(const Cotree& t) {
  if (t.nodes.empty() || t.root >= t.nodes.size()) throw std::invalid_argument("cotree: missing root");
  std::vector<int> parents(t.nodes.size(), 0);
  std::size_t leaves = 0;
  for (const auto& node : t.nodes) {
    if (node.kind == Cotree::Kind::Leaf) {
      ++leaves;
      if (!node.children.empty()) throw std::invalid_argument("cotree: leaf with children");
      continue;
    }
    if (node.children.size() < 2) throw std::invalid_argument("cotree: internal node with fewer than two children");
    for (std::size_t c : node.children) {
      if (c >= t.nodes.size()) throw std::invalid_argument("cotree: dangling child");
      if (++parents[c] > 1) throw std::invalid_argument("cotree: node with two parents");
      if (t.nodes[c].kind == node.kind) throw std::invalid_argument("cotree: Union/Join labels do not alternate");
    }
  }
  if (parents[t.root] != 0) throw std::invalid_argument("cotree: root has a parent");

  Graph out(leaves);
  std::vector<bool> seen(leaves, false);
  std::size_t reached = 0;
  std::function<std::vector<Vertex>(std::size_t)> visit = [&](std::size_t id) -> std::vector<Vertex> {
    ++reached;
    const auto& node = t.nodes[id];
    if (node.kind == Cotree::Kind::Leaf) {
      if (node.vertex >= leaves || seen[node.vertex]) throw std::invalid_argument("cotree: leaf labels are not 0..n-1");
      seen[node.vertex] = true;
      return {node.vertex};
    }
    std::vector<Vertex> all;
    for (std::size_t c : node.children) {
      auto part = visit(c);
      if (node.kind == Cotree::Kind::Join) {
        for (Vertex u : all) {
          for (Vertex v : part) out.add_edge(u, v);
        }
      }
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  };
  visit(t.root);
  if (reached != t.nodes.size()) throw std::invalid_argument("cotree: unreachable nodes");
  return out;
}

}  // namespace pcg::cograph
