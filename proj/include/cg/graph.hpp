#ifndef CG_GRAPH_HPP_
#define CG_GRAPH_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cg/nodeset.hpp"

namespace cg {

// Edge kind for an ordered node pair (u, v): Forward means u -> v,
// Backward means v -> u.  None is reported for non-adjacent pairs.
enum class EdgeKind : unsigned char { None, Line, Forward, Backward };

struct Edge {
  int u = 0;       // for a line, u < v; for an arrow, u is the tail
  int v = 0;
  bool line = false;
};

// A graph over a finite node set whose edges are lines (undirected) or
// arrows (directed), at most one edge per pair.  Node names are stored
// sorted, so node index order is name order.  Instances are treated as
// immutable once populated; every operation below is a pure function.
class HybridGraph {
 public:
  HybridGraph() = default;
  explicit HybridGraph(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(std::string_view name) const;  // throws UnknownNodeError
  std::optional<int> find(std::string_view name) const;

  void add_line(int u, int v);
  void add_arrow(int tail, int head);
  void add_line(std::string_view u, std::string_view v);
  void add_arrow(std::string_view tail, std::string_view head);

  bool adjacent(int u, int v) const { return kind(u, v) != EdgeKind::None; }
  bool has_line(int u, int v) const { return kind(u, v) == EdgeKind::Line; }
  bool has_arrow(int tail, int head) const {
    return kind(tail, head) == EdgeKind::Forward;
  }
  EdgeKind kind(int u, int v) const;

  // All adjacent nodes of v (either edge kind), sorted.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  std::vector<Edge> edges() const;  // sorted by canonical pair
  std::vector<Edge> arrows() const;
  int edge_count() const { return edge_count_; }

  NodeSet all_nodes() const;

  bool operator==(const HybridGraph& other) const {
    return names_ == other.names_ && kinds_ == other.kinds_;
  }

 private:
  std::size_t tri(int u, int v) const;
  void add_edge(int u, int v, EdgeKind kind_from_u);

  std::vector<std::string> names_;
  std::vector<EdgeKind> kinds_;        // triangular, canonical pair order
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
  int edge_count_ = 0;
};

// An undirected graph: node set plus a set of lines.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;

  void add_line(int u, int v);
  void add_line(std::string_view u, std::string_view v);

  bool has_line(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<std::pair<int, int>> lines() const;  // sorted, u < v
  int line_count() const { return line_count_; }

  NodeSet all_nodes() const;

  bool operator==(const UndirectedGraph& other) const {
    return names_ == other.names_ && present_ == other.present_;
  }

 private:
  std::size_t tri(int u, int v) const;

  std::vector<std::string> names_;
  std::vector<char> present_;  // triangular adjacency
  std::vector<std::vector<int>> adj_;
  int line_count_ = 0;
};

// A hybrid graph together with its chain of components: lines join nodes of
// one component, arrows go from an earlier component to a strictly later
// one.  Built only through validate_chain_graph, so instances always carry
// a valid chain ordering.
class ChainGraph {
 public:
  const HybridGraph& graph() const { return g_; }
  const std::vector<NodeSet>& chain() const { return chain_; }
  int component_count() const { return static_cast<int>(chain_.size()); }
  const NodeSet& component(int i) const { return chain_[i]; }
  int component_of(int v) const { return comp_[v]; }

  int size() const { return g_.size(); }
  const std::vector<std::string>& names() const { return g_.names(); }
  const std::string& name(int v) const { return g_.name(v); }
  int index_of(std::string_view name) const { return g_.index_of(name); }

 private:
  friend ChainGraph validate_chain_graph(const HybridGraph&);
  ChainGraph(HybridGraph g, std::vector<NodeSet> chain, std::vector<int> comp)
      : g_(std::move(g)), chain_(std::move(chain)), comp_(std::move(comp)) {}

  HybridGraph g_;
  std::vector<NodeSet> chain_;
  std::vector<int> comp_;
};

// A triplet <A, B | C> of pairwise disjoint node sets, A and B non-empty.
struct Triplet {
  NodeSet a;
  NodeSet b;
  NodeSet c;
};

// Throws InvalidTripletError unless t is valid over a graph of n nodes.
void validate_triplet(int node_count, const Triplet& t);

// Orders the components into a chain (topological order of the component
// condensation, ties broken by least member node).  Throws
// NotAChainGraphError with a witness cycle if a semi-directed cycle exists.
ChainGraph validate_chain_graph(const HybridGraph& g);

// Connectivity components of the line-only subgraph, sorted by least member.
std::vector<NodeSet> components(const HybridGraph& g);

// Nodes outside A with an arrow into A.
NodeSet parents(const ChainGraph& g, const NodeSet& a);

// Nodes that reach A by steps that are forward arrows or lines; includes A.
NodeSet ancestors(const ChainGraph& g, const NodeSet& a);

// Subgraph over A with exactly the edges inside A.  A must be non-empty.
HybridGraph induced_subgraph(const HybridGraph& g, const NodeSet& a);

// Same adjacencies, all lines.
UndirectedGraph underlying_graph(const HybridGraph& g);

// Underlying graph plus a line for every distinct pair of parents of each
// component.
UndirectedGraph moral_graph(const ChainGraph& g);

// Moral graph of the subgraph induced by C u pa(C); C must be a component.
UndirectedGraph closure_graph(const ChainGraph& g, const NodeSet& component);

// Name-based bridging between graphs over different node tables.
template <typename G>
std::vector<std::string> node_names(const G& g, const NodeSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(g.name(v));
  return out;
}

template <typename G>
NodeSet node_indices(const G& g, const std::vector<std::string>& names) {
  NodeSet out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(g.index_of(n));
  return normalized(std::move(out));
}

// An undirected graph is a hybrid graph without arrows.
HybridGraph to_hybrid(const UndirectedGraph& g);
ChainGraph to_chain(const UndirectedGraph& g);

}  // namespace cg

#endif  // CG_GRAPH_HPP_
