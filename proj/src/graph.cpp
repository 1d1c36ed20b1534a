#include "cg/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "cg/errors.hpp"

namespace cg {

namespace {

constexpr std::string_view kForbiddenChars = "#->|,/";

void check_name(const std::string& name) {
  if (name.empty())
    throw InvalidNodeNameError("node name must be non-empty");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) ||
        kForbiddenChars.find(c) != std::string_view::npos)
      throw InvalidNodeNameError("invalid character in node name '" + name +
                                 "'");
  }
}

std::vector<std::string> checked_names(std::vector<std::string> names) {
  for (const auto& n : names) check_name(n);
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end())
    throw DuplicateNodeError("duplicate node name '" + *dup + "'");
  return names;
}

int lookup(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

// Renders a closed witness sequence with its actual edge kinds.
std::string format_cycle(const HybridGraph& g,
                         const std::vector<std::string>& cycle) {
  std::string out = cycle.front();
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    int u = g.index_of(cycle[i]);
    int v = g.index_of(cycle[i + 1]);
    out += g.has_line(u, v) ? " -- " : " -> ";
    out += cycle[i + 1];
  }
  return out;
}

// Shortest line path between two nodes of one component; both ends included.
std::vector<int> line_path(const HybridGraph& g, int from, int to) {
  std::vector<int> prev(g.size(), -1);
  std::deque<int> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (int y : g.neighbors(x)) {
      if (g.has_line(x, y) && prev[y] < 0) {
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> path;
  for (int x = to; x != from; x = prev[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

HybridGraph::HybridGraph(std::vector<std::string> names)
    : names_(checked_names(std::move(names))),
      kinds_(names_.size() * (names_.size() - 1) / 2, EdgeKind::None),
      adj_(names_.size()) {}

int HybridGraph::index_of(std::string_view name) const {
  int v = lookup(names_, name);
  if (v < 0) throw UnknownNodeError("unknown node '" + std::string(name) + "'");
  return v;
}

std::optional<int> HybridGraph::find(std::string_view name) const {
  int v = lookup(names_, name);
  if (v < 0) return std::nullopt;
  return v;
}

std::size_t HybridGraph::tri(int u, int v) const {
  if (u > v) std::swap(u, v);
  // index of pair (u, v), u < v, in row-major triangular layout
  return static_cast<std::size_t>(u) * (2 * names_.size() - u - 1) / 2 +
         (v - u - 1);
}

EdgeKind HybridGraph::kind(int u, int v) const {
  if (u == v) return EdgeKind::None;
  EdgeKind k = kinds_[tri(u, v)];
  if (u < v || k == EdgeKind::None || k == EdgeKind::Line) return k;
  return k == EdgeKind::Forward ? EdgeKind::Backward : EdgeKind::Forward;
}

void HybridGraph::add_edge(int u, int v, EdgeKind kind_from_u) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw UnknownNodeError("node index out of range");
  if (u == v) throw ConflictingEdgeError("self-loops are not allowed");
  if (kinds_[tri(u, v)] != EdgeKind::None)
    throw ConflictingEdgeError("pair {" + names_[u] + "," + names_[v] +
                               "} already has an edge");
  if (u > v) {
    std::swap(u, v);
    if (kind_from_u == EdgeKind::Forward)
      kind_from_u = EdgeKind::Backward;
    else if (kind_from_u == EdgeKind::Backward)
      kind_from_u = EdgeKind::Forward;
  }
  kinds_[tri(u, v)] = kind_from_u;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++edge_count_;
}

void HybridGraph::add_line(int u, int v) { add_edge(u, v, EdgeKind::Line); }

void HybridGraph::add_arrow(int tail, int head) {
  add_edge(tail, head, EdgeKind::Forward);
}

void HybridGraph::add_line(std::string_view u, std::string_view v) {
  add_line(index_of(u), index_of(v));
}

void HybridGraph::add_arrow(std::string_view tail, std::string_view head) {
  add_arrow(index_of(tail), index_of(head));
}

std::vector<Edge> HybridGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      switch (kinds_[tri(u, v)]) {
        case EdgeKind::None:
          break;
        case EdgeKind::Line:
          out.push_back({u, v, true});
          break;
        case EdgeKind::Forward:
          out.push_back({u, v, false});
          break;
        case EdgeKind::Backward:
          out.push_back({v, u, false});
          break;
      }
    }
  }
  return out;
}

std::vector<Edge> HybridGraph::arrows() const {
  std::vector<Edge> out;
  for (const Edge& e : edges())
    if (!e.line) out.push_back(e);
  return out;
}

NodeSet HybridGraph::all_nodes() const {
  NodeSet out(names_.size());
  for (int i = 0; i < size(); ++i) out[i] = i;
  return out;
}

UndirectedGraph::UndirectedGraph(std::vector<std::string> names)
    : names_(checked_names(std::move(names))),
      present_(names_.size() * (names_.size() - 1) / 2, 0),
      adj_(names_.size()) {}

int UndirectedGraph::index_of(std::string_view name) const {
  int v = lookup(names_, name);
  if (v < 0) throw UnknownNodeError("unknown node '" + std::string(name) + "'");
  return v;
}

std::optional<int> UndirectedGraph::find(std::string_view name) const {
  int v = lookup(names_, name);
  if (v < 0) return std::nullopt;
  return v;
}

std::size_t UndirectedGraph::tri(int u, int v) const {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * (2 * names_.size() - u - 1) / 2 +
         (v - u - 1);
}

void UndirectedGraph::add_line(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw UnknownNodeError("node index out of range");
  if (u == v) throw ConflictingEdgeError("self-loops are not allowed");
  if (present_[tri(u, v)]) return;  // idempotent
  present_[tri(u, v)] = 1;
  insert_sorted(adj_[u], v);
  insert_sorted(adj_[v], u);
  ++line_count_;
}

void UndirectedGraph::add_line(std::string_view u, std::string_view v) {
  add_line(index_of(u), index_of(v));
}

bool UndirectedGraph::has_line(int u, int v) const {
  return u != v && present_[tri(u, v)];
}

std::vector<std::pair<int, int>> UndirectedGraph::lines() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(line_count_);
  for (int u = 0; u < size(); ++u)
    for (int v = u + 1; v < size(); ++v)
      if (present_[tri(u, v)]) out.emplace_back(u, v);
  return out;
}

NodeSet UndirectedGraph::all_nodes() const {
  NodeSet out(names_.size());
  for (int i = 0; i < size(); ++i) out[i] = i;
  return out;
}

void validate_triplet(int node_count, const Triplet& t) {
  auto in_range = [&](const NodeSet& s) {
    return s.empty() || (s.front() >= 0 && s.back() < node_count);
  };
  if (!in_range(t.a) || !in_range(t.b) || !in_range(t.c))
    throw InvalidTripletError("triplet node out of range");
  if (t.a.empty() || t.b.empty())
    throw InvalidTripletError("triplet requires non-empty A and B");
  if (!disjoint(t.a, t.b) || !disjoint(t.a, t.c) || !disjoint(t.b, t.c))
    throw InvalidTripletError("triplet sets must be pairwise disjoint");
}

std::vector<NodeSet> components(const HybridGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<NodeSet> out;
  for (int start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    NodeSet members;
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int y : g.neighbors(x)) {
        if (g.has_line(x, y) && comp[y] < 0) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
    }
    out.push_back(normalized(std::move(members)));
  }
  // discovery from node 0 upward already orders components by least member
  return out;
}

ChainGraph validate_chain_graph(const HybridGraph& g) {
  std::vector<NodeSet> comps = components(g);
  int k = static_cast<int>(comps.size());
  std::vector<int> comp_of(g.size(), -1);
  for (int i = 0; i < k; ++i)
    for (int v : comps[i]) comp_of[v] = i;

  // An arrow inside a component closes a semi-directed cycle through lines.
  for (const Edge& e : g.arrows()) {
    if (comp_of[e.u] == comp_of[e.v]) {
      std::vector<int> path = line_path(g, e.v, e.u);
      std::vector<std::string> cycle{g.name(e.u)};
      for (int x : path) cycle.push_back(g.name(x));
      throw NotAChainGraphError(
          "not a chain graph: semi-directed cycle " + format_cycle(g, cycle),
          cycle);
    }
  }

  // Condensation edges; duplicates are harmless for Kahn's algorithm if we
  // count them consistently.
  std::vector<std::vector<int>> succ(k);
  std::vector<int> indeg(k, 0);
  for (const Edge& e : g.arrows()) {
    succ[comp_of[e.u]].push_back(comp_of[e.v]);
    ++indeg[comp_of[e.v]];
  }

  // Topological order; ties broken by lexicographically least member node,
  // which is the least node index since names are sorted.
  auto cmp = [&](int a, int b) { return comps[a].front() > comps[b].front(); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int i = 0; i < k; ++i)
    if (indeg[i] == 0) ready.push(i);

  std::vector<int> order;
  std::vector<int> position(k, -1);
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    position[c] = static_cast<int>(order.size());
    order.push_back(c);
    for (int d : succ[c])
      if (--indeg[d] == 0) ready.push(d);
  }

  if (static_cast<int>(order.size()) < k) {
    // A directed cycle among components remains; walk it back to nodes.
    std::vector<int> cyc_comps;
    {
      // Find a cycle in the leftover condensation subgraph by iterated DFS.
      std::vector<int> state(k, 0);  // 0 new, 1 on stack, 2 done
      std::vector<int> stack, via;
      std::vector<int> parent(k, -1);
      for (int s = 0; s < k && cyc_comps.empty(); ++s) {
        if (position[s] >= 0 || state[s] != 0) continue;
        stack.push_back(s);
        state[s] = 1;
        std::vector<std::pair<int, std::size_t>> dfs{{s, 0}};
        while (!dfs.empty() && cyc_comps.empty()) {
          auto& [c, idx] = dfs.back();
          bool advanced = false;
          while (idx < succ[c].size()) {
            int d = succ[c][idx++];
            if (position[d] >= 0) continue;  // already ordered, not in cycle
            if (state[d] == 1) {
              // found cycle d ... c -> d
              auto it = std::find(stack.begin(), stack.end(), d);
              cyc_comps.assign(it, stack.end());
              break;
            }
            if (state[d] == 0) {
              state[d] = 1;
              stack.push_back(d);
              dfs.push_back({d, 0});
              advanced = true;
              break;
            }
          }
          if (!advanced && cyc_comps.empty()) {
            state[c] = 2;
            stack.pop_back();
            dfs.pop_back();
          }
        }
      }
    }
    // Connecting arrows between consecutive cycle components.
    int m = static_cast<int>(cyc_comps.size());
    std::vector<Edge> hops(m);
    for (const Edge& e : g.arrows()) {
      for (int i = 0; i < m; ++i) {
        if (comp_of[e.u] == cyc_comps[i] &&
            comp_of[e.v] == cyc_comps[(i + 1) % m])
          hops[i] = e;
      }
    }
    std::vector<std::string> cycle;
    int entry = hops[m - 1].v;  // node where the cycle enters cyc_comps[0]
    for (int i = 0; i < m; ++i) {
      std::vector<int> within = line_path(g, entry, hops[i].u);
      for (std::size_t j = 0; j + 1 < within.size(); ++j)
        cycle.push_back(g.name(within[j]));
      cycle.push_back(g.name(hops[i].u));
      entry = hops[i].v;
    }
    cycle.push_back(cycle.front());
    throw NotAChainGraphError(
        "not a chain graph: semi-directed cycle " + format_cycle(g, cycle),
        cycle);
  }

  std::vector<NodeSet> chain(k);
  std::vector<int> comp_pos(g.size());
  for (int i = 0; i < k; ++i) chain[position[i]] = comps[i];
  for (int v = 0; v < g.size(); ++v) comp_pos[v] = position[comp_of[v]];
  return ChainGraph(g, std::move(chain), std::move(comp_pos));
}

NodeSet parents(const ChainGraph& g, const NodeSet& a) {
  NodeSet out;
  for (const Edge& e : g.graph().arrows())
    if (contains(a, e.v) && !contains(a, e.u)) insert_node(out, e.u);
  return out;
}

NodeSet ancestors(const ChainGraph& g, const NodeSet& a) {
  const HybridGraph& h = g.graph();
  std::vector<char> seen(h.size(), 0);
  std::deque<int> queue;
  for (int v : a) {
    seen[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : h.neighbors(x)) {
      if (seen[y]) continue;
      // y reaches x in one step if y -- x or y -> x
      if (h.has_line(x, y) || h.has_arrow(y, x)) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  NodeSet out;
  for (int v = 0; v < h.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

HybridGraph induced_subgraph(const HybridGraph& g, const NodeSet& a) {
  if (a.empty()) throw EmptyNodeSetError("induced subgraph over empty set");
  for (int v : a)
    if (v < 0 || v >= g.size()) throw UnknownNodeError("node index out of range");
  HybridGraph sub(node_names(g, a));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      // a is sorted, so local indices line up with the sorted name table
      switch (g.kind(a[i], a[j])) {
        case EdgeKind::None:
          break;
        case EdgeKind::Line:
          sub.add_line(static_cast<int>(i), static_cast<int>(j));
          break;
        case EdgeKind::Forward:
          sub.add_arrow(static_cast<int>(i), static_cast<int>(j));
          break;
        case EdgeKind::Backward:
          sub.add_arrow(static_cast<int>(j), static_cast<int>(i));
          break;
      }
    }
  }
  return sub;
}

UndirectedGraph underlying_graph(const HybridGraph& g) {
  UndirectedGraph out(g.names());
  for (const Edge& e : g.edges()) out.add_line(e.u, e.v);
  return out;
}

UndirectedGraph moral_graph(const ChainGraph& g) {
  UndirectedGraph out = underlying_graph(g.graph());
  for (int i = 0; i < g.component_count(); ++i) {
    NodeSet pa = parents(g, g.component(i));
    for (std::size_t x = 0; x < pa.size(); ++x)
      for (std::size_t y = x + 1; y < pa.size(); ++y)
        out.add_line(pa[x], pa[y]);
  }
  return out;
}

UndirectedGraph closure_graph(const ChainGraph& g, const NodeSet& component) {
  const auto& chain = g.chain();
  if (std::find(chain.begin(), chain.end(), component) == chain.end())
    throw NotAComponentError("node set is not a component of the graph");
  NodeSet pa = parents(g, component);
  NodeSet scope = union_of(component, pa);
  UndirectedGraph out(node_names(g.graph(), scope));
  for (std::size_t i = 0; i < scope.size(); ++i)
    for (std::size_t j = i + 1; j < scope.size(); ++j)
      if (g.graph().adjacent(scope[i], scope[j]))
        out.add_line(static_cast<int>(i), static_cast<int>(j));
  for (int x : pa) {
    for (int y : pa) {
      if (x >= y) continue;
      int lx = static_cast<int>(
          std::lower_bound(scope.begin(), scope.end(), x) - scope.begin());
      int ly = static_cast<int>(
          std::lower_bound(scope.begin(), scope.end(), y) - scope.begin());
      out.add_line(lx, ly);
    }
  }
  return out;
}

HybridGraph to_hybrid(const UndirectedGraph& g) {
  HybridGraph out(g.names());
  for (const auto& [u, v] : g.lines()) out.add_line(u, v);
  return out;
}

ChainGraph to_chain(const UndirectedGraph& g) {
  return validate_chain_graph(to_hybrid(g));
}

}  // namespace cg
