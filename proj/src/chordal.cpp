#include "cg/chordal.hpp"

#include <algorithm>

#include "cg/errors.hpp"

namespace cg {

namespace {

// Pivoted Bron-Kerbosch over the candidate set p, excluded set x.
void expand_cliques(const UndirectedGraph& g, NodeSet r, NodeSet p, NodeSet x,
                    std::vector<NodeSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(std::move(r));
    return;
  }
  // pivot: candidate or excluded node with most neighbors in p
  int pivot = -1;
  std::size_t best = 0;
  for (const NodeSet* side : {&p, &x}) {
    for (int u : *side) {
      std::size_t cnt = 0;
      for (int v : p)
        if (g.has_line(u, v)) ++cnt;
      if (pivot < 0 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  NodeSet branch;
  for (int v : p)
    if (pivot < 0 || !g.has_line(pivot, v)) branch.push_back(v);
  for (int v : branch) {
    NodeSet nv;
    for (int u : g.neighbors(v)) nv.push_back(u);
    NodeSet r2 = r;
    insert_node(r2, v);
    expand_cliques(g, std::move(r2), intersection_of(p, nv),
                   intersection_of(x, nv), out);
    p.erase(std::find(p.begin(), p.end(), v));
    insert_node(x, v);
  }
}

}  // namespace

bool is_complete(const UndirectedGraph& g, const NodeSet& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!g.has_line(a[i], a[j])) return false;
  return true;
}

std::vector<NodeSet> cliques(const UndirectedGraph& g) {
  std::vector<NodeSet> out;
  expand_cliques(g, {}, g.all_nodes(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_decomposable(const UndirectedGraph& g) {
  int n = g.size();
  if (n <= 1) return true;
  // Maximum cardinality search; g is chordal iff for every visited node its
  // already-visited neighbors form a complete set.
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!visited[u] && (v < 0 || weight[u] > weight[v])) v = u;
    NodeSet earlier;
    for (int u : g.neighbors(v))
      if (visited[u]) earlier.push_back(u);
    if (!is_complete(g, earlier)) return false;
    visited[v] = 1;
    for (int u : g.neighbors(v))
      if (!visited[u]) ++weight[u];
  }
  return true;
}

CliqueOrdering rip_ordering(const UndirectedGraph& g, const NodeSet& start) {
  std::vector<NodeSet> ks = cliques(g);
  if (std::find(ks.begin(), ks.end(), start) == ks.end())
    throw NotACliqueError("start set is not a clique of the graph");

  // Depth-first search over admissible continuations, lexicographically
  // least next clique first.  For a decomposable graph the first branch
  // already completes; backtracking only matters as a safety net.
  std::size_t k = ks.size();
  std::vector<int> chosen;
  std::vector<char> used(k, 0);
  std::size_t start_idx = std::find(ks.begin(), ks.end(), start) - ks.begin();
  chosen.push_back(static_cast<int>(start_idx));
  used[start_idx] = 1;

  std::vector<NodeSet> covered{start};  // running union, one entry per depth

  struct Frame {
    std::size_t next_candidate = 0;
  };
  std::vector<Frame> frames{Frame{}};

  while (chosen.size() < k) {
    Frame& f = frames.back();
    bool advanced = false;
    for (std::size_t i = f.next_candidate; i < k; ++i) {
      if (used[i]) continue;
      NodeSet sep = intersection_of(ks[i], covered.back());
      bool admissible = false;
      for (int j : chosen) {
        if (is_subset(sep, ks[j])) {
          admissible = true;
          break;
        }
      }
      if (!admissible) continue;
      f.next_candidate = i + 1;
      chosen.push_back(static_cast<int>(i));
      used[i] = 1;
      covered.push_back(union_of(covered.back(), ks[i]));
      frames.push_back(Frame{});
      advanced = true;
      break;
    }
    if (!advanced) {
      if (chosen.size() == 1)
        throw NotDecomposableError(
            "graph has no running-intersection ordering");
      used[chosen.back()] = 0;
      chosen.pop_back();
      covered.pop_back();
      frames.pop_back();
    }
  }

  CliqueOrdering out;
  NodeSet running;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const NodeSet& ki = ks[chosen[i]];
    if (i > 0) out.separators.push_back(intersection_of(ki, running));
    running = union_of(running, ki);
    out.cliques.push_back(ki);
  }
  return out;
}

SeparatorMultiset separator_multiset(const CliqueOrdering& ordering) {
  SeparatorMultiset out;
  for (const NodeSet& s : ordering.separators) ++out[s];
  return out;
}

}  // namespace cg
