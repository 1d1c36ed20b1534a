#include "cg/equivalence.hpp"

#include <algorithm>
#include <set>

#include "cg/chordal.hpp"
#include "cg/errors.hpp"

namespace cg {

namespace {

// Grows induced line paths from x's child; every time the path tip is a
// child of y, a complex is emitted.  Extension keeps the path induced and
// keeps x away from every node but the first; y touching the tip ends the
// growth, since extending would leave y adjacent to an interior node.
void grow_sections(const ChainGraph& g, int x, int y, std::vector<int>& path,
                   std::vector<char>& on_path, std::set<Complex>& out) {
  const HybridGraph& h = g.graph();
  int tip = path.back();

  if (h.has_arrow(y, tip))
    out.insert(Complex{std::min(x, y), std::max(x, y), path});
  if (h.adjacent(y, tip)) return;

  for (int next : h.neighbors(tip)) {
    if (!h.has_line(tip, next) || on_path[next]) continue;
    if (h.adjacent(x, next)) continue;
    bool induced = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (h.adjacent(next, path[i])) {
        induced = false;
        break;
      }
    }
    if (!induced) continue;
    path.push_back(next);
    on_path[next] = 1;
    grow_sections(g, x, y, path, on_path, out);
    on_path[next] = 0;
    path.pop_back();
  }
}

std::vector<Arrow> complex_arrows(const ChainGraph& g) {
  std::vector<Arrow> out;
  for (const Complex& c : complexes(g)) {
    out.push_back({c.parent_small, c.section.front()});
    out.push_back({c.parent_large, c.section.back()});
  }
  return out;
}

bool covers_any(const ChainGraph& g, Arrow arrow,
                const std::vector<Arrow>& targets) {
  NodeSet above_head = ancestors(g, {arrow.head});
  for (const Arrow& t : targets) {
    if (contains(above_head, t.head) &&
        contains(ancestors(g, {t.tail}), arrow.tail))
      return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> complexes(const ChainGraph& g) {
  const HybridGraph& h = g.graph();
  std::set<Complex> found;
  for (int i = 0; i < g.component_count(); ++i) {
    const NodeSet& comp = g.component(i);
    NodeSet pa = parents(g, comp);
    for (std::size_t xi = 0; xi < pa.size(); ++xi) {
      for (std::size_t yi = 0; yi < pa.size(); ++yi) {
        if (xi == yi) continue;
        int x = pa[xi];
        int y = pa[yi];
        if (h.adjacent(x, y)) continue;
        // canonical orientation: start sections at the smaller parent's child
        if (x > y) continue;
        for (int s : comp) {
          if (!h.has_arrow(x, s)) continue;
          std::vector<int> path{s};
          std::vector<char> on_path(h.size(), 0);
          on_path[s] = 1;
          grow_sections(g, x, y, path, on_path, found);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

bool markov_equivalent(const ChainGraph& g1, const ChainGraph& g2) {
  if (g1.names() != g2.names())
    throw NodeSetMismatchError("graphs are over different node sets");
  // identical name tables make node indices directly comparable
  if (!(underlying_graph(g1.graph()) == underlying_graph(g2.graph())))
    return false;
  return complexes(g1) == complexes(g2);
}

bool covers(const ChainGraph& g, Arrow outer, Arrow inner) {
  return contains(ancestors(g, {inner.tail}), outer.tail) &&
         contains(ancestors(g, {outer.head}), inner.head);
}

bool is_protected(const ChainGraph& g, Arrow arrow) {
  if (!g.graph().has_arrow(arrow.tail, arrow.head))
    throw Error("no arrow " + g.name(arrow.tail) + " -> " +
                g.name(arrow.head) + " in the graph");
  return covers_any(g, arrow, complex_arrows(g));
}

bool is_largest(const ChainGraph& g) {
  std::vector<Arrow> targets = complex_arrows(g);
  for (const Edge& e : g.graph().arrows())
    if (!covers_any(g, Arrow{e.u, e.v}, targets)) return false;
  return true;
}

ChainGraph largest_chain_graph(const ChainGraph& g) {
  // The arrows shared by the whole equivalence class are exactly the
  // protected arrows; everything else becomes a line.
  std::vector<Arrow> targets = complex_arrows(g);
  HybridGraph out(g.names());
  for (const Edge& e : g.graph().edges()) {
    if (!e.line && covers_any(g, Arrow{e.u, e.v}, targets))
      out.add_arrow(e.u, e.v);
    else
      out.add_line(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  return validate_chain_graph(out);
}

bool equivalent_to_bn(const ChainGraph& g) {
  for (int i = 0; i < g.component_count(); ++i)
    if (!is_decomposable(closure_graph(g, g.component(i)))) return false;
  return true;
}

ChainGraph extract_equivalent_dag(const ChainGraph& g) {
  if (!equivalent_to_bn(g))
    throw NotBnEquivalentError(
        "a closure graph is not decomposable; no equivalent directed graph");

  // Total node order: components in chain order; within a component the
  // clique blocks of a running-intersection ordering whose first clique is
  // the least clique containing pa(C).
  std::vector<int> order;
  order.reserve(g.size());
  for (int ci = 0; ci < g.component_count(); ++ci) {
    const NodeSet& comp = g.component(ci);
    UndirectedGraph h = closure_graph(g, comp);
    NodeSet pa_local =
        node_indices(h, node_names(g.graph(), parents(g, comp)));
    NodeSet start;
    for (const NodeSet& k : cliques(h)) {
      if (is_subset(pa_local, k)) {
        start = k;
        break;  // cliques are sorted, first hit is lexicographically least
      }
    }
    CliqueOrdering ord = rip_ordering(h, start);
    NodeSet placed = pa_local;
    for (const NodeSet& k : ord.cliques) {
      for (int v : difference_of(k, placed))  // block, in node order
        order.push_back(g.index_of(h.name(v)));
      placed = union_of(placed, k);
    }
  }

  std::vector<int> rank(g.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = int(i);

  HybridGraph out(g.names());
  for (const Edge& e : g.graph().edges()) {
    if (!e.line)
      out.add_arrow(e.u, e.v);
    else if (rank[e.u] < rank[e.v])
      out.add_arrow(e.u, e.v);
    else
      out.add_arrow(e.v, e.u);
  }
  return validate_chain_graph(out);
}

ChainGraph compose_expert_model(const std::vector<ExpertBlock>& blocks) {
  std::vector<std::string> all_names;
  std::set<std::string> seen;
  for (const ExpertBlock& b : blocks) {
    for (const auto& n : b.competence) {
      if (!seen.insert(n).second)
        throw OverlappingCompetenceError("competence areas overlap at '" + n +
                                         "'");
      all_names.push_back(n);
    }
  }

  std::set<std::string> earlier;
  for (const ExpertBlock& b : blocks) {
    for (const auto& n : b.influence)
      if (!earlier.count(n))
        throw InfluenceNotEarlierError(
            "influence node '" + n + "' is not in any earlier competence");
    earlier.insert(b.competence.begin(), b.competence.end());

    // local structure must be exactly over competence u influence
    std::vector<std::string> expect(b.competence.begin(), b.competence.end());
    expect.insert(expect.end(), b.influence.begin(), b.influence.end());
    std::sort(expect.begin(), expect.end());
    if (b.local.names() != expect)
      throw NodeSetMismatchError(
          "local structure nodes differ from competence u influence");

    NodeSet pa_local = node_indices(b.local, b.influence);
    if (!is_complete(b.local, pa_local))
      throw InfluenceNotCompleteError(
          "influence set is not complete in the local structure");

    NodeSet comp_local = node_indices(b.local, b.competence);
    if (!comp_local.empty()) {
      // competence must be line-connected within itself
      std::vector<int> stack{comp_local.front()};
      NodeSet reached{comp_local.front()};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : b.local.neighbors(x)) {
          if (contains(comp_local, y) && !contains(reached, y)) {
            insert_node(reached, y);
            stack.push_back(y);
          }
        }
      }
      if (reached != comp_local)
        throw CompetenceDisconnectedError(
            "competence area is not connected in the local structure");
    } else {
      throw EmptyNodeSetError("competence area must be non-empty");
    }

    for (int p : pa_local) {
      bool touches = false;
      for (int y : b.local.neighbors(p))
        if (contains(comp_local, y)) touches = true;
      if (!touches)
        throw InfluenceDetachedError("influence node '" + b.local.name(p) +
                                     "' has no edge into the competence");
    }
  }

  HybridGraph g(all_names);
  for (const ExpertBlock& b : blocks) {
    std::set<std::string> comp_names(b.competence.begin(), b.competence.end());
    for (const auto& [u, v] : b.local.lines()) {
      bool u_in = comp_names.count(b.local.name(u)) > 0;
      bool v_in = comp_names.count(b.local.name(v)) > 0;
      if (u_in && v_in)
        g.add_line(b.local.name(u), b.local.name(v));
      else if (!u_in && v_in)
        g.add_arrow(b.local.name(u), b.local.name(v));
      else if (u_in && !v_in)
        g.add_arrow(b.local.name(v), b.local.name(u));
      // influence-internal edges are dropped
    }
  }
  return validate_chain_graph(g);
}

}  // namespace cg
