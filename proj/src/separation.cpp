#include "cg/separation.hpp"

#include <array>
#include <deque>

#include "cg/errors.hpp"

namespace cg {

namespace {

enum Tag : int { kU = 0, kV = 1, kW = 2, kZ = 3 };

struct Engine {
  const HybridGraph& h;
  std::vector<char> in_c;
  std::array<std::vector<char>, 4> member;
  std::vector<std::pair<int, Tag>> worklist;

  explicit Engine(const ChainGraph& g, const NodeSet& c) : h(g.graph()) {
    in_c.assign(h.size(), 0);
    for (int v : c) in_c[v] = 1;
    for (auto& m : member) m.assign(h.size(), 0);
  }

  void add(int node, Tag tag) {
    if (member[tag][node]) return;
    member[tag][node] = 1;
    worklist.emplace_back(node, tag);
  }

  // Applies every rule whose premise mentions membership of x in the given
  // set; each application reads only x's incident edges and the current
  // memberships of their endpoints.
  void visit(int x, Tag tag) {
    switch (tag) {
      case kU:
        for (int y : h.neighbors(x)) {
          if (h.has_line(x, y) && !in_c[y]) add(y, kU);   // rule 1
          if (h.has_arrow(y, x) && !in_c[y]) add(y, kU);  // rule 2
          if (h.has_arrow(x, y)) {
            if (!in_c[y]) add(y, kV);                     // rule 3
            add(y, kW);                                   // rule 5
          }
        }
        break;
      case kV:
        for (int y : h.neighbors(x)) {
          if (h.has_line(x, y) && !in_c[y]) add(y, kV);   // rule 4
          if (h.has_arrow(x, y)) {
            if (!in_c[y]) add(y, kV);                     // rule 3
            add(y, kW);                                   // rule 5
          }
        }
        break;
      case kW:
        for (int y : h.neighbors(x))
          if (h.has_line(x, y)) add(y, kW);               // rule 6
        if (in_c[x]) add(x, kZ);                          // rule 7
        break;
      case kZ:
        for (int y : h.neighbors(x)) {
          if (h.has_line(x, y)) add(y, kZ);               // rule 8
          if (h.has_arrow(y, x) && !in_c[y]) add(y, kU);  // rule 9
        }
        break;
    }
  }

  NodeSet collect(Tag tag) const {
    NodeSet out;
    for (int v = 0; v < h.size(); ++v)
      if (member[tag][v]) out.push_back(v);
    return out;
  }
};

ReachResult run(const ChainGraph& g, const NodeSet& a, const NodeSet& c,
                const std::function<std::size_t(std::size_t)>& pick) {
  if (a.empty()) throw InvalidQueryError("query set A must be non-empty");
  if (!disjoint(a, c))
    throw InvalidQueryError("query sets A and C must be disjoint");
  for (const NodeSet* s : {&a, &c})
    for (int v : *s)
      if (v < 0 || v >= g.size())
        throw InvalidQueryError("query node out of range");

  Engine e(g, c);
  for (int v : a) e.add(v, kU);
  while (!e.worklist.empty()) {
    std::size_t i = pick(e.worklist.size());
    auto [node, tag] = e.worklist[i];
    e.worklist[i] = e.worklist.back();
    e.worklist.pop_back();
    e.visit(node, tag);
  }

  ReachResult out;
  out.u = e.collect(kU);
  out.v = e.collect(kV);
  out.w = e.collect(kW);
  out.z = e.collect(kZ);
  NodeSet excluded = union_of(union_of(out.u, out.v), c);
  for (int v = 0; v < g.size(); ++v)
    if (!contains(excluded, v)) out.b.push_back(v);
  return out;
}

}  // namespace

ReachResult reach(const ChainGraph& g, const NodeSet& a, const NodeSet& c) {
  return run(g, a, c, [](std::size_t) { return std::size_t{0}; });
}

ReachResult reach_with_schedule(
    const ChainGraph& g, const NodeSet& a, const NodeSet& c,
    const std::function<std::size_t(std::size_t)>& pick) {
  return run(g, a, c, pick);
}

bool moralization_represented(const ChainGraph& g, const Triplet& t) {
  validate_triplet(g.size(), t);
  NodeSet an = ancestors(g, union_of(union_of(t.a, t.b), t.c));
  ChainGraph sub = validate_chain_graph(induced_subgraph(g.graph(), an));
  UndirectedGraph m = moral_graph(sub);

  std::vector<char> blocked(m.size(), 0);
  for (int v : t.c) blocked[m.index_of(g.name(v))] = 1;
  std::vector<char> seen(m.size(), 0);
  std::deque<int> queue;
  for (int v : t.a) {
    int lv = m.index_of(g.name(v));
    seen[lv] = 1;
    queue.push_back(lv);
  }
  std::vector<char> target(m.size(), 0);
  for (int v : t.b) target[m.index_of(g.name(v))] = 1;

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (target[x]) return false;
    if (blocked[x]) continue;  // paths may not pass through C
    for (int y : m.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

bool c_separated(const ChainGraph& g, const Triplet& t) {
  validate_triplet(g.size(), t);
  ReachResult r = reach(g, t.a, t.c);
  return disjoint(t.b, union_of(r.u, r.v));
}

}  // namespace cg
