#ifndef CG_EQUIVALENCE_HPP_
#define CG_EQUIVALENCE_HPP_

#include <string>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

// An induced subgraph p -> s_1 - ... - s_m <- q with no other edges among
// its nodes.  Canonical form: parent_small < parent_large and the section
// runs from parent_small's child to parent_large's child.
struct Complex {
  int parent_small = 0;
  int parent_large = 0;
  std::vector<int> section;

  friend bool operator==(const Complex&, const Complex&) = default;
  friend auto operator<=>(const Complex&, const Complex&) = default;
};

struct Arrow {
  int tail = 0;
  int head = 0;
};

// One expert's block: an exclusive competence area, the outside influence
// set, and the declared undirected structure over their union (influence
// complete, competence connected within itself).
struct ExpertBlock {
  std::vector<std::string> competence;
  std::vector<std::string> influence;
  UndirectedGraph local;  // over competence u influence
};

// All complexes, sorted in canonical form.
std::vector<Complex> complexes(const ChainGraph& g);

// Same underlying graph and same complexes (same node set required).
bool markov_equivalent(const ChainGraph& g1, const ChainGraph& g2);

// outer covers inner iff outer.tail is an ancestor of inner.tail and
// inner.head is an ancestor of outer.head.
bool covers(const ChainGraph& g, Arrow outer, Arrow inner);

// True iff the arrow covers some complex arrow.
bool is_protected(const ChainGraph& g, Arrow arrow);

// True iff every arrow is protected.
bool is_largest(const ChainGraph& g);

// The largest chain graph of g's Markov equivalence class: keeps exactly
// the protected arrows, turns every other arrow into a line.
ChainGraph largest_chain_graph(const ChainGraph& g);

// True iff every component's closure graph is decomposable.
bool equivalent_to_bn(const ChainGraph& g);

// Directs all lines along the block ordering derived from per-component
// clique orderings; the result is an acyclic directed graph Markov
// equivalent to g.  Throws NotBnEquivalentError.
ChainGraph extract_equivalent_dag(const ChainGraph& g);

// Builds the chain graph whose components are the competence areas, with
// each block's closure graph equal to its declared local structure.
ChainGraph compose_expert_model(const std::vector<ExpertBlock>& blocks);

}  // namespace cg

#endif  // CG_EQUIVALENCE_HPP_
