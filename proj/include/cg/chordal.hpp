#ifndef CG_CHORDAL_HPP_
#define CG_CHORDAL_HPP_

#include <map>
#include <vector>

#include "cg/graph.hpp"

namespace cg {

// A clique sequence K_1..K_k with the running intersection property and the
// derived separators S_i = K_i n (K_1 u ... u K_{i-1}) for i >= 2.
struct CliqueOrdering {
  std::vector<NodeSet> cliques;
  std::vector<NodeSet> separators;  // size = cliques.size() - 1 (or 0)
};

// Separator node sets with their number of occurrences; ordering-invariant
// for a decomposable graph.
using SeparatorMultiset = std::map<NodeSet, int>;

// True iff every pair of distinct nodes of a is joined by a line.
bool is_complete(const UndirectedGraph& g, const NodeSet& a);

// All maximal complete sets, sorted lexicographically.  A graph with no
// lines yields all singletons.
std::vector<NodeSet> cliques(const UndirectedGraph& g);

// Maximum-cardinality-search chordality test.
bool is_decomposable(const UndirectedGraph& g);

// A running-intersection ordering starting at the given clique; among
// admissible next cliques the lexicographically least is taken.  Throws
// NotACliqueError / NotDecomposableError.
CliqueOrdering rip_ordering(const UndirectedGraph& g, const NodeSet& start);

SeparatorMultiset separator_multiset(const CliqueOrdering& ordering);

}  // namespace cg

#endif  // CG_CHORDAL_HPP_
