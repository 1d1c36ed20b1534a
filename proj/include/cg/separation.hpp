#ifndef CG_SEPARATION_HPP_
#define CG_SEPARATION_HPP_

#include <functional>

#include "cg/graph.hpp"

namespace cg {

// Result of a propagation run: the maximal separated set B together with
// the frozen fixpoint of the four working sets.
//   U u V  -- nodes joined to A by a superactive route
//   W      -- sections entered by an arrow out of U u V
//   Z      -- those sections that hit the conditioning set
struct ReachResult {
  NodeSet b;
  NodeSet u, v, w, z;
};

// Least fixpoint of the propagation rules started from U = A with the
// given conditioning set C (disjoint from A, which must be non-empty).
// Returns B = N \ (U u V u C), the unique maximal set with <A, B | C>
// represented.  Throws InvalidQueryError.
ReachResult reach(const ChainGraph& g, const NodeSet& a, const NodeSet& c);

// Same fixpoint under a caller-chosen worklist schedule; pick(n) must
// return an index in [0, n).  The rules are monotone, so every schedule
// yields the same result.
ReachResult reach_with_schedule(const ChainGraph& g, const NodeSet& a,
                                const NodeSet& c,
                                const std::function<std::size_t(std::size_t)>& pick);

// True iff C separates A from B in the moral graph of the subgraph induced
// by the ancestors of A u B u C.
bool moralization_represented(const ChainGraph& g, const Triplet& t);

// True iff no superactive route joins A and B given C; computed by the
// propagation run.
bool c_separated(const ChainGraph& g, const Triplet& t);

}  // namespace cg

#endif  // CG_SEPARATION_HPP_
