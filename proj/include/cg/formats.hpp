#ifndef CG_FORMATS_HPP_
#define CG_FORMATS_HPP_

#include <string>
#include <vector>

#include "cg/equivalence.hpp"
#include "cg/graph.hpp"
#include "cg/tables.hpp"

namespace cg {

// Graph text format: one statement per line.
//   u -- v     line
//   u -> v     arrow
//   node u     isolated node
// '#' starts a comment; duplicate or conflicting pair declarations are
// parse errors.  Serialization lists nodes lexicographically, then edges by
// canonical pair.
HybridGraph parse_graph(const std::string& text);
std::string serialize_graph(const HybridGraph& g);
std::string serialize_graph(const UndirectedGraph& g);

// Distribution file: header "vars a:2 b:2 c:3" (sorted), then one
// probability per line in row-major order; values written with 17
// significant digits.
DiscreteDistribution parse_distribution(const std::string& text);
std::string serialize_distribution(const DiscreteDistribution& p);

// Expert-block file: one block per line,
//   expert: C = a,b,c ; pa = d ; lines = a-b, b-c, d-a
// 'lines' lists every edge of the block's local structure.
std::vector<ExpertBlock> parse_expert_blocks(const std::string& text);
std::string serialize_expert_blocks(const std::vector<ExpertBlock>& blocks);

// Comma-separated node list against a graph's node table.
NodeSet parse_node_list(const HybridGraph& g, const std::string& list);
std::string format_node_set(const std::vector<std::string>& names);

std::string read_file(const std::string& path);

}  // namespace cg

#endif  // CG_FORMATS_HPP_
