#ifndef CG_NODESET_HPP_
#define CG_NODESET_HPP_

#include <algorithm>
#include <vector>

namespace cg {

// A set of node indices, kept sorted and duplicate-free.  Node indices are
// positions in a graph's lexicographically sorted name table, so index
// order coincides with name order.
using NodeSet = std::vector<int>;

inline bool contains(const NodeSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline NodeSet& insert_node(NodeSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
  return s;
}

inline NodeSet union_of(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline NodeSet intersection_of(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline NodeSet difference_of(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool is_subset(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(const NodeSet& a, const NodeSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

inline NodeSet normalized(NodeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace cg

#endif  // CG_NODESET_HPP_
