#ifndef CG_TESTS_HELPERS_HPP_
#define CG_TESTS_HELPERS_HPP_

// Shared fixtures, generators and independent brute-force oracles.  The
// oracles deliberately avoid the library's algorithms: cycle search walks
// routes directly, cliques come from subset enumeration, orderings from
// permutations, marginals from naive summation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cg/errors.hpp"
#include "cg/formats.hpp"
#include "cg/graph.hpp"
#include "cg/tables.hpp"

namespace cgtest {

using namespace cg;

inline std::string data_path(const std::string& name) {
  return std::string(CG_TEST_DATA_DIR) + "/" + name;
}

inline ChainGraph load_fixture(const std::string& name) {
  return validate_chain_graph(parse_graph(read_file(data_path(name))));
}

inline HybridGraph graph_from(const std::string& text) {
  return parse_graph(text);
}

inline ChainGraph chain_from(const std::string& text) {
  return validate_chain_graph(parse_graph(text));
}

inline NodeSet nodes(const HybridGraph& g, const std::string& csv) {
  return csv.empty() ? NodeSet{} : parse_node_list(g, csv);
}

inline NodeSet nodes(const ChainGraph& g, const std::string& csv) {
  return nodes(g.graph(), csv);
}

inline std::string csv(const HybridGraph& g, const NodeSet& s) {
  return format_node_set(node_names(g, s));
}

inline std::string csv(const ChainGraph& g, const NodeSet& s) {
  return csv(g.graph(), s);
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

// Visits every hybrid graph over n named nodes: each unordered pair is
// absent, a line, or an arrow in either direction.
inline void for_each_hybrid_graph(
    int n, const std::function<void(const HybridGraph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::string> names = letter_names(n);
  std::vector<int> choice(pairs.size(), 0);
  while (true) {
    HybridGraph g(names);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      switch (choice[i]) {
        case 0: break;
        case 1: g.add_line(u, v); break;
        case 2: g.add_arrow(u, v); break;
        case 3: g.add_arrow(v, u); break;
      }
    }
    fn(g);
    std::size_t j = 0;
    while (j < choice.size() && choice[j] == 3) choice[j++] = 0;
    if (j == choice.size()) return;
    ++choice[j];
  }
}

inline void for_each_undirected_graph(
    int n, const std::function<void(const UndirectedGraph&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::string> names = letter_names(n);
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    UndirectedGraph g(names);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) g.add_line(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

// Visits every chain graph over n nodes.
inline void for_each_chain_graph(
    int n, const std::function<void(const ChainGraph&)>& fn) {
  for_each_hybrid_graph(n, [&](const HybridGraph& g) {
    try {
      fn(validate_chain_graph(g));
    } catch (const NotAChainGraphError&) {
    }
  });
}

// Visits every valid triplet over n nodes once (A/B swaps deduplicated:
// the least node of A u B sits in A).
inline void for_each_triplet(int n,
                             const std::function<void(const Triplet&)>& fn) {
  std::vector<int> assign(n, 0);  // 0 out, 1 A, 2 B, 3 C
  while (true) {
    Triplet t;
    int first_ab = 0;
    for (int v = 0; v < n; ++v) {
      if (assign[v] == 1) {
        t.a.push_back(v);
        if (!first_ab) first_ab = 1;
      } else if (assign[v] == 2) {
        t.b.push_back(v);
        if (!first_ab) first_ab = 2;
      } else if (assign[v] == 3) {
        t.c.push_back(v);
      }
    }
    if (!t.a.empty() && !t.b.empty() && first_ab == 1) fn(t);
    int j = n - 1;
    while (j >= 0 && assign[j] == 3) assign[j--] = 0;
    if (j < 0) return;
    ++assign[j];
  }
}

// Seeded random chain graph by rejection; edge density ~1/2 before
// orientation.
inline ChainGraph random_chain_graph(std::mt19937_64& rng, int n) {
  std::vector<std::string> names = letter_names(n);
  while (true) {
    HybridGraph g(names);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2 == 0) continue;
        switch (rng() % 3) {
          case 0: g.add_line(u, v); break;
          case 1: g.add_arrow(u, v); break;
          case 2: g.add_arrow(v, u); break;
        }
      }
    }
    try {
      return validate_chain_graph(g);
    } catch (const NotAChainGraphError&) {
    }
  }
}

// ---------------------------------------------------------------------------
// Oracles

// Direct semi-directed cycle search: for every arrow u -> v, looks for a
// route v .. u whose steps are lines or forward arrows.
inline bool oracle_has_semidirected_cycle(const HybridGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.line) continue;
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{e.v};
    seen[e.v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == e.u) return true;
      for (int y : g.neighbors(x)) {
        if (!seen[y] && (g.has_line(x, y) || g.has_arrow(x, y))) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return false;
}

// Maximal complete sets by subset enumeration.
inline std::vector<NodeSet> oracle_cliques(const UndirectedGraph& g) {
  int n = g.size();
  std::vector<NodeSet> complete;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    NodeSet s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j)
        if (!g.has_line(s[i], s[j])) ok = false;
    if (ok) complete.push_back(s);
  }
  std::vector<NodeSet> out;
  for (const NodeSet& s : complete) {
    bool maximal = true;
    for (const NodeSet& t : complete)
      if (s != t && is_subset(s, t)) maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool rip_holds(const std::vector<NodeSet>& seq) {
  NodeSet covered = seq.empty() ? NodeSet{} : seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) {
    NodeSet sep = intersection_of(seq[i], covered);
    bool ok = false;
    for (std::size_t j = 0; j < i; ++j)
      if (is_subset(sep, seq[j])) ok = true;
    if (!ok) return false;
    covered = union_of(covered, seq[i]);
  }
  return true;
}

// Running-intersection ordering by exhaustive permutation search.
inline bool oracle_rip_exists(const UndirectedGraph& g) {
  std::vector<NodeSet> ks = oracle_cliques(g);
  std::sort(ks.begin(), ks.end());
  do {
    if (rip_holds(ks)) return true;
  } while (std::next_permutation(ks.begin(), ks.end()));
  return false;
}

// Naive summation marginal over raw loops.
inline std::vector<double> oracle_marginal(const DiscreteDistribution& p,
                                           const NodeSet& scope) {
  const DomainSpec& d = p.domain();
  std::size_t out_size = 1;
  for (int v : scope) out_size *= d.card(v);
  std::vector<double> out(out_size, 0.0);
  std::vector<int> state(d.size(), 0);
  std::size_t idx = 0;
  while (true) {
    std::size_t pos = 0;
    for (int v : scope) pos = pos * d.card(v) + state[v];
    out[pos] += p.at(idx);
    int j = d.size() - 1;
    while (j >= 0 && state[j] == d.card(j) - 1) state[j--] = 0;
    if (j < 0) break;
    ++state[j];
    ++idx;
  }
  return out;
}

inline std::uint64_t splitmix(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seeded strictly positive distribution (independent of the library's
// generators): normalized raw positives.
inline DiscreteDistribution random_distribution(const DomainSpec& d,
                                                std::uint64_t seed) {
  std::vector<double> vals(d.joint_size());
  double sum = 0.0;
  for (double& x : vals) {
    x = 0.05 + static_cast<double>(splitmix(seed) >> 11) * 0x1.0p-53;
    sum += x;
  }
  for (double& x : vals) x /= sum;
  return DiscreteDistribution(d, vals);
}

inline DomainSpec binary_domain(const std::vector<std::string>& vars) {
  std::vector<std::pair<std::string, int>> spec;
  for (const auto& v : vars) spec.emplace_back(v, 2);
  return DomainSpec(spec);
}

}  // namespace cgtest

#endif  // CG_TESTS_HELPERS_HPP_
