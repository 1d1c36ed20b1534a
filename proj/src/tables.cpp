#include "cg/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "cg/equivalence.hpp"
#include "cg/errors.hpp"
#include "cg/separation.hpp"

namespace cg {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 26;

// Positions of the elements of sub within the sorted superset.
NodeSet local_positions(const NodeSet& sub, const NodeSet& super) {
  NodeSet out;
  out.reserve(sub.size());
  for (int v : sub) {
    auto it = std::lower_bound(super.begin(), super.end(), v);
    if (it == super.end() || *it != v)
      throw ScopeMismatchError("node set is not contained in the scope");
    out.push_back(static_cast<int>(it - super.begin()));
  }
  return out;
}

void check_scope(const DomainSpec& d, const NodeSet& scope) {
  if (!scope.empty() && (scope.front() < 0 || scope.back() >= d.size()))
    throw ScopeMismatchError("scope index out of range for the domain");
}

std::vector<double> checked_values(const DomainSpec& d,
                                   std::vector<double> values,
                                   bool require_normalized) {
  if (values.size() != d.joint_size())
    throw ScopeMismatchError("table size does not match the domain");
  double sum = 0.0;
  for (double x : values) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw NotADistributionError("table values must be finite and >= 0");
    sum += x;
  }
  if (require_normalized && std::abs(sum - 1.0) > kConstructionTol)
    throw NotADistributionError("table does not sum to 1");
  return values;
}

DomainSpec domain_for(const ChainGraph& g, const DomainSpec& d) {
  if (d.vars() != g.names())
    throw DomainMismatchError("domain variables differ from the graph nodes");
  return d;
}

double uniform_01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

DomainSpec::DomainSpec(std::vector<std::pair<std::string, int>> vars) {
  std::sort(vars.begin(), vars.end());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0 && vars[i].first == vars[i - 1].first)
      throw DuplicateNodeError("duplicate variable '" + vars[i].first + "'");
    if (vars[i].second < 1)
      throw NotADistributionError("variable cardinality must be >= 1");
    vars_.push_back(vars[i].first);
    cards_.push_back(vars[i].second);
  }
  joint_size();  // size guard
}

int DomainSpec::index_of(std::string_view name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name)
    throw UnknownNodeError("unknown variable '" + std::string(name) + "'");
  return static_cast<int>(it - vars_.begin());
}

std::size_t DomainSpec::joint_size() const {
  std::size_t n = 1;
  for (int c : cards_) {
    n *= static_cast<std::size_t>(c);
    if (n > kMaxCells) throw Error("state space too large for dense tables");
  }
  return n;
}

std::size_t DomainSpec::joint_size(const NodeSet& scope) const {
  check_scope(*this, scope);
  std::size_t n = 1;
  for (int v : scope) {
    n *= static_cast<std::size_t>(cards_[v]);
    if (n > kMaxCells) throw Error("state space too large for dense tables");
  }
  return n;
}

DomainSpec DomainSpec::restrict_to(const NodeSet& scope) const {
  check_scope(*this, scope);
  DomainSpec out;
  for (int v : scope) {
    out.vars_.push_back(vars_[v]);
    out.cards_.push_back(cards_[v]);
  }
  return out;
}

std::vector<std::size_t> scope_strides(const DomainSpec& d,
                                       const NodeSet& scope) {
  check_scope(d, scope);
  std::vector<std::size_t> strides(d.size(), 0);
  std::size_t s = 1;
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    strides[*it] = s;
    s *= static_cast<std::size_t>(d.card(*it));
  }
  return strides;
}

bool next_state(const DomainSpec& d, std::vector<int>& state) {
  for (int j = d.size() - 1; j >= 0; --j) {
    if (++state[j] < d.card(j)) return true;
    state[j] = 0;
  }
  return false;
}

Factor::Factor(DomainSpec domain, std::vector<double> values)
    : domain_(std::move(domain)),
      values_(checked_values(domain_, std::move(values), false)) {}

DiscreteDistribution::DiscreteDistribution(DomainSpec domain,
                                           std::vector<double> values)
    : domain_(std::move(domain)),
      values_(checked_values(domain_, std::move(values), true)) {}

ConditionalTable::ConditionalTable(DomainSpec domain, NodeSet head,
                                   NodeSet tail, std::vector<double> values)
    : domain_(std::move(domain)),
      head_(std::move(head)),
      tail_(std::move(tail)),
      values_(checked_values(domain_, std::move(values), false)) {
  if (!disjoint(head_, tail_) ||
      union_of(head_, tail_).size() != static_cast<std::size_t>(domain_.size()))
    throw ScopeMismatchError("head and tail must partition the domain");
  // every tail-state row sums to one, except all-zero rows for tail states
  // that carry no mass
  std::vector<std::size_t> tail_strides = scope_strides(domain_, tail_);
  std::vector<double> row_sums(domain_.joint_size(tail_), 0.0);
  std::vector<int> state(domain_.size(), 0);
  std::size_t idx = 0;
  do {
    row_sums[project_state(tail_strides, state)] += values_[idx];
    ++idx;
  } while (next_state(domain_, state));
  for (double s : row_sums) {
    if (s != 0.0 && std::abs(s - 1.0) > kConstructionTol)
      throw NotADistributionError(
          "conditional rows must sum to one or be all zero");
  }
}

DiscreteDistribution marginal(const DiscreteDistribution& p, const NodeSet& a) {
  check_scope(p.domain(), a);
  DomainSpec sub = p.domain().restrict_to(a);
  std::vector<double> vals(sub.joint_size(), 0.0);
  std::vector<std::size_t> strides = scope_strides(p.domain(), a);
  std::vector<int> state(p.domain().size(), 0);
  std::size_t idx = 0;
  do {
    vals[project_state(strides, state)] += p.at(idx);
    ++idx;
  } while (next_state(p.domain(), state));
  return DiscreteDistribution(std::move(sub), std::move(vals));
}

ConditionalTable conditional(const DiscreteDistribution& p, const NodeSet& head,
                             const NodeSet& tail) {
  if (!disjoint(head, tail))
    throw ScopeMismatchError("conditional head and tail must be disjoint");
  NodeSet scope = union_of(head, tail);
  DiscreteDistribution m_scope = marginal(p, scope);
  DiscreteDistribution m_tail = marginal(p, tail);

  const DomainSpec& d = m_scope.domain();
  NodeSet tail_local = local_positions(tail, scope);
  std::vector<std::size_t> tail_strides = scope_strides(d, tail_local);
  std::vector<double> vals(d.joint_size(), 0.0);
  std::vector<int> state(d.size(), 0);
  std::size_t idx = 0;
  do {
    double denom = m_tail.at(project_state(tail_strides, state));
    vals[idx] = denom > 0.0 ? m_scope.at(idx) / denom : 0.0;
    ++idx;
  } while (next_state(d, state));
  return ConditionalTable(d, local_positions(head, scope), tail_local,
                          std::move(vals));
}

bool ci_holds(const DiscreteDistribution& p, const Triplet& t, double tol) {
  validate_triplet(p.domain().size(), t);
  NodeSet abc = union_of(union_of(t.a, t.b), t.c);
  DiscreteDistribution m_abc = marginal(p, abc);
  const DomainSpec& d = m_abc.domain();

  NodeSet la = local_positions(t.a, abc);
  NodeSet lc = local_positions(t.c, abc);
  NodeSet lac = union_of(la, lc);
  NodeSet all(d.size());
  std::iota(all.begin(), all.end(), 0);
  NodeSet lbc = difference_of(all, la);

  DiscreteDistribution m_bc = marginal(m_abc, lbc);
  DiscreteDistribution m_ac = marginal(m_abc, lac);
  DiscreteDistribution m_c = marginal(m_abc, lc);

  std::vector<std::size_t> s_bc = scope_strides(d, lbc);
  std::vector<std::size_t> s_ac = scope_strides(d, lac);
  std::vector<std::size_t> s_c = scope_strides(d, lc);

  std::vector<int> state(d.size(), 0);
  std::size_t idx = 0;
  do {
    double pbc = m_bc.at(project_state(s_bc, state));
    if (pbc > 0.0) {
      double lhs = m_abc.at(idx) / pbc;
      double pc = m_c.at(project_state(s_c, state));
      double rhs = m_ac.at(project_state(s_ac, state)) / pc;
      if (std::abs(lhs - rhs) > tol) return false;
    }
    ++idx;
  } while (next_state(d, state));
  return true;
}

DiscreteDistribution build_from_factors(
    const ChainGraph& g, const std::vector<std::vector<Factor>>& factors) {
  if (static_cast<int>(factors.size()) != g.component_count())
    throw ScopeMismatchError("one factor list per chain component expected");

  // Assemble the global domain from the factor scopes; every node is
  // covered because closure cliques cover each component and its parents.
  std::map<std::string, int> cards;
  for (const auto& comp_factors : factors) {
    for (const Factor& f : comp_factors) {
      for (int i = 0; i < f.domain().size(); ++i) {
        auto [it, inserted] =
            cards.emplace(f.domain().var(i), f.domain().card(i));
        if (!inserted && it->second != f.domain().card(i))
          throw DomainMismatchError("conflicting cardinalities for '" +
                                    f.domain().var(i) + "'");
      }
    }
  }
  DomainSpec domain({cards.begin(), cards.end()});
  if (domain.vars() != g.names())
    throw DomainMismatchError("factor scopes do not cover the graph nodes");

  std::vector<double> values(domain.joint_size(), 1.0);
  for (int ci = 0; ci < g.component_count(); ++ci) {
    const NodeSet& comp = g.component(ci);
    UndirectedGraph h = closure_graph(g, comp);
    std::vector<NodeSet> hk = cliques(h);

    // match factors to cliques by scope
    std::vector<const Factor*> by_clique(hk.size(), nullptr);
    if (factors[ci].size() != hk.size())
      throw ScopeMismatchError("component needs one factor per closure clique");
    for (const Factor& f : factors[ci]) {
      auto names = f.domain().vars();
      bool placed = false;
      for (std::size_t k = 0; k < hk.size(); ++k) {
        if (node_names(h, hk[k]) == names && !by_clique[k]) {
          by_clique[k] = &f;
          placed = true;
          break;
        }
      }
      if (!placed)
        throw ScopeMismatchError(
            "factor scope is not a closure clique of its component");
    }

    NodeSet pa = parents(g, comp);
    NodeSet scope = union_of(comp, pa);
    DomainSpec sub = domain.restrict_to(scope);
    std::vector<double> q(sub.joint_size(), 1.0);

    for (std::size_t k = 0; k < hk.size(); ++k) {
      NodeSet clique_local =
          local_positions(node_indices(g.graph(), node_names(h, hk[k])), scope);
      std::vector<std::size_t> strides = scope_strides(sub, clique_local);
      std::vector<int> state(sub.size(), 0);
      std::size_t idx = 0;
      do {
        q[idx] *= by_clique[k]->values()[project_state(strides, state)];
        ++idx;
      } while (next_state(sub, state));
    }

    // normalize per parent state
    NodeSet pa_local = local_positions(pa, scope);
    std::vector<std::size_t> pa_strides = scope_strides(sub, pa_local);
    std::vector<double> z(domain.joint_size(pa), 0.0);
    {
      std::vector<int> state(sub.size(), 0);
      std::size_t idx = 0;
      do {
        z[project_state(pa_strides, state)] += q[idx];
        ++idx;
      } while (next_state(sub, state));
    }
    for (double zi : z)
      if (!(zi > 0.0))
        throw ZeroNormalizerError(
            "a parent state has zero total factor mass in a component");
    {
      std::vector<int> state(sub.size(), 0);
      std::size_t idx = 0;
      do {
        q[idx] /= z[project_state(pa_strides, state)];
        ++idx;
      } while (next_state(sub, state));
    }

    // multiply P(C | pa C) into the global table
    NodeSet scope_global = scope;
    std::vector<std::size_t> strides = scope_strides(domain, scope_global);
    std::vector<int> state(domain.size(), 0);
    std::size_t idx = 0;
    do {
      values[idx] *= q[project_state(strides, state)];
      ++idx;
    } while (next_state(domain, state));
  }
  return DiscreteDistribution(std::move(domain), std::move(values));
}

bool is_markovian_check(const DiscreteDistribution& p, const ChainGraph& g,
                        double tol) {
  domain_for(g, p.domain());
  int n = g.size();
  std::vector<int> assign(n, 0);  // 0 out, 1 A, 2 B, 3 C
  while (true) {
    Triplet t;
    int first_ab = -1;
    for (int v = 0; v < n; ++v) {
      if (assign[v] == 1) {
        t.a.push_back(v);
        if (first_ab < 0) first_ab = 1;
      } else if (assign[v] == 2) {
        t.b.push_back(v);
        if (first_ab < 0) first_ab = 2;
      } else if (assign[v] == 3) {
        t.c.push_back(v);
      }
    }
    // <A,B|C> and <B,A|C> coincide; keep the one whose least node is in A
    if (!t.a.empty() && !t.b.empty() && first_ab == 1) {
      if (c_separated(g, t) && !ci_holds(p, t, tol)) return false;
    }
    int j = n - 1;
    while (j >= 0 && assign[j] == 3) assign[j--] = 0;
    if (j < 0) break;
    ++assign[j];
  }
  return true;
}

FactorizationFormula decomposable_formula_marginal(const NodeSet& scope,
                                                   const CliqueOrdering& ord) {
  NodeSet covered;
  for (const NodeSet& k : ord.cliques) covered = union_of(covered, k);
  if (covered != scope)
    throw ScopeMismatchError("ordering cliques do not cover the scope");
  FactorizationFormula f;
  f.numerator = ord.cliques;
  for (const NodeSet& s : ord.separators)
    if (!s.empty()) f.denominator.push_back(s);
  std::sort(f.numerator.begin(), f.numerator.end());
  std::sort(f.denominator.begin(), f.denominator.end());
  return f;
}

std::vector<ConditionalTerm> decomposable_formula_conditional(
    const CliqueOrdering& ord) {
  std::vector<ConditionalTerm> terms;
  for (std::size_t i = 0; i < ord.cliques.size(); ++i) {
    NodeSet sep = i == 0 ? NodeSet{} : ord.separators[i - 1];
    terms.push_back({difference_of(ord.cliques[i], sep), sep, 1});
  }
  return terms;
}

namespace {

// Per-component clique ordering shared by graph_formula and
// conditional_formula: start at the requested clique, or at the least
// clique containing pa(C).
struct ComponentDecomposition {
  NodeSet pa;                        // global indices
  std::vector<NodeSet> cliques;      // global indices, RIP order
  std::vector<NodeSet> separators;   // global indices
};

std::vector<ComponentDecomposition> decompose_components(
    const ChainGraph& g, const std::vector<NodeSet>& start_cliques) {
  if (!start_cliques.empty() &&
      static_cast<int>(start_cliques.size()) != g.component_count())
    throw BadStartCliqueError("one start clique per component expected");
  if (!equivalent_to_bn(g))
    throw NotBnEquivalentError(
        "a closure graph is not decomposable; no marginal-ratio formula");

  std::vector<ComponentDecomposition> out;
  for (int ci = 0; ci < g.component_count(); ++ci) {
    const NodeSet& comp = g.component(ci);
    UndirectedGraph h = closure_graph(g, comp);
    NodeSet pa_global = parents(g, comp);
    NodeSet pa_local = node_indices(h, node_names(g.graph(), pa_global));

    NodeSet start;
    if (!start_cliques.empty() && !start_cliques[ci].empty()) {
      try {
        start = node_indices(h, node_names(g.graph(), start_cliques[ci]));
      } catch (const UnknownNodeError&) {
        throw BadStartCliqueError("start clique has nodes outside the closure");
      }
      if (!is_subset(pa_local, start))
        throw BadStartCliqueError("start clique must contain pa(C)");
    } else {
      for (const NodeSet& k : cliques(h)) {
        if (is_subset(pa_local, k)) {
          start = k;
          break;
        }
      }
    }

    CliqueOrdering ord;
    try {
      ord = rip_ordering(h, start);
    } catch (const NotACliqueError&) {
      throw BadStartCliqueError("start set is not a clique of the closure");
    }

    ComponentDecomposition d;
    d.pa = pa_global;
    for (const NodeSet& k : ord.cliques)
      d.cliques.push_back(node_indices(g.graph(), node_names(h, k)));
    for (const NodeSet& s : ord.separators)
      d.separators.push_back(node_indices(g.graph(), node_names(h, s)));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

FactorizationFormula graph_formula(const ChainGraph& g,
                                   const std::vector<NodeSet>& start_cliques) {
  FactorizationFormula f;
  for (const ComponentDecomposition& d :
       decompose_components(g, start_cliques)) {
    for (const NodeSet& k : d.cliques) f.numerator.push_back(k);
    if (!d.pa.empty()) f.denominator.push_back(d.pa);
    for (const NodeSet& s : d.separators)
      if (!s.empty()) f.denominator.push_back(s);
  }
  std::sort(f.numerator.begin(), f.numerator.end());
  std::sort(f.denominator.begin(), f.denominator.end());
  return f;
}

FactorizationFormula formula_simplify(const FactorizationFormula& f) {
  std::map<NodeSet, int> num, den;
  for (const NodeSet& s : f.numerator) ++num[s];
  for (const NodeSet& s : f.denominator) ++den[s];
  FactorizationFormula out;
  for (auto& [scope, count] : num) {
    int cancel = std::min(count, den.count(scope) ? den[scope] : 0);
    for (int i = 0; i < count - cancel; ++i) out.numerator.push_back(scope);
    if (cancel) den[scope] -= cancel;
  }
  for (auto& [scope, count] : den)
    for (int i = 0; i < count; ++i) out.denominator.push_back(scope);
  return out;
}

Factor formula_evaluate(const FactorizationFormula& f,
                        const DiscreteDistribution& p) {
  const DomainSpec& d = p.domain();
  struct CachedMarginal {
    std::vector<double> values;
    std::vector<std::size_t> strides;
  };
  std::map<NodeSet, CachedMarginal> cache;
  auto fetch = [&](const NodeSet& scope) -> const CachedMarginal& {
    auto it = cache.find(scope);
    if (it == cache.end()) {
      CachedMarginal m{marginal(p, scope).values(), scope_strides(d, scope)};
      it = cache.emplace(scope, std::move(m)).first;
    }
    return it->second;
  };

  std::vector<double> vals(d.joint_size(), 0.0);
  std::vector<int> state(d.size(), 0);
  std::size_t idx = 0;
  do {
    double num = 1.0, den = 1.0;
    for (const NodeSet& s : f.numerator) {
      const CachedMarginal& m = fetch(s);
      num *= m.values[project_state(m.strides, state)];
    }
    for (const NodeSet& s : f.denominator) {
      const CachedMarginal& m = fetch(s);
      den *= m.values[project_state(m.strides, state)];
    }
    if (den == 0.0) {
      if (num != 0.0)
        throw DivisionByZeroError(
            "zero denominator under non-zero numerator; the input is not "
            "Markovian for this formula");
      vals[idx] = 0.0;
    } else {
      vals[idx] = num / den;
    }
    ++idx;
  } while (next_state(d, state));
  return Factor(d, std::move(vals));
}

std::vector<ConditionalTerm> conditional_formula(
    const ChainGraph& g, const std::vector<NodeSet>& start_cliques) {
  std::vector<ConditionalTerm> terms;
  for (const ComponentDecomposition& d :
       decompose_components(g, start_cliques)) {
    terms.push_back({difference_of(d.cliques[0], d.pa), d.pa, 1});
    for (std::size_t i = 1; i < d.cliques.size(); ++i)
      terms.push_back(
          {difference_of(d.cliques[i], d.separators[i - 1]),
           d.separators[i - 1], 1});
  }
  return terms;
}

Factor conditional_formula_evaluate(const std::vector<ConditionalTerm>& terms,
                                    const DiscreteDistribution& p) {
  const DomainSpec& d = p.domain();
  std::vector<double> vals(d.joint_size(), 1.0);
  for (const ConditionalTerm& term : terms) {
    NodeSet scope = union_of(term.head, term.tail);
    DiscreteDistribution m_scope = marginal(p, scope);
    DiscreteDistribution m_tail = marginal(p, term.tail);
    std::vector<std::size_t> s_scope = scope_strides(d, scope);
    std::vector<std::size_t> s_tail = scope_strides(d, term.tail);

    std::vector<int> state(d.size(), 0);
    std::size_t idx = 0;
    do {
      double denom = m_tail.at(project_state(s_tail, state));
      double c = denom > 0.0 ? m_scope.at(project_state(s_scope, state)) / denom
                             : 0.0;
      if (term.exponent >= 0) {
        vals[idx] *= c;
      } else if (c > 0.0) {
        vals[idx] /= c;
      } else if (vals[idx] != 0.0) {
        throw DivisionByZeroError(
            "zero conditional under non-zero product; the input is not "
            "Markovian for this formula");
      }
      ++idx;
    } while (next_state(d, state));
  }
  return Factor(d, std::move(vals));
}

MemoryDemand memory_demand(const ChainGraph& g, const DomainSpec& domain) {
  domain_for(g, domain);
  std::vector<ConditionalTerm> terms = conditional_formula(g);
  MemoryDemand out;
  std::vector<std::pair<NodeSet, NodeSet>> counted_negative;
  for (const ConditionalTerm& t : terms) {
    long long head_sz = static_cast<long long>(domain.joint_size(t.head));
    long long tail_sz = static_cast<long long>(domain.joint_size(t.tail));
    long long table = static_cast<long long>(
        domain.joint_size(union_of(t.head, t.tail)));
    if (t.exponent >= 0) {
      out.naive += table;
      out.algebraic += tail_sz * (head_sz - 1);
    } else {
      auto key = std::make_pair(t.head, t.tail);
      if (std::find(counted_negative.begin(), counted_negative.end(), key) ==
          counted_negative.end()) {
        counted_negative.push_back(key);
        out.naive += table;
      }
      out.algebraic -= tail_sz * (head_sz - 1);
    }
  }
  return out;
}

DiscreteDistribution random_markovian(const ChainGraph& g,
                                      const DomainSpec& domain,
                                      std::uint64_t seed) {
  domain_for(g, domain);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Factor>> factors;
  for (int ci = 0; ci < g.component_count(); ++ci) {
    UndirectedGraph h = closure_graph(g, g.component(ci));
    std::vector<Factor> comp_factors;
    for (const NodeSet& k : cliques(h)) {
      NodeSet scope = node_indices(g.graph(), node_names(h, k));
      DomainSpec sub = domain.restrict_to(scope);
      std::vector<double> vals(sub.joint_size());
      for (double& x : vals) x = 0.1 + 0.9 * uniform_01(rng);
      comp_factors.emplace_back(std::move(sub), std::move(vals));
    }
    factors.push_back(std::move(comp_factors));
  }
  return build_from_factors(g, factors);
}

}  // namespace cg
