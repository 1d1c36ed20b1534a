#ifndef CG_TABLES_HPP_
#define CG_TABLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cg/chordal.hpp"
#include "cg/graph.hpp"

namespace cg {

// Tolerances: table construction and normalization checks, pointwise
// formula-equality checks, and conditional-independence checks.  The looser
// steps absorb rounding accumulated across products of many small factors.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kFormulaTol = 1e-10;
inline constexpr double kCiTol = 1e-9;

// Finite state spaces for a sorted variable list; variable i has states
// 0 .. card(i)-1.  Tables are dense and row-major with the first variable
// slowest.
class DomainSpec {
 public:
  DomainSpec() = default;
  explicit DomainSpec(std::vector<std::pair<std::string, int>> vars);

  int size() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[i]; }
  int card(int i) const { return cards_[i]; }
  int index_of(std::string_view name) const;

  std::size_t joint_size() const;
  std::size_t joint_size(const NodeSet& scope) const;
  DomainSpec restrict_to(const NodeSet& scope) const;

  bool operator==(const DomainSpec&) const = default;

 private:
  std::vector<std::string> vars_;
  std::vector<int> cards_;
};

// Per-variable multipliers that send a full state vector to the cell index
// of a table over the given scope; variables outside the scope get 0.
std::vector<std::size_t> scope_strides(const DomainSpec& d,
                                       const NodeSet& scope);

inline std::size_t project_state(const std::vector<std::size_t>& strides,
                                 const std::vector<int>& state) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < state.size(); ++j) idx += strides[j] * state[j];
  return idx;
}

// Advances a mixed-radix state vector; returns false after the last state.
bool next_state(const DomainSpec& d, std::vector<int>& state);

// A non-negative table over its own domain; no normalization required.
class Factor {
 public:
  Factor(DomainSpec domain, std::vector<double> values);
  const DomainSpec& domain() const { return domain_; }
  const std::vector<double>& values() const { return values_; }

 private:
  DomainSpec domain_;
  std::vector<double> values_;
};

// A probability distribution: non-negative, sums to one within
// kConstructionTol.  The empty-scope distribution is the constant 1.
class DiscreteDistribution {
 public:
  DiscreteDistribution(DomainSpec domain, std::vector<double> values);
  const DomainSpec& domain() const { return domain_; }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t idx) const { return values_[idx]; }

 private:
  DomainSpec domain_;
  std::vector<double> values_;
};

// P(head | tail): a table over head u tail whose head-slices sum to one for
// every tail state with positive mass and are all zero otherwise.
class ConditionalTable {
 public:
  ConditionalTable(DomainSpec domain, NodeSet head, NodeSet tail,
                   std::vector<double> values);
  const DomainSpec& domain() const { return domain_; }  // over head u tail
  const NodeSet& head() const { return head_; }         // local indices
  const NodeSet& tail() const { return tail_; }
  const std::vector<double>& values() const { return values_; }

 private:
  DomainSpec domain_;
  NodeSet head_, tail_;
  std::vector<double> values_;
};

// A product/quotient of marginal scopes (multisets, kept sorted).  Scope
// indices refer to the node table of the graph or domain the formula was
// built against.
struct FactorizationFormula {
  std::vector<NodeSet> numerator;
  std::vector<NodeSet> denominator;

  friend bool operator==(const FactorizationFormula&,
                         const FactorizationFormula&) = default;
};

// One conditional factor P(head | tail)^exponent.
struct ConditionalTerm {
  NodeSet head;
  NodeSet tail;
  int exponent = 1;

  friend bool operator==(const ConditionalTerm&,
                         const ConditionalTerm&) = default;
};

struct MemoryDemand {
  long long naive = 0;      // stored table cells, one table per factor
  long long algebraic = 0;  // sum-to-one constraints removed per table
};

// Sums out everything outside a; marginal over the empty set is 1.
DiscreteDistribution marginal(const DiscreteDistribution& p, const NodeSet& a);

// P(head | tail) with zero rows for zero-mass tail states.
ConditionalTable conditional(const DiscreteDistribution& p, const NodeSet& head,
                             const NodeSet& tail);

// max_states |P(A | B,C) - P(A | C)| <= tol, skipping zero-mass
// conditioning states.
bool ci_holds(const DiscreteDistribution& p, const Triplet& t,
              double tol = kCiTol);

// Builds P = prod_C P(C | pa C) where each P(C | pa C) is the normalized
// product of the given factors over the cliques of C's closure graph.
// factors[i] belongs to chain component i; scopes must match the closure
// cliques exactly.
DiscreteDistribution build_from_factors(
    const ChainGraph& g, const std::vector<std::vector<Factor>>& factors);

// Checks every represented triplet of g for conditional independence in p.
bool is_markovian_check(const DiscreteDistribution& p, const ChainGraph& g,
                        double tol = kCiTol);

// Formula (cliques over separators) for a distribution over the given
// scope; scope must equal the union of the ordering's cliques.
FactorizationFormula decomposable_formula_marginal(const NodeSet& scope,
                                                   const CliqueOrdering& ord);

// The conditional-product form of the same ordering:
// P = P(K_1) * prod_{i>=2} P(K_i \ S_i | S_i).
std::vector<ConditionalTerm> decomposable_formula_conditional(
    const CliqueOrdering& ord);

// Global marginal-ratio formula: per component, the closure cliques over
// pa(C) and the separators with multiplicities.  start_cliques may pin the
// first clique per component (empty set = default: least clique containing
// pa(C)); a start must be a closure clique containing pa(C).
FactorizationFormula graph_formula(const ChainGraph& g,
                                   const std::vector<NodeSet>& start_cliques = {});

// Cancels identical scopes between numerator and denominator.
FactorizationFormula formula_simplify(const FactorizationFormula& f);

// Pointwise product of numerator marginals over denominator marginals with
// the 0/0 = 0 convention; a zero denominator under a non-zero numerator
// raises DivisionByZeroError.  The result is a distribution whenever p is
// Markovian for the formula's graph.
Factor formula_evaluate(const FactorizationFormula& f,
                        const DiscreteDistribution& p);

// Global conditional-product form: per component,
// P(K_1 \ pa | pa) * prod_{i>=2} P(K_i \ S_i | S_i), all with exponent +1.
std::vector<ConditionalTerm> conditional_formula(
    const ChainGraph& g, const std::vector<NodeSet>& start_cliques = {});

// Pointwise evaluation of a conditional-term product against p.
Factor conditional_formula_evaluate(const std::vector<ConditionalTerm>& terms,
                                    const DiscreteDistribution& p);

// Table-cell counts for storing the conditional_formula factors: naive
// counts whole tables (denominator tables once each), algebraic counts
// |X_tail| * (|X_head| - 1) per table.
MemoryDemand memory_demand(const ChainGraph& g, const DomainSpec& domain);

// Reproducible strictly positive factorizable distribution: clique factors
// drawn uniformly from [0.1, 1.0].
DiscreteDistribution random_markovian(const ChainGraph& g,
                                      const DomainSpec& domain,
                                      std::uint64_t seed);

}  // namespace cg

#endif  // CG_TABLES_HPP_
