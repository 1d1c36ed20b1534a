#include "cg/cli.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cg/chordal.hpp"
#include "cg/equivalence.hpp"
#include "cg/errors.hpp"
#include "cg/formats.hpp"
#include "cg/graph.hpp"
#include "cg/separation.hpp"
#include "cg/tables.hpp"

namespace cg {

namespace {

std::string names_csv(const ChainGraph& g, const NodeSet& s) {
  return format_node_set(node_names(g.graph(), s));
}

std::string scope_braces(const std::vector<std::string>& all_names,
                         const NodeSet& scope) {
  std::vector<std::string> names;
  for (int v : scope) names.push_back(all_names[v]);
  return "{" + format_node_set(names) + "}";
}

ChainGraph load_chain_graph(const std::string& path) {
  return validate_chain_graph(parse_graph(read_file(path)));
}

DomainSpec domain_from_flags(const ChainGraph& g, int card,
                             const std::string& cards) {
  std::vector<std::pair<std::string, int>> vars;
  if (cards.empty()) {
    for (const std::string& n : g.names()) vars.emplace_back(n, card);
    return DomainSpec(vars);
  }
  std::istringstream in(cards);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("expected 'name:card' in --cards");
    vars.emplace_back(item.substr(0, colon),
                      std::stoi(item.substr(colon + 1)));
  }
  return DomainSpec(vars);
}

Triplet parse_triplet(const ChainGraph& g, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 2 && parts.size() != 3)
    throw Error("triplet must be 'A / B' or 'A / B / C'");
  auto list = [&](const std::string& s) {
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](char c) { return c == ' ' || c == '\t'; }),
            t.end());
    return t.empty() ? NodeSet{} : parse_node_list(g.graph(), t);
  };
  Triplet t;
  t.a = list(parts[0]);
  t.b = list(parts[1]);
  if (parts.size() == 3) t.c = list(parts[2]);
  validate_triplet(g.size(), t);
  return t;
}

}  // namespace

bool round_trip(const std::string& text, const std::string& kind) {
  if (kind == "graph") {
    std::string once = serialize_graph(parse_graph(text));
    return serialize_graph(parse_graph(once)) == once;
  }
  if (kind == "dist") {
    std::string once = serialize_distribution(parse_distribution(text));
    return serialize_distribution(parse_distribution(once)) == once;
  }
  if (kind == "expert") {
    std::string once = serialize_expert_blocks(parse_expert_blocks(text));
    return serialize_expert_blocks(parse_expert_blocks(once)) == once;
  }
  throw Error("unknown format kind '" + kind + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"chain graph models: validation, equivalence, separation and "
               "discrete factorization"};
  app.require_subcommand(1);
  std::ostringstream buf;

  // validate
  {
    auto* sub = app.add_subcommand("validate", "check the chain-graph "
                                               "property and print the chain");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      ChainGraph g = load_chain_graph(*file);
      for (const NodeSet& comp : g.chain()) buf << names_csv(g, comp) << "\n";
    });
  }

  // components
  {
    auto* sub = app.add_subcommand("components", "connectivity components of "
                                                 "the line subgraph");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      HybridGraph g = parse_graph(read_file(*file));
      for (const NodeSet& comp : components(g))
        buf << format_node_set(node_names(g, comp)) << "\n";
    });
  }

  // moralize
  {
    auto* sub = app.add_subcommand("moralize", "print the moral graph");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      buf << serialize_graph(moral_graph(load_chain_graph(*file)));
    });
  }

  // closure
  {
    auto* sub = app.add_subcommand("closure", "closure graph of the component "
                                              "containing a node");
    auto file = std::make_shared<std::string>();
    auto member = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->add_option("node", *member, "a member of the component")->required();
    sub->callback([file, member, &buf] {
      ChainGraph g = load_chain_graph(*file);
      const NodeSet& comp = g.component(g.component_of(g.index_of(*member)));
      buf << serialize_graph(closure_graph(g, comp));
    });
  }

  // complexes
  {
    auto* sub = app.add_subcommand("complexes", "list all complexes");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      ChainGraph g = load_chain_graph(*file);
      for (const Complex& c : complexes(g)) {
        buf << g.name(c.parent_small) << "," << g.name(c.parent_large)
            << " -> ";
        for (std::size_t i = 0; i < c.section.size(); ++i) {
          if (i) buf << ",";
          buf << g.name(c.section[i]);
        }
        buf << "\n";
      }
    });
  }

  // equiv
  {
    auto* sub = app.add_subcommand("equiv", "test Markov equivalence of two "
                                            "graphs");
    auto f1 = std::make_shared<std::string>();
    auto f2 = std::make_shared<std::string>();
    sub->add_option("first", *f1, "graph file")->required();
    sub->add_option("second", *f2, "graph file")->required();
    sub->callback([f1, f2, &buf] {
      bool eq = markov_equivalent(load_chain_graph(*f1), load_chain_graph(*f2));
      buf << (eq ? "equivalent" : "not-equivalent") << "\n";
    });
  }

  // largest
  {
    auto* sub = app.add_subcommand("largest", "largest chain graph of the "
                                              "equivalence class");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      buf << serialize_graph(largest_chain_graph(load_chain_graph(*file)).graph());
    });
  }

  // is-largest
  {
    auto* sub = app.add_subcommand("is-largest", "test whether every arrow is "
                                                 "protected");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      buf << (is_largest(load_chain_graph(*file)) ? "largest" : "not-largest")
          << "\n";
    });
  }

  // to-dag
  {
    auto* sub = app.add_subcommand("to-dag", "extract a Markov equivalent "
                                             "directed acyclic graph");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      buf << serialize_graph(extract_equivalent_dag(load_chain_graph(*file)).graph());
    });
  }

  // bn-equiv
  {
    auto* sub = app.add_subcommand("bn-equiv", "test equivalence to some "
                                               "directed acyclic graph");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->callback([file, &buf] {
      buf << (equivalent_to_bn(load_chain_graph(*file)) ? "bn-equivalent"
                                                        : "not-bn-equivalent")
          << "\n";
    });
  }

  // compose
  {
    auto* sub = app.add_subcommand("compose", "compose a chain graph from "
                                              "expert blocks");
    auto file = std::make_shared<std::string>();
    sub->add_option("file", *file, "expert-block file")->required();
    sub->callback([file, &buf] {
      auto blocks = parse_expert_blocks(read_file(*file));
      buf << serialize_graph(compose_expert_model(blocks).graph());
    });
  }

  // sep
  {
    auto* sub = app.add_subcommand("sep", "maximal set separated from A "
                                          "given C");
    auto file = std::make_shared<std::string>();
    auto from = std::make_shared<std::string>();
    auto given = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    sub->add_option("--graph", *file, "graph file")->required();
    sub->add_option("--from", *from, "comma-separated node list A")->required();
    sub->add_option("--given", *given, "comma-separated node list C");
    sub->add_flag("--trace", *trace, "print the final U/V/W/Z sets");
    sub->callback([file, from, given, trace, &buf] {
      ChainGraph g = load_chain_graph(*file);
      NodeSet a = parse_node_list(g.graph(), *from);
      NodeSet c = given->empty() ? NodeSet{} : parse_node_list(g.graph(), *given);
      ReachResult r = reach(g, a, c);
      for (int v : r.b) buf << g.name(v) << "\n";
      if (*trace) {
        buf << "U: " << names_csv(g, r.u) << "\n";
        buf << "V: " << names_csv(g, r.v) << "\n";
        buf << "W: " << names_csv(g, r.w) << "\n";
        buf << "Z: " << names_csv(g, r.z) << "\n";
      }
    });
  }

  // ci
  {
    auto* sub = app.add_subcommand("ci", "conditional-independence query");
    auto file = std::make_shared<std::string>();
    auto triplet = std::make_shared<std::string>();
    sub->add_option("--graph", *file, "graph file")->required();
    sub->add_option("--triplet", *triplet, "query 'A / B / C'")->required();
    sub->callback([file, triplet, &buf] {
      ChainGraph g = load_chain_graph(*file);
      Triplet t = parse_triplet(g, *triplet);
      buf << (c_separated(g, t) ? "represented" : "not-represented") << "\n";
    });
  }

  // formula
  {
    auto* sub = app.add_subcommand("formula", "marginal-ratio factorization "
                                              "formula");
    auto file = std::make_shared<std::string>();
    auto simplify = std::make_shared<bool>(false);
    auto cond = std::make_shared<bool>(false);
    sub->add_option("file", *file, "graph file")->required();
    sub->add_flag("--simplify", *simplify, "cancel matching scopes");
    sub->add_flag("--conditional", *cond, "print the conditional-product form");
    sub->callback([file, simplify, cond, &buf] {
      ChainGraph g = load_chain_graph(*file);
      if (*cond) {
        for (const ConditionalTerm& t : conditional_formula(g)) {
          buf << "P(" << names_csv(g, t.head);
          if (!t.tail.empty()) buf << "|" << names_csv(g, t.tail);
          buf << ")\n";
        }
        return;
      }
      FactorizationFormula f = graph_formula(g);
      if (*simplify) f = formula_simplify(f);
      buf << "num:";
      for (const NodeSet& s : f.numerator)
        buf << " " << scope_braces(g.names(), s);
      buf << " den:";
      for (const NodeSet& s : f.denominator)
        buf << " " << scope_braces(g.names(), s);
      buf << "\n";
    });
  }

  // memsize
  {
    auto* sub = app.add_subcommand("memsize", "table-cell counts of the "
                                              "conditional factorization");
    auto file = std::make_shared<std::string>();
    auto card = std::make_shared<int>(2);
    auto cards = std::make_shared<std::string>();
    sub->add_option("file", *file, "graph file")->required();
    sub->add_option("--card", *card, "uniform cardinality (default 2)");
    sub->add_option("--cards", *cards, "per-variable list 'a:2,b:3'");
    sub->callback([file, card, cards, &buf] {
      ChainGraph g = load_chain_graph(*file);
      MemoryDemand m = memory_demand(g, domain_from_flags(g, *card, *cards));
      buf << "naive: " << m.naive << "\n";
      buf << "algebraic: " << m.algebraic << "\n";
    });
  }

  // check-markov
  {
    auto* sub = app.add_subcommand("check-markov", "test a distribution "
                                                   "against every represented "
                                                   "triplet");
    auto file = std::make_shared<std::string>();
    auto dist = std::make_shared<std::string>();
    auto tol = std::make_shared<double>(kCiTol);
    sub->add_option("--graph", *file, "graph file")->required();
    sub->add_option("--dist", *dist, "distribution file")->required();
    sub->add_option("--tol", *tol, "independence tolerance");
    sub->callback([file, dist, tol, &buf] {
      ChainGraph g = load_chain_graph(*file);
      DiscreteDistribution p = parse_distribution(read_file(*dist));
      buf << (is_markovian_check(p, g, *tol) ? "markovian" : "not-markovian")
          << "\n";
    });
  }

  // random-dist
  {
    auto* sub = app.add_subcommand("random-dist", "seeded factorizable "
                                                  "distribution over a graph");
    auto file = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>();
    auto card = std::make_shared<int>(2);
    auto cards = std::make_shared<std::string>();
    sub->add_option("--graph", *file, "graph file")->required();
    sub->add_option("--seed", *seed, "generator seed")->required();
    sub->add_option("--card", *card, "uniform cardinality (default 2)");
    sub->add_option("--cards", *cards, "per-variable list 'a:2,b:3'");
    sub->callback([file, seed, card, cards, &buf] {
      ChainGraph g = load_chain_graph(*file);
      DomainSpec d = domain_from_flags(g, *card, *cards);
      buf << serialize_distribution(random_markovian(g, d, *seed));
    });
  }

  std::vector<const char*> argv{"cgtool"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << buf.str();
  return 0;
}

}  // namespace cg
