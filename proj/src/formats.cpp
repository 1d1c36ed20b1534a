#include "cg/formats.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cg/errors.hpp"

namespace cg {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> parse_name_list(const std::string& text, int line_no) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (const std::string& part : split(text, ',')) {
    std::string name = trim(part);
    if (name.empty()) throw ParseError("empty name in list", line_no);
    out.push_back(name);
  }
  return out;
}

struct EdgeDecl {
  std::string u, v;
  bool line = false;
  int line_no = 0;
};

}  // namespace

HybridGraph parse_graph(const std::string& text) {
  std::vector<std::string> node_decls;
  std::vector<EdgeDecl> edge_decls;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks = tokens(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "node") {
      if (toks.size() != 2) throw ParseError("expected 'node <name>'", line_no);
      node_decls.push_back(toks[1]);
    } else if (toks.size() == 3 && (toks[1] == "--" || toks[1] == "->")) {
      edge_decls.push_back({toks[0], toks[2], toks[1] == "--", line_no});
    } else {
      throw ParseError("expected 'u -- v', 'u -> v' or 'node u'", line_no);
    }
  }

  std::vector<std::string> names = node_decls;
  for (const EdgeDecl& e : edge_decls) {
    names.push_back(e.u);
    names.push_back(e.v);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  HybridGraph g;
  try {
    g = HybridGraph(names);
  } catch (const Error& err) {
    throw ParseError(err.what(), 1);
  }
  for (const EdgeDecl& e : edge_decls) {
    try {
      if (e.line)
        g.add_line(e.u, e.v);
      else
        g.add_arrow(e.u, e.v);
    } catch (const ConflictingEdgeError&) {
      throw ParseError("duplicate or conflicting edge declaration for {" +
                           e.u + "," + e.v + "}",
                       e.line_no);
    } catch (const Error& err) {
      throw ParseError(err.what(), e.line_no);
    }
  }
  return g;
}

std::string serialize_graph(const HybridGraph& g) {
  std::ostringstream out;
  for (const std::string& n : g.names()) out << "node " << n << "\n";
  for (const Edge& e : g.edges()) {
    if (e.line)
      out << g.name(e.u) << " -- " << g.name(e.v) << "\n";
    else
      out << g.name(e.u) << " -> " << g.name(e.v) << "\n";
  }
  return out.str();
}

std::string serialize_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  for (const std::string& n : g.names()) out << "node " << n << "\n";
  for (const auto& [u, v] : g.lines())
    out << g.name(u) << " -- " << g.name(v) << "\n";
  return out.str();
}

DiscreteDistribution parse_distribution(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::pair<std::string, int>> vars;
  bool header_seen = false;
  std::vector<double> values;

  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks = tokens(strip_comment(raw));
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "vars")
        throw ParseError("expected header 'vars name:card ...'", line_no);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon == std::string::npos)
          throw ParseError("expected 'name:card'", line_no);
        std::string name = toks[i].substr(0, colon);
        int card = 0;
        try {
          card = std::stoi(toks[i].substr(colon + 1));
        } catch (const std::exception&) {
          throw ParseError("bad cardinality for '" + name + "'", line_no);
        }
        if (!vars.empty() && vars.back().first >= name)
          throw ParseError("header variables must be sorted and distinct",
                           line_no);
        vars.emplace_back(name, card);
      }
      header_seen = true;
      continue;
    }
    for (const std::string& t : toks) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(t, &used));
        if (used != t.size()) throw std::invalid_argument(t);
      } catch (const std::exception&) {
        throw ParseError("bad probability value '" + t + "'", line_no);
      }
    }
  }
  if (!header_seen) throw ParseError("missing 'vars' header", 1);
  try {
    DomainSpec domain(vars);
    if (values.size() != domain.joint_size())
      throw ParseError("expected " + std::to_string(domain.joint_size()) +
                           " values, got " + std::to_string(values.size()),
                       line_no);
    return DiscreteDistribution(std::move(domain), std::move(values));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(err.what(), line_no);
  }
}

std::string serialize_distribution(const DiscreteDistribution& p) {
  std::ostringstream out;
  out << "vars";
  for (int i = 0; i < p.domain().size(); ++i)
    out << " " << p.domain().var(i) << ":" << p.domain().card(i);
  out << "\n";
  char buf[64];
  for (double x : p.values()) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out << buf << "\n";
  }
  return out.str();
}

std::vector<ExpertBlock> parse_expert_blocks(const std::string& text) {
  std::vector<ExpertBlock> blocks;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.rfind("expert:", 0) != 0)
      throw ParseError("expected 'expert: C = ... ; pa = ... ; lines = ...'",
                       line_no);
    ExpertBlock block;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const std::string& field : split(line.substr(7), ';')) {
      std::vector<std::string> kv = split(field, '=');
      if (kv.size() != 2) throw ParseError("expected 'key = value'", line_no);
      std::string key = trim(kv[0]);
      std::string value = trim(kv[1]);
      if (key == "C") {
        block.competence = parse_name_list(value, line_no);
      } else if (key == "pa") {
        block.influence = parse_name_list(value, line_no);
      } else if (key == "lines") {
        for (const std::string& item : parse_name_list(value, line_no)) {
          std::vector<std::string> ends = split(item, '-');
          if (ends.size() != 2)
            throw ParseError("expected 'u-v' in lines", line_no);
          edges.emplace_back(trim(ends[0]), trim(ends[1]));
        }
      } else {
        throw ParseError("unknown field '" + key + "'", line_no);
      }
    }
    if (block.competence.empty())
      throw ParseError("block needs a non-empty competence C", line_no);
    std::vector<std::string> scope = block.competence;
    scope.insert(scope.end(), block.influence.begin(), block.influence.end());
    try {
      block.local = UndirectedGraph(scope);
      for (const auto& [u, v] : edges) block.local.add_line(u, v);
    } catch (const Error& err) {
      throw ParseError(err.what(), line_no);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string serialize_expert_blocks(const std::vector<ExpertBlock>& blocks) {
  std::ostringstream out;
  for (const ExpertBlock& b : blocks) {
    std::vector<std::string> comp = b.competence;
    std::vector<std::string> infl = b.influence;
    std::sort(comp.begin(), comp.end());
    std::sort(infl.begin(), infl.end());
    out << "expert: C = " << format_node_set(comp);
    out << " ; pa = " << format_node_set(infl);
    out << " ; lines = ";
    bool first = true;
    for (const auto& [u, v] : b.local.lines()) {
      if (!first) out << ", ";
      out << b.local.name(u) << "-" << b.local.name(v);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

NodeSet parse_node_list(const HybridGraph& g, const std::string& list) {
  NodeSet out;
  for (const std::string& name : parse_name_list(list, 1))
    insert_node(out, g.index_of(name));
  return out;
}

std::string format_node_set(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cg
