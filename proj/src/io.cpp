#include "hypersep/io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hypersep/binomial.hpp"

namespace hypersep {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw std::invalid_argument(what + " must be a JSON object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw std::invalid_argument(what + ": unknown field \"" + item.key() + "\"");
  }
  for (const char* key : keys) {
    if (!j.contains(key)) throw std::invalid_argument(what + ": missing field \"" + key + "\"");
  }
}

long long integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
  if (j.is_number_unsigned() && j.get<unsigned long long>() > static_cast<unsigned long long>(
                                                                   std::numeric_limits<long long>::max())) {
    throw std::invalid_argument(what + " is out of range");
  }
  return j.get<long long>();
}

VertexSet vertex_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array");
  VertexSet out;
  for (const auto& x : j) {
    const long long v = integer(x, what + " entry");
    if (v < 0 || v > std::numeric_limits<Vertex>::max()) throw std::invalid_argument(what + " entry out of range");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Json vertex_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json subgraph_json(const SeparatorTree& t, std::size_t node) {
  Json out;
  out["type"] = "subgraph";
  out["vertices"] = vertex_json(t.subgraphs[node].vertices);
  const std::size_t sep = t.subgraphs[node].separator;
  if (sep == kNoNode) {
    out["child"] = nullptr;
    return out;
  }
  Json child;
  child["type"] = "separator";
  child["vertices"] = vertex_json(t.separators[sep].vertices);
  child["small"] = subgraph_json(t, t.separators[sep].small);
  child["big"] = subgraph_json(t, t.separators[sep].big);
  out["child"] = std::move(child);
  return out;
}

Json abstract_subgraph_json(const AbstractTree& t, std::size_t node) {
  Json out;
  out["type"] = "subgraph";
  out["size"] = t.subgraphs[node].size;
  const std::size_t sep = t.subgraphs[node].separator;
  if (sep == kNoNode) {
    out["child"] = nullptr;
    return out;
  }
  Json child;
  child["type"] = "separator";
  child["size"] = t.k;
  child["small"] = abstract_subgraph_json(t, t.separators[sep].small);
  child["big"] = abstract_subgraph_json(t, t.separators[sep].big);
  out["child"] = std::move(child);
  return out;
}

void expect_type(const Json& j, const char* type) {
  if (!j.is_object() || !j.contains("type") || j["type"] != type) {
    throw std::invalid_argument(std::string("expected a node of type \"") + type + "\"");
  }
}

std::size_t read_subgraph(SeparatorTree& t, const Json& j, std::size_t parent) {
  expect_type(j, "subgraph");
  require_keys(j, {"type", "vertices", "child"}, "subgraph node");
  const std::size_t id = t.subgraphs.size();
  t.subgraphs.push_back({vertex_list(j["vertices"], "subgraph vertices"), parent, kNoNode});
  const Json& child = j["child"];
  if (child.is_null()) return id;
  expect_type(child, "separator");
  require_keys(child, {"type", "vertices", "small", "big"}, "separator node");
  const std::size_t sep = t.separators.size();
  t.separators.push_back({vertex_list(child["vertices"], "separator vertices"), id, kNoNode, kNoNode});
  t.subgraphs[id].separator = sep;
  const std::size_t small = read_subgraph(t, child["small"], sep);
  const std::size_t big = read_subgraph(t, child["big"], sep);
  t.separators[sep].small = small;
  t.separators[sep].big = big;
  return id;
}

std::size_t read_abstract(AbstractTree& t, const Json& j, std::size_t parent, std::optional<unsigned>& k) {
  expect_type(j, "subgraph");
  require_keys(j, {"type", "size", "child"}, "subgraph node");
  const long long size = integer(j["size"], "subgraph size");
  if (size < 0) throw std::invalid_argument("subgraph size must be nonnegative");
  const std::size_t id = t.subgraphs.size();
  t.subgraphs.push_back({static_cast<std::uint64_t>(size), parent, kNoNode});
  const Json& child = j["child"];
  if (child.is_null()) return id;
  expect_type(child, "separator");
  require_keys(child, {"type", "size", "small", "big"}, "separator node");
  const long long sep_size = integer(child["size"], "separator size");
  if (sep_size < 0 || sep_size > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument("separator size out of range");
  }
  if (!k) k = static_cast<unsigned>(sep_size);
  if (*k != sep_size) throw std::invalid_argument("separator sizes disagree with k");
  const std::size_t sep = t.separators.size();
  t.separators.push_back({id, kNoNode, kNoNode});
  t.subgraphs[id].separator = sep;
  const std::size_t small = read_abstract(t, child["small"], sep, k);
  const std::size_t big = read_abstract(t, child["big"], sep, k);
  t.separators[sep].small = small;
  t.separators[sep].big = big;
  return id;
}

}  // namespace

void write_hypergraph_json(std::ostream& out, const Hypergraph& h) {
  out << "{\"r\":" << h.r() << ",\"n\":" << h.n() << ",\"edges\":[";
  bool first = true;
  h.for_each_edge([&](std::span<const Vertex> e) {
    out << (first ? "[" : ",[");
    first = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ',';
      out << e[i];
    }
    out << ']';
  });
  out << "]}";
}

std::string hypergraph_json(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph_json(out, h);
  return out.str();
}

Hypergraph parse_hypergraph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  require_keys(j, {"r", "n", "edges"}, "hypergraph");
  HypergraphData data;
  data.r = integer(j["r"], "r");
  data.n = integer(j["n"], "n");
  if (!j["edges"].is_array()) throw std::invalid_argument("edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw std::invalid_argument("each edge must be an array");
    std::vector<long long> members;
    for (const auto& v : e) members.push_back(integer(v, "edge member"));
    data.edges.push_back(std::move(members));
  }
  if (data.r > BinomialTable::kMaxR || data.n > BinomialTable::kMaxN) {
    throw std::invalid_argument("r or n exceeds the supported range");
  }
  return Hypergraph::from_data(data);
}

Json tree_to_json(const SeparatorTree& t) {
  if (t.subgraphs.empty()) throw std::invalid_argument("empty tree");
  return subgraph_json(t, 0);
}

Json abstract_tree_to_json(const AbstractTree& t) {
  if (t.subgraphs.empty()) throw std::invalid_argument("empty tree");
  return abstract_subgraph_json(t, 0);
}

SeparatorTree tree_from_json(const Json& j, std::optional<unsigned> k_hint) {
  SeparatorTree t;
  read_subgraph(t, j, kNoNode);
  if (k_hint) {
    t.k = *k_hint;
  } else if (!t.separators.empty()) {
    t.k = static_cast<unsigned>(t.separators[0].vertices.size());
  } else {
    throw std::invalid_argument("a single-atom tree needs k");
  }
  return t;
}

AbstractTree abstract_tree_from_json(const Json& j, std::optional<unsigned> k_hint) {
  AbstractTree t;
  read_abstract(t, j, kNoNode, k_hint);
  if (!k_hint) throw std::invalid_argument("a single-atom tree needs k");
  t.k = *k_hint;
  return t;
}

Json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

void write_construction_json(std::ostream& out, const ConstructionOutput& c) {
  Json params;
  for (const auto& [name, value] : c.params) {
    params[name] = is_integer(value) ? big_to_json(value.get_num()) : rational_to_json(value);
  }
  out << "{\"schema_version\":" << kSchemaVersion << ",\"family\":" << Json(c.family).dump()
      << ",\"hypergraph\":";
  write_hypergraph_json(out, c.graph);
  out << ",\"tree\":" << tree_to_json(c.tree).dump() << ",\"k\":" << c.k
      << ",\"c\":" << rational_to_json(c.c).dump() << ",\"predicted_edges\":" << big_to_json(c.predicted_edges).dump()
      << ",\"params\":" << params.dump() << "}";
}

Json bound_to_json(const Bound& b) {
  Json out;
  out["value"] = rational_to_json(b.value);
  out["in_regime"] = b.in_regime;
  return out;
}

Json bounds_report_to_json(const BoundsReport& report) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["params"] = {{"n", report.n}, {"k", report.k}, {"r", report.r}, {"c", rational_to_json(report.c)}};
  out["N_bound"] = bound_to_json(report.n_bound);
  out["M_bound"] = bound_to_json(report.m_bound);
  out["general_bound"] = bound_to_json(report.general);
  out["special_bound"] = bound_to_json(report.special);
  out["relative_surplus_ceiling"] = bound_to_json(report.surplus_ceiling);
  out["limit_leading_form"] = rational_to_json(report.leading_form);
  out["conjecture_bound"] = bound_to_json(report.conjecture);
  if (report.halving) {
    out["halving_slack"] = rational_to_json(report.halving->slack);
  } else {
    out["halving_slack"] = nullptr;
  }
  if (report.surplus_value) {
    out["surplus"] = big_to_json(*report.surplus_value);
    out["relative_surplus"] = rational_to_json(*report.relative_surplus);
  }
  return out;
}

Json ledger_to_json(const EdgeLedger& ledger) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["n"] = ledger.n;
  out["r"] = ledger.r;
  out["k"] = ledger.k;
  out["edges"] = ledger.edges;
  out["rhs"] = big_to_json(ledger.rhs);
  Json atoms = Json::array();
  for (const auto& a : ledger.atoms) {
    atoms.push_back({{"node", a.node}, {"size", a.size}, {"anti_edges", a.anti_edges}});
  }
  out["atoms"] = std::move(atoms);
  Json seps = Json::array();
  for (const auto& s : ledger.separators) {
    seps.push_back({{"separator", s.separator},
                    {"anti_edges", s.anti_edges},
                    {"bonded_edges", s.bonded_edges},
                    {"bonded_anti_edges", s.bonded_anti_direct},
                    {"bonded_anti_edges_formula", big_to_json(s.bonded_anti_formula)}});
  }
  out["separators"] = std::move(seps);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + temp);
  }
  std::filesystem::rename(temp, path);
}

}  // namespace hypersep
