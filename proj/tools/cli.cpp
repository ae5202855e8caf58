#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hypersep/bounds.hpp"
#include "hypersep/connectivity.hpp"
#include "hypersep/constructions.hpp"
#include "hypersep/io.hpp"
#include "hypersep/oracle.hpp"
#include "hypersep/septree.hpp"

namespace hypersep::cli {

namespace {

// Bad input content: exit 1. std::invalid_argument from flag values: exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxGridRows = 1'000'000;

Rational parse_rat_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects an integer or NUM/DEN, got \"" + text + "\"");
  }
}

unsigned integer_flag(const Rational& q, const std::string& flag) {
  if (!is_integer(q) || q < 0 || !q.get_num().fits_uint_p()) {
    throw UsageError(flag + " must be a nonnegative integer");
  }
  return static_cast<unsigned>(q.get_num().get_ui());
}

std::string read_input(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// A construction document carries both parts; plain files carry one.
bool is_construction(const Json& j) { return j.is_object() && j.contains("family") && j.contains("hypergraph"); }

Hypergraph load_hypergraph(const std::string& path) {
  const std::string text = read_input(path);
  try {
    const Json j = Json::parse(text);
    return parse_hypergraph_json(is_construction(j) ? j["hypergraph"].dump() : text);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

SeparatorTree load_tree(const std::string& path, std::optional<unsigned> k) {
  const std::string text = read_input(path);
  try {
    const Json j = Json::parse(text);
    if (!is_construction(j)) return tree_from_json(j, k);
    if (!k && j.contains("k") && j["k"].is_number_unsigned()) k = j["k"].get<unsigned>();
    return tree_from_json(j.at("tree"), k);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json vertex_array(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// name=lo[:hi[:step]] for n, k, r (integers) and c (rationals).
struct GridAxis {
  std::vector<Rational> values;
};

GridAxis parse_axis(const std::string& name, const std::string& range) {
  std::vector<std::string> parts;
  std::stringstream ss(range);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty() || parts.size() > 3) throw UsageError("grid axis " + name + " needs lo[:hi[:step]]");
  const std::string flag = "--grid " + name;
  const Rational lo = parse_rat_flag(parts[0], flag);
  const Rational hi = parts.size() > 1 ? parse_rat_flag(parts[1], flag) : lo;
  const Rational step = parts.size() > 2 ? parse_rat_flag(parts[2], flag) : Rational(1);
  if (step <= 0) throw UsageError(flag + " step must be positive");
  if (hi < lo) throw UsageError(flag + " range is empty");
  GridAxis axis;
  for (Rational x = lo; x <= hi; x += step) {
    if (name != "c") integer_flag(x, flag);
    axis.values.push_back(x);
    if (axis.values.size() > kMaxGridRows) throw UsageError(flag + " has too many values");
  }
  return axis;
}

std::string cell(const Rational& q) { return to_string(q); }
std::string cell(bool b) { return b ? "true" : "false"; }

const std::vector<std::string> kCsvHeader = {
    "n", "k", "r", "c", "N_bound", "N_in_regime", "M_bound", "M_in_regime", "general_bound", "general_in_regime",
    "special_bound", "special_in_regime", "relative_surplus_ceiling", "relative_surplus_ceiling_in_regime",
    "limit_leading_form", "conjecture_bound", "conjecture_in_regime", "halving_slack", "note"};

std::vector<std::string> csv_row(unsigned n, unsigned k, unsigned r, const Rational& c,
                                 const std::optional<BoundsReport>& rep, const std::string& note) {
  std::vector<std::string> row = {std::to_string(n), std::to_string(k), std::to_string(r), to_string(c)};
  if (!rep) {
    row.resize(kCsvHeader.size() - 1);
    row.push_back(note);
    return row;
  }
  for (const Bound* b : {&rep->n_bound, &rep->m_bound, &rep->general, &rep->special, &rep->surplus_ceiling}) {
    row.push_back(cell(b->value));
    row.push_back(cell(b->in_regime));
  }
  row.push_back(cell(rep->leading_form));
  row.push_back(cell(rep->conjecture.value));
  row.push_back(cell(rep->conjecture.in_regime));
  row.push_back(rep->halving ? cell(rep->halving->slack) : "");
  row.push_back(note);
  return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + "\r\n";
}

struct Options {
  // construct
  std::string family;
  std::optional<std::string> q, k, r, s, c, m, p_num, p_den;
  std::string output;
  // shared file inputs
  std::string hypergraph_path;
  std::string tree_path;
  std::optional<std::string> k_flag, c_flag;
  unsigned min_size = 0;
  // bounds
  std::optional<std::string> n, grid, csv;
  std::optional<std::string> bounds_hypergraph;
  // oracle
  unsigned threads = 1;
};

unsigned need_uint(const std::optional<std::string>& v, const std::string& flag, const std::string& family) {
  if (!v) throw UsageError(family + " requires " + flag);
  return integer_flag(parse_rat_flag(*v, flag), flag);
}

void forbid(const std::vector<std::pair<const std::optional<std::string>*, const char*>>& flags,
            const std::string& family) {
  for (const auto& [value, name] : flags) {
    if (value->has_value()) throw UsageError(family + " does not take " + name);
  }
}

int do_construct(const Options& o, std::ostream& out) {
  const std::string& f = o.family;
  ConstructionOutput result;
  if (f == "mader-graph") {
    forbid({{&o.r, "--r"}, {&o.s, "--s"}, {&o.c, "--c"}, {&o.m, "--m"}, {&o.p_num, "--p-num"}, {&o.p_den, "--p-den"}}, f);
    result = mader_graph(need_uint(o.q, "--q", f), need_uint(o.k, "--k", f));
  } else if (f == "mader-hyper") {
    forbid({{&o.s, "--s"}, {&o.c, "--c"}, {&o.m, "--m"}, {&o.p_num, "--p-num"}, {&o.p_den, "--p-den"}}, f);
    result = mader_hypergraph(need_uint(o.q, "--q", f), need_uint(o.k, "--k", f), need_uint(o.r, "--r", f));
  } else if (f == "example1" || f == "example1-chain") {
    forbid({{&o.q, "--q"}, {&o.k, "--k"}, {&o.p_num, "--p-num"}, {&o.p_den, "--p-den"}}, f);
    const unsigned s = need_uint(o.s, "--s", f);
    const unsigned r = need_uint(o.r, "--r", f);
    const unsigned c = need_uint(o.c, "--c", f);
    if (f == "example1") {
      forbid({{&o.m, "--m"}}, f);
      result = example1(s, r, c);
    } else {
      result = example1_chain(s, r, c, need_uint(o.m, "--m", f));
    }
  } else if (f == "example2") {
    forbid({{&o.q, "--q"}, {&o.k, "--k"}, {&o.c, "--c"}, {&o.m, "--m"}}, f);
    const unsigned num = need_uint(o.p_num, "--p-num", f);
    const unsigned den = need_uint(o.p_den, "--p-den", f);
    if (den == 0) throw UsageError("--p-den must be positive");
    result = example2(need_uint(o.s, "--s", f), need_uint(o.r, "--r", f), Rational(num) / den);
  } else {
    throw UsageError("unknown family " + f);
  }
  const auto violations = validate_separator_tree(result.graph, result.tree, result.k, result.c);
  const bool matches = BigInt(static_cast<unsigned long>(result.graph.edge_count())) == result.predicted_edges;

  std::ostringstream file;
  write_construction_json(file, result);
  file << '\n';
  write_file(o.output, file.str());

  Json report;
  report["schema_version"] = kSchemaVersion;
  report["family"] = result.family;
  report["n"] = result.graph.n();
  report["r"] = result.graph.r();
  report["k"] = result.k;
  report["c"] = rational_to_json(result.c);
  report["edges"] = result.graph.edge_count();
  report["predicted_edges"] = big_to_json(result.predicted_edges);
  report["prediction_matches"] = matches;
  report["certificate_valid"] = violations.empty();
  report["violations"] = violations;
  emit(out, report);
  return violations.empty() && matches ? kExitOk : kExitInvalid;
}

Json params_json(unsigned k, const Rational& c) { return {{"k", k}, {"c", rational_to_json(c)}}; }

int do_decompose(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.hypergraph_path);
  const unsigned k = need_uint(o.k_flag, "--k", "decompose");
  const Rational c = parse_rat_flag(*o.c_flag, "--c");
  const BuildOutcome built = build_separator_tree(h, k, c);
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["params"] = params_json(k, c);
  if (!built.tree) {
    report["status"] = "stuck";
    report["stuck_vertices"] = vertex_array(built.stuck);
    const auto& w = built.stuck_witness;
    report["stuck_is_k1_connected"] = w.connected();
    report["stuck_separator"] = w.kind == ConnectivityWitness::Kind::kRefuted ? vertex_array(w.separator) : Json();
    emit(out, report);
    return kExitInvalid;
  }
  const auto violations = validate_separator_tree(h, *built.tree, k, c);
  write_file(o.output, tree_to_json(*built.tree).dump() + "\n");
  report["status"] = violations.empty() ? "decomposed" : "invalid";
  report["atoms"] = built.tree->atoms().size();
  report["separators"] = built.tree->separators.size();
  report["violations"] = violations;
  emit(out, report);
  return violations.empty() ? kExitOk : kExitInvalid;
}

int do_verify_tree(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.hypergraph_path);
  const unsigned k = need_uint(o.k_flag, "--k", "verify tree");
  const Rational c = parse_rat_flag(*o.c_flag, "--c");
  const SeparatorTree t = load_tree(o.tree_path, k);
  const auto violations = validate_separator_tree(h, t, k, c);
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["params"] = params_json(k, c);
  report["valid"] = violations.empty();
  report["violations"] = violations;
  emit(out, report);
  return violations.empty() ? kExitOk : kExitInvalid;
}

int do_verify_membership(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.hypergraph_path);
  const unsigned k = need_uint(o.k_flag, "--k", "verify membership");
  const auto found = contains_k1_connected_subgraph(h, k, o.min_size);
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["params"] = {{"k", k}, {"min_size", o.min_size}};
  report["member"] = !found.has_value();
  report["witness"] = found ? vertex_array(*found) : Json();
  emit(out, report);
  return found ? kExitInvalid : kExitOk;
}

int do_audit(const Options& o, std::ostream& out) {
  const Hypergraph h = load_hypergraph(o.hypergraph_path);
  std::optional<unsigned> k;
  if (o.k_flag) k = need_uint(o.k_flag, "--k", "audit");
  const SeparatorTree t = load_tree(o.tree_path, k);
  try {
    emit(out, ledger_to_json(audit_edge_identity(h, t)));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) throw InputError(e.what());
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["identity_holds"] = false;
    report["error"] = e.what();
    emit(out, report);
    return kExitInvalid;
  }
  return kExitOk;
}

int do_bounds(const Options& o, std::ostream& out) {
  if (!o.grid) {
    const unsigned n = need_uint(o.n, "--n", "bounds");
    const unsigned k = need_uint(o.k_flag, "--k", "bounds");
    const unsigned r = need_uint(o.r, "--r", "bounds");
    if (!o.c_flag) throw UsageError("bounds requires --c");
    BoundsReport report = bounds_report(n, k, r, parse_rat_flag(*o.c_flag, "--c"));
    if (o.bounds_hypergraph) attach_hypergraph(report, load_hypergraph(*o.bounds_hypergraph));
    if (o.csv) {
      write_file(*o.csv, csv_line(kCsvHeader) + csv_line(csv_row(n, k, r, report.c, report, "")));
    }
    emit(out, bounds_report_to_json(report));
    return kExitOk;
  }
  if (o.bounds_hypergraph) throw UsageError("-H cannot be combined with --grid");
  std::map<std::string, GridAxis> axes;
  std::stringstream ss(*o.grid);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("grid entries look like name=lo[:hi[:step]]");
    const std::string name = item.substr(0, eq);
    if (name != "n" && name != "k" && name != "r" && name != "c") throw UsageError("unknown grid axis " + name);
    if (axes.count(name)) throw UsageError("grid axis " + name + " given twice");
    axes[name] = parse_axis(name, item.substr(eq + 1));
  }
  auto axis_for = [&](const std::string& name, const std::optional<std::string>& flag) {
    if (axes.count(name)) {
      if (flag) throw UsageError("--" + name + " conflicts with the grid axis " + name);
      return axes[name].values;
    }
    if (!flag) throw UsageError("bounds requires --" + name + " or a grid axis " + name);
    const Rational v = parse_rat_flag(*flag, "--" + name);
    if (name != "c") integer_flag(v, "--" + name);
    return std::vector<Rational>{v};
  };
  const auto ns = axis_for("n", o.n);
  const auto ks = axis_for("k", o.k_flag);
  const auto rs = axis_for("r", o.r);
  const auto cs = axis_for("c", o.c_flag);
  if (ns.size() * ks.size() * rs.size() * cs.size() > kMaxGridRows) throw UsageError("grid is too large");

  Json rows = Json::array();
  std::string csv = csv_line(kCsvHeader);
  for (const auto& nq : ns) {
    for (const auto& kq : ks) {
      for (const auto& rq : rs) {
        for (const auto& c : cs) {
          const unsigned n = integer_flag(nq, "n");
          const unsigned k = integer_flag(kq, "k");
          const unsigned r = integer_flag(rq, "r");
          std::optional<BoundsReport> rep;
          std::string note;
          try {
            rep = bounds_report(n, k, r, c);
          } catch (const std::invalid_argument& e) {
            note = e.what();
          }
          csv += csv_line(csv_row(n, k, r, c, rep, note));
          if (rep) {
            rows.push_back(bounds_report_to_json(*rep));
          } else {
            rows.push_back({{"schema_version", kSchemaVersion},
                            {"params", {{"n", n}, {"k", k}, {"r", r}, {"c", rational_to_json(c)}}},
                            {"skipped", note}});
          }
        }
      }
    }
  }
  if (o.csv) write_file(*o.csv, csv);
  emit(out, rows);
  return kExitOk;
}

int do_oracle(const Options& o, std::ostream& out) {
  const unsigned n = need_uint(o.n, "--n", "oracle");
  const unsigned k = need_uint(o.k_flag, "--k", "oracle");
  const unsigned r = need_uint(o.r, "--r", "oracle");
  OracleOptions options;
  options.threads = o.threads;
  const OracleResult res = oracle_max_edges(n, k, r, o.min_size, options);
  const bool verified = !contains_k1_connected_subgraph(res.witness, k, o.min_size).has_value() &&
                        res.witness.edge_count() == res.max_edges;
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["params"] = {{"n", n}, {"k", k}, {"r", r}, {"min_size", o.min_size}};
  report["max_edges"] = res.max_edges;
  report["witness"] = Json::parse(hypergraph_json(res.witness));
  report["witness_verified"] = verified;
  report["seed"] = res.seed ? Json(*res.seed) : Json();
  report["nodes"] = res.nodes;
  report["prunes"] = res.prunes;
  report["subtrees"] = res.subtrees;
  emit(out, report);
  return verified ? kExitOk : kExitInvalid;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separator trees, bounds and extremal constructions for r-uniform hypergraphs"};
  app.name(args.empty() ? "hypersep" : args[0]);
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "Generate an extremal family with its certificate");
  construct->add_option("family", o.family, "mader-graph | mader-hyper | example1 | example1-chain | example2")
      ->required()
      ->check(CLI::IsMember({"mader-graph", "mader-hyper", "example1", "example1-chain", "example2"}));
  construct->add_option("--q", o.q, "Number of parts");
  construct->add_option("--k", o.k, "Separator size");
  construct->add_option("--r", o.r, "Uniformity");
  construct->add_option("--s", o.s, "Doubling depth");
  construct->add_option("--c", o.c, "Atom size factor");
  construct->add_option("--m", o.m, "Chain length");
  construct->add_option("--p-num", o.p_num, "Numerator of p");
  construct->add_option("--p-den", o.p_den, "Denominator of p");
  construct->add_option("-o", o.output, "Output construction JSON")->required();
  construct->callback([&] { action = [&] { return do_construct(o, out); }; });

  auto* decompose = app.add_subcommand("decompose", "Build a separator tree for a hypergraph");
  decompose->add_option("-H", o.hypergraph_path, "Hypergraph JSON")->required();
  decompose->add_option("--k", o.k_flag, "Separator size")->required();
  decompose->add_option("--c", o.c_flag, "Atom size factor (NUM/DEN)")->required();
  decompose->add_option("-o", o.output, "Output tree JSON")->required();
  decompose->callback([&] { action = [&] { return do_decompose(o, out); }; });

  auto* verify = app.add_subcommand("verify", "Check a certificate or membership");
  verify->require_subcommand(1);
  auto* vtree = verify->add_subcommand("tree", "Validate a separator tree");
  vtree->add_option("-H", o.hypergraph_path, "Hypergraph JSON")->required();
  vtree->add_option("-T", o.tree_path, "Tree JSON")->required();
  vtree->add_option("--k", o.k_flag, "Separator size")->required();
  vtree->add_option("--c", o.c_flag, "Atom size factor (NUM/DEN)")->required();
  vtree->callback([&] { action = [&] { return do_verify_tree(o, out); }; });
  auto* vmem = verify->add_subcommand("membership", "Search for a (k+1)-connected induced subgraph");
  vmem->add_option("-H", o.hypergraph_path, "Hypergraph JSON")->required();
  vmem->add_option("--k", o.k_flag, "Connectivity parameter")->required();
  vmem->add_option("--min-size", o.min_size, "Smallest subgraph considered")->required();
  vmem->callback([&] { action = [&] { return do_verify_membership(o, out); }; });

  auto* audit = app.add_subcommand("audit", "Edge-count identity ledger for a tree");
  audit->add_option("-H", o.hypergraph_path, "Hypergraph JSON")->required();
  audit->add_option("-T", o.tree_path, "Tree JSON")->required();
  audit->add_option("--k", o.k_flag, "Separator size, needed for single-atom trees");
  audit->callback([&] { action = [&] { return do_audit(o, out); }; });

  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound exactly");
  bounds->add_option("--n", o.n, "Vertex count");
  bounds->add_option("--k", o.k_flag, "Separator size");
  bounds->add_option("--r", o.r, "Uniformity");
  bounds->add_option("--c", o.c_flag, "Atom size factor (NUM/DEN)");
  bounds->add_option("--grid", o.grid, "Axes name=lo[:hi[:step]], comma separated, over n, k, r, c");
  bounds->add_option("--csv", o.csv, "Also write a CSV table");
  bounds->add_option("-H", o.bounds_hypergraph, "Hypergraph whose surplus is reported");
  bounds->callback([&] { action = [&] { return do_bounds(o, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Exact maximum edge count by exhaustive search");
  oracle->add_option("--n", o.n, "Vertex count")->required();
  oracle->add_option("--k", o.k_flag, "Connectivity parameter")->required();
  oracle->add_option("--r", o.r, "Uniformity")->required();
  oracle->add_option("--min-size", o.min_size, "Smallest subgraph considered")->required();
  oracle->add_option("--threads", o.threads, "Worker cap; results do not depend on it")
      ->check(CLI::Range(1U, 256U));
  oracle->callback([&] { action = [&] { return do_oracle(o, out); }; });

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace hypersep::cli
