#include "llt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <thread>

#include "llt/cumulant.hpp"
#include "llt/errors.hpp"
#include "llt/json_io.hpp"
#include "llt/lltgraph.hpp"
#include "llt/rewrite.hpp"
#include "llt/symmetric.hpp"
#include "llt/trees.hpp"

namespace llt {

namespace {

// Raised when a verification subcommand finds a disagreement.
struct VerificationFailed {};

struct Options {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string basis;

  std::string shapes;
  int nvars = 0;

  std::string graph;
  std::string relation;
  std::vector<int> site;

  std::string dyck;
  std::string route = "def";

  std::string tree;
  std::string pf;
  std::string path;
  std::string labels;
  std::string to = "path";

  int n = 0;
  std::string trace_file;

  std::string what;
  std::string input = "-";
};

Json polynomial_output(const XQPoly& p, const std::string& basis) {
  if (basis.empty()) return poly_to_json(p);
  return expansion_to_json(expand_basis(p, parse_basis(basis)));
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad label list '" + text + "'");
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void cmd_llt(const Options& o, std::ostream& out) {
  const auto s = ShapeSequence::parse(o.shapes);
  out << polynomial_output(llt_ssyt(s, o.nvars), o.basis).dump() << "\n";
}

void cmd_graph(const Options& o, std::ostream& out) {
  const auto g = LLTGraph::parse(o.graph);
  const int nvars = o.nvars > 0 ? o.nvars : g.nverts;
  if (o.relation.empty()) {
    out << polynomial_output(llt_graph_eval(g, nvars, o.threads), o.basis).dump() << "\n";
    return;
  }
  const GraphCombo c = apply_relation(g, parse_graph_rule(o.relation), o.site);
  Json terms = Json::array();
  for (const auto& [h, coeff] : c.terms()) terms.push_back({{"graph", h.to_string()}, {"q", qpoly_to_json(coeff)}});
  const bool agrees = combo_eval(c, nvars, o.threads) == llt_graph_eval(g, nvars, o.threads);
  out << Json{{"terms", terms}, {"agrees", agrees}}.dump() << "\n";
  if (!agrees) throw VerificationFailed{};
}

void cmd_cumulant(const Options& o, std::ostream& out) {
  CumulantResult r;
  if (!o.dyck.empty()) {
    const SchroderPath d(o.dyck);
    const int nvars = o.nvars > 0 ? o.nvars : d.length();
    if (o.route == "connected") {
      r = kappa_connected(d, nvars);
    } else if (o.route == "def") {
      r = cumulant_def(unicellular_shapes(d), nvars);
    } else {
      throw ParseError("unknown route '" + o.route + "'");
    }
  } else if (!o.shapes.empty()) {
    if (o.route != "def") throw ParseError("shape input supports only --route def");
    const auto s = ShapeSequence::parse(o.shapes);
    r = cumulant_def(s, o.nvars > 0 ? o.nvars : s.cell_count());
  } else {
    throw ParseError("cumulant needs --dyck or --shapes");
  }
  Json j{{"route", route_name(r.route)}, {"n", r.n}, {"disconnected", r.disconnected}};
  j["value"] = polynomial_output(r.value, o.basis);
  out << j.dump() << "\n";
}

void cmd_biject(const Options& o, std::ostream& out) {
  std::optional<RootedForest> tree;
  if (!o.tree.empty()) {
    tree = RootedForest::parse(o.tree);
  } else if (!o.pf.empty()) {
    tree = pf_to_tree(ParkingFunction::parse(o.pf));
  } else if (!o.path.empty()) {
    const SchroderPath p(o.path);
    tree = o.labels.empty() ? path_to_tree(p) : path_to_tree(LabeledPath{p, parse_labels(o.labels)});
  }
  if (!tree) throw ParseError("biject needs --tree, --pf or --path");
  if (o.to == "tree") {
    out << tree->to_string() << "\n";
  } else if (o.to == "path") {
    const auto lp = tree_to_path(*tree);
    out << lp.path.word() << " " << join(lp.labels) << "\n";
  } else if (o.to == "strips") {
    out << nu_of_tree(*tree).to_string() << "\n";
  } else if (o.to == "shapes") {
    out << strips_to_shapes(nu_of_tree(*tree)).to_string() << "\n";
  } else if (o.to == "pf") {
    out << tree_to_pf(*tree).to_string() << "\n";
  } else {
    throw ParseError("unknown target '" + o.to + "'");
  }
}

Json trace_step_json(const TraceStep& st) {
  Json after = Json::array();
  for (const auto& [p, c] : st.after) after.push_back(Json::array({p.word(), c.to_string()}));
  return Json{{"rule", std::string(1, st.rule)},
              {"site", Json::array({st.site.first, st.site.second})},
              {"before", st.before.word()},
              {"weight", st.weight.to_string()},
              {"after", after}};
}

void cmd_decompose(const Options& o, std::ostream& out) {
  const Decomposition d = decompose_full(o.n, !o.trace_file.empty());
  Json terms = Json::array();
  for (const auto& [p, c] : d.combo.terms()) terms.push_back({{"path", p.word()}, {"q", qpoly_to_json(c)}});
  out << Json{{"n", o.n}, {"terms", terms}}.dump() << "\n";
  if (o.trace_file.empty()) return;
  std::ofstream file;
  std::ostream* sink = &out;
  if (o.trace_file != "-") {
    file.open(o.trace_file);
    if (!file) throw Error("cannot write " + o.trace_file);
    sink = &file;
  }
  for (const auto& st : d.trace) *sink << trace_step_json(st).dump() << "\n";
}

bool report_line(std::ostream& out, bool ok, const std::string& name, const std::string& detail) {
  out << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
  return ok;
}

std::string first_diff(const XQPoly& a, const XQPoly& b) {
  auto e = XQPoly::first_difference(a, b);
  if (!e) return "equal";
  std::string s = "x^[" + join(*e) + "]: ";
  return s + a.coeff(*e).to_string() + " vs " + b.coeff(*e).to_string();
}

void cmd_verify(const Options& o, std::ostream& out) {
  bool ok = true;
  if (o.what == "theorem") {
    const auto report = verify_theorem(o.n);
    for (const auto& c : report.checks) ok = report_line(out, c.equal, c.name, c.detail) && ok;
  } else if (o.what == "subgraphs" || o.what == "connected" || o.what == "moebius") {
    if (o.n < 1 || o.n > 6) throw SizeGuard("verify " + o.what + " supported for 1 <= n <= 6");
    for (const auto& d : all_dyck_paths(o.n)) {
      XQPoly lhs(o.n), rhs(o.n);
      if (o.what == "subgraphs") {
        lhs = subgraph_expansion(d, o.n);
        rhs = llt_graph_eval(unit_interval_graph(d), o.n, o.threads).shift_q(1);
      } else if (o.what == "connected") {
        lhs = kappa_connected(d, o.n).value;
        rhs = cumulant_def(unicellular_shapes(d), o.n).value;
      } else {
        const auto s = unicellular_shapes(d);
        lhs = llt_from_cumulants(s, o.n);
        rhs = llt_ssyt(s, o.n);
      }
      ok = report_line(out, lhs == rhs, o.what + " " + d.word(), first_diff(lhs, rhs)) && ok;
    }
  } else {
    throw ParseError("unknown verification '" + o.what + "'");
  }
  if (!ok) throw VerificationFailed{};
}

void cmd_expand(const Options& o, std::ostream& out, std::istream& in) {
  Json j;
  try {
    if (o.input == "-") {
      j = Json::parse(in);
    } else {
      std::ifstream file(o.input);
      if (!file) throw ParseError("cannot read " + o.input);
      j = Json::parse(file);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  out << expansion_to_json(expand_basis(poly_from_json(j), parse_basis(o.basis.empty() ? "s" : o.basis))).dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"LLT polynomials, unicellular cumulants and the forest decomposition"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for coloring sums")->check(CLI::PositiveNumber);
  auto basis_check = CLI::IsMember({"s", "e", "m", "h"});

  auto* llt = app.add_subcommand("llt", "LLT polynomial of a shape sequence");
  llt->add_option("--shapes", o.shapes, "e.g. \"(2,1)/(1);(1)\"")->required();
  llt->add_option("--nvars", o.nvars, "Number of variables")->required()->check(CLI::PositiveNumber);
  llt->add_option("--basis", o.basis)->check(basis_check);

  auto* graph = app.add_subcommand("graph", "Evaluate an LLT graph or apply a relation");
  graph->add_option("--graph", o.graph, "e.g. \"n=3; e1:(1,2); e2:; ed:(2,3)\"")->required();
  graph->add_option("--nvars", o.nvars, "Defaults to the vertex count")->check(CLI::PositiveNumber);
  graph->add_option("--basis", o.basis)->check(basis_check);
  graph->add_option("--relation", o.relation, "A-F");
  graph->add_option("--site", o.site, "Vertices of the pattern")->delimiter(',');

  auto* cum = app.add_subcommand("cumulant", "Unicellular LLT cumulant");
  cum->add_option("--dyck", o.dyck, "Dyck path word");
  cum->add_option("--shapes", o.shapes, "Shape sequence (definition route)");
  cum->add_option("--route", o.route)->check(CLI::IsMember({"def", "connected"}));
  cum->add_option("--nvars", o.nvars)->check(CLI::PositiveNumber);
  cum->add_option("--basis", o.basis)->check(basis_check);

  auto* bij = app.add_subcommand("biject", "Trees, paths and parking functions");
  bij->add_option("--tree", o.tree, "Parent array, 0 for the root");
  bij->add_option("--pf", o.pf, "Parking function values");
  bij->add_option("--path", o.path, "Reduced Schroeder path");
  bij->add_option("--labels", o.labels, "Diagonal labels of --path");
  bij->add_option("--to", o.to)->check(CLI::IsMember({"path", "shapes", "strips", "pf", "tree"}));

  auto* dec = app.add_subcommand("decompose", "Rewrite the full path into forest terms");
  dec->add_option("--n", o.n)->required();
  dec->add_option("--trace", o.trace_file, "Write rewrite steps as JSON lines ('-' for stdout)");

  auto* ver = app.add_subcommand("verify", "Cross-check independent routes");
  ver->add_option("what", o.what, "theorem, subgraphs, connected or moebius")->required();
  ver->add_option("--n", o.n)->required();

  auto* exp = app.add_subcommand("expand", "Expand a JSON polynomial in a symmetric basis");
  exp->add_option("--basis", o.basis)->check(basis_check);
  exp->add_option("--input", o.input, "File with the polynomial, '-' for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*llt) cmd_llt(o, out);
    if (*graph) cmd_graph(o, out);
    if (*cum) cmd_cumulant(o, out);
    if (*bij) cmd_biject(o, out);
    if (*dec) cmd_decompose(o, out);
    if (*ver) cmd_verify(o, out);
    if (*exp) cmd_expand(o, out, in);
  } catch (const VerificationFailed&) {
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace llt
