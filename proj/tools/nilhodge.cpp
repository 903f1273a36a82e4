// Command-line front end: parse system files, dispatch to the library,
// and emit deterministic reports, certificates, and DOT graphs.
//
// Exit codes: 0 = success / feasible / check passed,
//             1 = checked negative (infeasible, not in order, axiom fail),
//             2 = usage or parse error.

#include "nilhodge/deligne.hpp"
#include "nilhodge/hodge.hpp"
#include "nilhodge/models.hpp"
#include "nilhodge/weight2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace nilhodge;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// parse errors carry exit code 2; library rejections carry exit code 1

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

Scalar scalar_of(const json& j) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational entry: ") + e.what());
  }
}

GScalar gscalar_of(const json& j) {
  try {
    if (j.is_number_integer()) return GScalar(Scalar(j.get<long long>()));
    return parse_gaussian(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad gaussian entry: ") + e.what());
  }
}

Mat<Scalar> mat_q(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix must be a nonempty array of rows");
  size_t rows = j.size(), cols = j[0].size();
  Mat<Scalar> m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ParseError("ragged matrix");
    for (size_t c = 0; c < cols; ++c) m(r, c) = scalar_of(j[r][c]);
  }
  return m;
}

Vec<Scalar> vec_q(const json& j, size_t dim) {
  if (!j.is_array() || j.size() != dim) throw ParseError("vector of wrong length");
  Vec<Scalar> v(dim, Scalar(0));
  for (size_t i = 0; i < dim; ++i) v[i] = scalar_of(j[i]);
  return v;
}

Vec<GScalar> vec_g(const json& j, size_t dim) {
  if (!j.is_array() || j.size() != dim) throw ParseError("vector of wrong length");
  Vec<GScalar> v(dim, GScalar());
  for (size_t i = 0; i < dim; ++i) v[i] = gscalar_of(j[i]);
  return v;
}

// filtration files: object mapping index strings to "full", "zero", or a
// list of spanning vectors
template <class F, class Filt>
Filt filt_of(const json& j, size_t dim) {
  if (!j.is_object()) throw ParseError("filtration must be an object of index -> space");
  Filt w(dim);
  for (auto it = j.begin(); it != j.end(); ++it) {
    long k;
    try {
      k = std::stol(it.key());
    } catch (const std::exception&) {
      throw ParseError("filtration index '" + it.key() + "' is not an integer");
    }
    const json& sp = it.value();
    if (sp.is_string() && sp.get<std::string>() == "full") {
      w.set(k, Subspace<F>::full(dim));
    } else if (sp.is_string() && sp.get<std::string>() == "zero") {
      w.set(k, Subspace<F>::zero(dim));
    } else if (sp.is_array()) {
      std::vector<Vec<F>> vecs;
      for (const auto& row : sp) {
        if constexpr (std::is_same_v<F, Scalar>)
          vecs.push_back(vec_q(row, dim));
        else
          vecs.push_back(vec_g(row, dim));
      }
      w.set(k, Subspace<F>::span(dim, vecs));
    } else {
      throw ParseError("filtration step must be \"full\", \"zero\", or a vector list");
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// deterministic printing

std::string row_text(const Vec<Scalar>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += to_string(v[i]);
  }
  return s + "]";
}

std::string row_text(const Vec<GScalar>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += to_string(v[i]);
  }
  return s + "]";
}

template <class F>
void print_mat(const std::string& name, const Mat<F>& m) {
  std::cout << name << ":\n";
  for (size_t r = 0; r < m.rows(); ++r) {
    Vec<F> row(m.cols(), F(0));
    for (size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    std::cout << "  " << row_text(row) << "\n";
  }
}

template <class Filt>
void print_filtration(const std::string& name, const Filt& w) {
  std::cout << name << ":\n";
  for (long k : w.jumps()) {
    auto s = w.at(k);
    std::cout << "  " << k << ": dim " << s.dim() << "\n";
    for (const auto& v : s.basis()) std::cout << "    " << row_text(v) << "\n";
  }
}

// ---------------------------------------------------------------------------
// unified system container for input files and built-in fixtures

struct SystemData {
  size_t dim = 0;
  long weight = 0;
  bool has_weight = false;
  std::vector<Mat<Scalar>> ns;
  std::optional<Mat<Scalar>> gram;
  int parity = 1;
  std::optional<Filtration<Scalar>> w;
  std::optional<HodgeFiltration> f;
  std::optional<Mat<Scalar>> y;
  std::map<long, Mat<Scalar>> gr_forms;
  std::vector<std::string> names;
  std::vector<Mat<Scalar>> etas;
};

Filtration<Scalar> pure_filtration(size_t dim, long k) {
  Filtration<Scalar> w(dim);
  w.set(k - 1, Subspace<Scalar>::zero(dim));
  w.set(k, Subspace<Scalar>::full(dim));
  return w;
}

SystemData from_pair(const models::PairModel& m, int parity) {
  SystemData s;
  s.dim = m.dim;
  s.weight = m.weight;
  s.has_weight = true;
  s.ns = {m.n1, m.n2};
  s.gram = m.gram;
  s.parity = parity;
  s.w = pure_filtration(m.dim, m.weight);
  s.f = m.f;
  s.y = m.y;
  s.etas = m.etas;
  return s;
}

SystemData fixture(const std::string& name) {
  if (name == "pair4") return from_pair(models::vanishing_cycle_pair(), -1);
  if (name == "pair7") return from_pair(models::two_strings_and_line(), 1);
  if (name == "deep6") return from_pair(models::deep_deformation_pair(), -1);
  if (name == "counterexample") {
    auto m = models::infeasible_pair();
    SystemData s;
    s.dim = 4;
    s.weight = 1;
    s.has_weight = true;
    s.ns = {m.n1, m.n2};
    s.parity = -1;
    s.w = m.w;
    s.f = m.f;
    s.y = m.y;
    s.names = {"e1", "f1", "e2", "f2"};
    return s;
  }
  throw ParseError("unknown fixture '" + name +
                   "' (known: pair4, pair7, deep6, counterexample)");
}

SystemData load_system(const std::string& input, const std::string& fix) {
  if (!fix.empty()) return fixture(fix);
  if (input.empty()) throw ParseError("need --input FILE or --fixture NAME");
  json j = read_json_file(input);
  SystemData s;
  if (j.contains("dim")) s.dim = j["dim"].get<size_t>();
  if (j.contains("ns"))
    for (const auto& jm : j["ns"]) s.ns.push_back(mat_q(jm));
  if (j.contains("n")) s.ns.push_back(mat_q(j["n"]));
  if (s.dim == 0 && !s.ns.empty()) s.dim = s.ns[0].rows();
  if (j.contains("gram")) {
    s.gram = mat_q(j["gram"]);
    if (s.dim == 0) s.dim = s.gram->rows();
  }
  if (j.contains("parity")) s.parity = j["parity"].get<int>();
  if (j.contains("weight")) {
    s.weight = j["weight"].get<long>();
    s.has_weight = true;
  }
  if (s.dim == 0) throw ParseError("cannot infer the space dimension from the file");
  if (j.contains("w")) s.w = filt_of<Scalar, Filtration<Scalar>>(j["w"], s.dim);
  if (j.contains("f")) s.f = filt_of<GScalar, HodgeFiltration>(j["f"], s.dim);
  if (j.contains("y")) s.y = mat_q(j["y"]);
  if (j.contains("gr_forms"))
    for (auto it = j["gr_forms"].begin(); it != j["gr_forms"].end(); ++it)
      s.gr_forms[std::stol(it.key())] = mat_q(it.value());
  if (j.contains("names"))
    for (const auto& n : j["names"]) s.names.push_back(n.get<std::string>());
  if (j.contains("etas"))
    for (const auto& jm : j["etas"]) s.etas.push_back(mat_q(jm));
  return s;
}

Mat<Scalar> pick_operator(const SystemData& s, long index) {
  if (s.ns.empty()) throw ParseError("no nilpotent operators in the input");
  if (index == 0) {  // sum of all
    Mat<Scalar> sum(s.dim, s.dim);
    for (const auto& n : s.ns) sum += n;
    return sum;
  }
  if (index < 1 || static_cast<size_t>(index) > s.ns.size())
    throw ParseError("operator index out of range");
  return s.ns[static_cast<size_t>(index) - 1];
}

// ---------------------------------------------------------------------------
// group specs

GroupSpec group_of(const std::string& kind, const std::string& field, long n,
                   long p, long q) {
  bool complex = field == "C" || field == "c";
  if (!complex && !(field == "R" || field == "r"))
    throw ParseError("field must be C or R");
  if (kind == "sp") {
    if (n <= 0 || n % 2) throw ParseError("sp needs a positive even --n");
    return GroupSpec{complex ? GroupKind::SpC : GroupKind::SpR,
                     static_cast<size_t>(n / 2), 0};
  }
  if (kind == "o") {
    if (complex) {
      if (n <= 0) throw ParseError("o over C needs a positive --n");
      return GroupSpec{GroupKind::OC, static_cast<size_t>(n), 0};
    }
    if (p < 0 || q < 0 || p + q == 0) throw ParseError("o over R needs --p and --q");
    return GroupSpec{GroupKind::Opq, static_cast<size_t>(p), static_cast<size_t>(q)};
  }
  if (kind == "so") {
    if (!complex) throw ParseError("so is supported over C only");
    if (n <= 0) throw ParseError("so needs a positive --n");
    return GroupSpec{GroupKind::SOC, static_cast<size_t>(n), 0};
  }
  throw ParseError("kind must be sp, o, or so");
}

std::string group_label(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::SpC: return "sp" + std::to_string(2 * g.p) + "C";
    case GroupKind::SpR: return "sp" + std::to_string(2 * g.p) + "R";
    case GroupKind::OC: return "o" + std::to_string(g.p) + "C";
    case GroupKind::SOC: return "so" + std::to_string(g.p) + "C";
    case GroupKind::Opq:
      return "o" + std::to_string(g.p) + "_" + std::to_string(g.q) + "R";
  }
  return "?";
}

// diagram argument: literal text like "3+ 2 2 1-", or a path to a file
// whose first line is that text
SignedDiagram diagram_arg(const std::string& arg) {
  std::ifstream in(arg);
  std::string text = arg;
  if (in) std::getline(in, text);
  try {
    return parse_diagram(text);
  } catch (const std::exception& e) {
    throw ParseError("cannot parse diagram '" + text + "': " + e.what());
  }
}

std::vector<int> parse_roots(const std::string& spec) {
  std::vector<int> roots;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      roots.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ParseError("bad root list '" + spec + "'");
    }
  }
  if (roots.empty()) throw ParseError("empty root list");
  return roots;
}

// the three-generator cone of the (2,1,0,0) frame whose second generator
// deforms the first direction
struct ConeFixture {
  std::vector<Mat<Scalar>> gens;
  Mat<Scalar> gram;
  long weight = 2;
  std::optional<weight2::Weight2Model> model;
};

ConeFixture cone_fixture(const std::string& name) {
  if (name == "deformed3") {
    weight2::Weight2Model md = weight2::build_model(2, 1, 0, 0);
    auto ydir = [&](std::initializer_list<std::initializer_list<long>> rows) {
      Mat<Scalar> ym(3, 2);
      size_t r = 0;
      for (auto& row : rows) {
        size_t c = 0;
        for (long v : row) ym(r, c++) = Scalar(v);
        ++r;
      }
      return weight2::from_g_coords(md, Mat<Scalar>(0, 0), ym);
    };
    ConeFixture cf;
    cf.gens = {ydir({{1, 0}, {0, 0}, {0, 0}}), ydir({{1, 0}, {0, 0}, {1, 0}}),
               ydir({{0, 0}, {0, 1}, {0, 0}})};
    cf.gram = md.q;
    cf.model = md;
    return cf;
  }
  throw ParseError("unknown cone fixture '" + name + "' (known: deformed3)");
}

int report_and_exit(const Report& rep) {
  std::cout << rep.text();
  std::cout << (rep.ok() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{"exact classification of nilpotent orbits, weight filtrations, "
               "commuting nilpotent systems, and polarization certificates"};
  app.require_subcommand(1);

  std::string input, fix, out_path;
  long op_index = 0;

  // --- classify
  auto* c_classify = app.add_subcommand(
      "classify", "signed Young diagram of a nilpotent isometry");
  c_classify->add_option("--input", input, "system file");
  c_classify->add_option("--fixture", fix, "built-in fixture name");
  c_classify->add_option("--op", op_index, "operator index (1-based; 0 = sum)");
  long cl_weight = 0;
  bool cl_has_weight = false;
  c_classify->add_option("--weight", cl_weight, "weight of the form")
      ->each([&](const std::string&) { cl_has_weight = true; });

  // --- enumerate
  auto* c_enum = app.add_subcommand(
      "enumerate", "admissible signed Young diagrams of a classical group");
  std::string g_kind = "sp", g_field = "C";
  long g_n = 0, g_p = -1, g_q = -1;
  for (auto* c : {c_enum}) {
    c->add_option("--kind", g_kind, "sp | o | so");
    c->add_option("--field", g_field, "C | R");
    c->add_option("--n", g_n, "space dimension");
    c->add_option("--p", g_p, "positive part (o over R)");
    c->add_option("--q", g_q, "negative part (o over R)");
  }

  // --- order
  auto* c_order = app.add_subcommand(
      "order", "closure order between two signed Young diagrams");
  std::string lhs, rhs;
  c_order->add_option("--lhs", lhs, "diagram text or file")->required();
  c_order->add_option("--rhs", rhs, "diagram text or file")->required();
  std::string o_kind, o_field = "C";
  long o_n = 0, o_p = -1, o_q = -1;
  c_order->add_option("--kind", o_kind, "optional group kind for admissibility");
  c_order->add_option("--field", o_field, "C | R");
  c_order->add_option("--n", o_n, "space dimension");
  c_order->add_option("--p", o_p, "positive part");
  c_order->add_option("--q", o_q, "negative part");

  // --- hasse
  auto* c_hasse = app.add_subcommand(
      "hasse", "DOT graph of the closure order of a classical group");
  c_hasse->add_option("--kind", g_kind, "sp | o | so");
  c_hasse->add_option("--field", g_field, "C | R");
  c_hasse->add_option("--n", g_n, "space dimension");
  c_hasse->add_option("--p", g_p, "positive part (o over R)");
  c_hasse->add_option("--q", g_q, "negative part (o over R)");
  c_hasse->add_option("--out", out_path, "write DOT here instead of stdout");

  // --- wfilt
  auto* c_wfilt = app.add_subcommand(
      "wfilt", "weight filtration of a nilpotent operator");
  c_wfilt->add_option("--input", input, "system file");
  c_wfilt->add_option("--fixture", fix, "built-in fixture name");
  c_wfilt->add_option("--op", op_index, "operator index (1-based; 0 = sum)");
  long center = 0;
  c_wfilt->add_option("--center", center, "center the filtration at this weight");

  // --- relwfilt
  auto* c_relw = app.add_subcommand(
      "relwfilt", "relative weight filtration of N over W (may not exist)");
  c_relw->add_option("--input", input, "system file with n and w");
  c_relw->add_option("--fixture", fix, "built-in fixture name");
  c_relw->add_option("--op", op_index, "operator index (1-based; 0 = sum)");

  // --- deligne-chain
  auto* c_chain = app.add_subcommand(
      "deligne-chain", "gradings and sl2 data of a compatible system");
  c_chain->add_option("--input", input, "system file with w, ns, y");
  c_chain->add_option("--fixture", fix, "built-in fixture name");

  // --- deform
  auto* c_deform = app.add_subcommand(
      "deform", "deformation directions preserving the sl2 data");
  c_deform->add_option("--input", input, "system file with w, ns, y (and gram)");
  c_deform->add_option("--fixture", fix, "built-in fixture name");

  // --- assemble
  auto* c_assemble = app.add_subcommand(
      "assemble", "rebuild a one-variable system from its split data");
  c_assemble->add_option("--input", input,
                         "file with w, nhat, h, y0, nminus")->required();

  // --- phi
  auto* c_phi = app.add_subcommand(
      "phi", "triangular substitution of system variables");
  c_phi->add_option("--input", input, "system file with ns");
  c_phi->add_option("--fixture", fix, "built-in fixture name");
  std::string phi_a = "1";
  c_phi->add_option("--a", phi_a, "substitution parameter (rational)");

  // --- dh-check
  auto* c_dh = app.add_subcommand(
      "dh-check", "axioms of a compatible system with a Hodge filtration");
  c_dh->add_option("--input", input, "system file with w, ns, f");
  c_dh->add_option("--fixture", fix, "built-in fixture name");

  // --- imhm-check
  auto* c_imhm = app.add_subcommand(
      "imhm-check", "graded-polarized horizontal system axioms");
  c_imhm->add_option("--input", input, "system file with w, ns, f, gr_forms");
  c_imhm->add_option("--fixture", fix,
                     "built-in fixture; graded forms found by feasibility search");

  // --- polarize
  auto* c_pol = app.add_subcommand(
      "polarize", "polarizing-form feasibility with an exact certificate");
  c_pol->add_option("--input", input, "system file with ns, f, weight");
  c_pol->add_option("--fixture", fix, "built-in fixture name");

  // --- chromosome
  auto* c_chrom = app.add_subcommand(
      "chromosome", "signed diagram of a nilpotent isometry, row by row");
  c_chrom->add_option("--input", input, "system file");
  c_chrom->add_option("--fixture", fix, "built-in fixture name");
  c_chrom->add_option("--op", op_index, "operator index (1-based; 0 = sum)");

  // --- weight2-model
  auto* c_model = app.add_subcommand(
      "weight2-model", "explicit frame with Hodge numbers (2, *, 2)");
  long ma = 0, mb = 0, mc = 0, mdl = 0;
  c_model->add_option("--a", ma, "long strings")->required();
  c_model->add_option("--b", mb, "negative lines")->required();
  c_model->add_option("--c", mc, "short string pairs")->required();
  c_model->add_option("--d", mdl, "fixed pairs")->required();
  bool model_full = false;
  c_model->add_flag("--full", model_full, "also print the frame matrices");

  // --- cone-check
  auto* c_cone = app.add_subcommand(
      "cone-check", "probe a cone of commuting nilpotent isometries");
  c_cone->add_option("--input", input, "file with gens, gram, weight");
  std::string cone_fix;
  c_cone->add_option("--fixture", cone_fix, "built-in cone fixture (deformed3)");
  long cone_m = 0;
  std::string cone_roots;
  c_cone->add_option("--m", cone_m, "root-frame dimension (>= 8)");
  c_cone->add_option("--roots", cone_roots, "comma list from 1..4");

  // --- root-sl2
  auto* c_root = app.add_subcommand(
      "root-sl2", "commuting root triples and their generic class");
  long root_m = 9;
  std::string root_roots = "1,2,3,4";
  c_root->add_option("--m", root_m, "frame dimension (>= 8)");
  c_root->add_option("--roots", root_roots, "comma list from 1..4");
  bool root_table = false;
  c_root->add_flag("--table", root_table, "classify every nonempty subset");

  // --- counterexample
  auto* c_cx = app.add_subcommand(
      "counterexample", "a compatible pair passing every axiom yet admitting "
                        "no polarizing form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    // -----------------------------------------------------------------
    if (c_classify->parsed() || c_chrom->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.gram) throw ParseError("need a gram matrix (or a fixture that has one)");
      Mat<Scalar> n = pick_operator(s, op_index);
      BilinearForm q{*s.gram, s.parity};
      std::optional<long> wt;
      if (cl_has_weight) wt = cl_weight;
      else if (s.has_weight) wt = s.weight;
      SignedDiagram d = wt ? signed_diagram_of(n, q, *wt) : signed_diagram_of(n, q);
      std::cout << "diagram: " << to_text(d) << "\n";
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_enum->parsed()) {
      GroupSpec g = group_of(g_kind, g_field, g_n, g_p, g_q);
      auto all = enumerate_admissible(g);
      std::cout << "group: " << group_label(g) << "\n";
      std::cout << "classes: " << all.size() << "\n";
      for (const auto& d : all) std::cout << to_text(d) << "\n";
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_order->parsed()) {
      SignedDiagram a = diagram_arg(lhs), b = diagram_arg(rhs);
      bool leq;
      if (!o_kind.empty()) {
        GroupSpec g = group_of(o_kind, o_field, o_n, o_p, o_q);
        if (!admissible(a, g) || !admissible(b, g))
          throw ParseError("a diagram is not admissible for " + group_label(g));
        leq = closure_leq(a, b, g);
      } else {
        leq = dokovic_leq(a, b);
      }
      std::cout << "LEQ: " << (leq ? "true" : "false") << "\n";
      return leq ? 0 : 1;
    }

    // -----------------------------------------------------------------
    if (c_hasse->parsed()) {
      GroupSpec g = group_of(g_kind, g_field, g_n, g_p, g_q);
      auto all = enumerate_admissible(g);
      std::vector<std::string> labels;
      for (const auto& d : all) labels.push_back(to_text(d));
      auto edges = hasse_edges(all, [&](const SignedDiagram& a, const SignedDiagram& b) {
        return closure_leq(a, b, g);
      });
      std::string dot = dot_graph(labels, edges, group_label(g));
      if (!out_path.empty()) {
        std::ofstream of(out_path);
        if (!of) throw ParseError("cannot write " + out_path);
        of << dot;
        std::cout << "wrote " << out_path << "\n";
      } else {
        std::cout << dot;
      }
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_wfilt->parsed()) {
      SystemData s = load_system(input, fix);
      Mat<Scalar> n = pick_operator(s, op_index);
      long c0 = c_wfilt->count("--center") ? center : (s.has_weight ? s.weight : 0);
      auto w = monodromy_filtration(n, c0);
      std::cout << "center: " << c0 << "\n";
      print_filtration("weight filtration", w);
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_relw->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.w) throw ParseError("need a base filtration w");
      Mat<Scalar> n = pick_operator(s, op_index);
      auto m = relative_monodromy_filtration(n, *s.w);
      if (!m) {
        std::cout << "relative weight filtration: does not exist\n";
        return 1;
      }
      print_filtration("relative weight filtration", *m);
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_chain->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.w || !s.y) throw ParseError("need w and y");
      DeligneSystem sys{*s.w, s.ns, *s.y};
      auto chk = check_deligne_system(sys);
      if (!chk.ok) {
        std::cout << "not a compatible system: " << chk.error << "\n";
        return 1;
      }
      Chain c = build_chain(sys);
      std::cout << "variables: " << sys.vars() << "\n";
      for (size_t j = 0; j < c.y.size(); ++j)
        print_mat("Y^" + std::to_string(j), c.y[j]);
      for (size_t j = 0; j < c.nhat.size(); ++j) {
        print_mat("H_" + std::to_string(j + 1), c.h[j]);
        print_mat("Nhat_" + std::to_string(j + 1), c.nhat[j]);
      }
      for (size_t j = 0; j < c.tower.size(); ++j)
        print_filtration("W^" + std::to_string(j), c.tower[j]);
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_deform->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.w || !s.y) throw ParseError("need w and y");
      DeligneSystem sys{*s.w, s.ns, *s.y};
      Chain c = build_chain(sys);
      size_t r = sys.vars();
      if (r < 1) throw ParseError("need at least one operator");
      // directions deforming the last operator while fixing the earlier
      // ones and (when a pairing is given) staying infinitesimal isometries
      std::vector<std::function<Mat<Scalar>(const Mat<Scalar>&)>> extra;
      for (size_t j = 0; j + 1 < r; ++j) {
        Mat<Scalar> nj = s.ns[j];
        extra.push_back([nj](const Mat<Scalar>& g) { return commutator(nj, g); });
      }
      if (s.gram) {
        Mat<Scalar> q = *s.gram;
        extra.push_back([q](const Mat<Scalar>& g) { return g.transpose() * q + q * g; });
      }
      auto basis = deformation_space(c.y[r - 1], c.h[r - 1], c.nplus[r - 1], extra);
      std::cout << "dimension: " << basis.size() << "\n";
      for (size_t i = 0; i < basis.size(); ++i)
        print_mat("direction " + std::to_string(i + 1), basis[i]);
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_assemble->parsed()) {
      json j = read_json_file(input);
      for (const char* key : {"w", "nhat", "h", "y0", "nminus"})
        if (!j.contains(key)) throw ParseError(std::string("missing ") + key);
      Mat<Scalar> nhat = mat_q(j["nhat"]);
      size_t d = nhat.rows();
      auto w = filt_of<Scalar, Filtration<Scalar>>(j["w"], d);
      std::string why;
      auto sys = psi_inverse(w, nhat, mat_q(j["h"]), mat_q(j["y0"]),
                             mat_q(j["nminus"]), &why);
      if (!sys) {
        std::cout << "cannot assemble: " << why << "\n";
        return 1;
      }
      print_mat("N", sys->ns[0]);
      print_mat("Y", sys->y);
      std::cout << "assembled: ok\n";
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_phi->parsed()) {
      SystemData s = load_system(input, fix);
      Scalar a = parse_rational(phi_a);
      auto out = kato_phi(s.ns, a);
      std::cout << "a: " << to_string(a) << "\n";
      for (size_t j = 0; j < out.size(); ++j)
        print_mat("N'_" + std::to_string(j + 1), out[j]);
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_dh->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.w || !s.f) throw ParseError("need w and f");
      return report_and_exit(check_dh(DHSystem{*s.w, s.ns, *s.f}));
    }

    // -----------------------------------------------------------------
    if (c_imhm->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.w || !s.f) throw ParseError("need w and f");
      std::map<long, Mat<Scalar>> forms = s.gr_forms;
      if (forms.empty()) {
        // search for graded polarizing forms level by level
        auto [ok, certs] = check_graded_polarizable(DHSystem{*s.w, s.ns, *s.f});
        if (!ok) {
          std::cout << "no polarizing form on some graded piece\n";
          return 1;
        }
        for (const auto& [k, cert] : certs) forms[k] = cert.sample;
      }
      return report_and_exit(check_imhm(IMHMData{*s.w, s.ns, *s.f, forms}));
    }

    // -----------------------------------------------------------------
    if (c_pol->parsed()) {
      SystemData s = load_system(input, fix);
      if (!s.f || !s.has_weight) throw ParseError("need f and weight");
      auto cert = polarization_feasibility(s.ns, *s.f, s.weight, s.names);
      if (cert.feasible) {
        std::cout << "polarization: FEASIBLE\n";
        print_mat("sample form", cert.sample);
        return 0;
      }
      std::cout << "polarization: INFEASIBLE\n";
      std::cout << "forced: " << cert.forced_identity << "\n";
      std::cout << "required: " << cert.required_positive << "\n";
      return 1;
    }

    // -----------------------------------------------------------------
    if (c_model->parsed()) {
      weight2::Weight2Model md = weight2::build_model(ma, mb, mc, mdl);
      std::cout << "dim: " << md.dim << "\n";
      std::cout << "hodge numbers: (" << md.h20() << ", " << md.h11() << ", "
                << md.h20() << ")\n";
      std::cout << "limit diamond parameters (a, b, c, d): (" << md.a << ", "
                << md.b << ", " << md.c << ", " << md.d << ")\n";
      auto cap = weight2::max_cone_dim(ma, mb, mc, mdl);
      if (cap)
        std::cout << "max cone dimension: " << *cap << "\n";
      else
        std::cout << "max cone dimension: unknown for a > 2\n";
      std::cout << "real rank bound: " << weight2::real_rank_bound(ma, mb, mc)
                << "\n";
      std::cout << "factor geometry: "
                << (weight2::hermitian_v0_factor(ma)
                        ? "hermitian"
                        : (weight2::contact_v0_factor(md) ? "contact" : "general"))
                << "\n";
      std::cout << "diagram: "
                << to_text(signed_diagram_of(md.n0 + md.n1,
                                             BilinearForm{md.q, 1}, 2))
                << "\n";
      if (model_full) {
        print_mat("pairing", md.q);
        print_mat("N (limit direction)", md.n0 + md.n1);
        print_mat("grading", md.y);
      }
      return 0;
    }

    // -----------------------------------------------------------------
    if (c_cone->parsed()) {
      std::vector<Mat<Scalar>> gens;
      Mat<Scalar> gram;
      long weight = 2;
      std::optional<weight2::Weight2Model> md;
      if (!cone_fix.empty()) {
        ConeFixture cf = cone_fixture(cone_fix);
        gens = cf.gens;
        gram = cf.gram;
        weight = cf.weight;
        md = cf.model;
      } else if (cone_m > 0) {
        if (cone_roots.empty()) throw ParseError("need --roots with --m");
        auto data = weight2::build_root_sl2s(cone_m, parse_roots(cone_roots));
        std::map<int, Scalar> coeff{{1, Scalar(1)}, {2, Scalar(1)},
                                    {3, Scalar(-1)}, {4, Scalar(-1)}};
        for (size_t i = 0; i < data.triples.size(); ++i)
          gens.push_back(data.triples[i].nminus * coeff[data.roots[i]]);
        gram = data.gram;
      } else if (!input.empty()) {
        json j = read_json_file(input);
        if (!j.contains("gens") || !j.contains("gram"))
          throw ParseError("need gens and gram");
        for (const auto& jm : j["gens"]) gens.push_back(mat_q(jm));
        gram = mat_q(j["gram"]);
        if (j.contains("weight")) weight = j["weight"].get<long>();
      } else {
        throw ParseError("need --input, --fixture, or --m/--roots");
      }
      auto rep = weight2::cone_check(gens, gram, weight, md ? &*md : nullptr);
      std::cout << rep.text();
      std::cout << "dimension: " << rep.dim << "\n";
      std::cout << (rep.ok ? "RESULT: PASS (probed, not proved)" : "RESULT: FAIL")
                << "\n";
      return rep.ok ? 0 : 1;
    }

    // -----------------------------------------------------------------
    if (c_root->parsed()) {
      auto roots = parse_roots(root_roots);
      auto data = weight2::build_root_sl2s(root_m, roots);
      bool ok = true;
      for (const auto& t : data.triples) {
        if (commutator(t.nplus, t.nminus) != t.h) ok = false;
        if (commutator(t.h, t.nminus) != Scalar(-2) * t.nminus) ok = false;
        if (commutator(t.h, t.nplus) != Scalar(2) * t.nplus) ok = false;
        if (!is_infinitesimal_isometry(t.nminus, data.gram)) ok = false;
      }
      for (size_t i = 0; i < data.triples.size(); ++i)
        for (size_t j = i + 1; j < data.triples.size(); ++j)
          if (!commutator(data.triples[i].nminus, data.triples[j].nminus)
                   .is_zero_matrix())
            ok = false;
      std::cout << "m: " << root_m << "\n";
      std::cout << "triples: " << data.triples.size()
                << (ok ? " (sl2 relations and commutation verified)"
                       : " (RELATIONS FAILED)")
                << "\n";
      auto classify_subset = [&](const std::vector<int>& sub) {
        auto d = weight2::build_root_sl2s(root_m, sub);
        auto t = weight2::classify_h2x2_type(d.generic, d.gram, root_m);
        std::string got = t ? weight2::type_name(*t) : "?";
        std::string want = weight2::type_name(weight2::predicted_type(sub));
        std::string label;
        for (size_t i = 0; i < sub.size(); ++i)
          label += (i ? "," : "") + std::to_string(sub[i]);
        std::cout << "{" << label << "}: type " << got << " (expected " << want
                  << (got == want ? ")" : ") MISMATCH") << "\n";
        return got == want;
      };
      if (root_table) {
        for (int mask = 1; mask < 16; ++mask) {
          std::vector<int> sub;
          for (int r = 1; r <= 4; ++r)
            if (mask & (1 << (r - 1))) sub.push_back(r);
          if (!classify_subset(sub)) ok = false;
        }
      } else {
        if (!classify_subset(roots)) ok = false;
      }
      return ok ? 0 : 1;
    }

    // -----------------------------------------------------------------
    if (c_cx->parsed()) {
      SystemData s = fixture("counterexample");
      Report rep = check_dh(DHSystem{*s.w, s.ns, *s.f});
      std::cout << rep.text();
      std::cout << "DH2: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
      auto cert = polarization_feasibility(s.ns, *s.f, s.weight, s.names);
      if (cert.feasible) {
        std::cout << "polarization: FEASIBLE (unexpected)\n";
        return 1;
      }
      std::cout << "polarization: INFEASIBLE (forced " << cert.forced_identity
                << ", required " << cert.required_positive << ")\n";
      bool reproduced = rep.ok() &&
                        cert.forced_identity.find("Q(e2, f2)") != std::string::npos &&
                        cert.required_positive == "Q(e2, f2) > 0";
      std::cout << (reproduced ? "RESULT: REPRODUCED" : "RESULT: NOT REPRODUCED")
                << "\n";
      return reproduced ? 0 : 1;
    }

    throw ParseError("no subcommand dispatched");
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
