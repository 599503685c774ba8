#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shepkit/cccc.hpp"
#include "shepkit/classify.hpp"
#include "shepkit/complexes.hpp"
#include "shepkit/davis.hpp"
#include "shepkit/diagram.hpp"
#include "shepkit/forms.hpp"
#include "shepkit/groups.hpp"
#include "shepkit/milnor.hpp"
#include "shepkit/polytopes.hpp"
#include "shepkit/report.hpp"

namespace shepkit::cli {
namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

struct Options {
  std::string inline_text;
  std::string file_path;
  std::string format = "text";
  double tol = 1e-9;
  long long max_cosets = 2'000'000;
  bool slow_tests = true;
  std::string complex_kind;
  std::string certify_goal;

  bool has_input() const { return !inline_text.empty() || !file_path.empty(); }
};

ExtendedCoxeterDiagram load_diagram(const Options& o) {
  if (!o.file_path.empty()) {
    std::ifstream f(o.file_path);
    if (!f) throw std::runtime_error("cannot open " + o.file_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_diagram(ss.str());
  }
  return parse_diagram(o.inline_text);
}

std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"") == std::string::npos) return a;
  std::string q = "\"";
  for (char c : a) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + '"';
}

std::string echo_command(const std::vector<std::string>& args) {
  std::string s = "shepkit";
  for (const auto& a : args) {
    s += ' ';
    s += quote_arg(a);
  }
  return s;
}

void sort_cells(std::vector<std::vector<int>>& cells) {
  std::sort(cells.begin(), cells.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
}

json complex_json(const SimplicialComplex& sc) {
  json vs = json::array();
  for (int v : sc.vertex_ids())
    vs.push_back(json{{"id", v}, {"type", sc.type_of(v)}});
  std::vector<std::vector<int>> cells;
  for (const auto& s : sc.simplices())
    if (s.size() >= 2) cells.push_back(s);
  sort_cells(cells);
  return json{
      {"kind", "simplicial-complex"}, {"vertices", vs}, {"cells", cells}};
}

json k_json(const KComplex& k) {
  json vs = json::array();
  for (std::size_t i = 0; i < k.sfs.size(); ++i)
    vs.push_back(json{{"id", static_cast<int>(i)},
                      {"type", GeneratorSubset::from_bits(k.sfs[i]).str()}});
  std::vector<std::vector<int>> cells;
  for (auto [t1, t2] : k.cells) {
    if (t1 == t2) continue;
    std::vector<int> corners;
    for (std::size_t i = 0; i < k.sfs.size(); ++i) {
      uint32_t a = k.sfs[i];
      if ((t1 & ~a) == 0 && (a & ~t2) == 0)
        corners.push_back(static_cast<int>(i));
    }
    cells.push_back(std::move(corners));
  }
  sort_cells(cells);
  return json{{"kind", "cubical-complex"}, {"vertices", vs}, {"cells", cells}};
}

// Elements bottom-up: the empty face (id 0), proper faces rank-major, the
// top face last. Cells are the cover pairs, bounds included.
json poset_json(const FacePoset& p) {
  json vs = json::array();
  vs.push_back(json{{"id", 0}, {"type", "-1"}});
  std::vector<int> base(p.rank(), 0);
  int id = 1;
  for (int r = 0; r < p.rank(); ++r) {
    base[r] = id;
    for (int i = 0; i < p.count(r); ++i)
      vs.push_back(json{{"id", id++}, {"type", std::to_string(r)}});
  }
  int top = id;
  vs.push_back(json{{"id", top}, {"type", std::to_string(p.rank())}});
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < p.count(0); ++i) cells.push_back({0, base[0] + i});
  for (int r = 0; r + 1 < p.rank(); ++r)
    for (auto [i, j] : p.covers(r))
      cells.push_back({base[r] + i, base[r + 1] + j});
  for (int i = 0; i < p.count(p.rank() - 1); ++i)
    cells.push_back({base[p.rank() - 1] + i, top});
  sort_cells(cells);
  return json{{"kind", "face-poset"}, {"vertices", vs}, {"cells", cells}};
}

std::string dot_of(const std::vector<std::pair<int, std::string>>& nodes,
                   const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream os;
  os << "graph shepkit {\n";
  for (const auto& [id, label] : nodes) {
    os << "  n" << id;
    if (!label.empty()) os << " [label=\"" << label << "\"]";
    os << ";\n";
  }
  for (const auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_complex(const SimplicialComplex& sc) {
  std::vector<std::pair<int, std::string>> nodes;
  for (int v : sc.vertex_ids()) nodes.emplace_back(v, sc.type_of(v));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : sc.simplices_of_dim(1)) edges.emplace_back(e[0], e[1]);
  return dot_of(nodes, edges);
}

std::string dot_k(const KComplex& k) {
  std::vector<std::pair<int, std::string>> nodes;
  for (std::size_t i = 0; i < k.sfs.size(); ++i)
    nodes.emplace_back(static_cast<int>(i),
                       GeneratorSubset::from_bits(k.sfs[i]).str());
  std::vector<std::pair<int, int>> edges;
  for (auto [t1, t2] : k.cells) {
    uint32_t diff = t1 ^ t2;
    if (diff != 0 && (diff & (diff - 1)) == 0)
      edges.emplace_back(k.index_of(t1), k.index_of(t2));
  }
  std::sort(edges.begin(), edges.end());
  return dot_of(nodes, edges);
}

std::string dot_poset(const FacePoset& p) {
  std::vector<std::pair<int, std::string>> nodes;
  nodes.emplace_back(0, "empty");
  std::vector<int> base(p.rank(), 0);
  int id = 1;
  for (int r = 0; r < p.rank(); ++r) {
    base[r] = id;
    for (int i = 0; i < p.count(r); ++i) nodes.emplace_back(id++, p.label(r, i));
  }
  int top = id;
  nodes.emplace_back(top, "top");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p.count(0); ++i) edges.emplace_back(0, base[0] + i);
  for (int r = 0; r + 1 < p.rank(); ++r)
    for (auto [i, j] : p.covers(r))
      edges.emplace_back(base[r] + i, base[r + 1] + j);
  for (int i = 0; i < p.count(p.rank() - 1); ++i)
    edges.emplace_back(base[p.rank() - 1] + i, top);
  std::sort(edges.begin(), edges.end());
  return dot_of(nodes, edges);
}

void complex_summary(std::ostream& out, const SimplicialComplex& sc) {
  out << "dimension " << sc.dimension() << "\n";
  out << "vertices " << sc.num_vertices() << "\n";
  for (int d = 1; d <= sc.dimension(); ++d)
    out << "simplices of dimension " << d << ": "
        << sc.simplices_of_dim(d).size() << "\n";
  out << "euler characteristic " << sc.euler_characteristic() << "\n";
  out << "connected " << (sc.is_connected() ? "yes" : "no") << "\n";
}

json report_json(const Report& r, const std::vector<std::string>& args) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"kind", "report"},
              {"command", args},
              {"title", r.title},
              {"checks_version", r.checks_version},
              {"checks", checks},
              {"pass", r.pass()}};
}

int emit_report(const Report& r, const Options& o,
                const std::vector<std::string>& args, std::ostream& out) {
  if (o.format == "json") {
    out << report_json(r, args).dump(2) << "\n";
  } else {
    out << "command: " << echo_command(args) << "\n";
    out << r.title << " (" << r.checks_version << ")\n";
    for (const auto& c : r.checks) {
      out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << " - " << c.detail;
      out << "\n";
    }
    out << "verdict: " << (r.pass() ? "pass" : "fail") << "\n";
  }
  return r.pass() ? kPass : kNegative;
}

int run_classify(const Options& o, std::ostream& out) {
  auto cls = classify(load_diagram(o));
  std::string name;
  for (const auto& c : cls.components) {
    if (!name.empty()) name += " x ";
    name += c.type.str();
  }
  bool finite = cls.is_finite();
  if (o.format == "json") {
    json comps = json::array();
    for (const auto& c : cls.components)
      comps.push_back(
          json{{"support", c.support.str()}, {"type", c.type.str()}});
    json j{{"kind", "classification"},
           {"components", comps},
           {"finite", finite},
           {"order", finite ? json(*cls.order()) : json(nullptr)}};
    out << j.dump(2) << "\n";
  } else {
    out << name << ": " << (finite ? "finite" : "infinite") << "\n";
    if (finite) out << "order " << *cls.order() << "\n";
  }
  return finite ? kPass : kNegative;
}

int run_form(const Options& o, std::ostream& out) {
  auto d = load_diagram(o);
  auto h = hermitian_matrix(d);
  auto v = is_positive_definite(h, o.tol);
  if (o.format == "json") {
    std::vector<std::vector<double>> rows(h.size(),
                                          std::vector<double>(h.size()));
    for (int i = 0; i < h.size(); ++i)
      for (int j = 0; j < h.size(); ++j) rows[i][j] = h.at(i, j);
    json j{{"kind", "form"},
           {"size", h.size()},
           {"matrix", rows},
           {"positive_definite", v.positive_definite},
           {"leading_minors", v.leading_minors}};
    if (!v.positive_definite) {
      j["witness"] = v.witness;
      j["witness_value"] = v.witness_value;
    }
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(12);
    out << "hermitian form, size " << h.size() << "\n";
    for (int i = 0; i < h.size(); ++i) {
      out << " ";
      for (int j = 0; j < h.size(); ++j) out << " " << h.at(i, j);
      out << "\n";
    }
    out << "leading minors:";
    for (double m : v.leading_minors) out << " " << m;
    out << "\n";
    out << "positive definite: " << (v.positive_definite ? "yes" : "no")
        << "\n";
    if (!v.positive_definite) {
      out << "witness x with x^T H x = " << v.witness_value << ":";
      for (double x : v.witness) out << " " << x;
      out << "\n";
    }
  }
  return v.positive_definite ? kPass : kNegative;
}

int run_order(const Options& o, std::ostream& out) {
  auto n = group_order(load_diagram(o), o.max_cosets);
  if (o.format == "json") {
    json j{{"kind", "order"},
           {"finite", n.has_value()},
           {"order", n ? json(*n) : json(nullptr)}};
    out << j.dump(2) << "\n";
  } else {
    if (n)
      out << *n << "\n";
    else
      out << "infinite" << "\n";
  }
  return n ? kPass : kNegative;
}

int run_complex(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.complex_kind == "hessian") {
    if (o.has_input()) {
      err << "error: complex hessian takes no diagram input\n";
      return kUsage;
    }
    auto [data, poset] = hessian();
    if (o.format == "json") {
      out << poset_json(poset).dump(2) << "\n";
    } else if (o.format == "dot") {
      out << dot_poset(poset);
    } else {
      out << "rank " << poset.rank() << "\n";
      out << "faces by rank:";
      for (int r = 0; r < poset.rank(); ++r) out << " " << poset.count(r);
      out << "\n";
      out << "flags " << poset.flag_count() << "\n";
    }
    return kPass;
  }
  if (!o.has_input()) {
    err << "error: complex " << o.complex_kind
        << " needs --inline or --file\n";
    return kUsage;
  }
  auto d = load_diagram(o);
  if (o.complex_kind == "theta") {
    auto m = milnor_complex(d, o.max_cosets);
    if (o.format == "json")
      out << complex_json(m.complex).dump(2) << "\n";
    else if (o.format == "dot")
      out << dot_complex(m.complex);
    else
      complex_summary(out, m.complex);
  } else {
    auto k = build_k(d);
    if (o.format == "json") {
      out << k_json(k).dump(2) << "\n";
    } else if (o.format == "dot") {
      out << dot_k(k);
    } else {
      out << "spherical subsets " << k.sfs.size() << "\n";
      out << "cells " << k.cells.size() << "\n";
      complex_summary(out, k.derived);
    }
  }
  return kPass;
}

int run_cccc(const Options& o, const std::vector<std::string>& args,
             std::ostream& out) {
  if (!o.has_input())
    return emit_report(certify_hessian_cat1(o.slow_tests), o, args, out);

  auto d = load_diagram(o);
  if (d.size() != 3 || !d.is_path())
    throw std::invalid_argument(
        "cccc needs a three-vertex path diagram (or no input for the "
        "Hessian complex)");
  auto m = milnor_complex(d, o.max_cosets);
  auto po = d.path_order();
  std::map<std::string, std::string> marking{
      {std::to_string(po[0]), "a"},
      {std::to_string(po[1]), "b"},
      {std::to_string(po[2]), "c"}};
  Report rep{"CCCC certificate", "cccc-checks/1", {}};
  try {
    auto marked = mark_a3(m.complex.retyped(marking));
    auto cr = check_cccc(marked);
    rep.add("marking-valid", true,
            std::to_string(m.complex.num_vertices()) + " vertices");

    std::string c1_detail = std::to_string(cr.cond1.size()) + " links";
    bool c1 = true;
    for (const auto& r : cr.cond1) {
      if (r.pass) continue;
      c1 = false;
      c1_detail = "vertex " + std::to_string(r.vertex) + " (" + r.type +
                  ") girth " +
                  (r.girth ? std::to_string(*r.girth) : std::string("none"));
      break;
    }
    rep.add("ac-links-girth-at-least-6", c1, c1_detail);

    std::string c2_detail = std::to_string(cr.cond2.size()) + " links";
    bool c2 = true;
    for (const auto& r : cr.cond2) {
      if (r.pass) continue;
      c2 = false;
      c2_detail = "vertex " + std::to_string(r.vertex) +
                  (r.sides ? " sides (" + std::to_string(r.sides->first) +
                                 "," + std::to_string(r.sides->second) + ")"
                           : " not complete bipartite");
      break;
    }
    rep.add("b-links-complete-bipartite", c2, c2_detail);

    for (const auto& p : cr.cond3) {
      std::string detail = "cycles=" + std::to_string(p.cycles) +
                           " filled=" + std::to_string(p.filled);
      if (!p.unique_fillers) detail += " fillers not unique";
      if (!p.witness.empty()) {
        detail += " unfilled (";
        for (std::size_t i = 0; i < p.witness.size(); ++i) {
          if (i) detail += ",";
          detail += std::to_string(p.witness[i]);
        }
        detail += ")";
      }
      rep.add("pattern-" + p.pattern, p.pass, detail);
    }

    std::ostringstream census;
    census << std::setprecision(6) << "admitted";
    for (const auto& c : cr.loop_audit.admitted)
      census << " (" << c.j << "," << c.k << ")=" << c.length;
    census << " boundary";
    for (const auto& c : cr.loop_audit.boundary)
      census << " (" << c.j << "," << c.k << ")=" << c.length;
    rep.add("loop-audit", true, census.str());
  } catch (const MarkingError& e) {
    std::string detail;
    const auto& vs = e.violations();
    for (std::size_t i = 0; i < vs.size() && i < 3; ++i) {
      if (i) detail += "; ";
      detail += vs[i];
    }
    if (vs.size() > 3)
      detail += " (+" + std::to_string(vs.size() - 3) + " more)";
    rep.add("marking-valid", false, detail);
  }
  return emit_report(rep, o, args, out);
}

int run_girth(const Options& o, std::ostream& out) {
  auto d = load_diagram(o);
  auto g = theta_girth(d, o.max_cosets);
  std::optional<int> expected;
  if (d.size() == 2 && d.has_edge(0, 1) && d.m(0, 1).is_finite())
    expected = 2 * d.m(0, 1).value();
  bool match = !expected || (g && *g == *expected);
  if (o.format == "json") {
    json j{{"kind", "girth"},
           {"girth", g ? json(*g) : json(nullptr)},
           {"expected", expected ? json(*expected) : json(nullptr)},
           {"match", match}};
    out << j.dump(2) << "\n";
  } else {
    if (g)
      out << "girth " << *g << "\n";
    else
      out << "girth none" << "\n";
    if (expected)
      out << "expected " << *expected << " (twice the edge label): "
          << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kPass : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "shepkit: extended Coxeter diagrams, their groups, and their "
      "complexes"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c, bool required) {
    auto* g = c->add_option_group("input", "diagram source");
    g->add_option("--inline", o.inline_text,
                  "diagram in inline path form, e.g. \"3[3]3[3]3\"");
    g->add_option("--file", o.file_path,
                  "diagram file (inline or vertex/edge form)");
    if (required)
      g->require_option(1);
    else
      g->require_option(0, 1);
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(std::move(allowed)))
        ->capture_default_str();
  };
  auto add_max_cosets = [&](CLI::App* c) {
    c->add_option("--max-cosets", o.max_cosets, "coset enumeration cap")
        ->envname("SHEPKIT_MAX_COSETS")
        ->capture_default_str();
  };
  auto add_slow = [&](CLI::App* c) {
    c->add_flag("--slow-tests,!--no-slow-tests", o.slow_tests,
                "include the coset-model cross-checks (default on)");
  };

  auto* classify_cmd =
      app.add_subcommand("classify", "decide finiteness and name the type");
  add_input(classify_cmd, true);
  add_format(classify_cmd, {"text", "json"});

  auto* form_cmd =
      app.add_subcommand("form", "Hermitian form and positive definiteness");
  add_input(form_cmd, true);
  add_format(form_cmd, {"text", "json"});
  form_cmd->add_option("--tol", o.tol, "pivot tolerance")
      ->capture_default_str();

  auto* order_cmd =
      app.add_subcommand("order", "group order by coset enumeration");
  add_input(order_cmd, true);
  add_format(order_cmd, {"text", "json"});
  add_max_cosets(order_cmd);

  auto* complex_cmd =
      app.add_subcommand("complex", "build and export a complex");
  complex_cmd->add_option("kind", o.complex_kind, "theta | k | hessian")
      ->required()
      ->check(CLI::IsMember({"theta", "k", "hessian"}));
  add_input(complex_cmd, false);
  add_format(complex_cmd, {"text", "json", "dot"});
  add_max_cosets(complex_cmd);

  auto* hessian_cmd = app.add_subcommand(
      "hessian-verify", "verify the Hessian polyhedron from scratch");
  add_format(hessian_cmd, {"text", "json"});
  add_slow(hessian_cmd);

  auto* cccc_cmd = app.add_subcommand(
      "cccc",
      "check the cone, link, and filling conditions on a marked complex "
      "(no input: certify the Hessian complex)");
  add_input(cccc_cmd, false);
  add_format(cccc_cmd, {"text", "json"});
  add_max_cosets(cccc_cmd);
  add_slow(cccc_cmd);

  auto* certify_cmd =
      app.add_subcommand("certify", "certify theorem hypotheses");
  certify_cmd->add_option("goal", o.certify_goal, "moussong | cube")
      ->required()
      ->check(CLI::IsMember({"moussong", "cube"}));
  add_input(certify_cmd, true);
  add_format(certify_cmd, {"text", "json"});
  add_max_cosets(certify_cmd);

  auto* girth_cmd = app.add_subcommand(
      "girth", "girth of the Milnor fiber complex 1-skeleton");
  add_input(girth_cmd, true);
  add_format(girth_cmd, {"text", "json"});
  add_max_cosets(girth_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("shepkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(o, out);
    if (form_cmd->parsed()) return run_form(o, out);
    if (order_cmd->parsed()) return run_order(o, out);
    if (complex_cmd->parsed()) return run_complex(o, out, err);
    if (hessian_cmd->parsed())
      return emit_report(verify_hessian(o.slow_tests), o, args, out);
    if (cccc_cmd->parsed()) return run_cccc(o, args, out);
    if (certify_cmd->parsed()) {
      auto d = load_diagram(o);
      Report r = o.certify_goal == "moussong"
                     ? certify_moussong(d)
                     : certify_cubical(d, o.max_cosets);
      return emit_report(r, o, args, out);
    }
    if (girth_cmd->parsed()) return run_girth(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace shepkit::cli
