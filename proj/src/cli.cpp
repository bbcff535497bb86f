#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bar1v/bar1.hpp"
#include "bar1v/checker.hpp"
#include "bar1v/error.hpp"
#include "bar1v/generators.hpp"
#include "bar1v/io.hpp"

namespace bar1v {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

GraphDocument generate_family(const Family& fam) {
  GraphDocument doc;
  doc.family = fam;
  if (fam.name == "diagonal-grid") {
    doc.graph = gen_diagonal_grid({fam.p, fam.q});
  } else if (fam.name == "recursive-quadrangle") {
    doc.graph = gen_recursive_quadrangle({fam.depth, fam.optimal});
  } else if (fam.name == "pdw-even") {
    doc.graph = gen_pseudo_double_wheel_even(fam.n);
  } else if (fam.name == "pdw-odd") {
    doc.graph = gen_pseudo_double_wheel_odd(fam.n);
  } else if (fam.name == "quadrangle-chain") {
    doc.graph = gen_quadrangle_chain(fam.k);
  } else {
    fail(Err::InvalidParams, "unknown family " + fam.name);
  }
  return doc;
}

bool same_edge_set(const Graph1Planar& a, const Graph1Planar& b) {
  if (a.vertex_count != b.vertex_count || a.m() != b.m()) return false;
  auto key = [](const Graph1Planar& g) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) e.push_back(u < v ? std::pair{u, v} : std::pair{v, u});
    std::sort(e.begin(), e.end());
    return e;
  };
  return key(a) == key(b);
}

BarDrawing draw_document(const GraphDocument& doc, const std::string& algorithm) {
  std::string algo = algorithm;
  if (algo.empty()) {
    if (doc.family)
      algo = doc.family->name;
    else if (doc.graph.outer_order)
      algo = "maximal-outer";
    else
      fail(Err::InvalidParams, "no family metadata; pass --algorithm");
  }
  if (algo == "maximal-outer" || algo == "quadrangle-chain") return draw_maximal_outer(doc.graph);

  if (!doc.family || doc.family->name != algo)
    fail(Err::InvalidParams, "algorithm " + algo + " needs matching family metadata");
  const Family& fam = *doc.family;
  BarDrawing d;
  if (algo == "diagonal-grid")
    d = draw_diagonal_grid({fam.p, fam.q});
  else if (algo == "recursive-quadrangle")
    d = draw_recursive_quadrangle({fam.depth, fam.optimal});
  else if (algo == "pdw-even")
    d = draw_pdw_even(fam.n);
  else if (algo == "pdw-odd")
    d = draw_pdw_odd(fam.n);
  else
    fail(Err::InvalidParams, "unknown algorithm " + algo);
  if (!same_edge_set(doc.graph, generate_family(fam).graph))
    fail(Err::InvalidParams, "document does not match its family metadata");
  return d;
}

void print_report(std::ostream& os, const ValidationReport& rep) {
  os << "verdict: " << (rep.pass ? "pass" : "fail") << " (k=" << rep.k << ")\n";
  os << "n=" << rep.bounds.n << " m=" << rep.bounds.m << " max_crossing=" << rep.max_crossing()
     << "\n";
  int crossers = 0;
  for (int c : rep.crossing_count)
    if (c > 0) ++crossers;
  os << "segments crossing a bar: " << crossers << "\n";
  for (const auto& v : rep.violations)
    os << "violation " << to_string(v.kind) << " [" << v.index << "]: " << v.detail << "\n";
  for (size_t e = 0; e < rep.crossing_count.size(); ++e)
    if (rep.crossing_count[e] > rep.k)
      os << "edge " << e << " crosses " << rep.crossing_count[e] << " bars (limit " << rep.k
         << ")\n";
}

void print_bounds(std::ostream& os, const EdgeBounds& b) {
  os << "n=" << b.n << " m=" << b.m << "\n";
  auto line = [&](const char* name, bool applies, int limit, bool within) {
    os << name << " (m <= " << limit << "): "
       << (applies ? (within ? "satisfied" : "violated") : "not applicable") << "\n";
  };
  line("1-planar bound 4n-8", b.applies_1planar, b.limit_1planar, b.within_1planar);
  line("RAC bound 4n-10", b.applies_rac, b.limit_rac, b.within_rac);
  line("bar 1-visible bound 6n-20", b.applies_bar1visible, b.limit_bar1visible,
       b.within_bar1visible);
  if (b.optimal_1planar) os << "optimal 1-planar edge count\n";
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"bar 1-visibility drawings of 1-planar graph families"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "construct a family graph");
  Family fam;
  gen->add_option("--family", fam.name, "diagonal-grid | recursive-quadrangle | pdw-even | pdw-odd | quadrangle-chain")
      ->required();
  gen->add_option("--p", fam.p, "grid rows");
  gen->add_option("--q", fam.q, "grid columns");
  gen->add_option("--i", fam.depth, "recursion depth");
  gen->add_option("--n", fam.n, "half-cycle length");
  gen->add_option("--k", fam.k, "chain length");
  gen->add_flag("--optimal", fam.optimal, "optimal recursive-quadrangle variant");
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // draw
  auto* draw = app.add_subcommand("draw", "draw a graph document");
  std::string draw_in, draw_out, draw_algo;
  draw->add_option("graph", draw_in, "input graph document")->required();
  draw->add_option("-o,--output", draw_out, "output drawing document");
  draw->add_option("--algorithm", draw_algo,
                   "override: diagonal-grid | recursive-quadrangle | pdw-even | pdw-odd | maximal-outer");

  // validate
  auto* val = app.add_subcommand("validate", "check a drawing against its graph");
  std::string val_graph, val_drawing;
  int val_k = 1;
  val->add_option("graph", val_graph, "graph document")->required();
  val->add_option("drawing", val_drawing, "drawing document")->required();
  val->add_option("--k", val_k, "visibility parameter (default 1)");

  // render
  auto* ren = app.add_subcommand("render", "render a drawing to SVG");
  std::string ren_in, ren_out;
  SvgOptions svg_opts;
  ren->add_option("drawing", ren_in, "drawing document")->required();
  ren->add_option("-o,--output", ren_out, "output SVG file (default stdout)");
  ren->add_option("--unit", svg_opts.unit, "pixels per grid cell");
  ren->add_flag("--highlight-crossings", svg_opts.highlight_crossings, "mark crossings");

  // report
  auto* rep = app.add_subcommand("report", "edge-count bounds of a graph");
  std::string rep_in;
  rep->add_option("graph", rep_in, "graph document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      write_output(gen_out, serialize_graph(generate_family(fam)));
      return 0;
    }
    if (draw->parsed()) {
      const GraphDocument doc = parse_graph(read_file(draw_in));
      write_output(draw_out, serialize_drawing(draw_document(doc, draw_algo)));
      return 0;
    }
    if (val->parsed()) {
      const GraphDocument doc = parse_graph(read_file(val_graph));
      const BarDrawing d = parse_drawing(read_file(val_drawing));
      const ValidationReport report = validate(doc.graph, d, val_k);
      print_report(std::cout, report);
      return report.pass ? 0 : 2;
    }
    if (ren->parsed()) {
      const BarDrawing d = parse_drawing(read_file(ren_in));
      write_output(ren_out, render_svg(d, svg_opts));
      return 0;
    }
    if (rep->parsed()) {
      const GraphDocument doc = parse_graph(read_file(rep_in));
      print_bounds(std::cout, edge_bound_report(doc.graph));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace bar1v
