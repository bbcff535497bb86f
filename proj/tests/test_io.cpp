#include <doctest.h>

#include <string>

#include "bar1v/bar1.hpp"
#include "bar1v/error.hpp"
#include "bar1v/generators.hpp"
#include "bar1v/io.hpp"

using namespace bar1v;

namespace {

bool same_graph(const Graph1Planar& a, const Graph1Planar& b) {
  return a.vertex_count == b.vertex_count && a.edges == b.edges &&
         a.crossing_pairs == b.crossing_pairs && a.outer_order == b.outer_order &&
         a.labels == b.labels;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("graph documents round-trip") {
  GraphDocument doc;
  doc.graph = gen_diagonal_grid({2, 2});
  doc.family = Family{"diagonal-grid", 2, 2, 0, 0, 0, false};
  const std::string text = serialize_graph(doc);
  const GraphDocument back = parse_graph(text);
  CHECK(same_graph(doc.graph, back.graph));
  REQUIRE(back.family.has_value());
  CHECK(back.family->name == "diagonal-grid");
  CHECK(serialize_graph(back) == text);

  GraphDocument chain;
  chain.graph = gen_quadrangle_chain(3);
  const GraphDocument chain_back = parse_graph(serialize_graph(chain));
  CHECK(same_graph(chain.graph, chain_back.graph));
}

TEST_CASE("drawing documents round-trip") {
  const BarDrawing d = draw_pdw_even(3);
  const std::string text = serialize_drawing(d);
  const BarDrawing back = parse_drawing(text);
  CHECK(serialize_drawing(back) == text);
  CHECK(back.width() == d.width());
  CHECK(back.height() == d.height());
}

TEST_CASE("schema violations carry the offending field") {
  const std::string dup = R"({"schema_version":"1","n":3,"edges":[[0,1],[1,0]]})";
  try {
    parse_graph(dup);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SchemaViolation);
    CHECK(e.field == "edges[1]");
  }

  const std::string bad_cross =
      R"({"schema_version":"1","n":3,"edges":[[0,1],[1,2]],"crossings":[[0,7]]})";
  try {
    parse_graph(bad_cross);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SchemaViolation);
    CHECK(e.field == "crossings[0]");
  }

  const std::string unknown = R"({"schema_version":"1","n":1,"edges":[],"wat":3})";
  try {
    parse_graph(unknown);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SchemaViolation);
    CHECK(e.field == "wat");
  }

  const std::string bad_extents =
      R"({"schema_version":"1","bars":[{"v":0,"y":0,"x0":0,"x1":3}],"segments":[],"width":99,"height":1})";
  try {
    parse_drawing(bad_extents);
    FAIL("expected SchemaViolation");
  } catch (const Error& e) {
    CHECK(e.field == "width");
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_graph("{\n  \"schema_version\": \"1\",\n  broken\n}");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Err::SyntaxError);
    CHECK(e.line == 3);
    CHECK(e.column > 0);
  }
}

TEST_CASE("svg output") {
  const BarDrawing empty;
  const std::string blank = render_svg(empty);
  CHECK(blank.find("<svg") == 0);
  CHECK(blank.find("</svg>") != std::string::npos);

  const BarDrawing d22 = draw_diagonal_grid({2, 2});
  const std::string svg = render_svg(d22);
  CHECK(count_occurrences(svg, "class=\"bar\"") == 4);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 6);
  CHECK(render_svg(d22) == svg); // byte-identical rerun

  SvgOptions hl;
  hl.highlight_crossings = true;
  CHECK(count_occurrences(render_svg(d22, hl), "class=\"crossing\"") == 1);
}

TEST_CASE("serialization is deterministic over the corpus") {
  for (int k = 1; k <= 4; ++k) {
    GraphDocument doc;
    doc.graph = gen_quadrangle_chain(k);
    doc.family = Family{};
    doc.family->name = "quadrangle-chain";
    doc.family->k = k;
    const std::string once = serialize_graph(doc);
    CHECK(serialize_graph(parse_graph(once)) == once);
  }
}
