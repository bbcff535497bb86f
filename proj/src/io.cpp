#include "bar1v/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "bar1v/checker.hpp"
#include "bar1v/error.hpp"

namespace bar1v {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    fail_syntax(line, col, e.what());
  }
}

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail_schema(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
}

int require_int(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.contains(key)) fail_schema(where + key, "missing");
  if (!obj[key].is_number_integer()) fail_schema(where + key, "must be an integer");
  return obj[key].get<int>();
}

void check_version(const json& obj, const std::string& what) {
  if (!obj.contains("schema_version")) fail_schema("schema_version", "missing");
  if (!obj["schema_version"].is_string() || obj["schema_version"] != kSchemaVersion)
    fail_schema("schema_version", "unsupported " + what + " schema version");
}

} // namespace

std::string serialize_graph(const GraphDocument& doc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = doc.graph.vertex_count;
  json edges = json::array();
  for (const auto& [u, v] : doc.graph.edges) edges.push_back({u, v});
  j["edges"] = edges;
  json crossings = json::array();
  for (const auto& [a, b] : doc.graph.crossing_pairs) crossings.push_back({a, b});
  j["crossings"] = crossings;
  if (doc.graph.outer_order) j["outer_order"] = *doc.graph.outer_order;
  if (!doc.graph.labels.empty()) j["labels"] = doc.graph.labels;
  if (doc.family) {
    json f;
    f["name"] = doc.family->name;
    if (doc.family->name == "diagonal-grid") {
      f["p"] = doc.family->p;
      f["q"] = doc.family->q;
    } else if (doc.family->name == "recursive-quadrangle") {
      f["i"] = doc.family->depth;
      f["optimal"] = doc.family->optimal;
    } else if (doc.family->name == "pdw-even" || doc.family->name == "pdw-odd") {
      f["n"] = doc.family->n;
    } else if (doc.family->name == "quadrangle-chain") {
      f["k"] = doc.family->k;
    }
    j["family"] = f;
  }
  return j.dump(2) + "\n";
}

GraphDocument parse_graph(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail_schema("", "top level must be an object");
  reject_unknown(j, "",
                 {"schema_version", "n", "edges", "crossings", "outer_order", "labels", "family"});
  check_version(j, "graph");

  GraphDocument doc;
  doc.graph.vertex_count = require_int(j, "", "n");
  if (!j.contains("edges") || !j["edges"].is_array()) fail_schema("edges", "missing array");
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail_schema(where, "must be a pair of vertex indices");
    doc.graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("crossings")) {
    if (!j["crossings"].is_array()) fail_schema("crossings", "must be an array");
    for (size_t i = 0; i < j["crossings"].size(); ++i) {
      const auto& c = j["crossings"][i];
      const std::string where = "crossings[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
          !c[1].is_number_integer())
        fail_schema(where, "must be a pair of edge indices");
      doc.graph.crossing_pairs.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  if (j.contains("outer_order")) {
    if (!j["outer_order"].is_array()) fail_schema("outer_order", "must be an array");
    std::vector<int> order;
    for (const auto& v : j["outer_order"]) {
      if (!v.is_number_integer()) fail_schema("outer_order", "must hold integers");
      order.push_back(v.get<int>());
    }
    doc.graph.outer_order = order;
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) fail_schema("labels", "must be an array");
    for (const auto& s : j["labels"]) {
      if (!s.is_string()) fail_schema("labels", "must hold strings");
      doc.graph.labels.push_back(s.get<std::string>());
    }
  }
  if (j.contains("family")) {
    const auto& f = j["family"];
    if (!f.is_object()) fail_schema("family", "must be an object");
    reject_unknown(f, "family", {"name", "p", "q", "i", "optimal", "n", "k"});
    if (!f.contains("name") || !f["name"].is_string()) fail_schema("family.name", "missing");
    Family fam;
    fam.name = f["name"].get<std::string>();
    if (fam.name == "diagonal-grid") {
      fam.p = require_int(f, "family.", "p");
      fam.q = require_int(f, "family.", "q");
    } else if (fam.name == "recursive-quadrangle") {
      fam.depth = require_int(f, "family.", "i");
      if (f.contains("optimal")) {
        if (!f["optimal"].is_boolean()) fail_schema("family.optimal", "must be a boolean");
        fam.optimal = f["optimal"].get<bool>();
      }
    } else if (fam.name == "pdw-even" || fam.name == "pdw-odd") {
      fam.n = require_int(f, "family.", "n");
    } else if (fam.name == "quadrangle-chain") {
      fam.k = require_int(f, "family.", "k");
    } else {
      fail_schema("family.name", "unknown family " + fam.name);
    }
    doc.family = fam;
  }

  check_invariants(doc.graph);
  return doc;
}

std::string serialize_drawing(const BarDrawing& d) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json bars = json::array();
  for (const auto& b : d.bars) {
    json jb;
    jb["v"] = b.vertex;
    jb["y"] = b.y;
    jb["x0"] = b.x0;
    jb["x1"] = b.x1;
    bars.push_back(jb);
  }
  j["bars"] = bars;
  json segs = json::array();
  for (const auto& s : d.segments) {
    json js;
    js["u"] = s.u;
    js["v"] = s.v;
    js["x"] = s.x;
    js["y0"] = s.y0;
    js["y1"] = s.y1;
    segs.push_back(js);
  }
  j["segments"] = segs;
  j["width"] = d.width();
  j["height"] = d.height();
  return j.dump(2) + "\n";
}

BarDrawing parse_drawing(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail_schema("", "top level must be an object");
  reject_unknown(j, "", {"schema_version", "bars", "segments", "width", "height"});
  check_version(j, "drawing");

  BarDrawing d;
  if (!j.contains("bars") || !j["bars"].is_array()) fail_schema("bars", "missing array");
  for (size_t i = 0; i < j["bars"].size(); ++i) {
    const auto& jb = j["bars"][i];
    const std::string where = "bars[" + std::to_string(i) + "]";
    if (!jb.is_object()) fail_schema(where, "must be an object");
    reject_unknown(jb, where, {"v", "y", "x0", "x1"});
    Bar b;
    b.vertex = require_int(jb, where + ".", "v");
    b.y = require_int(jb, where + ".", "y");
    b.x0 = require_int(jb, where + ".", "x0");
    b.x1 = require_int(jb, where + ".", "x1");
    if (b.x0 > b.x1) fail_schema(where, "x0 exceeds x1");
    d.bars.push_back(b);
  }
  if (!j.contains("segments") || !j["segments"].is_array())
    fail_schema("segments", "missing array");
  for (size_t i = 0; i < j["segments"].size(); ++i) {
    const auto& js = j["segments"][i];
    const std::string where = "segments[" + std::to_string(i) + "]";
    if (!js.is_object()) fail_schema(where, "must be an object");
    reject_unknown(js, where, {"u", "v", "x", "y0", "y1"});
    Segment s;
    s.u = require_int(js, where + ".", "u");
    s.v = require_int(js, where + ".", "v");
    s.x = require_int(js, where + ".", "x");
    s.y0 = require_int(js, where + ".", "y0");
    s.y1 = require_int(js, where + ".", "y1");
    if (s.y0 >= s.y1) fail_schema(where, "y0 must lie below y1");
    d.segments.push_back(s);
  }
  if (require_int(j, "", "width") != d.width())
    fail_schema("width", "does not match bar/segment extents");
  if (require_int(j, "", "height") != d.height())
    fail_schema("height", "does not match bar/segment extents");
  return d;
}

std::string render_svg(const BarDrawing& d, const SvgOptions& options) {
  const int unit = options.unit > 0 ? options.unit : 20;
  const int margin = unit;
  const int min_x = d.min_x(), max_y = d.max_y();
  const auto px = [&](int x) { return margin + (x - min_x) * unit; };
  const auto py = [&](int y) { return margin + (max_y - y) * unit; }; // flip for screen
  const int w = 2 * margin + (d.empty() ? 0 : (d.width() - 1) * unit);
  const int h = 2 * margin + (d.empty() ? 0 : (d.height() - 1) * unit);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (const auto& s : d.segments)
    svg << "  <line class=\"edge\" x1=\"" << px(s.x) << "\" y1=\"" << py(s.y0) << "\" x2=\""
        << px(s.x) << "\" y2=\"" << py(s.y1) << "\" stroke=\"#555555\" stroke-width=\"2\"/>\n";
  for (const auto& b : d.bars)
    svg << "  <line class=\"bar\" x1=\"" << px(b.x0) << "\" y1=\"" << py(b.y) << "\" x2=\""
        << px(b.x1) << "\" y2=\"" << py(b.y)
        << "\" stroke=\"#111111\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n";
  if (options.highlight_crossings) {
    for (const auto& s : d.segments)
      for (const auto& b : d.bars) {
        if (b.vertex == s.u || b.vertex == s.v) continue;
        if (b.y > s.y0 && b.y < s.y1 && s.x >= b.x0 && s.x <= b.x1)
          svg << "  <circle class=\"crossing\" cx=\"" << px(s.x) << "\" cy=\"" << py(b.y)
              << "\" r=\"" << unit / 4 << "\" fill=\"#cc2222\"/>\n";
      }
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace bar1v
