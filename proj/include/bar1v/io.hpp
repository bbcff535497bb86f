#pragma once

#include <optional>
#include <string>

#include "bar1v/drawing.hpp"
#include "bar1v/graph.hpp"

namespace bar1v {

// Generator provenance carried by graph documents so `draw` can dispatch.
struct Family {
  std::string name; // diagonal-grid | recursive-quadrangle | pdw-even | pdw-odd | quadrangle-chain
  int p = 0;
  int q = 0;
  int depth = 0;
  int n = 0;
  int k = 0;
  bool optimal = false;
};

struct GraphDocument {
  Graph1Planar graph;
  std::optional<Family> family;
};

// JSON documents with schema_version "1". Parsing rejects unknown fields
// (Error(SchemaViolation) with the field path) and malformed text
// (Error(SyntaxError) with line/column). serialize/parse round-trips exactly.
std::string serialize_graph(const GraphDocument& doc);
GraphDocument parse_graph(const std::string& text);

std::string serialize_drawing(const BarDrawing& d);
BarDrawing parse_drawing(const std::string& text);

struct SvgOptions {
  int unit = 20; // pixels per grid cell
  bool highlight_crossings = false;
};

// Standalone SVG, y-axis flipped for screen coordinates, one stroke per bar
// and per segment. Byte-deterministic for fixed input and options.
std::string render_svg(const BarDrawing& d, const SvgOptions& options = {});

// Command-line entry point (subcommands generate/draw/validate/render/report).
// Returns the process exit code: 0 ok, 1 usage or I/O error, 2 validation fail.
int cli_main(int argc, const char* const* argv);

} // namespace bar1v
