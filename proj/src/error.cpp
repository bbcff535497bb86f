#include "bar1v/error.hpp"

namespace bar1v {

const char* to_string(Err e) {
  switch (e) {
    case Err::NotAcyclic: return "NotAcyclic";
    case Err::MultipleSourcesOrSinks: return "MultipleSourcesOrSinks";
    case Err::StNotOnOuterFace: return "StNotOnOuterFace";
    case Err::EmbeddingInconsistent: return "EmbeddingInconsistent";
    case Err::CycleDetected: return "CycleDetected";
    case Err::InvalidParams: return "InvalidParams";
    case Err::NoValidSplitPair: return "NoValidSplitPair";
    case Err::NotOuter1Plane: return "NotOuter1Plane";
    case Err::LabelingPropertyViolated: return "LabelingPropertyViolated";
    case Err::PathsIntersect: return "PathsIntersect";
    case Err::UnknownEdge: return "UnknownEdge";
    case Err::InvalidNumbering: return "InvalidNumbering";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SchemaViolation: return "SchemaViolation";
  }
  return "UnknownError";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

void fail_syntax(int line, int column, const std::string& msg) {
  Error e(Err::SyntaxError,
          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  e.line = line;
  e.column = column;
  throw e;
}

void fail_schema(const std::string& field, const std::string& reason) {
  Error e(Err::SchemaViolation, field + ": " + reason);
  e.field = field;
  throw e;
}

} // namespace bar1v
