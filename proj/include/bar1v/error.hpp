#pragma once

#include <stdexcept>
#include <string>

namespace bar1v {

enum class Err {
  NotAcyclic,
  MultipleSourcesOrSinks,
  StNotOnOuterFace,
  EmbeddingInconsistent,
  CycleDetected,
  InvalidParams,
  NoValidSplitPair,
  NotOuter1Plane,
  LabelingPropertyViolated,
  PathsIntersect,
  UnknownEdge,
  InvalidNumbering,
  SyntaxError,
  SchemaViolation,
};

const char* to_string(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg);

  Err code() const { return code_; }

  // set for SyntaxError
  int line = -1;
  int column = -1;
  // set for SchemaViolation
  std::string field;

private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);
[[noreturn]] void fail_syntax(int line, int column, const std::string& msg);
[[noreturn]] void fail_schema(const std::string& field, const std::string& reason);

} // namespace bar1v
