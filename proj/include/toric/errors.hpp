#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Domain and input errors carry their symbolic name in the message so the
// CLI can surface them verbatim.

struct NotFullRank : std::runtime_error {
  explicit NotFullRank(const std::string& m) : std::runtime_error("NotFullRank: " + m) {}
};

struct GroundSetTooLarge : std::runtime_error {
  explicit GroundSetTooLarge(const std::string& m)
      : std::runtime_error("GroundSetTooLarge: " + m) {}
};

struct NotInW : std::runtime_error {
  explicit NotInW(const std::string& m) : std::runtime_error("NotInW: " + m) {}
};

struct NotCodimOne : std::runtime_error {
  explicit NotCodimOne(const std::string& m) : std::runtime_error("NotCodimOne: " + m) {}
};

struct InstanceTooLarge : std::runtime_error {
  explicit InstanceTooLarge(const std::string& m)
      : std::runtime_error("InstanceTooLarge: " + m) {}
};

struct NoBottom : std::runtime_error {
  explicit NoBottom(const std::string& m) : std::runtime_error("NoBottom: " + m) {}
};

struct EmptyMatrix : std::runtime_error {
  explicit EmptyMatrix(const std::string& m) : std::runtime_error("EmptyMatrix: " + m) {}
};

struct RaggedRows : std::runtime_error {
  explicit RaggedRows(const std::string& m) : std::runtime_error("RaggedRows: " + m) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& m)
      : std::runtime_error("ParseError: line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + m),
        line(line_),
        column(column_) {}
};

}  // namespace toric
