#pragma once

#include <stdexcept>
#include <string>

namespace looplab {

/// Library error with a machine-checkable kind.
///
/// Parse errors additionally carry a 1-based line (and column where it makes
/// sense) so the CLI can point at the offending input.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    OutOfRangeEntry,
    OrderMismatch,
    EmptySet,
    NotASubloop,
    NotNormal,
    NotALoop,
    OrderTooLarge,
    UnknownFilter,
    InvalidOrder,
    Parse,
    Precondition,
  };

  Error(Kind kind, std::string message, int line = -1, int column = -1)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

}  // namespace looplab
