#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sspsat/cube.hpp"

namespace sspsat {

enum class TraceKind { Initialize, Nbhd, Split, Merge, MoveToBody, Satisfied, Finish };

std::string_view to_string(TraceKind kind);

struct ClauseRef {
  ClauseId id = 0;
  Clause clause;
};

/// A keyword, a cube (points are rendered as cubes without free components),
/// a variable or a numbered clause.
using TraceItem = std::variant<std::string, Cube, Var, ClauseRef>;

struct TraceRecord {
  std::size_t step = 0;
  TraceKind kind = TraceKind::Initialize;
  std::vector<TraceItem> items;
};

/// Append-only record list with strictly increasing step numbers.
class TraceLog {
 public:
  void add(TraceKind kind, std::vector<TraceItem> items);
  const std::vector<TraceRecord>& records() const { return records_; }
  bool finished() const { return finished_; }

 private:
  std::vector<TraceRecord> records_;
  bool finished_ = false;
};

enum class TraceStyle {
  Dimacs,  // cubes as "-2 -3 0"
  Pretty,  // cubes as "[¬x2 ¬x3]"
};

/// One line per record: "<step> <kind> <items...>". Throws ContractViolation
/// unless the log ends with exactly one finish record.
void emit_trace(const TraceLog& log, std::ostream& out, TraceStyle style = TraceStyle::Dimacs);

std::string render_item(const TraceItem& item, TraceStyle style);

}  // namespace sspsat
