#include "sspsat/trace.hpp"

#include <cstdlib>
#include <sstream>

namespace sspsat {

std::string_view to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::Initialize:
      return "initialize";
    case TraceKind::Nbhd:
      return "nbhd";
    case TraceKind::Split:
      return "split";
    case TraceKind::Merge:
      return "merge";
    case TraceKind::MoveToBody:
      return "move-to-body";
    case TraceKind::Satisfied:
      return "satisfied";
    case TraceKind::Finish:
      return "finish";
  }
  return "?";
}

void TraceLog::add(TraceKind kind, std::vector<TraceItem> items) {
  if (finished_) throw ContractViolation("trace already finished");
  records_.push_back(TraceRecord{records_.size() + 1, kind, std::move(items)});
  if (kind == TraceKind::Finish) finished_ = true;
}

namespace {

std::string pretty_clause(const Clause& c) {
  if (c.empty()) return "□";
  std::ostringstream out;
  bool first = true;
  for (const Lit& l : c.literals()) {
    if (!first) out << " ∨ ";
    if (!l.positive) out << "¬";
    out << 'x' << l.var.index;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string render_item(const TraceItem& item, TraceStyle style) {
  struct Visitor {
    TraceStyle style;
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const Cube& c) const {
      if (style == TraceStyle::Pretty) return "[" + c.to_pretty() + "]";
      std::string s = c.to_string();
      return s.empty() ? "0" : s + " 0";
    }
    std::string operator()(Var v) const {
      return style == TraceStyle::Pretty ? "x" + std::to_string(v.index)
                                         : std::to_string(v.index);
    }
    std::string operator()(const ClauseRef& r) const {
      std::string id = "C" + std::to_string(r.id);
      if (style == TraceStyle::Pretty) return id + "=(" + pretty_clause(r.clause) + ")";
      std::string lits = r.clause.to_string();
      return id + (lits.empty() ? " 0" : " " + lits + " 0");
    }
  };
  return std::visit(Visitor{style}, item);
}

void emit_trace(const TraceLog& log, std::ostream& out, TraceStyle style) {
  std::size_t finishes = 0;
  for (const auto& r : log.records()) finishes += r.kind == TraceKind::Finish;
  if (finishes != 1 || log.records().back().kind != TraceKind::Finish) {
    throw ContractViolation("trace must end with exactly one finish record");
  }
  for (const auto& r : log.records()) {
    out << r.step << ' ' << to_string(r.kind);
    for (const auto& item : r.items) out << ' ' << render_item(item, style);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed to write trace");
}

}  // namespace sspsat
