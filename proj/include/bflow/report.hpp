#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bflow {

struct InputDescriptor {
  std::string file;
  std::string kind;  // "tree" or "graph"
  int n = 0;         // vertices of the solved (line) graph
  int m = 0;         // edges of the solved graph
};

struct TraceRow {
  int k = 0;
  bool decision = false;
  double milliseconds = 0.0;
};

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Machine-readable result of one CLI invocation.
struct SolveReport {
  InputDescriptor input;
  int omega = 0;
  int m_degree = 0;
  std::string mode;  // decide | bnumber | oracle | crosscheck
  std::optional<int> k;
  std::variant<std::monostate, bool, int> answer;
  std::vector<TraceRow> per_k;
  std::vector<NamedCheck> checks;
};

nlohmann::ordered_json to_json(const SolveReport& r);
SolveReport report_from_json(const nlohmann::ordered_json& j);

// Plain-text rendering for --human.
std::string to_text(const SolveReport& r);

}  // namespace bflow
