#include "bflow/report.hpp"

#include <iomanip>
#include <sstream>

namespace bflow {

nlohmann::ordered_json to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["input"] = {{"file", r.input.file}, {"kind", r.input.kind}, {"n", r.input.n}, {"m", r.input.m}};
  j["omega"] = r.omega;
  j["m_degree"] = r.m_degree;
  j["mode"] = r.mode;
  j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  if (const bool* b = std::get_if<bool>(&r.answer)) {
    j["answer"] = *b;
  } else if (const int* v = std::get_if<int>(&r.answer)) {
    j["answer"] = *v;
  } else {
    j["answer"] = nullptr;
  }
  j["per_k"] = nlohmann::ordered_json::array();
  for (const TraceRow& row : r.per_k) {
    j["per_k"].push_back({{"k", row.k}, {"decision", row.decision}, {"ms", row.milliseconds}});
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const NamedCheck& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return j;
}

SolveReport report_from_json(const nlohmann::ordered_json& j) {
  SolveReport r;
  const auto& in = j.at("input");
  r.input = {in.at("file").get<std::string>(), in.at("kind").get<std::string>(),
             in.at("n").get<int>(), in.at("m").get<int>()};
  r.omega = j.at("omega").get<int>();
  r.m_degree = j.at("m_degree").get<int>();
  r.mode = j.at("mode").get<std::string>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<int>();
  const auto& a = j.at("answer");
  if (a.is_boolean()) r.answer = a.get<bool>();
  else if (a.is_number_integer()) r.answer = a.get<int>();
  for (const auto& row : j.at("per_k")) {
    r.per_k.push_back({row.at("k").get<int>(), row.at("decision").get<bool>(),
                       row.at("ms").get<double>()});
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                        c.at("detail").get<std::string>()});
  }
  return r;
}

std::string to_text(const SolveReport& r) {
  std::ostringstream out;
  out << "input      " << r.input.file << " (" << r.input.kind << "; n=" << r.input.n
      << ", m=" << r.input.m << ")\n";
  out << "omega      " << r.omega << '\n';
  out << "m-degree   " << r.m_degree << '\n';
  out << "mode       " << r.mode << '\n';
  if (r.k) out << "k          " << *r.k << '\n';
  out << "answer     ";
  if (const bool* b = std::get_if<bool>(&r.answer)) out << (*b ? "yes" : "no");
  else if (const int* v = std::get_if<int>(&r.answer)) out << *v;
  else out << "-";
  out << '\n';
  if (!r.per_k.empty()) {
    out << "\n    k  decision        ms\n";
    for (const TraceRow& row : r.per_k) {
      out << std::setw(5) << row.k << "  " << std::setw(8) << (row.decision ? "yes" : "no")
          << "  " << std::setw(8) << std::fixed << std::setprecision(3) << row.milliseconds << '\n';
    }
  }
  for (const NamedCheck& c : r.checks) {
    out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace bflow
