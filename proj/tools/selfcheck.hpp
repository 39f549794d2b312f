#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bflow/dp_solver.hpp"
#include "bflow/report.hpp"

namespace bflow::cli {

struct SelfcheckOptions {
  int max_edges = 7;
  int samples = 0;  // 0: every tree up to max_edges
  std::uint64_t seed = 1;
  int jobs = 1;
  int size_cap = 4;
  Mutation mutation = Mutation::kNone;
  long long budget = 100'000'000;
};

struct SelfcheckResult {
  int instances = 0;
  std::vector<NamedCheck> checks;
  bool passed() const;
};

SelfcheckResult run_selfcheck(const SelfcheckOptions& options);

}  // namespace bflow::cli
