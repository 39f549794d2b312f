#include <gtest/gtest.h>

#include "bflow/report.hpp"

using namespace bflow;

namespace {

SolveReport sample() {
  SolveReport r;
  r.input = {"trees/star5.txt", "tree", 5, 10};
  r.omega = 5;
  r.m_degree = 5;
  r.mode = "decide";
  r.k = 5;
  r.answer = true;
  r.per_k = {{5, true, 0.25}};
  r.checks = {{"oracle", true, "max realized 5"}};
  return r;
}

}  // namespace

TEST(Report, FieldOrderIsFixed) {
  const std::string text = to_json(sample()).dump();
  std::vector<std::size_t> at;
  for (const char* key : {"\"input\"", "\"omega\"", "\"m_degree\"", "\"mode\"", "\"k\"", "\"answer\"",
                          "\"per_k\"", "\"checks\""}) {
    at.push_back(text.find(key));
    ASSERT_NE(at.back(), std::string::npos) << key;
  }
  EXPECT_TRUE(std::is_sorted(at.begin(), at.end()));
}

TEST(Report, RoundTripIsAFixpoint) {
  SolveReport a = sample();
  SolveReport b = a;
  b.mode = "bnumber";
  b.k.reset();
  b.answer = 7;
  b.per_k = {{8, false, 1.5}, {7, true, 2.0}};
  b.checks.clear();
  SolveReport c = a;
  c.mode = "crosscheck";
  c.answer = std::monostate{};
  for (const SolveReport& r : {a, b, c}) {
    const auto first = to_json(r);
    const auto second = to_json(report_from_json(first));
    EXPECT_EQ(first.dump(), second.dump());
    const auto third = to_json(report_from_json(nlohmann::ordered_json::parse(second.dump())));
    EXPECT_EQ(second.dump(), third.dump());
  }
}

TEST(Report, AnswerTypes) {
  SolveReport r = sample();
  EXPECT_TRUE(to_json(r)["answer"].is_boolean());
  r.answer = 4;
  EXPECT_TRUE(to_json(r)["answer"].is_number_integer());
  EXPECT_EQ(std::get<int>(report_from_json(to_json(r)).answer), 4);
}

TEST(Report, HumanText) {
  const std::string text = to_text(sample());
  EXPECT_NE(text.find("decide"), std::string::npos);
  EXPECT_NE(text.find("yes"), std::string::npos);
}
