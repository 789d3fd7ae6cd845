#include <gtest/gtest.h>

#include "chase/gadget.hpp"
#include "chase/verify.hpp"

using namespace chase;

TEST(Suites, NamesRoundTrip) {
  for (Suite s : {Suite::Info, Suite::Reduction, Suite::Gadgets, Suite::Protocols, Suite::Streaming, Suite::All}) {
    EXPECT_EQ(parse_suite(suite_name(s)), s);
  }
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(Suites, CsvSchema) {
  const std::vector<CheckRow> rows{{"info", "a", 0.5, 1, true}, {"info", "b", 1e-12, 0, false}};
  EXPECT_EQ(rows_to_csv(rows), "suite,check,measured,threshold,pass\ninfo,a,0.5,1,1\ninfo,b,1e-12,0,0\n");
  EXPECT_FALSE(all_pass(rows));
  EXPECT_TRUE(all_pass({rows[0]}));
}

TEST(Suites, ProtocolsPassAndAreDeterministic) {
  VerifyConfig config;
  config.trial_scale = 0.2;
  const auto a = run_suite(Suite::Protocols, config);
  const auto b = run_suite(Suite::Protocols, config);
  EXPECT_TRUE(all_pass(a)) << rows_to_csv(a);
  EXPECT_EQ(rows_to_csv(a), rows_to_csv(b));
  for (const auto& row : a) EXPECT_EQ(row.suite, "protocols");
}

TEST(Suites, CorruptedGadgetIsCaught) {
  VerifyConfig config;
  config.trial_scale = 0.2;
  config.builders.distance = [](const IntersectScInstance& inst) {
    auto g = build_distance_gadget(inst);
    if (!g.edges.empty()) g.edges.pop_back();
    return g;
  };
  EXPECT_FALSE(all_pass(run_suite(Suite::Gadgets, config)));

  VerifyConfig matching = config;
  matching.builders = GadgetBuilders::standard();
  matching.builders.matching = [](const IntersectScInstance& inst) {
    auto g = build_matching_gadget(inst);
    g.edges.erase(g.edges.begin());
    return g;
  };
  EXPECT_FALSE(all_pass(run_suite(Suite::Gadgets, matching)));
}
