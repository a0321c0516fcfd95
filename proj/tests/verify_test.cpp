#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hgs/verify.hpp"

using namespace hgs;

namespace {

bool all_pass(const std::vector<PropertyCase>& cases) {
  for (const auto& c : cases)
    if (c.verdict != Verdict::pass) return false;
  return !cases.empty();
}

std::string describe(const std::vector<PropertyCase>& cases) {
  std::string out;
  for (const auto& c : cases) out += c.property + "[" + c.params + "] " + to_string(c.verdict) + " " + c.note + "\n";
  return out;
}

VerifyConfig small_config() {
  auto cfg = VerifyConfig::empty();
  cfg.ks = {3};
  cfg.gs = {2, 3, 4};
  cfg.ss = {0, 1, 2};
  cfg.attachment_max_edges = 1;
  cfg.subdivision_max_edges = 1;
  cfg.shape_max_edges = 1;
  cfg.rayleigh_samples = 5;
  cfg.certificate_samples = 3;
  return cfg;
}

}  // namespace

TEST(RegularPower, DefaultGridPasses) {
  auto cases = verify_regular_power(default_regular_powers());
  EXPECT_EQ(cases.size(), 2 * default_regular_powers().size());
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  for (const auto& c : cases) {
    if (c.property == "regular_power_closed_form") {
      EXPECT_LE(std::abs(c.value_a - c.value_b), 1e-8);
    }
  }
}

TEST(RegularPower, K4MatchesClosedForm) {
  auto cases = verify_regular_power({{3, 3, "K4", complete_graph(4)}});
  ASSERT_EQ(cases.size(), 2u);
  EXPECT_NEAR(cases[0].value_b, (3.0 + std::sqrt(33.0)) / 4.0, 1e-15);
  EXPECT_NEAR(cases[0].value_a, 2.186140661634507, 1e-8);
}

TEST(RegularPower, NotRegular) {
  try {
    verify_regular_power({{3, 2, "P3", hyperpath(2, 2)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
  }
  try {
    verify_regular_power({{3, 3, "C5", ordinary_cycle(5)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
  }
}

TEST(UnicyclicMinimum, SixThree) {
  auto cases = verify_unicyclic_minimum(6, 3);
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  EXPECT_EQ(cases[0].property, "unicyclic_minimum");
  EXPECT_NEAR(cases[0].value_a, (1.0 + std::sqrt(5.0)) / 2.0, 1e-8);
  EXPECT_EQ(cases[2].property, "unicyclic_second_minimum");
  EXPECT_NEAR(cases[2].value_a, 1.689756007350979, 1e-8);
}

TEST(UnicyclicMinimum, EightThree) {
  auto cases = verify_unicyclic_minimum(8, 3);
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  EXPECT_NEAR(cases[2].value_a, 1.669112217438853, 1e-8);
}

TEST(UnicyclicMinimum, Errors) {
  try {
    verify_unicyclic_minimum(7, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeNotRepresentable);
  }
  auto cfg = VerifyConfig{};
  cfg.enumeration_limits.max_candidate_subsets = 10;
  auto cases = verify_unicyclic_minimum(8, 3, cfg);
  for (const auto& c : cases) {
    EXPECT_EQ(c.verdict, Verdict::skipped);
    EXPECT_NE(c.note.find("SearchBudgetExceeded"), std::string::npos);
  }
}

TEST(UnicyclicMinimum, LabeledScanAgrees) {
  Verifier v;
  auto cases = v.unicyclic_labeled_scan(6, 3);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].verdict, Verdict::pass) << cases[0].note;
  EXPECT_NEAR(cases[0].value_a, (1.0 + std::sqrt(5.0)) / 2.0, 1e-8);
}

TEST(GirthMaximum, Examples) {
  for (std::size_t g : {2u, 3u, 4u}) {
    auto cases = verify_girth_maximum(8, 3, g);
    EXPECT_TRUE(all_pass(cases)) << describe(cases);
  }
  auto two = verify_girth_maximum(8, 3, 2);
  EXPECT_NEAR(two[0].value_a, 1.920762709, 1e-8);
  auto only = verify_girth_maximum(6, 3, 3);
  EXPECT_TRUE(all_pass(only)) << describe(only);
  EXPECT_NE(only[0].note.find("single class"), std::string::npos);
}

TEST(LollipopGirth, StrictlyDecreasing) {
  EXPECT_TRUE(all_pass(verify_lollipop_girth_monotone(3, 1, {2, 3, 4, 5, 6}, 1)));
  EXPECT_TRUE(all_pass(verify_lollipop_girth_monotone(3, 2, {2, 3, 4, 5, 6}, 2)));
  auto four = verify_lollipop_girth_monotone(4, 1, {2, 3, 4, 5}, 1);
  EXPECT_EQ(four.size(), 3u);
  EXPECT_TRUE(all_pass(four)) << describe(four);
  try {
    verify_lollipop_girth_monotone(3, 0, {2, 3}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(LollipopVariant, InteriorBelowJoint) {
  for (auto [k, g, s] : std::vector<std::tuple<int, int, int>>{{3, 3, 1}, {3, 4, 2}, {4, 2, 1}}) {
    auto cases = verify_lollipop_variant_order(k, g, s);
    EXPECT_TRUE(all_pass(cases)) << describe(cases);
  }
  auto c = verify_lollipop_variant_order(3, 3, 1);
  EXPECT_NEAR(c[0].value_a, 1.669112217438853, 1e-8);
  EXPECT_NEAR(c[0].value_b, 1.732531359198170, 1e-8);
}

TEST(TailGrowth, LiteralReadingFails) {
  // A longer tail at fixed cycle length raises rho, so the literal
  // inequality is expected to fail on every case.
  auto cases = verify_tail_growth(3, 4, {1, 2, 3, 4}, 1);
  ASSERT_EQ(cases.size(), 4u);
  for (const auto& c : cases) {
    EXPECT_EQ(c.verdict, Verdict::fail);
    EXPECT_LT(c.margin, 0.0);
  }
  try {
    verify_tail_growth(3, 4, {0, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(TailGrowth, BudgetShiftHolds) {
  Verifier v;
  auto cases = v.tail_budget_shift(3, 3, {1, 2, 3, 4}, Attachment::joint);
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  auto second = v.tail_budget_shift(3, 3, {1, 2, 3}, Attachment::interior);
  EXPECT_TRUE(all_pass(second)) << describe(second);
}

TEST(Octopuslike, TwoThreeTwo) {
  auto cases = verify_octopuslike_minimum(3, 2, 2);
  ASSERT_EQ(cases.size(), 3u);
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  EXPECT_EQ(cases[0].property, "octopuslike_minimum");
  EXPECT_EQ(cases[1].property, "octopuslike_minimum_joint");
  EXPECT_EQ(cases[2].property, "octopuslike_minimum_interior");
}

TEST(Octopuslike, SingleEdge) {
  auto cases = verify_octopuslike_minimum(3, 3, 1);
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
  EXPECT_NE(cases[1].note.find("single class"), std::string::npos);
  EXPECT_NE(cases[2].note.find("single class"), std::string::npos);
}

TEST(Octopuslike, Budget) {
  auto cfg = VerifyConfig{};
  cfg.canonical.max_vertices = 6;
  auto cases = verify_octopuslike_minimum(3, 2, 2, cfg);
  for (const auto& c : cases) EXPECT_EQ(c.verdict, Verdict::skipped);
}

TEST(PathRelocation, DefaultInstances) {
  auto cases = verify_path_relocation(default_path_splits(), default_branchings());
  EXPECT_EQ(cases.size(), default_path_splits().size() + default_branchings().size());
  EXPECT_TRUE(all_pass(cases)) << describe(cases);
}

TEST(Shapes, AttachmentSubdivisionAndEigenvector) {
  Verifier v;
  auto trees = v.rooted_trees(3, 2);
  // one edge: one root orbit; two edges: centre and leaf roots
  EXPECT_EQ(trees.size(), 3u);
  std::vector<PropertyCase> all;
  for (std::size_t g = 2; g <= 6; ++g)
    for (const auto& t : trees) {
      for (auto& c : v.attachment_position(3, g, t)) all.push_back(c);
      for (auto where : {Attachment::joint, Attachment::interior}) {
        for (auto& c : v.subdivision_monotone(3, g, where, t)) all.push_back(c);
        if (g >= 3)
          for (auto& c : v.cycle_eigvec_shape(3, g, where, t)) all.push_back(c);
      }
    }
  EXPECT_TRUE(all_pass(all)) << describe(all);
}

TEST(Shapes, SubdivisionIndex) {
  EXPECT_EQ(detail::subdivision_index(3, Attachment::joint), 2u);
  EXPECT_EQ(detail::subdivision_index(5, Attachment::interior), 3u);
  EXPECT_EQ(detail::subdivision_index(4, Attachment::joint), 2u);
  EXPECT_EQ(detail::subdivision_index(4, Attachment::interior), 3u);
}

TEST(Shapes, SubdividingLollipopGivesLongerCycle) {
  auto c = hypercycle(3, 3);
  for (auto where : {Attachment::joint, Attachment::interior}) {
    auto base = lollipop(3, 3, 1, where);
    const auto i = detail::subdivision_index(3, where);
    auto sub = subdivide_edge(base, c.cycle_edge(i), c.joint(i), c.joint(i + 1));
    EXPECT_TRUE(are_isomorphic(sub, lollipop(4, 3, 1, where)));
  }
}

TEST(Shapes, CycleShapeClauses) {
  auto c5 = hypercycle(5, 3);
  auto joint = detail::cycle_shape(c5, Attachment::joint);
  std::set<std::pair<Vertex, Vertex>> eq(joint.equal.begin(), joint.equal.end());
  EXPECT_TRUE(eq.count({c5.joint(2), c5.joint(5)}));
  EXPECT_TRUE(eq.count({c5.joint(3), c5.joint(4)}));
  auto interior = detail::cycle_shape(c5, Attachment::interior);
  std::set<std::pair<Vertex, Vertex>> eq2(interior.equal.begin(), interior.equal.end());
  EXPECT_TRUE(eq2.count({c5.joint(1), c5.joint(2)}));
  EXPECT_NE(joint.clause, interior.clause);
}

TEST(EdgeMoves, SwapSplitAndAddition) {
  Verifier v;
  std::vector<PropertyCase> all;
  for (std::size_t g = 2; g <= 5; ++g) {
    for (std::size_t s = 1; s <= 2; ++s)
      for (auto& c : v.edge_swap_lollipop(3, g, s)) all.push_back(c);
    for (auto& c : v.edge_addition("lop", lollipop(g, 3, 1, 1), 3)) all.push_back(c);
  }
  for (std::size_t s = 0; s <= 2; ++s)
    for (auto& c : v.joint_split(3, 4, s, Attachment::joint)) all.push_back(c);
  EXPECT_TRUE(all_pass(all)) << describe(all);
}

TEST(SpectralChecks, OnTouchedGraphs) {
  Verifier v;
  v.rho("a", lollipop(3, 3, 1, 1));
  v.rho("b", u_star(8, 3, 2));
  v.rho("b-again", u_star(8, 3, 2));
  EXPECT_EQ(v.touched().size(), 2u);
  std::vector<PropertyCase> all;
  for (auto& c : v.oracle_agreement()) all.push_back(c);
  for (auto& c : v.orbit_symmetry()) all.push_back(c);
  for (auto& c : v.rayleigh_bound()) all.push_back(c);
  for (auto& c : v.certificate_soundness()) all.push_back(c);
  EXPECT_TRUE(all_pass(all)) << describe(all);
  std::set<std::string> ids;
  for (const auto& c : all) ids.insert(c.property);
  EXPECT_EQ(ids, (std::set<std::string>{"certificate_soundness", "oracle_agreement", "orbit_symmetry",
                                        "rayleigh_bound", "spectrum_trace"}));
}

TEST(Verdicts, MarginPolicy) {
  PropertyCase c;
  EXPECT_TRUE(std::isnan(c.margin));
  EXPECT_EQ(c.verdict, Verdict::skipped);
  VerificationReport r;
  r.cases.resize(4);
  r.cases[0].verdict = Verdict::pass;
  r.cases[1].verdict = Verdict::skipped;
  r.cases[2].verdict = Verdict::pass;
  r.cases[3].verdict = Verdict::pass;
  // skipped cases do not count against the run
  EXPECT_TRUE(r.ok());
  r.cases[2].verdict = Verdict::fail;
  EXPECT_FALSE(r.ok());
  r.cases[2].verdict = Verdict::pass;
  r.cases[3].verdict = Verdict::indistinguishable;
  EXPECT_FALSE(r.ok());
  auto s = r.summary();
  EXPECT_EQ(s.total, 4u);
  EXPECT_EQ(s.pass, 2u);
  EXPECT_EQ(s.indistinguishable, 1u);
  EXPECT_EQ(s.skipped, 1u);
}

TEST(Verdicts, WideMarginGivesIndistinguishable) {
  auto cfg = VerifyConfig{};
  cfg.strict_margin = 1e-2;
  // rho(Lop_{5,3,1;1}) - rho(Lop_{6,3,1;1}) is positive but below 1e-2
  auto cases = verify_lollipop_girth_monotone(3, 1, {5, 6}, 1, cfg);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_GT(cases[0].margin, 0.0);
  EXPECT_LT(cases[0].margin, 1e-2);
  EXPECT_EQ(cases[0].verdict, Verdict::indistinguishable);
}

TEST(Report, EmptyConfig) {
  auto report = run_all(VerifyConfig::empty());
  EXPECT_TRUE(report.cases.empty());
  auto s = report.summary();
  EXPECT_EQ(s.total, 0u);
  EXPECT_EQ(s.pass + s.fail + s.indistinguishable + s.skipped, 0u);
  EXPECT_EQ(report_csv(report), "property,params,value_a,value_b,margin,verdict,runtime_ms\n");
  auto json = nlohmann::json::parse(report_json(report));
  EXPECT_EQ(json["summary"]["total"], 0);
  EXPECT_TRUE(json["cases"].empty());
}

TEST(Report, SmallRunIsSortedAndDeterministic) {
  auto a = run_all(small_config());
  auto b = run_all(small_config());
  ASSERT_FALSE(a.cases.empty());
  EXPECT_EQ(report_csv(a, false), report_csv(b, false));
  EXPECT_EQ(report_json(a, false), report_json(b, false));
  for (std::size_t i = 1; i < a.cases.size(); ++i) EXPECT_LE(a.cases[i - 1].property, a.cases[i].property);
  auto json = nlohmann::json::parse(report_json(a));
  EXPECT_EQ(json["cases"].size(), a.cases.size());
  EXPECT_EQ(json["summary"]["total"], a.cases.size());
  std::size_t covered = 0;
  for (auto& [id, n] : json["coverage"].items()) covered += n.get<std::size_t>();
  EXPECT_EQ(covered, a.cases.size());
}

TEST(Report, FilterRestrictsGrid) {
  auto cfg = small_config();
  cfg.filter.g = std::vector<std::size_t>{3};
  auto report = run_all(cfg);
  for (const auto& c : report.cases) {
    if (c.params.find("g=") == std::string::npos || c.property == "orbit_symmetry" ||
        c.property == "oracle_agreement" || c.property == "spectrum_trace" || c.property == "rayleigh_bound" ||
        c.property == "certificate_soundness")
      continue;
    EXPECT_NE(c.params.find("g=3"), std::string::npos) << c.property << " " << c.params;
  }
}

TEST(Report, CsvRows) {
  VerificationReport r;
  PropertyCase c;
  c.property = "p";
  c.params = "k=3;g=4";
  c.value_a = 1.5;
  c.value_b = 2.0;
  c.margin = 0.5;
  c.verdict = Verdict::pass;
  c.runtime_ms = 3.0;
  r.cases.push_back(c);
  EXPECT_EQ(report_csv(r), "property,params,value_a,value_b,margin,verdict,runtime_ms\np,k=3;g=4,1.5,2,0.5,pass,3\n");
  EXPECT_EQ(report_csv(r, false),
            "property,params,value_a,value_b,margin,verdict,runtime_ms\np,k=3;g=4,1.5,2,0.5,pass,0\n");
  r.cases[0].value_a = std::numeric_limits<double>::quiet_NaN();
  auto json = nlohmann::json::parse(report_json(r));
  EXPECT_TRUE(json["cases"][0]["value_a"].is_null());
}
