#include <gtest/gtest.h>

#include "bnlat/report.hpp"

using namespace bnlat;

TEST(Report, SummaryAndExitCode) {
  RunReport r("cmd");
  r.add_check("a", true);
  r.add_check("b", false, "broken");
  r.add_check("c", false, "advisory", false);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.failed_ids(), std::vector<std::string>{"b"});
  const Json j = r.to_json();
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_EQ(j["summary"]["passed"], 1);
  EXPECT_EQ(j["summary"]["failed_items"], Json::array({"b"}));
  EXPECT_EQ(j["exit_code"], 1);
  EXPECT_EQ(j["command"], "cmd");
  EXPECT_NE(r.to_table().find("FAIL  b  broken"), std::string::npos);
  EXPECT_NE(r.to_table().find("info  c"), std::string::npos);

  RunReport ok("x");
  ok.add_check("a", true);
  EXPECT_EQ(ok.exit_code(), 0);
}

TEST(Report, RationalAndVectorSerialization) {
  EXPECT_EQ(rational_json(Rational(3)), Json(3));
  EXPECT_EQ(rational_json(Rational(-1, 2)), Json("-1/2"));
  const Json v = vector_json(kummer_L() - Rational(1, 2) * node(0));
  EXPECT_EQ(v["expr"], "L - 1/2 E0");
  EXPECT_EQ(v["doubled"][0], 2);
  EXPECT_EQ(v["doubled"][1], -1);
  EnriquesVector h;
  h.coords = {1, 2, 0, 0, 0, 0, 0, 0, 0, -1};
  EXPECT_EQ(enriques_text(h.vector()), "(1, 2; 0, 0, 0, 0, 0, 0, 0, -1)");
}

TEST(Report, CertificateFields) {
  const FamilyMember f = theorem_family(3);
  const Json c = certificate_json(f.certificate);
  EXPECT_EQ(c["side"], "k3");
  EXPECT_EQ(c["squares"]["H2"], 24);
  EXPECT_EQ(c["squares"]["M2"], 44);
  EXPECT_EQ(c["squares"]["HM"], 36);
  EXPECT_EQ(c["g"], 13);
  EXPECT_EQ(c["valid"], true);
  EXPECT_EQ(c["informational"], Json::array({"positivity_necessary"}));
  EXPECT_TRUE(c["checks"]["squares_minus4"].get<bool>());
}

TEST(FullSuite, AllPass) {
  const RunReport r = paper_suite();
  EXPECT_EQ(r.exit_code(), 0) << r.to_table();
  std::size_t family = 0, examples = 0;
  for (const auto& i : r.items()) {
    if (i.id.rfind("family.k", 0) == 0) ++family;
    if (i.id.rfind("example.d", 0) == 0) ++examples;
  }
  EXPECT_EQ(family, 25u);
  EXPECT_EQ(examples, 3u);

  const Json j = r.to_json();
  std::vector<Json> degrees;
  for (const auto& item : j["items"])
    if (item["id"].get<std::string>().rfind("example.d", 0) == 0) degrees.push_back(item["certificate"]["squares"]["H2"]);
  EXPECT_EQ(degrees, (std::vector<Json>{20, 36, 52}));
}

TEST(FullSuite, KMaxOption) {
  SuiteOptions opt;
  opt.k_max = 3;
  const RunReport r = paper_suite(opt);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(std::count_if(r.items().begin(), r.items().end(), [](const ReportItem& i) { return i.id.rfind("family.k", 0) == 0; }), 3);
}

TEST(FullSuite, InjectedThetaFaultFails) {
  SuiteOptions opt;
  opt.inject_theta_fault = true;
  const RunReport r = paper_suite(opt);
  EXPECT_EQ(r.exit_code(), 1);
  const auto failed = r.failed_ids();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "theta.isometry"), failed.end());
  EXPECT_NE(std::find(failed.begin(), failed.end(), "theta.involution"), failed.end());
}

TEST(FullSuite, Deterministic) {
  EXPECT_EQ(paper_suite().to_json().dump(2), paper_suite().to_json().dump(2));
}
