#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "apseries/registry.hpp"

using namespace apseries;

TEST_CASE("catalog is populated with unique ids and docs") {
  const auto& cases = identity_cases();
  CHECK(cases.size() == 23);
  std::set<std::string> ids;
  for (const auto& c : cases) {
    CHECK(!c.id.empty());
    CHECK(!c.title.empty());
    CHECK(!c.default_tolerance.empty());
    CHECK(c.run != nullptr);
    CHECK(ids.insert(c.id).second);  // no duplicates
  }
  CHECK(find_case("I01") != nullptr);
  CHECK(find_case("I01")->id == "I01");
  CHECK(find_case("nope") == nullptr);
}

TEST_CASE("single case runs pass and respect parameter overrides") {
  const IdentityCase* c = find_case("I01");
  REQUIRE(c != nullptr);
  auto reports = c->run({}, 256);
  REQUIRE(!reports.empty());
  for (const auto& r : reports) {
    CHECK(r.status == "pass");
    CHECK(r.id == "I01");
    CHECK(r.precision_bits == 256);
    CHECK(!r.lhs.empty());
    CHECK(!r.rhs.empty());
  }

  const IdentityCase* p = find_case("I02");
  REQUIRE(p != nullptr);
  auto all = p->run({}, 256);
  CHECK(all.size() > 1);
  auto one = p->run({{"r", "3"}}, 256);
  REQUIRE(one.size() == 1);
  CHECK(one[0].status == "pass");
  CHECK(one[0].params.find("r=3") != std::string::npos);

  auto loose = p->run({{"r", "3"}, {"tol", "1e-6"}}, 256);
  REQUIRE(loose.size() == 1);
  CHECK(loose[0].tolerance == "1e-6");
  CHECK(loose[0].status == "pass");
}

TEST_CASE("suite selection keeps registry order") {
  SuiteOptions opt;
  opt.ids = {"I03", "I01"};  // listed out of order on purpose
  opt.jobs = 2;
  auto reports = run_suite(opt);
  REQUIRE(!reports.empty());
  bool seen_i03 = false;
  for (const auto& r : reports) {
    if (r.id == "I03") seen_i03 = true;
    if (r.id == "I01") CHECK(!seen_i03);  // I01 precedes I03 in the registry
    CHECK((r.id == "I01" || r.id == "I03"));
  }
  CHECK(seen_i03);
}

TEST_CASE("unknown suite id is rejected up front") {
  SuiteOptions opt;
  opt.ids = {"zz"};
  CHECK_THROWS_AS(run_suite(opt), std::invalid_argument);
}

TEST_CASE("exit code is zero only when every sample passes") {
  VerificationReport pass;
  pass.status = "pass";
  VerificationReport fail = pass;
  fail.status = "fail";
  VerificationReport miss = pass;
  miss.status = "tolerance_not_reached";
  CHECK(exit_code_for({pass, pass}) == 0);
  CHECK(exit_code_for({pass, miss}) == 1);
  CHECK(exit_code_for({pass, miss, fail}) == 1);
  CHECK(exit_code_for({}) == 0);
}

TEST_CASE("reports serialize to parseable json, csv and text") {
  VerificationReport r;
  r.id = "I99";
  r.params = "r=2";
  r.lhs = "1.5";
  r.rhs = "1.5";
  r.abs_diff = "0";
  r.lhs_err = "1e-30";
  r.rhs_err = "1e-30";
  r.tolerance = "1e-10";
  r.lhs_method = "levin";
  r.rhs_method = "exact";
  r.status = "pass";
  r.terms_used = 42;
  r.precision_bits = 256;
  r.wall_time_ms = 1.25;

  auto j = nlohmann::json::parse(format_json({r}));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "I99");
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["tol"] == "1e-10");
  CHECK(j[0]["terms_used"] == 42);
  CHECK(j[0]["precision_bits"] == 256);

  std::string csv = format_csv({r});
  std::istringstream is(csv);
  std::string header, row;
  REQUIRE(std::getline(is, header));
  REQUIRE(std::getline(is, row));
  CHECK(header.find("id") != std::string::npos);
  CHECK(header.find("status") != std::string::npos);
  CHECK(row.find("I99") != std::string::npos);

  std::string text = format_text({r});
  CHECK(text.find("I99") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("1 samples") != std::string::npos);
}

TEST_CASE("full default-grid metadata stays self-describing") {
  // every case documents the parameters its grid sweeps
  for (const auto& c : identity_cases()) CHECK(!c.params_doc.empty());
}
