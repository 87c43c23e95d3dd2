/*
 * Copyright 2026 The lqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <sstream>

#include "lqc/cli.hpp"

using namespace lqc::cli;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lqc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json result_of(const Invocation& r) { return Json::parse(r.out).at("result"); }

const std::string kQuartic = "x^4+x^3*y+x^3*z+y^2*z^2";

}  // namespace

TEST(Cli, CheckQuarticAtNine) {
  const Invocation r = invoke({"check", "--p", "3", "--q", "9", "--f", kQuartic});
  EXPECT_EQ(r.code, kExitOk);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("schema"), 1);
  EXPECT_EQ(doc.at("command"), "check");
  EXPECT_EQ(doc.at("params").at("f"), kQuartic);
  EXPECT_TRUE(doc.at("result").at("lqc").get<bool>());
  EXPECT_FALSE(doc.at("result").at("dims").empty());
}

TEST(Cli, CheckQuarticAtTwentySeven) {
  const Invocation r = invoke({"check", "--p", "3", "--q", "27", "--f", kQuartic});
  EXPECT_EQ(r.code, kExitFalse);
  const Json res = result_of(r);
  EXPECT_FALSE(res.at("lqc").get<bool>());
  EXPECT_EQ(res.at("first_failing_degree"), 37);
  EXPECT_EQ(res.at("extra_generator_degrees").get<std::vector<int>>(), (std::vector<int>{37, 37, 38, 38}));
}

TEST(Cli, CheckBuiltInForm) {
  const Invocation r = invoke({"check", "--p", "5", "--q", "5", "--form", "pow-xy-z2", "--D", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(result_of(r).at("lqc").get<bool>());
}

TEST(Cli, ReportConic) {
  const Invocation r = invoke({"report", "--p", "5", "--q", "5", "--form", "pow-xy-z2", "--D", "1"});
  ASSERT_EQ(r.code, kExitOk);
  const Json res = result_of(r);
  EXPECT_EQ(res.at("quotient").at("hk"), 37);
  EXPECT_EQ(res.at("quotient").at("hk_formula"), 37);
  EXPECT_EQ(res.at("quotient").at("socle"), Json::parse(R"([{"degree":6,"dim":4}])"));
  EXPECT_EQ(res.at("profile").at("extra_generators"), Json::parse(R"([{"degree":6,"count":4}])"));
  EXPECT_EQ(res.at("quotient").at("regularity_formula"), 6);
  EXPECT_EQ(res.at("quotient").at("top_degree"), 6);
  EXPECT_EQ(res.at("betti").at("b"), 8);
}

TEST(Cli, ReportQuarticMatchesFormula) {
  const Invocation r = invoke({"report", "--p", "3", "--q", "9", "--f", kQuartic});
  const Json q = result_of(r).at("quotient");
  EXPECT_EQ(q.at("hk"), 238);
  EXPECT_EQ(q.at("hk_formula"), 238);
}

TEST(Cli, ReportNonLqcOmitsFormula) {
  const Invocation r = invoke({"report", "--p", "5", "--q", "5", "--f", "x^2"});
  EXPECT_EQ(r.code, kExitOk);
  const Json res = result_of(r);
  EXPECT_TRUE(res.at("quotient").at("hk_formula").is_null());
  EXPECT_TRUE(res.at("betti").is_null());
}

TEST(Cli, VerifyStructural) {
  const Invocation a = invoke({"verify-structural", "--p", "5", "--q", "5", "--q", "25", "--D", "1"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_TRUE(result_of(a).at("all_pass").get<bool>());
  const Json res = result_of(a);
  bool saw_tails = false;
  for (const auto& e : res.at("ledger"))
    saw_tails = saw_tails || e.at("check").get<std::string>().rfind("tails_identical", 0) == 0;
  EXPECT_TRUE(saw_tails);
  EXPECT_EQ(invoke({"verify-structural", "--p", "7", "--q", "7", "--D", "2"}).code, kExitOk);
  const Invocation bad = invoke({"verify-structural", "--p", "3", "--q", "9", "--D", "2"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("characteristic too small"), std::string::npos);
}

TEST(Cli, ScanIsReproducible) {
  const std::vector<std::string> args{"scan", "--p", "5", "--q", "5", "--d", "2", "--trials", "200", "--seed", "42"};
  const Invocation a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const Json res = result_of(a);
  EXPECT_GT(res.at("lqc_count").get<int>(), 0);
  EXPECT_LE(res.at("lqc_count").get<int>(), 200);
  EXPECT_DOUBLE_EQ(res.at("fraction").get<double>(), res.at("lqc_count").get<double>() / 200.0);
  std::size_t failures = 0;
  for (const auto& h : res.at("first_bad_degree_histogram")) failures += h.at("count").get<std::size_t>();
  EXPECT_EQ(failures + res.at("lqc_count").get<std::size_t>(), 200u);
}

TEST(Cli, ScanDirectApi) {
  RunConfig cfg;
  cfg.command = "scan";
  cfg.p = 5;
  cfg.qs = {5};
  cfg.d = 2;
  cfg.trials = 30;
  cfg.seed = 7;
  const ScanResult r = scan(cfg);
  EXPECT_EQ(r.trials, 30u);
  EXPECT_EQ(to_json(r).at("seed"), 7);
  cfg.d = 5;
  EXPECT_THROW(scan(cfg), std::exception);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(invoke({"check", "--p", "4", "--q", "16", "--f", "x*y"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "7", "--f", "x*y"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "5", "--f", "x*y+"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "5", "--f", "x*y+z"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "5"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "5", "--f", "x*y", "--form", "pow-xy-z2", "--D", "1"}).code,
            kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({"check", "--p", "5", "--q", "5", "--f", "x*y", "--format", "xml"}).code, kExitError);
}

TEST(Cli, TsvAndPrettyFormats) {
  const Invocation tsv = invoke({"check", "--p", "5", "--q", "5", "--f", "x*y+4*z^2", "--format", "tsv"});
  EXPECT_NE(tsv.out.find("result.lqc\ttrue"), std::string::npos);
  EXPECT_NE(tsv.out.find("degree\tdim_p\tdim_frob\tdim_colon"), std::string::npos);
  const Invocation pretty = invoke({"check", "--p", "5", "--q", "5", "--f", "x*y+4*z^2", "--format", "pretty"});
  EXPECT_NE(pretty.out.find("lqc: true"), std::string::npos);
}

TEST(Cli, JsonRoundTrips) {
  const Invocation r = invoke({"report", "--p", "5", "--q", "5", "--f", "x*y+4*z^2"});
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(Json::parse(doc.dump()), doc);
  EXPECT_EQ(render(doc, Format::json), r.out);
}

TEST(Cli, ParallelJobsGiveSameAnswer) {
  const Invocation a = invoke({"report", "--p", "3", "--q", "9", "--f", kQuartic, "--jobs", "1"});
  const Invocation b = invoke({"report", "--p", "3", "--q", "9", "--f", kQuartic, "--jobs", "4"});
  EXPECT_EQ(result_of(a), result_of(b));
}
