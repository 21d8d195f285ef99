#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "rkhs/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = rkhs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HardyKernel) {
  const Result r = run({"kernel", "--family", "hardy", "--m", "0", "--p", "1", "--xi", "0.5",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc[0]["value"][0].get<double>(), 4.0, 1e-12);
}

TEST(Cli, BergmanKernelWithSeries) {
  const Result r = run({"kernel", "--family", "bergman", "--alpha", "0", "--beta0", "0", "--p",
                        "0", "--m", "0", "--R", "1", "--xi", "0.5", "--series", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "xi_re,xi_im,value_re,value_im,series_re,series_im,difference");
}

TEST(Cli, KernelMatchesLibrary) {
  const Result r = run({"kernel", "--family", "bargmann", "--theta", "1.5", "--beta0", "-0.25",
                        "--p", "3", "--m", "1", "--xi", "0.5,-0.3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const rkhs::complex lib = rkhs::bargmann_kernel({0.5, -0.3}, {1.5, -0.25, 3, 1});
  EXPECT_EQ(doc[0]["value"][0].get<double>(), lib.real());
  EXPECT_EQ(doc[0]["value"][1].get<double>(), lib.imag());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"kernel", "--xi", "1.5", "--R", "1"}).code, 2);
  EXPECT_EQ(run({"kernel", "--xi", "abc"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"transform", "--input", "{oops"}).code, 2);
  EXPECT_EQ(run({"transform", "--kind", "G", "--input",
                 R"({"min_index": 0, "coefficients": [0, 1]})"}).code,
            2);
  EXPECT_EQ(run({"verify", "--groups", "limits", "--tol", "0"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TransformIdentityAndInvolution) {
  const std::string e0 = R"({"min_index": 0, "coefficients": [[1, 0]]})";
  const Result d = run({"transform", "--kind", "D", "--alpha", "0.5", "--input", e0, "--format", "json"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(rkhs::parse_laurent(nlohmann::json::parse(d.out)["output"].dump()),
            rkhs::parse_laurent(e0));

  const std::string f = R"({"min_index": -1, "coefficients": [[0.5, 0], [1, 2], [0, -1], [3, 0]]})";
  const Result t = run({"transform", "--family", "fock", "--theta", "2", "--kind", "T", "--p", "1",
                        "--q", "1", "--repeat", "2", "--input", f, "--format", "json"});
  ASSERT_EQ(t.code, 0) << t.err;
  const rkhs::LaurentSeries back =
      rkhs::parse_laurent(nlohmann::json::parse(t.out)["output"].dump());
  const rkhs::LaurentSeries original = rkhs::parse_laurent(f);
  for (int n = -1; n <= 2; ++n) EXPECT_LT(std::abs(back[n] - original[n]), 1e-14) << n;
}

TEST(Cli, TransformEvaluatesBothPaths) {
  const Result r = run({"transform", "--kind", "full", "--alpha", "0.5", "--beta0", "-0.25", "--p",
                        "1", "--q", "2", "--input",
                        R"({"min_index": -1, "coefficients": [1, 0.5]})", "--z", "0.4,0.1",
                        "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_LT(doc["evaluations"][0]["difference"].get<double>(), 1e-10);
}

TEST(Cli, VerifyJsonIsArray) {
  const Result r = run({"verify", "--groups", "limits", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc.size(), 4u);
}

TEST(Cli, LimitAndNorm) {
  EXPECT_EQ(run({"limit", "--kind", "hardy", "--p", "1", "--xi", "0.5"}).code, 0);
  const Result n = run({"norm", "--family", "hardy", "--m", "2", "--n", "3,4", "--format", "json"});
  ASSERT_EQ(n.code, 0) << n.err;
  const auto doc = nlohmann::json::parse(n.out);
  EXPECT_DOUBLE_EQ(doc["monomial_norms"][1]["norm"].get<double>(), 12.0);
}
