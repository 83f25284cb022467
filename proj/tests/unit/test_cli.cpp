#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvlab/cli.hpp"
#include "mvlab/io.hpp"

namespace mvlab::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mvlab");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mvlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeOddCubic) {
  const auto in = write("p.json", R"({"coeffs": [[0,0],[1,0],[0,0],[1,0]]})");
  const Outcome r = invoke({"analyze", in});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["manifest"]["command"], "analyze");
  EXPECT_TRUE(j["manifest"]["input_digest"].get<std::string>().starts_with("sha256:"));
  EXPECT_NEAR(j["body"]["report"]["S"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(j["body"]["report"]["D"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_TRUE(j["body"]["conservative"].get<bool>());
}

TEST_F(CliTest, AnalyzeSharpQuartic) {
  const auto in = write("p.json", R"({"coeffs": [[0,0],[1,0],[1.5,0],[1,0],[0.25,0]]})");
  const Outcome r = invoke({"analyze", in});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(Json::parse(r.out)["body"]["report"]["D"].get<double>(), 0.25, 1e-10);
}

TEST_F(CliTest, AnalyzeRejectsConstantTermUnlessRebased) {
  const auto in = write("p.json", R"({"coeffs": [[1,0],[0,0],[1,0]]})");
  const Outcome bad = invoke({"analyze", in});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("NonzeroConstantTerm"), std::string::npos) << bad.err;
  const Outcome good = invoke({"analyze", in, "--normalize-at", "1,0"});
  EXPECT_EQ(good.code, kExitOk) << good.err;
  EXPECT_EQ(invoke({"analyze", path("missing.json")}).code, kExitError);
  EXPECT_EQ(invoke({"analyze", write("junk.json", "{")}).code, kExitError);
}

TEST_F(CliTest, CertifyExamples) {
  const Outcome a = invoke({"certify", write("a.json", R"({"coeffs": [[0,0],[1,0],[0,0],[1,0]]})")});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const Json ja = Json::parse(a.out)["body"]["certificate"];
  EXPECT_NEAR(ja["q_abs"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(ja["bound"].get<double>(), 1.0 / 3.0, 1e-15);
  EXPECT_NE(a.err.find("certified: |P(c)/c| = "), std::string::npos);

  const auto b_in = write("b.json", R"({"coeffs": [[0,0],[1,0],[0,0],[0,0],[1,0]]})");
  const Outcome b = invoke({"certify", b_in, "--k", "3"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const Json jb = Json::parse(b.out)["body"]["certificate"];
  EXPECT_NEAR(jb["q_abs"].get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(jb["bound"].get<double>(), 0.39685026299204987, 1e-15);

  EXPECT_EQ(invoke({"certify", write("c.json", R"({"coeffs": [[0,0],[1,0],[1,0]]})")}).code, kExitError);
}

TEST_F(CliTest, BoundsTable) {
  const Outcome r = invoke({"bounds", "--degrees", "2:4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, row2, row3, row4, extra;
  std::getline(lines, header);
  std::getline(lines, row2);
  std::getline(lines, row3);
  std::getline(lines, row4);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(header, "n,tan_bound,square_bound,one_over_n,one_minus_one_over_n");
  EXPECT_TRUE(row2.starts_with("2,0.2071067811865475")) << row2;
  EXPECT_NE(row2.find(",0.25,"), std::string::npos) << row2;
  EXPECT_TRUE(row3.starts_with("3,0.089316397477040")) << row3;
  EXPECT_EQ(r.out.find('\r'), std::string::npos);

  const Outcome ten = invoke({"bounds", "--degree", "10"});
  EXPECT_NE(ten.out.find(",0.10000000000000001,"), std::string::npos) << ten.out;

  for (const char* range : {"1:4", "5:3", "2:1001", "x"}) EXPECT_EQ(invoke({"bounds", "--degrees", range}).code, kExitError) << range;
}

TEST_F(CliTest, BoundsWithOutWritesManifestSidecar) {
  const auto out = path("bounds.csv");
  ASSERT_EQ(invoke({"bounds", "--degrees", "2:3", "--out", out}).code, kExitOk);
  EXPECT_TRUE(fs::exists(out));
  const Json m = Json::parse(io::read_text_file(out + ".manifest.json"));
  EXPECT_EQ(m["manifest"]["command"], "bounds");
}

TEST_F(CliTest, SearchExamples) {
  const Outcome odd = invoke({"search", "--class", "odd", "--degree", "3", "--seed", "7", "--restarts", "8"});
  ASSERT_EQ(odd.code, kExitOk) << odd.err;
  EXPECT_NEAR(Json::parse(odd.out)["body"]["runs"][0]["best_D"].get<double>(), 2.0 / 3.0, 1e-9);

  const Outcome quad = invoke({"search", "--class", "general", "--degree", "2", "--seed", "1", "--restarts", "8"});
  ASSERT_EQ(quad.code, kExitOk) << quad.err;
  EXPECT_NEAR(Json::parse(quad.out)["body"]["runs"][0]["best_D"].get<double>(), 0.5, 1e-12);

  EXPECT_EQ(invoke({"search", "--class", "odd", "--degree", "4"}).code, kExitError);
  EXPECT_EQ(invoke({"search", "--class", "banana", "--degree", "3"}).code, kExitError);
  EXPECT_EQ(invoke({"search", "--degree", "3", "--degrees", "3:5"}).code, kExitError);
}

TEST_F(CliTest, SearchWritesPlotCsv) {
  const auto out = path("search.json");
  const Outcome r = invoke({"search", "--class", "odd", "--degrees", "3:6", "--restarts", "2", "--max-evals", "100", "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string plot = io::read_text_file(out + ".plot.csv");
  EXPECT_TRUE(plot.starts_with("degree,best_D,conjectured_floor,proven_floor\n3,")) << plot;
  EXPECT_NE(plot.find("\n5,"), std::string::npos);
  EXPECT_EQ(plot.find("\n4,"), std::string::npos);
  EXPECT_EQ(Json::parse(io::read_text_file(out))["body"]["runs"].size(), 2u);
}

TEST_F(CliTest, ReportBodiesAreByteIdentical) {
  const std::vector<std::string> args{"search", "--class", "general", "--degree", "4", "--seed", "3", "--restarts", "3", "--max-evals", "200"};
  const Json a = Json::parse(invoke(args).out), b = Json::parse(invoke(args).out);
  EXPECT_EQ(a["body"].dump(), b["body"].dump());
  EXPECT_EQ(a["manifest"]["body_digest"], b["manifest"]["body_digest"]);

  const std::vector<std::string> v{"verify", "--samples", "5", "--degrees", "3:5", "--seed", "11"};
  EXPECT_EQ(Json::parse(invoke(v).out)["body"].dump(), Json::parse(invoke(v).out)["body"].dump());
}

TEST_F(CliTest, VerifyPassesAndRejectsEmptyBatch) {
  const Outcome r = invoke({"verify", "--samples", "100", "--degrees", "3:9", "--seed", "42"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json body = Json::parse(r.out)["body"];
  EXPECT_TRUE(body["failures"].empty());
  for (const auto& [name, tally] : body["properties"].items()) {
    EXPECT_EQ(tally["fail"], 0) << name;
    EXPECT_GT(tally["pass"].get<int>(), 0) << name;
  }
  EXPECT_EQ(invoke({"verify", "--samples", "0"}).code, kExitError);
}

TEST_F(CliTest, VerifyReplayIsDeterministic) {
  const auto in = write("p.json", R"({"coeffs": [[0,0],[1,0],[0,0],[0.5,-1.25],[0,0],[2,0.75]]})");
  const Outcome a = invoke({"verify", "--replay", in});
  const Outcome b = invoke({"verify", "--replay", in});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(Json::parse(a.out)["body"].dump(), Json::parse(b.out)["body"].dump());
}

TEST_F(CliTest, WrittenPolynomialsReparseExactly) {
  const auto in = write("p.json", R"({"coeffs": [[0,0],[1,0],[0.1,0.30000000000000004],[-1e-300,7.123456789012345e12]]})");
  const auto out = path("report.json");
  ASSERT_EQ(invoke({"analyze", in, "--out", out}).code, kExitOk);
  const Json report = Json::parse(io::read_text_file(out));
  EXPECT_EQ(io::polynomial_from_json(report["body"]["polynomial"]), io::read_polynomial_file(in));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({"analyze"}).code, kExitError);
  EXPECT_EQ(invoke({"--version"}).code, kExitOk);
  EXPECT_EQ(invoke({"analyze", write("p.json", R"({"coeffs": [[0,0],[1,0],[1,0]]})"), "--tol", "-1"}).code, kExitError);
}

}  // namespace
}  // namespace mvlab::cli
