#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "mvlab/io.hpp"
#include "oracles.hpp"

namespace mvlab::io {
namespace {

using testing::C;

TEST(Io, PolynomialRoundTripIsBitExact) {
  testing::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<C> c(rng.integer(1, 20));
    for (auto& x : c) x = {std::ldexp(rng.uniform(-1.0, 1.0), rng.integer(-60, 60)), rng.uniform(-1e-3, 1e3)};
    c.push_back(1.0);
    const Polynomial p(c);
    EXPECT_EQ(parse_polynomial(polynomial_to_json(p).dump()), p);
    EXPECT_EQ(parse_polynomial(polynomial_to_json(p).dump(2)), p);
  }
  const Polynomial edge{{std::numeric_limits<double>::denorm_min(), -0.0}, {0.1, 1.0 / 3.0},
                        {std::numeric_limits<double>::max(), 0.0}};
  EXPECT_EQ(parse_polynomial(polynomial_to_json(edge).dump()), edge);
}

TEST(Io, ParsesDocumentedFormat) {
  const Polynomial p = parse_polynomial(R"({"coeffs": [[0, 0], [1, 0], [0, 0], [0.5, -2]]})");
  EXPECT_EQ(p, (Polynomial{0.0, 1.0, 0.0, {0.5, -2.0}}));
}

TEST(Io, RejectsMalformedInput) {
  for (const char* bad : {"", "[]", "{}", R"({"coeffs": []})", R"({"coeffs": [1, 2]})",
                          R"({"coeffs": [[1, 2, 3]]})", R"({"coeffs": [["a", 0]]})", "{\"coeffs\": [[1, 0]"}) {
    try {
      parse_polynomial(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Io, RatioReportFields) {
  RatioReport r;
  r.degree = 3;
  r.critical_points = {{0.0, 0.5}, {0.0, -0.5}};
  r.ratios = {{2.0 / 3.0, 0.0}, {2.0 / 3.0, 0.0}};
  r.smale_ratio = r.dual_ratio = 2.0 / 3.0;
  const Json j = ratio_report_to_json(r);
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["critical_points"].size(), 2u);
  EXPECT_EQ(j["critical_points"][1][1].get<double>(), -0.5);
  EXPECT_EQ(j["S"].get<double>(), 2.0 / 3.0);
  EXPECT_EQ(j["D"].get<double>(), 2.0 / 3.0);
}

TEST(Io, CertificateFields) {
  OddCertificate c;
  c.degree = 3;
  c.q = Polynomial{1.0, 1.0};
  c.w = -1.0 / 3.0;
  c.c = {0.0, 0.5};
  c.q_abs = 2.0 / 3.0;
  c.bound = 1.0 / 3.0;
  const Json j = certificate_to_json(c);
  for (const char* key : {"k", "degree", "q", "w", "c", "q_abs", "bound", "residual_R", "residual_Pprime"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(polynomial_from_json(j["q"]), c.q);
  EXPECT_EQ(complex_from_json(j["w"]), c.w);
}

TEST(Io, AtomicWriteReplacesFile) {
  const auto dir = std::filesystem::temp_directory_path() / "mvlab_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path, "first");
  write_file_atomic(path, "second\n");
  EXPECT_EQ(read_text_file(path), "second\n");
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_text_file(dir / "missing.json"), Error);
}

}  // namespace
}  // namespace mvlab::io
