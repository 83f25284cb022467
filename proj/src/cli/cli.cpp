#include "mvlab/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <charconv>
#include <ctime>
#include <fmt/format.h>
#include <optional>
#include <ostream>

#include "mvlab/io.hpp"
#include "mvlab/oddcert.hpp"
#include "mvlab/ratios.hpp"
#include "mvlab/search.hpp"
#include "verify.hpp"

#ifndef MVLAB_VERSION
#define MVLAB_VERSION "dev"
#endif

namespace mvlab::cli {
namespace {

using io::Json;

constexpr double kConservativeTol = 1e-9;
constexpr int kMaxBoundsDegree = 1000;

struct Range {
  int lo = 0;
  int hi = 0;
};

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, "not an integer: '" + std::string(s) + "'");
  return v;
}

// "a:b" or a single "n".
Range parse_range(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) {
    const int n = parse_int(s);
    return {n, n};
  }
  return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

// "re,im"
Complex parse_complex(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "expected re,im");
  auto number = [](std::string_view t) {
    try {
      std::size_t used = 0;
      const double v = std::stod(std::string(t), &used);
      if (used != t.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(t) + "'");
    }
  };
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string g17(double v) { return fmt::format("{:.17g}", v); }

// Body first so it can be hashed without the volatile manifest fields.
Json wrap_report(const std::string& command, Json config, const std::optional<std::string>& input_digest,
                 Json body) {
  Json manifest{{"command", command},
                {"config", std::move(config)},
                {"timestamp", utc_timestamp()},
                {"tool_version", MVLAB_VERSION},
                {"input_digest", input_digest ? Json("sha256:" + *input_digest) : Json(nullptr)},
                {"body_digest", "sha256:" + sha256_hex(body.dump())}};
  return Json{{"manifest", std::move(manifest)}, {"body", std::move(body)}};
}

void emit(const std::string& out_path, std::string_view text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    io::write_file_atomic(out_path, text);
  }
}

struct LoadedInput {
  NormalizedPolynomial poly;
  std::string digest;
};

LoadedInput load_input(const std::string& path, const std::optional<std::string>& normalize_at_text) {
  const std::string text = io::read_text_file(path);
  const Polynomial raw = io::parse_polynomial(text);
  NormalizedPolynomial p =
      normalize_at_text ? normalize_at(raw, parse_complex(*normalize_at_text)) : NormalizedPolynomial::from(raw);
  return {std::move(p), sha256_hex(text)};
}

int status_exit(CheckStatus s) {
  switch (s) {
    case CheckStatus::NumericalAnomaly:
      return kExitAnomaly;
    case CheckStatus::CandidateCounterexample:
      return kExitCandidate;
    case CheckStatus::Ok:
      break;
  }
  return kExitOk;
}

struct CommonFlags {
  std::string out;
  double tol = ToleranceConfig{}.residual_tol;

  ToleranceConfig tolerance() const {
    ToleranceConfig cfg;
    cfg.residual_tol = tol;
    cfg.validate();
    return cfg;
  }
};

int cmd_analyze(const std::string& input, const std::optional<std::string>& at, const CommonFlags& flags,
                std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_input(input, at);
  const ToleranceConfig cfg = flags.tolerance();
  const RatioReport report = ratio_report(in.poly, cfg);
  const int k = detect_symmetry(in.poly);
  const bool odd = in.poly.degree() >= 3 && k % 2 == 0;
  const CheckOutcome dual = check_dual_bound(report, odd);
  const CheckOutcome smale = check_smale_upper(report);
  const bool conservative = is_conservative(report, kConservativeTol);

  Json body{{"polynomial", io::polynomial_to_json(in.poly.poly())},
            {"symmetry_k", k},
            {"odd", odd},
            {"report", io::ratio_report_to_json(report)},
            {"dual_check", io::check_outcome_to_json(dual)},
            {"smale_check", io::check_outcome_to_json(smale)},
            {"conservative", conservative}};
  if (odd) body["remark"] = io::remark_to_json(remark_check(in.poly, cfg));

  Json config{{"input", input}, {"normalize_at", at ? Json(*at) : Json(nullptr)}, {"residual_tol", cfg.residual_tol}};
  emit(flags.out, wrap_report("analyze", std::move(config), in.digest, std::move(body)).dump(2) + "\n", out);

  const CheckStatus worst = std::max(dual.status(), smale.status());
  err << fmt::format("S = {}, D = {}, conservative = {}, status = {}\n", g17(report.smale_ratio),
                     g17(report.dual_ratio), conservative, check_status_name(worst));
  return status_exit(worst);
}

int cmd_certify(const std::string& input, const std::optional<std::string>& at, std::optional<int> k_flag,
                const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const LoadedInput in = load_input(input, at);
  const ToleranceConfig cfg = flags.tolerance();
  const int k = k_flag ? *k_flag : detect_symmetry(in.poly);
  if (k < 2) {
    err << "error: no symmetry P(lambda z) = lambda P(z) with k >= 2 detected; pass --k to force one\n";
    return kExitError;
  }

  Json config{{"input", input}, {"normalize_at", at ? Json(*at) : Json(nullptr)}, {"k", k}, {"residual_tol", cfg.residual_tol}};
  OddCertificate cert;
  int code = kExitOk;
  std::string status = "CERTIFIED";
  try {
    cert = certify_symmetric(in.poly, k, cfg);
  } catch (const GuaranteeViolatedError& e) {
    cert = e.certificate();
    code = kExitAnomaly;
    status = "GUARANTEE_VIOLATED";
  }
  Json body{{"polynomial", io::polynomial_to_json(in.poly.poly())},
            {"status", status},
            {"certificate", io::certificate_to_json(cert)}};
  emit(flags.out, wrap_report("certify", std::move(config), in.digest, std::move(body)).dump(2) + "\n", out);

  if (code == kExitOk) {
    err << fmt::format("certified: |P(c)/c| = {} >= {}\n", g17(cert.q_abs), g17(cert.bound));
  } else {
    err << fmt::format("guarantee violated: |P(c)/c| = {} < {}\n", g17(cert.q_abs), g17(cert.bound));
  }
  return code;
}

int cmd_bounds(const std::string& degrees, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const Range r = parse_range(degrees);
  if (r.lo < 2 || r.hi < r.lo || r.hi > kMaxBoundsDegree) {
    err << "error: degree range must satisfy 2 <= a <= b <= 1000\n";
    return kExitError;
  }
  std::string csv = "n,tan_bound,square_bound,one_over_n,one_minus_one_over_n\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    const BoundPair b = dual_lower_bounds(n);
    const double nn = static_cast<double>(n);
    csv += fmt::format("{},{},{},{},{}\n", n, g17(b.tan_bound), g17(b.square_bound), g17(1.0 / nn), g17(1.0 - 1.0 / nn));
  }
  emit(flags.out, csv, out);
  if (!flags.out.empty()) {
    const Json manifest = wrap_report("bounds", Json{{"degrees", degrees}}, std::nullopt, Json{{"csv_sha256", sha256_hex(csv)}});
    io::write_file_atomic(flags.out + ".manifest.json", manifest.dump(2) + "\n");
  }
  return kExitOk;
}

struct SearchFlags {
  std::string poly_class = "general";
  std::optional<int> degree;
  std::optional<std::string> degrees;
  int restarts = SearchConfig{}.restarts;
  int max_evals = SearchConfig{}.max_evals_per_restart;
  std::uint64_t seed = 0;
  double radius = SearchConfig{}.coefficient_radius;
  int workers = 1;
  std::string plot;
};

int cmd_search(const SearchFlags& sf, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const PolyClass cls = PolyClass::parse(sf.poly_class);
  if (sf.degree.has_value() == sf.degrees.has_value()) {
    err << "error: give exactly one of --degree or --degrees\n";
    return kExitError;
  }
  std::vector<int> degrees;
  if (sf.degree) {
    parameterize(cls, *sf.degree);
    degrees.push_back(*sf.degree);
  } else {
    const Range r = parse_range(*sf.degrees);
    for (int d = r.lo; d <= r.hi; ++d) {
      try {
        parameterize(cls, d);
        degrees.push_back(d);
      } catch (const Error&) {
      }
    }
    if (degrees.empty()) {
      err << "error: no degree in " << *sf.degrees << " fits class " << cls.name() << "\n";
      return kExitError;
    }
  }

  SearchConfig base;
  base.poly_class = cls;
  base.restarts = sf.restarts;
  base.max_evals_per_restart = sf.max_evals;
  base.seed = sf.seed;
  base.coefficient_radius = sf.radius;
  base.workers = sf.workers;
  base.tolerance = flags.tolerance();

  Json runs = Json::array();
  std::string plot = "degree,best_D,conjectured_floor,proven_floor\n";
  CheckStatus worst = CheckStatus::Ok;
  for (int d : degrees) {
    SearchConfig cfg = base;
    cfg.degree = d;
    const SearchResult result = minimize_dual_ratio(cfg);
    runs.push_back(io::search_result_to_json(result));
    plot += fmt::format("{},{},{},{}\n", d, g17(result.best_D), g17(result.conjectured_floor), g17(result.proven_floor));
    for (const auto& f : result.flags) worst = std::max(worst, f.kind);
    err << fmt::format("{} d={}: best_D = {} (conjectured floor {}, proven floor {}), flags = {}\n", cls.name(), d,
                       g17(result.best_D), g17(result.conjectured_floor), g17(result.proven_floor), result.flags.size());
  }

  Json config{{"class", cls.name()},
              {"degrees", degrees},
              {"restarts", base.restarts},
              {"max_evals_per_restart", base.max_evals_per_restart},
              {"seed", base.seed},
              {"coefficient_radius", base.coefficient_radius},
              {"workers", base.workers},
              {"residual_tol", base.tolerance.residual_tol}};
  emit(flags.out, wrap_report("search", std::move(config), std::nullopt, Json{{"runs", runs}}).dump(2) + "\n", out);
  std::string plot_path = sf.plot;
  if (plot_path.empty() && !flags.out.empty()) plot_path = flags.out + ".plot.csv";
  if (!plot_path.empty()) io::write_file_atomic(plot_path, plot);
  return status_exit(worst);
}

struct VerifyFlags {
  int samples = -1;
  std::string degrees = "3:9";
  std::uint64_t seed = 0;
  std::string replay;
};

int cmd_verify(const VerifyFlags& vf, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const ToleranceConfig cfg = flags.tolerance();
  VerifySummary summary;
  Json config;
  std::optional<std::string> digest;
  if (!vf.replay.empty()) {
    const LoadedInput in = load_input(vf.replay, std::nullopt);
    digest = in.digest;
    config = Json{{"replay", vf.replay}, {"residual_tol", cfg.residual_tol}};
    for (const auto& name : kVerifyProperties) summary.tallies[name];
    check_polynomial(in.poly, cfg, summary);
  } else {
    if (vf.samples <= 0) {
      err << "error: --samples must be positive\n";
      return kExitError;
    }
    const Range r = parse_range(vf.degrees);
    if (r.lo < 2 || r.hi < r.lo || r.hi > 20) {
      err << "error: degree range must satisfy 2 <= a <= b <= 20\n";
      return kExitError;
    }
    config = Json{{"samples", vf.samples}, {"degrees", vf.degrees}, {"seed", vf.seed}, {"residual_tol", cfg.residual_tol}};
    summary = run_verify(vf.samples, r.lo, r.hi, vf.seed, cfg);
  }
  emit(flags.out, wrap_report("verify", std::move(config), digest, verify_summary_to_json(summary)).dump(2) + "\n", out);

  for (const auto& name : kVerifyProperties) {
    const PropertyTally t = summary.tallies[name];
    err << fmt::format("{}: {} pass, {} fail\n", name, t.pass, t.fail);
  }
  return summary.failures.empty() ? kExitOk : kExitAnomaly;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mvlab: critical-value ratios, odd-polynomial certificates and extremal search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MVLAB_VERSION);

  CommonFlags common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the report here instead of standard output");
    sub->add_option("--tol", common.tol, "Root residual tolerance")->check(CLI::PositiveNumber);
  };

  std::string input;
  std::optional<std::string> at;
  std::optional<int> k;

  auto* analyze = app.add_subcommand("analyze", "Critical points, S(P), D(P) and bound checks for one polynomial");
  analyze->add_option("input", input, "Polynomial file {\"coeffs\": [[re, im], ...]}")->required();
  analyze->add_option("--normalize-at", at, "Re-base at z0 = re,im before analysing");
  add_common(analyze);

  auto* certify = app.add_subcommand("certify", "Constructive certificate for a k-fold symmetric polynomial");
  certify->add_option("input", input, "Polynomial file")->required();
  certify->add_option("--normalize-at", at, "Re-base at z0 = re,im first");
  certify->add_option("--k", k, "Symmetry order (default: detected)");
  add_common(certify);

  std::string bound_degrees;
  auto* bounds = app.add_subcommand("bounds", "CSV table of the bound constants per degree");
  auto* bounds_range = bounds->add_option("--degrees", bound_degrees, "Degree range a:b");
  bounds->add_option("--degree", bound_degrees, "Single degree")->excludes(bounds_range);
  add_common(bounds);

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "Multi-start simplex search minimising D(P)");
  search->add_option("--class", sf.poly_class, "general | odd | sym:<k>");
  search->add_option("--degree", sf.degree, "Degree d");
  search->add_option("--degrees", sf.degrees, "Degree range a:b (incompatible degrees skipped)");
  search->add_option("--restarts", sf.restarts)->check(CLI::PositiveNumber);
  search->add_option("--max-evals", sf.max_evals, "Evaluations per restart")->check(CLI::PositiveNumber);
  search->add_option("--seed", sf.seed);
  search->add_option("--radius", sf.radius, "Coefficient radius for starting points")->check(CLI::PositiveNumber);
  search->add_option("--workers", sf.workers, "Threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  search->add_option("--plot", sf.plot, "Plot CSV path (default <out>.plot.csv)");
  add_common(search);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Batch property checks on random polynomials");
  verify->add_option("--samples", vf.samples, "Samples per degree and class");
  verify->add_option("--degrees", vf.degrees, "Degree range a:b");
  verify->add_option("--seed", vf.seed);
  verify->add_option("--replay", vf.replay, "Run the checks on one polynomial file");
  add_common(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForVersion&) {
    out << MVLAB_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, at, common, out, err);
    if (certify->parsed()) return cmd_certify(input, at, k, common, out, err);
    if (bounds->parsed()) {
      if (bound_degrees.empty()) {
        err << "error: bounds needs --degrees a:b or --degree n\n";
        return kExitError;
      }
      return cmd_bounds(bound_degrees, common, out, err);
    }
    if (search->parsed()) return cmd_search(sf, common, out, err);
    if (verify->parsed()) return cmd_verify(vf, common, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace mvlab::cli
