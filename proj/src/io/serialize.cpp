#include "mvlab/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace mvlab::io {
namespace {

Json complex_list(std::span<const Complex> zs) {
  Json out = Json::array();
  for (const Complex z : zs) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::ParseError, "complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json polynomial_to_json(const Polynomial& p) { return Json{{"coeffs", complex_list(p.coeffs())}}; }

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw Error(ErrorCode::ParseError, "expected an object with a nonempty \"coeffs\" array");
  std::vector<Complex> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(complex_from_json(c));
  return Polynomial(std::move(coeffs));
}

Polynomial parse_polynomial(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return polynomial_from_json(j);
}

Polynomial read_polynomial_file(const std::filesystem::path& path) { return parse_polynomial(read_text_file(path)); }

Json ratio_report_to_json(const RatioReport& r) {
  return Json{{"degree", r.degree},
              {"critical_points", complex_list(r.critical_points)},
              {"ratios", complex_list(r.ratios)},
              {"S", r.smale_ratio},
              {"D", r.dual_ratio},
              {"argmin_index", r.argmin_index},
              {"argmax_index", r.argmax_index}};
}

Json check_outcome_to_json(const CheckOutcome& c) {
  Json comparisons = Json::array();
  for (const auto& cmp : c.comparisons) {
    comparisons.push_back(Json{{"name", cmp.name},
                               {"kind", cmp.kind == BoundKind::Proven ? "proven" : "conjectured"},
                               {"bound", cmp.bound},
                               {"value", cmp.value},
                               {"margin", cmp.margin},
                               {"status", check_status_name(cmp.status)}});
  }
  return Json{{"status", check_status_name(c.status())}, {"comparisons", comparisons}};
}

Json certificate_to_json(const OddCertificate& c) {
  return Json{{"k", c.k},
              {"degree", c.degree},
              {"q", polynomial_to_json(c.q)},
              {"w", complex_to_json(c.w)},
              {"c", complex_to_json(c.c)},
              {"q_abs", c.q_abs},
              {"bound", c.bound},
              {"residual_R", c.residual_R},
              {"residual_Pprime", c.residual_Pprime}};
}

Json remark_to_json(const RemarkReport& r) {
  return Json{{"degree", r.degree}, {"D", r.dual_ratio}, {"one_over_sqrt_d", r.remark_bound}, {"margin", r.margin}};
}

Json search_config_to_json(const SearchConfig& c) {
  return Json{{"degree", c.degree},
              {"class", c.poly_class.name()},
              {"restarts", c.restarts},
              {"max_evals_per_restart", c.max_evals_per_restart},
              {"seed", c.seed},
              {"coefficient_radius", c.coefficient_radius},
              {"residual_tol", c.tolerance.residual_tol},
              {"max_iters", c.tolerance.max_iters},
              {"cluster_tol", c.tolerance.cluster_tol}};
}

Json search_flag_to_json(const SearchFlag& f) {
  return Json{{"kind", check_status_name(f.kind)},
              {"restart", f.restart},
              {"polynomial", polynomial_to_json(f.poly.poly())},
              {"D", f.dual_ratio},
              {"floor", f.floor}};
}

Json search_result_to_json(const SearchResult& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags) flags.push_back(search_flag_to_json(f));
  return Json{{"config", search_config_to_json(r.config)},
              {"best_polynomial", polynomial_to_json(r.best_poly.poly())},
              {"best_D", r.best_D},
              {"conjectured_floor", r.conjectured_floor},
              {"proven_floor", r.proven_floor},
              {"evals", r.evals},
              {"per_restart_bests", r.per_restart_bests},
              {"flags", flags}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::system_error(errno, std::generic_category(), "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mvlab::io
