#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mvlab/oddcert.hpp"
#include "mvlab/polynomial.hpp"
#include "mvlab/ratios.hpp"
#include "mvlab/search.hpp"

namespace mvlab::io {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"coeffs": [[re, im], ...]}, ascending degree.
Json polynomial_to_json(const Polynomial& p);
/// Throws ParseError on a malformed document.
Polynomial polynomial_from_json(const Json& j);

Polynomial parse_polynomial(std::string_view text);
Polynomial read_polynomial_file(const std::filesystem::path& path);

Json ratio_report_to_json(const RatioReport& r);
Json check_outcome_to_json(const CheckOutcome& c);
Json certificate_to_json(const OddCertificate& c);
Json remark_to_json(const RemarkReport& r);
Json search_config_to_json(const SearchConfig& c);
Json search_flag_to_json(const SearchFlag& f);
Json search_result_to_json(const SearchResult& r);

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace mvlab::io
