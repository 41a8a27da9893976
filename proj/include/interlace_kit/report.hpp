#pragma once

#include "interlace_kit/classify.hpp"
#include "interlace_kit/interlace.hpp"
#include "interlace_kit/io.hpp"
#include "interlace_kit/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ikit {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);

std::string_view format_name(MatrixFormat f);

/// 1-based index list.
nlohmann::json index_json(const IndexSet& s);
nlohmann::json root_json(const IsolatedRoot& r, bool decimal);
nlohmann::json lvalue_json(const LValue& l, bool decimal);
nlohmann::json witness_json(const Witness& w, bool decimal);
nlohmann::json class_report_json(const ClassReport& r, bool decimal);
nlohmann::json interlace_report_json(const InterlaceReport& r, bool decimal);
nlohmann::json pipeline_json(const KotelyanskyPipeline& p, const DescartesResult& d, bool decimal);
nlohmann::json search_json(const SearchResult& r, bool decimal);

struct GeneratedInstance {
  long sample = 0;
  std::uint64_t seed = 0;
  RationalMatrix matrix;
  bool member = false;
};

/// `skipped` counts samples the generator gave up on.
nlohmann::json generated_json(const SearchConfig& config, const std::vector<GeneratedInstance>& instances, long skipped,
                              bool decimal);

/// Top-level report: schema_version, command, input (path, sha256, format,
/// size), result and timing. Everything except timing is deterministic.
nlohmann::json envelope(std::string_view command, const MatrixFile* input, nlohmann::json result, double elapsed_ms);

std::string root_text(const IsolatedRoot& r, bool decimal);
std::string class_report_text(const ClassReport& r, bool decimal);
std::string interlace_report_text(const InterlaceReport& r, bool decimal);
std::string pipeline_text(const KotelyanskyPipeline& p, const DescartesResult& d, bool decimal);
std::string search_text(const SearchResult& r, bool decimal);
std::string generated_text(const SearchConfig& config, const std::vector<GeneratedInstance>& instances, long skipped,
                           bool decimal);

}  // namespace ikit
