#pragma once

#include "interlace_kit/matrix.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace ikit {

enum class MatrixFormat { Text, Json };

struct MatrixFile {
  std::string path;
  RationalMatrix matrix;
  MatrixFormat format = MatrixFormat::Text;
  /// The raw bytes read, kept for the report digest.
  std::string contents;
};

/// One row per line, entries separated by whitespace, each a decimal literal
/// or "p/q"; '#' starts a comment. Throws ParseError on ragged or empty input.
RationalMatrix parse_matrix_text(std::string_view text);

/// Either [[...], ...] or {"matrix": [[...], ...]}. Entries may be JSON
/// numbers (read from their literal text, so 0.6 is exactly 3/5) or strings
/// holding a rational literal.
RationalMatrix parse_matrix_json(std::string_view text);

/// Parses JSON when the first significant character is '[' or '{', text otherwise.
RationalMatrix parse_matrix(std::string_view text, MatrixFormat* detected = nullptr);

/// Reads and parses a file; "-" reads standard input. Throws ParseError.
MatrixFile read_matrix_file(const std::string& path);

/// Scalar rendering shared by every output path: "p/q" or a rounded decimal.
std::string format_scalar(const Rational& value, bool decimal);

std::string format_matrix_text(const RationalMatrix& a, bool decimal = false);
nlohmann::json matrix_to_json(const RationalMatrix& a, bool decimal = false);
std::string format_matrix(const RationalMatrix& a, MatrixFormat format, bool decimal = false);

}  // namespace ikit
