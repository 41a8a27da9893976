#include "interlace_kit/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace ikit {
namespace {

// DOM builder that keeps floating-point literals as their source text.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<nlohmann::json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<nlohmann::json>;
  using Base::Base;

  bool number_float(double /*unused*/, const std::string& literal) {
    std::string copy = literal;
    return Base::string(copy);
  }
};

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw ParseError("matrix has no rows");
  const std::size_t cols = rows.front().size();
  if (cols == 0) throw ParseError("matrix row 1 is empty");
  RationalMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return a;
}

Rational json_entry(const nlohmann::json& v, std::size_t i, std::size_t j) {
  const std::string where = " at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1);
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
  } catch (const ParseError& e) {
    throw ParseError(e.what() + where);
  }
  throw ParseError("matrix entry must be a number or a rational string" + where);
}

}  // namespace

RationalMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Rational> row;
    std::string token;
    while (fields >> token) {
      try {
        row.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " on line " + std::to_string(line_no));
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

RationalMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  ExactNumberSax sax(doc, true);
  try {
    nlohmann::json::sax_parse(text, &sax);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* body = &doc;
  if (doc.is_object()) {
    if (!doc.contains("matrix")) throw ParseError("JSON object has no \"matrix\" member");
    body = &doc.at("matrix");
  }
  if (!body->is_array()) throw ParseError("JSON matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < body->size(); ++i) {
    const nlohmann::json& r = (*body)[i];
    if (!r.is_array()) throw ParseError("JSON row " + std::to_string(i + 1) + " is not an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < r.size(); ++j) row.push_back(json_entry(r[j], i, j));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

RationalMatrix parse_matrix(std::string_view text, MatrixFormat* detected) {
  MatrixFormat format = MatrixFormat::Text;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '[' || c == '{') format = MatrixFormat::Json;
    break;
  }
  if (detected != nullptr) *detected = format;
  return format == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_text(text);
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  MatrixFile file;
  file.path = path;
  file.contents = buffer.str();
  file.matrix = parse_matrix(file.contents, &file.format);
  return file;
}

std::string format_scalar(const Rational& value, bool decimal) {
  return decimal ? to_decimal(value, 6) : to_string(value);
}

std::string format_matrix_text(const RationalMatrix& a, bool decimal) {
  std::string out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_scalar(a(i, j), decimal);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const RationalMatrix& a, bool decimal) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(format_scalar(a(i, j), decimal));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_matrix(const RationalMatrix& a, MatrixFormat format, bool decimal) {
  if (format == MatrixFormat::Json) return nlohmann::json{{"matrix", matrix_to_json(a, decimal)}}.dump(2) + "\n";
  return format_matrix_text(a, decimal);
}

}  // namespace ikit
