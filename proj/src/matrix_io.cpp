#include "pcorr/matrix_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace pcorr {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what
                              : what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    Token t{{}, line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      t.text.push_back(text[i]);
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool is_decimal(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

BigInt to_bigint(const Token& t) {
  if (!is_decimal(t.text)) {
    throw ParseError("expected a decimal integer, got '" + t.text + "'", t.line, t.column);
  }
  return BigInt(t.text, 10);
}

IntMatrix parse_text(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty input", 1, 1);

  // Group tokens by source line; blank lines are skipped.
  std::vector<std::vector<Token>> lines;
  for (const auto& t : tokens) {
    if (lines.empty() || lines.back().front().line != t.line) lines.emplace_back();
    lines.back().push_back(t);
  }

  const auto& header = lines.front();
  const Token& head = header.front();
  if (header.size() != 1) {
    throw ParseError("first line must hold only the dimension", header[1].line, header[1].column);
  }
  if (!is_decimal(head.text) || head.text[0] == '-') {
    throw ParseError("expected matrix dimension, got '" + head.text + "'", head.line,
                     head.column);
  }
  const BigInt nbig(head.text, 10);
  if (nbig < 1 || nbig > 4096) {
    throw ParseError("dimension out of range: " + head.text, head.line, head.column);
  }
  const std::size_t n = nbig.get_ui();

  if (lines.size() < n + 1) {
    const auto& last = lines.back().back();
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     last.line + 1, 1);
  }
  if (lines.size() > n + 1) {
    const auto& extra = lines[n + 1].front();
    throw ParseError("unexpected trailing token '" + extra.text + "'", extra.line, extra.column);
  }

  std::vector<BigInt> entries;
  entries.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& row = lines[i];
    if (row.size() != n) {
      const auto& at = row.size() > n ? row[n] : row.back();
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n),
                       at.line, at.column);
    }
    for (const auto& t : row) entries.push_back(to_bigint(t));
  }
  return IntMatrix(n, std::move(entries));
}

BigInt json_entry(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()), 10)
                                  : BigInt(std::to_string(v.get<std::int64_t>()), 10);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!is_decimal(s)) throw ParseError("invalid integer string '" + s + "'", 0, 0);
    return BigInt(s, 10);
  }
  throw ParseError("matrix entries must be integers, got " + v.dump(), 0, 0);
}

IntMatrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert to line/column.
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!doc.is_object() || !doc.contains("entries")) {
    throw ParseError("JSON matrix needs an \"entries\" array", 0, 0);
  }
  const auto& rows = doc["entries"];
  if (!rows.is_array() || rows.empty()) throw ParseError("\"entries\" must be a non-empty array", 0, 0);
  const std::size_t n = rows.size();
  if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(n))) {
    throw ParseError("\"n\" does not match the number of rows", 0, 0);
  }
  std::vector<BigInt> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                           " entries",
                       0, 0);
    }
    for (const auto& v : rows[i]) entries.push_back(json_entry(v));
  }
  return IntMatrix(n, std::move(entries));
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_text(text);
  }
  throw ParseError("empty input", 1, 1);
}

IntMatrix read_matrix(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_matrix(text);
}

}  // namespace pcorr
