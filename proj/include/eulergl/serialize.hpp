// JSON encoding of polynomials and series as arrays of decimal strings in
// ascending degree (rationals as "num/den"), with exact round-trips, plus
// the deterministic table renderer used by the CLI.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eulergl/series.hpp"

namespace eulergl {

using Json = nlohmann::json;

inline Json to_json(const Int& v) { return v.get_str(); }
inline Json to_json(const Rat& v) { return v.get_str(); }

inline Int int_from_json(const Json& j) {
  return Int(j.get<std::string>(), 10);
}
inline Rat rat_from_json(const Json& j) {
  Rat r(j.get<std::string>());
  r.canonicalize();
  return r;
}

template <class T>
Json to_json(const Polynomial<T>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline QPolynomial polynomial_from_json(const Json& j) {
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return QPolynomial(std::move(c));
}

inline QRatPolynomial rat_polynomial_from_json(const Json& j) {
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return QRatPolynomial(std::move(c));
}

template <class R>
Json to_json(const TruncatedSeries<R>& s) {
  Json arr = Json::array();
  for (const auto& c : s.coefficients()) arr.push_back(to_json(c));
  return arr;
}

inline IntSeries series_from_json(const Json& j) {
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return IntSeries(std::move(c));
}

inline PolySeries poly_series_from_json(const Json& j) {
  std::vector<QPolynomial> c;
  for (const auto& v : j) c.push_back(polynomial_from_json(v));
  return PolySeries(std::move(c));
}

inline RatSeries rat_series_from_json(const Json& j) {
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return RatSeries(std::move(c));
}

enum class TableFormat { csv, json, md };

inline TableFormat table_format_from_string(const std::string& s) {
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  if (s == "md") return TableFormat::md;
  throw domain_error("unknown table format '" + s + "' (csv|json|md)");
}

/// Byte-deterministic rendering of a rectangular integer matrix.  Integers
/// print as plain decimal strings, sign preserved, never scientific.
/// Labels are used by the md format only; csv emits the bare matrix.
inline std::string format_table(const std::vector<std::vector<Int>>& values,
                                TableFormat format,
                                const std::vector<std::string>& row_labels = {},
                                const std::vector<std::string>& col_labels = {}) {
  for (const auto& row : values)
    if (!values.empty() && row.size() != values.front().size())
      throw domain_error("format_table: matrix is not rectangular");
  std::string out;
  switch (format) {
    case TableFormat::csv:
      for (const auto& row : values) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j) out += ',';
          out += to_decimal(row[j]);
        }
        out += '\n';
      }
      break;
    case TableFormat::json: {
      Json arr = Json::array();
      for (const auto& row : values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_decimal(v));
        arr.push_back(r);
      }
      out = arr.dump();
      out += '\n';
      break;
    }
    case TableFormat::md: {
      const size_t cols = values.empty() ? 0 : values.front().size();
      out += "| r\\n |";
      for (size_t j = 0; j < cols; ++j) {
        out += ' ';
        out += (j < col_labels.size() ? col_labels[j]
                                      : "n=" + std::to_string(j + 1));
        out += " |";
      }
      out += '\n';
      out += "|---|";
      for (size_t j = 0; j < cols; ++j) out += "---|";
      out += '\n';
      for (size_t i = 0; i < values.size(); ++i) {
        out += "| ";
        out += (i < row_labels.size() ? row_labels[i] : std::to_string(i + 1));
        out += " |";
        for (const auto& v : values[i]) {
          out += ' ';
          out += to_decimal(v);
          out += " |";
        }
        out += '\n';
      }
      break;
    }
  }
  return out;
}

}  // namespace eulergl
