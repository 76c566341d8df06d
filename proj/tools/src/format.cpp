#include "graywyner/cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace graywyner::cli {

namespace {

void csv_field(std::ostream& out, const std::optional<double>& v) {
  if (v) out << format_number(*v);
}

void json_field(std::ostream& out, std::string_view key, const std::optional<double>& v) {
  out << '"' << key << "\": ";
  if (v) {
    out << format_number(*v);
  } else {
    out << "null";
  }
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

void write_rows(std::ostream& out, const std::vector<Row>& rows, Format format) {
  if (format == Format::kCsv) {
    out << kCsvHeader << '\n';
    for (const Row& r : rows) {
      out << format_number(r.x) << ',' << r.regime << ',';
      if (r.infinite) {
        out << "inf";
      } else {
        csv_field(out, r.rate_closed);
      }
      out << ',';
      csv_field(out, r.rate_dual);
      out << ',';
      csv_field(out, r.rate_oracle);
      out << ',';
      csv_field(out, r.gap);
      out << '\n';
    }
    return;
  }

  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out << "  {\"x\": " << format_number(r.x) << ", \"regime\": \"" << r.regime << "\", ";
    json_field(out, "rate_closed", r.infinite ? std::nullopt : r.rate_closed);
    out << ", ";
    json_field(out, "rate_dual", r.rate_dual);
    out << ", ";
    json_field(out, "rate_oracle", r.rate_oracle);
    out << ", ";
    json_field(out, "gap", r.gap);
    if (r.infinite) out << ", \"infinite\": true";
    out << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  out << "]\n";
}

}  // namespace graywyner::cli
