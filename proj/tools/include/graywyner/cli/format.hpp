#pragma once

// Locale-independent number formatting and tabular emitters.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace graywyner::cli {

enum class Format { kCsv, kJson };

// One output row. Missing values are emitted as empty CSV fields / JSON null.
struct Row {
  double x = 0.0;
  std::string regime;
  // nullopt together with infinite == true marks an unbounded rate.
  std::optional<double> rate_closed;
  std::optional<double> rate_dual;
  std::optional<double> rate_oracle;
  std::optional<double> gap;
  bool infinite = false;
};

inline constexpr std::string_view kCsvHeader = "x,regime,rate_closed,rate_dual,rate_oracle,gap";

// 15 significant digits, shortest of fixed/scientific, '.' separator.
[[nodiscard]] std::string format_number(double value);

void write_rows(std::ostream& out, const std::vector<Row>& rows, Format format);

}  // namespace graywyner::cli
