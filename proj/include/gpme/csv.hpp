#pragma once
/// @file csv.hpp
/// @brief Minimal CSV emission: a header row plus data rows, with doubles
///        written at full round-trip precision and non-finite values spelled
///        out ("nan", "inf", "-inf").

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "gpme/errors.hpp"

namespace gpme {

inline std::string csv_cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline std::string csv_cell(long v) { return std::to_string(v); }
inline std::string csv_cell(int v) { return std::to_string(v); }
inline std::string csv_cell(std::string v) { return v; }

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path) {
    if (!out_) throw ConfigError("output: cannot open '" + path + "' for writing");
    write_row(header);
  }

  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  /// Builds a row from heterogeneous cells (doubles, integers, strings).
  template <typename... Cells>
  void row(const Cells&... cells) {
    write_row({csv_cell(cells)...});
  }

 private:
  std::ofstream out_;
};

}  // namespace gpme
