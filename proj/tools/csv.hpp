#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace fracburgers::cli {

/// Shortest decimal that parses back to the same double (at most 17
/// significant digits, `.` separator, no locale).
std::string format_number(double value);

/// Header plus LF-terminated rows of numbers.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

/// Reads a numeric CSV with a header row into named columns. Throws
/// std::invalid_argument on ragged rows or non-numeric cells.
std::map<std::string, std::vector<double>> read_csv_columns(const std::string& path);

}  // namespace fracburgers::cli
