#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coldrec {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

// Splits one CSV line on commas. No quoting: a comma is always a field
// separator, so IDs containing commas are rejected upstream by field count.
std::vector<std::string_view> split_csv_line(std::string_view line);

struct CsvReader {
  explicit CsvReader(const std::string& path);
  // Reads the next line (without trailing \r\n); false at EOF.
  bool next_line(std::string& out);
  int line_number() const { return line_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::string path_;
  std::string buffer_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

}  // namespace coldrec
