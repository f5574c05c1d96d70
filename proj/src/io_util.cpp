#include "io_util.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "coldrec/errors.hpp"

namespace coldrec {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

CsvReader::CsvReader(const std::string& path) : path_(path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  buffer_ = ss.str();
}

bool CsvReader::next_line(std::string& out) {
  if (pos_ >= buffer_.size()) return false;
  std::size_t end = buffer_.find('\n', pos_);
  if (end == std::string::npos) end = buffer_.size();
  out.assign(buffer_, pos_, end - pos_);
  if (!out.empty() && out.back() == '\r') out.pop_back();
  pos_ = end + 1;
  ++line_;
  return true;
}

void CsvReader::fail(const std::string& message) const {
  throw data_error(path_ + ":" + std::to_string(line_) + ": " + message);
}

}  // namespace coldrec
