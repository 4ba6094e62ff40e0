#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metricide::csv {

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& message, std::size_t record)
      : std::runtime_error(message), record_(record) {}
  std::size_t record() const noexcept { return record_; }

 private:
  std::size_t record_;
};

using Record = std::vector<std::string>;

// RFC 4180 reader: comma separated, '"' quoting with '""' escapes, quoted
// fields may span lines, CRLF and LF both accepted. A UTF-8 BOM is skipped.
std::vector<Record> parse(std::string_view content);

std::string quote(std::string_view field);

}  // namespace metricide::csv
