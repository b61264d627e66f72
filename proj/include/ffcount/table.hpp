#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffc {

/// Rows of exact values rendered as strings; written as CSV (with header)
/// or as a JSON array of objects keyed by the header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
  void write(std::ostream& os, const std::string& format) const;
};

}  // namespace ffc
