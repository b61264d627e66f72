#include "ffcount/table.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ffc {

void Table::add(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
}

void Table::write_json(std::ostream& os) const {
  // ordered_json keeps the header order so output is byte-stable.
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << "\n";
}

void Table::write(std::ostream& os, const std::string& format) const {
  if (format == "csv")
    write_csv(os);
  else if (format == "json")
    write_json(os);
  else
    throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
}

}  // namespace ffc
