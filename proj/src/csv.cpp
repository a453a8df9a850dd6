#include "gmbt/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gmbt/errors.hpp"

namespace gmbt {

std::string fnv1a64_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

double parse_positive(const std::string& text, int row, const char* column) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    std::ostringstream msg;
    msg << "row " << row << ": " << column << " is not a number: '" << text << "'";
    throw DomainError(msg.str());
  }
  if (!(value > 0.0)) {
    std::ostringstream msg;
    msg << "row " << row << ": " << column << " must be > 0, got " << text;
    throw DomainError(msg.str());
  }
  return value;
}

}  // namespace

InputData read_input_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file: " + path);
  std::ostringstream raw;
  raw << in.rdbuf();
  const std::string bytes = raw.str();

  InputData data;
  data.digest = fnv1a64_digest(bytes);

  std::istringstream stream(bytes);
  std::string line;
  if (!std::getline(stream, line)) {
    throw DomainError("input file is empty: " + path);
  }
  line = strip_cr(line);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);  // UTF-8 BOM
  }
  if (line != "period,observed,forecast") {
    throw DomainError("header must be exactly 'period,observed,forecast', got '" +
                      line + "'");
  }

  int row = 1;
  while (std::getline(stream, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 3) {
      std::ostringstream msg;
      msg << "row " << row << ": expected 3 comma-separated fields, got "
          << fields.size();
      throw DomainError(msg.str());
    }
    InputRecord record;
    record.period = fields[0];
    record.observed = parse_positive(fields[1], row, "observed");
    record.forecast = parse_positive(fields[2], row, "forecast");
    data.records.push_back(record);
  }
  return data;
}

}  // namespace gmbt
