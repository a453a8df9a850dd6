#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmbt {

/// One input row: an opaque period label plus strictly positive observed and
/// forecast values in the same units.
struct InputRecord {
  std::string period;
  double observed = 0.0;
  double forecast = 0.0;
};

struct InputData {
  std::vector<InputRecord> records;
  std::string digest;  // fnv1a64 over the raw file bytes
};

/// FNV-1a 64-bit digest, rendered as "fnv1a64:<16 hex digits>".
std::string fnv1a64_digest(const std::string& bytes);

/// Parses the documented input format: UTF-8, comma-separated, required
/// header "period,observed,forecast", decimal-point numbers only. Throws
/// DomainError with a row-numbered diagnostic on any malformed content.
InputData read_input_csv(const std::string& path);

}  // namespace gmbt
