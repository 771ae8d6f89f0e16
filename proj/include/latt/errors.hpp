#pragma once

#include <stdexcept>
#include <string>

namespace latt {

// QR diagonal fell below the rank tolerance.
struct RankDeficientError : std::runtime_error {
  explicit RankDeficientError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured cap.
struct EnumerationCapError : std::runtime_error {
  explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

// Single-symbol codebook where a positive maximum distance is required.
struct DegenerateCodebookError : std::invalid_argument {
  explicit DegenerateCodebookError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace latt
