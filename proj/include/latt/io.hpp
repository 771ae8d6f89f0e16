#pragma once

#include <string>
#include <vector>

#include "latt/experiments.hpp"

namespace latt {

// Floating value rendered at 12 significant digits ('.' decimal separator).
std::string format_sig12(double v);

// Writes header + rows, comma-separated, file terminated by a newline.
// Throws std::runtime_error when the path is not writable.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

// JSON serialization of result rows; field names mirror ExperimentResult.
// Doubles round-trip exactly (shortest-representation printing), and the
// wall-time field is intentionally absent so identical runs produce identical
// bytes.
std::string results_to_json(const std::vector<ExperimentResult>& results);
std::vector<ExperimentResult> results_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace latt
