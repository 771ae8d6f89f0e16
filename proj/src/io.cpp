#include "latt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace latt {

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  write_text_file(path, out.str());
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

std::string results_to_json(const std::vector<ExperimentResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"name", r.name},
                   {"n", r.n},
                   {"param_name", r.param_name},
                   {"param_value", r.param_value},
                   {"estimate", r.estimate},
                   {"std_err", r.std_err},
                   {"bound_value", r.bound_value},
                   {"trials", r.trials},
                   {"seed", r.seed}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ExperimentResult> results_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<ExperimentResult> out;
  out.reserve(arr.size());
  for (const auto& j : arr) {
    ExperimentResult r;
    r.name = j.at("name").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.param_name = j.at("param_name").get<std::string>();
    r.param_value = j.at("param_value").get<double>();
    r.estimate = j.at("estimate").get<double>();
    r.std_err = j.at("std_err").get<double>();
    r.bound_value = j.at("bound_value").get<double>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace latt
