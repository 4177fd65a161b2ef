#include "oee/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace oee {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no,
                  const std::string& column, const std::string& file) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (cell.empty() || end != begin + cell.size()) {
    std::ostringstream msg;
    msg << file << ":" << line_no << ": column '" << column
        << "': non-numeric cell '" << cell << "'";
    throw DataError(msg.str());
  }
  return value;
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Identifier columns carried by raw exports; ignored on ingest.
bool is_dropped_column(const std::string& name) {
  return name == "machine_id" || name == "date" || name == "shift_id";
}

}  // namespace

Dataset read_csv(std::istream& in, const std::string& name, bool require_target) {
  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw DataError(name + ": empty file, expected a header row");
  }
  const auto header = split_line(header_line);

  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!position.emplace(header[i], i).second) {
      throw DataError(name + ": duplicate column '" + header[i] + "'");
    }
  }

  const auto& features = standard_feature_names();
  std::vector<std::size_t> feature_pos;
  for (const auto& col : features) {
    const auto it = position.find(col);
    if (it == position.end()) {
      throw DataError(name + ": missing required column '" + col + "'");
    }
    feature_pos.push_back(it->second);
  }
  std::size_t target_pos = header.size();
  if (const auto it = position.find(kTargetColumn); it != position.end()) {
    target_pos = it->second;
  } else if (require_target) {
    throw DataError(name + ": missing required column '" +
                    std::string(kTargetColumn) + "'");
  }
  for (const auto& col : header) {
    const bool known = position.at(col) == target_pos ||
                       std::find(features.begin(), features.end(), col) != features.end() ||
                       is_dropped_column(col);
    if (!known) throw DataError(name + ": unknown column '" + col + "'");
  }

  Dataset ds;
  ds.feature_names = features;
  ds.provenance = "file:" + name;

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << name << ":" << line_no << ": row has " << cells.size()
          << " cells, header has " << header.size();
      throw DataError(msg.str());
    }
    Vector row(features.size());
    for (std::size_t f = 0; f < features.size(); ++f) {
      row[f] = parse_cell(cells[feature_pos[f]], line_no, features[f], name);
    }
    ds.rows.push_back(std::move(row));
    if (target_pos < header.size()) {
      ds.target.push_back(
          parse_cell(cells[target_pos], line_no, kTargetColumn, name));
    } else {
      ds.target.push_back(0.0);
    }
  }
  ds.validate();
  return ds;
}

Dataset read_csv(const std::string& path, bool require_target) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return read_csv(in, path, require_target);
}

void write_csv(const Dataset& ds, std::ostream& out) {
  ds.validate();
  for (std::size_t i = 0; i < ds.feature_names.size(); ++i) {
    out << ds.feature_names[i] << ',';
  }
  out << kTargetColumn << '\n';
  for (std::size_t r = 0; r < ds.n_rows(); ++r) {
    for (double v : ds.rows[r]) out << format_value(v) << ',';
    out << format_value(ds.target[r]) << '\n';
  }
}

void write_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  write_csv(ds, out);
  out.flush();
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace oee
