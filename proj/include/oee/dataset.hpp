#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oee/common.hpp"

namespace oee {

/// Default planned production time of one shift, minutes. The plant runs
/// 8-hour shifts unless configured otherwise.
inline constexpr double kDefaultShiftMinutes = 480.0;

/// Fixed CSV schema: seven input features plus the OEE target column.
const std::vector<std::string>& standard_feature_names();
inline constexpr const char* kTargetColumn = "oee";

/// One machine-shift observation from the cutting department.
struct ShiftRecord {
  std::string machine_id;
  std::string date;  // ISO-8601 day
  int shift_id = 0;
  double setups_min = 0.0;
  double breakdown_min = 0.0;  // planned maintenance
  long num_orders = 0;
  double mean_wire_length_mm = 0.0;
  long num_terminals = 0;
  long num_seals = 0;
  double target_rate = 0.0;  // planned output quantity
  double oee_percent = 0.0;

  /// Throws DomainError when a field is outside its allowed range.
  void validate(double shift_min = kDefaultShiftMinutes) const;

  /// The seven features in schema order.
  Vector feature_row() const;
};

/// Column-named tabular data: feature rows plus the OEE target vector.
struct Dataset {
  std::vector<std::string> feature_names;
  Matrix rows;
  Vector target;
  std::string provenance;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_features() const { return feature_names.size(); }

  /// Throws DomainError when row widths or target length are inconsistent.
  void validate() const;
};

}  // namespace oee
