#include "oee/dataset.hpp"

#include <sstream>

namespace oee {

const std::vector<std::string>& standard_feature_names() {
  static const std::vector<std::string> names = {
      "setups",        "breakdown",     "num_orders", "mean_wire_length",
      "num_terminals", "num_seals",     "target"};
  return names;
}

void ShiftRecord::validate(double shift_min) const {
  if (setups_min < 0.0) throw DomainError("ShiftRecord: setups_min < 0");
  if (breakdown_min < 0.0) throw DomainError("ShiftRecord: breakdown_min < 0");
  if (setups_min + breakdown_min > shift_min) {
    std::ostringstream msg;
    msg << "ShiftRecord: setups + breakdown (" << setups_min + breakdown_min
        << " min) exceed shift length (" << shift_min << " min)";
    throw DomainError(msg.str());
  }
  if (num_orders < 0) throw DomainError("ShiftRecord: num_orders < 0");
  if (num_terminals < 0) throw DomainError("ShiftRecord: num_terminals < 0");
  if (num_seals < 0) throw DomainError("ShiftRecord: num_seals < 0");
  if (mean_wire_length_mm <= 0.0) {
    throw DomainError("ShiftRecord: mean_wire_length_mm must be > 0");
  }
  if (target_rate <= 0.0) throw DomainError("ShiftRecord: target_rate must be > 0");
  if (oee_percent < 0.0 || oee_percent > 100.0) {
    throw DomainError("ShiftRecord: oee_percent outside [0, 100]");
  }
}

Vector ShiftRecord::feature_row() const {
  return {setups_min,
          breakdown_min,
          static_cast<double>(num_orders),
          mean_wire_length_mm,
          static_cast<double>(num_terminals),
          static_cast<double>(num_seals),
          target_rate};
}

void Dataset::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != feature_names.size()) {
      std::ostringstream msg;
      msg << "Dataset: row " << i << " has " << rows[i].size()
          << " values, expected " << feature_names.size();
      throw DomainError(msg.str());
    }
  }
  if (target.size() != rows.size()) {
    std::ostringstream msg;
    msg << "Dataset: target length " << target.size() << " != row count "
        << rows.size();
    throw DomainError(msg.str());
  }
}

}  // namespace oee
