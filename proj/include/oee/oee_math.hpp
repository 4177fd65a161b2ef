#pragma once

#include "oee/common.hpp"

namespace oee {

/// The three OEE factors, each a ratio in [0, 1].
struct OeeComponents {
  double availability = 0.0;
  double performance = 0.0;
  double quality = 0.0;
};

/// (planned - downtime) / planned. Requires planned_min > 0 and
/// 0 <= unplanned_downtime_min <= planned_min.
double availability(double planned_min, double unplanned_downtime_min);

/// actual / planned, clamped to [0, 1]. Over-production counts as full
/// performance so OEE stays below 100. Requires planned_qty > 0.
double performance(double actual_qty, double planned_qty);

/// (actual - rejected) / actual. Requires actual_qty > 0 and
/// 0 <= rejected_qty <= actual_qty.
double quality(double actual_qty, double rejected_qty);

/// A * P * Q in percent, range [0, 100]. Each component must be in [0, 1].
double oee(const OeeComponents& c);

}  // namespace oee
