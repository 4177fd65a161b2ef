#include "oee/oee_math.hpp"

#include <algorithm>

namespace oee {

double availability(double planned_min, double unplanned_downtime_min) {
  if (planned_min <= 0.0) {
    throw DomainError("availability: planned time must be > 0");
  }
  if (unplanned_downtime_min < 0.0 || unplanned_downtime_min > planned_min) {
    throw DomainError("availability: downtime must be in [0, planned time]");
  }
  return (planned_min - unplanned_downtime_min) / planned_min;
}

double performance(double actual_qty, double planned_qty) {
  if (planned_qty <= 0.0) {
    throw DomainError("performance: planned quantity must be > 0");
  }
  if (actual_qty < 0.0) {
    throw DomainError("performance: actual quantity must be >= 0");
  }
  return std::min(actual_qty / planned_qty, 1.0);
}

double quality(double actual_qty, double rejected_qty) {
  if (actual_qty <= 0.0) {
    throw DomainError("quality: actual quantity must be > 0");
  }
  if (rejected_qty < 0.0 || rejected_qty > actual_qty) {
    throw DomainError("quality: rejected quantity must be in [0, actual]");
  }
  return (actual_qty - rejected_qty) / actual_qty;
}

double oee(const OeeComponents& c) {
  for (double v : {c.availability, c.performance, c.quality}) {
    if (v < 0.0 || v > 1.0) {
      throw DomainError("oee: components must be in [0, 1]");
    }
  }
  return c.availability * c.performance * c.quality * 100.0;
}

}  // namespace oee
