#pragma once

#include <iosfwd>
#include <string>

#include "oee/dataset.hpp"

namespace oee {

/// Reads a dataset from a comma-separated UTF-8 file. The header must name
/// the seven standard features; `machine_id`, `date` and `shift_id` columns
/// are dropped on ingest. The `oee` target column is mandatory unless
/// `require_target` is false (prediction inputs), in which case a missing
/// column yields an all-zero target.
Dataset read_csv(const std::string& path, bool require_target = true);
Dataset read_csv(std::istream& in, const std::string& name, bool require_target = true);

/// Writes header plus one line per row. Floats are rendered with six
/// significant digits.
void write_csv(const Dataset& ds, const std::string& path);
void write_csv(const Dataset& ds, std::ostream& out);

}  // namespace oee
