#pragma once

#include <string>

#include "dlout/outliers.hpp"

namespace dlout {

// One line per witness: "outlier {l1,l2} witness {s1} strong=true". A report
// without witnesses prints "outlier {l1} none".
std::string to_text(const OutlierReport& report);
// One JSON object per line with the fields outlier, witnesses, strong,
// witness_strong, in that order.
std::string to_record(const OutlierReport& report);

std::string to_text(const EnumerationResult& result);
std::string to_records(const EnumerationResult& result);

}  // namespace dlout
