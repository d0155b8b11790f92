#pragma once

#include <cstdint>
#include <vector>

#include "kvp/report.hpp"

namespace kvp {

/// The reproduction battery: one result per acceptance criterion (ids
/// "1".."8"), computed with the library alone. Deterministic for a seed.
std::vector<SuiteResult> run_reproduction_suite(std::uint64_t seed);

} // namespace kvp
