#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srlab/serialize.hpp"

namespace srlab {

// Randomized checks of the duality, transfer and distance statements.
struct PropertyReport {
  std::string name;
  std::size_t trials = 0, failures = 0;
  Json first_failure;  // null when every trial passed
};

std::vector<std::string> property_names();
// Throws ParseError for an unknown name.
PropertyReport run_property(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace srlab
