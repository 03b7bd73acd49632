#pragma once

#include <stdexcept>
#include <string>

namespace minwire {

/// Input data violates a contract: out-of-range entries, dimension
/// mismatches, contradictory rows, overlapping point sets.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact enumeration was refused because the search space exceeds the
/// configured guard. The message names the offending bound.
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minwire
