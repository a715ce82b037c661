#pragma once

#include <stdexcept>

namespace rqlost {

// A computed quantity violated an internal invariant (numerics or simulator
// state). This is a bug in the library, not bad input.
class internal_error : public std::logic_error {
  using std::logic_error::logic_error;
};

// No reorder point within the scan limit meets the requested target.
class unreachable_target : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rqlost
