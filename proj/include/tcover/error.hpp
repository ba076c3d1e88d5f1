#pragma once

#include <stdexcept>

namespace tcover {

/// Malformed or invalid external input (files, specs, flags).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A documented size limit was exceeded (oracle cap, matching cap).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace tcover
