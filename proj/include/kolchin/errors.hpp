#pragma once

#include <stdexcept>
#include <string>

namespace kolchin {

/// A mathematical failure: unit ideal, failed certification or verification.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kolchin
