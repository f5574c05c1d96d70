#pragma once

#include <stdexcept>
#include <string>

namespace coldrec {

// Malformed files, misaligned inputs, bad parameters. CLI exit code 2.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Singular systems, failed convergence, failed calibration. CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coldrec
