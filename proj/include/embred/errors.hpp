#pragma once

#include <stdexcept>

namespace embred {

// Invalid parameters or a spec violation. CLI exit code 2.
class ArgError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// File access or parse failure. CLI exit code 3.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Degenerate data that leaves a result undefined. CLI exit code 4.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace embred
