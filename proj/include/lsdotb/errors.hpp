#pragma once

#include <stdexcept>
#include <string>

namespace lsdotb {

// A table carries too little repeat-usage signal to identify the model
// parameters (all one-timers, below the minimum user count, no r>=2 mass).
// Recoverable: batch drivers turn this into a per-item "no q" flag.
class NotEstimableError : public std::runtime_error {
public:
    explicit NotEstimableError(const std::string& what) : std::runtime_error(what) {}
};

// Too few cells survive expected-count merging to run a chi-square test.
// Recoverable: batch drivers turn this into a per-item "no test" flag.
class NotTestableError : public std::runtime_error {
public:
    explicit NotTestableError(const std::string& what) : std::runtime_error(what) {}
};

// A probability term left the representable range (underflow to zero, loss
// of the zero-class complement, ...). Never silently mapped to -inf.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lsdotb
