#pragma once

#include <stdexcept>
#include <string>

namespace knotfit {

// The least-squares system cannot determine the control points (rank-deficient
// collocation matrix). Optimizers catch this and score the genome as infeasible.
class InfeasibleFitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input data. `line` is 1-based, 0 when no line applies.
class FormatError : public std::runtime_error {
  public:
    FormatError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
    explicit FormatError(const std::string& what) : std::runtime_error(what), line_(0) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace knotfit
