#ifndef QLNLS_ERRORS_HPP
#define QLNLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qlnls {

// Bad parameters, mismatched sizes, malformed configs. CLI exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// The quasilinear coefficients blow up as |phi| -> 1; raised when a field
// violates the guard max|phi|^{2 alpha} <= 1 - delta_guard. CLI exit code 2.
class SingularityError : public std::runtime_error {
  public:
    SingularityError(const std::string& what, double max_abs_phi, int stage = 0)
        : std::runtime_error(what), max_abs_phi(max_abs_phi), stage(stage) {}
    double max_abs_phi; // offending max |phi|
    int stage;          // RK stage (1..4) at which the guard failed, 0 otherwise
};

// Filesystem/stream failures. CLI exit code 3.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlnls

#endif
