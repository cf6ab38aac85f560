#ifndef EXACT_ERROR_HPP
#define EXACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exact {

enum class ErrorKind {
  zero_denominator,
  not_in_unit_interval,
  parse,
  precondition,
};

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace exact

#endif  // EXACT_ERROR_HPP
