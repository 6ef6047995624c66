#pragma once

#include <stdexcept>
#include <string>

namespace rctour {

// Mirrors the status codes of the C API (rctour.h).
enum class Status {
  ok = 0,
  invalid_argument = 1,
  domain = 2,
  parse = 3,
  limit = 4,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void throw_invalid(const std::string& m) {
  throw Error(Status::invalid_argument, m);
}
[[noreturn]] inline void throw_domain(const std::string& m) {
  throw Error(Status::domain, m);
}
[[noreturn]] inline void throw_parse(const std::string& m) {
  throw Error(Status::parse, m);
}
[[noreturn]] inline void throw_limit(const std::string& m) {
  throw Error(Status::limit, m);
}

}  // namespace rctour
