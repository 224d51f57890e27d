#pragma once

#include <stdexcept>
#include <string>

namespace gprod {

/// Base for every error raised by the library. The CLI maps these to exit 1.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_parameters : public error {
 public:
  using error::error;
};

class unachievable_density : public error {
 public:
  using error::error;
};

class vertex_out_of_range : public error {
 public:
  using error::error;
};

class size_overflow : public error {
 public:
  using error::error;
};

/// Search-node budget exhausted. Partial results are never returned.
class budget_exceeded : public error {
 public:
  using error::error;
};

class domain_error : public error {
 public:
  using error::error;
};

class degenerate_degree : public error {
 public:
  using error::error;
};

class instance_too_large : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace gprod
