#pragma once

#include <stdexcept>
#include <string>

namespace genform {

enum class ErrorCode {
  chart_mismatch,
  degree_mismatch,
  index_out_of_range,
  length_mismatch,
  invalid_argument,
  unknown_identity,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the library; the code tells callers what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genform
