#pragma once

#include <stdexcept>
#include <string>

namespace distal {

enum class Errc {
  not_coprime,
  not_square,
  not_unimodular,
  trivial_kernel,
  not_primitive,
  not_unipotent,
  already_triangular,
  dimension_mismatch,
  wrong_dimension,
  not_upper_unipotent,
  insufficient_precision,
  engine_unavailable,
  invalid_argument,
};

const char* errc_name(Errc code) noexcept;

// Library failures carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace distal
