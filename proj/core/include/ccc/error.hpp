#pragma once

#include <stdexcept>
#include <string>

namespace ccc {

// Failure categories. The codes in the second block mark conditions that a
// proved theorem rules out: raising one of them means a bug in this library,
// not bad input.
enum class Errc {
  cap_exceeded,
  kind_mismatch,
  not_normal,
  quotient_not_cyclic,
  not_coprime,
  not_prime_index,
  size_mismatch,
  too_large,
  not_prime,
  even_field,
  parse_error,
  invalid_argument,
  singular_matrix,

  count_mismatch,
  non_central_universal_class,
  matching_incomplete,
  partition_defect,
  crosscheck_failure,
  scheme_defect,
  equivalence_failure,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ccc
