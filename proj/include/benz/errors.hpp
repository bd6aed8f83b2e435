// Typed error codes shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace benz {

enum class Errc {
  not_a_prime_power,
  division_by_zero,
  field_mismatch,
  identical_points,
  not_an_oval,
  unsupported_order,
  construction_invalid,
  wrong_parity,
  not_isomorphic,
  unexpected_intersection_size,
  non_integer_eigenvalue,
  not_a_scheme,
  bad_arguments,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code(code) {}
  Errc code;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace benz
