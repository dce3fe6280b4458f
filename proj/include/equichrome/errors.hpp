#pragma once

#include <stdexcept>
#include <string>

namespace equichrome {

enum class Errc {
  empty_lengths,
  not_simple,
  bad_parameter,
  too_large,
  map_verification_failed,
  partial_coloring,
  color_out_of_range,
  precondition_failed,
  no_color_available,
  search_limit_exceeded,
  unsupported_k,
  unsupported_shape,
  internal_lemma_violation,
  too_many_assignments,
  budget_exceeded,
  malformed_input,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace equichrome
