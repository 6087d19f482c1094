#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

enum class errc {
  empty_bases,
  unequal_cardinality,
  exchange_axiom_violated,
  invalid_rank,
  out_of_ground,
  not_a_flat,
  not_nested,
  index_out_of_range,
  k_out_of_range,
  dimension_mismatch,
  domain_mismatch,
  size_limit,
  input_error,
};

// Single exception type for all domain errors; the code tells callers (and
// the CLI exit-code mapping) what went wrong, the message carries the witness.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace bergman
