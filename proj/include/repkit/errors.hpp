#pragma once

#include <stdexcept>
#include <string>

namespace repkit {

enum class errc {
  // numeric
  non_diagonalizable,
  conductor_overflow,
  inexact_root,
  // groups
  not_a_group,
  bad_identity,
  not_a_subgroup,
  not_a_cocycle,
  // reps
  not_a_rep,
  conjugation_leaves_subgroup,
  decomposition_failed,
  beta_not_trivial,
  not_central,
  // cocycle
  not_an_intertwiner,
  not_scalar,
  not_proportional,
  consistency_failure,
  // gk_sl2
  bad_window,
  bad_parity,
  reducible_base,
  // so44
  not_algebra_stable,
  inconsistent_images,
  not_summand_permuting,
  // cli
  input_error,
  verification_failure,
};

const char* errc_name(errc c);

/// All library errors carry a code so callers can branch without string matching.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace repkit
