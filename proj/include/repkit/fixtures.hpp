#pragma once

#include <string>
#include <vector>

#include "repkit/json_io.hpp"

namespace repkit {

/// A named character model (group, inducing subgroup, character), the common
/// input shape of the induction machinery.
struct RepModel {
  std::string name;
  MatrixRep rep;
};

struct TensorParams {
  Scalar lambda1, lambda2;
  int parity1 = 1, parity2 = 1;
  int window = 8;
};

std::vector<std::string> fixture_names();
Json fixture_json(const std::string& name);

/// The character fixtures: q8-trivial, q8-nontrivial, intro-diagram,
/// z4-over-z2, and every member of the two suites by name.
MatrixRep fixture_rep(const std::string& name);

/// Models for the Frobenius count (>= 10, mixed cyclotomic orders).
std::vector<RepModel> frobenius_suite();

/// Models for the irreducibility-of-ind-from-G2 check.
std::vector<RepModel> g2_suite();

TensorParams tensor_fixture();

} // namespace repkit
