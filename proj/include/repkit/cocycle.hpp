#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "repkit/rep.hpp"

namespace repkit {

/// A family of intertwiners S_x for pi^x ~ pi, one per coset representative
/// of G0 in the ambient subgroup.  n(x) is the order of x modulo G0 and
/// h(x) = x^{n(x)} lies in G0.
struct IntertwinerFamily {
  MatrixRep base;               // pi on G0
  Subgroup ambient;             // G2 (or Z1): G0 must be normal in it
  std::vector<int> transversal; // parent indices, identity first
  std::vector<CMat> s;
  std::vector<int> n_of;
  std::vector<int> h_of;
};

/// beta exponents over the quotient Q = G2/G0: beta(x,y) = xi_n^{exp[x][y]}
/// with n = |Q|.  B is the subgroup of <xi_n> generated by all values; its
/// order m divides n.
struct CocycleTable {
  GroupPtr quotient;
  int n = 0;
  int m = 1;
  std::vector<std::vector<long>> exp;

  Scalar beta(int x, int y) const { return Scalar::root_of_unity(n, exp[x][y]); }
};

struct CocycleReport {
  std::vector<std::array<int, 3>> cocycle_violations;
  std::vector<int> row_violations, col_violations;
  std::vector<std::array<int, 2>> power_violations;
  bool ok() const {
    return cocycle_violations.empty() && row_violations.empty() && col_violations.empty() &&
           power_violations.empty();
  }
};

/// Rescale a raw intertwiner so that pi(h) S^n = I, using the principal root
/// of the Schur scalar.  pi must be irreducible for the scalar to exist.
CMat normalize_intertwiner(const MatrixRep& pi, int x, const CMat& s_raw, int n, int h);

/// Solve for the full normalized family of pi over the cosets of the ambient
/// subgroup.  Every class of the ambient must fix pi up to equivalence.
IntertwinerFamily build_family(const MatrixRep& pi, const Subgroup& ambient);

/// S matrices for every element of the ambient subgroup, extended from the
/// family through S_{xh} = pi(h^-1) S_x, cross-checked against
/// S_{gx} = S_x pi(g^-1) whenever xh = gx, and re-verified against the
/// normalization condition.
struct ExtendedFamily {
  std::vector<CMat> s; // indexed by position in ambient.elements()
};
ExtendedFamily extend_family(const IntertwinerFamily& family);

/// Extract beta(x,y) from S_y S_x = beta(x,y) S_{xy}, resolving the product
/// through the chosen transversal: x y = z n0 with n0 in G0 contributes
/// S_{z n0} = pi(n0^-1) S_z.
CocycleTable beta_table(const IntertwinerFamily& family);

/// Checks the cocycle identity on all |Q|^3 triples, all row and column
/// products, and that every entry is an n-th root of unity.
CocycleReport verify_cocycle(const CocycleTable& table);

struct GogiResult {
  DecompositionReport<Scalar> report;
  MatrixRep induced;
};

/// Decomposition template of ind_{Z0}^{Z1} zeta for a central Z0; the lambda
/// families transfer verbatim to any induced rep with the same (Z1, Z0, zeta).
GogiResult gogi_pipeline(const MatrixRep& zeta, const DecomposeOptions& opts = {});

struct GogiiResult {
  GroupPtr f2;
  Subgroup f0;
  MatrixRep eta;
  MatrixRep induced;
  DecompositionReport<Scalar> report;
  IntertwinerFamily eta_family; // trivial S twists; reproduces the input table
};

/// Builds the extension group F2 from the table, induces the canonical
/// character eta_m of F0 = {e} x B and decomposes it.
GogiiResult gogii_pipeline(const CocycleTable& table, const DecomposeOptions& opts = {});

/// Transfer of a lambda family onto an induced model with blocks of size d:
/// columns are sum_t t (x) S_t (lambda_t^l e_i), giving a (nb*d) x (m*d) basis.
CMat transfer_component(const CMat& lambda, const std::vector<CMat>& s_big);

} // namespace repkit
