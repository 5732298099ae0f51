#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "repkit/linalg.hpp"

namespace repkit {

/// so(4,4) in the block form [[A,B],[B^T,C]] with A, C skew-symmetric 4x4
/// blocks.  Basis order: 6 A-block elementary skews, 6 C-block, 16 B-block
/// elementary symmetric pairs (row-major), dimension 28.  All matrices are
/// integral and every computation here is exact.
class LieAlgebraBasis {
public:
  LieAlgebraBasis();

  int dim() const { return 28; }
  const std::vector<CMat>& basis() const { return basis_; }

  /// Coordinates of an algebra element in the basis; throws not_algebra_stable
  /// if the matrix does not lie in so(4,4).
  CVec expand(const CMat& m) const;
  CMat from_coords(const CVec& coords) const;

  static CMat bracket(const CMat& a, const CMat& b) {
    return sparse_mul(a, b) - sparse_mul(b, a);
  }

  /// Sparse structure constants of [b_i, b_j].
  const std::vector<std::pair<int, Scalar>>& structure(int i, int j) const {
    return structure_[i * 28 + j];
  }

  /// X^T I44 + I44 X = 0 for the defining form diag(1,1,1,1,-1,-1,-1,-1).
  static bool satisfies_defining_relation(const CMat& m);

  /// Exhaustive Jacobi check through the structure-constant table.
  bool jacobi_holds() const;

private:
  std::vector<CMat> basis_;
  std::vector<std::vector<std::pair<int, Scalar>>> structure_;
};

/// A linear map of the algebra in basis coordinates.
struct AlgebraMap {
  std::string name;
  CMat matrix; // 28 x 28
};

/// The four so(3) summands of k0; generators()[i] = {X_{i+1}, Y_{i+1}, Z_{i+1}}.
struct K0Generators {
  std::array<std::array<CMat, 3>, 4> triples;
};

LieAlgebraBasis build_so44();
K0Generators k0_generators();

/// Conjugation X -> g X g^-1 expanded in the basis.
AlgebraMap conj_map(const LieAlgebraBasis& alg, const CMat& g, const std::string& name);

/// The cyclic automorphism sending so(3)_i to so(3)_{i+1}, assembled from the
/// generator rule on k0 and the explicit B-block image table.
AlgebraMap phi_1234(const LieAlgebraBasis& alg);

/// The named maps of the outer-automorphism construction.
AlgebraMap map_x12(const LieAlgebraBasis& alg);
AlgebraMap map_x34(const LieAlgebraBasis& alg);
AlgebraMap map_swap(const LieAlgebraBasis& alg);
AlgebraMap map_cartan(const LieAlgebraBasis& alg);

struct AutomorphismReport {
  std::vector<std::pair<int, int>> violations; // basis pairs with phi([a,b]) != [phi a, phi b]
  bool ok() const { return violations.empty(); }
};

AutomorphismReport verify_automorphism(const LieAlgebraBasis& alg, const AlgebraMap& map);

/// Permutation of {0,1,2,3} induced on the so(3) summands, if the map
/// permutes them; throws not_summand_permuting otherwise.
std::array<int, 4> induced_permutation(const LieAlgebraBasis& alg, const AlgebraMap& map);

/// Order of the permutation group generated by the given permutations.
int s4_generation_check(const std::vector<std::array<int, 4>>& perms);

/// Order of the map as a linear map (0 if it exceeds the search bound).
int map_order(const AlgebraMap& map, int bound = 96);

} // namespace repkit
