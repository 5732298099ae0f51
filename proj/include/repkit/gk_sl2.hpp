#pragma once

#include <string>
#include <vector>

#include "repkit/cocycle.hpp"

namespace repkit {

/// Truncated weight-basis sl(2) module: basis v_j for |j| <= J, j = parity
/// (mod 2), with H v_j = j v_j, X v_j = (lambda+j+1)/2 v_{j+2},
/// Y v_j = (lambda-j+1)/2 v_{j-2}.  Shifts leaving the window are dropped, so
/// identities are only asserted on interior indices |j| <= J-2.
template <typename S>
struct WindowT {
  S lambda;
  int parity = 0; // 0 even, 1 odd
  int J = 0;
  MatT<S> h, x, y;
  bool irreducible = false;

  int count() const { return J + 1; }
  int idx(int j) const { return (j + J) / 2; }
  int weight(int index) const { return 2 * index - J; }
  bool in_window(int j) const { return std::abs(j) <= J && ((j % 2) + 2) % 2 == parity; }
  bool interior(int j) const { return std::abs(j) <= J - 2; }
};

using GKWindow = WindowT<Scalar>;
using FloatGKWindow = WindowT<CD>;

template <typename S>
WindowT<S> make_window(const S& lambda, int parity, int J);

struct RelationReport {
  bool hx_ok = true, hy_ok = true, xy_ok = true;
  std::vector<int> failures; // interior weights with a violated relation
  bool ok() const { return hx_ok && hy_ok && xy_ok; }
};

/// [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H on all interior indices.
template <typename S>
RelationReport check_sl2_relations(const WindowT<S>& w, double tol = 0.0);

/// The flip v_j -> v_{-j}.
template <typename S>
MatT<S> s_x_operator(const WindowT<S>& w);

/// Verifies that the flip intertwines the Ad(x)-twisted action on the
/// interior: (-H) S = S H, Y S = S X, X S = S Y.
template <typename S>
RelationReport check_s_x_intertwining(const WindowT<S>& w, double tol = 0.0);

/// K-type pair of the induced window at weight j (j > 0, or the two single
/// vectors at j = 0).
struct KTypePair {
  int weight = 0;
  CMat z0, z1; // column spans
};

/// The two-component induced module V + xV of a single window: block ops,
/// the splitting projectors and the K-type lists.
struct InducedWindow {
  GKWindow base;
  CMat h, x, y;      // Lie action: diag(H,-H), diag(X,Y), diag(Y,X)
  CMat component;    // action of the disconnected component: block swap
  CMat p0, p1;       // projectors onto U0 and U1
  std::vector<KTypePair> ktypes;
  std::vector<int> interior_columns;
};

InducedWindow induce_disconnected(const GKWindow& w);

/// The SL(2) x SL(2) tensor model: windows w1, w2 with a common parity class,
/// the quaternion-labelled component group, and the intertwiner family
/// S_x = F (x) I, S_y = I (x) F, S_z = F (x) F over the transversal
/// {1, x, y, xy}.  The family is deliberately left unnormalized, matching the
/// flip convention; its beta table is the model's invariant.
struct TensorModel {
  GKWindow w1, w2;
  GroupPtr cover;          // quaternion-labelled component group
  IntertwinerFamily family;
  std::vector<CMat> lie_ops; // H1,X1,Y1,H2,X2,Y2 on the tensor space
  std::vector<std::string> lie_names;
  int dim = 0; // (J+1)^2
};

TensorModel tensor_model(const Scalar& lambda1, const Scalar& lambda2, int parity1,
                         int parity2, int J);

/// Right translation by transversal element u, twisted through the family:
/// t (x) v  ->  z (x) pi(n0) S_u v where t u = z n0.  Commutes with the whole
/// induced action; these operators span the commutant.
CMat twisted_right_translation(const IntertwinerFamily& family, int u_index);

/// Left translation by an arbitrary ambient element a on the induced model:
/// t (x) v -> z (x) pi(n0) v where a t = z n0.
CMat induced_translation(const IntertwinerFamily& family, int a);

/// The induced tensor window with its block operators.
struct InducedTensorWindow {
  TensorModel model;
  std::vector<CMat> lie_ops; // twisted block diagonals, same names as model
  std::vector<std::string> lie_names;
  std::vector<CMat> translations; // induced action of x, y, xy
  std::vector<std::string> translation_names;
  std::vector<int> interior_columns; // both tensor factors interior
  int dim = 0;                       // 4 (J+1)^2
};

InducedTensorWindow induce_tensor(const TensorModel& model);

/// a * column(b, c) skipping zero entries of the column.
CVec sparse_apply(const CMat& a, const CVec& v);

/// Checks a b = b a on the given columns only, using sparse application.
bool commute_on_columns(const CMat& a, const CMat& b, const std::vector<int>& cols);

} // namespace repkit
