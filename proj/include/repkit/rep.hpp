#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "repkit/group.hpp"
#include "repkit/linalg.hpp"

namespace repkit {

template <typename S>
using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using CD = std::complex<double>;

// --- small dispatch helpers shared by the exact and float paths -----------

inline CMat adj(const CMat& m) { return adjoint_of(m); }
inline FMat adj(const FMat& m) { return m.adjoint(); }

inline bool mat_is_zero(const CMat& m, double /*tol*/) { return is_zero(m); }
inline bool mat_is_zero(const FMat& m, double tol) {
  return m.size() == 0 || m.cwiseAbs().maxCoeff() <= tol;
}

inline CMat mat_nullspace(const CMat& m, double /*tol*/) { return nullspace(m); }
inline FMat mat_nullspace(const FMat& m, double tol) { return nullspace(m, tol); }

inline CMat mat_mul(const CMat& a, const CMat& b) { return sparse_mul(a, b); }
inline FMat mat_mul(const FMat& a, const FMat& b) { return a * b; }

inline CMat mat_identity_like(const CMat&, int n) { return identity(n); }
inline FMat mat_identity_like(const FMat&, int n) { return FMat::Identity(n, n); }

template <typename S>
MatT<S> eye(int n) {
  if constexpr (std::is_same_v<S, Scalar>) return identity(n);
  else return MatT<S>::Identity(n, n);
}

// --- representations -------------------------------------------------------

template <typename S>
class Rep;

/// Provenance of a rep produced by induce(): the inducing subgroup, the coset
/// transversal used for the block structure, and the base rep.
template <typename S>
struct InducedStructure {
  Subgroup from;
  std::vector<int> transversal;
  std::shared_ptr<const Rep<S>> base;
};

/// Matrix representation of a subgroup H of some parent group.  The
/// homomorphism property and rho(e) = I are validated on construction
/// (exactly in exact mode, to `tol` in float mode).
template <typename S>
class Rep {
public:
  Rep(Subgroup domain, std::vector<MatT<S>> mats, double tol = 1e-9)
      : domain_(std::move(domain)), mats_(std::move(mats)) {
    if (mats_.size() != static_cast<size_t>(domain_.size()))
      fail(errc::not_a_rep, "one matrix per subgroup element required");
    dim_ = static_cast<int>(mats_.empty() ? 0 : mats_[0].rows());
    for (const auto& m : mats_)
      if (m.rows() != dim_ || m.cols() != dim_)
        fail(errc::not_a_rep, "matrices must be square of equal size");
    const auto& g = *domain_.parent();
    if (!mat_is_zero(MatT<S>(at(g.identity()) - eye<S>(dim_)), tol))
      fail(errc::not_a_rep, "identity must map to the identity matrix");
    for (int a : domain_.elements())
      for (int b : domain_.elements())
        if (!mat_is_zero(MatT<S>(mat_mul(at(a), at(b)) - at(g.mul(a, b))), tol))
          fail(errc::not_a_rep, "homomorphism property fails at (" + g.label(a) + "," +
                                    g.label(b) + ")");
  }

  const Subgroup& domain() const { return domain_; }
  const GroupPtr& parent() const { return domain_.parent(); }
  int dim() const { return dim_; }

  /// Matrix of a parent element (must lie in the domain subgroup).
  const MatT<S>& at(int parent_index) const { return mats_[domain_.pos(parent_index)]; }
  const std::vector<MatT<S>>& matrices() const { return mats_; }

  const std::shared_ptr<const InducedStructure<S>>& induced() const { return induced_; }
  void set_induced(std::shared_ptr<const InducedStructure<S>> p) { induced_ = std::move(p); }

private:
  Subgroup domain_;
  int dim_;
  std::vector<MatT<S>> mats_;
  std::shared_ptr<const InducedStructure<S>> induced_;
};

using MatrixRep = Rep<Scalar>;
using FloatRep = Rep<CD>;

/// One-dimensional rep from a value per element (positional in domain order).
template <typename S>
Rep<S> character_rep(Subgroup domain, const std::vector<S>& values) {
  std::vector<MatT<S>> mats;
  for (const auto& v : values) {
    MatT<S> m(1, 1);
    m(0, 0) = v;
    mats.push_back(std::move(m));
  }
  return Rep<S>(std::move(domain), std::move(mats));
}

template <typename S>
Rep<S> trivial_rep(Subgroup domain) {
  std::vector<S> ones(domain.size(), S(1));
  return character_rep<S>(std::move(domain), ones);
}

/// Character of a cyclic subgroup sending a chosen generator to `root`.
MatrixRep cyclic_character(const Subgroup& domain, int generator, const Scalar& root);

template <typename S>
std::vector<S> character(const Rep<S>& rho) {
  std::vector<S> chi;
  for (const auto& m : rho.matrices()) chi.push_back(m.trace());
  return chi;
}

/// rho^x with (rho^x)(g) = rho(x^-1 g x); x is a parent element.
template <typename S>
Rep<S> conjugate_rep(const Rep<S>& rho, int x) {
  const auto& g = *rho.parent();
  std::vector<MatT<S>> mats;
  for (int h : rho.domain().elements()) {
    int hh = g.conj(x, h);
    if (!rho.domain().contains(hh))
      fail(errc::conjugation_leaves_subgroup,
           "conjugate of " + g.label(h) + " by " + g.label(x) + " leaves the subgroup");
    mats.push_back(rho.at(hh));
  }
  return Rep<S>(rho.domain(), std::move(mats));
}

/// Induced representation on the full parent group, in block-permutation form
/// over the left-coset transversal (identity coset first).
template <typename S>
Rep<S> induce(const Rep<S>& rho) {
  const auto& gp = rho.parent();
  const auto& g = *gp;
  CosetTransversal t = cosets(gp, rho.domain());
  const int nb = static_cast<int>(t.reps.size());
  const int d = rho.dim();
  const int dim = nb * d;
  // coset lookup
  std::vector<int> block_of(g.order(), -1);
  for (int b = 0; b < nb; ++b)
    for (int h : rho.domain().elements()) block_of[g.mul(t.reps[b], h)] = b;
  std::vector<MatT<S>> mats;
  for (int x = 0; x < g.order(); ++x) {
    MatT<S> m = MatT<S>::Constant(dim, dim, S(0));
    for (int b = 0; b < nb; ++b) {
      int xb = g.mul(x, t.reps[b]);
      int tb = block_of[xb];
      int h = g.mul(g.inv(t.reps[tb]), xb); // x * t_b = t_tb * h
      m.block(tb * d, b * d, d, d) = rho.at(h);
    }
    mats.push_back(std::move(m));
  }
  Rep<S> out(Subgroup::full(gp), std::move(mats));
  auto prov = std::make_shared<InducedStructure<S>>(
      InducedStructure<S>{rho.domain(), t.reps, std::make_shared<Rep<S>>(rho)});
  out.set_induced(std::move(prov));
  return out;
}

/// Character of induce(rho) computed from the induced-character formula, used
/// as an independent cross-check of the block construction.
template <typename S>
std::vector<S> induced_character_formula(const Rep<S>& rho) {
  const auto& gp = rho.parent();
  const auto& g = *gp;
  CosetTransversal t = cosets(gp, rho.domain());
  std::vector<S> chi(g.order(), S(0));
  for (int x = 0; x < g.order(); ++x)
    for (int r : t.reps) {
      int c = g.conj(r, x);
      if (rho.domain().contains(c)) chi[x] += rho.at(c).trace();
    }
  return chi;
}

/// Basis of Hom_H(rho1, rho2) = {T : rho2(g) T = T rho1(g) for all g}.
template <typename S>
std::vector<MatT<S>> intertwiners(const Rep<S>& rho1, const Rep<S>& rho2,
                                  double tol = 1e-9) {
  if (rho1.domain().elements() != rho2.domain().elements() ||
      rho1.parent().get() != rho2.parent().get())
    fail(errc::not_a_rep, "intertwiners need reps of the same subgroup");
  const int d1 = rho1.dim(), d2 = rho2.dim();
  const int nh = rho1.domain().size();
  MatT<S> system(nh * d1 * d2, d1 * d2);
  MatT<S> i1 = eye<S>(d1), i2 = eye<S>(d2);
  int row = 0;
  for (int h : rho1.domain().elements()) {
    MatT<S> lhs = kron<S>(i1, rho2.at(h));
    MatT<S> rhs = kron<S>(MatT<S>(rho1.at(h).transpose()), i2);
    system.block(row, 0, d1 * d2, d1 * d2) = lhs - rhs;
    row += d1 * d2;
  }
  MatT<S> ns = mat_nullspace(system, tol);
  std::vector<MatT<S>> basis;
  for (int j = 0; j < ns.cols(); ++j) {
    MatT<S> tmat(d2, d1); // vec is column-major
    for (int c = 0; c < d1; ++c)
      for (int r = 0; r < d2; ++r) tmat(r, c) = ns(c * d2 + r, j);
    basis.push_back(std::move(tmat));
  }
  return basis;
}

template <typename S>
bool is_irreducible(const Rep<S>& rho, double tol = 1e-9) {
  return intertwiners(rho, rho, tol).size() == 1;
}

/// Restriction of rho to an invariant subspace given by basis columns B:
/// sigma(g) = B^+ rho(g) B, solved exactly in exact mode.
MatrixRep restrict_to_subspace(const MatrixRep& rho, const CMat& basis);
FloatRep restrict_to_subspace(const FloatRep& rho, const FMat& basis, double tol);

// --- decomposition ----------------------------------------------------------

template <typename S>
struct Component {
  MatT<S> basis; // D x dim, canonical column form
  int cls = -1;  // equivalence class id
};

template <typename S>
struct DecompositionReport {
  int dim = 0;
  uint64_t seed = 0;
  std::vector<Component<S>> components;
  std::vector<std::vector<int>> classes; // indices of equivalent components
  /// lambda coefficient family per component (|transversal| x m), present when
  /// the rep carries induction provenance; computed against `s_family` when
  /// given, otherwise against the identity twist.
  std::vector<std::optional<MatT<S>>> lambdas;
};

struct DecomposeOptions {
  uint64_t seed = 12345;
  int max_candidates = 64;
  double tol = 1e-9; // float mode only
};

DecompositionReport<Scalar> decompose(const MatrixRep& rho, const DecomposeOptions& opts = {},
                                      const std::vector<CMat>* s_family = nullptr);
DecompositionReport<CD> decompose(const FloatRep& rho, const DecomposeOptions& opts = {});

/// Both sides of the Frobenius count for ind_{G0}^{G} rho with G0 normal:
/// lhs = dim End_G(ind rho), rhs = sum_x dim Hom_{G0}(rho, rho^x).
std::pair<int, int> frobenius_check(const MatrixRep& rho);

/// Projectors of the cyclic splitting of ind_{G0}^{G_x} rho for x with
/// x^n = h in G0 and a normalized intertwiner S_x (pi(h) S_x^n = I).
std::vector<CMat> cyclic_decompose(const MatrixRep& rho, int x, const CMat& s_x, int n);

struct G2CheckResult {
  bool ok = false;
  std::vector<int> g2_elements;
  int component_count = 0;
  std::vector<bool> induced_irreducible;
};

/// Discovers G2 = {x : rho^x ~ rho}, decomposes ind_{G0}^{G2} rho and verifies
/// that inducing each component up to the parent group stays irreducible.
G2CheckResult g2_irreducibility_check(const MatrixRep& rho, uint64_t seed = 12345);

/// Multiplicity <chi_rho, chi_sigma>/|G| of an irreducible sigma inside rho,
/// by the exact character inner product.
Scalar character_inner_product(const MatrixRep& rho, const MatrixRep& sigma);

/// Reinterprets rho on a different (order-isomorphic) subgroup, e.g. between a
/// subgroup of a parent and the same subgroup seen inside Subgroup::as_group().
template <typename S>
Rep<S> rebase(const Rep<S>& rho, Subgroup target) {
  if (target.size() != rho.domain().size())
    fail(errc::not_a_rep, "rebase requires equal subgroup sizes");
  return Rep<S>(std::move(target), rho.matrices());
}

} // namespace repkit
