#include "repkit/rep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace repkit {

MatrixRep cyclic_character(const Subgroup& domain, int generator, const Scalar& root) {
  const auto& g = *domain.parent();
  const int n = domain.size();
  std::vector<Scalar> values(n);
  std::vector<bool> seen(n, false);
  int cur = g.identity();
  Scalar val(1);
  for (int k = 0; k < n; ++k) {
    values[domain.pos(cur)] = val;
    seen[domain.pos(cur)] = true;
    cur = g.mul(cur, generator);
    val *= root;
  }
  for (bool s : seen)
    if (!s) fail(errc::not_a_rep, "generator does not generate the subgroup");
  return character_rep<Scalar>(domain, values);
}

MatrixRep restrict_to_subspace(const MatrixRep& rho, const CMat& basis) {
  ExactSolver solver(basis);
  std::vector<CMat> mats;
  for (const auto& m : rho.matrices()) mats.push_back(solver.solve(m * basis));
  return MatrixRep(rho.domain(), std::move(mats));
}

FloatRep restrict_to_subspace(const FloatRep& rho, const FMat& basis, double tol) {
  Eigen::ColPivHouseholderQR<FMat> qr(basis);
  std::vector<FMat> mats;
  for (const auto& m : rho.matrices()) {
    FMat rhs = m * basis;
    FMat x = qr.solve(rhs);
    if ((basis * x - rhs).norm() > tol * std::max(1.0, rhs.norm()))
      fail(errc::consistency_failure, "subspace is not invariant");
    mats.push_back(std::move(x));
  }
  return FloatRep(rho.domain(), std::move(mats), std::sqrt(tol));
}

namespace {

// canonical column-space form: RREF of the transposed basis, transposed back
CMat canonical_basis(const CMat& b) {
  Rref f = rref(b.transpose());
  CMat out(b.rows(), f.rank);
  for (int r = 0; r < f.rank; ++r) out.col(r) = f.R.row(r).transpose();
  return out;
}

bool is_scalar_matrix(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  Scalar d = m(0, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c && !(m(r, c) == d)) return false;
      if (r != c && !m(r, c).is_zero()) return false;
    }
  return true;
}

// Exact splitting of one invariant subspace.  Candidates are Hermitizations of
// commutant basis elements and of seeded small integer combinations; a
// candidate is used when its minimal polynomial splits into distinct linear
// factors over the scanned roots.
void split_block(const MatrixRep& rho, const CMat& basis, const DecomposeOptions& opts,
                 std::mt19937_64& rng, std::vector<CMat>& out) {
  MatrixRep sigma = restrict_to_subspace(rho, basis);
  std::vector<CMat> comm = intertwiners(sigma, sigma);
  if (comm.size() == 1) {
    out.push_back(basis);
    return;
  }
  auto try_candidate = [&](const CMat& h) -> bool {
    if (is_zero(h) || is_scalar_matrix(h)) return false;
    std::vector<Eigenspace> spaces;
    try {
      spaces = eigenspaces(h);
    } catch (const error& e) {
      if (e.code() == errc::non_diagonalizable) return false;
      throw;
    }
    if (spaces.size() < 2) return false;
    for (const auto& sp : spaces) split_block(rho, CMat(basis * sp.basis), opts, rng, out);
    return true;
  };
  // commutant basis elements first, then random small combinations
  for (const auto& t : comm) {
    CMat ta = adjoint_of(t);
    if (try_candidate(CMat(t + ta))) return;
    if (try_candidate(CMat((t - ta) * Scalar::i()))) return;
  }
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int attempt = 0; attempt < opts.max_candidates; ++attempt) {
    CMat t = CMat::Constant(sigma.dim(), sigma.dim(), Scalar(0));
    for (const auto& c : comm) t += Scalar(coeff(rng)) * c;
    CMat ta = adjoint_of(t);
    if (try_candidate(CMat(t + ta))) return;
    if (try_candidate(CMat((t - ta) * Scalar::i()))) return;
  }
  fail(errc::decomposition_failed,
       "no exact splitting found for a block with commutant dimension " +
           std::to_string(comm.size()) + " (retry with a different seed)");
}

// lambda family of one component per the block form of the induced rep:
// slice_x(basis) = S_x (lambda_x^1 C_1 + ... + lambda_x^m C_m) with the C_l
// scanned in transversal order (first independent slices).
std::optional<CMat> lambda_family(const CMat& basis, int nblocks, int d,
                                  const std::vector<CMat>* s_family) {
  const int width = static_cast<int>(basis.cols());
  std::vector<CMat> untwisted;
  for (int b = 0; b < nblocks; ++b) {
    CMat slice = basis.block(b * d, 0, d, width);
    if (s_family) slice = inverse((*s_family)[b]) * slice;
    untwisted.push_back(std::move(slice));
  }
  std::vector<CMat> generators;
  std::vector<std::vector<Scalar>> rows;
  for (int b = 0; b < nblocks; ++b) {
    if (!generators.empty()) {
      // try to express the slice in the span of the chosen generators
      CMat sys(d * width, static_cast<int>(generators.size()));
      CMat rhs(d * width, 1);
      for (size_t j = 0; j < generators.size(); ++j)
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < width; ++c) sys(r * width + c, static_cast<int>(j)) = generators[j](r, c);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < width; ++c) rhs(r * width + c, 0) = untwisted[b](r, c);
      try {
        ExactSolver solver(sys);
        CMat coef = solver.solve(rhs);
        std::vector<Scalar> row;
        for (int j = 0; j < coef.rows(); ++j) row.push_back(coef(j, 0));
        rows.push_back(std::move(row));
        continue;
      } catch (const error&) {
        // independent slice: fall through and add a generator
      }
    }
    if (is_zero(untwisted[b])) {
      rows.push_back({});
      continue;
    }
    generators.push_back(untwisted[b]);
    std::vector<Scalar> row(generators.size(), Scalar(0));
    row.back() = Scalar(1);
    rows.push_back(std::move(row));
  }
  const int m = static_cast<int>(generators.size());
  CMat lam = CMat::Constant(nblocks, m, Scalar(0));
  for (int b = 0; b < nblocks; ++b)
    for (size_t j = 0; j < rows[b].size(); ++j) lam(b, static_cast<int>(j)) = rows[b][j];
  return lam;
}

template <typename S>
void assign_classes(DecompositionReport<S>& report,
                    const std::vector<Rep<S>>& actions, double tol) {
  const int n = static_cast<int>(report.components.size());
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (int j = i + 1; j < n; ++j) {
      if (cls[j] >= 0 || actions[i].dim() != actions[j].dim()) continue;
      if (!intertwiners(actions[i], actions[j], tol).empty()) cls[j] = cls[i];
    }
    ++next;
  }
  report.classes.assign(next, {});
  for (int i = 0; i < n; ++i) {
    report.components[i].cls = cls[i];
    report.classes[cls[i]].push_back(i);
  }
}

} // namespace

DecompositionReport<Scalar> decompose(const MatrixRep& rho, const DecomposeOptions& opts,
                                      const std::vector<CMat>* s_family) {
  std::mt19937_64 rng(opts.seed);
  std::vector<CMat> bases;
  split_block(rho, identity(rho.dim()), opts, rng, bases);
  for (auto& b : bases) b = canonical_basis(b);
  std::sort(bases.begin(), bases.end(), [](const CMat& a, const CMat& b) {
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (int c = 0; c < a.cols(); ++c)
      for (int r = 0; r < a.rows(); ++r) {
        int cmp = Scalar::compare(a(r, c), b(r, c));
        if (cmp != 0) return cmp < 0;
      }
    return false;
  });

  DecompositionReport<Scalar> report;
  report.dim = rho.dim();
  report.seed = opts.seed;
  std::vector<MatrixRep> actions;
  for (const auto& b : bases) {
    report.components.push_back({b, -1});
    actions.push_back(restrict_to_subspace(rho, b));
  }
  assign_classes(report, actions, 0.0);

  if (rho.induced()) {
    const auto& prov = *rho.induced();
    const int nb = static_cast<int>(prov.transversal.size());
    const int d = prov.base->dim();
    for (const auto& comp : report.components)
      report.lambdas.push_back(lambda_family(comp.basis, nb, d, s_family));
  }
  return report;
}

DecompositionReport<CD> decompose(const FloatRep& rho, const DecomposeOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<FMat> bases;

  std::function<void(const FMat&)> split = [&](const FMat& basis) {
    FloatRep sigma = restrict_to_subspace(rho, basis, opts.tol);
    std::vector<FMat> comm = intertwiners(sigma, sigma, opts.tol);
    if (comm.size() <= 1) {
      bases.push_back(basis);
      return;
    }
    for (int attempt = 0; attempt < opts.max_candidates; ++attempt) {
      FMat t = FMat::Zero(sigma.dim(), sigma.dim());
      for (const auto& c : comm) t += CD(gauss(rng), gauss(rng)) * c;
      FMat h = 0.5 * (t + FMat(t.adjoint()));
      Eigen::SelfAdjointEigenSolver<FMat> solver(h);
      // cluster eigenvalues
      const auto& ev = solver.eigenvalues();
      double scale = std::max(1.0, h.norm());
      std::vector<std::pair<int, int>> clusters;
      for (int k = 0; k < ev.size();) {
        int j = k;
        while (j < ev.size() && std::abs(ev(j) - ev(k)) <= 1e-6 * scale) ++j;
        clusters.push_back({k, j});
        k = j;
      }
      if (clusters.size() < 2) continue;
      for (auto [k, j] : clusters) {
        FMat sub(sigma.dim(), j - k);
        for (int c = k; c < j; ++c) sub.col(c - k) = solver.eigenvectors().col(c);
        split(FMat(basis * sub));
      }
      return;
    }
    fail(errc::decomposition_failed, "float splitting exhausted its retries");
  };
  split(FMat::Identity(rho.dim(), rho.dim()));

  DecompositionReport<CD> report;
  report.dim = rho.dim();
  report.seed = opts.seed;
  std::vector<FloatRep> actions;
  for (const auto& b : bases) {
    report.components.push_back({b, -1});
    actions.push_back(restrict_to_subspace(rho, b, opts.tol));
  }
  assign_classes(report, actions, opts.tol);
  return report;
}

std::pair<int, int> frobenius_check(const MatrixRep& rho) {
  if (!rho.domain().is_normal())
    fail(errc::not_a_subgroup, "frobenius_check needs a normal inducing subgroup");
  MatrixRep ind = induce(rho);
  int lhs = static_cast<int>(intertwiners(ind, ind).size());
  CosetTransversal t = cosets(rho.parent(), rho.domain());
  int rhs = 0;
  for (int x : t.reps)
    rhs += static_cast<int>(intertwiners(rho, conjugate_rep(rho, x)).size());
  return {lhs, rhs};
}

std::vector<CMat> cyclic_decompose(const MatrixRep& rho, int x, const CMat& s_x, int n) {
  const auto& g = *rho.parent();
  const int d = rho.dim();
  // n must be the order of x modulo the domain subgroup
  int cur = x, k = 1;
  while (!rho.domain().contains(cur)) {
    cur = g.mul(cur, x);
    ++k;
  }
  if (k != n)
    fail(errc::not_a_rep, "x has order " + std::to_string(k) + " modulo the subgroup");
  int h = cur; // x^n in G0
  // S_x must intertwine rho^x with rho ...
  MatrixRep rho_x = conjugate_rep(rho, x);
  for (int e : rho.domain().elements())
    if (!is_zero(CMat(rho_x.at(e) * s_x - s_x * rho.at(e))))
      fail(errc::not_an_intertwiner, "S_x does not intertwine rho^x with rho");
  // ... and satisfy the normalization pi(h) S_x^n = I, which makes all the
  // beta coefficients along the cyclic tower trivial
  CMat power = identity(d);
  for (int j = 0; j < n; ++j) power = sparse_mul(power, s_x);
  if (!is_zero(CMat(sparse_mul(rho.at(h), power) - identity(d))))
    fail(errc::beta_not_trivial, "pi(h) S_x^n != I");

  // block cyclic shift with twist: (Tu)_k = S_x u_{k-1}, wrapping through pi(h)
  const int dim = n * d;
  CMat shift = CMat::Constant(dim, dim, Scalar(0));
  for (int b = 1; b < n; ++b) shift.block(b * d, (b - 1) * d, d, d) = s_x;
  shift.block(0, (n - 1) * d, d, d) = rho.at(h) * s_x;
  std::vector<CMat> projectors;
  std::vector<CMat> powers{identity(dim)};
  for (int j = 1; j < n; ++j) powers.push_back(sparse_mul(powers.back(), shift));
  for (int j = 0; j < n; ++j) {
    CMat p = CMat::Constant(dim, dim, Scalar(0));
    for (int k2 = 0; k2 < n; ++k2)
      p += Scalar::root_of_unity(n, static_cast<long>(j) * k2) * powers[k2];
    p *= Scalar(mpq_class(1, n));
    projectors.push_back(std::move(p));
  }
  return projectors;
}

G2CheckResult g2_irreducibility_check(const MatrixRep& rho, uint64_t seed) {
  G2CheckResult result;
  const auto& gp = rho.parent();
  if (!rho.domain().is_normal())
    fail(errc::not_a_subgroup, "g2 check needs a normal base subgroup");
  CosetTransversal t = cosets(gp, rho.domain());
  std::vector<int> g2_elems;
  for (int x : t.reps)
    if (!intertwiners(rho, conjugate_rep(rho, x)).empty())
      for (int h : rho.domain().elements()) g2_elems.push_back(gp->mul(x, h));
  Subgroup g2(gp, g2_elems);
  result.g2_elements = g2.elements();

  // work inside G2 as a standalone group
  GroupPtr g2_group = g2.as_group();
  std::vector<int> g0_in_g2;
  for (int h : rho.domain().elements()) g0_in_g2.push_back(g2.pos(h));
  Subgroup g0_sub(g2_group, g0_in_g2);
  MatrixRep rho_in_g2 = rebase(rho, g0_sub);
  MatrixRep ind_to_g2 = induce(rho_in_g2);
  DecomposeOptions opts;
  opts.seed = seed;
  auto report = decompose(ind_to_g2, opts);
  result.component_count = static_cast<int>(report.components.size());
  result.ok = true;
  for (const auto& comp : report.components) {
    MatrixRep w = restrict_to_subspace(ind_to_g2, comp.basis);
    MatrixRep w_on_parent = rebase(w, g2);
    bool irr = is_irreducible(induce(w_on_parent));
    result.induced_irreducible.push_back(irr);
    if (!irr) result.ok = false;
  }
  return result;
}

Scalar character_inner_product(const MatrixRep& rho, const MatrixRep& sigma) {
  if (rho.domain().elements() != sigma.domain().elements())
    fail(errc::not_a_rep, "character inner product needs a common domain");
  Scalar acc(0);
  for (int g : rho.domain().elements())
    acc += rho.at(g).trace() * sigma.at(g).trace().conj();
  return acc / Scalar(static_cast<long>(rho.domain().size()));
}

} // namespace repkit
