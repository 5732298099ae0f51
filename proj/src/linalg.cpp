#include "repkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace repkit {

CMat adjoint_of(const CMat& m) {
  CMat out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

bool is_zero(const CMat& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

CMat identity(int n) {
  CMat m = CMat::Constant(n, n, Scalar(0));
  for (int k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Rref rref(CMat m) {
  Rref out;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < cols; ++c) m(row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.R = std::move(m);
  return out;
}

int rank_of(const CMat& m) { return rref(m).rank; }

CMat nullspace(const CMat& m) {
  const int cols = static_cast<int>(m.cols());
  Rref f = rref(m);
  std::vector<int> free_cols;
  {
    std::vector<bool> is_pivot(cols, false);
    for (int p : f.pivots) is_pivot[p] = true;
    for (int c = 0; c < cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  CMat basis = CMat::Constant(cols, static_cast<int>(free_cols.size()), Scalar(0));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    basis(fc, static_cast<int>(j)) = Scalar(1);
    for (int r = 0; r < f.rank; ++r) basis(f.pivots[r], static_cast<int>(j)) = -f.R(r, fc);
  }
  return basis;
}

FMat nullspace(const FMat& m, double tol) {
  if (m.rows() == 0) return FMat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<FMat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  int keep_from = 0;
  while (keep_from < sv.size() && sv(keep_from) > tol * std::max(smax, 1.0)) ++keep_from;
  int dim = static_cast<int>(m.cols()) - keep_from;
  FMat out(m.cols(), dim);
  for (int j = 0; j < dim; ++j) out.col(j) = svd.matrixV().col(keep_from + j);
  return out;
}

Scalar det(CMat m) {
  if (m.rows() != m.cols()) fail(errc::not_scalar, "det of non-square matrix");
  const int n = static_cast<int>(m.rows());
  Scalar d(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      d = -d;
    }
    d *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return d;
}

CMat sparse_mul(const CMat& a, const CMat& b) {
  std::vector<std::vector<int>> a_col_rows(a.cols());
  for (int k = 0; k < a.cols(); ++k)
    for (int r = 0; r < a.rows(); ++r)
      if (!a(r, k).is_zero()) a_col_rows[k].push_back(r);
  CMat out = CMat::Constant(a.rows(), b.cols(), Scalar(0));
  for (int c = 0; c < b.cols(); ++c)
    for (int k = 0; k < b.rows(); ++k) {
      if (b(k, c).is_zero()) continue;
      for (int r : a_col_rows[k]) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

CMat inverse(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  CMat aug(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = identity(n);
  Rref f = rref(std::move(aug));
  if (f.rank < n || f.pivots[n - 1] >= n)
    fail(errc::not_scalar, "matrix is singular");
  return f.R.block(0, n, n, n);
}

ExactSolver::ExactSolver(const CMat& a)
    : rows_(static_cast<int>(a.rows())), cols_(static_cast<int>(a.cols())) {
  CMat aug(rows_, cols_ + rows_);
  aug.block(0, 0, rows_, cols_) = a;
  aug.block(0, cols_, rows_, rows_) = identity(rows_);
  Rref f = rref(std::move(aug));
  // pivots inside the A-part give the solve; ops records the row operations
  rref_.R = f.R.block(0, 0, rows_, cols_);
  ops_ = f.R.block(0, cols_, rows_, rows_);
  for (int p : f.pivots)
    if (p < cols_) rref_.pivots.push_back(p);
  rref_.rank = static_cast<int>(rref_.pivots.size());
}

CMat ExactSolver::solve(const CMat& b) const {
  CMat tb = ops_ * b;
  CMat x = CMat::Constant(cols_, b.cols(), Scalar(0));
  for (int r = 0; r < rref_.rank; ++r) x.row(rref_.pivots[r]) = tb.row(r);
  for (int r = rref_.rank; r < rows_; ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (!tb(r, c).is_zero())
        fail(errc::consistency_failure, "linear system has no exact solution");
  return x;
}

std::vector<Scalar> minimal_polynomial(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  const int dim = n * n;
  // incremental echelon of flattened powers of m, tracking combinations
  std::vector<std::vector<Scalar>> echelon;       // reduced rows
  std::vector<int> lead;                          // leading index per row
  std::vector<std::vector<Scalar>> combo;         // expression in powers
  CMat power = identity(n);
  for (int k = 0;; ++k) {
    std::vector<Scalar> v(dim);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[r * n + c] = power(r, c);
    std::vector<Scalar> cf(k + 1, Scalar(0));
    cf[k] = Scalar(1);
    for (size_t row = 0; row < echelon.size(); ++row) {
      const Scalar& f = v[lead[row]];
      if (f.is_zero()) continue;
      Scalar fc = f;
      for (int j = 0; j < dim; ++j)
        if (!echelon[row][j].is_zero()) v[j] -= fc * echelon[row][j];
      for (size_t j = 0; j < combo[row].size(); ++j) cf[j] -= fc * combo[row][j];
    }
    int l = -1;
    for (int j = 0; j < dim; ++j)
      if (!v[j].is_zero()) { l = j; break; }
    if (l < 0) {
      // dependency found: sum_j cf[j] M^j = 0 with cf[k] = 1, so cf is the
      // monic minimal polynomial
      return cf;
    }
    Scalar inv = v[l].inverse();
    for (int j = 0; j < dim; ++j) v[j] *= inv;
    for (auto& c : cf) c *= inv;
    echelon.push_back(std::move(v));
    lead.push_back(l);
    combo.push_back(std::move(cf));
    power = power * m;
  }
}

namespace {

// divisors of |z| via trial division; a large leftover cofactor is treated as
// prime, which is enough for the small eigenvalues met in practice
std::vector<mpz_class> divisors_of(mpz_class z) {
  if (z < 0) z = -z;
  std::vector<std::pair<mpz_class, int>> fac;
  for (long d = 2; d <= 1000000; ++d) {
    if (z <= 1) break;
    if (mpz_divisible_ui_p(z.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(z.get_mpz_t(), d)) {
        z /= d;
        ++e;
      }
      fac.push_back({mpz_class(d), e});
    }
    if (mpz_class(d) * d > z && z > 1) break;
  }
  if (z > 1) fac.push_back({z, 1});
  std::vector<mpz_class> divs{mpz_class(1)};
  for (auto& [p, e] : fac) {
    size_t count = divs.size();
    mpz_class pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

Scalar eval_poly(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc(0);
  for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) acc = acc * x + poly[k];
  return acc;
}

} // namespace

std::vector<Scalar> small_field_roots(const std::vector<Scalar>& poly) {
  std::vector<Scalar> roots;
  // rational-root scan needs rational coefficients
  std::vector<mpq_class> q;
  for (const auto& c : poly) {
    auto r = c.rational();
    if (!r) return roots;
    q.push_back(*r);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  if (q.size() <= 1) return roots;
  mpz_class den(1);
  for (const auto& c : q) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> zc;
  for (const auto& c : q) {
    mpq_class scaled = c * den;
    scaled.canonicalize();
    zc.push_back(scaled.get_num());
  }
  bool zero_root = (zc[0] == 0);
  size_t low = 0;
  while (low < zc.size() && zc[low] == 0) ++low;
  std::vector<Scalar> candidates;
  if (zero_root) candidates.push_back(Scalar(0));
  for (const auto& p : divisors_of(zc[low]))
    for (const auto& qq : divisors_of(zc.back())) {
      mpq_class r(p, qq);
      r.canonicalize();
      for (int sign : {1, -1}) {
        mpq_class v = sign * r;
        candidates.push_back(Scalar(v));
        candidates.push_back(Scalar(mpq_class(0), v));
      }
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& cand : candidates)
    if (eval_poly(poly, cand).is_zero()) roots.push_back(cand);
  return roots;
}

std::vector<Eigenspace> eigenspaces(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  auto mu = minimal_polynomial(m);
  auto roots = small_field_roots(mu);
  std::vector<Eigenspace> out;
  int total = 0;
  for (const auto& lam : roots) {
    CMat shifted = m;
    for (int k = 0; k < n; ++k) shifted(k, k) -= lam;
    CMat basis = nullspace(shifted);
    if (basis.cols() == 0) continue;
    total += static_cast<int>(basis.cols());
    out.push_back({lam, std::move(basis)});
  }
  if (total != n)
    fail(errc::non_diagonalizable,
         "eigenspaces span " + std::to_string(total) + " of " + std::to_string(n) +
             " dimensions (minimal polynomial does not split over the scanned roots)");
  std::sort(out.begin(), out.end(), [](const Eigenspace& a, const Eigenspace& b) {
    return Scalar::compare(a.value, b.value) < 0;
  });
  return out;
}

std::vector<FloatEigenspace> eigenspaces(const FMat& m, double tol) {
  const int n = static_cast<int>(m.rows());
  Eigen::ComplexEigenSolver<FMat> solver(m);
  if (solver.info() != Eigen::Success)
    fail(errc::non_diagonalizable, "eigensolver failed to converge");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ev(a).real() != ev(b).real()) return ev(a).real() < ev(b).real();
    return ev(a).imag() < ev(b).imag();
  });
  std::vector<FloatEigenspace> out;
  double scale = std::max(1.0, m.norm());
  for (int k = 0; k < n;) {
    int j = k;
    while (j < n && std::abs(ev(order[j]) - ev(order[k])) <= tol * scale) ++j;
    FMat cols(n, j - k);
    std::complex<double> lam(0, 0);
    for (int t = k; t < j; ++t) {
      cols.col(t - k) = solver.eigenvectors().col(order[t]);
      lam += ev(order[t]);
    }
    lam /= static_cast<double>(j - k);
    Eigen::HouseholderQR<FMat> qr(cols);
    FMat q = qr.householderQ() * FMat::Identity(n, j - k);
    double residual = (m * q - lam * q).norm();
    if (residual > std::sqrt(tol) * scale)
      fail(errc::non_diagonalizable, "projection residual exceeds tolerance");
    out.push_back({lam, std::move(q)});
    k = j;
  }
  return out;
}

} // namespace repkit
