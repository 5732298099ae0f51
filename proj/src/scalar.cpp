#include "repkit/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace repkit {

namespace {

constexpr int kMaxConductor = 240;

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

// Exact division of integer polynomials, used to build cyclotomic polynomials
// from x^n - 1 = prod_{d|n} Phi_d.
std::vector<long> poly_div_exact(std::vector<long> num,
                                      const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    long c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  return q;
}

std::vector<long> cyclotomic_poly(int n) {
  static std::map<int, std::vector<long>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  // iterative fill so recursion depth is not a concern
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d : divisors(m))
      if (d < m) num = poly_div_exact(std::move(num), cache.at(d));
    cache[m] = std::move(num);
  }
  return cache.at(n);
}

struct CycloTable {
  int L = 0;
  int phi = 0;
  // pow[t] = coordinates of zeta_L^t in the power basis, 0 <= t < L
  std::vector<std::vector<long>> pow;
};

const CycloTable& table_for(int L) {
  static std::map<int, CycloTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;

  if (L > kMaxConductor) fail(errc::conductor_overflow, "conductor " + std::to_string(L));
  CycloTable t;
  t.L = L;
  t.phi = euler_phi(L);
  auto phi_poly = cyclotomic_poly(L);
  // x^t mod Phi_L, computed by repeated multiplication by x
  std::vector<long> cur(t.phi, 0);
  cur[0] = 1;
  t.pow.reserve(L);
  for (int k = 0; k < L; ++k) {
    t.pow.push_back(cur);
    // cur <- x * cur mod Phi
    long top = cur[t.phi - 1];
    for (int j = t.phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < t.phi; ++j) cur[j] -= top * phi_poly[j];
  }
  return cache.emplace(L, std::move(t)).first->second;
}

// Solve sum_j a_j basis_j = v exactly (tiny dense Gaussian elimination over Q).
// basis vectors and v have length `rows`.  Returns nullopt if inconsistent.
std::optional<std::vector<mpq_class>> solve_in_span(
    const std::vector<std::vector<mpq_class>>& basis, std::vector<mpq_class> v) {
  const int rows = static_cast<int>(v.size());
  const int cols = static_cast<int>(basis.size());
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = basis[c][r];

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    std::swap(v[p], v[row]);
    mpq_class inv = 1 / m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    v[row] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
      v[r] -= f * v[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (v[r] != 0) return std::nullopt;
  std::vector<mpq_class> a(cols, mpq_class(0));
  for (int r = 0; r < row; ++r) a[pivot_col_of_row[r]] = v[r];
  // rows below pivots must also be consistent with free columns set to 0;
  // since we eliminated fully above, any leftover nonzero row was caught.
  return a;
}

} // namespace

Scalar with_conductor(int L, std::vector<mpq_class> coeffs) {
  Scalar s;
  s.L_ = L;
  s.c_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

Scalar Scalar::root_of_unity(int N, long k) {
  if (N <= 0) fail(errc::conductor_overflow, "root order must be positive");
  int L = std::lcm(N, 4);
  const CycloTable& t = table_for(L);
  long kk = ((k % N) + N) % N;
  long exp = kk * (L / N);
  std::vector<mpq_class> c(t.phi);
  const auto& row = t.pow[exp % L];
  for (int j = 0; j < t.phi; ++j) c[j] = row[j];
  return with_conductor(L, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

std::optional<mpq_class> Scalar::rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

std::optional<std::pair<mpq_class, mpq_class>> Scalar::gaussian() const {
  if (L_ != 4) return std::nullopt;
  return std::make_pair(c_[0], c_[1]);
}

void Scalar::promote(int M) {
  if (M == L_) return;
  const CycloTable& t = table_for(M);
  int step = M / L_;
  std::vector<mpq_class> out(t.phi, mpq_class(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& row = t.pow[(k * step) % M];
    for (int j = 0; j < t.phi; ++j)
      if (row[j] != 0) out[j] += c_[k] * row[j];
  }
  L_ = M;
  c_ = std::move(out);
}

void Scalar::canonicalize() {
  if (L_ == 4) return;
  // try successively smaller conductors (multiples of 4 dividing L)
  for (;;) {
    bool demoted = false;
    for (int d : divisors(L_)) {
      if (d % 4 != 0 || d == L_) continue;
      const CycloTable& t = table_for(L_);
      int phi_d = euler_phi(d);
      int step = L_ / d;
      std::vector<std::vector<mpq_class>> basis(phi_d);
      for (int j = 0; j < phi_d; ++j) {
        const auto& row = t.pow[(static_cast<long>(j) * step) % L_];
        basis[j].assign(row.begin(), row.end());
      }
      auto sol = solve_in_span(basis, c_);
      if (sol) {
        L_ = d;
        c_ = std::move(*sol);
        demoted = true;
        break;
      }
    }
    if (!demoted) break;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (L_ == o.L_) {
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    if (L_ != 4) canonicalize();
    return *this;
  }
  Scalar rhs = o;
  int M = std::lcm(L_, o.L_);
  promote(M);
  rhs.promote(M);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    L_ = 4;
    c_.assign(2, mpq_class(0));
    return *this;
  }
  if (L_ == 4 && o.L_ == 4) {
    if (c_[1] == 0 && o.c_[1] == 0) {
      c_[0] *= o.c_[0];
      return *this;
    }
    mpq_class re = c_[0] * o.c_[0] - c_[1] * o.c_[1];
    mpq_class im = c_[0] * o.c_[1] + c_[1] * o.c_[0];
    c_[0] = std::move(re);
    c_[1] = std::move(im);
    return *this;
  }
  Scalar rhs = o;
  int M = std::lcm(L_, o.L_);
  promote(M);
  rhs.promote(M);
  const CycloTable& t = table_for(M);
  // convolution, then monomial-wise reduction through the power table
  std::vector<mpq_class> conv(2 * t.phi - 1, mpq_class(0));
  for (size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    for (size_t b = 0; b < rhs.c_.size(); ++b) {
      if (rhs.c_[b] == 0) continue;
      conv[a + b] += c_[a] * rhs.c_[b];
    }
  }
  std::vector<mpq_class> out(t.phi, mpq_class(0));
  for (size_t d = 0; d < conv.size(); ++d) {
    if (conv[d] == 0) continue;
    if (static_cast<int>(d) < t.phi) {
      out[d] += conv[d];
    } else {
      const auto& row = t.pow[d % M];
      for (int j = 0; j < t.phi; ++j)
        if (row[j] != 0) out[j] += conv[d] * row[j];
    }
  }
  c_ = std::move(out);
  canonicalize();
  return *this;
}

Scalar Scalar::conj() const {
  if (L_ == 4) return Scalar(c_[0], -c_[1]);
  const CycloTable& t = table_for(L_);
  std::vector<mpq_class> out(t.phi, mpq_class(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& row = t.pow[(L_ - static_cast<int>(k)) % L_];
    for (int j = 0; j < t.phi; ++j)
      if (row[j] != 0) out[j] += c_[k] * row[j];
  }
  return with_conductor(L_, std::move(out));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::inexact_root, "division by zero");
  if (L_ == 4) {
    mpq_class n = c_[0] * c_[0] + c_[1] * c_[1];
    return Scalar(c_[0] / n, -c_[1] / n);
  }
  // extended Euclid for gcd(f, Phi_L) = 1 in Q[x]
  auto phiPoly = cyclotomic_poly(L_);
  std::vector<mpq_class> r0(phiPoly.begin(), phiPoly.end());
  std::vector<mpq_class> r1(c_.begin(), c_.end());
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
  auto deg = [](const std::vector<mpq_class>& p) { return static_cast<int>(p.size()) - 1; };
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<mpq_class> q(std::max<int>(0, deg(r0) - deg(r1)) + 1, mpq_class(0));
    std::vector<mpq_class> rem = r0;
    for (int k = deg(rem); k >= deg(r1); --k) {
      if (rem[k] == 0) continue;
      mpq_class f = rem[k] / r1.back();
      q[k - deg(r1)] = f;
      for (int j = 0; j <= deg(r1); ++j) rem[k - deg(r1) + j] -= f * r1[j];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    // s_{k+1} = s_{k-1} - q * s_k
    std::vector<mpq_class> s2(std::max(s0.size(), q.size() + s1.size() - 1), mpq_class(0));
    for (size_t k = 0; k < s0.size(); ++k) s2[k] = s0[k];
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      for (size_t b = 0; b < s1.size(); ++b) s2[a + b] -= q[a] * s1[b];
    }
    while (!s2.empty() && s2.back() == 0) s2.pop_back();
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) fail(errc::inexact_root, "non-invertible cyclotomic element");
  }
  // r1 is a nonzero constant: inverse = s1 / r1
  const CycloTable& t = table_for(L_);
  std::vector<mpq_class> out(t.phi, mpq_class(0));
  for (size_t k = 0; k < s1.size() && k < static_cast<size_t>(t.phi); ++k)
    out[k] = s1[k] / r1[0];
  return with_conductor(L_, std::move(out));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.L_ != b.L_) return a.L_ < b.L_ ? -1 : 1;
  for (size_t k = 0; k < a.c_.size(); ++k) {
    int c = cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::optional<Scalar::RootForm> Scalar::as_root_times_gaussian() const {
  if (L_ == 4) return RootForm{1, 0, c_[0], c_[1]};
  // prefer the polar-like form with a positive rational coefficient when one
  // exists; otherwise take the first Gaussian residual
  std::optional<RootForm> first;
  for (int k = 0; k < L_; ++k) {
    Scalar w = *this * root_of_unity(L_, -k);
    if (!w.is_gaussian()) continue;
    int g = static_cast<int>(std::gcd(static_cast<long>(k), static_cast<long>(L_)));
    RootForm form{L_ / g, k / g, w.coeffs()[0], w.coeffs()[1]};
    if (form.coef_im == 0 && form.coef_re > 0) return form;
    if (!first) first = form;
  }
  return first;
}

std::optional<long> Scalar::root_exponent(int n) const {
  for (long k = 0; k < n; ++k)
    if (*this == root_of_unity(n, k)) return k;
  return std::nullopt;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(L_);
    acc += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  const auto& c = s.coeffs();
  if (s.conductor() == 4) {
    if (c[1] == 0) return os << c[0];
    if (c[0] == 0) return os << c[1] << "i";
    return os << c[0] << (c[1] > 0 ? "+" : "") << c[1] << "i";
  }
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << " + ";
    os << c[k];
    if (k > 0) os << "*z" << s.conductor() << "^" << k;
    first = false;
  }
  if (first) os << 0;
  return os;
}

std::optional<mpq_class> exact_nth_root(const mpq_class& r, int n) {
  if (r <= 0) return std::nullopt;
  mpz_class num_root, den_root;
  int num_exact = mpz_root(num_root.get_mpz_t(), r.get_num_mpz_t(), n);
  int den_exact = mpz_root(den_root.get_mpz_t(), r.get_den_mpz_t(), n);
  if (!num_exact || !den_exact) return std::nullopt;
  return mpq_class(num_root) / mpq_class(den_root);
}

Scalar principal_nth_root(const Scalar& v, int n) {
  if (v.is_zero()) fail(errc::inexact_root, "n-th root of zero");
  // split v = r * u with r > 0 rational and u a root of unity
  Scalar norm2 = v * v.conj();
  auto n2 = norm2.rational();
  if (!n2) fail(errc::inexact_root, "modulus not rational");
  auto r = exact_nth_root(*n2, 2);
  if (!r) fail(errc::inexact_root, "modulus not a rational square");
  Scalar u = v / Scalar(*r);
  auto form = u.as_root_times_gaussian();
  if (!form || form->coef_re != 1 || form->coef_im != 0) {
    // a Gaussian-rational phase like i or -1 is fine; fold it into the tag
    if (form && form->coef_im == 0 && form->coef_re == -1) {
      form->k = form->k * 2 + form->N;
      form->N *= 2;
    } else if (form && form->coef_re == 0 && form->coef_im == 1) {
      form->k = form->k * 4 + form->N;
      form->N *= 4;
    } else if (form && form->coef_re == 0 && form->coef_im == -1) {
      form->k = form->k * 4 + 3 * form->N;
      form->N *= 4;
    } else {
      fail(errc::inexact_root, "phase is not a root of unity");
    }
  }
  auto rn = exact_nth_root(*r, n);
  if (!rn) fail(errc::inexact_root, "modulus has no exact n-th root");
  // principal root: argument (2*pi*k/N)/n
  return Scalar(*rn) * Scalar::root_of_unity(form->N * n, form->k);
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_diagonalizable: return "NonDiagonalizable";
    case errc::conductor_overflow: return "ConductorOverflow";
    case errc::inexact_root: return "InexactRoot";
    case errc::not_a_group: return "NotAGroup";
    case errc::bad_identity: return "BadIdentity";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_a_cocycle: return "NotACocycle";
    case errc::not_a_rep: return "NotARep";
    case errc::conjugation_leaves_subgroup: return "ConjugationLeavesSubgroup";
    case errc::decomposition_failed: return "DecompositionFailed";
    case errc::beta_not_trivial: return "BetaNotTrivial";
    case errc::not_central: return "NotCentral";
    case errc::not_an_intertwiner: return "NotAnIntertwiner";
    case errc::not_scalar: return "NotScalar";
    case errc::not_proportional: return "NotProportional";
    case errc::consistency_failure: return "ConsistencyFailure";
    case errc::bad_window: return "BadWindow";
    case errc::bad_parity: return "BadParity";
    case errc::reducible_base: return "ReducibleBase";
    case errc::not_algebra_stable: return "NotAlgebraStable";
    case errc::inconsistent_images: return "InconsistentImages";
    case errc::not_summand_permuting: return "NotSummandPermuting";
    case errc::input_error: return "InputError";
    case errc::verification_failure: return "VerificationFailure";
  }
  return "UnknownError";
}

} // namespace repkit
