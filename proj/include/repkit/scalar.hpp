#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "repkit/errors.hpp"

namespace repkit {

/// Exact complex scalar: an element of the cyclotomic field Q(zeta_L).
///
/// The conductor L is always a multiple of 4 (so i is available) and is kept
/// minimal, which makes equality a plain coefficient comparison.  Values are
/// stored as rational coordinate vectors of length phi(L) in the power basis
/// 1, zeta, ..., zeta^{phi(L)-1} reduced modulo the L-th cyclotomic polynomial.
/// The common case L = 4 is exactly the Gaussian rationals: coeffs = (re, im).
class Scalar {
public:
  Scalar() : L_(4), c_(2) {}
  Scalar(long v) : L_(4), c_{mpq_class(v), mpq_class(0)} {}
  Scalar(int v) : Scalar(static_cast<long>(v)) {}
  // mpq_class(p, q) does not reduce p/q on its own; normalize on entry
  explicit Scalar(const mpq_class& v) : L_(4), c_{v, mpq_class(0)} {
    c_[0].canonicalize();
  }
  Scalar(const mpq_class& re, const mpq_class& im) : L_(4), c_{re, im} {
    c_[0].canonicalize();
    c_[1].canonicalize();
  }

  /// zeta_N^k, the primitive N-th root of unity exp(2*pi*i/N) raised to k.
  static Scalar root_of_unity(int N, long k);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  int conductor() const { return L_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return L_ == 4 && c_[1] == 0; }
  bool is_gaussian() const { return L_ == 4; }

  /// Rational value if the scalar lies in Q.
  std::optional<mpq_class> rational() const;
  /// (re, im) if the scalar lies in Q(i).
  std::optional<std::pair<mpq_class, mpq_class>> gaussian() const;

  /// Decomposition value = (coef_re + i coef_im) * zeta_N^k with the
  /// coefficient in Q(i), if one exists.  N and k are reduced; k = 0 means
  /// the value is already Gaussian.
  struct RootForm {
    int N;
    long k;
    mpq_class coef_re, coef_im;
  };
  std::optional<RootForm> as_root_times_gaussian() const;

  /// Exponent k with *this == zeta_n^k, if the value is in <zeta_n>.
  std::optional<long> root_exponent(int n) const;

  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.L_ == b.L_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Arbitrary but fixed total order; used only to make outputs deterministic.
  static int compare(const Scalar& a, const Scalar& b);

  std::complex<double> to_complex() const;
  std::string str() const;

private:
  int L_;
  std::vector<mpq_class> c_;

  void promote(int M);
  void canonicalize();

  friend Scalar with_conductor(int L, std::vector<mpq_class> coeffs);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar conj(const Scalar& s) { return s.conj(); }

/// Exact n-th root of a positive rational, if it is rational.
std::optional<mpq_class> exact_nth_root(const mpq_class& r, int n);

/// Principal n-th root of a scalar of the form (positive rational) * (root of
/// unity); the result has argument arg(v)/n.  Throws inexact_root otherwise.
Scalar principal_nth_root(const Scalar& v, int n);

} // namespace repkit

// Minimal Eigen glue: enough for dense storage, sums and products of exact
// matrices.  Decompositions on exact matrices are provided by repkit::linalg,
// not Eigen, so no epsilon/abs machinery is needed.
#include <Eigen/Core>

namespace Eigen {
template <>
struct NumTraits<repkit::Scalar> {
  typedef repkit::Scalar Real;
  typedef repkit::Scalar NonInteger;
  typedef repkit::Scalar Nested;
  typedef repkit::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return repkit::Scalar(0); }
  static inline Real dummy_precision() { return repkit::Scalar(0); }
  static inline int digits10() { return 0; }
};
} // namespace Eigen
