#include "repkit/cocycle.hpp"

#include <numeric>

namespace repkit {

namespace {

// order of x modulo the subgroup and the landing element x^n
std::pair<int, int> order_mod(const FiniteGroup& g, const Subgroup& h, int x) {
  int cur = x, n = 1;
  while (!h.contains(cur)) {
    cur = g.mul(cur, x);
    ++n;
  }
  return {n, cur};
}

bool is_intertwiner(const MatrixRep& pi, int x, const CMat& s) {
  MatrixRep pix = conjugate_rep(pi, x);
  for (int g : pi.domain().elements())
    if (!is_zero(CMat(pix.at(g) * s - s * pi.at(g)))) return false;
  return true;
}

std::pair<int, int> first_nonzero(const CMat& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return {r, c};
  fail(errc::not_proportional, "zero matrix where an intertwiner was expected");
}

} // namespace

CMat normalize_intertwiner(const MatrixRep& pi, int x, const CMat& s_raw, int n, int h) {
  if (!is_intertwiner(pi, x, s_raw))
    fail(errc::not_an_intertwiner, "S_raw does not intertwine pi^x with pi");
  CMat power = identity(pi.dim());
  for (int k = 0; k < n; ++k) power = sparse_mul(power, s_raw);
  CMat a = sparse_mul(pi.at(h), power);
  // Schur scalar: a = lambda I
  Scalar lambda = a(0, 0);
  CMat residual = a - lambda * identity(pi.dim());
  if (!is_zero(residual))
    fail(errc::not_scalar, "pi(h) S^n is not scalar (is pi irreducible?)");
  if (lambda.is_zero()) fail(errc::not_an_intertwiner, "S_raw is singular");
  Scalar root = principal_nth_root(lambda, n);
  return s_raw * root.inverse();
}

IntertwinerFamily build_family(const MatrixRep& pi, const Subgroup& ambient) {
  const auto& gp = pi.parent();
  const auto& g = *gp;
  for (int e : pi.domain().elements())
    if (!ambient.contains(e))
      fail(errc::not_a_subgroup, "base subgroup must lie inside the ambient subgroup");
  // transversal of G0 inside the ambient subgroup, identity first
  std::vector<int> reps;
  std::vector<bool> covered(g.order(), false);
  auto mark = [&](int x) {
    reps.push_back(x);
    for (int hh : pi.domain().elements()) covered[g.mul(x, hh)] = true;
  };
  mark(g.identity());
  for (int x : ambient.elements())
    if (!covered[x]) mark(x);

  IntertwinerFamily family{pi, ambient, reps, {}, {}, {}};
  for (int x : reps) {
    auto basis = intertwiners(pi, conjugate_rep(pi, x));
    if (basis.empty())
      fail(errc::not_an_intertwiner,
           "pi^" + g.label(x) + " is not equivalent to pi; element is outside G2");
    if (basis.size() > 1)
      fail(errc::not_scalar, "intertwiner space has dimension > 1 (pi reducible)");
    auto [n, h] = order_mod(g, pi.domain(), x);
    family.s.push_back(normalize_intertwiner(pi, x, basis[0], n, h));
    family.n_of.push_back(n);
    family.h_of.push_back(h);
  }
  return family;
}

ExtendedFamily extend_family(const IntertwinerFamily& family) {
  const auto& g = *family.base.parent();
  const auto& pi = family.base;
  ExtendedFamily out;
  out.s.resize(family.ambient.size());
  for (size_t j = 0; j < family.transversal.size(); ++j) {
    int x = family.transversal[j];
    for (int h : pi.domain().elements()) {
      int xh = g.mul(x, h);
      CMat via_right = sparse_mul(pi.at(g.inv(h)), family.s[j]); // S_{xh} = pi(h^-1) S_x
      // the same element written as g x with g = x h x^-1
      int gg = g.mul(g.mul(x, h), g.inv(x));
      CMat via_left = sparse_mul(family.s[j], pi.at(g.inv(gg))); // S_{gx} = S_x pi(g^-1)
      if (!is_zero(CMat(via_right - via_left)))
        fail(errc::consistency_failure,
             "S_{xh} != S_{gx} at x=" + g.label(x) + ", h=" + g.label(h));
      // normalization carries over to every representative of the class
      auto [n, land] = order_mod(g, pi.domain(), xh);
      CMat power = identity(pi.dim());
      for (int k = 0; k < n; ++k) power = sparse_mul(power, via_right);
      if (!is_zero(CMat(sparse_mul(pi.at(land), power) - identity(pi.dim()))))
        fail(errc::consistency_failure,
             "extended operator violates the normalization at " + g.label(xh));
      out.s[family.ambient.pos(xh)] = std::move(via_right);
    }
  }
  return out;
}

CocycleTable beta_table(const IntertwinerFamily& family) {
  const auto& g = *family.base.parent();
  const auto& pi = family.base;
  const int nq = static_cast<int>(family.transversal.size());

  // quotient Q = ambient/G0 with coset indices aligned to the transversal
  GroupPtr amb_group = family.ambient.as_group();
  std::vector<int> g0_positions;
  for (int e : pi.domain().elements()) g0_positions.push_back(family.ambient.pos(e));
  auto [q, proj] = quotient(amb_group, Subgroup(amb_group, g0_positions));
  if (q->order() != nq)
    fail(errc::not_a_subgroup, "family transversal does not cover the quotient");
  // position of each transversal element's class in Q
  std::vector<int> class_of(nq);
  for (int j = 0; j < nq; ++j)
    class_of[j] = proj[family.ambient.pos(family.transversal[j])];
  std::vector<int> rep_of_class(nq, -1);
  for (int j = 0; j < nq; ++j) {
    if (rep_of_class[class_of[j]] != -1)
      fail(errc::not_a_subgroup, "transversal hits a coset twice");
    rep_of_class[class_of[j]] = j;
  }

  CocycleTable table;
  table.quotient = q;
  table.n = nq;
  table.exp.assign(nq, std::vector<long>(nq, 0));
  for (int jx = 0; jx < nq; ++jx)
    for (int jy = 0; jy < nq; ++jy) {
      int x = family.transversal[jx], y = family.transversal[jy];
      int xy = g.mul(x, y);
      int jz = rep_of_class[proj[family.ambient.pos(xy)]];
      int z = family.transversal[jz];
      int n0 = g.mul(g.inv(z), xy); // xy = z n0 with n0 in G0
      CMat s_ref = sparse_mul(pi.at(g.inv(n0)), family.s[jz]);
      CMat lhs = sparse_mul(family.s[jy], family.s[jx]);
      auto [r, c] = first_nonzero(s_ref);
      Scalar beta = lhs(r, c) / s_ref(r, c);
      bool proportional = true;
      for (int rr = 0; rr < lhs.rows() && proportional; ++rr)
        for (int cc = 0; cc < lhs.cols() && proportional; ++cc) {
          if (s_ref(rr, cc).is_zero()) {
            if (!lhs(rr, cc).is_zero()) proportional = false;
          } else if (!(lhs(rr, cc) == beta * s_ref(rr, cc))) {
            proportional = false;
          }
        }
      if (!proportional)
        fail(errc::not_proportional,
             "S_y S_x is not proportional to S_{xy} at (" + g.label(x) + "," + g.label(y) +
                 ")");
      auto exp = beta.root_exponent(nq);
      if (!exp)
        fail(errc::not_proportional, "beta at (" + g.label(x) + "," + g.label(y) +
                                         ") is not in <xi_" + std::to_string(nq) + ">");
      // store beta(x,y) where lhs was S_y S_x, matching the defining relation
      table.exp[class_of[jx]][class_of[jy]] = *exp;
    }
  long gcd_all = table.n;
  for (const auto& row : table.exp)
    for (long k : row) gcd_all = std::gcd(gcd_all, k);
  table.m = static_cast<int>(table.n / gcd_all);
  return table;
}

CocycleReport verify_cocycle(const CocycleTable& t) {
  CocycleReport report;
  const auto& q = *t.quotient;
  const int n = t.n;
  auto e = [&](int x, int y) { return ((t.exp[x][y] % n) + n) % n; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if ((e(x, y) + e(q.mul(x, y), z) - e(x, q.mul(y, z)) - e(y, z)) % n != 0)
          report.cocycle_violations.push_back({x, y, z});
  for (int x = 0; x < n; ++x) {
    long row = 0, col = 0;
    for (int y = 0; y < n; ++y) {
      row += e(x, y);
      col += e(y, x);
    }
    if (row % n != 0) report.row_violations.push_back(x);
    if (col % n != 0) report.col_violations.push_back(x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar b = t.beta(x, y);
      Scalar p(1);
      for (int k = 0; k < n; ++k) p *= b;
      if (!(p == Scalar(1))) report.power_violations.push_back({x, y});
    }
  return report;
}

GogiResult gogi_pipeline(const MatrixRep& zeta, const DecomposeOptions& opts) {
  if (zeta.dim() != 1) fail(errc::not_a_rep, "gogi expects a character of Z0");
  Subgroup z = center(zeta.parent());
  for (int e : zeta.domain().elements())
    if (!z.contains(e)) fail(errc::not_central, "Z0 must be central in Z1");
  MatrixRep ind = induce(zeta);
  auto report = decompose(ind, opts);
  return GogiResult{std::move(report), std::move(ind)};
}

GogiiResult gogii_pipeline(const CocycleTable& table, const DecomposeOptions& opts) {
  // only the cocycle identity is needed for F2 to be a group; the row-product
  // identity holds for normalized families but not for every admissible table
  auto check = verify_cocycle(table);
  if (!check.cocycle_violations.empty() || !check.power_violations.empty())
    fail(errc::not_a_cocycle, "table fails the cocycle identity");
  const int n = table.n;
  const int m = table.m;
  // exponents relative to xi_m: beta = xi_n^k = xi_m^{k/(n/m)}
  const long step = n / m;
  std::vector<std::vector<long>> exp_m(n, std::vector<long>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long k = ((table.exp[x][y] % n) + n) % n;
      if (k % step != 0)
        fail(errc::not_a_cocycle, "beta value escapes the subgroup B");
      exp_m[x][y] = k / step;
    }
  GroupPtr f2 = build_extension(table.quotient, m, exp_m);
  const int eq = table.quotient->identity();
  std::vector<int> f0_elems;
  for (int a = 0; a < m; ++a) f0_elems.push_back(eq * m + a);
  Subgroup f0(f2, f0_elems);
  MatrixRep eta = m == 1 ? trivial_rep<Scalar>(f0)
                         : cyclic_character(f0, eq * m + 1, Scalar::root_of_unity(m, 1));
  MatrixRep ind = induce(eta);
  // the transversal {(x,1)} with trivial twists reproduces the table exactly
  IntertwinerFamily eta_family{eta, Subgroup::full(f2), {}, {}, {}, {}};
  for (int x = 0; x < n; ++x) {
    eta_family.transversal.push_back(x * m);
    eta_family.s.push_back(identity(1));
    auto [nx, hx] = order_mod(*f2, f0, x * m);
    eta_family.n_of.push_back(nx);
    eta_family.h_of.push_back(hx);
  }
  auto report = decompose(ind, opts, &eta_family.s);
  return GogiiResult{f2,
                     f0,
                     std::move(eta),
                     std::move(ind),
                     std::move(report),
                     std::move(eta_family)};
}

CMat transfer_component(const CMat& lambda, const std::vector<CMat>& s_big) {
  const int nb = static_cast<int>(lambda.rows());
  const int m = static_cast<int>(lambda.cols());
  if (static_cast<int>(s_big.size()) != nb)
    fail(errc::not_a_rep, "one twist per transversal element required");
  const int d = static_cast<int>(s_big[0].rows());
  CMat basis = CMat::Constant(nb * d, m * d, Scalar(0));
  for (int t = 0; t < nb; ++t)
    for (int l = 0; l < m; ++l) {
      if (lambda(t, l).is_zero()) continue;
      basis.block(t * d, l * d, d, d) = lambda(t, l) * s_big[t];
    }
  return basis;
}

} // namespace repkit
