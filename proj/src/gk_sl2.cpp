#include "repkit/gk_sl2.hpp"

namespace repkit {

namespace {

template <typename S>
S half(long num) {
  if constexpr (std::is_same_v<S, Scalar>) return Scalar(mpq_class(num, 2));
  else return S(num / 2.0);
}

template <typename S>
bool col_zero(const MatT<S>& m, int c, double tol) {
  for (int r = 0; r < m.rows(); ++r) {
    if constexpr (std::is_same_v<S, Scalar>) {
      if (!m(r, c).is_zero()) return false;
    } else {
      if (std::abs(m(r, c)) > tol) return false;
    }
  }
  return true;
}

} // namespace

template <typename S>
WindowT<S> make_window(const S& lambda, int parity, int J) {
  if (parity != 0 && parity != 1) fail(errc::bad_window, "parity must be 0 or 1");
  if (J < 4) fail(errc::bad_window, "window bound must be at least 4");
  if (J % 2 != parity) fail(errc::bad_window, "window bound must match the parity");
  WindowT<S> w;
  w.lambda = lambda;
  w.parity = parity;
  w.J = J;
  const int n = w.count();
  w.h = MatT<S>::Constant(n, n, S(0));
  w.x = MatT<S>::Constant(n, n, S(0));
  w.y = MatT<S>::Constant(n, n, S(0));
  w.irreducible = true;
  for (int i = 0; i < n; ++i) {
    const int j = w.weight(i);
    w.h(i, i) = S(j);
    if (j + 2 <= J) w.x(w.idx(j + 2), i) = half<S>(1) * (lambda + S(j + 1));
    if (j - 2 >= -J) w.y(w.idx(j - 2), i) = half<S>(1) * (lambda - S(j - 1));
    if constexpr (std::is_same_v<S, Scalar>) {
      if ((lambda + S(j + 1)).is_zero()) w.irreducible = false;
    } else {
      if (std::abs(lambda + S(j + 1)) < 1e-12) w.irreducible = false;
    }
  }
  return w;
}

template <typename S>
RelationReport check_sl2_relations(const WindowT<S>& w, double tol) {
  RelationReport report;
  MatT<S> hx = w.h * w.x - w.x * w.h - S(2) * w.x;
  MatT<S> hy = w.h * w.y - w.y * w.h + S(2) * w.y;
  MatT<S> xy = w.x * w.y - w.y * w.x - w.h;
  for (int i = 0; i < w.count(); ++i) {
    const int j = w.weight(i);
    if (!w.interior(j)) continue;
    bool bad = false;
    if (!col_zero(hx, i, tol)) { report.hx_ok = false; bad = true; }
    if (!col_zero(hy, i, tol)) { report.hy_ok = false; bad = true; }
    if (!col_zero(xy, i, tol)) { report.xy_ok = false; bad = true; }
    if (bad) report.failures.push_back(j);
  }
  return report;
}

template <typename S>
MatT<S> s_x_operator(const WindowT<S>& w) {
  const int n = w.count();
  MatT<S> f = MatT<S>::Constant(n, n, S(0));
  for (int i = 0; i < n; ++i) f(w.idx(-w.weight(i)), i) = S(1);
  return f;
}

template <typename S>
RelationReport check_s_x_intertwining(const WindowT<S>& w, double tol) {
  RelationReport report;
  MatT<S> f = s_x_operator(w);
  // Ad(x)H = -H, Ad(x)X = Y, Ad(x)Y = X
  MatT<S> dh = MatT<S>(-w.h) * f - f * w.h;
  MatT<S> dx = w.y * f - f * w.x;
  MatT<S> dy = w.x * f - f * w.y;
  for (int i = 0; i < w.count(); ++i) {
    const int j = w.weight(i);
    if (!w.interior(j)) continue;
    bool bad = false;
    if (!col_zero(dh, i, tol)) { report.hx_ok = false; bad = true; }
    if (!col_zero(dx, i, tol)) { report.hy_ok = false; bad = true; }
    if (!col_zero(dy, i, tol)) { report.xy_ok = false; bad = true; }
    if (bad) report.failures.push_back(j);
  }
  return report;
}

InducedWindow induce_disconnected(const GKWindow& w) {
  if (!w.irreducible) fail(errc::reducible_base, "base window is reducible");
  const int n = w.count();
  const int dim = 2 * n;
  InducedWindow out;
  out.base = w;
  auto zeros = [&] { return CMat::Constant(dim, dim, Scalar(0)); };
  out.h = zeros();
  out.x = zeros();
  out.y = zeros();
  out.component = zeros();
  // x-slice carries the Ad(x)-twisted action
  out.h.block(0, 0, n, n) = w.h;
  out.h.block(n, n, n, n) = -w.h;
  out.x.block(0, 0, n, n) = w.x;
  out.x.block(n, n, n, n) = w.y;
  out.y.block(0, 0, n, n) = w.y;
  out.y.block(n, n, n, n) = w.x;
  out.component.block(0, n, n, n) = identity(n);
  out.component.block(n, 0, n, n) = identity(n);
  CMat f = s_x_operator(w);
  CMat twist = zeros();
  twist.block(0, n, n, n) = f;
  twist.block(n, 0, n, n) = f;
  Scalar hlf(mpq_class(1, 2));
  out.p0 = hlf * (identity(dim) + twist);
  out.p1 = hlf * (identity(dim) - twist);
  for (int j = w.parity; j <= w.J; j += 2) {
    KTypePair pair;
    pair.weight = j;
    if (j == 0) {
      pair.z0 = CMat::Constant(dim, 1, Scalar(0));
      pair.z1 = CMat::Constant(dim, 1, Scalar(0));
      pair.z0(w.idx(0), 0) = Scalar(1);
      pair.z0(n + w.idx(0), 0) = Scalar(1);
      pair.z1(w.idx(0), 0) = Scalar(1);
      pair.z1(n + w.idx(0), 0) = Scalar(-1);
    } else {
      pair.z0 = CMat::Constant(dim, 2, Scalar(0));
      pair.z1 = CMat::Constant(dim, 2, Scalar(0));
      // span(v_j + x v_{-j}, v_{-j} + x v_j) and the minus-sign twin
      pair.z0(w.idx(j), 0) = Scalar(1);
      pair.z0(n + w.idx(-j), 0) = Scalar(1);
      pair.z0(w.idx(-j), 1) = Scalar(1);
      pair.z0(n + w.idx(j), 1) = Scalar(1);
      pair.z1(w.idx(j), 0) = Scalar(1);
      pair.z1(n + w.idx(-j), 0) = Scalar(-1);
      pair.z1(w.idx(-j), 1) = Scalar(1);
      pair.z1(n + w.idx(j), 1) = Scalar(-1);
    }
    out.ktypes.push_back(std::move(pair));
  }
  for (int i = 0; i < n; ++i)
    if (w.interior(w.weight(i))) {
      out.interior_columns.push_back(i);
      out.interior_columns.push_back(n + i);
    }
  return out;
}

TensorModel tensor_model(const Scalar& lambda1, const Scalar& lambda2, int parity1,
                         int parity2, int J) {
  if (parity1 % 2 != parity2 % 2)
    fail(errc::bad_parity,
         "central element acts by (-1)^(p1+p2); parities must agree for the "
         "tensor action to descend");
  const int j1 = (J % 2 == parity1 % 2) ? J : J + 1;
  GKWindow w1 = make_window<Scalar>(lambda1, parity1 % 2, j1);
  GKWindow w2 = make_window<Scalar>(lambda2, parity2 % 2, j1);
  GroupPtr cover = quaternion_group();
  const int n = w1.count();
  const int dim = n * n;
  CMat id = identity(n);
  CMat f = s_x_operator(w1);
  // component subgroup {1,-1}: -1 acts by the central character of a factor
  Scalar eps = parity1 % 2 == 1 ? Scalar(-1) : Scalar(1);
  int one = cover->identity();
  int minus1 = *cover->index_of("-1");
  Subgroup g0(cover, {one, minus1});
  // the base rep on the tensor space: +/-1 acting as scalars
  std::vector<CMat> mats(2);
  mats[g0.pos(one)] = identity(dim);
  mats[g0.pos(minus1)] = eps * identity(dim);
  MatrixRep base(g0, std::move(mats));

  IntertwinerFamily family{std::move(base), Subgroup::full(cover), {}, {}, {}, {}};
  auto add = [&](const std::string& label, CMat s) {
    int e = *cover->index_of(label);
    family.transversal.push_back(e);
    family.s.push_back(std::move(s));
    int cur = e, nn = 1;
    while (cur != one && cur != minus1) {
      cur = cover->mul(cur, e);
      ++nn;
    }
    family.n_of.push_back(nn);
    family.h_of.push_back(cur);
  };
  add("1", identity(dim));
  add("x", kron<Scalar>(f, id));
  add("y", kron<Scalar>(id, f));
  add("xy", kron<Scalar>(f, f));

  std::vector<CMat> lie_ops = {kron<Scalar>(w1.h, id), kron<Scalar>(w1.x, id),
                               kron<Scalar>(w1.y, id), kron<Scalar>(id, w2.h),
                               kron<Scalar>(id, w2.x), kron<Scalar>(id, w2.y)};
  return TensorModel{std::move(w1),     std::move(w2),
                     std::move(cover),  std::move(family),
                     std::move(lie_ops), {"H1", "X1", "Y1", "H2", "X2", "Y2"},
                     dim};
}

CMat twisted_right_translation(const IntertwinerFamily& family, int u_index) {
  const auto& g = *family.base.parent();
  const auto& pi = family.base;
  const int nb = static_cast<int>(family.transversal.size());
  const int d = pi.dim();
  const int u = family.transversal[u_index];
  // class lookup over the ambient subgroup
  auto class_of = [&](int e) {
    for (int j = 0; j < nb; ++j) {
      int n0 = g.mul(g.inv(family.transversal[j]), e);
      if (pi.domain().contains(n0)) return std::make_pair(j, n0);
    }
    fail(errc::not_a_subgroup, "element not covered by the transversal");
  };
  CMat out = CMat::Constant(nb * d, nb * d, Scalar(0));
  for (int jt = 0; jt < nb; ++jt) {
    auto [jz, n0] = class_of(g.mul(family.transversal[jt], u));
    out.block(jz * d, jt * d, d, d) = pi.at(n0) * family.s[u_index];
  }
  return out;
}

CMat induced_translation(const IntertwinerFamily& family, int a) {
  const auto& g = *family.base.parent();
  const auto& pi = family.base;
  const int nb = static_cast<int>(family.transversal.size());
  const int d = pi.dim();
  auto class_of = [&](int e) {
    for (int j = 0; j < nb; ++j) {
      int n0 = g.mul(g.inv(family.transversal[j]), e);
      if (pi.domain().contains(n0)) return std::make_pair(j, n0);
    }
    fail(errc::not_a_subgroup, "element not covered by the transversal");
  };
  CMat out = CMat::Constant(nb * d, nb * d, Scalar(0));
  for (int jt = 0; jt < nb; ++jt) {
    auto [jz, n0] = class_of(g.mul(a, family.transversal[jt]));
    out.block(jz * d, jt * d, d, d) = pi.at(n0);
  }
  return out;
}

InducedTensorWindow induce_tensor(const TensorModel& model) {
  const int d = model.dim;
  const int nb = 4;
  InducedTensorWindow out{model, {}, {}, {}, {}, {}, nb * d};
  const int n = model.w1.count();
  CMat id = identity(n);

  // Ad-twists per component: x flips factor 1, y flips factor 2, xy both
  auto block_diag = [&](const CMat& at_e, const CMat& at_x, const CMat& at_y,
                        const CMat& at_xy) {
    CMat m = CMat::Constant(out.dim, out.dim, Scalar(0));
    m.block(0, 0, d, d) = at_e;
    m.block(d, d, d, d) = at_x;
    m.block(2 * d, 2 * d, d, d) = at_y;
    m.block(3 * d, 3 * d, d, d) = at_xy;
    return m;
  };
  CMat h1 = kron<Scalar>(model.w1.h, id), x1 = kron<Scalar>(model.w1.x, id),
       y1 = kron<Scalar>(model.w1.y, id);
  CMat h2 = kron<Scalar>(id, model.w2.h), x2 = kron<Scalar>(id, model.w2.x),
       y2 = kron<Scalar>(id, model.w2.y);
  out.lie_ops = {
      block_diag(h1, CMat(-h1), h1, CMat(-h1)), // H1: flipped on x- and xy-slices
      block_diag(x1, y1, x1, y1),               // X1
      block_diag(y1, x1, y1, x1),               // Y1
      block_diag(h2, h2, CMat(-h2), CMat(-h2)), // H2: flipped on y- and xy-slices
      block_diag(x2, x2, y2, y2),               // X2
      block_diag(y2, y2, x2, x2),               // Y2
  };
  out.lie_names = model.lie_names;
  for (const std::string& name : {"x", "y", "xy"}) {
    out.translations.push_back(
        induced_translation(model.family, *model.cover->index_of(name)));
    out.translation_names.push_back(name);
  }
  for (int b = 0; b < nb; ++b)
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2)
        if (model.w1.interior(model.w1.weight(i1)) &&
            model.w2.interior(model.w2.weight(i2)))
          out.interior_columns.push_back(b * d + i1 * n + i2);
  return out;
}

CVec sparse_apply(const CMat& a, const CVec& v) {
  CVec out = CVec::Constant(a.rows(), Scalar(0));
  for (int k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    for (int r = 0; r < a.rows(); ++r) {
      if (a(r, k).is_zero()) continue;
      out(r) += a(r, k) * v(k);
    }
  }
  return out;
}

bool commute_on_columns(const CMat& a, const CMat& b, const std::vector<int>& cols) {
  for (int c : cols) {
    CVec ab = sparse_apply(a, CVec(b.col(c)));
    CVec ba = sparse_apply(b, CVec(a.col(c)));
    for (int r = 0; r < ab.size(); ++r)
      if (!(ab(r) == ba(r))) return false;
  }
  return true;
}

// explicit instantiations
template WindowT<Scalar> make_window<Scalar>(const Scalar&, int, int);
template WindowT<CD> make_window<CD>(const CD&, int, int);
template RelationReport check_sl2_relations<Scalar>(const WindowT<Scalar>&, double);
template RelationReport check_sl2_relations<CD>(const WindowT<CD>&, double);
template MatT<Scalar> s_x_operator<Scalar>(const WindowT<Scalar>&);
template MatT<CD> s_x_operator<CD>(const WindowT<CD>&);
template RelationReport check_s_x_intertwining<Scalar>(const WindowT<Scalar>&, double);
template RelationReport check_s_x_intertwining<CD>(const WindowT<CD>&, double);

} // namespace repkit
