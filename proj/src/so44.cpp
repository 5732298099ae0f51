#include "repkit/so44.hpp"

#include <set>

namespace repkit {

namespace {

CMat mat8() { return CMat::Constant(8, 8, Scalar(0)); }

CMat from_rows(const std::array<std::array<int, 4>, 4>& rows) {
  CMat m = CMat::Constant(4, 4, Scalar(0));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Scalar(rows[r][c]);
  return m;
}

// embed a 4x4 block: corner 0 = A (rows/cols 0-3), 1 = C (rows/cols 4-7)
CMat embed_diag_block(const CMat& b, int corner) {
  CMat m = mat8();
  int off = corner * 4;
  m.block(off, off, 4, 4) = b;
  return m;
}

CMat embed_b_block(const CMat& b) {
  CMat m = mat8();
  m.block(0, 4, 4, 4) = b;
  m.block(4, 0, 4, 4) = b.transpose();
  return m;
}

// the sixteen B-block source/image pairs of the cyclic automorphism
const std::array<std::array<std::array<int, 4>, 4>, 16>& phi_b_sources() {
  static const std::array<std::array<std::array<int, 4>, 4>, 16> s = {{
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
      {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}},
      {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}},
      {{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}},
      {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}},
      {{{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}},
      {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}},
      {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}},
  }};
  return s;
}

const std::array<std::array<std::array<int, 4>, 4>, 16>& phi_b_images() {
  static const std::array<std::array<std::array<int, 4>, 4>, 16> s = {{
      {{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}},
      {{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
      {{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}},
      {{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}},
      {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
      {{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}},
      {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}},
      {{{0, 0, -1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}},
      {{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}}},
      {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}},
      {{{0, 0, -1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
  }};
  return s;
}

// generators of so(3)_1 and so(3)_2 as 4x4 blocks
CMat gen_x1() { return from_rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}}); }
CMat gen_y1() { return from_rows({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}}); }
CMat gen_z1() { return from_rows({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}}); }
CMat gen_x2() { return from_rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}}); }
CMat gen_y2() { return from_rows({{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}}); }
CMat gen_z2() { return from_rows({{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}}); }

} // namespace

LieAlgebraBasis::LieAlgebraBasis() {
  // 6 + 6 elementary skews in A and C
  for (int corner = 0; corner < 2; ++corner)
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        CMat m = mat8();
        int off = corner * 4;
        m(off + p, off + q) = Scalar(1);
        m(off + q, off + p) = Scalar(-1);
        basis_.push_back(std::move(m));
      }
  // 16 B-block pairs
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CMat m = mat8();
      m(i, 4 + j) = Scalar(1);
      m(4 + j, i) = Scalar(1);
      basis_.push_back(std::move(m));
    }
  for (const auto& b : basis_)
    if (!satisfies_defining_relation(b))
      fail(errc::not_algebra_stable, "basis element violates the defining relation");
  // structure constants, with closure validated entry by entry
  structure_.resize(28 * 28);
  for (int i = 0; i < 28; ++i)
    for (int j = 0; j < 28; ++j) {
      CVec coords = expand(bracket(basis_[i], basis_[j]));
      for (int k = 0; k < 28; ++k)
        if (!coords(k).is_zero()) structure_[i * 28 + j].push_back({k, coords(k)});
    }
}

bool LieAlgebraBasis::satisfies_defining_relation(const CMat& m) {
  CMat i44 = identity(8);
  for (int k = 4; k < 8; ++k) i44(k, k) = Scalar(-1);
  return is_zero(CMat(m.transpose() * i44 + i44 * m));
}

CVec LieAlgebraBasis::expand(const CMat& m) const {
  CVec coords = CVec::Constant(28, Scalar(0));
  int idx = 0;
  for (int corner = 0; corner < 2; ++corner)
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        int off = corner * 4;
        coords(idx++) = m(off + p, off + q);
      }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) coords(idx++) = m(i, 4 + j);
  if (!is_zero(CMat(from_coords(coords) - m)))
    fail(errc::not_algebra_stable, "matrix does not lie in so(4,4)");
  return coords;
}

CMat LieAlgebraBasis::from_coords(const CVec& coords) const {
  CMat m = mat8();
  for (int k = 0; k < 28; ++k) {
    if (coords(k).is_zero()) continue;
    m += coords(k) * basis_[k];
  }
  return m;
}

bool LieAlgebraBasis::jacobi_holds() const {
  for (int i = 0; i < 28; ++i)
    for (int j = 0; j < 28; ++j)
      for (int k = 0; k < 28; ++k) {
        std::vector<Scalar> acc(28, Scalar(0));
        auto add_term = [&](int a, int b, int c) {
          // [[b_a, b_b], b_c]
          for (const auto& [m, f] : structure(a, b))
            for (const auto& [l, g] : structure(m, c)) acc[l] += f * g;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (const auto& v : acc)
          if (!v.is_zero()) return false;
      }
  return true;
}

LieAlgebraBasis build_so44() { return LieAlgebraBasis(); }

K0Generators k0_generators() {
  K0Generators out;
  out.triples[0] = {embed_diag_block(gen_x1(), 0), embed_diag_block(gen_y1(), 0),
                    embed_diag_block(gen_z1(), 0)};
  out.triples[1] = {embed_diag_block(gen_x2(), 0), embed_diag_block(gen_y2(), 0),
                    embed_diag_block(gen_z2(), 0)};
  // so(3)_3 and so(3)_4 repeat the same patterns inside the C block
  out.triples[2] = {embed_diag_block(gen_x1(), 1), embed_diag_block(gen_y1(), 1),
                    embed_diag_block(gen_z1(), 1)};
  out.triples[3] = {embed_diag_block(gen_x2(), 1), embed_diag_block(gen_y2(), 1),
                    embed_diag_block(gen_z2(), 1)};
  return out;
}

AlgebraMap conj_map(const LieAlgebraBasis& alg, const CMat& g, const std::string& name) {
  CMat ginv = inverse(g);
  CMat m(28, 28);
  for (int k = 0; k < 28; ++k) {
    CMat image = g * alg.basis()[k] * ginv;
    m.col(k) = alg.expand(image); // throws if the image leaves the algebra
  }
  return AlgebraMap{name, std::move(m)};
}

AlgebraMap phi_1234(const LieAlgebraBasis& alg) {
  K0Generators gens = k0_generators();
  std::vector<std::pair<CMat, CMat>> pairs;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k)
      pairs.push_back({gens.triples[i][k], gens.triples[(i + 1) % 4][k]});
  for (int k = 0; k < 16; ++k)
    pairs.push_back({embed_b_block(from_rows(phi_b_sources()[k])),
                     embed_b_block(from_rows(phi_b_images()[k]))});
  CMat src(28, 28), img(28, 28);
  for (size_t k = 0; k < pairs.size(); ++k) {
    src.col(static_cast<int>(k)) = alg.expand(pairs[k].first);
    img.col(static_cast<int>(k)) = alg.expand(pairs[k].second);
  }
  if (rank_of(src) != 28)
    fail(errc::inconsistent_images, "listed sources do not span the algebra");
  CMat m = img * inverse(src);
  if (rank_of(m) != 28)
    fail(errc::inconsistent_images, "assembled map is singular");
  return AlgebraMap{"phi1234", std::move(m)};
}

namespace {
CMat diag_signs(const std::array<int, 8>& signs) {
  CMat g = identity(8);
  for (int k = 0; k < 8; ++k) g(k, k) = Scalar(signs[k]);
  return g;
}
} // namespace

AlgebraMap map_x12(const LieAlgebraBasis& alg) {
  return conj_map(alg, diag_signs({1, 1, -1, 1, 1, 1, 1, 1}), "x12");
}

AlgebraMap map_x34(const LieAlgebraBasis& alg) {
  return conj_map(alg, diag_signs({1, 1, 1, 1, 1, 1, -1, 1}), "x34");
}

AlgebraMap map_swap(const LieAlgebraBasis& alg) {
  CMat g = CMat::Constant(8, 8, Scalar(0));
  for (int k = 0; k < 4; ++k) {
    g(k, 4 + k) = Scalar(1);
    g(4 + k, k) = Scalar(1);
  }
  return conj_map(alg, g, "swap");
}

AlgebraMap map_cartan(const LieAlgebraBasis& alg) {
  return conj_map(alg, diag_signs({1, 1, 1, 1, -1, -1, -1, -1}), "cartan");
}

AutomorphismReport verify_automorphism(const LieAlgebraBasis& alg, const AlgebraMap& map) {
  AutomorphismReport report;
  for (int i = 0; i < 28; ++i)
    for (int j = 0; j < 28; ++j) {
      CVec lhs = CVec::Constant(28, Scalar(0));
      for (const auto& [k, f] : alg.structure(i, j)) lhs += f * map.matrix.col(k);
      CMat a = alg.from_coords(CVec(map.matrix.col(i)));
      CMat b = alg.from_coords(CVec(map.matrix.col(j)));
      CVec rhs = alg.expand(LieAlgebraBasis::bracket(a, b));
      bool bad = false;
      for (int k = 0; k < 28; ++k)
        if (!(lhs(k) == rhs(k))) bad = true;
      if (bad) report.violations.push_back({i, j});
    }
  return report;
}

namespace {

// canonical row space of a set of coordinate vectors
CMat canonical_span(const std::vector<CVec>& vecs) {
  CMat m(static_cast<int>(vecs.size()), 28);
  for (size_t k = 0; k < vecs.size(); ++k) m.row(static_cast<int>(k)) = vecs[k].transpose();
  Rref f = rref(std::move(m));
  CMat out(f.rank, 28);
  for (int r = 0; r < f.rank; ++r) out.row(r) = f.R.row(r);
  return out;
}

bool same_matrix(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(CMat(a - b));
}

} // namespace

std::array<int, 4> induced_permutation(const LieAlgebraBasis& alg, const AlgebraMap& map) {
  K0Generators gens = k0_generators();
  std::vector<CMat> summand_spans;
  for (int i = 0; i < 4; ++i) {
    std::vector<CVec> v;
    for (int k = 0; k < 3; ++k) v.push_back(alg.expand(gens.triples[i][k]));
    summand_spans.push_back(canonical_span(v));
  }
  std::array<int, 4> perm{};
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    std::vector<CVec> img;
    for (int k = 0; k < 3; ++k)
      img.push_back(CVec(map.matrix * alg.expand(gens.triples[i][k])));
    CMat span = canonical_span(img);
    int target = -1;
    for (int j = 0; j < 4; ++j)
      if (same_matrix(span, summand_spans[j])) { target = j; break; }
    if (target < 0 || used[target])
      fail(errc::not_summand_permuting,
           "image of so(3)_" + std::to_string(i + 1) + " is not a summand");
    used[target] = true;
    perm[i] = target;
  }
  return perm;
}

int s4_generation_check(const std::vector<std::array<int, 4>>& perms) {
  std::set<std::array<int, 4>> closure;
  closure.insert({0, 1, 2, 3});
  for (const auto& p : perms) closure.insert(p);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::array<int, 4>> cur(closure.begin(), closure.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        std::array<int, 4> c{};
        for (int k = 0; k < 4; ++k) c[k] = a[b[k]];
        if (closure.insert(c).second) grew = true;
      }
  }
  return static_cast<int>(closure.size());
}

int map_order(const AlgebraMap& map, int bound) {
  CMat power = map.matrix;
  CMat id = identity(28);
  for (int k = 1; k <= bound; ++k) {
    if (is_zero(CMat(power - id))) return k;
    power = power * map.matrix;
  }
  return 0;
}

} // namespace repkit
