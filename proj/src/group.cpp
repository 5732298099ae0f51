#include "repkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace repkit {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<int>> table, int identity)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)),
      identity_(identity) {
  if (n_ == 0) fail(errc::not_a_group, "empty group");
  if (static_cast<int>(table_.size()) != n_)
    fail(errc::not_a_group, "table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      fail(errc::not_a_group, "table has wrong number of columns");
    for (int v : row)
      if (v < 0 || v >= n_) fail(errc::not_a_group, "table entry out of range");
  }
  // Latin square
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (int b = 0; b < n_; ++b) {
      if (seen_row[table_[a][b]]) fail(errc::not_a_group, "row is not a permutation");
      if (seen_col[table_[b][a]]) fail(errc::not_a_group, "column is not a permutation");
      seen_row[table_[a][b]] = true;
      seen_col[table_[b][a]] = true;
    }
  }
  if (identity_ < 0 || identity_ >= n_) fail(errc::bad_identity, "identity out of range");
  for (int a = 0; a < n_; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      fail(errc::bad_identity, "identity does not act trivially on " + labels_[a]);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          fail(errc::not_a_group, "associativity fails at (" + labels_[a] + "," +
                                      labels_[b] + "," + labels_[c] + ")");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == identity_) inverse_[a] = b;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::index_of(const std::string& label) const {
  for (int k = 0; k < n_; ++k)
    if (labels_[k] == label) return k;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!contains(parent_->identity()))
    fail(errc::not_a_subgroup, "subgroup must contain the identity");
  for (int a : elems_)
    for (int b : elems_)
      if (!contains(parent_->mul(a, b)))
        fail(errc::not_a_subgroup, "set is not closed under the group operation");
}

Subgroup Subgroup::full(GroupPtr g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) {
  int e = g->identity();
  return Subgroup(std::move(g), {e});
}

Subgroup Subgroup::generated(GroupPtr g, const std::vector<int>& gens) {
  std::set<int> seen(gens.begin(), gens.end());
  seen.insert(g->identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(seen.begin(), seen.end());
    for (int a : cur)
      for (int b : cur)
        if (seen.insert(g->mul(a, b)).second) grew = true;
  }
  return Subgroup(std::move(g), std::vector<int>(seen.begin(), seen.end()));
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

int Subgroup::pos(int g) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
  if (it == elems_.end() || *it != g)
    fail(errc::not_a_subgroup, "element not in subgroup");
  return static_cast<int>(it - elems_.begin());
}

bool Subgroup::is_normal() const {
  for (int x = 0; x < parent_->order(); ++x)
    for (int h : elems_)
      if (!contains(parent_->conj(x, h))) return false;
  return true;
}

GroupPtr Subgroup::as_group() const {
  const int k = size();
  std::vector<std::string> labels(k);
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    labels[a] = parent_->label(elems_[a]);
    for (int b = 0; b < k; ++b) table[a][b] = pos(parent_->mul(elems_[a], elems_[b]));
  }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table),
                                       pos(parent_->identity()));
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b)
      if (g->mul(a, b) != g->mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool commutes = true;
    for (int b : h.elements())
      if (g->mul(a, b) != g->mul(b, a)) { commutes = false; break; }
    if (commutes) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

CosetTransversal cosets(const GroupPtr& g, const Subgroup& h) {
  std::vector<bool> covered(g->order(), false);
  std::vector<int> reps;
  // identity coset first, remaining cosets by smallest member
  auto mark = [&](int x) {
    reps.push_back(x);
    for (int hh : h.elements()) covered[g->mul(x, hh)] = true;
  };
  mark(g->identity());
  for (int x = 0; x < g->order(); ++x)
    if (!covered[x]) mark(x);
  return CosetTransversal{h, std::move(reps)};
}

std::pair<GroupPtr, std::vector<int>> quotient(const GroupPtr& g, const Subgroup& n) {
  if (!n.is_normal()) fail(errc::not_a_subgroup, "quotient by a non-normal subgroup");
  CosetTransversal t = cosets(g, n);
  const int k = static_cast<int>(t.reps.size());
  std::vector<int> proj(g->order(), -1);
  for (int c = 0; c < k; ++c)
    for (int hh : n.elements()) proj[g->mul(t.reps[c], hh)] = c;
  std::vector<std::string> labels(k);
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    labels[a] = g->label(t.reps[a]);
    for (int b = 0; b < k; ++b) table[a][b] = proj[g->mul(t.reps[a], t.reps[b])];
  }
  auto q = std::make_shared<FiniteGroup>(std::move(labels), std::move(table),
                                         proj[g->identity()]);
  return {q, proj};
}

GroupPtr cyclic_group(int n) {
  if (n <= 0) fail(errc::not_a_group, "cyclic group order must be positive");
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table), 0);
}

GroupPtr dihedral_group(int n) {
  if (n < 1) fail(errc::not_a_group, "dihedral parameter must be >= 1");
  // elements r^a s^b, b in {0,1}; index = a + n*b
  const int order = 2 * n;
  std::vector<std::string> labels(order);
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  auto idx = [n](int a, int b) { return ((a % n) + n) % n + n * b; };
  for (int a = 0; a < n; ++a) {
    labels[idx(a, 0)] = a == 0 ? "e" : "r^" + std::to_string(a);
    labels[idx(a, 1)] = a == 0 ? "s" : "r^" + std::to_string(a) + "s";
  }
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          // (r^a1 s^b1)(r^a2 s^b2) = r^{a1 + a2*(-1)^b1} s^{b1+b2}
          int a = b1 == 0 ? a1 + a2 : a1 - a2;
          table[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
        }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table), 0);
}

GroupPtr symmetric_group_s4() {
  // all permutations of {0,1,2,3} in lexicographic order; composition (pq)(k) = p(q(k))
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do { perms.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < n; ++k) index[perms[k]] = k;
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    std::string l = "(";
    for (int k = 0; k < 4; ++k) l += std::to_string(perms[a][k]);
    labels[a] = l + ")";
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(4);
      for (int k = 0; k < 4; ++k) c[k] = perms[a][perms[b][k]];
      table[a][b] = index[c];
    }
  }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table),
                                       index[{0, 1, 2, 3}]);
}

GroupPtr quaternion_group() {
  // order: 1, -1, x, -x, y, -y, xy, -xy  (sign bit s, letter l)
  const std::vector<std::string> labels{"1", "-1", "x", "-x", "y", "-y", "xy", "-xy"};
  auto idx = [](int letter, int sign) { return 2 * letter + sign; };
  // letter products with quaternion signs: letters 0=1, 1=x, 2=y, 3=xy
  // x*y = xy, y*x = -xy, x*xy = -y? compute via i,j,k: x=i, y=j, xy=k
  // i*j=k, j*i=-k, j*k=i, k*j=-i, k*i=j, i*k=-j, i*i=j*j=k*k=-1
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[a][b]: extra minus in (letter a)*(letter b); filled from quaternion rules:
  // x*x=-1, x*y=+xy, x*xy=x*(x*y)=(x*x)*y=-y, y*x=-xy, y*y=-1, y*xy=+x? j*k=i yes,
  // xy*x=+y (k*i=j), xy*y=-x (k*j=-i), xy*xy=-1
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int la = 0; la < 4; ++la)
    for (int sa = 0; sa < 2; ++sa)
      for (int lb = 0; lb < 4; ++lb)
        for (int sb = 0; sb < 2; ++sb)
          table[idx(la, sa)][idx(lb, sb)] =
              idx(prod[la][lb], (sa + sb + sign[la][lb]) % 2);
  return std::make_shared<FiniteGroup>(labels, std::move(table), 0);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int n = a->order() * b->order();
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto idx = [&](int x, int y) { return x * b->order() + y; };
  for (int x1 = 0; x1 < a->order(); ++x1)
    for (int y1 = 0; y1 < b->order(); ++y1) {
      labels[idx(x1, y1)] = "(" + a->label(x1) + "," + b->label(y1) + ")";
      for (int x2 = 0; x2 < a->order(); ++x2)
        for (int y2 = 0; y2 < b->order(); ++y2)
          table[idx(x1, y1)][idx(x2, y2)] = idx(a->mul(x1, x2), b->mul(y1, y2));
    }
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table),
                                       idx(a->identity(), b->identity()));
}

GroupPtr build_group(const std::string& name) {
  if (name == "Q8") return quaternion_group();
  if (name == "S4") return symmetric_group_s4();
  if (name == "S3") return dihedral_group(3);
  if (name == "V4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name.size() > 1 && name[0] == 'Z') return cyclic_group(std::stoi(name.substr(1)));
  if (name.size() > 1 && name[0] == 'D') return dihedral_group(std::stoi(name.substr(1)));
  fail(errc::input_error, "unknown group builder '" + name + "'");
}

GroupPtr build_extension(const GroupPtr& q, int m,
                         const std::vector<std::vector<long>>& beta) {
  const int nq = q->order();
  if (m < 1) fail(errc::not_a_cocycle, "m must be >= 1");
  if (static_cast<int>(beta.size()) != nq)
    fail(errc::not_a_cocycle, "beta table must cover all of Q x Q");
  for (const auto& row : beta)
    if (static_cast<int>(row.size()) != nq)
      fail(errc::not_a_cocycle, "beta table must cover all of Q x Q");
  auto exp_of = [&](int x, int y) { return ((beta[x][y] % m) + m) % m; };
  const int e = q->identity();
  if (exp_of(e, e) != 0) fail(errc::not_a_cocycle, "beta(e,e) must be 1");
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      for (int z = 0; z < nq; ++z) {
        long lhs = exp_of(x, y) + exp_of(q->mul(x, y), z);
        long rhs = exp_of(x, q->mul(y, z)) + exp_of(y, z);
        if ((lhs - rhs) % m != 0)
          fail(errc::not_a_cocycle,
               "cocycle identity fails at (" + q->label(x) + "," + q->label(y) + "," +
                   q->label(z) + ")");
      }
  const int n = nq * m;
  auto idx = [&](int x, int a) { return x * m + a; };
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < nq; ++x)
    for (int a = 0; a < m; ++a) {
      std::string zl = a == 0 ? "1" : (m == 2 ? "-1" : "w^" + std::to_string(a));
      labels[idx(x, a)] = "(" + q->label(x) + "," + zl + ")";
      for (int y = 0; y < nq; ++y)
        for (int b = 0; b < m; ++b)
          table[idx(x, a)][idx(y, b)] =
              idx(q->mul(x, y), static_cast<int>((exp_of(x, y) + a + b) % m));
    }
  // FiniteGroup construction re-validates associativity and the identity
  return std::make_shared<FiniteGroup>(std::move(labels), std::move(table), idx(e, 0));
}

namespace {

bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
  const int n = a.order();
  if (next == n) return true;
  if (map[next] >= 0) return extend_isomorphism(a, b, map, used, next + 1);
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    if (a.element_order(next) != b.element_order(img)) continue;
    // tentatively assign and propagate through products with mapped elements
    std::vector<std::pair<int, int>> assigned;
    auto assign = [&](int src, int dst) -> bool {
      if (map[src] >= 0) return map[src] == dst;
      if (used[dst]) return false;
      map[src] = dst;
      used[dst] = true;
      assigned.push_back({src, dst});
      return true;
    };
    bool ok = assign(next, img);
    for (size_t k = 0; ok && k < assigned.size(); ++k) {
      int src = assigned[k].first;
      for (int other = 0; other < n && ok; ++other) {
        if (map[other] < 0) continue;
        ok = assign(a.mul(src, other), b.mul(map[src], map[other])) &&
             assign(a.mul(other, src), b.mul(map[other], map[src]));
      }
    }
    if (ok && extend_isomorphism(a, b, map, used, next + 1)) return true;
    for (auto& [src, dst] : assigned) {
      map[src] = -1;
      used[dst] = false;
    }
  }
  return false;
}

} // namespace

std::optional<std::vector<int>> isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  const int n = a->order();
  // element-order profiles must match
  std::multiset<int> pa, pb;
  for (int k = 0; k < n; ++k) {
    pa.insert(a->element_order(k));
    pb.insert(b->element_order(k));
  }
  if (pa != pb) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  map[a->identity()] = b->identity();
  used[b->identity()] = true;
  if (extend_isomorphism(*a, *b, map, used, 0)) return map;
  return std::nullopt;
}

} // namespace repkit
