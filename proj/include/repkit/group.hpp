#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repkit/errors.hpp"

namespace repkit {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table.  The table is validated on
/// construction: Latin square, full associativity and a two-sided identity.
class FiniteGroup {
public:
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table,
              int identity);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int x, int g) const { return mul(mul(inv(x), g), x); } // x^-1 g x
  int element_order(int a) const;

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::optional<int> index_of(const std::string& label) const;

  bool is_abelian() const;

private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> inverse_;
};

/// A subgroup is a parent group plus a sorted, closed element set containing
/// the identity.  Reps are defined on subgroups so that conjugation by an
/// ambient element and induction up to the parent need no re-embedding.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup full(GroupPtr g);
  static Subgroup trivial(GroupPtr g);
  /// Subgroup generated by the given elements.
  static Subgroup generated(GroupPtr g, const std::vector<int>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int g) const;
  /// Position of parent element g inside elements(); throws if absent.
  int pos(int g) const;
  bool is_normal() const;
  bool is_full() const { return size() == parent_->order(); }

  /// The subgroup as a standalone FiniteGroup (labels inherited), together
  /// with the map from new indices to parent indices (= elements()).
  GroupPtr as_group() const;

private:
  GroupPtr parent_;
  std::vector<int> elems_;
};

struct CosetTransversal {
  Subgroup subgroup;
  std::vector<int> reps; // one representative per left coset, identity first
};

Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, const Subgroup& h);

/// Left cosets xH; the identity coset comes first, the rest are ordered by
/// their smallest element index.
CosetTransversal cosets(const GroupPtr& g, const Subgroup& h);

/// Quotient G/N for normal N; element labels are the coset representatives'.
/// Returns the quotient and the projection map G -> G/N.
std::pair<GroupPtr, std::vector<int>> quotient(const GroupPtr& g, const Subgroup& n);

// builders
GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n); // order 2n
GroupPtr symmetric_group_s4();
GroupPtr quaternion_group(); // {1,-1,x,-x,y,-y,xy,-xy}
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// Named builder: "Z<n>", "D<n>", "S3", "S4", "Q8", "V4".
GroupPtr build_group(const std::string& name);

/// Central extension on Q x Z_m from a full table of cocycle exponents:
/// (x,a)(y,b) = (xy, beta(x,y) a b) with beta(x,y) = xi_m^{exp[x][y]}.
/// The exponent table must satisfy the cocycle identity and exp[e][e] = 0.
GroupPtr build_extension(const GroupPtr& q, int m,
                         const std::vector<std::vector<long>>& beta_exp_mod_m);

/// Label bijection preserving the tables, if one exists.
std::optional<std::vector<int>> isomorphic(const GroupPtr& a, const GroupPtr& b);

} // namespace repkit
