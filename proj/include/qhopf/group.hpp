#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Finite group given by its multiplication table. Validated on construction.
class FiniteGroup {
 public:
  /// Throws AxiomError naming a witness if the table is not a group.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels, int identity);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(a); }
  /// Index of the element with this label; throws std::invalid_argument if unknown.
  int find(const std::string& label) const;

  bool is_abelian() const;
  /// Whether the subset is a subgroup (closed, contains e, closed under inverses).
  bool is_subgroup(const std::vector<int>& subset) const;
  /// Greedy generating set of the subgroup.
  std::vector<int> generators(const std::vector<int>& subgroup) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_;
  std::vector<int> inverse_;
};

/// Cyclic group C_n = <c>, elements e, c, c^2, ...
FiniteGroup cyclic_group(int n);
/// S_3 with r = (0 1 2) -> (1 2 0), s = the transposition of 0 and 1, and
/// elements e, r, r^2, s, sr, sr^2 where sr means s*r.
FiniteGroup symmetric_group3();
/// Direct product with labels "(a,b)"; index of (a,b) is a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Catalog names: c2, c3, c4, c2xc2, s3.
std::optional<FiniteGroup> catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

/// Group algebra k[G].
HopfData group_algebra(const FiniteGroup& g);

}  // namespace qhopf
