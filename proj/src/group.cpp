#include "qhopf/group.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                         int identity)
    : table_(std::move(table)), labels_(std::move(labels)), identity_(identity) {
  const int n = order();
  if (n == 0) throw AxiomError("empty group table");
  if (static_cast<int>(labels_.size()) != n) throw AxiomError("label count differs from order");
  if (identity_ < 0 || identity_ >= n) throw AxiomError("identity index out of range");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw AxiomError("table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw AxiomError("table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[identity_][a] != a || table_[a][identity_] != a) {
      throw AxiomError("identity fails at " + labels_[a]);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw AxiomError("associativity fails at (" + labels_[a] + ", " + labels_[b] + ", " +
                           labels_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw AxiomError("no inverse for " + labels_[a]);
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != n) throw AxiomError("duplicate element labels");
}

int FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown group element '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& subset) const {
  std::vector<bool> in(order(), false);
  for (int a : subset) {
    if (a < 0 || a >= order()) return false;
    in[a] = true;
  }
  if (!in[identity_]) return false;
  for (int a : subset) {
    if (!in[inverse_[a]]) return false;
    for (int b : subset) {
      if (!in[table_[a][b]]) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::generators(const std::vector<int>& subgroup) const {
  std::vector<int> gens;
  std::vector<bool> reached(order(), false);
  reached[identity_] = true;
  std::vector<int> span{identity_};
  for (int a : subgroup) {
    if (reached[a]) continue;
    gens.push_back(a);
    // Close under right multiplication by the generators found so far.
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < span.size(); ++i) {
        for (int g : gens) {
          const int p = table_[span[i]][g];
          if (!reached[p]) {
            reached[p] = true;
            span.push_back(p);
            grew = true;
          }
        }
      }
    }
  }
  return gens;
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "e" : (a == 1 ? "c" : "c^" + std::to_string(a)));
  }
  return FiniteGroup(std::move(t), std::move(labels), 0);
}

FiniteGroup symmetric_group3() {
  using Perm = std::array<int, 3>;
  auto compose = [](const Perm& p, const Perm& q) {  // (p q)(i) = p(q(i))
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  const Perm e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  const Perm r2 = compose(r, r);
  const std::vector<Perm> els{e, r, r2, s, compose(s, r), compose(s, r2)};
  const std::vector<std::string> labels{"e", "r", "r^2", "s", "sr", "sr^2"};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const Perm p = compose(els[a], els[b]);
      t[a][b] = static_cast<int>(std::find(els.begin(), els.end(), p) - els.begin());
    }
  }
  return FiniteGroup(std::move(t), labels, 0);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), n = h.order();
  std::vector<std::vector<int>> t(m * n, std::vector<int>(m * n));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < n; ++d) t[a * n + b][c * n + d] = g.mul(a, c) * n + h.mul(b, d);
      }
    }
  }
  return FiniteGroup(std::move(t), std::move(labels), g.identity() * n + h.identity());
}

std::optional<FiniteGroup> catalog_group(const std::string& name) {
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "c2xc2") return direct_product(cyclic_group(2), cyclic_group(2));
  if (name == "s3") return symmetric_group3();
  return std::nullopt;
}

std::vector<std::string> catalog_group_names() { return {"c2", "c3", "c4", "c2xc2", "s3"}; }

HopfData group_algebra(const FiniteGroup& g) {
  return group_algebra(g.table(), g.labels(), g.identity());
}

}  // namespace qhopf
