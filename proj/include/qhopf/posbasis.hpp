#pragma once

// Hopf algebras with positive bases H(G; G+, G-) built from a unique
// factorization G = G+ G-, and their positive quasitriangular structures
// R(xi, eta) for homomorphism pairs xi, eta : G+ -> G-.

#include <memory>
#include <string>
#include <vector>

#include "qhopf/group.hpp"
#include "qhopf/quasitri.hpp"

namespace qhopf {

/// G = G+ G- with unique factorizations g = g+ g- = gbar- gbar+ and the four
/// induced actions, all tabulated by group index:
///   x u = (^x u)(x^u)    for x in G-, u in G+
///   u x = (^u x)(u^x)    for u in G+, x in G-
class UniqueFactorization {
 public:
  /// Validates subgroups and bijectivity of G+ x G- -> G. Throws AxiomError.
  static UniqueFactorization verify(FiniteGroup g, std::vector<int> plus, std::vector<int> minus);

  const FiniteGroup& group() const { return g_; }
  const std::vector<int>& plus() const { return plus_; }
  const std::vector<int>& minus() const { return minus_; }
  bool in_plus(int a) const { return in_plus_[a]; }
  bool in_minus(int a) const { return in_minus_[a]; }

  int plus_part(int g) const { return plus_part_[g]; }    // g+
  int minus_part(int g) const { return minus_part_[g]; }  // g-
  int bar_minus(int g) const { return bar_minus_[g]; }    // gbar-
  int bar_plus(int g) const { return bar_plus_[g]; }      // gbar+

  /// ^x u, in G+.
  int minus_on_plus_left(int x, int u) const { return plus_part(g_.mul(x, u)); }
  /// x^u, in G-.
  int plus_on_minus_right(int x, int u) const { return minus_part(g_.mul(x, u)); }
  /// ^u x, in G-.
  int plus_on_minus_left(int u, int x) const { return bar_minus(g_.mul(u, x)); }
  /// u^x, in G+.
  int minus_on_plus_right(int u, int x) const { return bar_plus(g_.mul(u, x)); }

 private:
  explicit UniqueFactorization(FiniteGroup g) : g_(std::move(g)) {}

  FiniteGroup g_;
  std::vector<int> plus_, minus_;
  std::vector<bool> in_plus_, in_minus_;
  std::vector<int> plus_part_, minus_part_, bar_minus_, bar_plus_;
};

/// The six relations tying the actions to the two decompositions, checked
/// for every g (and every pair for the last two).
CheckReport derived_action_identities(const UniqueFactorization& uf);

/// {g}{h} = delta_{g+^{g-}, h+} {g h-},  1 = sum {u},
/// Delta{g} = sum_{h+} {g+ h+^{-1} (^{h+} g-)} (x) {h+ g-},
/// eps{g} = delta_{g+, e},  S{g} = {g^{-1}}.
HopfData build_positive_hopf(const UniqueFactorization& uf);

/// xi, eta : G+ -> G-, tabulated by group index (-1 off G+).
struct HomPair {
  std::vector<int> xi;
  std::vector<int> eta;
  bool operator==(const HomPair&) const = default;
};

/// All homomorphisms G+ -> G-, found by assigning images to a generating set
/// and verifying the extension.
std::vector<std::vector<int>> enumerate_homomorphisms(const UniqueFactorization& uf);

/// Conditions rel6..rel10 (named "rel6".."rel10").
CheckReport pair_conditions(const UniqueFactorization& uf, const HomPair& p);
/// The equivalent set rel11..rel15, evaluated independently.
CheckReport pair_conditions_dual(const UniqueFactorization& uf, const HomPair& p);

/// Every pair satisfying rel6..rel10. Each returned pair is also checked
/// against rel11..rel15; a mismatch throws CrossCheckError.
std::vector<HomPair> enumerate_hom_pairs(const UniqueFactorization& uf);

struct PositiveQt {
  QtStructure qt;
  /// Each (u, v) term landed on a distinct basis tensor (coefficients in {0,1}).
  bool positive = true;
};

/// R(xi, eta) = sum_{u,v in G+} {u (eta(v)^u)^{-1}} (x) {v xi(u)}. Asserts
/// positivity and verify_qt; throws AxiomError on failure.
PositiveQt build_R_xi_eta(const UniqueFactorization& uf, std::shared_ptr<const HopfData> host,
                          const HomPair& p);

/// The three group-level conditions equivalent to pseudotriangularity of
/// R(xi, eta), evaluated verbatim over all (u, v, s) in G+^3.
Verdict check_pseudo_conditions(const UniqueFactorization& uf, const HomPair& p);

bool is_normal(const UniqueFactorization& uf, const HomPair& p);

/// eta(uv) == eta(vu) for all u, v in G+. Throws std::invalid_argument if the
/// pair is not normal (xi nontrivial).
Verdict normal_pseudo_criterion(const UniqueFactorization& uf, const HomPair& p);

/// All verdicts for one pair, mutually cross-checked.
struct PairAnalysis {
  HomPair pair;
  CheckReport qt;
  bool positive = true;
  Verdict triangular;
  PseudoVerdicts pseudo;
  Verdict conditions;
  std::optional<Verdict> normal;  // only for normal pairs
  bool xi_equals_eta = false;
};

/// Builds R(xi, eta) on the given host and evaluates every criterion.
/// Throws CrossCheckError when two pseudotriangularity routes disagree
/// (generic direct vs F, group-level conditions, normal criterion).
PairAnalysis analyze_pair(const UniqueFactorization& uf, std::shared_ptr<const HopfData> host,
                          const HomPair& p);

struct DoubleStructure {
  UniqueFactorization factorization;
  HomPair pair;
  std::shared_ptr<const HopfData> hopf;
  QtStructure qt;
};

/// G~ = G x G with G~+ = G x {e}, G~- = diagonal, xi trivial and
/// eta(g, e) = (g, g): the Drinfeld double of k[G]* with its canonical R.
DoubleStructure build_double(const FiniteGroup& g);

/// "xi: u->x, ...; eta: ..." rendering for reports.
std::string describe_pair(const UniqueFactorization& uf, const HomPair& p);

}  // namespace qhopf
