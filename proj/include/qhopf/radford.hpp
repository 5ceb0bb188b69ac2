#pragma once

// Radford's 4nu-dimensional Hopf algebras H_nu (nu odd):
//   g^{2nu} = 1,  gx + xg = 0,  x^2 = 0,
//   Delta(g) = g (x) g,  Delta(x) = x (x) g^nu + 1 (x) x,
//   S(g) = g^{-1},  S(x) = g^nu x,
// over Q(w) with w a primitive 2nu-th root of unity, and their
// quasitriangular structures R_{s,beta}.

#include <memory>
#include <vector>

#include "qhopf/quasitri.hpp"

namespace qhopf {

struct RadfordAlgebra {
  int nu = 1;
  std::shared_ptr<const HopfData> hopf;

  int order() const { return 2 * nu; }
  int conductor() const { return 2 * nu; }
  /// Basis index of g^l x^m; l is reduced mod 2nu.
  int index(int l, int m) const;
  /// g^l x^m with coefficient 1.
  Tensor monomial(int l, int m) const;
};

RadfordAlgebra build_radford(int nu);

/// e_l = (1/2nu) sum_i w^{-il} g^i for l = 0..2nu-1.
std::vector<Tensor> idempotents(const RadfordAlgebra& a);

/// Orthogonality, completeness, sum (-1)^i e_i = g^nu, g^i e_j = w^{ij} e_j,
/// and x e_l = e_{l-nu} x, each checked for every index.
CheckReport idempotent_identities(const RadfordAlgebra& a);

struct RParams {
  int s = 1;
  /// Defaults to the formal indeterminate when left empty.
  std::optional<Scalar> beta;
};

/// sum_l e_l (x) g^{sl} + beta sum_l e_l x (x) g^{sl+nu} x.
Tensor r_matrix_idempotent_form(const RadfordAlgebra& a, const RParams& p);
/// (1/2nu) sum_{i,l} w^{-il} g^i (x) g^{sl} + (beta/2nu) sum_{i,l} w^{-il} g^i x (x) g^{sl+nu} x.
Tensor r_matrix_double_sum_form(const RadfordAlgebra& a, const RParams& p);

/// Builds R_{s,beta}, asserts both displayed forms agree and that verify_qt
/// passes. Throws std::invalid_argument for bad s, AxiomError otherwise.
QtStructure build_R(const RadfordAlgebra& a, const RParams& p);

}  // namespace qhopf
