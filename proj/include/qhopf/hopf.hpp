#pragma once

// Finite-dimensional Hopf algebras given by structure constants, and the
// leg-wise operations on H^{(x)k} that every checker is built from.

#include <span>
#include <string>
#include <vector>

#include "qhopf/linear_map.hpp"
#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

/// Structure constants of a Hopf algebra on the basis b_0..b_{dim-1}.
///   mul[i*dim + j] : b_i b_j as a sparse column
///   comul[i]       : Delta(b_i), arity-2 tensor
///   antipode       : column i is S(b_i)
struct HopfData {
  int dim = 0;
  int conductor = 1;
  std::vector<std::string> labels;
  std::vector<SparseVec> mul;
  SparseVec unit;
  std::vector<Tensor> comul;
  std::vector<Scalar> counit;
  Matrix antipode;

  const SparseVec& product(int i, int j) const { return mul[i * dim + j]; }
};

/// b_i as an arity-1 tensor.
Tensor basis_element(const HopfData& h, int i, const Scalar& coeff);
Tensor basis_element(const HopfData& h, int i);
/// 1 (x) ... (x) 1 with k legs.
Tensor unit_tensor(const HopfData& h, int k);

/// Product in the k-fold tensor power algebra.
Tensor tensor_mul(const HopfData& h, const Tensor& s, const Tensor& t);

/// Places t = sum a (x) b with a at leg i and b at leg j (1-based) of a k-leg
/// tensor, unit elsewhere. legs = (2,1) at k = 2 gives t_21.
Tensor embed_legs(const HopfData& h, const Tensor& t, int k, int leg_i, int leg_j);

/// Applies Delta at the given 1-based leg; later legs shift right.
Tensor apply_coproduct_leg(const HopfData& h, const Tensor& t, int leg);
/// Applies epsilon at the given leg, removing it (arity must be >= 2).
Tensor apply_counit_leg(const HopfData& h, const Tensor& t, int leg);
/// Applies a linear map H -> H (columns = images) at the given leg.
Tensor apply_map_leg(const Matrix& map, const Tensor& t, int leg);
/// Swaps the two legs of an arity-2 tensor.
Tensor flip(const Tensor& t);

/// Exhaustive axiom check: associativity, unit, coassociativity, counit,
/// multiplicativity of Delta and epsilon, both antipode identities.
CheckReport verify_hopf(const HopfData& h);

/// Inverse of the antipode matrix. Throws SingularError if S is not invertible.
Matrix antipode_inverse(const HopfData& h);

bool is_commutative(const HopfData& h);
bool is_cocommutative(const HopfData& h);

/// "b_i (x) b_j" style rendering of a basis tuple using the algebra's labels.
std::string label_tuple(const HopfData& h, std::span<const int> idx);

/// Group algebra k[G] of a group given by its multiplication table.
HopfData group_algebra(const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& labels, int identity);

}  // namespace qhopf
