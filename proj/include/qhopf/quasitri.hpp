#pragma once

// Quasitriangular, triangular and pseudotriangular structures R in H (x) H.

#include <memory>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Orientation of the two coproduct-splitting axioms.
///   kStandard: (Delta (x) id)(R) = R_13 R_23,  (id (x) Delta)(R) = R_13 R_12
///   kOpposite: (Delta (x) id)(R) = R_23 R_13,  (id (x) Delta)(R) = R_12 R_13
enum class QtOrientation { kStandard, kOpposite };

/// The convention every check in this library uses. The Radford structures
/// R_{s,beta} and the positive structures R(xi, eta) satisfy the axioms in
/// this orientation.
inline constexpr QtOrientation kQtOrientation = QtOrientation::kStandard;

struct QtStructure {
  std::shared_ptr<const HopfData> host;
  Tensor r{2};
};

/// Axioms (a) Delta^op(h) R = R Delta(h), (b)/(c) coproduct splitting,
/// (d) counit normalisation on both legs, (e) R (S (x) id)(R) = 1 (x) 1.
CheckReport verify_qt(const HopfData& h, const Tensor& r,
                      QtOrientation orientation = kQtOrientation);

/// R^{-1} = (S (x) id)(R).
Tensor r_inverse(const HopfData& h, const Tensor& r);

/// F = R_21 R. (The Radford computation names the same element T.)
Tensor double_braiding_element(const HopfData& h, const Tensor& r);

/// R_21 R == 1 (x) 1.
Verdict is_triangular(const HopfData& h, const Tensor& r);

/// R_12 R^{-1}_31 R_23 == R_23 R^{-1}_31 R_12 in H^{(x)3}.
Verdict is_pseudotriangular_direct(const HopfData& h, const Tensor& r);

/// F_12 F_23 == F_23 F_12 for F = R_21 R.
Verdict is_pseudotriangular_F(const HopfData& h, const Tensor& r);

struct PseudoVerdicts {
  Verdict direct;
  Verdict via_f;
  bool holds() const { return direct.holds; }
};

/// Runs both criteria; throws CrossCheckError if they disagree.
PseudoVerdicts pseudotriangularity(const HopfData& h, const Tensor& r);

}  // namespace qhopf
