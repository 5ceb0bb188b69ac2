#pragma once

// Yetter-Drinfeld modules (left-right and left-left), objects of LR(H) with
// their four structures, tensor products, canonical braidings, and the
// matrix-level pseudosymmetry check.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/group.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

enum class ModuleKind {
  kYdLeftRight,  // left module, right comodule
  kYdLeftLeft,   // left module, left comodule
  kLr,           // bimodule and bicomodule subject to (caty1)-(caty4)
};

std::string to_string(ModuleKind k);
/// Accepts "yd-lr", "yd-ll", "lr". Throws std::invalid_argument otherwise.
ModuleKind parse_module_kind(const std::string& s);

/// A finite-dimensional module over a Hopf algebra, stored as structure
/// constants. Which fields are populated depends on the kind.
///   action[h]         column m is h.m
///   right_action[h]   column m is m.h                  (kLr)
///   left_coaction[m]  m^{(-1)} (x) m^{(0)}, legs (H, M) (kYdLeftLeft, kLr)
///   right_coaction[m] m_{(0)} (x) m_{(1)},  legs (M, H) (kYdLeftRight, kLr)
struct YdObject {
  ModuleKind kind = ModuleKind::kYdLeftLeft;
  std::shared_ptr<const HopfData> host;
  std::string hopf_ref;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> action;
  std::vector<Matrix> right_action;
  std::vector<Tensor> left_coaction;
  std::vector<Tensor> right_coaction;
};

/// Module, comodule and (h.m)_(0) (x) (h.m)_(1) = h_2.m_(0) (x) h_3 m_(1) S^{-1}(h_1).
CheckReport check_yd_lr(const YdObject& m);
/// Module, comodule and (h_1.m)^(-1) h_2 (x) (h_1.m)^(0) = h_1 m^(-1) (x) h_2.m^(0).
CheckReport check_yd_ll(const YdObject& m);
/// Bimodule, bicomodule, (caty1)-(caty4); when the host is commutative and
/// cocommutative also the reduced forms (longnew1) and (longnew3).
CheckReport check_lr_object(const YdObject& m);
/// Dispatches on the kind.
CheckReport check_object(const YdObject& m);

/// The unit object k (or k^dim) with action through epsilon and coactions
/// m -> 1 (x) m, m -> m (x) 1.
YdObject trivial_object(std::shared_ptr<const HopfData> host, ModuleKind kind, int dim = 1);

/// M = H with h.m = h_1 m S(h_2) and coaction Delta. Throws AxiomError if
/// check_yd_ll fails.
YdObject adjoint_yd_module(std::shared_ptr<const HopfData> host);

/// k[G] with h.g = h g h^{-1} and g -> g (x) g, as a left-left or left-right
/// YD module. The host must be group_algebra(G).
YdObject conjugation_module(const FiniteGroup& g, std::shared_ptr<const HopfData> host,
                            ModuleKind kind = ModuleKind::kYdLeftLeft);

/// M = H, left multiplication and coaction Delta (left-left kind). Not a YD
/// module unless H is trivial.
YdObject left_regular_module(std::shared_ptr<const HopfData> host);

/// M = H with both regular actions and Delta as both coactions (kLr).
YdObject regular_lr_object(std::shared_ptr<const HopfData> host);

/// Adds the trivial right action (through epsilon) and right coaction m -> m (x) 1.
YdObject lr_from_llyd(const YdObject& m);

/// M (x) N with the tensor structure of the common kind; basis index
/// i*dim N + j, labels "m⊗n".
YdObject tensor_object(const YdObject& m, const YdObject& n);

struct Braiding {
  Matrix c;    // M (x) N -> N (x) M
  Matrix inv;  // N (x) M -> M (x) N
};

/// c_{M,N} and its inverse from the displayed inverse formula for the kind.
/// Throws AxiomError if the two do not compose to the identity.
Braiding braiding_matrix(const YdObject& m, const YdObject& n);

struct PseudosymmetryResult {
  Verdict def_form;  // (c_YZ x id)(id x c_ZX^-1)(c_XY x id) = (id x c_XY)(c_ZX^-1 x id)(id x c_YZ)
  Verdict t_form;    // (T_XY x id)(id x T_YZ) = (id x T_YZ)(T_XY x id)
  Matrix def_lhs, def_rhs;  // X (x) Y (x) Z -> Z (x) Y (x) X
  Matrix t_lhs, t_rhs;      // X (x) Y (x) Z -> X (x) Y (x) Z
  std::vector<std::string> x_labels, y_labels, z_labels;

  bool holds() const { return def_form.holds; }
  /// Images of the basis triple under both sides of the T-form, rendered.
  std::pair<std::string, std::string> t_form_at(int x, int y, int z) const;
  std::pair<std::string, std::string> def_form_at(int x, int y, int z) const;
};

/// Both forms on X (x) Y (x) Z; throws CrossCheckError if their verdicts differ.
PseudosymmetryResult pseudosymmetry_check(const YdObject& x, const YdObject& y, const YdObject& z);

/// c_{X(x)Y,Z} = (c_XZ x id)(id x c_YZ) and c_{X,Y(x)Z} = (id x c_XZ)(c_XY x id).
CheckReport hexagon_check(const YdObject& x, const YdObject& y, const YdObject& z);

struct NamedObject {
  std::string name;
  YdObject object;
};

struct WitnessSearch {
  bool found = false;
  std::string triple;   // "X, Y, Z" object names
  std::string witness;  // failing basis triple
  int triples_tried = 0;
};

/// Tries every triple of catalog objects in lexicographic order and stops at
/// the first one whose braiding is not pseudosymmetric.
WitnessSearch search_pseudosymmetry_witness(const std::vector<NamedObject>& catalog);

/// The documented catalog for a general host: the adjoint module, then its
/// tensor square.
std::vector<NamedObject> adjoint_catalog(std::shared_ptr<const HopfData> host);

}  // namespace qhopf
