#include "qhopf/quasitri.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

Verdict compare(const HopfData& h, const Tensor& lhs, const Tensor& rhs, const std::string& ctx) {
  auto diff = first_difference(lhs, rhs);
  if (!diff) return Verdict::pass();
  std::string w = label_tuple(h, *diff);
  if (!ctx.empty()) w = ctx + ": " + w;
  return Verdict::fail(w + " (" + lhs.at(*diff).to_string() + " vs " + rhs.at(*diff).to_string() +
                       ")");
}

}  // namespace

CheckReport verify_qt(const HopfData& h, const Tensor& r, QtOrientation orientation) {
  CheckReport rep;
  const bool standard = orientation == QtOrientation::kStandard;

  {
    Verdict v;
    for (int i = 0; i < h.dim && v.holds; ++i) {
      const Tensor& d = h.comul[i];
      v = compare(h, tensor_mul(h, flip(d), r), tensor_mul(h, r, d), "h = " + h.labels[i]);
    }
    rep.add("(a) intertwines Delta", v);
  }

  const Tensor r12 = embed_legs(h, r, 3, 1, 2);
  const Tensor r13 = embed_legs(h, r, 3, 1, 3);
  const Tensor r23 = embed_legs(h, r, 3, 2, 3);
  rep.add("(b) (Delta x id)(R)",
          compare(h, apply_coproduct_leg(h, r, 1),
                  standard ? tensor_mul(h, r13, r23) : tensor_mul(h, r23, r13), ""));
  rep.add("(c) (id x Delta)(R)",
          compare(h, apply_coproduct_leg(h, r, 2),
                  standard ? tensor_mul(h, r13, r12) : tensor_mul(h, r12, r13), ""));

  Tensor one(1);
  for (const auto& [k, c] : h.unit) one.add({k}, c);
  const Verdict left = compare(h, apply_counit_leg(h, r, 1), one, "(eps x id)");
  const Verdict right = compare(h, apply_counit_leg(h, r, 2), one, "(id x eps)");
  rep.add("(d) counit", !left.holds ? left : right);

  rep.add("(e) invertible", compare(h, tensor_mul(h, r, r_inverse(h, r)), unit_tensor(h, 2), ""));
  return rep;
}

Tensor r_inverse(const HopfData& h, const Tensor& r) { return apply_map_leg(h.antipode, r, 1); }

Tensor double_braiding_element(const HopfData& h, const Tensor& r) {
  return tensor_mul(h, flip(r), r);
}

Verdict is_triangular(const HopfData& h, const Tensor& r) {
  return compare(h, double_braiding_element(h, r), unit_tensor(h, 2), "");
}

Verdict is_pseudotriangular_direct(const HopfData& h, const Tensor& r) {
  const Tensor inv = r_inverse(h, r);
  const Tensor r12 = embed_legs(h, r, 3, 1, 2);
  const Tensor r23 = embed_legs(h, r, 3, 2, 3);
  const Tensor inv31 = embed_legs(h, inv, 3, 3, 1);
  const Tensor lhs = tensor_mul(h, tensor_mul(h, r12, inv31), r23);
  const Tensor rhs = tensor_mul(h, tensor_mul(h, r23, inv31), r12);
  return compare(h, lhs, rhs, "");
}

Verdict is_pseudotriangular_F(const HopfData& h, const Tensor& r) {
  const Tensor f = double_braiding_element(h, r);
  const Tensor f12 = embed_legs(h, f, 3, 1, 2);
  const Tensor f23 = embed_legs(h, f, 3, 2, 3);
  return compare(h, tensor_mul(h, f12, f23), tensor_mul(h, f23, f12), "");
}

PseudoVerdicts pseudotriangularity(const HopfData& h, const Tensor& r) {
  PseudoVerdicts out{is_pseudotriangular_direct(h, r), is_pseudotriangular_F(h, r)};
  if (out.direct.holds != out.via_f.holds) {
    throw CrossCheckError("pseudotriangularity criteria disagree: direct=" +
                          std::to_string(out.direct.holds) +
                          ", F-commutation=" + std::to_string(out.via_f.holds));
  }
  return out;
}

}  // namespace qhopf
