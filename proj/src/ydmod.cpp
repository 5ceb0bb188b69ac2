#include "qhopf/ydmod.hpp"

#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

using Index = Tensor::Index;

std::span<const int> head(const Index& idx, int n) { return std::span<const int>(idx.data(), n); }

// Acts with the H index at hleg on the module index at mleg (1-based); the H
// leg is removed.
Tensor act_leg(const std::vector<Matrix>& act, const Tensor& t, int hleg, int mleg) {
  const int k = t.arity();
  Tensor out(k - 1);
  Index dst{};
  for (const auto& [key, v] : t.terms()) {
    const Index src = t.unpack(key);
    for (const auto& [r, c] : act.at(src[hleg - 1]).col(src[mleg - 1])) {
      int n = 0;
      for (int i = 0; i < k; ++i) {
        if (i == hleg - 1) continue;
        dst[n++] = i == mleg - 1 ? r : src[i];
      }
      out.add(head(dst, k - 1), v * c);
    }
  }
  return out;
}

// Replaces the module index at mleg by the two legs of its coaction.
Tensor coact_leg(const std::vector<Tensor>& co, const Tensor& t, int mleg) {
  const int k = t.arity();
  Tensor out(k + 1);
  Index dst{};
  for (const auto& [key, v] : t.terms()) {
    const Index src = t.unpack(key);
    for (int i = 0; i < mleg - 1; ++i) dst[i] = src[i];
    for (int i = mleg; i < k; ++i) dst[i + 1] = src[i];
    const Tensor& rho = co.at(src[mleg - 1]);
    for (const auto& [ck, cv] : rho.terms()) {
      const Index ab = rho.unpack(ck);
      dst[mleg - 1] = ab[0];
      dst[mleg] = ab[1];
      out.add(head(dst, k + 1), v * cv);
    }
  }
  return out;
}

// b_{t[i]} b_{t[j]} placed at leg i; leg j is removed.
Tensor mul_legs(const HopfData& h, const Tensor& t, int i, int j) {
  const int k = t.arity();
  Tensor out(k - 1);
  Index dst{};
  for (const auto& [key, v] : t.terms()) {
    const Index src = t.unpack(key);
    for (const auto& [r, c] : h.product(src[i - 1], src[j - 1])) {
      int n = 0;
      for (int l = 0; l < k; ++l) {
        if (l == j - 1) continue;
        dst[n++] = l == i - 1 ? r : src[l];
      }
      out.add(head(dst, k - 1), v * c);
    }
  }
  return out;
}

Tensor basis2(int a, int b, const Scalar& one) { return Tensor::basis({a, b}, one); }

std::string render(const Tensor& t, const std::vector<const std::vector<std::string>*>& labels) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : t.sorted_terms()) {
    if (!out.empty()) out += " + ";
    if (!c.is_one()) out += c.to_string() + " ";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += " ⊗ ";
      out += labels[i]->at(idx[i]);
    }
  }
  return out;
}

std::string hlabel(const HopfData& h, int i) { return h.labels.at(i); }

// Sum of the action matrices weighted by a sparse element of H.
Matrix action_of(const std::vector<Matrix>& act, const SparseVec& elem, int dim) {
  Matrix out(dim, dim);
  ColumnBuilder b(dim);
  for (int m = 0; m < dim; ++m) {
    for (const auto& [i, c] : elem) {
      for (const auto& [r, v] : act[i].col(m)) b.add(r, c * v);
    }
    out.set_col(m, b.take());
  }
  return out;
}

Verdict module_assoc(const HopfData& h, const std::vector<Matrix>& act, bool right) {
  for (int a = 0; a < h.dim; ++a) {
    for (int b = 0; b < h.dim; ++b) {
      const Matrix lhs = action_of(act, h.product(a, b), act[a].rows());
      const Matrix rhs = right ? act[b] * act[a] : act[a] * act[b];
      if (!(lhs == rhs)) return Verdict::fail("(h, k) = (" + hlabel(h, a) + ", " + hlabel(h, b) + ")");
    }
  }
  return Verdict::pass();
}

Verdict module_unit(const HopfData& h, const std::vector<Matrix>& act) {
  const Matrix u = action_of(act, h.unit, act.empty() ? 0 : act[0].rows());
  if (!u.is_identity()) return Verdict::fail("unit does not act as the identity");
  return Verdict::pass();
}

void check_shape(const YdObject& m) {
  const HopfData& h = *m.host;
  if (static_cast<int>(m.action.size()) != h.dim) throw std::invalid_argument("action size differs from dim H");
  for (const auto& a : m.action) {
    if (a.rows() != m.dim || a.cols() != m.dim) throw std::invalid_argument("action matrix shape");
  }
  const bool left = m.kind != ModuleKind::kYdLeftRight;
  const bool right = m.kind != ModuleKind::kYdLeftLeft;
  if (left && static_cast<int>(m.left_coaction.size()) != m.dim) {
    throw std::invalid_argument("left coaction size differs from dim M");
  }
  if (right && static_cast<int>(m.right_coaction.size()) != m.dim) {
    throw std::invalid_argument("right coaction size differs from dim M");
  }
  if (m.kind == ModuleKind::kLr && static_cast<int>(m.right_action.size()) != h.dim) {
    throw std::invalid_argument("right action size differs from dim H");
  }
}

std::string hm(const YdObject& m, int h, int x) {
  return "(h, m) = (" + hlabel(*m.host, h) + ", " + m.labels.at(x) + ")";
}

// For every basis pair (h, m) compare two tensors built from h (x) m.
template <class L, class R>
Verdict over_hm(const YdObject& m, L lhs, R rhs) {
  const Scalar one = Scalar::one(m.host->conductor);
  for (int h = 0; h < m.host->dim; ++h) {
    for (int x = 0; x < m.dim; ++x) {
      const Tensor t = basis2(h, x, one);
      if (!(lhs(t) == rhs(t))) return Verdict::fail(hm(m, h, x));
    }
  }
  return Verdict::pass();
}

// Same with the module leg first: m (x) h.
template <class L, class R>
Verdict over_mh(const YdObject& m, L lhs, R rhs) {
  const Scalar one = Scalar::one(m.host->conductor);
  for (int h = 0; h < m.host->dim; ++h) {
    for (int x = 0; x < m.dim; ++x) {
      const Tensor t = basis2(x, h, one);
      if (!(lhs(t) == rhs(t))) return Verdict::fail(hm(m, h, x));
    }
  }
  return Verdict::pass();
}

Verdict left_comodule_coassoc(const YdObject& m) {
  const HopfData& h = *m.host;
  for (int x = 0; x < m.dim; ++x) {
    const Tensor& rho = m.left_coaction[x];
    if (!(apply_coproduct_leg(h, rho, 1) == coact_leg(m.left_coaction, rho, 2))) {
      return Verdict::fail("m = " + m.labels[x]);
    }
  }
  return Verdict::pass();
}

Verdict left_comodule_counit(const YdObject& m) {
  for (int x = 0; x < m.dim; ++x) {
    if (!(apply_counit_leg(*m.host, m.left_coaction[x], 1) ==
          Tensor::basis({x}, Scalar::one(m.host->conductor)))) {
      return Verdict::fail("m = " + m.labels[x]);
    }
  }
  return Verdict::pass();
}

Verdict right_comodule_coassoc(const YdObject& m) {
  const HopfData& h = *m.host;
  for (int x = 0; x < m.dim; ++x) {
    const Tensor& rho = m.right_coaction[x];
    if (!(apply_coproduct_leg(h, rho, 2) == coact_leg(m.right_coaction, rho, 1))) {
      return Verdict::fail("m = " + m.labels[x]);
    }
  }
  return Verdict::pass();
}

Verdict right_comodule_counit(const YdObject& m) {
  for (int x = 0; x < m.dim; ++x) {
    if (!(apply_counit_leg(*m.host, m.right_coaction[x], 2) ==
          Tensor::basis({x}, Scalar::one(m.host->conductor)))) {
      return Verdict::fail("m = " + m.labels[x]);
    }
  }
  return Verdict::pass();
}

void add_left_module(CheckReport& rep, const YdObject& m) {
  rep.add("left module associativity", module_assoc(*m.host, m.action, false));
  rep.add("left module unit", module_unit(*m.host, m.action));
}

void add_left_comodule(CheckReport& rep, const YdObject& m) {
  rep.add("left comodule coassociativity", left_comodule_coassoc(m));
  rep.add("left comodule counit", left_comodule_counit(m));
}

void add_right_comodule(CheckReport& rep, const YdObject& m) {
  rep.add("right comodule coassociativity", right_comodule_coassoc(m));
  rep.add("right comodule counit", right_comodule_counit(m));
}

// (h_1.m)^(-1) h_2 (x) (h_1.m)^(0) = h_1 m^(-1) (x) h_2.m^(0)
Verdict yd_ll_condition(const YdObject& m) {
  const HopfData& h = *m.host;
  return over_hm(
      m,
      [&](const Tensor& t) {
        Tensor s = apply_coproduct_leg(h, t, 1);  // h1 h2 m
        s = act_leg(m.action, s, 1, 3);           // h2 (h1.m)
        s = coact_leg(m.left_coaction, s, 2);     // h2 X- X0
        return mul_legs(h, s, 2, 1);              // X- h2, X0
      },
      [&](const Tensor& t) {
        Tensor s = coact_leg(m.left_coaction, t, 2);  // h m- m0
        s = apply_coproduct_leg(h, s, 1);             // h1 h2 m- m0
        s = act_leg(m.action, s, 2, 4);               // h1 m- (h2.m0)
        return mul_legs(h, s, 1, 2);                  // h1 m-, h2.m0
      });
}

}  // namespace

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::kYdLeftRight:
      return "yd-lr";
    case ModuleKind::kYdLeftLeft:
      return "yd-ll";
    case ModuleKind::kLr:
      return "lr";
  }
  return "?";
}

ModuleKind parse_module_kind(const std::string& s) {
  if (s == "yd-lr") return ModuleKind::kYdLeftRight;
  if (s == "yd-ll") return ModuleKind::kYdLeftLeft;
  if (s == "lr") return ModuleKind::kLr;
  throw std::invalid_argument("unknown module kind '" + s + "'");
}

CheckReport check_yd_lr(const YdObject& m) {
  check_shape(m);
  const HopfData& h = *m.host;
  const Matrix s_inv = antipode_inverse(h);
  CheckReport rep;
  add_left_module(rep, m);
  add_right_comodule(rep, m);
  // (h.m)_(0) (x) (h.m)_(1) = h_2.m_(0) (x) h_3 m_(1) S^{-1}(h_1)
  rep.add("yd-lr compatibility",
          over_hm(
              m,
              [&](const Tensor& t) {
                return coact_leg(m.right_coaction, act_leg(m.action, t, 1, 2), 1);
              },
              [&](const Tensor& t) {
                Tensor s = apply_coproduct_leg(h, t, 1);
                s = apply_coproduct_leg(h, s, 2);         // h1 h2 h3 m
                s = coact_leg(m.right_coaction, s, 4);    // h1 h2 h3 m0 m1
                s = apply_map_leg(s_inv, s, 1);           // S^-1(h1) ...
                s = act_leg(m.action, s, 2, 4);           // S^-1h1 h3 (h2.m0) m1
                s = mul_legs(h, s, 2, 4);                 // S^-1h1 (h3 m1) (h2.m0)
                s = mul_legs(h, s, 2, 1);                 // (h3 m1 S^-1h1) (h2.m0)
                const int swap[] = {1, 0};
                return s.permuted(swap);
              }));
  return rep;
}

CheckReport check_yd_ll(const YdObject& m) {
  check_shape(m);
  CheckReport rep;
  add_left_module(rep, m);
  add_left_comodule(rep, m);
  rep.add("yd-ll compatibility", yd_ll_condition(m));
  return rep;
}

CheckReport check_lr_object(const YdObject& m) {
  check_shape(m);
  const HopfData& h = *m.host;
  CheckReport rep;
  add_left_module(rep, m);
  rep.add("right module associativity", module_assoc(h, m.right_action, true));
  rep.add("right module unit", module_unit(h, m.right_action));
  Verdict bimod;
  for (int a = 0; a < h.dim && bimod; ++a) {
    for (int b = 0; b < h.dim; ++b) {
      if (!(m.right_action[b] * m.action[a] == m.action[a] * m.right_action[b])) {
        bimod = Verdict::fail("(h, k) = (" + hlabel(h, a) + ", " + hlabel(h, b) + ")");
        break;
      }
    }
  }
  rep.add("bimodule", bimod);
  add_left_comodule(rep, m);
  add_right_comodule(rep, m);
  Verdict bicomod;
  for (int x = 0; x < m.dim; ++x) {
    const Tensor lhs = coact_leg(m.right_coaction, m.left_coaction[x], 2);
    const Tensor rhs = coact_leg(m.left_coaction, m.right_coaction[x], 1);
    if (!(lhs == rhs)) {
      bicomod = Verdict::fail("m = " + m.labels[x]);
      break;
    }
  }
  rep.add("bicomodule", bicomod);

  rep.add("caty1", yd_ll_condition(m));
  // (h.m)<0> (x) (h.m)<1> = h.m<0> (x) m<1>
  rep.add("caty2", over_hm(
                       m,
                       [&](const Tensor& t) {
                         return coact_leg(m.right_coaction, act_leg(m.action, t, 1, 2), 1);
                       },
                       [&](const Tensor& t) {
                         return act_leg(m.action, coact_leg(m.right_coaction, t, 2), 1, 2);
                       }));
  // (m.h_2)<0> (x) h_1 (m.h_2)<1> = m<0>.h_1 (x) m<1> h_2
  rep.add("caty3", over_mh(
                       m,
                       [&](const Tensor& t) {
                         Tensor s = apply_coproduct_leg(h, t, 2);  // m h1 h2
                         s = act_leg(m.right_action, s, 3, 1);     // (m.h2) h1
                         s = coact_leg(m.right_coaction, s, 1);    // X0 X1 h1
                         return mul_legs(h, s, 3, 2);              // X0, h1 X1
                       },
                       [&](const Tensor& t) {
                         Tensor s = apply_coproduct_leg(h, t, 2);  // m h1 h2
                         s = coact_leg(m.right_coaction, s, 1);    // m0 m1 h1 h2
                         s = act_leg(m.right_action, s, 3, 1);     // (m0.h1) m1 h2
                         return mul_legs(h, s, 2, 3);              // m0.h1, m1 h2
                       }));
  // (m.h)^(-1) (x) (m.h)^(0) = m^(-1) (x) m^(0).h
  rep.add("caty4", over_mh(
                       m,
                       [&](const Tensor& t) {
                         return coact_leg(m.left_coaction, act_leg(m.right_action, t, 2, 1), 1);
                       },
                       [&](const Tensor& t) {
                         return act_leg(m.right_action, coact_leg(m.left_coaction, t, 1), 3, 2);
                       }));
  if (is_commutative(h) && is_cocommutative(h)) {
    // (h.m)^(-1) (x) (h.m)^(0) = m^(-1) (x) h.m^(0)
    rep.add("longnew1", over_hm(
                            m,
                            [&](const Tensor& t) {
                              return coact_leg(m.left_coaction, act_leg(m.action, t, 1, 2), 1);
                            },
                            [&](const Tensor& t) {
                              return act_leg(m.action, coact_leg(m.left_coaction, t, 2), 1, 3);
                            }));
    // (m.h)<0> (x) (m.h)<1> = m<0>.h (x) m<1>
    rep.add("longnew3", over_mh(
                            m,
                            [&](const Tensor& t) {
                              return coact_leg(m.right_coaction, act_leg(m.right_action, t, 2, 1), 1);
                            },
                            [&](const Tensor& t) {
                              return act_leg(m.right_action, coact_leg(m.right_coaction, t, 1), 3, 1);
                            }));
  }
  return rep;
}

CheckReport check_object(const YdObject& m) {
  switch (m.kind) {
    case ModuleKind::kYdLeftRight:
      return check_yd_lr(m);
    case ModuleKind::kYdLeftLeft:
      return check_yd_ll(m);
    case ModuleKind::kLr:
      return check_lr_object(m);
  }
  return {};
}

YdObject trivial_object(std::shared_ptr<const HopfData> host, ModuleKind kind, int dim) {
  const HopfData& h = *host;
  YdObject m;
  m.kind = kind;
  m.host = host;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.labels.push_back(dim == 1 ? "1" : "m" + std::to_string(i));
  auto scalar_action = [&] {
    std::vector<Matrix> act;
    for (int a = 0; a < h.dim; ++a) {
      Matrix x(dim, dim);
      for (int i = 0; i < dim; ++i) {
        if (!h.counit[a].is_zero()) x.set_col(i, {{i, h.counit[a]}});
      }
      act.push_back(std::move(x));
    }
    return act;
  };
  m.action = scalar_action();
  const bool left = kind != ModuleKind::kYdLeftRight;
  const bool right = kind != ModuleKind::kYdLeftLeft;
  for (int i = 0; i < dim; ++i) {
    Tensor l(2), r(2);
    for (const auto& [u, c] : h.unit) {
      l.add({u, i}, c);
      r.add({i, u}, c);
    }
    if (left) m.left_coaction.push_back(std::move(l));
    if (right) m.right_coaction.push_back(std::move(r));
  }
  if (kind == ModuleKind::kLr) m.right_action = scalar_action();
  return m;
}

YdObject adjoint_yd_module(std::shared_ptr<const HopfData> host) {
  const HopfData& h = *host;
  YdObject m;
  m.kind = ModuleKind::kYdLeftLeft;
  m.host = host;
  m.dim = h.dim;
  m.labels = h.labels;
  const Scalar one = Scalar::one(h.conductor);
  for (int a = 0; a < h.dim; ++a) {
    Matrix act(h.dim, h.dim);
    for (int x = 0; x < h.dim; ++x) {
      // h_1 m S(h_2)
      Tensor t = apply_coproduct_leg(h, Tensor::basis({a, x}, one), 1);  // h1 h2 m
      t = apply_map_leg(h.antipode, t, 2);
      t = mul_legs(h, t, 1, 3);  // (h1 m) S(h2)
      t = mul_legs(h, t, 1, 2);
      SparseVec col;
      for (const auto& [k, c] : t.terms()) col.emplace_back(t.unpack(k)[0], c);
      act.set_col(x, std::move(col));
    }
    m.action.push_back(std::move(act));
  }
  m.left_coaction = h.comul;
  const CheckReport rep = check_yd_ll(m);
  if (!rep.all_pass()) throw AxiomError("adjoint module fails yd-ll: " + rep.failures());
  return m;
}

YdObject conjugation_module(const FiniteGroup& g, std::shared_ptr<const HopfData> host,
                            ModuleKind kind) {
  if (host->dim != g.order()) throw std::invalid_argument("host is not k[G]");
  if (kind == ModuleKind::kLr) throw std::invalid_argument("use lr_from_llyd for LR objects");
  YdObject m;
  m.kind = kind;
  m.host = host;
  m.dim = g.order();
  m.labels = g.labels();
  const Scalar one = Scalar::one(host->conductor);
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> image(g.order());
    for (int x = 0; x < g.order(); ++x) image[x] = g.mul(g.mul(a, x), g.inv(a));
    m.action.push_back(Matrix::permutation(image));
    if (kind == ModuleKind::kYdLeftLeft) {
      m.left_coaction.push_back(Tensor::basis({a, a}, one));
    } else {
      m.right_coaction.push_back(Tensor::basis({a, a}, one));
    }
  }
  return m;
}

YdObject left_regular_module(std::shared_ptr<const HopfData> host) {
  const HopfData& h = *host;
  YdObject m;
  m.kind = ModuleKind::kYdLeftLeft;
  m.host = host;
  m.dim = h.dim;
  m.labels = h.labels;
  for (int a = 0; a < h.dim; ++a) {
    Matrix act(h.dim, h.dim);
    for (int x = 0; x < h.dim; ++x) act.set_col(x, h.product(a, x));
    m.action.push_back(std::move(act));
  }
  m.left_coaction = h.comul;
  return m;
}

YdObject regular_lr_object(std::shared_ptr<const HopfData> host) {
  YdObject m = left_regular_module(host);
  const HopfData& h = *host;
  m.kind = ModuleKind::kLr;
  for (int a = 0; a < h.dim; ++a) {
    Matrix act(h.dim, h.dim);
    for (int x = 0; x < h.dim; ++x) act.set_col(x, h.product(x, a));
    m.right_action.push_back(std::move(act));
  }
  m.right_coaction = h.comul;
  return m;
}

YdObject lr_from_llyd(const YdObject& m) {
  if (m.kind != ModuleKind::kYdLeftLeft) throw std::invalid_argument("lr_from_llyd expects yd-ll");
  const YdObject triv = trivial_object(m.host, ModuleKind::kLr, m.dim);
  YdObject out = m;
  out.kind = ModuleKind::kLr;
  out.right_action = triv.right_action;
  out.right_coaction = triv.right_coaction;
  return out;
}

YdObject tensor_object(const YdObject& m, const YdObject& n) {
  if (m.kind != n.kind) throw std::invalid_argument("tensor_object: kinds differ");
  if (m.host != n.host && !(m.host->dim == n.host->dim && m.host->labels == n.host->labels)) {
    throw std::invalid_argument("tensor_object: different hosts");
  }
  const HopfData& h = *m.host;
  const int dn = n.dim;
  YdObject out;
  out.kind = m.kind;
  out.host = m.host;
  out.hopf_ref = m.hopf_ref;
  out.dim = m.dim * n.dim;
  for (const auto& a : m.labels) {
    for (const auto& b : n.labels) out.labels.push_back(a + "⊗" + b);
  }
  auto both_sides = [&](const std::vector<Matrix>& am, const std::vector<Matrix>& an) {
    std::vector<Matrix> act;
    for (int a = 0; a < h.dim; ++a) {
      Matrix x(out.dim, out.dim);
      ColumnBuilder b(out.dim);
      for (int i = 0; i < m.dim; ++i) {
        for (int j = 0; j < dn; ++j) {
          const Tensor& d = h.comul[a];
          for (const auto& [k, c] : d.terms()) {
            const auto pq = d.unpack(k);
            for (const auto& [r, u] : am[pq[0]].col(i)) {
              for (const auto& [s, v] : an[pq[1]].col(j)) b.add(r * dn + s, c * u * v);
            }
          }
          x.set_col(i * dn + j, b.take());
        }
      }
      act.push_back(std::move(x));
    }
    return act;
  };
  out.action = both_sides(m.action, n.action);
  if (m.kind == ModuleKind::kLr) out.right_action = both_sides(m.right_action, n.right_action);

  if (m.kind != ModuleKind::kYdLeftRight) {
    // m^(-1) n^(-1) (x) m^(0) (x) n^(0)
    for (int i = 0; i < m.dim; ++i) {
      for (int j = 0; j < dn; ++j) {
        Tensor t(2);
        const Tensor& a = m.left_coaction[i];
        const Tensor& b = n.left_coaction[j];
        for (const auto& [ka, ca] : a.terms()) {
          const auto x = a.unpack(ka);
          for (const auto& [kb, cb] : b.terms()) {
            const auto y = b.unpack(kb);
            for (const auto& [r, c] : h.product(x[0], y[0])) t.add({r, x[1] * dn + y[1]}, ca * cb * c);
          }
        }
        out.left_coaction.push_back(std::move(t));
      }
    }
  }
  if (m.kind != ModuleKind::kYdLeftLeft) {
    // left-right YD: m_(0) (x) n_(0) (x) n_(1) m_(1);  LR: m<0> (x) n<0> (x) m<1> n<1>
    const bool reversed = m.kind == ModuleKind::kYdLeftRight;
    for (int i = 0; i < m.dim; ++i) {
      for (int j = 0; j < dn; ++j) {
        Tensor t(2);
        const Tensor& a = m.right_coaction[i];
        const Tensor& b = n.right_coaction[j];
        for (const auto& [ka, ca] : a.terms()) {
          const auto x = a.unpack(ka);
          for (const auto& [kb, cb] : b.terms()) {
            const auto y = b.unpack(kb);
            const SparseVec& p = reversed ? h.product(y[1], x[1]) : h.product(x[1], y[1]);
            for (const auto& [r, c] : p) t.add({x[0] * dn + y[0], r}, ca * cb * c);
          }
        }
        out.right_coaction.push_back(std::move(t));
      }
    }
  }
  return out;
}

Braiding braiding_matrix(const YdObject& m, const YdObject& n) {
  if (m.kind != n.kind) throw std::invalid_argument("braiding_matrix: kinds differ");
  const HopfData& h = *m.host;
  const int dm = m.dim, dn = n.dim, d = dm * dn;
  Braiding out{Matrix(d, d), Matrix(d, d)};
  ColumnBuilder b(d);
  // a.v for a sparse element a of H, accumulated into b at rows mapped by f.
  auto act_comb = [&](const std::vector<Matrix>& act, const SparseVec& a, int v, const Scalar& c,
                      auto f, auto&& k) {
    for (const auto& [s, cs] : a) {
      for (const auto& [r, cr] : act[s].col(v)) k(f(r), c * cs * cr);
    }
  };
  auto unit = [](int i) { return SparseVec{{i, Scalar(1, 1)}}; };

  switch (m.kind) {
    case ModuleKind::kYdLeftRight: {
      // c(m (x) n) = n_(0) (x) n_(1).m;  c^{-1}(n (x) m) = S(n_(1)).m (x) n_(0)
      for (int i = 0; i < dm; ++i) {
        for (int j = 0; j < dn; ++j) {
          for (const auto& [k, c] : n.right_coaction[j].terms()) {
            const auto nb = n.right_coaction[j].unpack(k);
            act_comb(m.action, unit(nb[1]), i, c, [&](int r) { return nb[0] * dm + r; },
                     [&](int row, const Scalar& v) { b.add(row, v); });
          }
          out.c.set_col(i * dn + j, b.take());
        }
      }
      for (int j = 0; j < dn; ++j) {
        for (int i = 0; i < dm; ++i) {
          for (const auto& [k, c] : n.right_coaction[j].terms()) {
            const auto nb = n.right_coaction[j].unpack(k);
            act_comb(m.action, h.antipode.col(nb[1]), i, c, [&](int r) { return r * dn + nb[0]; },
                     [&](int row, const Scalar& v) { b.add(row, v); });
          }
          out.inv.set_col(j * dm + i, b.take());
        }
      }
      break;
    }
    case ModuleKind::kYdLeftLeft: {
      // c(m (x) n) = m^(-1).n (x) m^(0);  c^{-1}(n (x) m) = m^(0) (x) S^{-1}(m^(-1)).n
      const Matrix s_inv = antipode_inverse(h);
      for (int i = 0; i < dm; ++i) {
        for (int j = 0; j < dn; ++j) {
          for (const auto& [k, c] : m.left_coaction[i].terms()) {
            const auto am = m.left_coaction[i].unpack(k);
            act_comb(n.action, unit(am[0]), j, c, [&](int r) { return r * dm + am[1]; },
                     [&](int row, const Scalar& v) { b.add(row, v); });
          }
          out.c.set_col(i * dn + j, b.take());
        }
      }
      for (int j = 0; j < dn; ++j) {
        for (int i = 0; i < dm; ++i) {
          for (const auto& [k, c] : m.left_coaction[i].terms()) {
            const auto am = m.left_coaction[i].unpack(k);
            act_comb(n.action, s_inv.col(am[0]), j, c, [&](int r) { return am[1] * dn + r; },
                     [&](int row, const Scalar& v) { b.add(row, v); });
          }
          out.inv.set_col(j * dm + i, b.take());
        }
      }
      break;
    }
    case ModuleKind::kLr: {
      // c(m (x) n) = m^(-1).n<0> (x) m^(0).n<1>
      // c^{-1}(n (x) m) = m^(0).S^{-1}(n<1>) (x) S^{-1}(m^(-1)).n<0>
      const Matrix s_inv = antipode_inverse(h);
      for (int i = 0; i < dm; ++i) {
        for (int j = 0; j < dn; ++j) {
          for (const auto& [km, cm] : m.left_coaction[i].terms()) {
            const auto am = m.left_coaction[i].unpack(km);
            for (const auto& [kn, cn] : n.right_coaction[j].terms()) {
              const auto nb = n.right_coaction[j].unpack(kn);
              for (const auto& [r, cr] : n.action[am[0]].col(nb[0])) {
                for (const auto& [q, cq] : m.right_action[nb[1]].col(am[1])) {
                  b.add(r * dm + q, cm * cn * cr * cq);
                }
              }
            }
          }
          out.c.set_col(i * dn + j, b.take());
        }
      }
      for (int j = 0; j < dn; ++j) {
        for (int i = 0; i < dm; ++i) {
          for (const auto& [km, cm] : m.left_coaction[i].terms()) {
            const auto am = m.left_coaction[i].unpack(km);
            for (const auto& [kn, cn] : n.right_coaction[j].terms()) {
              const auto nb = n.right_coaction[j].unpack(kn);
              for (const auto& [s1, c1] : s_inv.col(nb[1])) {
                for (const auto& [q, cq] : m.right_action[s1].col(am[1])) {
                  for (const auto& [s2, c2] : s_inv.col(am[0])) {
                    for (const auto& [r, cr] : n.action[s2].col(nb[0])) {
                      b.add(q * dn + r, cm * cn * c1 * cq * c2 * cr);
                    }
                  }
                }
              }
            }
          }
          out.inv.set_col(j * dm + i, b.take());
        }
      }
      break;
    }
  }
  if (!(out.inv * out.c).is_identity() || !(out.c * out.inv).is_identity()) {
    throw AxiomError("braiding and its displayed inverse do not compose to the identity");
  }
  return out;
}

namespace {

std::pair<std::string, std::string> images_at(const Matrix& lhs, const Matrix& rhs, int col,
                                              const std::vector<const std::vector<std::string>*>& out_labels,
                                              const std::vector<int>& out_dims) {
  auto as_tensor = [&](const Matrix& a) {
    Tensor t(3);
    for (const auto& [r, c] : a.col(col)) {
      const int i0 = r / (out_dims[1] * out_dims[2]);
      const int i1 = (r / out_dims[2]) % out_dims[1];
      const int i2 = r % out_dims[2];
      t.add({i0, i1, i2}, c);
    }
    return t;
  };
  return {render(as_tensor(lhs), out_labels), render(as_tensor(rhs), out_labels)};
}

}  // namespace

std::pair<std::string, std::string> PseudosymmetryResult::t_form_at(int x, int y, int z) const {
  const int dy = static_cast<int>(y_labels.size()), dz = static_cast<int>(z_labels.size());
  return images_at(t_lhs, t_rhs, (x * dy + y) * dz + z, {&x_labels, &y_labels, &z_labels},
                   {static_cast<int>(x_labels.size()), dy, dz});
}

std::pair<std::string, std::string> PseudosymmetryResult::def_form_at(int x, int y, int z) const {
  const int dx = static_cast<int>(x_labels.size()), dy = static_cast<int>(y_labels.size()),
            dz = static_cast<int>(z_labels.size());
  return images_at(def_lhs, def_rhs, (x * dy + y) * dz + z, {&z_labels, &y_labels, &x_labels},
                   {dz, dy, dx});
}

PseudosymmetryResult pseudosymmetry_check(const YdObject& x, const YdObject& y, const YdObject& z) {
  const Matrix ix = Matrix::identity(x.dim), iy = Matrix::identity(y.dim),
               iz = Matrix::identity(z.dim);
  const Braiding xy = braiding_matrix(x, y), yz = braiding_matrix(y, z), zx = braiding_matrix(z, x);
  const Braiding yx = braiding_matrix(y, x), zy = braiding_matrix(z, y);

  PseudosymmetryResult res;
  res.x_labels = x.labels;
  res.y_labels = y.labels;
  res.z_labels = z.labels;
  res.def_lhs = kron(yz.c, ix) * (kron(iy, zx.inv) * kron(xy.c, iz));
  res.def_rhs = kron(iz, xy.c) * (kron(zx.inv, iy) * kron(ix, yz.c));
  const Matrix t_xy = yx.c * xy.c, t_yz = zy.c * yz.c;
  const Matrix t12 = kron(t_xy, iz), t23 = kron(ix, t_yz);
  res.t_lhs = t12 * t23;
  res.t_rhs = t23 * t12;

  auto verdict = [&](const Matrix& a, const Matrix& b, bool def) {
    const auto diff = first_difference(a, b);
    if (!diff) return Verdict::pass();
    const int col = diff->first;
    const int dy = y.dim, dz = z.dim;
    const int i = col / (dy * dz), j = (col / dz) % dy, k = col % dz;
    const auto [l, r] = def ? res.def_form_at(i, j, k) : res.t_form_at(i, j, k);
    return Verdict::fail("(x, y, z) = (" + x.labels[i] + ", " + y.labels[j] + ", " + z.labels[k] +
                         "): " + l + " vs " + r);
  };
  res.def_form = verdict(res.def_lhs, res.def_rhs, true);
  res.t_form = verdict(res.t_lhs, res.t_rhs, false);
  if (res.def_form.holds != res.t_form.holds) {
    throw CrossCheckError("pseudosymmetry forms disagree: braid form " +
                          std::string(res.def_form.holds ? "holds" : "fails") + ", T form " +
                          (res.t_form.holds ? "holds" : "fails"));
  }
  return res;
}

CheckReport hexagon_check(const YdObject& x, const YdObject& y, const YdObject& z) {
  const Matrix ix = Matrix::identity(x.dim), iy = Matrix::identity(y.dim),
               iz = Matrix::identity(z.dim);
  const Braiding xz = braiding_matrix(x, z), yz = braiding_matrix(y, z), xy = braiding_matrix(x, y);
  CheckReport rep;
  auto cmp = [](const Matrix& a, const Matrix& b) {
    const auto d = first_difference(a, b);
    return d ? Verdict::fail("column " + std::to_string(d->first)) : Verdict::pass();
  };
  rep.add("c_{X(x)Y,Z}", cmp(braiding_matrix(tensor_object(x, y), z).c,
                             kron(xz.c, iy) * kron(ix, yz.c)));
  rep.add("c_{X,Y(x)Z}", cmp(braiding_matrix(x, tensor_object(y, z)).c,
                             kron(iy, xz.c) * kron(xy.c, iz)));
  return rep;
}

WitnessSearch search_pseudosymmetry_witness(const std::vector<NamedObject>& catalog) {
  WitnessSearch out;
  for (const auto& a : catalog) {
    for (const auto& b : catalog) {
      for (const auto& c : catalog) {
        ++out.triples_tried;
        const PseudosymmetryResult r = pseudosymmetry_check(a.object, b.object, c.object);
        if (!r.holds()) {
          out.found = true;
          out.triple = a.name + ", " + b.name + ", " + c.name;
          out.witness = r.def_form.witness;
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<NamedObject> adjoint_catalog(std::shared_ptr<const HopfData> host) {
  const YdObject adj = adjoint_yd_module(host);
  return {{"adjoint", adj}, {"adjoint⊗adjoint", tensor_object(adj, adj)}};
}

}  // namespace qhopf
