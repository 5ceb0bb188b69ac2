#include "qhopf/hopf.hpp"

#include <functional>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

using Key = Tensor::Key;
constexpr int kBits = Tensor::kLegBits;

std::span<const int> head(const Tensor::Index& idx, int n) {
  return std::span<const int>(idx.data(), n);
}

// Multiplies the two legs of an arity-2 tensor together.
Tensor multiply_legs(const HopfData& h, const Tensor& t) {
  Tensor out(1);
  for (const auto& [k, v] : t.terms()) {
    const auto idx = t.unpack(k);
    for (const auto& [r, c] : h.product(idx[0], idx[1])) out.add({r}, v * c);
  }
  return out;
}

Tensor counit_times_unit(const HopfData& h, int i) {
  Tensor out(1);
  if (h.counit[i].is_zero()) return out;
  for (const auto& [r, c] : h.unit) out.add({r}, h.counit[i] * c);
  return out;
}

Scalar counit_of(const HopfData& h, const Tensor& t) {
  Scalar acc = Scalar::zero(h.conductor);
  for (const auto& [k, v] : t.terms()) acc += v * h.counit[t.unpack(k)[0]];
  return acc;
}

std::string label_of(const HopfData& h, int i) {
  if (i >= 0 && i < static_cast<int>(h.labels.size())) return h.labels[i];
  return "#" + std::to_string(i);
}

}  // namespace

std::string label_tuple(const HopfData& h, std::span<const int> idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += " ⊗ ";
    out += label_of(h, idx[i]);
  }
  return out;
}

Tensor basis_element(const HopfData& h, int i, const Scalar& coeff) {
  if (i < 0 || i >= h.dim) throw std::out_of_range("basis index out of range");
  return Tensor::basis({i}, coeff);
}

Tensor basis_element(const HopfData& h, int i) {
  return basis_element(h, i, Scalar::one(h.conductor));
}

Tensor unit_tensor(const HopfData& h, int k) {
  Tensor out(k);
  Tensor::Index idx{};
  std::function<void(int, Scalar)> rec = [&](int leg, Scalar c) {
    if (leg == k) {
      out.add(head(idx, k), c);
      return;
    }
    for (const auto& [r, v] : h.unit) {
      idx[leg] = r;
      rec(leg + 1, c * v);
    }
  };
  rec(0, Scalar::one(h.conductor));
  return out;
}

Tensor tensor_mul(const HopfData& h, const Tensor& s, const Tensor& t) {
  if (s.arity() != t.arity()) throw std::invalid_argument("tensor_mul: arity mismatch");
  const int k = s.arity();
  Tensor out(k);
  std::array<const SparseVec*, Tensor::kMaxArity> legs{};
  std::function<void(int, Key, const Scalar&)> expand = [&](int leg, Key key, const Scalar& c) {
    if (leg == k) {
      out.add_key(key, c);
      return;
    }
    for (const auto& [r, v] : *legs[leg]) {
      const Key next = (key << kBits) | static_cast<Key>(r);
      if (v.is_one()) {
        expand(leg + 1, next, c);
      } else {
        expand(leg + 1, next, c * v);
      }
    }
  };
  for (const auto& [ks, vs] : s.terms()) {
    const auto a = s.unpack(ks);
    for (const auto& [kt, vt] : t.terms()) {
      const auto b = t.unpack(kt);
      bool zero = false;
      for (int leg = 0; leg < k; ++leg) {
        if (a[leg] >= h.dim || b[leg] >= h.dim) {
          throw std::out_of_range("tensor_mul: index exceeds algebra dimension");
        }
        legs[leg] = &h.product(a[leg], b[leg]);
        if (legs[leg]->empty()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      expand(0, 0, vs * vt);
    }
  }
  return out;
}

Tensor embed_legs(const HopfData& h, const Tensor& t, int k, int leg_i, int leg_j) {
  if (t.arity() != 2) throw std::invalid_argument("embed_legs expects an arity-2 tensor");
  if (leg_i < 1 || leg_i > k || leg_j < 1 || leg_j > k || leg_i == leg_j) {
    throw std::out_of_range("embed_legs: legs out of range");
  }
  Tensor out(k);
  Tensor::Index idx{};
  for (const auto& [key, v] : t.terms()) {
    const auto ab = t.unpack(key);
    std::function<void(int, Scalar)> rec = [&](int leg, Scalar c) {
      if (leg == k) {
        out.add(head(idx, k), c);
        return;
      }
      if (leg == leg_i - 1) {
        idx[leg] = ab[0];
        rec(leg + 1, c);
      } else if (leg == leg_j - 1) {
        idx[leg] = ab[1];
        rec(leg + 1, c);
      } else {
        for (const auto& [r, u] : h.unit) {
          idx[leg] = r;
          rec(leg + 1, c * u);
        }
      }
    };
    rec(0, v);
  }
  return out;
}

Tensor apply_coproduct_leg(const HopfData& h, const Tensor& t, int leg) {
  const int k = t.arity();
  if (leg < 1 || leg > k) throw std::out_of_range("apply_coproduct_leg: leg out of range");
  Tensor out(k + 1);
  Tensor::Index dst{};
  for (const auto& [key, v] : t.terms()) {
    const auto src = t.unpack(key);
    for (int i = 0; i < leg - 1; ++i) dst[i] = src[i];
    for (int i = leg; i < k; ++i) dst[i + 1] = src[i];
    const Tensor& delta = h.comul.at(src[leg - 1]);
    for (const auto& [ck, cv] : delta.terms()) {
      const auto pq = delta.unpack(ck);
      dst[leg - 1] = pq[0];
      dst[leg] = pq[1];
      out.add(head(dst, k + 1), v * cv);
    }
  }
  return out;
}

Tensor apply_counit_leg(const HopfData& h, const Tensor& t, int leg) {
  const int k = t.arity();
  if (k < 2) throw std::invalid_argument("apply_counit_leg needs arity >= 2");
  if (leg < 1 || leg > k) throw std::out_of_range("apply_counit_leg: leg out of range");
  Tensor out(k - 1);
  Tensor::Index dst{};
  for (const auto& [key, v] : t.terms()) {
    const auto src = t.unpack(key);
    const Scalar& e = h.counit.at(src[leg - 1]);
    if (e.is_zero()) continue;
    int n = 0;
    for (int i = 0; i < k; ++i) {
      if (i != leg - 1) dst[n++] = src[i];
    }
    out.add(head(dst, k - 1), v * e);
  }
  return out;
}

Tensor apply_map_leg(const Matrix& map, const Tensor& t, int leg) {
  const int k = t.arity();
  if (leg < 1 || leg > k) throw std::out_of_range("apply_map_leg: leg out of range");
  Tensor out(k);
  for (const auto& [key, v] : t.terms()) {
    auto idx = t.unpack(key);
    for (const auto& [r, c] : map.col(idx[leg - 1])) {
      idx[leg - 1] = r;
      out.add(head(idx, k), v * c);
    }
  }
  return out;
}

Tensor flip(const Tensor& t) {
  static constexpr int kSwap[] = {1, 0};
  return t.permuted(kSwap);
}

CheckReport verify_hopf(const HopfData& h) {
  CheckReport rep;
  const int n = h.dim;
  auto b = [&](int i) { return basis_element(h, i); };
  auto first = [](auto&& pred, int count) -> std::optional<int> {
    for (int i = 0; i < count; ++i) {
      if (!pred(i)) return i;
    }
    return std::nullopt;
  };

  bool shaped = static_cast<int>(h.mul.size()) == n * n && static_cast<int>(h.comul.size()) == n &&
                static_cast<int>(h.counit.size()) == n && h.antipode.rows() == n &&
                h.antipode.cols() == n;
  rep.add("structure", shaped ? Verdict::pass() : Verdict::fail("structure maps not total"));
  if (!shaped) return rep;

  Tensor one(1);
  for (const auto& [r, c] : h.unit) one.add({r}, c);

  {
    Verdict v;
    for (int i = 0; i < n && v.holds; ++i) {
      for (int j = 0; j < n && v.holds; ++j) {
        const Tensor ij = tensor_mul(h, b(i), b(j));
        for (int k = 0; k < n; ++k) {
          if (!(tensor_mul(h, ij, b(k)) == tensor_mul(h, b(i), tensor_mul(h, b(j), b(k))))) {
            const int w[] = {i, j, k};
            v = Verdict::fail("(" + label_tuple(h, w) + ")");
            break;
          }
        }
      }
    }
    rep.add("associativity", v);
  }
  {
    auto bad = first([&](int i) {
      return tensor_mul(h, one, b(i)) == b(i) && tensor_mul(h, b(i), one) == b(i);
    }, n);
    rep.add("unit", bad ? Verdict::fail(label_of(h, *bad)) : Verdict::pass());
  }
  {
    auto bad = first([&](int i) {
      return apply_coproduct_leg(h, h.comul[i], 1) == apply_coproduct_leg(h, h.comul[i], 2);
    }, n);
    rep.add("coassociativity", bad ? Verdict::fail(label_of(h, *bad)) : Verdict::pass());
  }
  {
    auto bad = first([&](int i) {
      return apply_counit_leg(h, h.comul[i], 1) == b(i) &&
             apply_counit_leg(h, h.comul[i], 2) == b(i);
    }, n);
    rep.add("counit", bad ? Verdict::fail(label_of(h, *bad)) : Verdict::pass());
  }
  {
    Verdict v;
    Tensor delta_one(2);
    for (const auto& [r, c] : h.unit) delta_one += c * h.comul[r];
    if (!(delta_one == unit_tensor(h, 2))) v = Verdict::fail("Delta(1) != 1 ⊗ 1");
    for (int i = 0; i < n && v.holds; ++i) {
      for (int j = 0; j < n; ++j) {
        Tensor lhs(2);
        for (const auto& [r, c] : h.product(i, j)) lhs += c * h.comul[r];
        if (!(lhs == tensor_mul(h, h.comul[i], h.comul[j]))) {
          const int w[] = {i, j};
          v = Verdict::fail("(" + label_tuple(h, w) + ")");
          break;
        }
      }
    }
    rep.add("comultiplication multiplicative", v);
  }
  {
    Verdict v;
    if (!(counit_of(h, one) == Scalar::one(h.conductor))) v = Verdict::fail("epsilon(1) != 1");
    for (int i = 0; i < n && v.holds; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!(counit_of(h, tensor_mul(h, b(i), b(j))) == h.counit[i] * h.counit[j])) {
          const int w[] = {i, j};
          v = Verdict::fail("(" + label_tuple(h, w) + ")");
          break;
        }
      }
    }
    rep.add("counit multiplicative", v);
  }
  {
    auto bad = first([&](int i) {
      return multiply_legs(h, apply_map_leg(h.antipode, h.comul[i], 1)) ==
             counit_times_unit(h, i);
    }, n);
    rep.add("antipode left", bad ? Verdict::fail(label_of(h, *bad)) : Verdict::pass());
  }
  {
    auto bad = first([&](int i) {
      return multiply_legs(h, apply_map_leg(h.antipode, h.comul[i], 2)) ==
             counit_times_unit(h, i);
    }, n);
    rep.add("antipode right", bad ? Verdict::fail(label_of(h, *bad)) : Verdict::pass());
  }
  return rep;
}

Matrix antipode_inverse(const HopfData& h) {
  Matrix inv = h.antipode.inverse();
  if (!(inv * h.antipode).is_identity() || !(h.antipode * inv).is_identity()) {
    throw SingularError("antipode inverse failed to compose to the identity");
  }
  return inv;
}

bool is_commutative(const HopfData& h) {
  for (int i = 0; i < h.dim; ++i) {
    for (int j = i + 1; j < h.dim; ++j) {
      if (!(h.product(i, j) == h.product(j, i))) return false;
    }
  }
  return true;
}

bool is_cocommutative(const HopfData& h) {
  for (int i = 0; i < h.dim; ++i) {
    if (!(h.comul[i] == flip(h.comul[i]))) return false;
  }
  return true;
}

HopfData group_algebra(const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& labels, int identity) {
  HopfData h;
  const int n = static_cast<int>(table.size());
  h.dim = n;
  h.conductor = 1;
  h.labels = labels;
  const Scalar one = Scalar::one(1);
  h.mul.resize(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h.mul[i * n + j] = {{table[i][j], one}};
  }
  h.unit = {{identity, one}};
  h.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    h.comul.push_back(Tensor::basis({i, i}, one));
    h.counit.push_back(one);
    for (int j = 0; j < n; ++j) {
      if (table[i][j] == identity) h.antipode.set_col(i, {{j, one}});
    }
  }
  return h;
}

}  // namespace qhopf
