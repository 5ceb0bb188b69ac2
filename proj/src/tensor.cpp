#include "qhopf/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhopf {

Tensor::Tensor(int arity) : arity_(arity) {
  if (arity < 1 || arity > kMaxArity) {
    throw std::invalid_argument("tensor arity out of range: " + std::to_string(arity));
  }
}

Tensor Tensor::basis(std::span<const int> idx, const Scalar& coeff) {
  Tensor t(static_cast<int>(idx.size()));
  t.add(idx, coeff);
  return t;
}

Tensor::Key Tensor::pack(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != arity_) {
    throw std::invalid_argument("index tuple has length " + std::to_string(idx.size()) +
                                ", tensor arity is " + std::to_string(arity_));
  }
  Key key = 0;
  for (int i : idx) {
    if (i < 0 || i > kMaxIndex) throw std::out_of_range("tensor index out of range");
    key = (key << kLegBits) | static_cast<Key>(i);
  }
  return key;
}

Tensor::Index Tensor::unpack(Key key) const {
  Index idx{};
  for (int leg = arity_ - 1; leg >= 0; --leg) {
    idx[leg] = static_cast<int>(key & kMaxIndex);
    key >>= kLegBits;
  }
  return idx;
}

void Tensor::add_key(Key key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Tensor::add(std::span<const int> idx, const Scalar& coeff) { add_key(pack(idx), coeff); }

Scalar Tensor::at(std::span<const int> idx) const {
  auto it = terms_.find(pack(idx));
  return it == terms_.end() ? Scalar() : it->second;
}

std::vector<std::pair<std::vector<int>, Scalar>> Tensor::sorted_terms() const {
  std::vector<std::pair<Key, const Scalar*>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& [k, v] : terms_) keyed.emplace_back(k, &v);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::vector<int>, Scalar>> out;
  out.reserve(keyed.size());
  for (const auto& [k, v] : keyed) {
    const Index idx = unpack(k);
    out.emplace_back(std::vector<int>(idx.begin(), idx.begin() + arity_), *v);
  }
  return out;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch in addition");
  for (const auto& [k, v] : o.terms_) add_key(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch in subtraction");
  for (const auto& [k, v] : o.terms_) add_key(k, -v);
  return *this;
}

Tensor& Tensor::scale(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [k, v] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || !(it->second == v)) return false;
  }
  return true;
}

std::optional<std::vector<int>> first_difference(const Tensor& a, const Tensor& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch in comparison");
  std::optional<Tensor::Key> best;
  auto consider = [&](Tensor::Key k) {
    if (!best || k < *best) best = k;
  };
  for (const auto& [k, v] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || !(it->second == v)) consider(k);
  }
  for (const auto& [k, v] : b.terms_) {
    if (!a.terms_.contains(k)) consider(k);
  }
  if (!best) return std::nullopt;
  const auto idx = a.unpack(*best);
  return std::vector<int>(idx.begin(), idx.begin() + a.arity_);
}

Tensor Tensor::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != arity_) {
    throw std::invalid_argument("leg permutation has wrong length");
  }
  Tensor out(arity_);
  Index dst{};
  for (const auto& [k, v] : terms_) {
    const Index src = unpack(k);
    for (int i = 0; i < arity_; ++i) dst[i] = src[perm[i]];
    out.add_key(out.pack(std::span<const int>(dst.data(), arity_)), v);
  }
  return out;
}

bool Tensor::well_formed(std::span<const int> dims) const {
  if (static_cast<int>(dims.size()) != arity_) return false;
  for (const auto& [k, v] : terms_) {
    if (v.is_zero()) return false;
    const Index idx = unpack(k);
    for (int i = 0; i < arity_; ++i) {
      if (idx[i] >= dims[i]) return false;
    }
  }
  return true;
}

}  // namespace qhopf
