#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

/// Sparse element of V_1 (x) ... (x) V_k, keyed by tuples of basis indices.
/// Zero coefficients are never stored.
class Tensor {
 public:
  static constexpr int kMaxArity = 5;
  static constexpr int kLegBits = 12;
  static constexpr int kMaxIndex = (1 << kLegBits) - 1;

  using Key = std::uint64_t;
  using Index = std::array<int, kMaxArity>;

  explicit Tensor(int arity = 1);

  /// coeff * (b_{idx[0]} (x) ... (x) b_{idx[k-1]}).
  static Tensor basis(std::span<const int> idx, const Scalar& coeff);
  static Tensor basis(std::initializer_list<int> idx, const Scalar& coeff) {
    return basis(std::span<const int>(idx.begin(), idx.size()), coeff);
  }

  int arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff at idx; drops the entry if it cancels to zero.
  void add(std::span<const int> idx, const Scalar& coeff);
  void add(std::initializer_list<int> idx, const Scalar& coeff) {
    add(std::span<const int>(idx.begin(), idx.size()), coeff);
  }
  void add_key(Key key, const Scalar& coeff);

  Scalar at(std::span<const int> idx) const;
  Scalar at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  const std::unordered_map<Key, Scalar>& terms() const { return terms_; }
  /// Terms in lexicographic index order.
  std::vector<std::pair<std::vector<int>, Scalar>> sorted_terms() const;

  Key pack(std::span<const int> idx) const;
  Index unpack(Key key) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& scale(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor t) { return t.scale(s); }
  friend bool operator==(const Tensor& a, const Tensor& b);

  /// First index tuple (lexicographic) where the two tensors differ.
  friend std::optional<std::vector<int>> first_difference(const Tensor& a, const Tensor& b);

  /// Reorders legs: leg i of the result is leg perm[i] of this tensor (0-based).
  Tensor permuted(std::span<const int> perm) const;

  /// Every stored coefficient is nonzero and every index fits its dimension.
  bool well_formed(std::span<const int> dims) const;

 private:
  int arity_;
  std::unordered_map<Key, Scalar> terms_;
};

}  // namespace qhopf
