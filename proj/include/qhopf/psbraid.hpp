#pragma once

// Braid words, the quotient PS_n = B_n / [P_n, P_n] with its complete
// invariant, canonical braiding words, and Yang-Baxter operators with their
// representations of braid words.

#include <string>
#include <vector>

#include "qhopf/quasitri.hpp"

namespace qhopf {

struct BraidLetter {
  int gen = 1;   // sigma_gen, 1 <= gen <= n-1
  int sign = 1;  // +1 or -1
  bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  /// Whitespace-separated tokens "s<i>" or "s<i>^-1" (also "^1", "^2", "^-2"...).
  /// Throws std::invalid_argument on bad syntax or generator out of range.
  static BraidWord parse(int n, const std::string& text);
  std::string to_string() const;
  BraidWord inverse() const;
  bool operator==(const BraidWord&) const = default;
};

/// Concatenation; strand counts must agree.
BraidWord operator*(const BraidWord& a, const BraidWord& b);
/// a b a^-1 b^-1
BraidWord commutator(const BraidWord& a, const BraidWord& b);

/// Permutation (start position -> end position, 0-based) and raw signed
/// crossing counts between strands, indexed by unordered pairs i < j of start
/// positions in lexicographic order.
struct PsInvariant {
  std::vector<int> perm;
  std::vector<long> crossings;

  long crossing(int i, int j) const;
  bool operator==(const PsInvariant&) const = default;
};

PsInvariant ps_invariant(const BraidWord& w);
/// Equality in PS_n. Throws std::invalid_argument if the strand counts differ.
bool ps_equal(const BraidWord& a, const BraidWord& b);

/// c_{n,m} = (s_m ... s_1)(s_{m+1} ... s_2) ... (s_{m+n-1} ... s_n) on n+m
/// strands; empty when n or m is 0.
BraidWord canonical_braiding_word(int n, int m);

/// An invertible operator on V (x) V, index i*dim + j.
struct YbOperator {
  int dim = 0;
  Matrix sigma;
  Matrix inverse;
};

/// Fills in the inverse by Gauss-Jordan elimination (constant pivots only).
YbOperator make_yb(int dim, Matrix sigma);
YbOperator swap_operator(int dim);

struct YbVerdict {
  Verdict yb;              // s1 s2 s1 = s2 s1 s2
  Verdict ps_sigma;        // s1 s2^-1 s1 = s2 s1^-1 s2
  Verdict ps_inverse;      // the same relation for sigma^-1
  bool is_yb() const { return yb.holds; }
  bool is_pseudosymmetric() const { return ps_sigma.holds && ps_inverse.holds; }
};

/// Throws SingularError if sigma * inverse is not the identity.
YbVerdict yb_check(const YbOperator& op);

/// Left regular module of H: action[a] column x is b_a b_x.
std::vector<Matrix> regular_action(const HopfData& h);

/// sigma(v (x) w) = sum b.w (x) a.v for R = sum a (x) b, with the inverse
/// (x (x) y) -> sum a'.y (x) b'.x from R^{-1} = sum a' (x) b'. Throws
/// AxiomError if the action is not a module or sigma fails the braid relation.
YbOperator yb_from_qt(const HopfData& h, const Tensor& r, const std::vector<Matrix>& action);

/// Matrix of the word on V^{(x)n}: s_i -> id^{i-1} (x) sigma (x) id^{n-i-1},
/// inverse letters use sigma^-1; the product is taken in word order.
Matrix represent(const BraidWord& w, const YbOperator& op);

/// (A (x) A)^{-1} sigma (A (x) A).
YbOperator transfer(const YbOperator& op, const Matrix& a);

struct WordPair {
  std::string name;
  BraidWord first;
  BraidWord second;
};

/// Documented sample of PS-equal word pairs on 3 and 4 strands.
std::vector<WordPair> ps_word_pair_sample();

}  // namespace qhopf
