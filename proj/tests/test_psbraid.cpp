#include <doctest.h>

#include "qhopf/errors.hpp"
#include "qhopf/psbraid.hpp"
#include "qhopf/radford.hpp"
#include "support.hpp"

using namespace qhopf;
using qhopf::test::uniform;

namespace {

BraidWord random_word(int n, int length) {
  BraidWord w;
  w.n = n;
  for (int i = 0; i < length; ++i) w.letters.push_back({uniform(1, n - 1), uniform(0, 1) ? 1 : -1});
  return w;
}

BraidWord slice(const BraidWord& w, std::size_t from, std::size_t to) {
  BraidWord out;
  out.n = w.n;
  out.letters.assign(w.letters.begin() + from, w.letters.begin() + to);
  return out;
}

// Relators r1 r2^-1 of B_n and of the extra PS_n relation, for every valid index.
std::vector<BraidWord> relators(int n) {
  std::vector<BraidWord> out;
  auto g = [&](int i, int e) {
    BraidWord w;
    w.n = n;
    w.letters.push_back({i, e});
    return w;
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) out.push_back(g(i, 1) * g(j, 1) * g(i, -1) * g(j, -1));
    if (i + 1 < n) {
      const int k = i + 1;
      out.push_back(g(i, 1) * g(k, 1) * g(i, 1) * (g(k, 1) * g(i, 1) * g(k, 1)).inverse());
      out.push_back(g(i, 1) * g(k, -1) * g(i, 1) * (g(k, 1) * g(i, -1) * g(k, 1)).inverse());
    }
  }
  return out;
}

// Pure braid generator A_ij (1-based strands i < j).
BraidWord pure_generator(int n, int i, int j) {
  BraidWord w;
  w.n = n;
  for (int k = j - 1; k > i; --k) w.letters.push_back({k, 1});
  w.letters.push_back({i, 1});
  w.letters.push_back({i, 1});
  for (int k = i + 1; k < j; ++k) w.letters.push_back({k, -1});
  return w;
}

Matrix non_yb_sigma() {
  // A (x) I with A = [[1, 1], [0, 1]]
  const Scalar one = Scalar::one(1);
  Matrix a(2, 2);
  a.set_col(0, {{0, one}});
  a.set_col(1, {{0, one}, {1, one}});
  return kron(a, Matrix::identity(2));
}

}  // namespace

TEST_CASE("word syntax") {
  const BraidWord w = BraidWord::parse(3, "s1 s2^-1  s1^2");
  CHECK(w.letters.size() == 4);
  CHECK(w.to_string() == "s1 s2^-1 s1 s1");
  CHECK(BraidWord::parse(3, w.to_string()) == w);
  CHECK(w.inverse().to_string() == "s1^-1 s1^-1 s2 s1^-1");
  CHECK(BraidWord::parse(4, "").letters.empty());
  for (const char* bad : {"s3", "s0", "t1", "s1^", "s1^x", "s", "s1x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BraidWord::parse(3, bad), std::invalid_argument);
  }
}

TEST_CASE("invariant of s1 s2^-1 s1") {
  const PsInvariant inv = ps_invariant(BraidWord::parse(3, "s1 s2^-1 s1"));
  CHECK(inv.perm == std::vector<int>{2, 1, 0});
  CHECK(inv.crossing(0, 1) == 1);
  CHECK(inv.crossing(0, 2) == -1);
  CHECK(inv.crossing(1, 2) == 1);
  CHECK(ps_equal(BraidWord::parse(3, "s1 s2^-1 s1"), BraidWord::parse(3, "s2 s1^-1 s2")));
}

TEST_CASE("the invariant is constant under the defining relations") {
  for (int n = 2; n <= 5; ++n) {
    const auto rels = relators(n);
    for (int trial = 0; trial < 60; ++trial) {
      const BraidWord w = random_word(n, uniform(0, 12));
      const std::size_t cut = uniform(0, static_cast<int>(w.letters.size()));
      const BraidWord head = slice(w, 0, cut), tail = slice(w, cut, w.letters.size());
      for (const auto& r : rels) {
        CHECK(ps_equal(w, head * r * tail));
        CHECK(ps_equal(w, head * r.inverse() * tail));
      }
      CHECK(ps_equal(w * w.inverse(), BraidWord::parse(n, "")));
    }
  }
}

TEST_CASE("commutators of pure braids vanish") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<BraidWord> gens;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) gens.push_back(pure_generator(n, i, j));
    }
    for (const auto& a : gens) {
      CHECK(ps_invariant(a).perm == ps_invariant(BraidWord::parse(n, "")).perm);
      for (const auto& b : gens) CHECK(ps_equal(commutator(a, b), BraidWord::parse(n, "")));
    }
  }
}

TEST_CASE("distinct elements are told apart") {
  CHECK(!ps_equal(BraidWord::parse(2, "s1"), BraidWord::parse(2, "s1^-1")));
  CHECK(!ps_equal(BraidWord::parse(2, "s1^2"), BraidWord::parse(2, "")));
  CHECK(!ps_equal(BraidWord::parse(3, "s1 s2"), BraidWord::parse(3, "s2 s1")));
  CHECK_THROWS_AS(ps_equal(BraidWord::parse(2, "s1"), BraidWord::parse(3, "s1")), std::invalid_argument);
}

TEST_CASE("canonical braiding words move the first block past the second") {
  CHECK(canonical_braiding_word(1, 1).to_string() == "s1");
  CHECK(canonical_braiding_word(2, 1).to_string() == "s1 s2");
  CHECK(canonical_braiding_word(1, 2).to_string() == "s2 s1");
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const PsInvariant inv = ps_invariant(canonical_braiding_word(n, m));
      for (int i = 0; i < n + m; ++i) CHECK(inv.perm[i] == (i < n ? i + m : i - n));
      for (long c : inv.crossings) CHECK((c == 0 || c == 1));
    }
  }
}

TEST_CASE("swap and diagonal braidings") {
  const YbOperator sw = swap_operator(3);
  const YbVerdict v = yb_check(sw);
  CHECK(v.is_yb());
  CHECK(v.is_pseudosymmetric());
  for (int trial = 0; trial < 10; ++trial) {
    const int d = uniform(2, 3);
    Matrix sigma(d * d, d * d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) sigma.set_col(i * d + j, {{j * d + i, Scalar(1, test::small_rational() + 7)}});
    }
    const YbVerdict dv = yb_check(make_yb(d, sigma));
    CHECK(dv.is_yb());
    CHECK(dv.is_pseudosymmetric());
  }
}

TEST_CASE("non Yang-Baxter operator") {
  const YbOperator op = make_yb(2, non_yb_sigma());
  CHECK(!yb_check(op).is_yb());
  CHECK(!yb_check(op).yb.witness.empty());
  YbOperator broken = op;
  broken.inverse = op.sigma;
  CHECK_THROWS_AS(yb_check(broken), SingularError);
}

TEST_CASE("representations are multiplicative and transfer preserves verdicts") {
  const RadfordAlgebra a = build_radford(1);
  const QtStructure q = build_R(a, {1, std::nullopt});
  const YbOperator op = yb_from_qt(*a.hopf, q.r, regular_action(*a.hopf));
  for (int trial = 0; trial < 5; ++trial) {
    const BraidWord x = random_word(3, uniform(0, 4)), y = random_word(3, uniform(0, 4));
    CHECK(represent(x * y, op) == represent(x, op) * represent(y, op));
    CHECK((represent(x, op) * represent(x.inverse(), op)).is_identity());
  }
  Matrix t(4, 4);  // unitriangular change of basis
  const Scalar one = Scalar::one(2);
  for (int j = 0; j < 4; ++j) t.set_col(j, j == 3 ? SparseVec{{0, one}, {3, one}} : SparseVec{{j, one}});
  const YbVerdict before = yb_check(op), after = yb_check(transfer(op, t));
  CHECK(after.is_yb() == before.is_yb());
  CHECK(after.is_pseudosymmetric() == before.is_pseudosymmetric());
}

TEST_CASE("H_1 regular module with R_{1,beta}") {
  const RadfordAlgebra a = build_radford(1);
  const QtStructure q = build_R(a, {1, std::nullopt});
  const YbOperator op = yb_from_qt(*a.hopf, q.r, regular_action(*a.hopf));
  CHECK(op.dim == 4);
  const YbVerdict v = yb_check(op);
  CHECK(v.is_yb());
  CHECK(v.is_pseudosymmetric());
  for (const auto& wp : ps_word_pair_sample()) {
    CAPTURE(wp.name);
    CHECK(ps_equal(wp.first, wp.second));
    CHECK(represent(wp.first, op) == represent(wp.second, op));
  }
  CHECK(represent(canonical_braiding_word(1, 1), op) == op.sigma);
  // s = nu: triangular, so sigma^2 = id
  CHECK((op.sigma * op.sigma).is_identity());
  CHECK(!(op.sigma == swap_operator(4).sigma));
}

TEST_CASE("a non-module action is rejected") {
  const RadfordAlgebra a = build_radford(1);
  const QtStructure q = build_R(a, {1, std::nullopt});
  auto action = regular_action(*a.hopf);
  action[1] = Matrix::identity(4);  // x acting as the identity
  CHECK_THROWS_AS(yb_from_qt(*a.hopf, q.r, action), AxiomError);
}

#ifdef QHOPF_SLOW_TESTS
TEST_CASE("H_3 regular module with R_{1,beta}") {
  const RadfordAlgebra a = build_radford(3);
  const QtStructure q = build_R(a, {1, std::nullopt});
  const YbOperator op = yb_from_qt(*a.hopf, q.r, regular_action(*a.hopf));
  const YbVerdict v = yb_check(op);
  CHECK(v.is_yb());
  CHECK(v.is_pseudosymmetric());
  for (const auto& wp : ps_word_pair_sample()) {
    if (wp.first.n > 3) continue;
    CAPTURE(wp.name);
    CHECK(represent(wp.first, op) == represent(wp.second, op));
  }
}
#endif
