#include <doctest.h>

#include <map>

#include "qhopf/errors.hpp"
#include "qhopf/group.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/posbasis.hpp"
#include "qhopf/radford.hpp"
#include "support.hpp"

using namespace qhopf;
using qhopf::test::uniform;

namespace {

Scalar q(long v) { return Scalar::integer(1, v); }

Matrix random_matrix(int rows, int cols) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    SparseVec col;
    for (int i = 0; i < rows; ++i) {
      if (uniform(0, 2) == 0) col.emplace_back(i, q(uniform(-3, 3)));
    }
    m.set_col(j, std::move(col));
  }
  return m;
}

using Dense = std::vector<std::vector<Scalar>>;

Dense dense(const Matrix& m) {
  Dense d(m.rows(), std::vector<Scalar>(m.cols(), q(0)));
  for (int j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.col(j)) d[i][j] = v;
  }
  return d;
}

}  // namespace

TEST_CASE("tensor add, cancel and reorder") {
  Tensor t(3);
  t.add({1, 2, 3}, q(2));
  t.add({1, 2, 3}, q(-2));
  CHECK(t.empty());
  t.add({0, 1, 2}, q(5));
  t.add({2, 0, 1}, q(7));
  const int perm[] = {2, 0, 1};
  const Tensor p = t.permuted(perm);
  CHECK(p.at({2, 0, 1}) == q(5));
  CHECK(p.at({1, 2, 0}) == q(7));
  CHECK(p.permuted(std::vector<int>{1, 2, 0}) == t);
  const auto sorted = t.sorted_terms();
  REQUIRE(sorted.size() == 2);
  CHECK(sorted[0].first == std::vector<int>{0, 1, 2});
  Tensor u = t;
  u.add({2, 0, 1}, q(1));
  CHECK(first_difference(t, u) == std::vector<int>{2, 0, 1});
  CHECK(!first_difference(t, t));
}

TEST_CASE("pack and unpack are inverse") {
  Tensor t(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> idx;
    for (int i = 0; i < 5; ++i) idx.push_back(uniform(0, Tensor::kMaxIndex));
    const auto back = t.unpack(t.pack(idx));
    CHECK(std::equal(idx.begin(), idx.end(), back.begin()));
  }
}

TEST_CASE("matrix product and kron agree with dense oracles") {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(3, 4), b = random_matrix(4, 2), c = random_matrix(2, 3);
    const Dense da = dense(a), db = dense(b), dab = dense(a * b);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 2; ++j) {
        Scalar s = q(0);
        for (int k = 0; k < 4; ++k) s += da[i][k] * db[k][j];
        CHECK(dab[i][j] == s);
      }
    }
    const Dense dk = dense(kron(a, c));
    const Dense dc = dense(c);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 3; ++l) CHECK(dk[i * 2 + k][j * 3 + l] == da[i][j] * dc[k][l]);
        }
      }
    }
  }
}

TEST_CASE("matrix inverse and permutations") {
  for (int trial = 0; trial < 20; ++trial) {
    // unitriangular with random entries above the diagonal
    const int n = uniform(1, 6);
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) {
      SparseVec col{{j, q(1)}};
      for (int i = 0; i < j; ++i) col.emplace_back(i, q(uniform(-4, 4)));
      m.set_col(j, std::move(col));
    }
    const Matrix p = Matrix::permutation([&] {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = (i + trial) % n;
      return img;
    }());
    const Matrix a = p * m;
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
  const Matrix p = Matrix::permutation({2, 0, 1});
  CHECK(p.at(2, 0) == q(1));
  CHECK(p.at(0, 1) == q(1));
  Matrix singular(2, 2);
  singular.set_col(0, {{0, q(1)}});
  singular.set_col(1, {{0, q(2)}});
  CHECK_THROWS_AS(singular.inverse(), SingularError);
}

TEST_CASE("group tables are validated") {
  // Smallest non-associative loop: identity 0, Latin square, (1*1)*2 != 1*(1*2).
  const std::vector<std::vector<int>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup g(loop, {"e", "a", "b", "c", "d"}, 0);
    FAIL("loop accepted as a group");
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).find("associativity fails at (") != std::string::npos);
  }
  std::vector<std::vector<int>> c2{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup(c2, {"e", "c"}, 0), AxiomError);
  for (const auto& name : catalog_group_names()) {
    const FiniteGroup g = *catalog_group(name);
    CHECK(g.is_abelian() == (name != "s3"));
    for (int a = 0; a < g.order(); ++a) CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.find(g.label(g.order() - 1)) == g.order() - 1);
  }
  CHECK_THROWS_AS(symmetric_group3().find("zz"), std::invalid_argument);
}

TEST_CASE("every built algebra satisfies the Hopf axioms") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    const HopfData h = group_algebra(*catalog_group(name));
    CHECK(verify_hopf(h).all_pass());
    CHECK(is_cocommutative(h));
    CHECK(is_commutative(h) == (name != "s3"));
  }
  for (int nu : {1, 3, 5}) {
    CAPTURE(nu);
    const auto hp = build_radford(nu).hopf;
    const HopfData& h = *hp;
    CHECK(h.dim == 4 * nu);
    CHECK(verify_hopf(h).all_pass());
    CHECK(!is_commutative(h));
    CHECK(!is_cocommutative(h));
  }
  for (const auto& f : test::factorization_catalog()) {
    CAPTURE(f.name);
    const HopfData h = build_positive_hopf(f.uf);
    CHECK(verify_hopf(h).all_pass());
    // positive basis: every structure constant is 0 or 1
    for (const auto& col : h.mul) {
      for (const auto& [k, c] : col) CHECK(c.is_one());
    }
    for (const auto& t : h.comul) {
      for (const auto& [k, c] : t.terms()) CHECK(c.is_one());
    }
  }
}

TEST_CASE("antipode of H_1 has order 4") {
  const auto hp = build_radford(1).hopf;
  const HopfData& h = *hp;
  const Matrix s = h.antipode;
  CHECK(!(s * s).is_identity());
  CHECK((s * s * s * s).is_identity());
  CHECK((antipode_inverse(h) * s).is_identity());
}

TEST_CASE("corrupted structures fail with witnesses") {
  const HopfData good = group_algebra(*catalog_group("c3"));
  {
    HopfData h = good;
    h.mul[1 * 3 + 1] = {{1, q(1)}};  // c * c = c
    const CheckReport r = verify_hopf(h);
    CHECK(!r["associativity"].holds);
    CHECK(!r["associativity"].witness.empty());
  }
  {
    HopfData h = good;
    h.comul[1] = Tensor::basis({1, 2}, q(1));
    const CheckReport r = verify_hopf(h);
    CHECK(r["coassociativity"].holds);
    CHECK(!r["counit"].holds);
  }
  {
    HopfData h = good;
    h.antipode = Matrix::identity(3);
    const CheckReport r = verify_hopf(h);
    CHECK(!r["antipode left"].holds);
    CHECK(r["antipode left"].witness.find("c") != std::string::npos);
  }
  {
    HopfData h = good;
    h.counit[2] = q(0);
    CHECK(!verify_hopf(h)["counit"].holds);
  }
  {
    HopfData h = *build_radford(1).hopf;
    h.mul[h.dim * 2 + 1] = {{0, Scalar::one(2)}};  // g * x = 1
    CHECK(!verify_hopf(h).all_pass());
  }
}

TEST_CASE("tensor_mul and embeddings") {
  const auto hp = build_radford(1).hopf;
  const HopfData& h = *hp;  // basis 1, x, g, gx
  const Tensor g = basis_element(h, 2);
  const Tensor x = basis_element(h, 1);
  // x g = -g x
  CHECK(tensor_mul(h, x, g) == basis_element(h, 3, Scalar::integer(2, -1)));
  const Tensor t = Tensor::basis({2, 1}, Scalar::one(2));
  CHECK(embed_legs(h, t, 3, 3, 1).at({1, 0, 2}) == Scalar::one(2));
  CHECK(flip(t).at({1, 2}) == Scalar::one(2));
  // (eps x id) Delta = id
  for (int i = 0; i < h.dim; ++i) {
    Tensor d(2);
    for (const auto& [k, c] : h.comul[i].terms()) d.add_key(k, c);
    CHECK(apply_counit_leg(h, d, 1) == basis_element(h, i));
  }
  CHECK(label_tuple(h, std::vector<int>{2, 1}) == "g ⊗ x");
}
