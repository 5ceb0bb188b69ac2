#include <doctest.h>

#include <functional>

#include "qhopf/errors.hpp"
#include "qhopf/posbasis.hpp"
#include "support.hpp"

using namespace qhopf;
using qhopf::test::elements;

namespace {

// Every map G+ -> G- that respects multiplication, by exhaustive search.
int count_homomorphisms(const UniqueFactorization& uf) {
  const FiniteGroup& g = uf.group();
  const auto& plus = uf.plus();
  const auto& minus = uf.minus();
  std::vector<int> image(g.order(), -1);
  int count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == plus.size()) {
      for (int u : plus) {
        for (int v : plus) {
          if (image[g.mul(u, v)] != g.mul(image[u], image[v])) return;
        }
      }
      ++count;
      return;
    }
    for (int x : minus) {
      image[plus[i]] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

bool eta_central_oracle(const UniqueFactorization& uf, const HomPair& p) {
  const FiniteGroup& g = uf.group();
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      if (p.eta[g.mul(u, v)] != p.eta[g.mul(v, u)]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("factorization validation") {
  const FiniteGroup c4 = cyclic_group(4);
  const auto half = elements(c4, {"e", "c^2"});
  try {
    UniqueFactorization::verify(c4, half, half);
    FAIL("accepted a non-unique factorization");
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).find("factorization") != std::string::npos);
  }
  const FiniteGroup s3 = symmetric_group3();
  CHECK_THROWS_AS(UniqueFactorization::verify(s3, elements(s3, {"e", "r"}), elements(s3, {"e", "s", "sr"})),
                  AxiomError);
  CHECK_THROWS_AS(UniqueFactorization::verify(s3, elements(s3, {"e", "s"}), elements(s3, {"e", "sr"})),
                  AxiomError);
}

TEST_CASE("both decompositions and the four actions") {
  for (const auto& f : test::factorization_catalog()) {
    CAPTURE(f.name);
    const auto& uf = f.uf;
    const FiniteGroup& g = uf.group();
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(uf.plus_part(a), uf.minus_part(a)) == a);
      CHECK(g.mul(uf.bar_minus(a), uf.bar_plus(a)) == a);
      CHECK(uf.in_plus(uf.plus_part(a)));
      CHECK(uf.in_minus(uf.bar_minus(a)));
    }
    for (int x : uf.minus()) {
      for (int u : uf.plus()) {
        CHECK(g.mul(uf.minus_on_plus_left(x, u), uf.plus_on_minus_right(x, u)) == g.mul(x, u));
        CHECK(g.mul(uf.plus_on_minus_left(u, x), uf.minus_on_plus_right(u, x)) == g.mul(u, x));
      }
    }
    CHECK(derived_action_identities(uf).all_pass());
  }
}

TEST_CASE("homomorphism enumeration matches brute force") {
  for (const auto& f : test::factorization_catalog(false)) {
    CAPTURE(f.name);
    const auto homs = enumerate_homomorphisms(f.uf);
    CHECK(static_cast<int>(homs.size()) == count_homomorphisms(f.uf));
  }
  const DoubleStructure d = build_double(*catalog_group("c3"));
  CHECK(static_cast<int>(enumerate_homomorphisms(d.factorization).size()) == 3);
}

TEST_CASE("every positive structure is consistent") {
  for (const auto& f : test::factorization_catalog()) {
    CAPTURE(f.name);
    auto host = std::make_shared<const HopfData>(build_positive_hopf(f.uf));
    const auto pairs = enumerate_hom_pairs(f.uf);
    for (const auto& p : pairs) {
      CAPTURE(describe_pair(f.uf, p));
      CHECK(pair_conditions(f.uf, p).all_pass());
      CHECK(pair_conditions_dual(f.uf, p).all_pass());
      const PositiveQt pq = build_R_xi_eta(f.uf, host, p);
      const std::size_t n = f.uf.plus().size();
      CHECK(pq.positive);
      CHECK(pq.qt.r.size() == n * n);
      for (const auto& [k, c] : pq.qt.r.terms()) CHECK(c.is_one());
      const PairAnalysis an = analyze_pair(f.uf, host, p);
      CHECK(an.qt.all_pass());
      CHECK(an.triangular.holds == an.xi_equals_eta);
      CHECK(an.pseudo.direct.holds == an.pseudo.via_f.holds);
      CHECK(an.conditions.holds == an.pseudo.holds());
      if (is_normal(f.uf, p)) {
        REQUIRE(an.normal);
        CHECK(an.normal->holds == eta_central_oracle(f.uf, p));
        CHECK(an.normal->holds == an.pseudo.holds());
      } else {
        CHECK_THROWS_AS(normal_pseudo_criterion(f.uf, p), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("pair counts") {
  auto count = [](const std::string& group, bool plus_whole) {
    const FiniteGroup g = *catalog_group(group);
    const std::vector<int> e{g.identity()};
    const auto uf = plus_whole ? UniqueFactorization::verify(g, test::all_elements(g), e)
                               : UniqueFactorization::verify(g, e, test::all_elements(g));
    return enumerate_hom_pairs(uf).size();
  };
  // With G- trivial both maps are trivial; the pair survives iff G is abelian.
  CHECK(count("c4", true) == 1);
  CHECK(count("c2xc2", true) == 1);
  CHECK(count("s3", true) == 0);
  CHECK(count("s3", false) == 1);
}

TEST_CASE("Drinfeld doubles") {
  for (const auto& name : catalog_group_names()) {
    CAPTURE(name);
    const FiniteGroup g = *catalog_group(name);
    const DoubleStructure d = build_double(g);
    CHECK(d.hopf->dim == g.order() * g.order());
    CHECK(verify_hopf(*d.hopf).all_pass());
    CHECK(verify_qt(*d.hopf, d.qt.r).all_pass());
    CHECK(!is_triangular(*d.hopf, d.qt.r).holds);
    REQUIRE(is_normal(d.factorization, d.pair));
    CHECK(eta_central_oracle(d.factorization, d.pair) == g.is_abelian());
    const PairAnalysis an = analyze_pair(d.factorization, d.hopf, d.pair);
    CHECK(an.pseudo.holds() == g.is_abelian());
    CHECK(an.normal->holds == g.is_abelian());
    CHECK(an.conditions.holds == g.is_abelian());
  }
}

TEST_CASE("S3 double witnesses") {
  const DoubleStructure d = build_double(symmetric_group3());
  const PseudoVerdicts pv = pseudotriangularity(*d.hopf, d.qt.r);
  CHECK(!pv.direct.holds);
  CHECK(!pv.via_f.holds);
  CHECK(pv.direct.witness.find("⊗") != std::string::npos);
  const Verdict normal = normal_pseudo_criterion(d.factorization, d.pair);
  CHECK(normal.witness == "u = (r,e), v = (s,e)");
  CHECK(describe_pair(d.factorization, d.pair).find("eta: ") != std::string::npos);
}
