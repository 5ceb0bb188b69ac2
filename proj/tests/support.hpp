#pragma once

// Shared fixtures: the factorization catalog, a seeded generator and small
// helpers for building scalars in tests.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qhopf/group.hpp"
#include "qhopf/posbasis.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2026);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational() {
  Rational q(uniform(-6, 6), uniform(1, 4));
  q.canonicalize();
  return q;
}

inline Cyc random_cyc(int m) {
  std::vector<Rational> c;
  for (int i = 0; i < cyclotomic_degree(m); ++i) c.push_back(uniform(0, 2) == 0 ? Rational(0) : small_rational());
  return Cyc::from_coeffs(m, std::move(c));
}

inline Scalar random_scalar(int m, int max_degree) {
  std::vector<Cyc> c;
  const int deg = uniform(0, max_degree);
  for (int i = 0; i <= deg; ++i) c.push_back(random_cyc(m));
  return Scalar(m, std::move(c));
}

inline std::vector<int> elements(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(g.find(l));
  return out;
}

inline std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) out.push_back(a);
  return out;
}

struct NamedFactorization {
  std::string name;
  UniqueFactorization uf;
};

/// Trivial and cotrivial factorizations of every catalog group, the two
/// splittings of S3, the splitting of C2 x C2, and the doubles' G x G.
inline std::vector<NamedFactorization> factorization_catalog(bool with_doubles = true) {
  std::vector<NamedFactorization> out;
  for (const auto& name : catalog_group_names()) {
    const FiniteGroup g = *catalog_group(name);
    const std::vector<int> e{g.identity()};
    out.push_back({name + " G+ = G", UniqueFactorization::verify(g, all_elements(g), e)});
    out.push_back({name + " G- = G", UniqueFactorization::verify(g, e, all_elements(g))});
  }
  const FiniteGroup s3 = symmetric_group3();
  out.push_back({"s3 A3 <s>", UniqueFactorization::verify(s3, elements(s3, {"e", "r", "r^2"}),
                                                          elements(s3, {"e", "s"}))});
  out.push_back({"s3 <s> A3", UniqueFactorization::verify(s3, elements(s3, {"e", "s"}),
                                                          elements(s3, {"e", "r", "r^2"}))});
  const FiniteGroup v = *catalog_group("c2xc2");
  out.push_back({"c2xc2 split", UniqueFactorization::verify(v, elements(v, {"(e,e)", "(c,e)"}),
                                                            elements(v, {"(e,e)", "(e,c)"}))});
  if (with_doubles) {
    for (const auto& name : catalog_group_names()) {
      out.push_back({name + " double", build_double(*catalog_group(name)).factorization});
    }
  }
  return out;
}

}  // namespace qhopf::test
