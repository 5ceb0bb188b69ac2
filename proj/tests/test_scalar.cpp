#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "qhopf/errors.hpp"
#include "qhopf/scalar.hpp"
#include "support.hpp"

using namespace qhopf;
using qhopf::test::random_cyc;
using qhopf::test::random_scalar;
using qhopf::test::uniform;

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials with a monic divisor.
Poly divide(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    const std::int64_t c = num[i + den.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (auto c : num) REQUIRE(c == 0);
  return q;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
Poly phi_oracle(int m) {
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide(p, phi_oracle(d));
  }
  return p;
}

std::complex<double> embed(const Cyc& c) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = 0, w = std::polar(1.0, 2 * pi / c.conductor()), p = 1;
  for (const auto& q : c.coeffs()) {
    z += q.get_d() * p;
    p *= w;
  }
  return z;
}

int euler_phi(int m) {
  int n = 0;
  for (int k = 1; k <= m; ++k) n += std::gcd(k, m) == 1;
  return n;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the division oracle") {
  for (int m = 1; m <= 30; ++m) {
    CAPTURE(m);
    CHECK(cyclotomic_polynomial(m) == phi_oracle(m));
    CHECK(cyclotomic_degree(m) == euler_phi(m));
  }
  CHECK(cyclotomic_polynomial(6) == Poly{1, -1, 1});
  CHECK(cyclotomic_polynomial(10) == Poly{1, -1, 1, -1, 1});
}

TEST_CASE("inverse of 1 + w in Q(w_6)") {
  const Cyc one_plus_w = Cyc::one(6) + Cyc::omega_power(6, 1);
  const Cyc expected = Cyc::from_coeffs(6, {Rational(2, 3), Rational(-1, 3)});
  CHECK(one_plus_w.inverse() == expected);
  CHECK((one_plus_w * expected).is_one());
}

TEST_CASE("roots of unity") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
    CAPTURE(m);
    CHECK(Cyc::omega_power(m, m).is_one());
    CHECK(Cyc::omega_power(m, -1) * Cyc::omega_power(m, 1) == Cyc::one(m));
    Cyc sum = Cyc::zero(m);
    for (int k = 0; k < m; ++k) sum += Cyc::omega_power(m, k);
    CHECK(sum == (m == 1 ? Cyc::one(1) : Cyc::zero(m)));
  }
  // w^nu = -1 in Q(w_{2nu})
  for (int nu : {1, 3, 5}) CHECK(Cyc::omega_power(2 * nu, nu) == Cyc(2 * nu, -1));
}

TEST_CASE("field axioms on random elements") {
  for (int m : {3, 4, 5, 6, 7, 10, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Cyc a = random_cyc(m), b = random_cyc(m), c = random_cyc(m);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Cyc::zero(m));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(static_cast<int>((a * b).coeffs().size()) == cyclotomic_degree(m));
    }
  }
}

TEST_CASE("multiplication agrees with the complex embedding") {
  for (int m : {5, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Cyc a = random_cyc(m), b = random_cyc(m);
      CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-9);
      CHECK(std::abs(embed(a + b) - embed(a) - embed(b)) < 1e-9);
    }
  }
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS_AS(Cyc::zero(5).inverse(), SingularError);
  CHECK_THROWS_AS(Scalar::zero(5).inverse(), SingularError);
  CHECK_THROWS_AS(Scalar::beta(5).inverse(), SingularError);
}

TEST_CASE("conductors") {
  CHECK_THROWS_AS(Cyc::one(3) + Cyc::one(4), ConductorMismatch);
  CHECK_THROWS_AS(Scalar::one(3) * Scalar::omega_power(5, 1), ConductorMismatch);
  // Q is contained in every Q(w_m).
  const Scalar half(1, Rational(1, 2));
  const Scalar w = Scalar::omega_power(6, 1);
  CHECK((half * w).conductor() == 6);
  CHECK(half + half == Scalar::one(6));
  CHECK(Cyc(1, Rational(3)).promoted(4) == Cyc(4, Rational(3)));
}

TEST_CASE("beta polynomials") {
  const int m = 6;
  const Scalar b = Scalar::beta(m), one = Scalar::one(m);
  CHECK((b + one) * (b - one) == b * b - one);
  CHECK(b.degree() == 1);
  CHECK((b - b).is_zero());
  CHECK((b * b - one).substitute(Scalar(m, Rational(3))) == Scalar(m, Rational(8)));
  CHECK(b.substitute(b + one) == b + one);
  for (int trial = 0; trial < 40; ++trial) {
    const Scalar p = random_scalar(m, 3), q = random_scalar(m, 3), v = random_scalar(m, 0);
    CHECK(p * q == q * p);
    CHECK((p * q).substitute(v) == p.substitute(v) * q.substitute(v));
    CHECK((p + q).substitute(v) == p.substitute(v) + q.substitute(v));
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("rational text format") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(Rational(5)) == "5");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "3/"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  for (int trial = 0; trial < 50; ++trial) {
    Rational q(uniform(-1000, 1000), uniform(1, 999));
    q.canonicalize();
    CHECK(parse_rational(format_rational(q)) == q);
  }
  CHECK(Scalar(1, Rational(-2)).to_string() == "-2");
}
