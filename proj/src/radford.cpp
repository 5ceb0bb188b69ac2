#include "qhopf/radford.hpp"

#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string monomial_label(int l, int m) {
  std::string g = l == 0 ? "" : (l == 1 ? "g" : "g^" + std::to_string(l));
  if (m == 0) return g.empty() ? "1" : g;
  return g + "x";
}

}  // namespace

int RadfordAlgebra::index(int l, int m) const { return 2 * mod(l, order()) + m; }

Tensor RadfordAlgebra::monomial(int l, int m) const {
  return basis_element(*hopf, index(l, m));
}

RadfordAlgebra build_radford(int nu) {
  if (nu < 1 || nu % 2 == 0) {
    throw std::invalid_argument("Radford algebra needs odd nu >= 1, got " + std::to_string(nu));
  }
  const int n = 2 * nu;
  const int cond = n;
  auto h = std::make_shared<HopfData>();
  h->dim = 2 * n;
  h->conductor = cond;
  const Scalar one = Scalar::one(cond);
  const Scalar minus_one = Scalar::integer(cond, -1);
  auto idx = [n](int l, int m) { return 2 * mod(l, n) + m; };

  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < 2; ++m) h->labels.push_back(monomial_label(l, m));
  }

  // g^l x^m * g^p x^q = (-1)^{mp} g^{l+p} x^{m+q}, zero when m + q = 2.
  h->mul.resize(h->dim * h->dim);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < 2; ++m) {
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < 2; ++q) {
          if (m + q == 2) continue;
          const bool negate = (m * p) % 2 == 1;
          h->mul[idx(l, m) * h->dim + idx(p, q)] = {{idx(l + p, m + q), negate ? minus_one : one}};
        }
      }
    }
  }
  h->unit = {{idx(0, 0), one}};

  h->antipode = Matrix(h->dim, h->dim);
  for (int l = 0; l < n; ++l) {
    // Delta(g^l) = g^l (x) g^l
    // Delta(g^l x) = g^l x (x) g^{l+nu} + g^l (x) g^l x
    h->comul.push_back(Tensor::basis({idx(l, 0), idx(l, 0)}, one));
    Tensor dx(2);
    dx.add({idx(l, 1), idx(l + nu, 0)}, one);
    dx.add({idx(l, 0), idx(l, 1)}, one);
    h->comul.push_back(std::move(dx));

    h->counit.push_back(one);
    h->counit.push_back(Scalar::zero(cond));

    // S(g^l) = g^{-l};  S(g^l x) = S(x) g^{-l} = g^nu x g^{-l} = (-1)^l g^{nu-l} x
    h->antipode.set_col(idx(l, 0), {{idx(-l, 0), one}});
    h->antipode.set_col(idx(l, 1), {{idx(nu - l, 1), l % 2 ? minus_one : one}});
  }

  RadfordAlgebra a{nu, std::move(h)};
  return a;
}

std::vector<Tensor> idempotents(const RadfordAlgebra& a) {
  const int n = a.order();
  const Scalar inv_n = Scalar::integer(a.conductor(), n).inverse();
  std::vector<Tensor> out;
  for (int l = 0; l < n; ++l) {
    Tensor e(1);
    for (int i = 0; i < n; ++i) {
      e.add({a.index(i, 0)}, inv_n * Scalar::omega_power(a.conductor(), -static_cast<long>(i) * l));
    }
    out.push_back(std::move(e));
  }
  return out;
}

CheckReport idempotent_identities(const RadfordAlgebra& a) {
  const HopfData& h = *a.hopf;
  const int n = a.order();
  const auto e = idempotents(a);
  CheckReport rep;
  const Tensor x = a.monomial(0, 1);

  Verdict orth;
  for (int i = 0; i < n && orth.holds; ++i) {
    for (int j = 0; j < n; ++j) {
      const Tensor expect = i == j ? e[i] : Tensor(1);
      if (!(tensor_mul(h, e[i], e[j]) == expect)) {
        orth = Verdict::fail("e_" + std::to_string(i) + " e_" + std::to_string(j));
        break;
      }
    }
  }
  rep.add("e_i e_j = delta_ij e_i", orth);

  Tensor sum(1), alt(1);
  for (int i = 0; i < n; ++i) {
    sum += e[i];
    alt += (i % 2 ? Scalar::integer(a.conductor(), -1) : Scalar::one(a.conductor())) * e[i];
  }
  rep.add("sum e_l = 1", sum == a.monomial(0, 0) ? Verdict::pass() : Verdict::fail("sum"));
  rep.add("sum (-1)^i e_i = g^nu",
          alt == a.monomial(a.nu, 0) ? Verdict::pass() : Verdict::fail("alternating sum"));

  Verdict eig;
  for (int i = 0; i < n && eig.holds; ++i) {
    for (int j = 0; j < n; ++j) {
      const Tensor expect = Scalar::omega_power(a.conductor(), static_cast<long>(i) * j) * e[j];
      if (!(tensor_mul(h, a.monomial(i, 0), e[j]) == expect)) {
        eig = Verdict::fail("g^" + std::to_string(i) + " e_" + std::to_string(j));
        break;
      }
    }
  }
  rep.add("g^i e_j = w^{ij} e_j", eig);

  Verdict shift;
  for (int l = 0; l < n; ++l) {
    if (!(tensor_mul(h, x, e[l]) == tensor_mul(h, e[mod(l - a.nu, n)], x))) {
      shift = Verdict::fail("l = " + std::to_string(l));
      break;
    }
  }
  rep.add("x e_l = e_{l-nu} x", shift);

  const Scalar w_nu = Scalar::omega_power(a.conductor(), a.nu);
  rep.add("w^nu = -1", w_nu == Scalar::integer(a.conductor(), -1) ? Verdict::pass()
                                                                  : Verdict::fail(w_nu.to_string()));
  return rep;
}

namespace {

void check_params(const RadfordAlgebra& a, const RParams& p) {
  if (p.s < 1 || p.s >= a.order() || p.s % 2 == 0) {
    throw std::invalid_argument("s must be odd with 1 <= s < 2nu, got " + std::to_string(p.s));
  }
}

Scalar beta_of(const RadfordAlgebra& a, const RParams& p) {
  return p.beta ? *p.beta : Scalar::beta(a.conductor());
}

}  // namespace

Tensor r_matrix_idempotent_form(const RadfordAlgebra& a, const RParams& p) {
  check_params(a, p);
  const HopfData& h = *a.hopf;
  const auto e = idempotents(a);
  const Scalar beta = beta_of(a, p);
  const Tensor x = a.monomial(0, 1);
  Tensor r(2);
  auto outer = [](const Tensor& u, const Tensor& v, const Scalar& c) {
    Tensor t(2);
    for (const auto& [ku, cu] : u.terms()) {
      for (const auto& [kv, cv] : v.terms()) {
        t.add({u.unpack(ku)[0], v.unpack(kv)[0]}, c * cu * cv);
      }
    }
    return t;
  };
  const Scalar one = Scalar::one(a.conductor());
  for (int l = 0; l < a.order(); ++l) {
    r += outer(e[l], a.monomial(p.s * l, 0), one);
    const Tensor elx = tensor_mul(h, e[l], x);
    r += outer(elx, a.monomial(p.s * l + a.nu, 1), beta);
  }
  return r;
}

Tensor r_matrix_double_sum_form(const RadfordAlgebra& a, const RParams& p) {
  check_params(a, p);
  const int n = a.order();
  const int cond = a.conductor();
  const Scalar inv_n = Scalar::integer(cond, n).inverse();
  const Scalar beta = beta_of(a, p);
  Tensor r(2);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      const Scalar w = inv_n * Scalar::omega_power(cond, -static_cast<long>(i) * l);
      r.add({a.index(i, 0), a.index(p.s * l, 0)}, w);
      r.add({a.index(i, 1), a.index(p.s * l + a.nu, 1)}, beta * w);
    }
  }
  return r;
}

QtStructure build_R(const RadfordAlgebra& a, const RParams& p) {
  const Tensor r = r_matrix_idempotent_form(a, p);
  if (!(r == r_matrix_double_sum_form(a, p))) {
    throw AxiomError("the two forms of R_{s,beta} disagree");
  }
  const CheckReport rep = verify_qt(*a.hopf, r);
  if (!rep.all_pass()) throw AxiomError("R_{s,beta} fails quasitriangularity: " + rep.failures());
  return QtStructure{a.hopf, r};
}

}  // namespace qhopf
