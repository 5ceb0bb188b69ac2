#include "qhopf/posbasis.hpp"

#include <set>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

UniqueFactorization UniqueFactorization::verify(FiniteGroup g, std::vector<int> plus,
                                                std::vector<int> minus) {
  const int n = g.order();
  UniqueFactorization uf(std::move(g));
  auto as_set = [&](std::vector<int> v, const char* name) {
    std::set<int> s(v.begin(), v.end());
    if (!uf.g_.is_subgroup(v)) throw AxiomError(std::string(name) + " is not a subgroup");
    return std::vector<int>(s.begin(), s.end());
  };
  uf.plus_ = as_set(std::move(plus), "G+");
  uf.minus_ = as_set(std::move(minus), "G-");
  const FiniteGroup& G = uf.g_;
  uf.in_plus_.assign(n, false);
  uf.in_minus_.assign(n, false);
  for (int u : uf.plus_) uf.in_plus_[u] = true;
  for (int x : uf.minus_) uf.in_minus_[x] = true;

  uf.plus_part_.assign(n, -1);
  uf.minus_part_.assign(n, -1);
  uf.bar_minus_.assign(n, -1);
  uf.bar_plus_.assign(n, -1);
  for (int u : uf.plus_) {
    for (int x : uf.minus_) {
      const int ux = G.mul(u, x);
      if (uf.plus_part_[ux] >= 0) {
        throw AxiomError("factorization not unique: " + G.label(ux) + " = " +
                         G.label(uf.plus_part_[ux]) + "*" + G.label(uf.minus_part_[ux]) + " = " +
                         G.label(u) + "*" + G.label(x));
      }
      uf.plus_part_[ux] = u;
      uf.minus_part_[ux] = x;
      const int xu = G.mul(x, u);
      uf.bar_minus_[xu] = x;
      uf.bar_plus_[xu] = u;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (uf.plus_part_[a] < 0) {
      throw AxiomError("factorization does not cover " + G.label(a) + ": |G+||G-| = " +
                       std::to_string(uf.plus_.size() * uf.minus_.size()) + " < " +
                       std::to_string(n));
    }
  }
  return uf;
}

CheckReport derived_action_identities(const UniqueFactorization& uf) {
  const FiniteGroup& G = uf.group();
  CheckReport rep;
  auto over_g = [&](const std::string& name, auto pred) {
    Verdict v;
    for (int g = 0; g < G.order(); ++g) {
      if (!pred(g)) {
        v = Verdict::fail("g = " + G.label(g));
        break;
      }
    }
    rep.add(name, v);
  };
  over_g("^{gbar-} gbar+ = g+", [&](int g) {
    return uf.minus_on_plus_left(uf.bar_minus(g), uf.bar_plus(g)) == uf.plus_part(g);
  });
  over_g("gbar-^{gbar+} = g-", [&](int g) {
    return uf.plus_on_minus_right(uf.bar_minus(g), uf.bar_plus(g)) == uf.minus_part(g);
  });
  over_g("g+^{g-} = gbar+", [&](int g) {
    return uf.minus_on_plus_right(uf.plus_part(g), uf.minus_part(g)) == uf.bar_plus(g);
  });
  over_g("^{g+} g- = gbar-", [&](int g) {
    return uf.plus_on_minus_left(uf.plus_part(g), uf.minus_part(g)) == uf.bar_minus(g);
  });

  Verdict v5, v6;
  for (int u : uf.plus()) {
    for (int x : uf.minus()) {
      const int ux = uf.plus_on_minus_left(u, x), ux2 = uf.minus_on_plus_right(u, x);
      if (v5.holds && !(uf.in_minus(ux) && uf.in_plus(ux2) && G.mul(ux, ux2) == G.mul(u, x))) {
        v5 = Verdict::fail("(u, x) = (" + G.label(u) + ", " + G.label(x) + ")");
      }
      const int xu = uf.minus_on_plus_left(x, u), xu2 = uf.plus_on_minus_right(x, u);
      if (v6.holds && !(uf.in_plus(xu) && uf.in_minus(xu2) && G.mul(xu, xu2) == G.mul(x, u))) {
        v6 = Verdict::fail("(x, u) = (" + G.label(x) + ", " + G.label(u) + ")");
      }
    }
  }
  rep.add("(^{g+} g-)(g+^{g-}) = g+ g-", v5);
  rep.add("(^{g-} g+)(g-^{g+}) = g- g+", v6);
  return rep;
}

HopfData build_positive_hopf(const UniqueFactorization& uf) {
  const FiniteGroup& G = uf.group();
  const int n = G.order();
  const Scalar one = Scalar::one(1);
  HopfData h;
  h.dim = n;
  h.conductor = 1;
  h.labels = G.labels();
  h.mul.resize(n * n);
  for (int g = 0; g < n; ++g) {
    const int twisted = uf.minus_on_plus_right(uf.plus_part(g), uf.minus_part(g));
    for (int k = 0; k < n; ++k) {
      if (twisted == uf.plus_part(k)) h.mul[g * n + k] = {{G.mul(g, uf.minus_part(k)), one}};
    }
  }
  for (int u : uf.plus()) h.unit.push_back({u, one});

  h.antipode = Matrix(n, n);
  for (int g = 0; g < n; ++g) {
    const int gp = uf.plus_part(g), gm = uf.minus_part(g);
    Tensor d(2);
    for (int hp : uf.plus()) {
      const int left = G.mul(G.mul(gp, G.inv(hp)), uf.plus_on_minus_left(hp, gm));
      d.add({left, G.mul(hp, gm)}, one);
    }
    h.comul.push_back(std::move(d));
    h.counit.push_back(gp == G.identity() ? one : Scalar::zero(1));
    h.antipode.set_col(g, {{G.inv(g), one}});
  }
  return h;
}

std::vector<std::vector<int>> enumerate_homomorphisms(const UniqueFactorization& uf) {
  const FiniteGroup& G = uf.group();
  const int e = G.identity();
  const std::vector<int> gens = G.generators(uf.plus());
  const std::vector<int>& targets = uf.minus();
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<int> f(G.order(), -1);
    f[e] = e;
    std::vector<int> queue{e};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const int a = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const int b = G.mul(a, gens[j]);
        const int fb = G.mul(f[a], targets[choice[j]]);
        if (f[b] < 0) {
          f[b] = fb;
          queue.push_back(b);
        } else if (f[b] != fb) {
          ok = false;
          break;
        }
      }
    }
    for (int u : uf.plus()) {
      for (int v : uf.plus()) {
        if (!ok) break;
        ok = f[G.mul(u, v)] == G.mul(f[u], f[v]);
      }
    }
    if (ok) out.push_back(std::move(f));

    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == targets.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

namespace {

std::string tuple_label(const FiniteGroup& G, std::initializer_list<std::pair<const char*, int>> xs) {
  std::string names, vals;
  for (const auto& [n, v] : xs) {
    if (!names.empty()) {
      names += ", ";
      vals += ", ";
    }
    names += n;
    vals += G.label(v);
  }
  return "(" + names + ") = (" + vals + ")";
}

}  // namespace

CheckReport pair_conditions(const UniqueFactorization& uf, const HomPair& p) {
  const FiniteGroup& G = uf.group();
  const auto& xi = p.xi;
  const auto& eta = p.eta;
  Verdict r6, r7, r8, r9, r10;
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      if (r6 && uf.plus_on_minus_right(xi[u], v) != xi[uf.minus_on_plus_right(u, eta[v])]) {
        r6 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
      if (r7 && uf.plus_on_minus_left(u, eta[v]) != eta[uf.minus_on_plus_left(xi[u], v)]) {
        r7 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
      if (r8 && G.mul(u, v) != G.mul(uf.minus_on_plus_left(xi[u], v),
                                     uf.minus_on_plus_right(u, eta[v]))) {
        r8 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
    }
    for (int x : uf.minus()) {
      const int xu = uf.minus_on_plus_left(x, u), xu2 = uf.plus_on_minus_right(x, u);
      if (r9 && G.mul(xi[xu], xu2) != G.mul(x, xi[u])) {
        r9 = Verdict::fail(tuple_label(G, {{"x", x}, {"u", u}}));
      }
      if (r10 && G.mul(eta[xu], xu2) != G.mul(x, eta[u])) {
        r10 = Verdict::fail(tuple_label(G, {{"x", x}, {"u", u}}));
      }
    }
  }
  CheckReport rep;
  rep.add("rel6", r6);
  rep.add("rel7", r7);
  rep.add("rel8", r8);
  rep.add("rel9", r9);
  rep.add("rel10", r10);
  return rep;
}

CheckReport pair_conditions_dual(const UniqueFactorization& uf, const HomPair& p) {
  const FiniteGroup& G = uf.group();
  const auto& xi = p.xi;
  const auto& eta = p.eta;
  Verdict r11, r12, r13, r14, r15;
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      if (r11 && uf.plus_on_minus_left(v, xi[u]) != xi[uf.minus_on_plus_left(eta[v], u)]) {
        r11 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
      if (r12 && uf.plus_on_minus_right(eta[v], u) != eta[uf.minus_on_plus_right(v, xi[u])]) {
        r12 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
      if (r13 && G.mul(u, v) != G.mul(uf.minus_on_plus_left(eta[u], v),
                                      uf.minus_on_plus_right(u, xi[v]))) {
        r13 = Verdict::fail(tuple_label(G, {{"u", u}, {"v", v}}));
      }
    }
    for (int x : uf.minus()) {
      const int ux = uf.plus_on_minus_left(u, x), ux2 = uf.minus_on_plus_right(u, x);
      if (r14 && G.mul(ux, xi[ux2]) != G.mul(xi[u], x)) {
        r14 = Verdict::fail(tuple_label(G, {{"u", u}, {"x", x}}));
      }
      if (r15 && G.mul(ux, eta[ux2]) != G.mul(eta[u], x)) {
        r15 = Verdict::fail(tuple_label(G, {{"u", u}, {"x", x}}));
      }
    }
  }
  CheckReport rep;
  rep.add("rel11", r11);
  rep.add("rel12", r12);
  rep.add("rel13", r13);
  rep.add("rel14", r14);
  rep.add("rel15", r15);
  return rep;
}

std::vector<HomPair> enumerate_hom_pairs(const UniqueFactorization& uf) {
  const auto homs = enumerate_homomorphisms(uf);
  std::vector<HomPair> out;
  for (const auto& xi : homs) {
    for (const auto& eta : homs) {
      HomPair p{xi, eta};
      const bool primary = pair_conditions(uf, p).all_pass();
      const CheckReport dual = pair_conditions_dual(uf, p);
      if (primary != dual.all_pass()) {
        throw CrossCheckError("rel6-rel10 and rel11-rel15 disagree for " + describe_pair(uf, p) +
                              (primary ? ": " + dual.failures() : std::string()));
      }
      if (primary) out.push_back(std::move(p));
    }
  }
  return out;
}

PositiveQt build_R_xi_eta(const UniqueFactorization& uf, std::shared_ptr<const HopfData> host,
                          const HomPair& p) {
  const FiniteGroup& G = uf.group();
  const Scalar one = Scalar::one(host->conductor);
  PositiveQt out;
  out.qt.host = host;
  std::set<std::pair<int, int>> seen;
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      const int a = G.mul(u, G.inv(uf.plus_on_minus_right(p.eta[v], u)));
      const int b = G.mul(v, p.xi[u]);
      if (!seen.insert({a, b}).second) out.positive = false;
      out.qt.r.add({a, b}, one);
    }
  }
  if (!out.positive) {
    throw AxiomError("R(xi, eta) has a repeated term for " + describe_pair(uf, p));
  }
  const CheckReport rep = verify_qt(*host, out.qt.r);
  if (!rep.all_pass()) {
    throw AxiomError("R(xi, eta) fails quasitriangularity: " + rep.failures());
  }
  return out;
}

Verdict check_pseudo_conditions(const UniqueFactorization& uf, const HomPair& p) {
  const FiniteGroup& G = uf.group();
  const auto& xi = p.xi;
  const auto& eta = p.eta;
  auto m = [&](int a, int b) { return G.mul(a, b); };
  auto inv = [&](int a) { return G.inv(a); };
  // eta(^{eta(b)} a)^{(b^{xi(a)})}, in G-.
  auto A = [&](int a, int b) {
    return uf.plus_on_minus_right(eta[uf.minus_on_plus_left(eta[b], a)],
                                  uf.minus_on_plus_right(b, xi[a]));
  };
  // (eta(b)^a)^{-1} xi(b^{xi(a)}), in G-.
  auto B = [&](int a, int b) {
    return m(inv(uf.plus_on_minus_right(eta[b], a)), xi[uf.minus_on_plus_right(b, xi[a])]);
  };
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      for (int s : uf.plus()) {
        const int t = uf.minus_on_plus_right(u, B(u, v));
        const int c = uf.minus_on_plus_right(u, m(xi[s], inv(A(s, u))));
        const std::string where = tuple_label(G, {{"u", u}, {"v", v}, {"s", s}});
        if (m(xi[u], inv(A(u, v))) != m(xi[c], inv(A(c, v)))) {
          return Verdict::fail("condition 1 at " + where);
        }
        if (m(m(B(u, v), xi[s]), inv(A(s, t))) != m(m(xi[s], inv(A(s, u))), B(c, v))) {
          return Verdict::fail("condition 2 at " + where);
        }
        if (B(s, t) != B(s, u)) return Verdict::fail("condition 3 at " + where);
      }
    }
  }
  return Verdict::pass();
}

bool is_normal(const UniqueFactorization& uf, const HomPair& p) {
  for (int u : uf.plus()) {
    if (p.xi[u] != uf.group().identity()) return false;
  }
  return true;
}

Verdict normal_pseudo_criterion(const UniqueFactorization& uf, const HomPair& p) {
  if (!is_normal(uf, p)) {
    throw std::invalid_argument("pair is not normal: " + describe_pair(uf, p));
  }
  const FiniteGroup& G = uf.group();
  for (int u : uf.plus()) {
    for (int v : uf.plus()) {
      if (p.eta[G.mul(u, v)] != p.eta[G.mul(v, u)]) {
        return Verdict::fail("u = " + G.label(u) + ", v = " + G.label(v));
      }
    }
  }
  return Verdict::pass();
}

PairAnalysis analyze_pair(const UniqueFactorization& uf, std::shared_ptr<const HopfData> host,
                          const HomPair& p) {
  PairAnalysis a;
  a.pair = p;
  const PositiveQt pq = build_R_xi_eta(uf, host, p);
  a.positive = pq.positive;
  a.qt = verify_qt(*host, pq.qt.r);
  a.triangular = is_triangular(*host, pq.qt.r);
  a.pseudo = pseudotriangularity(*host, pq.qt.r);
  a.conditions = check_pseudo_conditions(uf, p);
  a.xi_equals_eta = p.xi == p.eta;
  const std::string who = describe_pair(uf, p);
  if (a.conditions.holds != a.pseudo.holds()) {
    throw CrossCheckError("group-level conditions disagree with the generic criterion for " + who);
  }
  if (is_normal(uf, p)) {
    a.normal = normal_pseudo_criterion(uf, p);
    if (a.normal->holds != a.pseudo.holds()) {
      throw CrossCheckError("normal criterion disagrees with the generic criterion for " + who);
    }
  }
  return a;
}

DoubleStructure build_double(const FiniteGroup& g) {
  const int n = g.order();
  const int e = g.identity();
  FiniteGroup gg = direct_product(g, g);
  std::vector<int> plus, minus;
  for (int a = 0; a < n; ++a) {
    plus.push_back(a * n + e);
    minus.push_back(a * n + a);
  }
  UniqueFactorization uf = UniqueFactorization::verify(std::move(gg), plus, minus);
  HomPair p{std::vector<int>(n * n, -1), std::vector<int>(n * n, -1)};
  for (int a = 0; a < n; ++a) {
    p.xi[a * n + e] = e * n + e;
    p.eta[a * n + e] = a * n + a;
  }
  auto hopf = std::make_shared<const HopfData>(build_positive_hopf(uf));
  PositiveQt pq = build_R_xi_eta(uf, hopf, p);
  return DoubleStructure{std::move(uf), std::move(p), hopf, std::move(pq.qt)};
}

std::string describe_pair(const UniqueFactorization& uf, const HomPair& p) {
  const FiniteGroup& G = uf.group();
  auto side = [&](const char* name, const std::vector<int>& f) {
    std::string s = std::string(name) + ": ";
    bool first = true;
    for (int u : uf.plus()) {
      if (!first) s += ", ";
      first = false;
      s += G.label(u) + "->" + G.label(f[u]);
    }
    return s;
  };
  return side("xi", p.xi) + "; " + side("eta", p.eta);
}

}  // namespace qhopf
