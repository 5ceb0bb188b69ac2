#include "qhopf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "qhopf/errors.hpp"
#include "qhopf/io.hpp"
#include "qhopf/posbasis.hpp"
#include "qhopf/psbraid.hpp"
#include "qhopf/radford.hpp"
#include "qhopf/ydmod.hpp"

namespace qhopf {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Theorem statements the entries are tied to.
constexpr const char* kAnchorHopf = "Hopf algebra axioms";
constexpr const char* kAnchorRadfordQt = "R_{s,beta} is a quasitriangular structure on H_nu";
constexpr const char* kAnchorRadfordTri = "R_{s,beta} is triangular if and only if s = nu";
constexpr const char* kAnchorRadfordPseudo = "any quasitriangular structure R_{s,beta} on H_nu is pseudotriangular";
constexpr const char* kAnchorIdempotents = "idempotents e_l of the group-like part of H_nu";
constexpr const char* kAnchorPseudoF = "R is pseudotriangular iff F = R_21 R satisfies F_12 F_23 = F_23 F_12";
constexpr const char* kAnchorActions = "matched pair actions of a unique factorization G = G+ G-";
constexpr const char* kAnchorRelEquiv = "(rel6)-(rel10) are equivalent to (rel11)-(rel15)";
constexpr const char* kAnchorPositiveQt = "quasitriangular structures on H(G; G+, G-) are the R(xi, eta) with positive coefficients";
constexpr const char* kAnchorPositiveTri = "R(xi, eta) is triangular if and only if xi = eta";
constexpr const char* kAnchorConditions = "R(xi, eta) is pseudotriangular iff the three group conditions hold";
constexpr const char* kAnchorNormal = "for a normal pair, R(xi, eta) is pseudotriangular iff eta(uv) = eta(vu) for all u, v in G+";
constexpr const char* kAnchorDouble = "the Drinfeld double of k[G]* is pseudotriangular if and only if G is abelian";
constexpr const char* kAnchorYdAxioms = "module, comodule and compatibility axioms of the object";
constexpr const char* kAnchorYdPseudo = "the braiding of YD(H) and LR(H) is pseudosymmetric when H is commutative and cocommutative";
constexpr const char* kAnchorPseudoT = "a braiding is pseudosymmetric iff the double braidings T commute across adjacent legs";
constexpr const char* kAnchorHexagon = "hexagon identities of the canonical braiding";
constexpr const char* kAnchorSearch = "pseudosymmetry beyond commutative cocommutative hosts (catalog search)";
constexpr const char* kAnchorPsEqual = "elements of PS_n are determined by permutation and pairwise linking numbers";
constexpr const char* kAnchorYb = "Yang-Baxter operator braid relation";
constexpr const char* kAnchorPsYb = "a pseudosymmetric Yang-Baxter operator induces a representation of PS_n";
constexpr const char* kAnchorC11 = "the canonical braiding word c_{1,1} acts as sigma";

struct Entry {
  std::string name;
  std::string anchor;
  std::optional<bool> expected;
  Verdict verdict;
  double ms = 0;

  bool matches() const { return !expected || *expected == verdict.holds; }
};

struct Report {
  std::string command;
  std::vector<Entry> entries;
  Json result;  // optional payload, omitted when null

  void add(std::string name, const char* anchor, std::optional<bool> expected, Verdict v, double ms = 0) {
    entries.push_back({std::move(name), anchor, expected, std::move(v), ms});
  }
  void add_all(const CheckReport& r, const std::string& prefix, const char* anchor, double ms = 0) {
    for (const auto& e : r.entries()) add(prefix + e.name, anchor, true, e.verdict, ms);
  }
  bool all_match() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.matches(); });
  }
};

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Verdict summary_verdict(const CheckReport& r) {
  return r.all_pass() ? Verdict::pass() : Verdict::fail(r.failures());
}

int thread_cap() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QHOPF_THREADS")) {
    try {
      n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("QHOPF_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return std::max(1, n);
}

/// Runs f(0..n-1) with at most thread_cap() jobs in flight; results in index order.
template <class F>
auto parallel_map(int n, F f) -> std::vector<decltype(f(0))> {
  using R = decltype(f(0));
  std::vector<R> out;
  out.reserve(n);
  const int cap = thread_cap();
  if (cap == 1) {
    for (int i = 0; i < n; ++i) out.push_back(f(i));
    return out;
  }
  for (int start = 0; start < n; start += cap) {
    std::vector<std::future<R>> jobs;
    for (int i = start; i < std::min(n, start + cap); ++i) jobs.push_back(std::async(std::launch::async, f, i));
    for (auto& j : jobs) out.push_back(j.get());
  }
  return out;
}

// Splits at separators outside parentheses, so "(e,c)" stays one label.
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth <= 0) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("bad " + what + " '" + s + "'");
  return v;
}

/// "formal", a rational "p/q", or a coefficient vector ("a,b,..." or a JSON array).
std::optional<Scalar> parse_beta(const std::string& spec, int conductor) {
  if (spec.empty() || spec == "formal") return std::nullopt;
  try {
    if (spec.front() == '[') return scalar_from_json(Json::parse(spec), conductor);
    if (spec.find(',') != std::string::npos) {
      Json arr = Json::array();
      for (const auto& c : split(spec, ',')) arr.push_back(c);
      return scalar_from_json(arr, conductor);
    }
    return Scalar(conductor, parse_rational(spec));
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad --beta '" + spec + "': " + e.what());
  }
}

/// Resolves builtin: references and file paths, caching hosts so that
/// objects over the same algebra share one HopfData.
class Resolver {
 public:
  FiniteGroup group(const std::string& ref) {
    if (ref.rfind("builtin:", 0) == 0) {
      const std::string name = ref.substr(8);
      if (auto g = catalog_group(name)) return *g;
      throw LoadError("unknown builtin group '" + name + "'");
    }
    return group_from_json(read_json_file(ref));
  }

  /// Verified hosts throw AxiomError when verify_hopf fails.
  std::shared_ptr<const HopfData> hopf(const std::string& ref, bool verify = true) {
    const std::string key = canonical(ref);
    if (auto it = hosts_.find(key); it != hosts_.end()) return it->second;
    std::shared_ptr<const HopfData> h;
    if (key.rfind("builtin:", 0) == 0) {
      const auto parts = split(key, ':');
      if (parts.size() == 3 && parts[1] == "radford") {
        h = build_radford(parse_int(parts[2], "nu")).hopf;
      } else if (parts.size() == 3 && parts[1] == "kg") {
        h = std::make_shared<HopfData>(group_algebra(group("builtin:" + parts[2])));
      } else if (parts.size() == 3 && parts[1] == "double") {
        h = build_double(group("builtin:" + parts[2])).hopf;
      } else {
        throw LoadError("unknown builtin algebra '" + key + "'");
      }
    } else {
      h = std::make_shared<HopfData>(hopf_from_json(read_json_file(key)));
      if (verify) {
        const CheckReport r = verify_hopf(*h);
        if (!r.all_pass()) throw AxiomError("'" + key + "' is not a Hopf algebra: " + r.failures());
      }
    }
    hosts_[key] = h;
    return h;
  }

  YdObject module(const std::string& ref, bool verify = true) {
    YdObject m;
    if (ref.rfind("builtin:", 0) == 0) {
      const auto parts = split(ref, ':');
      if (parts.size() != 3) throw LoadError("bad builtin module '" + ref + "'");
      const std::string& kind = parts[1];
      const std::string& arg = parts[2];
      if (kind == "adjoint") {
        const std::string host_ref = "builtin:radford:" + arg;
        m = adjoint_yd_module(hopf(host_ref));
        m.hopf_ref = host_ref;
        return m;
      }
      const std::string host_ref = "builtin:kg:" + arg;
      const FiniteGroup g = group("builtin:" + arg);
      auto host = hopf(host_ref);
      if (kind == "conj") {
        m = conjugation_module(g, host, ModuleKind::kYdLeftLeft);
      } else if (kind == "conj-lr") {
        m = conjugation_module(g, host, ModuleKind::kYdLeftRight);
      } else if (kind == "conj-lrobj") {
        m = lr_from_llyd(conjugation_module(g, host, ModuleKind::kYdLeftLeft));
      } else if (kind == "regular-lr") {
        m = regular_lr_object(host);
      } else if (kind == "left-regular") {
        m = left_regular_module(host);
      } else if (kind == "trivial") {
        m = trivial_object(host, ModuleKind::kYdLeftLeft);
      } else {
        throw LoadError("unknown builtin module kind '" + kind + "'");
      }
      m.hopf_ref = host_ref;
    } else {
      const Json j = read_json_file(ref);
      if (!j.contains("hopf_ref") || !j["hopf_ref"].is_string()) throw LoadError("module needs a string 'hopf_ref'");
      std::string host_ref = j["hopf_ref"].get<std::string>();
      if (host_ref.rfind("builtin:", 0) != 0 && fs::path(host_ref).is_relative()) {
        host_ref = (fs::path(ref).parent_path() / host_ref).string();
      }
      m = module_from_json(j, hopf(host_ref));
      m.hopf_ref = j["hopf_ref"].get<std::string>();
    }
    if (verify) {
      const CheckReport r = check_object(m);
      if (!r.all_pass()) throw AxiomError("module '" + ref + "' fails its axioms: " + r.failures());
    }
    return m;
  }

  struct LoadedYb {
    YbOperator op;
    int conductor = 1;
  };

  LoadedYb yb(const std::string& ref) {
    if (ref.rfind("builtin:", 0) == 0) {
      const auto parts = split(ref, ':');
      if (parts.size() == 3 && parts[1] == "swap") return {swap_operator(parse_int(parts[2], "dim")), 1};
      if (parts.size() == 4 && parts[1] == "radford") {
        const RadfordAlgebra a = build_radford(parse_int(parts[2], "nu"));
        const QtStructure q = build_R(a, {parse_int(parts[3], "s"), std::nullopt});
        return {yb_from_qt(*a.hopf, q.r, regular_action(*a.hopf)), a.conductor()};
      }
      throw LoadError("unknown builtin operator '" + ref + "'");
    }
    const Json j = read_json_file(ref);
    LoadedYb out{yb_from_json(j), j.contains("conductor") ? j["conductor"].get<int>() : 1};
    if (!(out.op.sigma * out.op.inverse).is_identity()) {
      throw AxiomError("'" + ref + "': sigma and inverse do not compose to the identity");
    }
    return out;
  }

 private:
  static std::string canonical(const std::string& ref) {
    if (ref.rfind("builtin:", 0) == 0) return ref;
    std::error_code ec;
    const auto p = fs::weakly_canonical(ref, ec);
    return ec ? ref : p.string();
  }

  std::map<std::string, std::shared_ptr<const HopfData>> hosts_;
};

std::vector<int> parse_labels(const FiniteGroup& g, const std::string& list) {
  std::vector<int> out;
  for (const auto& l : split(list, ',')) out.push_back(g.find(l));
  return out;
}

// ---- subcommand bodies ----

std::vector<Entry> radford_entries(const RadfordAlgebra& a, int s, const std::optional<Scalar>& beta) {
  std::vector<Entry> out;
  const std::string p = "s=" + std::to_string(s) + ": ";
  const auto t0 = Clock::now();
  std::optional<QtStructure> q;
  try {
    q = build_R(a, {s, beta});
  } catch (const AxiomError& e) {
    out.push_back({p + "quasitriangular", kAnchorRadfordQt, true, Verdict::fail(e.what()), elapsed_ms(t0)});
    return out;
  }
  const double t_qt = elapsed_ms(t0);
  out.push_back({p + "quasitriangular", kAnchorRadfordQt, true, Verdict::pass(), t_qt});
  auto t1 = Clock::now();
  Verdict tri = is_triangular(*a.hopf, q->r);
  out.push_back({p + "triangular", kAnchorRadfordTri, s == a.nu, tri, elapsed_ms(t1)});
  t1 = Clock::now();
  const PseudoVerdicts pv = pseudotriangularity(*a.hopf, q->r);
  const double t_ps = elapsed_ms(t1);
  out.push_back({p + "pseudotriangular (direct)", kAnchorRadfordPseudo, true, pv.direct, t_ps});
  out.push_back({p + "pseudotriangular (F = R21 R)", kAnchorPseudoF, true, pv.via_f, t_ps});
  return out;
}

void radford_scan(Report& rep, int nu, const std::optional<int>& only_s, const std::string& beta_spec) {
  if (nu < 1 || nu % 2 == 0) throw std::invalid_argument("--nu must be a positive odd integer");
  auto t0 = Clock::now();
  const RadfordAlgebra a = build_radford(nu);
  const auto beta = parse_beta(beta_spec, a.conductor());
  rep.add_all(verify_hopf(*a.hopf), "hopf: ", kAnchorHopf, elapsed_ms(t0));
  t0 = Clock::now();
  rep.add_all(idempotent_identities(a), "idempotents: ", kAnchorIdempotents, elapsed_ms(t0));
  std::vector<int> svals;
  if (only_s) {
    if (*only_s < 1 || *only_s >= 2 * nu || *only_s % 2 == 0) {
      throw std::invalid_argument("--s must be odd with 1 <= s < 2 nu");
    }
    svals.push_back(*only_s);
  } else {
    for (int s = 1; s < 2 * nu; s += 2) svals.push_back(s);
  }
  const auto results = parallel_map(static_cast<int>(svals.size()),
                                    [&](int i) { return radford_entries(a, svals[i], beta); });
  for (const auto& r : results) rep.entries.insert(rep.entries.end(), r.begin(), r.end());
  rep.result = {{"nu", nu}, {"dim", a.hopf->dim}, {"beta", beta ? scalar_to_json(*beta) : Json("formal")}};
}

void add_pair_entries(Report& rep, const std::string& p, const PairAnalysis& an, double ms) {
  rep.add(p + "quasitriangular", kAnchorPositiveQt, true, summary_verdict(an.qt), ms);
  rep.add(p + "positive", kAnchorPositiveQt, true,
          an.positive ? Verdict::pass() : Verdict::fail("repeated basis tensor"), ms);
  rep.add(p + "triangular", kAnchorPositiveTri, an.xi_equals_eta, an.triangular, ms);
  rep.add(p + "pseudotriangular (direct)", kAnchorPseudoF, std::nullopt, an.pseudo.direct, ms);
  rep.add(p + "pseudotriangular (F = R21 R)", kAnchorPseudoF, an.pseudo.direct.holds, an.pseudo.via_f, ms);
  rep.add(p + "group conditions", kAnchorConditions, an.pseudo.direct.holds, an.conditions, ms);
  if (an.normal) rep.add(p + "normal criterion", kAnchorNormal, an.pseudo.direct.holds, *an.normal, ms);
}

void posbasis_scan(Report& rep, Resolver& res, const std::string& group_ref, const std::string& plus,
                   const std::string& minus) {
  FiniteGroup g = res.group(group_ref);
  const auto pl = parse_labels(g, plus);
  const auto mi = parse_labels(g, minus);
  auto t0 = Clock::now();
  const UniqueFactorization uf = UniqueFactorization::verify(std::move(g), pl, mi);
  rep.add_all(derived_action_identities(uf), "actions: ", kAnchorActions, elapsed_ms(t0));
  t0 = Clock::now();
  auto host = std::make_shared<const HopfData>(build_positive_hopf(uf));
  rep.add_all(verify_hopf(*host), "hopf: ", kAnchorHopf, elapsed_ms(t0));
  t0 = Clock::now();
  const auto pairs = enumerate_hom_pairs(uf);
  rep.add("pairs satisfying rel6-rel10 satisfy rel11-rel15", kAnchorRelEquiv, true, Verdict::pass(),
          elapsed_ms(t0));
  struct Timed {
    PairAnalysis an;
    double ms;
  };
  const auto results = parallel_map(static_cast<int>(pairs.size()), [&](int i) {
    const auto t = Clock::now();
    PairAnalysis an = analyze_pair(uf, host, pairs[i]);
    return Timed{std::move(an), elapsed_ms(t)};
  });
  Json listing = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    add_pair_entries(rep, "pair " + std::to_string(i) + ": ", results[i].an, results[i].ms);
    listing.push_back({{"pair", i},
                       {"description", describe_pair(uf, pairs[i])},
                       {"normal", results[i].an.normal.has_value()},
                       {"pseudotriangular", results[i].an.pseudo.holds()}});
  }
  rep.result = {{"dim", host->dim}, {"pairs", std::move(listing)}};
}

void double_check(Report& rep, Resolver& res, const std::string& group_ref) {
  const FiniteGroup g = res.group(group_ref);
  auto t0 = Clock::now();
  const DoubleStructure d = build_double(g);
  rep.add_all(verify_hopf(*d.hopf), "hopf: ", kAnchorHopf, elapsed_ms(t0));
  t0 = Clock::now();
  const PairAnalysis an = analyze_pair(d.factorization, d.hopf, d.pair);
  const double ms = elapsed_ms(t0);
  const bool abelian = g.is_abelian();
  rep.add_all(an.qt, "qt: ", kAnchorPositiveQt, ms);
  rep.add("triangular", kAnchorPositiveTri, g.order() == 1, an.triangular, ms);
  rep.add("pseudotriangular (direct)", kAnchorDouble, abelian, an.pseudo.direct, ms);
  rep.add("pseudotriangular (F = R21 R)", kAnchorPseudoF, abelian, an.pseudo.via_f, ms);
  rep.add("group conditions", kAnchorConditions, abelian, an.conditions, ms);
  if (an.normal) rep.add("normal criterion", kAnchorNormal, abelian, *an.normal, ms);
  rep.result = {{"group_order", g.order()}, {"dim", d.hopf->dim}, {"abelian", abelian}};
}

void yd_pseudo(Report& rep, Resolver& res, const std::vector<std::string>& refs) {
  if (refs.size() != 3) throw std::invalid_argument("--triple takes exactly three module references");
  std::vector<YdObject> objs;
  for (const auto& r : refs) objs.push_back(res.module(r));
  for (const auto& o : objs) {
    if (o.kind != objs[0].kind) throw std::invalid_argument("objects of different kinds");
    if (o.host != objs[0].host) throw std::invalid_argument("objects over different algebras");
  }
  const HopfData& h = *objs[0].host;
  std::optional<bool> expected;
  if (is_commutative(h) && is_cocommutative(h)) expected = true;
  auto t0 = Clock::now();
  const PseudosymmetryResult ps = pseudosymmetry_check(objs[0], objs[1], objs[2]);
  const double ms = elapsed_ms(t0);
  rep.add("pseudosymmetric (definition)", kAnchorYdPseudo, expected, ps.def_form, ms);
  rep.add("pseudosymmetric (double braidings commute)", kAnchorPseudoT, expected, ps.t_form, ms);
  t0 = Clock::now();
  rep.add_all(hexagon_check(objs[0], objs[1], objs[2]), "hexagon ", kAnchorHexagon, elapsed_ms(t0));
  rep.result = {{"kind", to_string(objs[0].kind)},
                {"host_commutative", is_commutative(h)},
                {"host_cocommutative", is_cocommutative(h)}};
}

void yd_search(Report& rep, Resolver& res, const std::string& hopf_ref) {
  const auto t0 = Clock::now();
  const auto catalog = adjoint_catalog(res.hopf(hopf_ref));
  const WitnessSearch ws = search_pseudosymmetry_witness(catalog);
  Json names = Json::array();
  for (const auto& c : catalog) names.push_back(c.name);
  rep.add("catalog search", kAnchorSearch, std::nullopt,
          ws.found ? Verdict::fail(ws.triple + " at " + ws.witness) : Verdict::pass(), elapsed_ms(t0));
  rep.result = {{"catalog", std::move(names)},
                {"triples_tried", ws.triples_tried},
                {"outcome", ws.found ? "witness" : "inconclusive"}};
}

Verdict compare_invariants(const BraidWord& a, const BraidWord& b) {
  const PsInvariant x = ps_invariant(a), y = ps_invariant(b);
  if (x.perm != y.perm) return Verdict::fail("underlying permutations differ");
  const int n = a.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x.crossing(i, j) != y.crossing(i, j)) {
        return Verdict::fail("strands (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") cross " + std::to_string(x.crossing(i, j)) + " vs " +
                             std::to_string(y.crossing(i, j)) + " times");
      }
    }
  }
  return Verdict::pass();
}

Json invariant_json(const PsInvariant& inv) {
  Json cr = Json::array();
  const int n = static_cast<int>(inv.perm.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) cr.push_back({i + 1, j + 1, inv.crossing(i, j)});
  }
  Json perm = Json::array();
  for (int p : inv.perm) perm.push_back(p + 1);
  return {{"permutation", std::move(perm)}, {"crossings", std::move(cr)}};
}

constexpr long kMaxRepDim = 4096;

long power(int base, int exp) {
  long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void psbraid_check(Report& rep, const YbOperator& op) {
  auto t0 = Clock::now();
  const YbVerdict v = yb_check(op);
  const double ms = elapsed_ms(t0);
  rep.add("Yang-Baxter", kAnchorYb, true, v.yb, ms);
  rep.add("pseudosymmetric (sigma)", kAnchorPsYb, std::nullopt, v.ps_sigma, ms);
  rep.add("pseudosymmetric (inverse)", kAnchorPsYb, std::nullopt, v.ps_inverse, ms);
  Json skipped = Json::array();
  if (v.is_yb() && v.is_pseudosymmetric()) {
    for (const auto& wp : ps_word_pair_sample()) {
      if (power(op.dim, wp.first.n) > kMaxRepDim) {
        skipped.push_back(wp.name);
        continue;
      }
      t0 = Clock::now();
      const auto d = first_difference(represent(wp.first, op), represent(wp.second, op));
      rep.add("representation agrees: " + wp.name, kAnchorPsYb, true,
              d ? Verdict::fail("column " + std::to_string(d->first) + ", row " + std::to_string(d->second))
                : Verdict::pass(),
              elapsed_ms(t0));
    }
  }
  t0 = Clock::now();
  const auto d = first_difference(represent(canonical_braiding_word(1, 1), op), op.sigma);
  rep.add("c_{1,1} represents to sigma", kAnchorC11, true,
          d ? Verdict::fail("column " + std::to_string(d->first) + ", row " + std::to_string(d->second))
            : Verdict::pass(),
          elapsed_ms(t0));
  rep.result = {{"dim", op.dim}, {"skipped_pairs", std::move(skipped)}};
}

void emit(const Report& rep, bool timings, std::ostream& out, std::ostream& err) {
  Json j;
  j["command"] = rep.command;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json x;
    x["name"] = e.name;
    x["anchor"] = e.anchor;
    if (e.expected) x["expected"] = *e.expected;
    x["verdict"] = e.verdict.holds;
    if (!e.verdict.holds) x["witness"] = e.verdict.witness;
    if (timings) x["runtime_ms"] = e.ms;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["all_match"] = rep.all_match();
  if (!rep.result.is_null()) j["result"] = rep.result;
  out << j.dump(2) << "\n";

  int mismatches = 0;
  for (const auto& e : rep.entries) {
    const char* tag = !e.matches() ? "MISMATCH" : e.verdict.holds ? "true    " : "false   ";
    err << tag << "  " << e.name;
    if (!e.verdict.holds) err << "  [" << e.verdict.witness << "]";
    if (!e.matches()) err << "  (expected " << (*e.expected ? "true" : "false") << ")";
    err << "\n";
    mismatches += e.matches() ? 0 : 1;
  }
  err << rep.command << ": " << rep.entries.size() << " checks, " << mismatches << " mismatches\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of pseudosymmetric braidings and pseudotriangular Hopf algebras", "qhopf"};
  app.fallthrough();
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "include runtime_ms in report entries");

  int nu = 1, s = 1, n = 3;
  std::string beta = "formal", group_ref, plus, minus, module_ref, hopf_ref, yb_ref, word, w1, w2, expect;
  std::vector<std::string> triple;

  auto* radford = app.add_subcommand("radford", "Radford algebras H_nu and R_{s,beta}");
  radford->require_subcommand(1);
  auto* r_scan = radford->add_subcommand("scan", "every odd s in [1, 2 nu)");
  r_scan->add_option("--nu", nu, "odd nu")->required();
  r_scan->add_option("--beta", beta, "formal, p/q or coefficient vector");
  auto* r_check = radford->add_subcommand("check", "one structure R_{s,beta}");
  r_check->add_option("--nu", nu)->required();
  r_check->add_option("--s", s)->required();
  r_check->add_option("--beta", beta);
  auto* r_dump = radford->add_subcommand("dump", "Hopf JSON of H_nu");
  r_dump->add_option("--nu", nu)->required();

  auto* posbasis = app.add_subcommand("posbasis", "positive-basis Hopf algebras H(G; G+, G-)");
  posbasis->require_subcommand(1);
  auto* p_scan = posbasis->add_subcommand("scan-qt", "every quasitriangular structure R(xi, eta)");
  p_scan->add_option("--group", group_ref, "builtin:NAME or group JSON")->required();
  p_scan->add_option("--plus", plus, "comma-separated labels of G+")->required();
  p_scan->add_option("--minus", minus, "comma-separated labels of G-")->required();
  auto* p_group = posbasis->add_subcommand("group", "group JSON of a reference");
  p_group->add_option("--group", group_ref)->required();

  auto* dbl = app.add_subcommand("double", "Drinfeld double of k[G]*");
  dbl->add_option("--group", group_ref)->required();

  auto* yd = app.add_subcommand("yd", "Yetter-Drinfeld modules and LR objects");
  yd->require_subcommand(1);
  auto* y_check = yd->add_subcommand("check", "axioms of one object");
  y_check->add_option("--module", module_ref)->required();
  auto* y_pseudo = yd->add_subcommand("pseudo", "pseudosymmetry on a triple");
  y_pseudo->add_option("--triple", triple)->required()->expected(3);
  auto* y_search = yd->add_subcommand("search", "witness search over the adjoint catalog");
  y_search->add_option("--hopf", hopf_ref)->required();
  auto* y_dump = yd->add_subcommand("dump", "module JSON of a reference");
  y_dump->add_option("--module", module_ref)->required();

  auto* ps = app.add_subcommand("psbraid", "PS_n and Yang-Baxter operators");
  ps->require_subcommand(1);
  auto* ps_inv = ps->add_subcommand("invariant", "permutation and crossing counts");
  ps_inv->add_option("-n,--n", n)->required();
  ps_inv->add_option("--word", word)->required();
  auto* ps_eq = ps->add_subcommand("equal", "equality in PS_n");
  ps_eq->add_option("-n,--n", n)->required();
  ps_eq->add_option("w1", w1)->required();
  ps_eq->add_option("w2", w2)->required();
  ps_eq->add_option("--expect", expect)->check(CLI::IsMember({"equal", "different"}));
  auto* ps_check = ps->add_subcommand("check", "braid relations and the PS_n word-pair sample");
  ps_check->add_option("--yb", yb_ref)->required();
  auto* ps_rep = ps->add_subcommand("rep", "matrix of a braid word");
  ps_rep->add_option("--yb", yb_ref)->required();
  ps_rep->add_option("--word", word)->required();
  auto* ps_n = ps_rep->add_option("-n,--n", n, "strand count (default: smallest that fits)");
  auto* ps_dump = ps->add_subcommand("dump", "operator JSON of a reference");
  ps_dump->add_option("--yb", yb_ref)->required();

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra dumps");
  hopf->require_subcommand(1);
  auto* h_verify = hopf->add_subcommand("verify", "axiom check");
  h_verify->add_option("--hopf", hopf_ref)->required();
  auto* h_dump = hopf->add_subcommand("dump", "Hopf JSON of a reference");
  h_dump->add_option("--hopf", hopf_ref)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  Report rep;
  for (const auto& a : args) {
    if (a == "--timings") continue;
    if (!rep.command.empty()) rep.command += " ";
    rep.command += a.find(' ') == std::string::npos && !a.empty() ? a : "\"" + a + "\"";
  }

  Resolver res;
  try {
    if (r_scan->parsed()) {
      radford_scan(rep, nu, std::nullopt, beta);
    } else if (r_check->parsed()) {
      radford_scan(rep, nu, s, beta);
    } else if (r_dump->parsed()) {
      if (nu < 1 || nu % 2 == 0) throw std::invalid_argument("--nu must be a positive odd integer");
      out << hopf_to_json(*build_radford(nu).hopf).dump(2) << "\n";
      return kExitMatch;
    } else if (p_scan->parsed()) {
      posbasis_scan(rep, res, group_ref, plus, minus);
    } else if (p_group->parsed()) {
      out << group_to_json(res.group(group_ref)).dump(2) << "\n";
      return kExitMatch;
    } else if (dbl->parsed()) {
      double_check(rep, res, group_ref);
    } else if (y_check->parsed()) {
      const auto t0 = Clock::now();
      const YdObject m = res.module(module_ref, false);
      rep.add_all(check_object(m), "", kAnchorYdAxioms, elapsed_ms(t0));
      rep.result = {{"kind", to_string(m.kind)}, {"dim", m.dim}, {"hopf_ref", m.hopf_ref}};
    } else if (y_pseudo->parsed()) {
      yd_pseudo(rep, res, triple);
    } else if (y_search->parsed()) {
      yd_search(rep, res, hopf_ref);
    } else if (y_dump->parsed()) {
      out << module_to_json(res.module(module_ref, false)).dump(2) << "\n";
      return kExitMatch;
    } else if (ps_inv->parsed()) {
      const BraidWord w = BraidWord::parse(n, word);
      rep.result = invariant_json(ps_invariant(w));
    } else if (ps_eq->parsed()) {
      const BraidWord a = BraidWord::parse(n, w1), b = BraidWord::parse(n, w2);
      std::optional<bool> exp;
      if (!expect.empty()) exp = expect == "equal";
      rep.add("equal in PS_" + std::to_string(n), kAnchorPsEqual, exp, compare_invariants(a, b));
      rep.result = {{"first", invariant_json(ps_invariant(a))}, {"second", invariant_json(ps_invariant(b))}};
    } else if (ps_check->parsed()) {
      psbraid_check(rep, res.yb(yb_ref).op);
    } else if (ps_rep->parsed()) {
      const auto loaded = res.yb(yb_ref);
      int strands = 2;
      if (ps_n->count() > 0) {
        strands = n;
      } else {
        for (const auto& l : BraidWord::parse(64, word).letters) strands = std::max(strands, l.gen + 1);
      }
      const BraidWord w = BraidWord::parse(strands, word);
      if (power(loaded.op.dim, strands) > kMaxRepDim) {
        throw std::invalid_argument("representation would exceed dimension " + std::to_string(kMaxRepDim));
      }
      const Matrix m = represent(w, loaded.op);
      rep.result = {{"n", strands}, {"dim", m.rows()}, {"conductor", loaded.conductor},
                    {"matrix", matrix_to_json(m)}};
    } else if (ps_dump->parsed()) {
      const auto loaded = res.yb(yb_ref);
      out << yb_to_json(loaded.op, loaded.conductor).dump(2) << "\n";
      return kExitMatch;
    } else if (h_verify->parsed()) {
      const auto t0 = Clock::now();
      const auto h = res.hopf(hopf_ref, false);
      rep.add_all(verify_hopf(*h), "", kAnchorHopf, elapsed_ms(t0));
      rep.result = {{"dim", h->dim}, {"conductor", h->conductor}};
    } else if (h_dump->parsed()) {
      out << hopf_to_json(*res.hopf(hopf_ref)).dump(2) << "\n";
      return kExitMatch;
    }
  } catch (const CrossCheckError& e) {
    err << "cross-check disagreement: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const LoadError& e) {
    err << "load error: " << e.what() << "\n";
    return kExitLoad;
  } catch (const AxiomError& e) {
    err << "axiom failure: " << e.what() << "\n";
    return kExitLoad;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitLoad;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "load error: " << e.what() << "\n";
    return kExitLoad;
  }

  emit(rep, timings, out, err);
  return rep.all_match() ? kExitMatch : kExitMismatch;
}

}  // namespace qhopf
