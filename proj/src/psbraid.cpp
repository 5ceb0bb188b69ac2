#include "qhopf/psbraid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

BraidWord BraidWord::parse(int n, const std::string& text) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  BraidWord w;
  w.n = n;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) {
      throw std::invalid_argument("bad braid token '" + tok + "'");
    }
    const auto caret = tok.find('^');
    const std::string gen_part = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    int exponent = 1;
    std::size_t used = 0;
    int gen = 0;
    try {
      gen = std::stoi(gen_part, &used);
      if (used != gen_part.size()) throw std::invalid_argument("");
      if (caret != std::string::npos) {
        const std::string e = tok.substr(caret + 1);
        exponent = std::stoi(e, &used);
        if (used != e.size()) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid token '" + tok + "'");
    }
    if (gen < 1 || gen > n - 1) {
      throw std::invalid_argument("generator s" + std::to_string(gen) + " out of range for n = " +
                                  std::to_string(n));
    }
    const int sign = exponent < 0 ? -1 : 1;
    for (int i = 0; i < std::abs(exponent); ++i) w.letters.push_back({gen, sign});
  }
  return w;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord w;
  w.n = n;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, -it->sign});
  return w;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("braid words on different strand counts");
  BraidWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return a * b * a.inverse() * b.inverse();
}

namespace {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

long PsInvariant::crossing(int i, int j) const {
  return crossings.at(pair_index(static_cast<int>(perm.size()), i, j));
}

PsInvariant ps_invariant(const BraidWord& w) {
  const int n = w.n;
  std::vector<int> at(n);  // strand occupying each position
  std::iota(at.begin(), at.end(), 0);
  PsInvariant inv;
  inv.crossings.assign(n * (n - 1) / 2, 0);
  // the rightmost letter acts first
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto& l = *it;
    const int p = l.gen - 1;
    inv.crossings[pair_index(n, at[p], at[p + 1])] += l.sign;
    std::swap(at[p], at[p + 1]);
  }
  inv.perm.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) inv.perm[at[pos]] = pos;
  return inv;
}

bool ps_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("ps_equal: strand counts differ");
  return ps_invariant(a) == ps_invariant(b);
}

BraidWord canonical_braiding_word(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("canonical_braiding_word: negative size");
  BraidWord w;
  w.n = std::max(1, n + m);
  if (n == 0 || m == 0) return w;
  for (int j = 1; j <= n; ++j) {
    for (int k = m + j - 1; k >= j; --k) w.letters.push_back({k, 1});
  }
  return w;
}

YbOperator make_yb(int dim, Matrix sigma) {
  YbOperator op{dim, std::move(sigma), Matrix()};
  op.inverse = op.sigma.inverse();
  return op;
}

YbOperator swap_operator(int dim) {
  std::vector<int> image(dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) image[i * dim + j] = j * dim + i;
  }
  const Matrix p = Matrix::permutation(image);
  return {dim, p, p};
}

YbVerdict yb_check(const YbOperator& op) {
  if (!(op.sigma * op.inverse).is_identity() || !(op.inverse * op.sigma).is_identity()) {
    throw SingularError("sigma and its stored inverse do not compose to the identity");
  }
  const Matrix id = Matrix::identity(op.dim);
  const Matrix s1 = kron(op.sigma, id), s2 = kron(id, op.sigma);
  const Matrix t1 = kron(op.inverse, id), t2 = kron(id, op.inverse);
  auto cmp = [](const Matrix& a, const Matrix& b) {
    const auto d = first_difference(a, b);
    return d ? Verdict::fail("column " + std::to_string(d->first) + ", row " + std::to_string(d->second))
             : Verdict::pass();
  };
  YbVerdict v;
  v.yb = cmp(s1 * s2 * s1, s2 * s1 * s2);
  v.ps_sigma = cmp(s1 * t2 * s1, s2 * t1 * s2);
  v.ps_inverse = cmp(t1 * s2 * t1, t2 * s1 * t2);
  return v;
}

std::vector<Matrix> regular_action(const HopfData& h) {
  std::vector<Matrix> act;
  for (int a = 0; a < h.dim; ++a) {
    Matrix m(h.dim, h.dim);
    for (int x = 0; x < h.dim; ++x) m.set_col(x, h.product(a, x));
    act.push_back(std::move(m));
  }
  return act;
}

YbOperator yb_from_qt(const HopfData& h, const Tensor& r, const std::vector<Matrix>& action) {
  if (static_cast<int>(action.size()) != h.dim) throw std::invalid_argument("action size differs from dim H");
  const int d = action[0].rows();
  for (int a = 0; a < h.dim; ++a) {
    for (int b = 0; b < h.dim; ++b) {
      Matrix ab(d, d);
      ColumnBuilder cb(d);
      for (int x = 0; x < d; ++x) {
        for (const auto& [i, c] : h.product(a, b)) {
          for (const auto& [row, v] : action[i].col(x)) cb.add(row, c * v);
        }
        ab.set_col(x, cb.take());
      }
      if (!(ab == action[a] * action[b])) throw AxiomError("action is not a left module");
    }
  }
  // Column (v, w) of sigma: sum b.w (x) a.v. Column (x, y) of the inverse: sum a'.y (x) b'.x.
  auto build = [&](const Tensor& t, bool inverse) {
    Matrix m(d * d, d * d);
    ColumnBuilder cb(d * d);
    for (int v = 0; v < d; ++v) {
      for (int w = 0; w < d; ++w) {
        for (const auto& [k, c] : t.terms()) {
          const auto ab = t.unpack(k);
          const int first_el = inverse ? ab[0] : ab[1];
          const int second_el = inverse ? ab[1] : ab[0];
          for (const auto& [p, cp] : action[first_el].col(w)) {
            for (const auto& [q, cq] : action[second_el].col(v)) cb.add(p * d + q, c * cp * cq);
          }
        }
        m.set_col(v * d + w, cb.take());
      }
    }
    return m;
  };
  YbOperator op{d, build(r, false), build(r_inverse(h, r), true)};
  const YbVerdict v = yb_check(op);
  if (!v.is_yb()) throw AxiomError("sigma from R fails the braid relation: " + v.yb.witness);
  return op;
}

Matrix represent(const BraidWord& w, const YbOperator& op) {
  const int n = w.n;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= op.dim;
  Matrix out = Matrix::identity(static_cast<int>(total));
  if (n < 2) return out;
  auto id_pow = [&](int k) {
    int size = 1;
    for (int i = 0; i < k; ++i) size *= op.dim;
    return Matrix::identity(size);
  };
  std::vector<Matrix> plus(n), minus(n);
  for (const auto& l : w.letters) {
    if (l.gen < 1 || l.gen > n - 1) throw std::invalid_argument("letter out of range");
    auto& cache = l.sign > 0 ? plus : minus;
    if (cache[l.gen].rows() == 0) {
      cache[l.gen] = kron(kron(id_pow(l.gen - 1), l.sign > 0 ? op.sigma : op.inverse),
                          id_pow(n - l.gen - 1));
    }
    out = out * cache[l.gen];
  }
  return out;
}

YbOperator transfer(const YbOperator& op, const Matrix& a) {
  const Matrix aa = kron(a, a);
  const Matrix aa_inv = aa.inverse();
  return {op.dim, aa_inv * op.sigma * aa, aa_inv * op.inverse * aa};
}

std::vector<WordPair> ps_word_pair_sample() {
  auto w3 = [](const std::string& s) { return BraidWord::parse(3, s); };
  auto w4 = [](const std::string& s) { return BraidWord::parse(4, s); };
  const BraidWord a12 = w3("s1^2");
  const BraidWord a13 = w3("s2 s1^2 s2^-1");
  const BraidWord a23 = w3("s2^2");
  std::vector<WordPair> out;
  out.push_back({"defining relation", w3("s1 s2^-1 s1"), w3("s2 s1^-1 s2")});
  out.push_back({"inverse defining relation", w3("s1^-1 s2 s1^-1"), w3("s2^-1 s1 s2^-1")});
  out.push_back({"braid relation", w3("s1 s2 s1"), w3("s2 s1 s2")});
  out.push_back({"w [A12, A13]", w3("s1 s2"), w3("s1 s2") * commutator(a12, a13)});
  out.push_back({"[A12, A23]", w3(""), commutator(a12, a23)});
  out.push_back({"A12 A23 = A23 A12", a12 * a23, a23 * a12});
  out.push_back({"conjugated relation", w3("s1 s1 s2^-1 s1 s1^-1"), w3("s1 s2 s1^-1 s2 s1^-1")});
  out.push_back({"far commutation", w4("s1 s3"), w4("s3 s1")});
  out.push_back({"relation on strands 2-4", w4("s2 s3^-1 s2 s1"), w4("s3 s2^-1 s3 s1")});
  return out;
}

}  // namespace qhopf
