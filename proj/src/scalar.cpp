#include "qhopf/scalar.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact integer division of polynomials; the divisor must be monic.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dd; ++k) {
    if (num[k] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quot;
}

std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  Poly quot;
  if (num.size() < den.size()) return {quot, num};
  quot.assign(num.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  for (std::size_t k = num.size(); k-- >= den.size();) {
    if (num[k] == 0) continue;
    Rational c = num[k] / lead;
    const std::size_t shift = k - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int common_conductor(int a, int b) {
  if (a == b) return a;
  if (a == 1) return b;
  if (b == 1) return a;
  throw ConductorMismatch("conductor mismatch: " + std::to_string(a) + " vs " +
                          std::to_string(b));
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

int cyclotomic_degree(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Cyc

Cyc::Cyc() : m_(1), c_(1, Rational(0)) {}

Cyc::Cyc(int conductor, const Rational& value)
    : m_(conductor), c_(cyclotomic_degree(conductor), Rational(0)) {
  c_[0] = value;
}

Cyc Cyc::omega_power(int conductor, std::int64_t k) {
  k %= conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> coeffs(k + 1, Rational(0));
  coeffs[k] = 1;
  return from_coeffs(conductor, std::move(coeffs));
}

Cyc Cyc::from_coeffs(int conductor, std::vector<Rational> p) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) p[k - deg + j] -= c * static_cast<long>(phi[j]);
    }
    p[k] = 0;
  }
  p.resize(deg, Rational(0));
  Cyc out;
  out.m_ = conductor;
  out.c_ = std::move(p);
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

Cyc Cyc::promoted(int conductor) const {
  if (conductor == m_) return *this;
  if (m_ != 1) throw ConductorMismatch("cannot promote conductor " + std::to_string(m_));
  return Cyc(conductor, c_[0]);
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  const int m = common_conductor(m_, o.m_);
  if (m != m_) *this = promoted(m);
  if (o.m_ != m) return *this += o.promoted(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  const int m = common_conductor(m_, o.m_);
  if (o.is_rational()) {
    if (m != m_) *this = promoted(m);
    const Rational s = o.c_[0];
    for (auto& q : c_) q *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = from_coeffs(m, std::move(prod));
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const int m = common_conductor(a.m_, b.m_);
  return a.promoted(m).c_ == b.promoted(m).c_;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw SingularError("inverse of zero");
  if (is_rational()) return Cyc(m_, 1 / c_[0]);
  const auto& phi_int = cyclotomic_polynomial(m_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly next = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // Phi_m is irreducible, so the gcd is a nonzero constant.
  const Rational g = r0.at(0);
  for (auto& q : s0) q /= g;
  return from_coeffs(m_, std::move(s0));
}

std::string Cyc::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << format_rational(c_[i]);
    if (i == 1) os << "*w";
    if (i > 1) os << "*w^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(int conductor, const Rational& value) : m_(conductor) {
  if (value != 0) c_.emplace_back(conductor, value);
}

Scalar::Scalar(const Cyc& c) : m_(c.conductor()) {
  if (!c.is_zero()) c_.push_back(c);
}

Scalar::Scalar(int conductor, std::vector<Cyc> coeffs) : m_(conductor), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.promoted(conductor);
  trim();
}

Scalar Scalar::beta(int conductor) {
  return Scalar(conductor, std::vector<Cyc>{Cyc::zero(conductor), Cyc::one(conductor)});
}

Cyc Scalar::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Cyc::zero(m_);
  return c_[k];
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

void Scalar::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Scalar::align(const Scalar& o) {
  const int m = common_conductor(m_, o.m_);
  if (m != m_) {
    for (auto& c : c_) c = c.promoted(m);
    m_ = m;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  align(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Cyc::zero(m_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  align(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& c : c_) c *= o.c_[0];
    trim();
    return *this;
  }
  std::vector<Cyc> prod(c_.size() + o.c_.size() - 1, Cyc::zero(m_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw SingularError("inverse of zero");
  if (!is_constant()) throw SingularError("inverse of a beta-dependent scalar");
  return Scalar(c_[0].inverse());
}

Scalar Scalar::substitute(const Scalar& value) const {
  // Horner.
  Scalar acc = Scalar::zero(m_);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= value;
    acc += Scalar(c_[k]);
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1 && c_[0].is_rational()) return c_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].to_string() << ")";
    if (k == 1) os << "*b";
    if (k > 1) os << "*b^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qhopf
