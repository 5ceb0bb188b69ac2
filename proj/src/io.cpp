#include "qhopf/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

Json cyc_to_json(const Cyc& c) {
  Json a = Json::array();
  for (const auto& q : c.coeffs()) a.push_back(format_rational(q));
  return a;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw LoadError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw LoadError("expected a rational \"p/q\", got " + j.dump());
}

Cyc cyc_from_json(const Json& j, int conductor) {
  if (!j.is_array()) return Cyc(conductor, rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  if (static_cast<int>(c.size()) > cyclotomic_degree(conductor)) {
    // Longer vectors are accepted as polynomials in w and reduced.
    return Cyc::from_coeffs(conductor, std::move(c));
  }
  c.resize(cyclotomic_degree(conductor), Rational(0));
  return Cyc::from_coeffs(conductor, std::move(c));
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw LoadError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw LoadError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::vector<int> index_tuple(const Json& entry, std::size_t arity, int bound) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || entry[0].size() != arity) {
    throw LoadError("sparse entry must be [[" + std::to_string(arity) + " indices], scalar]: " +
                    entry.dump());
  }
  std::vector<int> idx;
  for (const auto& x : entry[0]) {
    if (!x.is_number_integer()) throw LoadError("index must be an integer: " + entry.dump());
    const int v = x.get<int>();
    if (v < 0 || v >= bound) throw LoadError("index out of range: " + entry.dump());
    idx.push_back(v);
  }
  return idx;
}

// Bound per position for tuples with mixed ranges.
std::vector<int> index_tuple(const Json& entry, const std::vector<int>& bounds) {
  std::vector<int> idx = index_tuple(entry, bounds.size(), *std::max_element(bounds.begin(), bounds.end()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= bounds[i]) throw LoadError("index out of range: " + entry.dump());
  }
  return idx;
}

Json entry(std::initializer_list<int> idx, const Scalar& s) {
  return Json::array({Json(std::vector<int>(idx)), scalar_to_json(s)});
}

std::vector<std::string> labels_from(const Json& j, int n, const char* what) {
  std::vector<std::string> out;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw LoadError(std::string(what) + " labels must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw LoadError(std::string(what) + " labels must be strings");
      out.push_back(l.get<std::string>());
    }
    if (static_cast<int>(out.size()) != n) throw LoadError(std::string(what) + " label count mismatch");
  } else {
    for (int i = 0; i < n; ++i) out.push_back("b" + std::to_string(i));
  }
  return out;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) throw LoadError(std::string("field '") + name + "' must be an array");
  return v;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_zero()) return "0";
  if (s.is_constant()) {
    const Cyc c = s.constant();
    if (c.is_rational()) return format_rational(c.coeffs()[0]);
    return cyc_to_json(c);
  }
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(cyc_to_json(c));
  return a;
}

Scalar scalar_from_json(const Json& j, int conductor) {
  if (!j.is_array()) return Scalar(conductor, rational_from_json(j));
  const bool poly = !j.empty() && j[0].is_array();
  if (!poly) return Scalar(cyc_from_json(j, conductor));
  std::vector<Cyc> c;
  for (const auto& x : j) c.push_back(cyc_from_json(x, conductor));
  return Scalar(conductor, std::move(c));
}

Json hopf_to_json(const HopfData& h) {
  Json j;
  j["dim"] = h.dim;
  j["conductor"] = h.conductor;
  j["labels"] = h.labels;
  Json mul = Json::array();
  for (int a = 0; a < h.dim; ++a) {
    for (int b = 0; b < h.dim; ++b) {
      SparseVec col = h.product(a, b);
      std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [k, s] : col) mul.push_back(entry({a, b, k}, s));
    }
  }
  j["mul"] = std::move(mul);
  Json unit = Json::array();
  SparseVec u = h.unit;
  std::sort(u.begin(), u.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [k, s] : u) unit.push_back(entry({k}, s));
  j["unit"] = std::move(unit);
  Json comul = Json::array();
  for (int a = 0; a < h.dim; ++a) {
    for (const auto& [idx, s] : h.comul[a].sorted_terms()) comul.push_back(entry({a, idx[0], idx[1]}, s));
  }
  j["comul"] = std::move(comul);
  Json counit = Json::array();
  for (const auto& s : h.counit) counit.push_back(scalar_to_json(s));
  j["counit"] = std::move(counit);
  Json anti = Json::array();
  for (int a = 0; a < h.dim; ++a) {
    SparseVec col = h.antipode.col(a);
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, s] : col) anti.push_back(entry({a, k}, s));
  }
  j["antipode"] = std::move(anti);
  return j;
}

HopfData hopf_from_json(const Json& j) {
  HopfData h;
  h.dim = int_field(j, "dim");
  h.conductor = j.contains("conductor") ? int_field(j, "conductor") : 1;
  if (h.dim < 1 || h.dim > Tensor::kMaxIndex) throw LoadError("dim out of range");
  if (h.conductor < 1) throw LoadError("conductor must be positive");
  h.labels = labels_from(j, h.dim, "hopf");
  const int n = h.dim, m = h.conductor;

  std::vector<std::map<int, Scalar>> mul(n * n);
  for (const auto& e : array_field(j, "mul")) {
    const auto idx = index_tuple(e, 3, n);
    auto [it, fresh] = mul[idx[0] * n + idx[1]].try_emplace(idx[2], scalar_from_json(e[1], m));
    if (!fresh) it->second += scalar_from_json(e[1], m);
  }
  h.mul.resize(n * n);
  for (int i = 0; i < n * n; ++i) {
    for (auto& [k, s] : mul[i]) {
      if (!s.is_zero()) h.mul[i].emplace_back(k, s);
    }
  }
  std::map<int, Scalar> unit;
  for (const auto& e : array_field(j, "unit")) {
    const auto idx = index_tuple(e, 1, n);
    unit[idx[0]] += scalar_from_json(e[1], m);
  }
  for (auto& [k, s] : unit) {
    if (!s.is_zero()) h.unit.emplace_back(k, s);
  }
  h.comul.assign(n, Tensor(2));
  for (const auto& e : array_field(j, "comul")) {
    const auto idx = index_tuple(e, 3, n);
    h.comul[idx[0]].add({idx[1], idx[2]}, scalar_from_json(e[1], m));
  }
  const Json& counit = array_field(j, "counit");
  if (static_cast<int>(counit.size()) != n) throw LoadError("counit must list dim scalars");
  for (const auto& s : counit) h.counit.push_back(scalar_from_json(s, m));
  std::vector<SparseVec> anti(n);
  for (const auto& e : array_field(j, "antipode")) {
    const auto idx = index_tuple(e, 2, n);
    anti[idx[0]].emplace_back(idx[1], scalar_from_json(e[1], m));
  }
  h.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) h.antipode.set_col(i, std::move(anti[i]));
  return h;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["table"] = g.table();
  j["identity"] = g.identity();
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  const int n = int_field(j, "order");
  if (n < 1) throw LoadError("order must be positive");
  const Json& t = array_field(j, "table");
  std::vector<std::vector<int>> table;
  if (t.size() == static_cast<std::size_t>(n) * n && !t.empty() && t[0].is_number_integer()) {
    // row-major flat table
    table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n * n; ++i) table[i / n][i % n] = t[i].get<int>();
  } else {
    if (static_cast<int>(t.size()) != n) throw LoadError("table must have order rows");
    for (const auto& row : t) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw LoadError("table row has wrong length");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw LoadError("table entries must be integers");
        r.push_back(x.get<int>());
      }
      table.push_back(std::move(r));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = labels_from(j, n, "group");
  } else {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  const int e = j.contains("identity") ? int_field(j, "identity") : 0;
  return FiniteGroup(std::move(table), std::move(labels), e);
}

Json module_to_json(const YdObject& m) {
  const HopfData& h = *m.host;
  Json j;
  j["hopf_ref"] = m.hopf_ref;
  j["kind"] = to_string(m.kind);
  j["dim"] = m.dim;
  j["labels"] = m.labels;
  auto actions = [&](const std::vector<Matrix>& act) {
    Json a = Json::array();
    for (int x = 0; x < h.dim; ++x) {
      for (int c = 0; c < m.dim; ++c) {
        SparseVec col = act[x].col(c);
        std::sort(col.begin(), col.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        for (const auto& [r, s] : col) a.push_back(entry({x, c, r}, s));
      }
    }
    return a;
  };
  auto coactions = [&](const std::vector<Tensor>& co) {
    Json a = Json::array();
    for (int x = 0; x < m.dim; ++x) {
      for (const auto& [idx, s] : co[x].sorted_terms()) a.push_back(entry({x, idx[0], idx[1]}, s));
    }
    return a;
  };
  j["action"] = actions(m.action);
  switch (m.kind) {
    case ModuleKind::kYdLeftLeft:
      j["coaction"] = coactions(m.left_coaction);
      break;
    case ModuleKind::kYdLeftRight:
      j["coaction"] = coactions(m.right_coaction);
      break;
    case ModuleKind::kLr:
      j["right_action"] = actions(m.right_action);
      j["left_coaction"] = coactions(m.left_coaction);
      j["right_coaction"] = coactions(m.right_coaction);
      break;
  }
  return j;
}

YdObject module_from_json(const Json& j, std::shared_ptr<const HopfData> host) {
  YdObject m;
  try {
    m.kind = parse_module_kind(field(j, "kind").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw LoadError(e.what());
  } catch (const nlohmann::json::exception&) {
    throw LoadError("field 'kind' must be a string");
  }
  m.host = host;
  m.hopf_ref = j.value("hopf_ref", "");
  m.dim = int_field(j, "dim");
  if (m.dim < 1 || m.dim > Tensor::kMaxIndex) throw LoadError("module dim out of range");
  m.labels = labels_from(j, m.dim, "module");
  const int hd = host->dim, d = m.dim, cond = host->conductor;
  auto actions = [&](const char* name) {
    std::vector<std::vector<SparseVec>> cols(hd, std::vector<SparseVec>(d));
    for (const auto& e : array_field(j, name)) {
      const auto idx = index_tuple(e, {hd, d, d});
      cols[idx[0]][idx[1]].emplace_back(idx[2], scalar_from_json(e[1], cond));
    }
    std::vector<Matrix> out;
    for (int x = 0; x < hd; ++x) {
      Matrix a(d, d);
      for (int c = 0; c < d; ++c) a.set_col(c, std::move(cols[x][c]));
      out.push_back(std::move(a));
    }
    return out;
  };
  auto coactions = [&](const char* name, bool left) {
    std::vector<Tensor> out(d, Tensor(2));
    for (const auto& e : array_field(j, name)) {
      const auto idx = left ? index_tuple(e, {d, hd, d}) : index_tuple(e, {d, d, hd});
      out[idx[0]].add({idx[1], idx[2]}, scalar_from_json(e[1], cond));
    }
    return out;
  };
  m.action = actions("action");
  switch (m.kind) {
    case ModuleKind::kYdLeftLeft:
      m.left_coaction = coactions("coaction", true);
      break;
    case ModuleKind::kYdLeftRight:
      m.right_coaction = coactions("coaction", false);
      break;
    case ModuleKind::kLr:
      m.right_action = actions("right_action");
      m.left_coaction = coactions("left_coaction", true);
      m.right_coaction = coactions("right_coaction", false);
      break;
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (int c = 0; c < m.cols(); ++c) {
    SparseVec col = m.col(c);
    std::sort(col.begin(), col.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    for (const auto& [r, s] : col) a.push_back(entry({r, c}, s));
  }
  return a;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, int conductor) {
  if (!j.is_array()) throw LoadError("matrix must be an array of [[row, col], scalar]");
  std::vector<SparseVec> c(cols);
  for (const auto& e : j) {
    const auto idx = index_tuple(e, {rows, cols});
    c[idx[1]].emplace_back(idx[0], scalar_from_json(e[1], conductor));
  }
  Matrix m(rows, cols);
  for (int i = 0; i < cols; ++i) m.set_col(i, std::move(c[i]));
  return m;
}

Json yb_to_json(const YbOperator& op, int conductor) {
  Json j;
  j["dim"] = op.dim;
  j["conductor"] = conductor;
  j["sigma"] = matrix_to_json(op.sigma);
  j["inverse"] = matrix_to_json(op.inverse);
  return j;
}

YbOperator yb_from_json(const Json& j) {
  const int d = int_field(j, "dim");
  if (d < 1 || d > 64) throw LoadError("yb dim out of range");
  const int cond = j.contains("conductor") ? int_field(j, "conductor") : 1;
  Matrix sigma = matrix_from_json(field(j, "sigma"), d * d, d * d, cond);
  if (j.contains("inverse")) {
    return {d, std::move(sigma), matrix_from_json(j["inverse"], d * d, d * d, cond)};
  }
  try {
    return make_yb(d, std::move(sigma));
  } catch (const SingularError& e) {
    throw LoadError(std::string("sigma is not invertible: ") + e.what());
  }
}

Json report_to_json(const CheckReport& r) {
  Json a = Json::array();
  for (const auto& e : r.entries()) {
    Json x;
    x["name"] = e.name;
    x["verdict"] = e.verdict.holds;
    if (!e.verdict.holds) x["witness"] = e.verdict.witness;
    a.push_back(std::move(x));
  }
  return a;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qhopf
