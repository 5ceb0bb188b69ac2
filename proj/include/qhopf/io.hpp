#pragma once

// JSON documents: scalars, Hopf algebra dumps, groups, modules, Yang-Baxter
// operators. Every loader validates what it reads and throws LoadError on a
// schema violation; axiom failures surface as AxiomError.
//
// Scalars: a rational is a "p/q" string, an element of Q(w_m) is an array of
// phi(m) such strings (coefficients of 1, w, w^2, ...), and a polynomial in
// beta is an array of those arrays (coefficients of 1, beta, beta^2, ...).
// Sparse tensors are arrays of [index-tuple, scalar].

#include <json.hpp>
#include <string>

#include "qhopf/group.hpp"
#include "qhopf/psbraid.hpp"
#include "qhopf/ydmod.hpp"

namespace qhopf {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, int conductor);

/// {dim, conductor, labels, mul, unit, comul, counit, antipode}
///   mul      [[i, j, k], s]  b_i b_j has coefficient s on b_k
///   unit     [[k], s]
///   comul    [[i, j, k], s]  Delta(b_i) has coefficient s on b_j (x) b_k
///   counit   [s_0, ..., s_{dim-1}]
///   antipode [[i, k], s]     S(b_i) has coefficient s on b_k
Json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

/// {order, labels, table, identity}. The table is validated as a group.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {hopf_ref, kind, dim, labels, action, coaction} for the YD kinds and
/// {hopf_ref, kind, dim, labels, action, right_action, left_coaction,
/// right_coaction} for LR objects.
///   action        [[h, m, k], s]  b_h . m has coefficient s on m_k
///   right_action  [[h, m, k], s]  m . b_h has coefficient s on m_k
///   left_coaction [[m, h, k], s]  term b_h (x) m_k
///   right_coaction/yd-lr coaction [[m, k, h], s]  term m_k (x) b_h
Json module_to_json(const YdObject& m);
/// The host is resolved from hopf_ref by the caller.
YdObject module_from_json(const Json& j, std::shared_ptr<const HopfData> host);

/// {dim, conductor, sigma, inverse}, matrices as [[row, col], s].
Json yb_to_json(const YbOperator& op, int conductor);
YbOperator yb_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int rows, int cols, int conductor);

Json report_to_json(const CheckReport& r);

/// Reads a JSON file; throws LoadError if it cannot be read or parsed.
Json read_json_file(const std::string& path);

}  // namespace qhopf
