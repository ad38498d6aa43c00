#pragma once

// JSON encoding for the CLI. Complex numbers are {"re": .., "im": ..}; inputs
// also accept a bare real number.

#include <string>
#include <vector>

#include <json.hpp>

#include "holocontact/holocontact.hpp"

namespace holocontact::io {

using nlohmann::json;

inline std::string where(const std::string& path) { return path.empty() ? "document" : path; }

inline Complex complex_from(const json& j, const std::string& path) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  if (j.is_object() && j.contains("re") && j.contains("im") && j.at("re").is_number() &&
      j.at("im").is_number()) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
  }
  throw InputError(where(path) + ": expected a complex number {\"re\": x, \"im\": y} or a real number");
}

inline json to_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

inline json to_json(const CVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    a.push_back(to_json(v(i)));
  }
  return a;
}

inline json to_json(const RVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    a.push_back(v(i));
  }
  return a;
}

inline json to_json(const RMat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    a.push_back(to_json(RVec(m.row(i).transpose())));
  }
  return a;
}

inline const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where(path) + ": missing required field \"" + key + "\"");
  }
  return j.at(key);
}

inline CVec cvec_from(const json& j, const std::string& path) {
  if (!j.is_array()) {
    throw InputError(where(path) + ": expected an array of complex numbers");
  }
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline SymMatrix matrix_from(const json& j) {
  const json& rows = field(j, "entries", "");
  if (!rows.is_array() || rows.empty()) {
    throw InputError("entries: expected a non-empty array of rows");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<Eigen::Index>() != n)) {
    throw DimensionMismatch("n does not match the number of rows");
  }
  CMat m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string p = "entries[" + std::to_string(r) + "]";
    const CVec row = cvec_from(rows[static_cast<std::size_t>(r)], p);
    if (row.size() != n) {
      throw DimensionMismatch(p + ": row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
    }
    m.row(r) = row.transpose();
  }
  return SymMatrix(m, 1e-12);
}

inline json to_json(const SymMatrix& A) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < A.n(); ++r) {
    rows.push_back(to_json(CVec(A.entries().row(r).transpose())));
  }
  return json{{"n", A.n()}, {"entries", rows}};
}

/// Term list [{"re": .., "im": .., "exp": [e_1, ..., e_n]}, ...].
inline Polynomial polynomial_from(const json& j, int n, const std::string& path) {
  if (!j.is_array()) {
    throw InputError(where(path) + ": expected an array of terms");
  }
  std::vector<Monomial> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string p = path + "[" + std::to_string(t) + "]";
    Monomial m;
    m.coeff = complex_from(j[t], p);
    const json& e = field(j[t], "exp", p);
    if (!e.is_array()) {
      throw InputError(p + ".exp: expected an array of integers");
    }
    for (const auto& x : e) {
      if (!x.is_number_integer()) {
        throw InputError(p + ".exp: expected an array of integers");
      }
      m.exponents.push_back(x.get<int>());
    }
    if (static_cast<int>(m.exponents.size()) != n) {
      throw DimensionMismatch(p + ".exp: length " + std::to_string(m.exponents.size()) + ", expected " +
                              std::to_string(n));
    }
    terms.push_back(std::move(m));
  }
  return Polynomial(n, std::move(terms));
}

inline json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& t : p.terms()) {
    a.push_back(json{{"re", t.coeff.real()}, {"im", t.coeff.imag()}, {"exp", t.exponents}});
  }
  return a;
}

inline int dimension_from(const json& j) {
  const json& n = field(j, "n", "");
  if (!n.is_number_integer() || n.get<int>() < 2) {
    throw InputError("n: expected an integer >= 2");
  }
  return n.get<int>();
}

/// A form document carries either "coeffs" (one term list per dz_j) or a
/// "potential" F, meaning the form dF. A matrix document ("entries") is read
/// as the linear form of that matrix.
inline PolyOneForm form_from(const json& j) {
  if (!j.is_object()) {
    throw InputError("document: expected a JSON object");
  }
  if (j.contains("entries")) {
    return linear_form(matrix_from(j));
  }
  const int n = dimension_from(j);
  if (j.contains("potential")) {
    return differential(polynomial_from(j.at("potential"), n, "potential"));
  }
  const json& coeffs = field(j, "coeffs", "");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != n) {
    throw DimensionMismatch("coeffs: expected " + std::to_string(n) + " coefficient polynomials");
  }
  std::vector<Polynomial> polys;
  for (int k = 0; k < n; ++k) {
    polys.push_back(polynomial_from(coeffs[static_cast<std::size_t>(k)], n, "coeffs[" + std::to_string(k) + "]"));
  }
  return PolyOneForm(std::move(polys));
}

inline json to_json(const PolyOneForm& f) {
  json coeffs = json::array();
  for (const auto& p : f.coeffs()) {
    coeffs.push_back(to_json(p));
  }
  return json{{"n", f.n()}, {"coeffs", coeffs}, {"degree_info", f.degree_info()}};
}

inline json to_json(const ContactPoint& p) {
  json j{{"z", to_json(p.z)}, {"mu", to_json(p.mu)}, {"radius", p.radius}, {"residual", p.residual}};
  j["leaf_value"] = p.leaf_value ? to_json(*p.leaf_value) : json(nullptr);
  j["morse_index"] = p.morse_index ? json(*p.morse_index) : json(nullptr);
  return j;
}

inline std::vector<BoundarySample> samples_from(const json& j) {
  const json& arr = j.is_array() ? j : field(j, "samples", "");
  if (!arr.is_array()) {
    throw InputError("samples: expected an array");
  }
  auto vec2 = [](const json& v, const std::string& p) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InputError(p + ": expected [x, y]");
    }
    return Eigen::Vector2d(v[0].get<double>(), v[1].get<double>());
  };
  std::vector<BoundarySample> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = "samples[" + std::to_string(k) + "]";
    out.push_back({vec2(field(arr[k], "point", p), p + ".point"), vec2(field(arr[k], "field", p), p + ".field"),
                   vec2(field(arr[k], "normal", p), p + ".normal")});
  }
  return out;
}

inline json to_json(const IndexReport& r) {
  json chi = json::array();
  for (const auto& t : r.chi_terms) {
    chi.push_back(json{{"label", t.label}, {"value", t.value}});
  }
  return json{{"interior_tangencies", r.interior_tangencies},
              {"exterior_tangencies", r.exterior_tangencies},
              {"index", r.index ? json(*r.index) : json(nullptr)},
              {"winding", r.winding},
              {"winding_raw", r.winding_raw},
              {"undersampled", r.undersampled},
              {"consistent", r.consistent},
              {"chi_terms", chi},
              {"notes", r.notes}};
}

} // namespace holocontact::io
