#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvature.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "tensor.hpp"

namespace chordweight::io {

using json = nlohmann::json;

/// Malformed input; the message starts with the JSON path of the offending field.
class FieldError : public InputError {
public:
  FieldError(const std::string& path, const std::string& what)
      : InputError((path.empty() ? std::string("/") : path) + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

inline json read_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open '" + file + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + file + "' is not valid JSON: " + e.what());
  }
}

namespace detail {

inline const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw FieldError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FieldError(path + "/" + key, "missing field");
  return *it;
}

inline Rational rational(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw FieldError(path, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw FieldError(path, "expected a rational as a string or an integer");
}

inline std::size_t index(const json& j, const std::string& path, std::size_t bound) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FieldError(path, "expected a non-negative integer");
  const auto v = static_cast<std::size_t>(j.get<long long>());
  if (v >= bound) throw FieldError(path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return v;
}

inline std::size_t dimension(const json& j, const std::string& path) {
  const json& d = field(j, path, "dim");
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw FieldError(path + "/dim", "expected a positive integer");
  return static_cast<std::size_t>(d.get<long long>());
}

inline Matrix matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw FieldError(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) throw FieldError(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

inline json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <typename Store>
void read_entries(const json& j, const std::string& path, std::size_t dim, Store&& store) {
  if (!j.is_array()) throw FieldError(path, "expected an array of entries");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = path + "/" + std::to_string(i);
    const json& e = j[i];
    const std::size_t a = index(field(e, ep, "a"), ep + "/a", dim);
    const std::size_t b = index(field(e, ep, "b"), ep + "/b", dim);
    const std::size_t c = index(field(e, ep, "c"), ep + "/c", dim);
    const std::size_t d = index(field(e, ep, "d"), ep + "/d", dim);
    store(a, b, c, d, rational(field(e, ep, "value"), ep + "/value"));
  }
}

template <typename Get>
json write_entries(std::size_t dim, Get&& get) {
  json out = json::array();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t d = 0; d < dim; ++d) {
          const Rational& v = get(a, b, c, d);
          if (v != 0) out.push_back({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"value", to_string(v)}});
        }
  return out;
}

}  // namespace detail

/// {"dim": d, "entries": [{"a","b","c","d","value"}, ...]}; omitted entries are zero.
/// Repeated index tuples are rejected.
inline WeightTensor tensor_from_json(const json& j) {
  const std::size_t dim = detail::dimension(j, "");
  WeightTensor h(dim);
  WeightTensor seen(dim);
  detail::read_entries(detail::field(j, "", "entries"), "/entries", dim,
                       [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, Rational v) {
                         if (seen(a, b, c, d) != 0)
                           throw FieldError("/entries", "duplicate entry (" + format_witness({a, b, c, d}) + ")");
                         seen(a, b, c, d) = 1;
                         h(a, b, c, d) = std::move(v);
                       });
  return h;
}

inline json tensor_to_json(const WeightTensor& h) {
  return {{"dim", h.dim()}, {"entries", detail::write_entries(h.dim(), [&](auto a, auto b, auto c, auto d) -> const Rational& {
             return h(a, b, c, d);
           })}};
}

/// Lie algebra or representation JSON. Either {"builtin": name} or
/// {"dim", "brackets": [{"i","j","coeffs":[[k,"v"],...]}], "form", ["dimV", "matrices"]}.
/// A bracket [e_j, e_i] that is not listed is taken as -[e_i, e_j].
/// Without "dimV" the result has dim_v == 0 and no matrices.
inline Representation representation_from_json(const json& j) {
  if (j.is_object() && j.contains("builtin")) {
    const json& b = j["builtin"];
    if (!b.is_string()) throw FieldError("/builtin", "expected a string");
    try {
      return builtin(b.get<std::string>());
    } catch (const InputError& e) {
      throw FieldError("/builtin", e.what());
    }
  }
  const std::size_t m = detail::dimension(j, "");
  Representation rep;
  rep.algebra.bracket = StructureConstants(m);
  std::vector<char> given(m * m, 0);
  const json& br = detail::field(j, "", "brackets");
  if (!br.is_array()) throw FieldError("/brackets", "expected an array");
  for (std::size_t n = 0; n < br.size(); ++n) {
    const std::string bp = "/brackets/" + std::to_string(n);
    const std::size_t i = detail::index(detail::field(br[n], bp, "i"), bp + "/i", m);
    const std::size_t jj = detail::index(detail::field(br[n], bp, "j"), bp + "/j", m);
    if (given[i * m + jj]) throw FieldError(bp, "bracket [" + std::to_string(i) + "," + std::to_string(jj) + "] listed twice");
    given[i * m + jj] = 1;
    const json& coeffs = detail::field(br[n], bp, "coeffs");
    if (!coeffs.is_array()) throw FieldError(bp + "/coeffs", "expected an array of [k, value] pairs");
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      const std::string cp = bp + "/coeffs/" + std::to_string(t);
      if (!coeffs[t].is_array() || coeffs[t].size() != 2) throw FieldError(cp, "expected [k, value]");
      const std::size_t k = detail::index(coeffs[t][0], cp + "/0", m);
      rep.algebra.bracket(i, jj, k) += detail::rational(coeffs[t][1], cp + "/1");
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = 0; jj < m; ++jj)
      if (!given[i * m + jj] && given[jj * m + i])
        for (std::size_t k = 0; k < m; ++k) rep.algebra.bracket(i, jj, k) = -rep.algebra.bracket(jj, i, k);
  rep.algebra.form = detail::matrix(detail::field(j, "", "form"), "/form", m, m);

  if (j.contains("dimV")) {
    const json& dv = j["dimV"];
    if (!dv.is_number_integer() || dv.get<long long>() <= 0) throw FieldError("/dimV", "expected a positive integer");
    rep.dim_v = static_cast<std::size_t>(dv.get<long long>());
    const json& mats = detail::field(j, "", "matrices");
    if (!mats.is_array() || mats.size() != m) throw FieldError("/matrices", "expected " + std::to_string(m) + " matrices");
    for (std::size_t i = 0; i < m; ++i)
      rep.matrices.push_back(detail::matrix(mats[i], "/matrices/" + std::to_string(i), rep.dim_v, rep.dim_v));
  }
  return rep;
}

inline json brackets_to_json(const StructureConstants& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t j = 0; j < f.dim(); ++j) {
      json coeffs = json::array();
      for (std::size_t k = 0; k < f.dim(); ++k)
        if (f(i, j, k) != 0) coeffs.push_back({k, to_string(f(i, j, k))});
      if (!coeffs.empty()) out.push_back({{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
    }
  return out;
}

inline json representation_to_json(const Representation& rep) {
  json out{{"dim", rep.algebra.dim()},
           {"brackets", brackets_to_json(rep.algebra.bracket)},
           {"form", detail::matrix_to_json(rep.algebra.form)}};
  if (rep.dim_v > 0) {
    out["dimV"] = rep.dim_v;
    json mats = json::array();
    for (const auto& m : rep.matrices) mats.push_back(detail::matrix_to_json(m));
    out["matrices"] = std::move(mats);
  }
  return out;
}

/// A square matrix, either bare or as {"form": [[...]]}.
inline Matrix form_from_json(const json& j) {
  const json& body = j.is_object() ? detail::field(j, "", "form") : j;
  const std::string path = j.is_object() ? "/form" : "";
  if (!body.is_array() || body.empty()) throw FieldError(path, "expected a non-empty square matrix");
  return detail::matrix(body, path, body.size(), body.size());
}

/// {"dim", "metric", "R": [{"a","b","c","d","value"}]} with value = R^d_{abc}.
/// "metric" defaults to the identity. {"dim", "metric", "constant_curvature": kappa}
/// builds the constant-curvature model instead of reading "R".
inline CurvatureModel curvature_from_json(const json& j) {
  const std::size_t dim = detail::dimension(j, "");
  const Matrix g = j.contains("metric") ? detail::matrix(j["metric"], "/metric", dim, dim) : Matrix::identity(dim);
  if (!g.is_symmetric()) throw FieldError("/metric", "metric is not symmetric");
  if (determinant(g) == 0) throw FieldError("/metric", "metric is singular");
  if (j.contains("constant_curvature")) {
    if (j.contains("R")) throw FieldError("/R", "give either R or constant_curvature, not both");
    return constant_curvature(g, detail::rational(j["constant_curvature"], "/constant_curvature"));
  }
  Array4 r(dim);
  Array4 seen(dim);
  detail::read_entries(detail::field(j, "", "R"), "/R", dim,
                       [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, Rational v) {
                         if (seen(a, b, c, d) != 0) throw FieldError("/R", "duplicate entry (" + format_witness({a, b, c, d}) + ")");
                         seen(a, b, c, d) = 1;
                         r(a, b, c, d) = std::move(v);
                       });
  return CurvatureModel(g, std::move(r));
}

inline json curvature_to_json(const CurvatureModel& m) {
  return {{"dim", m.dim()},
          {"metric", detail::matrix_to_json(m.metric())},
          {"R", detail::write_entries(m.dim(), [&](auto a, auto b, auto c, auto d) -> const Rational& { return m.r(a, b, c, d); })}};
}

/// Basis order: the h basis (each element is the endomorphism R(e_a, e_b) listed in
/// "h_generators"), then e_0..e_{d-1} of p.
inline json triple_to_json(const SymmetricTriple& t) {
  json gens = json::array();
  for (const auto& [a, b] : t.h.generators) gens.push_back({a, b});
  json hb = json::array();
  for (const auto& m : t.h.basis) hb.push_back(detail::matrix_to_json(m));
  return {{"dim", t.dim()},
          {"h_dim", t.h_dim()},
          {"p_dim", t.p_dim},
          {"basis_order", "h basis first, then p"},
          {"h_generators", std::move(gens)},
          {"h_basis", std::move(hb)},
          {"brackets", brackets_to_json(t.bracket)},
          {"involution", t.involution},
          {"form", detail::matrix_to_json(t.form)}};
}

inline std::string dims_json(const std::vector<std::size_t>& dims, Framing framing) {
  json out = json::array();
  for (std::size_t n = 0; n < dims.size(); ++n) out.push_back({{"n", n}, {"kind", to_string(framing)}, {"dimension", dims[n]}});
  return out.dump(2);
}

}  // namespace chordweight::io
