#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "qawa/affine.hpp"
#include "qawa/cyclotomic.hpp"
#include "qawa/relations.hpp"

namespace qawa::io {

using nlohmann::json;

inline json scalar_to_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("scalar: expected a string like \"p/q\"");
  return Scalar::parse(j.get<std::string>());
}

inline json permutation_to_json(const Permutation& w) { return json(w.images()); }

inline Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation: expected an array of images");
  return Permutation(j.get<std::vector<int>>());
}

// sparse A-vector: [[index, "p/q"], ...]
inline json avec_to_json(const AVec& v) {
  json out = json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(json::array({k, scalar_to_json(v[k])}));
  return out;
}

inline AVec avec_from_json(const json& j, int dim) {
  if (!j.is_array()) throw std::invalid_argument("element of A: expected [[index, coeff], ...]");
  AVec v(dim, Scalar(0));
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("element of A: each entry must be [index, coeff]");
    int k = entry[0].get<int>();
    if (k < 0 || k >= dim) throw std::invalid_argument("element of A: index out of range");
    v[k] = v[k] + scalar_from_json(entry[1]);
  }
  return v;
}

inline json algebra_to_json(const AlgebraData& d) {
  json mul = json::array();
  for (const auto& row : d.mul) {
    json jrow = json::array();
    for (const auto& e : row) jrow.push_back(avec_to_json(e));
    mul.push_back(jrow);
  }
  json trace = json::array();
  for (const auto& t : d.trace) trace.push_back(scalar_to_json(t));
  return json{{"names", d.names},
              {"parity", d.parity},
              {"mul", mul},
              {"unit", avec_to_json(d.unit)},
              {"trace", trace}};
}

inline AlgebraData algebra_from_json(const json& j) {
  AlgebraData d;
  if (!j.is_object()) throw std::invalid_argument("spec: expected an object");
  d.names = j.at("names").get<std::vector<std::string>>();
  d.parity = j.at("parity").get<std::vector<int>>();
  const int m = static_cast<int>(d.names.size());
  const auto& mul = j.at("mul");
  if (!mul.is_array() || static_cast<int>(mul.size()) != m)
    throw std::invalid_argument("spec: mul must be an m x m table");
  for (const auto& row : mul) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw std::invalid_argument("spec: mul must be an m x m table");
    std::vector<AVec> r;
    for (const auto& e : row) r.push_back(avec_from_json(e, m));
    d.mul.push_back(std::move(r));
  }
  d.unit = avec_from_json(j.at("unit"), m);
  for (const auto& t : j.at("trace")) d.trace.push_back(scalar_from_json(t));
  return d;
}

inline json laurent_to_json(const LaurentElement& f) {
  json out = json::array();
  for (const auto& [k, c] : f.terms()) {
    json term;
    term["a"] = json(std::vector<int>(k.a.begin(), k.a.end()));
    term["lambda"] = json(k.lam);
    term["coeff"] = scalar_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

inline LaurentElement laurent_from_json(const AlgebraPtr& alg, int n, const json& j) {
  LaurentElement f(alg, n);
  for (const auto& term : j) {
    auto a = term.at("a").get<std::vector<int>>();
    auto lam = term.at("lambda").get<std::vector<int>>();
    if (static_cast<int>(a.size()) != n || static_cast<int>(lam.size()) != n)
      throw std::invalid_argument("laurent term: wrong arity");
    BasisTuple t;
    for (int k : a) {
      if (k < 0 || k >= alg->dim()) throw std::invalid_argument("laurent term: basis index");
      t.push_back(static_cast<std::uint8_t>(k));
    }
    f.add_term({t, lam}, scalar_from_json(term.at("coeff")));
  }
  return f;
}

inline json affine_to_json(const AffineElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    json term;
    term["a"] = json(std::vector<int>(k.a.begin(), k.a.end()));
    term["lambda"] = json(k.lam);
    term["w"] = permutation_to_json(k.w);
    term["coeff"] = scalar_to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

inline AffineElement affine_from_json(const AffineContextPtr& ctx, const json& j) {
  AffineElement x(ctx);
  const int n = ctx->n();
  for (const auto& term : j) {
    auto a = term.at("a").get<std::vector<int>>();
    auto lam = term.at("lambda").get<std::vector<int>>();
    Permutation w = permutation_from_json(term.at("w"));
    if (static_cast<int>(a.size()) != n || static_cast<int>(lam.size()) != n || w.n() != n)
      throw std::invalid_argument("affine term: wrong arity");
    BasisTuple t;
    for (int k : a) {
      if (k < 0 || k >= ctx->algebra()->dim())
        throw std::invalid_argument("affine term: basis index");
      t.push_back(static_cast<std::uint8_t>(k));
    }
    x.add_term({t, lam, w}, scalar_from_json(term.at("coeff")));
  }
  return x;
}

// right normal form: same term schema, with terms read as T_w a X^lambda
inline json right_form_to_json(const std::vector<std::pair<Permutation, LaurentElement>>& parts) {
  json out = json::array();
  for (const auto& [w, g] : parts)
    for (const auto& [k, c] : g.terms()) {
      json term;
      term["a"] = json(std::vector<int>(k.a.begin(), k.a.end()));
      term["lambda"] = json(k.lam);
      term["w"] = permutation_to_json(w);
      term["coeff"] = scalar_to_json(c);
      out.push_back(std::move(term));
    }
  return out;
}

inline json cyclotomic_poly_to_json(const CyclotomicPoly& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(avec_to_json(c));
  return json{{"d", f.d}, {"coeffs", coeffs}};
}

inline CyclotomicPoly cyclotomic_poly_from_json(const AlgebraPtr& alg, const json& j) {
  CyclotomicPoly f;
  f.d = j.at("d").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != f.d)
    throw std::invalid_argument("cyclotomic polynomial: need exactly d coefficients");
  for (const auto& c : coeffs) f.coeffs.push_back(avec_from_json(c, alg->dim()));
  return f;
}

inline json relation_report_to_json(const std::vector<RelationCheck>& report) {
  json out = json::array();
  for (const auto& r : report)
    out.push_back(json{{"relation", r.relation},
                       {"indices", r.indices},
                       {"status", r.pass ? "pass" : "fail"},
                       {"difference-term-count", r.difference_term_count}});
  return out;
}

}  // namespace qawa::io
