#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qawa/linalg.hpp"
#include "qawa/scalar.hpp"

namespace qawa {

// Element of A as a dense coefficient vector over the fixed basis.
using AVec = std::vector<Scalar>;

// Raw, unvalidated description of a finite-dimensional superalgebra with a
// trace: basis names, parities, structure constants b_i b_j, unit, trace form.
struct AlgebraData {
  std::vector<std::string> names;
  std::vector<int> parity;            // 0 even, 1 odd
  std::vector<std::vector<AVec>> mul; // mul[i][j] = coefficients of b_i b_j
  AVec unit;
  AVec trace;                         // trace[i] = tr(b_i)
};

class SpecError : public std::runtime_error {
public:
  SpecError(std::vector<std::string> violations)
      : std::runtime_error("invalid superalgebra spec: " + join(violations)),
        violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  }
  std::vector<std::string> violations_;
};

// A validated symmetric superalgebra: the trace form is supersymmetric,
// parity-preserving and nondegenerate. Immutable after construction; the dual
// basis, supercenter and Gram data are computed once at load time.
class Algebra {
public:
  // Returns the violated invariants by name; empty means valid.
  static std::vector<std::string> validate(const AlgebraData& d) {
    std::vector<std::string> bad;
    const std::size_t m = d.names.size();
    if (m == 0 || d.parity.size() != m || d.mul.size() != m || d.unit.size() != m ||
        d.trace.size() != m) {
      bad.push_back("malformed");
      return bad;
    }
    for (const auto& row : d.mul)
      if (row.size() != m) {
        bad.push_back("malformed");
        return bad;
      }
    for (const auto& row : d.mul)
      for (const auto& e : row)
        if (e.size() != m) {
          bad.push_back("malformed");
          return bad;
        }
    for (int p : d.parity)
      if (p != 0 && p != 1) {
        bad.push_back("malformed");
        return bad;
      }

    auto raw_mul = [&](const AVec& x, const AVec& y) {
      AVec out(m, Scalar(0));
      for (std::size_t i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (y[j].is_zero()) continue;
          Scalar c = x[i] * y[j];
          for (std::size_t k = 0; k < m; ++k) out[k] += c * d.mul[i][j][k];
        }
      }
      return out;
    };
    auto basis_vec = [&](std::size_t i) {
      AVec v(m, Scalar(0));
      v[i] = Scalar(1);
      return v;
    };

    // associativity on all basis triples
    bool assoc = true;
    for (std::size_t i = 0; i < m && assoc; ++i)
      for (std::size_t j = 0; j < m && assoc; ++j)
        for (std::size_t k = 0; k < m && assoc; ++k)
          if (raw_mul(d.mul[i][j], basis_vec(k)) != raw_mul(basis_vec(i), d.mul[j][k]))
            assoc = false;
    if (!assoc) bad.push_back("non-associative");

    // unit laws
    bool unit_ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (raw_mul(d.unit, basis_vec(i)) != basis_vec(i)) unit_ok = false;
      if (raw_mul(basis_vec(i), d.unit) != basis_vec(i)) unit_ok = false;
    }
    if (!unit_ok) bad.push_back("unit-law");

    // parity grading: b_i b_j supported in parity p_i + p_j; unit even
    bool grading_ok = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (!d.mul[i][j][k].is_zero() && d.parity[k] != ((d.parity[i] + d.parity[j]) & 1))
            grading_ok = false;
    for (std::size_t k = 0; k < m; ++k)
      if (!d.unit[k].is_zero() && d.parity[k] != 0) grading_ok = false;
    if (!grading_ok) bad.push_back("parity-violation");

    // trace vanishes on odd basis elements
    bool trace_even = true;
    for (std::size_t i = 0; i < m; ++i)
      if (d.parity[i] == 1 && !d.trace[i].is_zero()) trace_even = false;
    if (!trace_even) bad.push_back("odd-trace");

    auto tr = [&](const AVec& v) {
      Scalar s(0);
      for (std::size_t k = 0; k < m; ++k) s += v[k] * d.trace[k];
      return s;
    };

    // supersymmetry tr(ab) = (-1)^{|a||b|} tr(ba)
    bool supersym = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Scalar lhs = tr(d.mul[i][j]);
        Scalar rhs = tr(d.mul[j][i]);
        if (d.parity[i] && d.parity[j]) rhs = -rhs;
        if (lhs != rhs) supersym = false;
      }
    if (!supersym) bad.push_back("trace-not-supersymmetric");

    // nondegeneracy of the Gram matrix G_ij = tr(b_i b_j)
    Matrix gram(m, std::vector<Scalar>(m, Scalar(0)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) gram[i][j] = tr(d.mul[i][j]);
    if (!invert(gram)) bad.push_back("degenerate-trace-form");

    return bad;
  }

  static std::shared_ptr<const Algebra> load(AlgebraData d, std::string name = "") {
    auto violations = validate(d);
    if (!violations.empty()) throw SpecError(std::move(violations));
    return std::shared_ptr<const Algebra>(new Algebra(std::move(d), std::move(name)));
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(data_.names.size()); }
  const std::vector<std::string>& basis_names() const { return data_.names; }
  int parity(int i) const { return data_.parity[i]; }
  const AVec& unit() const { return data_.unit; }
  const AVec& structure(int i, int j) const { return data_.mul[i][j]; }
  const AlgebraData& data() const { return data_; }

  Scalar trace(const AVec& v) const {
    Scalar s(0);
    for (int k = 0; k < dim(); ++k) s += v[k] * data_.trace[k];
    return s;
  }
  Scalar trace_basis(int i) const { return data_.trace[i]; }

  AVec mul(const AVec& x, const AVec& y) const {
    AVec out(dim(), Scalar(0));
    for (int i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (int k = 0; k < dim(); ++k) out[k] += c * data_.mul[i][j][k];
      }
    }
    return out;
  }

  AVec basis_element(int i) const {
    AVec v(dim(), Scalar(0));
    v[i] = Scalar(1);
    return v;
  }

  AVec zero() const { return AVec(dim(), Scalar(0)); }

  static bool is_zero(const AVec& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

  // Expansion of b_i^\vee in the basis (row i of the inverse Gram matrix),
  // so that tr(b_i^\vee b_j) = delta_ij.
  const AVec& dual_basis(int i) const { return dual_[i]; }
  const Matrix& gram_matrix() const { return gram_; }

  // -1/0/+1-free parity of a vector: 0 or 1 if homogeneous, nullopt if mixed.
  std::optional<int> homogeneous_parity(const AVec& v) const {
    std::optional<int> p;
    for (int k = 0; k < dim(); ++k) {
      if (v[k].is_zero()) continue;
      if (!p)
        p = data_.parity[k];
      else if (*p != data_.parity[k])
        return std::nullopt;
    }
    return p ? p : std::optional<int>(0);
  }

  AVec parity_component(const AVec& v, int p) const {
    AVec out = zero();
    for (int k = 0; k < dim(); ++k)
      if (data_.parity[k] == p) out[k] = v[k];
    return out;
  }

  // Basis of the supercenter {a : ab = (-1)^{|a||b|} ba for all b}, split into
  // homogeneous elements, and of its even part.
  const std::vector<AVec>& center() const { return center_; }
  const std::vector<AVec>& center_even() const { return center_even_; }

  // Membership in the supercenter (homogeneous components checked separately).
  bool in_center(const AVec& v) const {
    for (int p : {0, 1})
      if (!in_span(center_, parity_component(v, p))) return false;
    return true;
  }

  bool in_center_even(const AVec& v) const {
    return is_zero(parity_component(v, 1)) && in_center(v);
  }

  std::optional<AVec> try_invert(const AVec& a) const {
    // solve a x = unit via the left-multiplication matrix
    const int m = dim();
    Matrix lm(m, std::vector<Scalar>(m, Scalar(0)));
    for (int j = 0; j < m; ++j) {
      AVec col = mul(a, basis_element(j));
      for (int k = 0; k < m; ++k) lm[k][j] = col[k];
    }
    auto inv = invert(lm);
    if (!inv) return std::nullopt;
    AVec x = mat_vec(*inv, data_.unit);
    if (mul(a, x) != data_.unit || mul(x, a) != data_.unit) return std::nullopt;
    return x;
  }

  AVec invert_element(const AVec& a) const {
    auto r = try_invert(a);
    if (!r) throw std::domain_error("Algebra: element is not invertible");
    return *r;
  }

private:
  Algebra(AlgebraData d, std::string name) : data_(std::move(d)), name_(std::move(name)) {
    const int m = dim();
    gram_.assign(m, std::vector<Scalar>(m, Scalar(0)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram_[i][j] = trace(data_.mul[i][j]);
    dual_ = *invert(gram_);  // nondegeneracy already validated
    compute_center();
  }

  // Kernel of x -> (x b - (-1)^{|x||b|} b x)_b over each homogeneous part.
  void compute_center() {
    const int m = dim();
    for (int p : {0, 1}) {
      std::vector<int> idx;
      for (int i = 0; i < m; ++i)
        if (data_.parity[i] == p) idx.push_back(i);
      if (idx.empty()) continue;
      Matrix sys;
      for (int j = 0; j < m; ++j) {
        // rows: coefficients of (b_i b_j -+ b_j b_i) for each output slot
        for (int k = 0; k < m; ++k) {
          std::vector<Scalar> row;
          row.reserve(idx.size());
          for (int i : idx) {
            Scalar c = data_.mul[i][j][k];
            Scalar d2 = data_.mul[j][i][k];
            if (p && data_.parity[j])
              c += d2;
            else
              c -= d2;
            row.push_back(c);
          }
          sys.push_back(std::move(row));
        }
      }
      for (const auto& k : kernel_basis(std::move(sys), idx.size())) {
        AVec v = zero();
        for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = k[t];
        center_.push_back(v);
        if (p == 0) center_even_.push_back(v);
      }
    }
  }

  static bool in_span(const std::vector<AVec>& basis, const AVec& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    // row-reduce [basis; v] and see whether v adds rank
    std::vector<AVec> rows = basis;
    std::size_t cols = v.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      Scalar d = rows[rank][col].inverse();
      for (auto& e : rows[rank]) e *= d;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col].is_zero()) continue;
        Scalar f = rows[r][col];
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
      }
      ++rank;
    }
    AVec red = v;
    for (std::size_t r = 0; r < rank; ++r) {
      std::size_t lead = 0;
      while (lead < cols && rows[r][lead].is_zero()) ++lead;
      if (lead == cols || red[lead].is_zero()) continue;
      Scalar f = red[lead];
      for (std::size_t j = 0; j < cols; ++j) red[j] -= f * rows[r][j];
    }
    return is_zero(red);
  }

  AlgebraData data_;
  std::string name_;
  Matrix gram_;
  Matrix dual_;
  std::vector<AVec> center_;
  std::vector<AVec> center_even_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace qawa
