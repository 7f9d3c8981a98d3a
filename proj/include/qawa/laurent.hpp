#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qawa/tensor.hpp"

namespace qawa {

// Exponent-vector order with position n most significant.
inline bool exponent_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct LaurentKey {
  BasisTuple a;
  std::vector<int> lam;
  friend bool operator<(const LaurentKey& x, const LaurentKey& y) {
    if (x.lam != y.lam) return exponent_less(x.lam, y.lam);
    return x.a < y.a;
  }
  friend bool operator==(const LaurentKey& x, const LaurentKey& y) {
    return x.a == y.a && x.lam == y.lam;
  }
};

// Element of P_n(A) = A^{tensor n} tensor k[X_1^{+-1},...,X_n^{+-1}].
// The X_i are even and central; all signs come from the A-parts.
class LaurentElement {
public:
  LaurentElement() = default;
  LaurentElement(AlgebraPtr alg, int n) : alg_(std::move(alg)), n_(n) {}

  static LaurentElement unit(const AlgebraPtr& alg, int n) {
    return from_tensor(TensorElement::unit(alg, n));
  }

  static LaurentElement monomial_x(const AlgebraPtr& alg, int n, int i, int e) {
    if (i < 1 || i > n) throw std::out_of_range("LaurentElement: X index out of range");
    std::vector<int> lam(n, 0);
    lam[i - 1] = e;
    return from_tensor_monomial(TensorElement::unit(alg, n), lam);
  }

  static LaurentElement from_tensor(const TensorElement& t) {
    return from_tensor_monomial(t, std::vector<int>(t.n(), 0));
  }

  static LaurentElement from_tensor_monomial(const TensorElement& t, const std::vector<int>& lam) {
    LaurentElement f(t.algebra(), t.n());
    for (const auto& [tup, c] : t.terms()) f.add_term({tup, lam}, c);
    return f;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int n() const { return n_; }
  const std::map<LaurentKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const LaurentKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(k.a.size()) != n_ || static_cast<int>(k.lam.size()) != n_)
      throw std::invalid_argument("LaurentElement: key length mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
    a.check_compatible(b);
    LaurentElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) {
    a.check_compatible(b);
    LaurentElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
  }
  friend LaurentElement operator*(const Scalar& c, const LaurentElement& a) {
    LaurentElement out(a.alg_, a.n_);
    if (c.is_zero()) return out;
    for (const auto& [k, coeff] : a.terms_) out.add_term(k, c * coeff);
    return out;
  }
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  friend LaurentElement mul_poly(const LaurentElement& f, const LaurentElement& g) {
    f.check_compatible(g);
    const auto& alg = f.alg_;
    LaurentElement out(alg, f.n_);
    for (const auto& [kf, cf] : f.terms_)
      for (const auto& [kg, cg] : g.terms_) {
        TensorElement prod = mul_tensor(TensorElement::from_tuple(alg, f.n_, kf.a),
                                        TensorElement::from_tuple(alg, f.n_, kg.a));
        std::vector<int> lam(f.n_);
        for (int i = 0; i < f.n_; ++i) lam[i] = kf.lam[i] + kg.lam[i];
        for (const auto& [tup, c] : prod.terms()) out.add_term({tup, lam}, cf * cg * c);
      }
    return out;
  }

  enum class ActMode { diagonal, x_only };

  // diagonal: superpermute the A-part and permute exponents; x_only leaves the
  // A-part alone.
  LaurentElement act(const Permutation& w, ActMode mode) const {
    if (w.n() != n_) throw std::invalid_argument("act: size mismatch");
    LaurentElement out(alg_, n_);
    for (const auto& [k, c] : terms_) {
      std::vector<int> lam = act_positions(w, k.lam);
      if (mode == ActMode::x_only) {
        out.add_term({k.a, lam}, c);
      } else {
        TensorElement t =
            TensorElement::from_tuple(alg_, n_, k.a, c).superpermute(w);
        for (const auto& [tup, c2] : t.terms()) out.add_term({tup, lam}, c2);
      }
    }
    return out;
  }

  // Demazure operator by the closed form: A-linear, kills s_i-invariant
  // exponent pairs, and on X_i^k X_{i+1}^{k+l} (l > 0) gives the telescoping
  // sum X_i^{k+r} X_{i+1}^{k+l-r}, r = 0..l-1 (negated for the mirror case).
  LaurentElement demazure(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("demazure: index out of range");
    LaurentElement out(alg_, n_);
    for (const auto& [key, c] : terms_) {
      int lo = key.lam[i - 1], hi = key.lam[i];
      if (lo == hi) continue;
      bool neg = lo > hi;
      int k = neg ? hi : lo;
      int l = neg ? lo - hi : hi - lo;
      Scalar coeff = neg ? -c : c;
      for (int r = 0; r < l; ++r) {
        LaurentKey k2 = key;
        k2.lam[i - 1] = k + r;
        k2.lam[i] = k + l - r;
        out.add_term(k2, coeff);
      }
    }
    return out;
  }

  // X_{i+1}^{-1} Delta_i(X_{i+1} f), computed by composition.
  LaurentElement twisted_demazure(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("twisted_demazure: index out of range");
    LaurentElement shifted = shift_exponent(i + 1, 1).demazure(i);
    return shifted.shift_exponent(i + 1, -1);
  }

  LaurentElement shift_exponent(int i, int by) const {
    LaurentElement out(alg_, n_);
    for (const auto& [key, c] : terms_) {
      LaurentKey k2 = key;
      k2.lam[i - 1] += by;
      out.add_term(k2, c);
    }
    return out;
  }

  bool all_exponents_nonnegative() const {
    for (const auto& [key, c] : terms_)
      for (int e : key.lam)
        if (e < 0) return false;
    return true;
  }

  int term_parity(const LaurentKey& k) const {
    int p = 0;
    for (auto b : k.a) p ^= alg_->parity(b);
    return p;
  }

  LaurentElement parity_component(int p) const {
    LaurentElement out(alg_, n_);
    for (const auto& [k, c] : terms_)
      if (term_parity(k) == p) out.add_term(k, c);
    return out;
  }

  // True when every A-part coefficient (grouped by exponent vector) lies in
  // Z(A)^{tensor n}.
  bool coefficients_in_center() const {
    std::map<std::vector<int>, TensorElement> byexp;
    for (const auto& [k, c] : terms_) {
      auto it = byexp.find(k.lam);
      if (it == byexp.end()) it = byexp.emplace(k.lam, TensorElement(alg_, n_)).first;
      it->second.add_term(k.a, c);
    }
    for (const auto& [lam, t] : byexp)
      if (!t.in_center_tensor()) return false;
    return true;
  }

private:
  void check_compatible(const LaurentElement& o) const {
    if (n_ != o.n_ || alg_.get() != o.alg_.get())
      throw std::invalid_argument("LaurentElement: incompatible operands");
  }

  AlgebraPtr alg_;
  int n_ = 0;
  std::map<LaurentKey, Scalar> terms_;
};

}  // namespace qawa
