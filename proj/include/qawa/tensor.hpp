#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qawa/algebra.hpp"
#include "qawa/permutation.hpp"

namespace qawa {

using BasisTuple = std::vector<std::uint8_t>;

// Element of A^{tensor n}: sparse combination of basis tuples. Products use
// the Koszul rule: (a_1...a_n)(b_1...b_n) = (-1)^s (a_1 b_1)...(a_n b_n) with
// s = sum over j < i of |a_i||b_j|.
class TensorElement {
public:
  TensorElement() = default;
  TensorElement(AlgebraPtr alg, int n) : alg_(std::move(alg)), n_(n) {}

  static TensorElement unit(const AlgebraPtr& alg, int n) {
    TensorElement t(alg, n);
    std::vector<std::pair<BasisTuple, Scalar>> cur{{BasisTuple{}, Scalar(1)}};
    for (int s = 0; s < n; ++s) {
      std::vector<std::pair<BasisTuple, Scalar>> next;
      for (auto& [tup, c] : cur)
        for (int k = 0; k < alg->dim(); ++k) {
          if (alg->unit()[k].is_zero()) continue;
          BasisTuple t2 = tup;
          t2.push_back(static_cast<std::uint8_t>(k));
          next.emplace_back(std::move(t2), c * alg->unit()[k]);
        }
      cur = std::move(next);
    }
    for (auto& [tup, c] : cur) t.add_term(tup, c);
    return t;
  }

  // a placed in the given slot (1-based), unit elsewhere.
  static TensorElement atom(const AlgebraPtr& alg, int n, int slot, const AVec& a) {
    if (slot < 1 || slot > n) throw std::out_of_range("TensorElement::atom: slot out of range");
    TensorElement u = unit(alg, n);
    TensorElement t(alg, n);
    for (const auto& [tup, c] : u.terms()) {
      for (int k = 0; k < alg->dim(); ++k) {
        if (a[k].is_zero()) continue;
        // replace slot content: unit tuple entry at slot is even, no signs
        BasisTuple t2 = tup;
        AVec prod = alg->mul(alg->basis_element(k), alg->basis_element(tup[slot - 1]));
        for (int r = 0; r < alg->dim(); ++r) {
          if (prod[r].is_zero()) continue;
          BasisTuple t3 = t2;
          t3[slot - 1] = static_cast<std::uint8_t>(r);
          t.add_term(t3, c * a[k] * prod[r]);
        }
      }
    }
    return t;
  }

  static TensorElement basis_atom(const AlgebraPtr& alg, int n, int slot, int basis_idx) {
    return atom(alg, n, slot, alg->basis_element(basis_idx));
  }

  static TensorElement from_tuple(const AlgebraPtr& alg, int n, const BasisTuple& tup,
                                  const Scalar& c = Scalar(1)) {
    TensorElement t(alg, n);
    t.add_term(tup, c);
    return t;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int n() const { return n_; }
  const std::map<BasisTuple, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisTuple& tup, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(tup.size()) != n_)
      throw std::invalid_argument("TensorElement: tuple length mismatch");
    auto it = terms_.find(tup);
    if (it == terms_.end()) {
      terms_.emplace(tup, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int tuple_parity(const BasisTuple& tup) const {
    int p = 0;
    for (auto k : tup) p ^= alg_->parity(k);
    return p;
  }

  TensorElement parity_component(int p) const {
    TensorElement out(alg_, n_);
    for (const auto& [tup, c] : terms_)
      if (tuple_parity(tup) == p) out.add_term(tup, c);
    return out;
  }

  bool is_homogeneous(int* parity_out = nullptr) const {
    int seen = -1;
    for (const auto& [tup, c] : terms_) {
      int p = tuple_parity(tup);
      if (seen == -1)
        seen = p;
      else if (seen != p)
        return false;
    }
    if (parity_out) *parity_out = seen == -1 ? 0 : seen;
    return true;
  }

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    TensorElement out = a;
    for (const auto& [tup, c] : b.terms_) out.add_term(tup, c);
    return out;
  }
  friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    TensorElement out = a;
    for (const auto& [tup, c] : b.terms_) out.add_term(tup, -c);
    return out;
  }
  friend TensorElement operator*(const Scalar& c, const TensorElement& a) {
    TensorElement out(a.alg_, a.n_);
    if (c.is_zero()) return out;
    for (const auto& [tup, coeff] : a.terms_) out.add_term(tup, c * coeff);
    return out;
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  friend TensorElement mul_tensor(const TensorElement& x, const TensorElement& y) {
    x.check_compatible(y);
    const auto& alg = *x.alg_;
    TensorElement out(x.alg_, x.n_);
    for (const auto& [a, ca] : x.terms_) {
      for (const auto& [b, cb] : y.terms_) {
        int s = 0;
        for (int i = 0; i < x.n_; ++i)
          for (int j = 0; j < i; ++j) s += alg.parity(a[i]) * alg.parity(b[j]);
        Scalar sign = (s & 1) ? Scalar(-1) : Scalar(1);
        // expand slotwise products of basis elements
        std::vector<std::pair<BasisTuple, Scalar>> partial{{BasisTuple{}, sign * ca * cb}};
        for (int i = 0; i < x.n_; ++i) {
          const AVec& prod = alg.structure(a[i], b[i]);
          std::vector<std::pair<BasisTuple, Scalar>> next;
          for (auto& [tup, c] : partial)
            for (int k = 0; k < alg.dim(); ++k) {
              if (prod[k].is_zero()) continue;
              BasisTuple t2 = tup;
              t2.push_back(static_cast<std::uint8_t>(k));
              next.emplace_back(std::move(t2), c * prod[k]);
            }
          partial = std::move(next);
          if (partial.empty()) break;
        }
        for (auto& [tup, c] : partial) out.add_term(tup, c);
      }
    }
    return out;
  }

  // Adjacent swap of slots i, i+1 with the Koszul sign (-1)^{|a_i||a_{i+1}|}.
  TensorElement superpermute_simple(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("superpermute: index out of range");
    TensorElement out(alg_, n_);
    for (const auto& [tup, c] : terms_) {
      BasisTuple t2 = tup;
      std::swap(t2[i - 1], t2[i]);
      bool neg = alg_->parity(tup[i - 1]) && alg_->parity(tup[i]);
      out.add_term(t2, neg ? -c : c);
    }
    return out;
  }

  TensorElement superpermute(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("superpermute: size mismatch");
    TensorElement out = *this;
    auto word = reduced_word(w);
    // w = s_{i_1}...s_{i_k}; as a left action apply s_{i_k} first
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      out = out.superpermute_simple(*it);
    return out;
  }

  // Slotwise product of traces, extended linearly. Unambiguous because the
  // trace vanishes on odd basis elements.
  Scalar trace() const {
    Scalar s(0);
    for (const auto& [tup, c] : terms_) {
      Scalar p = c;
      for (auto k : tup) {
        p *= alg_->trace_basis(k);
        if (p.is_zero()) break;
      }
      s += p;
    }
    return s;
  }

  // Membership in Z(A)^{tensor n} = Z(A^{tensor n}): each homogeneous part
  // must supercommute with every basis element in every slot.
  bool in_center_tensor() const {
    for (int p : {0, 1}) {
      TensorElement comp = parity_component(p);
      if (comp.is_zero()) continue;
      for (int slot = 1; slot <= n_; ++slot)
        for (int k = 0; k < alg_->dim(); ++k) {
          TensorElement b = basis_atom(alg_, n_, slot, k);
          TensorElement lhs = mul_tensor(comp, b);
          TensorElement rhs = mul_tensor(b, comp);
          if (p == 1 && alg_->parity(k) == 1) rhs = Scalar(-1) * rhs;
          if (!(lhs == rhs)) return false;
        }
    }
    return true;
  }

private:
  void check_compatible(const TensorElement& o) const {
    if (n_ != o.n_ || alg_.get() != o.alg_.get())
      throw std::invalid_argument("TensorElement: incompatible operands");
  }

  AlgebraPtr alg_;
  int n_ = 0;
  std::map<BasisTuple, Scalar> terms_;
};

// t_{i,j} = sum over basis b of b_i (b^vee)_j; even, basis-independent.
inline TensorElement teleporter(const AlgebraPtr& alg, int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::out_of_range("teleporter: indices out of range");
  TensorElement out(alg, n);
  for (int b = 0; b < alg->dim(); ++b) {
    TensorElement lhs = TensorElement::basis_atom(alg, n, i, b);
    TensorElement rhs = TensorElement::atom(alg, n, j, alg->dual_basis(b));
    out = out + mul_tensor(lhs, rhs);
  }
  return out;
}

}  // namespace qawa
