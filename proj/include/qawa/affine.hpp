#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qawa/laurent.hpp"

namespace qawa {

// Shared context for elements of one algebra H_n^aff(A,z): the coefficient
// superalgebra, the rank n and the deformation parameter z. Teleporters
// t_{i,i+1} are cached here.
class AffineContext {
public:
  AffineContext(AlgebraPtr alg, int n, Scalar z)
      : alg_(std::move(alg)), n_(n), z_(std::move(z)) {
    if (n_ < 1) throw std::invalid_argument("AffineContext: n must be positive");
    for (int i = 1; i < n_; ++i)
      teleporters_.push_back(LaurentElement::from_tensor(teleporter(alg_, n_, i, i + 1)));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int n() const { return n_; }
  const Scalar& z() const { return z_; }
  // t_{i,i+1} as a Laurent element, 1 <= i <= n-1.
  const LaurentElement& teleporter_at(int i) const { return teleporters_.at(i - 1); }

  bool same_as(const AffineContext& o) const {
    return alg_.get() == o.alg_.get() && n_ == o.n_ && z_ == o.z_;
  }

private:
  AlgebraPtr alg_;
  int n_;
  Scalar z_;
  std::vector<LaurentElement> teleporters_;
};

using AffineContextPtr = std::shared_ptr<const AffineContext>;

inline AffineContextPtr make_affine_context(AlgebraPtr alg, int n, Scalar z) {
  return std::make_shared<AffineContext>(std::move(alg), n, std::move(z));
}

struct AffineKey {
  BasisTuple a;
  std::vector<int> lam;
  Permutation w;
  friend bool operator<(const AffineKey& x, const AffineKey& y) {
    if (!(x.w == y.w)) return x.w < y.w;
    if (x.lam != y.lam) return exponent_less(x.lam, y.lam);
    return x.a < y.a;
  }
  friend bool operator==(const AffineKey& x, const AffineKey& y) {
    return x.a == y.a && x.lam == y.lam && x.w == y.w;
  }
};

// Element of H_n^aff(A,z) in left normal form: sum of terms a X^lambda T_w.
// The map key order is also the printed order.
class AffineElement {
public:
  AffineElement() = default;
  explicit AffineElement(AffineContextPtr ctx) : ctx_(std::move(ctx)) {}

  static AffineElement zero(const AffineContextPtr& ctx) { return AffineElement(ctx); }

  static AffineElement unit(const AffineContextPtr& ctx) {
    return from_tensor(ctx, TensorElement::unit(ctx->algebra(), ctx->n()));
  }

  static AffineElement from_laurent(const AffineContextPtr& ctx, const LaurentElement& f) {
    return with_t(ctx, f, Permutation::identity(ctx->n()));
  }

  static AffineElement from_tensor(const AffineContextPtr& ctx, const TensorElement& t) {
    return from_laurent(ctx, LaurentElement::from_tensor(t));
  }

  // f tensor T_w, i.e. the normal-form element f T_w.
  static AffineElement with_t(const AffineContextPtr& ctx, const LaurentElement& f,
                              const Permutation& w) {
    AffineElement x(ctx);
    for (const auto& [k, c] : f.terms()) x.add_term({k.a, k.lam, w}, c);
    return x;
  }

  // T_w as a basis element (single normal-form term).
  static AffineElement basis_t(const AffineContextPtr& ctx, const Permutation& w) {
    return with_t(ctx, LaurentElement::unit(ctx->algebra(), ctx->n()), w);
  }

  static AffineElement generator_t(const AffineContextPtr& ctx, int i) {
    check_gen_index(ctx, i);
    return basis_t(ctx, Permutation::simple(ctx->n(), i));
  }

  // T_i^{-1} = T_i - z t_{i,i+1} (Frobenius skein relation).
  static AffineElement generator_t_inv(const AffineContextPtr& ctx, int i) {
    check_gen_index(ctx, i);
    AffineElement skew = from_laurent(ctx, ctx->z() * ctx->teleporter_at(i));
    return generator_t(ctx, i) - skew;
  }

  static AffineElement generator_x(const AffineContextPtr& ctx, int i, int e) {
    if (i < 1 || i > ctx->n()) throw std::out_of_range("generator_x: index out of range");
    return from_laurent(ctx, LaurentElement::monomial_x(ctx->algebra(), ctx->n(), i, e));
  }

  const AffineContextPtr& context() const { return ctx_; }
  const std::map<AffineKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const AffineKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(k.a.size()) != ctx_->n() ||
        static_cast<int>(k.lam.size()) != ctx_->n() || k.w.n() != ctx_->n())
      throw std::invalid_argument("AffineElement: key arity mismatch");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend AffineElement operator+(const AffineElement& a, const AffineElement& b) {
    a.check_compatible(b);
    AffineElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }
  friend AffineElement operator-(const AffineElement& a, const AffineElement& b) {
    a.check_compatible(b);
    AffineElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
  }
  friend AffineElement operator*(const Scalar& c, const AffineElement& a) {
    AffineElement out(a.ctx_);
    if (c.is_zero()) return out;
    for (const auto& [k, coeff] : a.terms_) out.add_term(k, c * coeff);
    return out;
  }
  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AffineElement& a, const AffineElement& b) { return !(a == b); }

  // Terms grouped by the T_w part.
  std::map<Permutation, LaurentElement> components() const {
    std::map<Permutation, LaurentElement> out;
    for (const auto& [k, c] : terms_) {
      auto it = out.find(k.w);
      if (it == out.end())
        it = out.emplace(k.w, LaurentElement(ctx_->algebra(), ctx_->n())).first;
      it->second.add_term({k.a, k.lam}, c);
    }
    return out;
  }

  int term_parity(const AffineKey& k) const {
    int p = 0;
    for (auto b : k.a) p ^= ctx_->algebra()->parity(b);
    return p;
  }

  AffineElement parity_component(int p) const {
    AffineElement out(ctx_);
    for (const auto& [k, c] : terms_)
      if (term_parity(k) == p) out.add_term(k, c);
    return out;
  }

  bool has_negative_exponent() const {
    for (const auto& [k, c] : terms_)
      for (int e : k.lam)
        if (e < 0) return true;
    return false;
  }

  bool is_x_free() const {
    for (const auto& [k, c] : terms_)
      for (int e : k.lam)
        if (e != 0) return false;
    return true;
  }

private:
  static void check_gen_index(const AffineContextPtr& ctx, int i) {
    if (i < 1 || i >= ctx->n()) throw std::out_of_range("T generator index out of range");
  }

  void check_compatible(const AffineElement& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same_as(*o.ctx_))
      throw std::invalid_argument("AffineElement: incompatible contexts");
  }

  AffineContextPtr ctx_;
  std::map<AffineKey, Scalar> terms_;
};

// Action of T_i on the normal form, which realizes left multiplication:
//   T_i (f T_w) = s_i(f) T_{s_i w} + z t_{i,i+1} D(f) T_w,
// where D is the Demazure operator in the ascent case and its twisted variant
// X_{i+1}^{-1} Delta_i(X_{i+1} -) in the descent case.
inline AffineElement apply_t(int i, const AffineElement& v) {
  const auto& ctx = v.context();
  AffineElement out(ctx);
  const bool deform = !ctx->z().is_zero();
  for (const auto& [w, f] : v.components()) {
    Permutation sw = compose(Permutation::simple(ctx->n(), i), w);
    LaurentElement swapped = f.act(Permutation::simple(ctx->n(), i), LaurentElement::ActMode::diagonal);
    out = out + AffineElement::with_t(ctx, swapped, sw);
    if (!deform) continue;
    bool descent = left_descent(i, w);
    LaurentElement d = descent ? f.twisted_demazure(i) : f.demazure(i);
    if (d.is_zero()) continue;
    LaurentElement td = ctx->z() * mul_poly(ctx->teleporter_at(i), d);
    out = out + AffineElement::with_t(ctx, td, w);
  }
  return out;
}

// Left multiplication by f in P_n(A).
inline AffineElement apply_laurent(const LaurentElement& f, const AffineElement& v) {
  const auto& ctx = v.context();
  AffineElement out(ctx);
  for (const auto& [w, g] : v.components())
    out = out + AffineElement::with_t(ctx, mul_poly(f, g), w);
  return out;
}

// Product in H_n^aff(A,z). The left factor is decomposed as sum of f_w T_w and
// applied to the right factor through the module structure above, so the
// result is again in normal form.
inline AffineElement mul_affine(const AffineElement& x, const AffineElement& y) {
  if (!x.context() || !y.context() || !x.context()->same_as(*y.context()))
    throw std::invalid_argument("mul_affine: incompatible contexts");
  const auto& ctx = x.context();
  AffineElement out(ctx);
  for (const auto& [w, f] : x.components()) {
    AffineElement acted = y;
    auto word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acted = apply_t(*it, acted);
    out = out + apply_laurent(f, acted);
  }
  return out;
}

inline AffineElement affine_pow(const AffineElement& x, int e) {
  if (e < 0) throw std::invalid_argument("affine_pow: negative exponent");
  AffineElement out = AffineElement::unit(x.context());
  for (int k = 0; k < e; ++k) out = mul_affine(out, x);
  return out;
}

// T_w computed as a product over a reduced word (word-independent by the braid
// relations; agrees with basis_t).
inline AffineElement t_w(const AffineContextPtr& ctx, const Permutation& w) {
  AffineElement out = AffineElement::unit(ctx);
  for (int i : reduced_word(w)) out = mul_affine(out, AffineElement::generator_t(ctx, i));
  return out;
}

// Expansion in the right-handed basis T_w a X^lambda: returns (w, g_w) pairs
// with x = sum of T_w g_w, ordered by w.
inline std::vector<std::pair<Permutation, LaurentElement>> to_right_normal_form(
    const AffineElement& x) {
  const auto& ctx = x.context();
  std::map<Permutation, LaurentElement> collected;
  AffineElement residual = x;
  while (!residual.is_zero()) {
    auto comps = residual.components();
    const Permutation* best = nullptr;
    int best_len = -1;
    for (const auto& [w, f] : comps) {
      int l = length(w);
      if (l > best_len) {
        best_len = l;
        best = &w;
      }
    }
    Permutation w = *best;
    LaurentElement g = comps.at(w).act(w.inverse(), LaurentElement::ActMode::diagonal);
    auto it = collected.find(w);
    if (it == collected.end())
      collected.emplace(w, g);
    else
      it->second = it->second + g;
    residual = residual - mul_affine(AffineElement::basis_t(ctx, w),
                                     AffineElement::from_laurent(ctx, g));
  }
  std::vector<std::pair<Permutation, LaurentElement>> out(collected.begin(), collected.end());
  return out;
}

inline AffineElement from_right_normal_form(
    const AffineContextPtr& ctx, const std::vector<std::pair<Permutation, LaurentElement>>& parts) {
  AffineElement out(ctx);
  for (const auto& [w, g] : parts)
    out = out + mul_affine(AffineElement::basis_t(ctx, w), AffineElement::from_laurent(ctx, g));
  return out;
}

// Jucys-Murphy elements: J_1 = 1, J_i = T_{i-1} J_{i-1} T_{i-1}.
inline AffineElement jucys_murphy(const AffineContextPtr& ctx, int i) {
  if (i < 1 || i > ctx->n()) throw std::out_of_range("jucys_murphy: index out of range");
  AffineElement j = AffineElement::unit(ctx);
  for (int k = 2; k <= i; ++k) {
    AffineElement t = AffineElement::generator_t(ctx, k - 1);
    j = mul_affine(t, mul_affine(j, t));
  }
  return j;
}

inline AffineElement jucys_murphy_inverse(const AffineContextPtr& ctx, int i) {
  if (i < 1 || i > ctx->n()) throw std::out_of_range("jucys_murphy_inverse: index out of range");
  AffineElement j = AffineElement::unit(ctx);
  for (int k = 2; k <= i; ++k) {
    AffineElement t = AffineElement::generator_t_inv(ctx, k - 1);
    j = mul_affine(t, mul_affine(j, t));
  }
  return j;
}

// Evaluation homomorphism X_i -> J_i (A-parts and T_w fixed). Negative powers
// go to powers of J_i^{-1}.
inline AffineElement eval_jm(const AffineElement& x) {
  const auto& ctx = x.context();
  std::vector<AffineElement> jm, jm_inv;
  for (int i = 1; i <= ctx->n(); ++i) {
    jm.push_back(jucys_murphy(ctx, i));
    jm_inv.push_back(jucys_murphy_inverse(ctx, i));
  }
  AffineElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    AffineElement acc =
        c * AffineElement::from_tensor(ctx, TensorElement::from_tuple(ctx->algebra(), ctx->n(), k.a));
    for (int i = 0; i < ctx->n(); ++i) {
      int e = k.lam[i];
      const AffineElement& base = e >= 0 ? jm[i] : jm_inv[i];
      for (int r = 0; r < (e >= 0 ? e : -e); ++r) acc = mul_affine(acc, base);
    }
    acc = mul_affine(acc, AffineElement::basis_t(ctx, k.w));
    out = out + acc;
  }
  return out;
}

// Symmetrization over the diagonal S_n-action; the input must have all A-part
// coefficients in Z(A)^{tensor n}.
inline AffineElement make_central(const AffineContextPtr& ctx, const LaurentElement& g) {
  if (!g.coefficients_in_center())
    throw std::invalid_argument("make_central: coefficient not in Z(A)^{tensor n}");
  AffineElement out(ctx);
  for (const auto& w : all_permutations(ctx->n()))
    out = out + AffineElement::from_laurent(ctx, g.act(w, LaurentElement::ActMode::diagonal));
  return out;
}

// Supercommutation test against the generating set {T_i, X_1, b in slot 1}.
inline bool is_central(const AffineElement& x) {
  const auto& ctx = x.context();
  std::vector<std::pair<AffineElement, int>> gens;  // (generator, parity)
  for (int i = 1; i < ctx->n(); ++i) gens.emplace_back(AffineElement::generator_t(ctx, i), 0);
  gens.emplace_back(AffineElement::generator_x(ctx, 1, 1), 0);
  for (int b = 0; b < ctx->algebra()->dim(); ++b)
    gens.emplace_back(
        AffineElement::from_tensor(
            ctx, TensorElement::basis_atom(ctx->algebra(), ctx->n(), 1, b)),
        ctx->algebra()->parity(b));
  for (int p : {0, 1}) {
    AffineElement comp = x.parity_component(p);
    if (comp.is_zero()) continue;
    for (const auto& [g, pg] : gens) {
      AffineElement lhs = mul_affine(comp, g);
      AffineElement rhs = mul_affine(g, comp);
      if (p == 1 && pg == 1) rhs = Scalar(-1) * rhs;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace qawa
