#pragma once

#include <string>
#include <vector>

#include "qawa/affine.hpp"

namespace qawa {

// A linear self-map of A given on the basis: image[i] = image of b_i.
struct AlgebraMap {
  std::vector<AVec> image;
};

// Shared sanity checks for trace-compatible (anti)automorphism data. Returns
// the violated conditions by name.
inline std::vector<std::string> validate_algebra_map(const AlgebraPtr& alg, const AlgebraMap& m,
                                                     bool anti) {
  std::vector<std::string> bad;
  const int d = alg->dim();
  if (static_cast<int>(m.image.size()) != d) return {"malformed"};
  for (const auto& v : m.image)
    if (static_cast<int>(v.size()) != d) return {"malformed"};

  Matrix mat(d, std::vector<Scalar>(d, Scalar(0)));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) mat[k][i] = m.image[i][k];
  if (!invert(mat)) bad.push_back("not-invertible");

  bool parity_ok = true;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      if (!m.image[i][k].is_zero() && alg->parity(k) != alg->parity(i)) parity_ok = false;
  if (!parity_ok) bad.push_back("not-parity-preserving");

  auto apply = [&](const AVec& v) {
    AVec out = alg->zero();
    for (int i = 0; i < d; ++i) {
      if (v[i].is_zero()) continue;
      for (int k = 0; k < d; ++k) out[k] += v[i] * m.image[i][k];
    }
    return out;
  };

  if (apply(alg->unit()) != alg->unit()) bad.push_back("unit-not-fixed");

  bool trace_ok = true;
  for (int i = 0; i < d; ++i)
    if (alg->trace(m.image[i]) != alg->trace_basis(i)) trace_ok = false;
  if (!trace_ok) bad.push_back("not-trace-preserving");

  bool mult_ok = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      AVec lhs = apply(alg->structure(i, j));
      AVec rhs = anti ? alg->mul(m.image[j], m.image[i]) : alg->mul(m.image[i], m.image[j]);
      if (anti && alg->parity(i) && alg->parity(j))
        for (auto& c : rhs) c = -c;
      if (lhs != rhs) mult_ok = false;
    }
  if (!mult_ok) bad.push_back(anti ? "not-an-antihomomorphism" : "not-a-homomorphism");
  return bad;
}

namespace detail {

inline TensorElement apply_map_slotwise(const AlgebraPtr& alg, const AlgebraMap& m,
                                        const BasisTuple& tup, const Scalar& c) {
  // parity-preserving maps are even, so no Koszul signs appear here
  int n = static_cast<int>(tup.size());
  std::vector<std::pair<BasisTuple, Scalar>> partial{{BasisTuple{}, c}};
  for (int s = 0; s < n; ++s) {
    const AVec& img = m.image[tup[s]];
    std::vector<std::pair<BasisTuple, Scalar>> next;
    for (auto& [t, coeff] : partial)
      for (int k = 0; k < alg->dim(); ++k) {
        if (img[k].is_zero()) continue;
        BasisTuple t2 = t;
        t2.push_back(static_cast<std::uint8_t>(k));
        next.emplace_back(std::move(t2), coeff * img[k]);
      }
    partial = std::move(next);
    if (partial.empty()) break;
  }
  TensorElement out(alg, n);
  for (auto& [t, coeff] : partial) out.add_term(t, coeff);
  return out;
}

}  // namespace detail

// The order-reversing automorphism: X_i -> X_{n+1-i}, a_i -> a_{n+1-i},
// T_j -> -T_{n-j} + z t_{n-j,n-j+1} = -T_{n-j}^{-1}.
inline AffineElement apply_flip(const AffineElement& x) {
  const auto& ctx = x.context();
  const int n = ctx->n();
  Permutation w0 = Permutation::longest(n);
  std::map<Permutation, AffineElement> tcache;
  AffineElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    TensorElement t =
        TensorElement::from_tuple(ctx->algebra(), n, k.a, c).superpermute(w0);
    LaurentElement f = LaurentElement::from_tensor_monomial(t, act_positions(w0, k.lam));
    auto it = tcache.find(k.w);
    if (it == tcache.end()) {
      AffineElement prod = AffineElement::unit(ctx);
      for (int j : reduced_word(k.w))
        prod = mul_affine(prod, Scalar(-1) * AffineElement::generator_t_inv(ctx, n - j));
      it = tcache.emplace(k.w, std::move(prod)).first;
    }
    out = out + apply_laurent(f, it->second);
  }
  return out;
}

// zeta_a for a even, central, invertible: X_j -> a_j X_j, fixing A^{tensor n}
// and the T_i.
inline AffineElement apply_zeta(const AffineElement& x, const AVec& a) {
  const auto& ctx = x.context();
  const auto& alg = ctx->algebra();
  if (!alg->in_center_even(a)) throw std::invalid_argument("apply_zeta: a must be even central");
  auto inv = alg->try_invert(a);
  if (!inv) throw std::invalid_argument("apply_zeta: a must be invertible");

  auto apow = [&](int e) {
    AVec r = alg->unit();
    const AVec& base = e >= 0 ? a : *inv;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) r = alg->mul(r, base);
    return r;
  };

  AffineElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    TensorElement factor = TensorElement::from_tuple(alg, ctx->n(), k.a, c);
    for (int j = 1; j <= ctx->n(); ++j) {
      if (k.lam[j - 1] == 0) continue;
      factor = mul_tensor(factor, TensorElement::atom(alg, ctx->n(), j, apow(k.lam[j - 1])));
    }
    for (const auto& [tup, c2] : factor.terms()) out.add_term({tup, k.lam, k.w}, c2);
  }
  return out;
}

// Lift of a trace-preserving algebra automorphism of A, applied slotwise.
inline AffineElement apply_xi(const AffineElement& x, const AlgebraMap& xi) {
  const auto& ctx = x.context();
  auto bad = validate_algebra_map(ctx->algebra(), xi, false);
  if (!bad.empty()) throw std::invalid_argument("apply_xi: invalid map: " + bad.front());
  AffineElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    TensorElement t = detail::apply_map_slotwise(ctx->algebra(), xi, k.a, c);
    for (const auto& [tup, c2] : t.terms()) out.add_term({tup, k.lam, k.w}, c2);
  }
  return out;
}

// Lift of a trace-preserving anti-automorphism of A to the anti-automorphism
// fixing X_i and T_j. Products reverse with the super-opposite sign, so a
// normal-form term a X^lambda T_w maps to (+-) T_{w^{-1}} X^lambda tau(a).
inline AffineElement apply_tau(const AffineElement& x, const AlgebraMap& tau) {
  const auto& ctx = x.context();
  const auto& alg = ctx->algebra();
  auto bad = validate_algebra_map(alg, tau, true);
  if (!bad.empty()) throw std::invalid_argument("apply_tau: invalid map: " + bad.front());
  AffineElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    int odd = 0;
    for (auto b : k.a) odd += alg->parity(b);
    // sign from reversing the product of the slot atoms
    bool neg = ((odd * (odd - 1) / 2) & 1) != 0;
    TensorElement t = detail::apply_map_slotwise(alg, tau, k.a, neg ? -c : c);
    AffineElement rhs =
        AffineElement::from_laurent(ctx, LaurentElement::from_tensor_monomial(t, k.lam));
    out = out + mul_affine(AffineElement::basis_t(ctx, k.w.inverse()), rhs);
  }
  return out;
}

}  // namespace qawa
