#pragma once

#include <string>
#include <vector>

#include "qawa/affine.hpp"

namespace qawa {

struct RelationCheck {
  std::string relation;
  std::vector<int> indices;
  bool pass = false;
  int difference_term_count = 0;
};

namespace detail {

inline void record(std::vector<RelationCheck>& out, std::string rel, std::vector<int> idx,
                   const AffineElement& lhs, const AffineElement& rhs) {
  AffineElement diff = lhs - rhs;
  out.push_back({std::move(rel), std::move(idx), diff.is_zero(),
                 static_cast<int>(diff.terms().size())});
}

inline std::vector<BasisTuple> all_tuples(const AlgebraPtr& alg, int n) {
  std::vector<BasisTuple> out{BasisTuple{}};
  for (int s = 0; s < n; ++s) {
    std::vector<BasisTuple> next;
    for (const auto& t : out)
      for (int k = 0; k < alg->dim(); ++k) {
        BasisTuple t2 = t;
        t2.push_back(static_cast<std::uint8_t>(k));
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

// Evaluates both sides of every defining relation of H_n^aff(A,z) through the
// normal-form product. Mismatches become report entries, not errors.
inline std::vector<RelationCheck> check_defining_relations(const AffineContextPtr& ctx) {
  std::vector<RelationCheck> out;
  const int n = ctx->n();
  const auto& alg = ctx->algebra();
  auto T = [&](int i) { return AffineElement::generator_t(ctx, i); };
  auto X = [&](int i, int e) { return AffineElement::generator_x(ctx, i, e); };
  auto tuples = detail::all_tuples(alg, n);

  // T_i T_j = T_j T_i for |i-j| > 1
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      detail::record(out, "far_commutation", {i, j}, mul_affine(T(i), T(j)),
                     mul_affine(T(j), T(i)));

  // T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}
  for (int i = 1; i + 1 < n; ++i)
    detail::record(out, "braid", {i},
                   mul_affine(T(i), mul_affine(T(i + 1), T(i))),
                   mul_affine(T(i + 1), mul_affine(T(i), T(i + 1))));

  // T_i^2 = z t_{i,i+1} T_i + 1
  for (int i = 1; i < n; ++i) {
    AffineElement rhs =
        apply_laurent(ctx->z() * ctx->teleporter_at(i), T(i)) + AffineElement::unit(ctx);
    detail::record(out, "quadratic", {i}, mul_affine(T(i), T(i)), rhs);
  }

  // T_i a = s_i(a) T_i for every basis tuple a
  for (int i = 1; i < n; ++i)
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      TensorElement a = TensorElement::from_tuple(alg, n, tuples[t]);
      AffineElement lhs = mul_affine(T(i), AffineElement::from_tensor(ctx, a));
      AffineElement rhs = mul_affine(
          AffineElement::from_tensor(ctx, a.superpermute(Permutation::simple(n, i))), T(i));
      detail::record(out, "t_tensor", {i, static_cast<int>(t)}, lhs, rhs);
    }

  // T_i X_j^{+-1} = X_j^{+-1} T_i for j != i, i+1
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      for (int e : {1, -1})
        detail::record(out, "x_commutation", {i, j, e}, mul_affine(T(i), X(j, e)),
                       mul_affine(X(j, e), T(i)));
    }

  // T_i X_i T_i = X_{i+1}
  for (int i = 1; i < n; ++i)
    detail::record(out, "x_conjugation", {i}, mul_affine(T(i), mul_affine(X(i, 1), T(i))),
                   X(i + 1, 1));

  // X_i a = a X_i for every basis tuple a
  for (int i = 1; i <= n; ++i)
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      AffineElement a =
          AffineElement::from_tensor(ctx, TensorElement::from_tuple(alg, n, tuples[t]));
      detail::record(out, "x_tensor", {i, static_cast<int>(t)}, mul_affine(X(i, 1), a),
                     mul_affine(a, X(i, 1)));
    }

  // X_i X_i^{-1} = 1 and X_i X_j = X_j X_i
  for (int i = 1; i <= n; ++i)
    detail::record(out, "x_invertible", {i}, mul_affine(X(i, 1), X(i, -1)),
                   AffineElement::unit(ctx));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      detail::record(out, "x_x_commutation", {i, j}, mul_affine(X(i, 1), X(j, 1)),
                     mul_affine(X(j, 1), X(i, 1)));

  return out;
}

}  // namespace qawa
