#pragma once

#include <random>

#include "qawa/affine.hpp"

namespace qawa {

// Seeded generator for test and suite inputs. Bounded on purpose: exponents
// in [-3,3], at most 5 terms, coefficients from {1,-1,1/2,-1/2,2}.
class ElementGen {
public:
  explicit ElementGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return rng_() % bound; }

  Scalar coefficient() {
    switch (next(5)) {
      case 0: return Scalar(1);
      case 1: return Scalar(-1);
      case 2: return Scalar(1, 2);
      case 3: return Scalar(-1, 2);
      default: return Scalar(2);
    }
  }

  int exponent() { return static_cast<int>(next(7)) - 3; }

  BasisTuple tuple(const AlgebraPtr& alg, int n) {
    BasisTuple t(n);
    for (int i = 0; i < n; ++i) t[i] = static_cast<std::uint8_t>(next(alg->dim()));
    return t;
  }

  Permutation permutation(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[next(i + 1)]);
    return Permutation(std::move(img));
  }

  LaurentElement laurent(const AlgebraPtr& alg, int n) {
    LaurentElement f(alg, n);
    int terms = 1 + static_cast<int>(next(5));
    for (int t = 0; t < terms; ++t) {
      std::vector<int> lam(n);
      for (int i = 0; i < n; ++i) lam[i] = exponent();
      f.add_term({tuple(alg, n), lam}, coefficient());
    }
    return f;
  }

  // Laurent element whose A-parts are products of supercenter basis elements.
  LaurentElement central_laurent(const AlgebraPtr& alg, int n) {
    const auto& zb = alg->center();
    LaurentElement f(alg, n);
    int terms = 1 + static_cast<int>(next(3));
    for (int t = 0; t < terms; ++t) {
      TensorElement part = TensorElement::unit(alg, n);
      for (int slot = 1; slot <= n; ++slot)
        part = mul_tensor(part,
                          TensorElement::atom(alg, n, slot, zb[next(zb.size())]));
      std::vector<int> lam(n);
      for (int i = 0; i < n; ++i) lam[i] = exponent();
      f = f + (coefficient() * LaurentElement::from_tensor_monomial(part, lam));
    }
    return f;
  }

  AffineElement affine(const AffineContextPtr& ctx, int max_terms = 3) {
    AffineElement x(ctx);
    int terms = 1 + static_cast<int>(next(max_terms));
    for (int t = 0; t < terms; ++t) {
      std::vector<int> lam(ctx->n());
      for (int i = 0; i < ctx->n(); ++i) lam[i] = exponent();
      x.add_term({tuple(ctx->algebra(), ctx->n()), lam, permutation(ctx->n())}, coefficient());
    }
    return x;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace qawa
