#include <doctest.h>

#include "qawa/cyclotomic.hpp"
#include "qawa/json_io.hpp"
#include "qawa/presets.hpp"
#include "qawa/random_elements.hpp"

using namespace qawa;

namespace {

CyclotomicContextPtr scalar_quotient(const char* preset, int n, Scalar z,
                                     std::vector<long long> cs) {
  auto alg = presets::by_name(preset);
  CyclotomicPoly f;
  f.d = static_cast<int>(cs.size());
  for (long long c : cs) {
    AVec v = alg->zero();
    for (int k = 0; k < alg->dim(); ++k) v[k] = Scalar(c) * alg->unit()[k];
    f.coeffs.push_back(v);
  }
  return CyclotomicContext::make(make_affine_context(alg, n, std::move(z)), std::move(f));
}

}  // namespace

TEST_CASE("trace supersymmetry on all basis pairs, every preset, n = 2, d = 2") {
  for (const char* preset : {"trivial", "kc2", "kc3", "dual", "ext2"}) {
    auto ctx = scalar_quotient(preset, 2, Scalar(1), {-1, 0});
    const auto& alg = ctx->algebra();
    const auto& basis = ctx->basis();
    auto parity_of = [&](const AffineKey& k) {
      int p = 0;
      for (auto b : k.a) p ^= alg->parity(b);
      return p;
    };
    std::vector<CyclotomicElement> elems;
    for (const auto& k : basis) elems.push_back(CyclotomicElement::basis_element(ctx, k));
    int checked = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        Scalar lhs = trace_f(mul_cyclo(elems[i], elems[j]));
        Scalar rhs = trace_f(mul_cyclo(elems[j], elems[i]));
        if (parity_of(basis[i]) && parity_of(basis[j])) rhs = -rhs;
        if (lhs != rhs) {
          CHECK(lhs == rhs);
          ++checked;
        }
      }
    CHECK(checked == 0);
  }
}

TEST_CASE("quotient by a polynomial with a non-scalar central coefficient") {
  // f = X^2 + th12 X + 1 over the exterior preset
  auto alg = presets::by_name("ext2");
  CyclotomicPoly f;
  f.d = 2;
  f.coeffs = {alg->unit(), alg->basis_element(3)};
  auto ctx = CyclotomicContext::make(make_affine_context(alg, 2, Scalar(2, 3)), f);
  CHECK(ctx->dimension() == 128);
  CHECK(ctx->basis().size() == 128);

  // X_i X_i^{-1} = 1 still holds
  for (int i = 1; i <= 2; ++i) {
    CyclotomicElement xi = reduce(ctx, AffineElement::generator_x(ctx->affine(), i, 1));
    CHECK(mul_cyclo(xi, invert_x(ctx, i)) == CyclotomicElement::unit(ctx));
  }

  // the ideal still dies under reduce
  ElementGen gen(163);
  for (int rep = 0; rep < 4; ++rep) {
    AffineElement g(ctx->affine());
    std::vector<int> lam{static_cast<int>(gen.next(2)), static_cast<int>(gen.next(2))};
    g.add_term({gen.tuple(alg, 2), lam, gen.permutation(2)}, gen.coefficient());
    AffineElement prod = mul_affine(g, ctx->f_element(1));
    CHECK(ctx->reduce_affine(prod).is_zero());
  }

  // basis elements stay fixed
  for (const auto& k : ctx->basis()) {
    AffineElement e(ctx->affine());
    e.add_term(k, Scalar(1));
    CHECK(ctx->reduce_affine(e) == e);
  }
}

TEST_CASE("rank-one gram matrix for the level-one quotient") {
  auto ctx = scalar_quotient("trivial", 1, Scalar(1), {-1});
  GramData g = gram(ctx);
  REQUIRE(g.basis.size() == 1);
  CHECK(g.gram[0][0] == Scalar(1));
}

TEST_CASE("evaluation output re-ingests to the same normal form") {
  using nlohmann::json;
  auto ctx = make_affine_context(presets::by_name("dual"), 2, Scalar(2, 3));
  ElementGen gen(167);
  for (int rep = 0; rep < 6; ++rep) {
    AffineElement x = gen.affine(ctx);
    json terms = io::affine_to_json(x);
    AffineElement back = io::affine_from_json(ctx, terms);
    CHECK(back == x);
    CHECK(io::affine_to_json(back) == terms);  // byte-stable term order
  }
}
