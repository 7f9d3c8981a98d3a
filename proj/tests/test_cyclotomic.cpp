#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qawa/cyclotomic.hpp"
#include "qawa/presets.hpp"
#include "qawa/random_elements.hpp"

using namespace qawa;

namespace {

CyclotomicContextPtr quotient(const char* preset, int n, Scalar z,
                              std::vector<long long> scalar_coeffs) {
  auto alg = presets::by_name(preset);
  CyclotomicPoly f;
  f.d = static_cast<int>(scalar_coeffs.size());
  for (long long c : scalar_coeffs) {
    AVec v = alg->zero();
    for (int k = 0; k < alg->dim(); ++k) v[k] = Scalar(c) * alg->unit()[k];
    f.coeffs.push_back(v);
  }
  return CyclotomicContext::make(make_affine_context(alg, n, std::move(z)), std::move(f));
}

AffineElement X(const AffineContextPtr& c, int i, int e = 1) {
  return AffineElement::generator_x(c, i, e);
}
AffineElement T(const AffineContextPtr& c, int i) { return AffineElement::generator_t(c, i); }

}  // namespace

TEST_CASE("cyclotomic polynomial validation") {
  auto triv = presets::by_name("trivial");
  // f = X^2 - 1 accepted
  CHECK(validate_cyclotomic_poly(triv, {2, {AVec{Scalar(-1)}, AVec{Scalar(0)}}}).empty());
  // f = X^2 rejected: constant term not invertible
  auto bad = validate_cyclotomic_poly(triv, {2, {AVec{Scalar(0)}, AVec{Scalar(0)}}});
  CHECK(bad == std::vector<std::string>{"constant-term-not-invertible"});

  auto ext = presets::by_name("ext2");
  // f = X^2 + th12 X + 1 accepted (th12 is even central)
  AVec th12 = ext->basis_element(3);
  AVec one = ext->unit();
  CHECK(validate_cyclotomic_poly(ext, {2, {one, th12}}).empty());
  // odd coefficient rejected
  AVec th1 = ext->basis_element(1);
  auto bad2 = validate_cyclotomic_poly(ext, {2, {one, th1}});
  CHECK(bad2 == std::vector<std::string>{"coefficient-outside-even-center"});
  // matrix algebra: e11 is neither central nor invertible
  auto mat = Algebra::load(oracles::matrix2_data(), "mat2");
  auto bad3 = validate_cyclotomic_poly(mat, {1, {mat->basis_element(0)}});
  CHECK(std::count(bad3.begin(), bad3.end(), "coefficient-outside-even-center") == 1);
  CHECK(std::count(bad3.begin(), bad3.end(), "constant-term-not-invertible") == 1);
}

TEST_CASE("f_i elements: frozen expansion and tensor commutation") {
  // trivial preset, f = X^2 - 1: f_2 = X_2^2 - z X_1 X_2 T_1 - z T_1 - 1
  auto ctx = quotient("trivial", 2, Scalar(2, 3), {-1, 0});
  const auto& ac = ctx->affine();
  AffineElement f2 = ctx->f_element(2);
  AffineElement expect =
      X(ac, 2, 2) -
      Scalar(2, 3) * mul_affine(X(ac, 1), mul_affine(X(ac, 2), T(ac, 1))) -
      Scalar(2, 3) * T(ac, 1) - AffineElement::unit(ac);
  CHECK(f2 == expect);
  CHECK(ctx->f_element(1) == X(ac, 1, 2) - AffineElement::unit(ac));

  // f_i commutes with all of A^{tensor n}
  for (const char* preset : {"dual", "ext2"}) {
    auto c2 = quotient(preset, 2, Scalar(2, 3), {1, 0});
    const auto& alg = c2->algebra();
    for (int i = 1; i <= 2; ++i)
      for (int slot = 1; slot <= 2; ++slot)
        for (int b = 0; b < alg->dim(); ++b) {
          AffineElement a = AffineElement::from_tensor(
              c2->affine(), TensorElement::basis_atom(alg, 2, slot, b));
          CHECK(mul_affine(a, c2->f_element(i)) == mul_affine(c2->f_element(i), a));
        }
  }
}

TEST_CASE("reduce: frozen examples over trivial preset, f = X^2 - 1") {
  auto ctx = quotient("trivial", 2, Scalar(2, 3), {-1, 0});
  const auto& ac = ctx->affine();
  CHECK(reduce(ctx, X(ac, 1, 2)) == CyclotomicElement::unit(ctx));
  // X_2^2 = z X_1 X_2 T_1 + z T_1 + 1 in the quotient
  AffineElement expect = Scalar(2, 3) * mul_affine(X(ac, 1), mul_affine(X(ac, 2), T(ac, 1))) +
                         Scalar(2, 3) * T(ac, 1) + AffineElement::unit(ac);
  CHECK(reduce(ctx, X(ac, 2, 2)).rep() == expect);
  // basis elements are fixed by reduce
  for (const auto& k : ctx->basis()) {
    AffineElement e(ac);
    e.add_term(k, Scalar(1));
    CHECK(reduce(ctx, e).rep() == e);
  }
  CHECK_THROWS(reduce(ctx, X(ac, 1, -1)));
}

TEST_CASE("reduce is idempotent and kills the defining ideal") {
  for (const char* preset : {"trivial", "dual"}) {
    auto ctx = quotient(preset, 2, Scalar(1), {-1, 0});
    ElementGen gen(131);
    auto random_poly = [&](int max_exp) {
      AffineElement x(ctx->affine());
      int terms = 1 + static_cast<int>(gen.next(3));
      for (int t = 0; t < terms; ++t) {
        std::vector<int> lam(2);
        for (int i = 0; i < 2; ++i) lam[i] = static_cast<int>(gen.next(max_exp + 1));
        x.add_term({gen.tuple(ctx->algebra(), 2), lam, gen.permutation(2)}, gen.coefficient());
      }
      return x;
    };
    for (int rep = 0; rep < 8; ++rep) {
      AffineElement x = random_poly(4);
      AffineElement once = ctx->reduce_affine(x);
      CHECK(ctx->reduce_affine(once) == once);
      // g f_1 h dies in the quotient
      AffineElement g = random_poly(2);
      AffineElement h = random_poly(2);
      AffineElement ideal = mul_affine(g, mul_affine(ctx->f_element(1), h));
      CHECK(ctx->reduce_affine(ideal).is_zero());
    }
  }
}

TEST_CASE("inverses of the X_i in the quotient") {
  // f = X^2 - 1 over trivial: X_1^{-1} = X_1
  auto ctx = quotient("trivial", 2, Scalar(2, 3), {-1, 0});
  CHECK(invert_x(ctx, 1).rep() == X(ctx->affine(), 1, 1));
  // f = X - 1: X_1 = 1, so X_1^{-1} = 1
  auto ctx1 = quotient("trivial", 2, Scalar(2, 3), {-1});
  CHECK(invert_x(ctx1, 1) == CyclotomicElement::unit(ctx1));

  for (const char* preset : {"trivial", "kc2", "dual", "ext2"}) {
    auto c2 = quotient(preset, 2, Scalar(1), {1, 0});  // f = X^2 + 1
    for (int i = 1; i <= 2; ++i) {
      CyclotomicElement xi = reduce(c2, X(c2->affine(), i, 1));
      CHECK(mul_cyclo(invert_x(c2, i), xi) == CyclotomicElement::unit(c2));
      CHECK(mul_cyclo(xi, invert_x(c2, i)) == CyclotomicElement::unit(c2));
    }
  }
}

TEST_CASE("quotient multiplication") {
  auto ctx = quotient("trivial", 2, Scalar(2, 3), {-1, 0});
  const auto& ac = ctx->affine();
  CyclotomicElement t1 = reduce(ctx, T(ac, 1));
  // products that stay below the exponent bound agree with the affine level
  CHECK(mul_cyclo(t1, t1).rep() ==
        Scalar(2, 3) * T(ac, 1) + AffineElement::unit(ac));
  CyclotomicElement x1 = reduce(ctx, X(ac, 1));
  CHECK(mul_cyclo(x1, x1) == CyclotomicElement::unit(ctx));
}

TEST_CASE("basis dimension (d dim A)^n n! and multiplication closes") {
  struct Case {
    const char* preset;
    int n;
    std::vector<long long> f;
    long long dim;
  };
  for (const auto& c : {Case{"trivial", 2, {-1, 0}, 8}, Case{"dual", 2, {-1, 0}, 32},
                        Case{"kc2", 2, {-1}, 8}, Case{"ext2", 2, {1, 0}, 128}}) {
    auto ctx = quotient(c.preset, c.n, Scalar(1), c.f);
    CHECK(ctx->dimension() == c.dim);
    CHECK(static_cast<long long>(ctx->basis().size()) == c.dim);
    // sampled products of basis elements land back in the span (reduce gives
    // exponents < d and coordinates resolve)
    ElementGen gen(137);
    for (int rep = 0; rep < 5; ++rep) {
      auto bi = ctx->basis()[gen.next(ctx->basis().size())];
      auto bj = ctx->basis()[gen.next(ctx->basis().size())];
      CyclotomicElement prod = mul_cyclo(CyclotomicElement::basis_element(ctx, bi),
                                         CyclotomicElement::basis_element(ctx, bj));
      auto coords = ctx->coordinates(prod.rep());
      (void)coords;  // coordinates() throws if any key is off-basis
    }
  }
}

TEST_CASE("embedded subalgebra: low-index products stay low-index") {
  auto ctx = quotient("dual", 3, Scalar(2, 3), {-1, 0});
  const auto& ac = ctx->affine();
  ElementGen gen(139);
  for (int rep = 0; rep < 10; ++rep) {
    // random word in generators with indices <= 2 (X_i, T_1, a in slots 1..2)
    AffineElement x = AffineElement::unit(ac);
    for (int step = 0; step < 4; ++step) {
      switch (gen.next(4)) {
        case 0: x = mul_affine(x, X(ac, 1 + static_cast<int>(gen.next(2)), 1)); break;
        case 1: x = mul_affine(x, T(ac, 1)); break;
        case 2:
          x = mul_affine(x, AffineElement::from_tensor(
                                ac, TensorElement::basis_atom(ctx->algebra(), 3,
                                                              1 + static_cast<int>(gen.next(2)),
                                                              static_cast<int>(gen.next(2)))));
          break;
        default: break;
      }
    }
    CyclotomicElement red = reduce(ctx, x);
    for (const auto& [k, c] : red.rep().terms()) {
      CHECK(k.lam[2] == 0);
      CHECK(k.w(3) == 3);
      CHECK(k.a[2] == 0);  // unit basis index in the last slot
    }
  }
}

TEST_CASE("trace form: frozen values and n = 1 identity Gram matrix") {
  auto ctx = quotient("trivial", 1, Scalar(1), {-1, 0});
  CHECK(trace_f(CyclotomicElement::unit(ctx)) == Scalar(1));
  CHECK(trace_f(reduce(ctx, X(ctx->affine(), 1, 1))) == Scalar(0));
  auto g = gram(ctx);
  REQUIRE(g.basis.size() == 2);
  CHECK(g.gram == identity_matrix(2));

  auto ctx2 = quotient("trivial", 2, Scalar(1), {-1, 0});
  CHECK(trace_f(reduce(ctx2, T(ctx2->affine(), 1))) == Scalar(0));
}

TEST_CASE("trace form is supersymmetric with invertible Gram matrix") {
  for (const char* preset : {"trivial", "dual"}) {
    for (auto z : {Scalar(0), Scalar(1)}) {
      auto ctx = quotient(preset, 2, z, {-1, 0});
      auto g = gram(ctx);  // throws if singular
      const auto& basis = g.basis;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          CyclotomicElement bi = CyclotomicElement::basis_element(ctx, basis[i]);
          CyclotomicElement bj = CyclotomicElement::basis_element(ctx, basis[j]);
          CHECK(trace_f(mul_cyclo(bi, bj)) == trace_f(mul_cyclo(bj, bi)));
        }
    }
  }
  // odd parts flip the sign: n = 1 keeps it cheap over ext2
  auto ctx = quotient("ext2", 1, Scalar(1), {1, 0});
  const auto& alg = ctx->algebra();
  for (const auto& ki : ctx->basis())
    for (const auto& kj : ctx->basis()) {
      CyclotomicElement bi = CyclotomicElement::basis_element(ctx, ki);
      CyclotomicElement bj = CyclotomicElement::basis_element(ctx, kj);
      int pi = alg->parity(ki.a[0]), pj = alg->parity(kj.a[0]);
      Scalar sign = (pi && pj) ? Scalar(-1) : Scalar(1);
      CHECK(trace_f(mul_cyclo(bi, bj)) == sign * trace_f(mul_cyclo(bj, bi)));
    }
}

TEST_CASE("unitriangular pairing against inverted-exponent duals") {
  // index the basis by the exponent vector first (position n most
  // significant), then the permutation; pair T_{w^{-1}} X^{-lambda} against
  // X^mu b T_v. The matrix comes out lower unitriangular in that order.
  auto ctx = quotient("trivial", 2, Scalar(1), {-1, 0});
  const auto& ac = ctx->affine();
  auto dual_of = [&](const AffineKey& k) {
    CyclotomicElement e = reduce(ctx, AffineElement::basis_t(ac, k.w.inverse()));
    for (int i = 1; i <= 2; ++i)
      for (int rep = 0; rep < k.lam[i - 1]; ++rep) e = mul_cyclo(e, invert_x(ctx, i));
    return e;  // trivial A: a^v = 1
  };
  std::vector<AffineKey> order = ctx->basis();
  std::sort(order.begin(), order.end(), [](const AffineKey& x, const AffineKey& y) {
    if (x.lam != y.lam) return exponent_less(x.lam, y.lam);
    if (!(x.w == y.w)) return x.w < y.w;
    return x.a < y.a;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    CyclotomicElement di = dual_of(order[i]);
    for (std::size_t j = 0; j < order.size(); ++j) {
      Scalar pairing =
          trace_f(mul_cyclo(di, CyclotomicElement::basis_element(ctx, order[j])));
      if (i == j) CHECK(pairing == Scalar(1));
      if (j > i) CHECK(pairing == Scalar(0));
    }
  }
}

TEST_CASE("free module decomposition over the smaller quotient") {
  auto ctx = quotient("trivial", 2, Scalar(1), {-1, 0});
  // x = 1 decomposes as the (j = n, r = 0, unit) generator times 1
  auto parts = right_module_decompose(CyclotomicElement::unit(ctx));
  REQUIRE(parts.size() == 1);
  auto it = parts.begin();
  CHECK(it->first.j == 2);
  CHECK(it->first.r == 0);
  CHECK(it->first.a == 0);
  CHECK(it->second == CyclotomicElement::unit(ctx->sub_context()));

  // x = T_n sits at (j = n, ..., wait: T_1 = X_1^0 unit T_1)
  auto parts_t = right_module_decompose(reduce(ctx, T(ctx->affine(), 1)));
  REQUIRE(parts_t.size() == 1);
  CHECK(parts_t.begin()->first.j == 1);
  CHECK(parts_t.begin()->first.r == 0);
  CHECK(parts_t.begin()->second == CyclotomicElement::unit(ctx->sub_context()));

  // x = X_{n+1} h for h in the small algebra lands at (j = n+1, r = 1)
  auto sub = ctx->sub_context();
  CyclotomicElement h = reduce(sub, X(sub->affine(), 1, 1));
  CyclotomicElement xh = mul_cyclo(reduce(ctx, X(ctx->affine(), 2, 1)), embed_from_sub(ctx, h));
  auto parts_x = right_module_decompose(xh);
  REQUIRE(parts_x.size() == 1);
  CHECK(parts_x.begin()->first.j == 2);
  CHECK(parts_x.begin()->first.r == 1);
  CHECK(parts_x.begin()->second == h);

  // reconstruction: x = sum u_{j,r,a} h_{j,r,a} on random elements
  ElementGen gen(149);
  for (int rep = 0; rep < 6; ++rep) {
    auto k = ctx->basis()[gen.next(ctx->basis().size())];
    CyclotomicElement x = CyclotomicElement::basis_element(ctx, k);
    CyclotomicElement back = CyclotomicElement::zero(ctx);
    for (const auto& [l, hh] : right_module_decompose(x)) {
      CyclotomicElement gen_elt(ctx, ctx->decomposition_generator(l));
      back = back + mul_cyclo(gen_elt, embed_from_sub(ctx, hh));
    }
    CHECK(back == x);
  }
}

TEST_CASE("partial trace: frozen values and bimodule property") {
  auto ctx = quotient("trivial", 2, Scalar(1), {-1, 0});
  auto sub = ctx->sub_context();
  CHECK(partial_trace(CyclotomicElement::unit(ctx)) == CyclotomicElement::unit(sub));
  CHECK(partial_trace(reduce(ctx, T(ctx->affine(), 1))).is_zero());

  auto ctxd = quotient("dual", 2, Scalar(2, 3), {-1, 0});
  auto subd = ctxd->sub_context();
  // c in the last slot traces to 1
  CyclotomicElement clast = reduce(
      ctxd, AffineElement::from_tensor(
                ctxd->affine(), TensorElement::basis_atom(ctxd->algebra(), 2, 2, 1)));
  CHECK(partial_trace(clast) == CyclotomicElement::unit(subd));

  // h x h' compatibility on random pairs
  ElementGen gen(151);
  for (int rep = 0; rep < 5; ++rep) {
    auto kx = ctxd->basis()[gen.next(ctxd->basis().size())];
    auto kh = subd->basis()[gen.next(subd->basis().size())];
    auto kh2 = subd->basis()[gen.next(subd->basis().size())];
    CyclotomicElement x = CyclotomicElement::basis_element(ctxd, kx);
    CyclotomicElement h = CyclotomicElement::basis_element(subd, kh);
    CyclotomicElement h2 = CyclotomicElement::basis_element(subd, kh2);
    CyclotomicElement lhs =
        partial_trace(mul_cyclo(mul_cyclo(embed_from_sub(ctxd, h), x), embed_from_sub(ctxd, h2)));
    CyclotomicElement rhs = mul_cyclo(mul_cyclo(h, partial_trace(x)), h2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("trace tower: tr_f^{n+1} = tr_f^n after the partial trace") {
  for (int big_n : {2, 3}) {
    auto ctx = quotient("trivial", big_n, Scalar(1), {-1, 0});
    for (const auto& k : ctx->basis()) {
      CyclotomicElement x = CyclotomicElement::basis_element(ctx, k);
      CHECK(trace_f(x) == trace_f(partial_trace(x)));
    }
  }
}

TEST_CASE("dimension identity for the induction-restriction decomposition") {
  for (const char* preset : {"trivial", "dual"}) {
    for (int n : {1, 2}) {
      auto big = quotient(preset, n + 1, Scalar(1), {-1, 0});
      auto mid = quotient(preset, n, Scalar(1), {-1, 0});
      long long dim_small = 1;
      if (n >= 2) dim_small = quotient(preset, n - 1, Scalar(1), {-1, 0})->dimension();
      long long d = 2, m = mid->algebra()->dim();
      long long lhs = d * m * mid->dimension() +
                      mid->dimension() * mid->dimension() / dim_small;
      CHECK(lhs == big->dimension());
    }
  }
}

TEST_CASE("level one quotients collapse onto the finite algebra") {
  for (const char* preset : {"trivial", "kc2"}) {
    for (long long a : {-1, 1}) {  // f = X - 1 and f = X + 1
      auto ctx = quotient(preset, 2, Scalar(2, 3), {a});
      auto report = level_one_check(ctx);
      for (const auto& entry : report) {
        INFO(preset << " f=X" << (a > 0 ? "+" : "") << a << " " << entry.name);
        CHECK(entry.pass);
      }
    }
  }
  // frozen: f = X - 1 over trivial, reduce(X_2) = z T_1 + 1 = J_2
  auto ctx = quotient("trivial", 2, Scalar(2, 3), {-1});
  AffineElement expect = Scalar(2, 3) * T(ctx->affine(), 1) + AffineElement::unit(ctx->affine());
  CHECK(reduce(ctx, X(ctx->affine(), 2, 1)).rep() == expect);
  CHECK(expect == jucys_murphy(ctx->affine(), 2));
}
