#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "qawa/cyclotomic.hpp"
#include "qawa/random_elements.hpp"
#include "qawa/relations.hpp"

namespace qawa {

struct SuiteEntry {
  std::string suite;
  std::string name;
  std::vector<int> indices;
  bool pass = false;
  int difference_term_count = 0;
};

namespace suites {

inline void push(std::vector<SuiteEntry>& out, std::string suite, std::string name,
                 std::vector<int> idx, bool pass, int diff = 0) {
  out.push_back({std::move(suite), std::move(name), std::move(idx), pass, pass ? 0 : diff});
}

inline void push_eq(std::vector<SuiteEntry>& out, std::string suite, std::string name,
                    std::vector<int> idx, const AffineElement& lhs, const AffineElement& rhs) {
  AffineElement diff = lhs - rhs;
  push(out, std::move(suite), std::move(name), std::move(idx), diff.is_zero(),
       static_cast<int>(diff.terms().size()));
}

inline std::vector<SuiteEntry> relations(const AffineContextPtr& ctx) {
  std::vector<SuiteEntry> out;
  for (const auto& r : check_defining_relations(ctx))
    push(out, "relations", r.relation, r.indices, r.pass, r.difference_term_count);
  if (ctx->z().is_zero()) {
    // wreath-product degeneration: the quadratic relation collapses to T_i^2 = 1
    for (int i = 1; i < ctx->n(); ++i) {
      AffineElement t = AffineElement::generator_t(ctx, i);
      push_eq(out, "relations", "wreath_degeneration_t_squared", {i}, mul_affine(t, t),
              AffineElement::unit(ctx));
    }
  }
  return out;
}

inline std::vector<SuiteEntry> demazure(const AlgebraPtr& alg, int n, std::uint64_t seed,
                                        int count) {
  std::vector<SuiteEntry> out;
  ElementGen gen(seed);
  auto xonly = LaurentElement::ActMode::x_only;
  auto diag = LaurentElement::ActMode::diagonal;
  int fail_leibniz = 0, fail_idem = 0, fail_far = 0, fail_braid = 0, fail_twist = 0,
      fail_twist2 = 0, fail_diagtwist = 0;
  for (int rep = 0; rep < count; ++rep) {
    LaurentElement f = gen.laurent(alg, n);
    LaurentElement g = gen.laurent(alg, n);
    for (int i = 1; i < n; ++i) {
      Permutation si = Permutation::simple(n, i);
      LaurentElement ratio = mul_poly(LaurentElement::monomial_x(alg, n, i, 1),
                                      LaurentElement::monomial_x(alg, n, i + 1, -1));
      if (!(mul_poly(f, g).demazure(i) ==
            mul_poly(f.demazure(i), g) + mul_poly(f.act(si, xonly), g.demazure(i))))
        ++fail_leibniz;
      if (!(f.demazure(i).demazure(i) == f.demazure(i))) ++fail_idem;
      if (!(f.act(si, xonly).demazure(i) == Scalar(-1) * f.demazure(i))) ++fail_twist;
      if (!(f.demazure(i).act(si, xonly) == mul_poly(ratio, f.demazure(i)))) ++fail_twist2;
      if (!(f.demazure(i).act(si, diag) ==
            Scalar(-1) * mul_poly(ratio, f.act(si, diag).demazure(i))))
        ++fail_diagtwist;
    }
    if (n >= 3 &&
        !(f.demazure(2).demazure(1).demazure(2) == f.demazure(1).demazure(2).demazure(1)))
      ++fail_braid;
    if (n >= 4 && !(f.demazure(3).demazure(1) == f.demazure(1).demazure(3))) ++fail_far;
  }
  push(out, "demazure", "leibniz", {count}, fail_leibniz == 0, fail_leibniz);
  push(out, "demazure", "idempotence", {count}, fail_idem == 0, fail_idem);
  push(out, "demazure", "twist_xonly", {count}, fail_twist == 0, fail_twist);
  push(out, "demazure", "twist_ratio", {count}, fail_twist2 == 0, fail_twist2);
  push(out, "demazure", "twist_diagonal", {count}, fail_diagtwist == 0, fail_diagtwist);
  if (n >= 3) push(out, "demazure", "braid", {count}, fail_braid == 0, fail_braid);
  if (n >= 4) push(out, "demazure", "far_commutation", {count}, fail_far == 0, fail_far);
  return out;
}

inline std::vector<SuiteEntry> basis_round_trip(const AffineContextPtr& ctx, std::uint64_t seed,
                                                int count) {
  std::vector<SuiteEntry> out;
  ElementGen gen(seed);
  int fail = 0;
  for (int rep = 0; rep < count; ++rep) {
    AffineElement x = gen.affine(ctx);
    if (!(from_right_normal_form(ctx, to_right_normal_form(x)) == x)) ++fail;
  }
  push(out, "basis", "left_right_round_trip", {count}, fail == 0, fail);
  return out;
}

inline std::vector<SuiteEntry> center(const AffineContextPtr& ctx, std::uint64_t seed,
                                      int count) {
  std::vector<SuiteEntry> out;
  ElementGen gen(seed);
  int fail_sym = 0, fail_nonsym = 0, nonsym_cases = 0;
  for (int rep = 0; rep < count; ++rep) {
    LaurentElement g = gen.central_laurent(ctx->algebra(), ctx->n());
    if (!is_central(make_central(ctx, g))) ++fail_sym;
    bool invariant = true;
    for (int i = 1; i < ctx->n(); ++i)
      if (!(g.act(Permutation::simple(ctx->n(), i), LaurentElement::ActMode::diagonal) == g))
        invariant = false;
    if (!invariant) {
      ++nonsym_cases;
      if (is_central(AffineElement::from_laurent(ctx, g))) ++fail_nonsym;
    }
  }
  push(out, "center", "symmetrized_is_central", {count}, fail_sym == 0, fail_sym);
  push(out, "center", "non_invariant_fails", {nonsym_cases}, fail_nonsym == 0, fail_nonsym);
  return out;
}

inline std::vector<SuiteEntry> jucys_murphy_suite(const AffineContextPtr& ctx,
                                                  std::uint64_t seed, int pairs) {
  std::vector<SuiteEntry> out;
  std::vector<AffineElement> jm;
  for (int i = 1; i <= ctx->n(); ++i) jm.push_back(jucys_murphy(ctx, i));
  bool commute = true;
  for (std::size_t i = 0; i < jm.size(); ++i)
    for (std::size_t j = i + 1; j < jm.size(); ++j)
      if (!(mul_affine(jm[i], jm[j]) == mul_affine(jm[j], jm[i]))) commute = false;
  push(out, "jucys_murphy", "pairwise_commute", {ctx->n()}, commute);

  ElementGen gen(seed);
  int fail = 0;
  for (int rep = 0; rep < pairs; ++rep) {
    AffineElement a = gen.affine(ctx, 2), b = gen.affine(ctx, 2);
    if (!(eval_jm(mul_affine(a, b)) == mul_affine(eval_jm(a), eval_jm(b)))) ++fail;
  }
  push(out, "jucys_murphy", "evaluation_multiplicative", {pairs}, fail == 0, fail);
  return out;
}

inline std::vector<SuiteEntry> cyclotomic_dimension(const CyclotomicContextPtr& ctx) {
  std::vector<SuiteEntry> out;
  long long expect = 1;
  for (int i = 1; i <= ctx->n(); ++i)
    expect *= static_cast<long long>(ctx->d()) * ctx->algebra()->dim() * i;
  bool count_ok = static_cast<long long>(ctx->basis().size()) == expect;
  push(out, "cyclotomic", "dimension_count", {ctx->n(), ctx->d()}, count_ok);
  bool fixed = true;
  for (const auto& k : ctx->basis()) {
    AffineElement e(ctx->affine());
    e.add_term(k, Scalar(1));
    if (!(ctx->reduce_affine(e) == e)) fixed = false;
  }
  push(out, "cyclotomic", "basis_reduced_forms_independent", {ctx->n(), ctx->d()}, fixed);
  return out;
}

inline std::vector<SuiteEntry> trace_form(const CyclotomicContextPtr& ctx) {
  std::vector<SuiteEntry> out;
  const auto& alg = ctx->algebra();
  bool supersym = true;
  const auto& basis = ctx->basis();
  std::vector<CyclotomicElement> elems;
  for (const auto& k : basis) elems.push_back(CyclotomicElement::basis_element(ctx, k));
  auto parity_of = [&](const AffineKey& k) {
    int p = 0;
    for (auto b : k.a) p ^= alg->parity(b);
    return p;
  };
  Matrix g(basis.size(), std::vector<Scalar>(basis.size(), Scalar(0)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      g[i][j] = trace_f(mul_cyclo(elems[i], elems[j]));
      if (j < i) {
        Scalar sign =
            (parity_of(basis[i]) && parity_of(basis[j])) ? Scalar(-1) : Scalar(1);
        if (g[i][j] != sign * g[j][i]) supersym = false;
      }
    }
  push(out, "trace_form", "supersymmetric", {ctx->n(), ctx->d()}, supersym);
  push(out, "trace_form", "gram_invertible", {ctx->n(), ctx->d()}, invert(g).has_value());
  return out;
}

inline std::vector<SuiteEntry> frobenius_tower(const CyclotomicContextPtr& ctx) {
  std::vector<SuiteEntry> out;
  bool ok = true;
  for (const auto& k : ctx->basis()) {
    CyclotomicElement x = CyclotomicElement::basis_element(ctx, k);
    if (!(trace_f(x) == trace_f(partial_trace(x)))) ok = false;
  }
  push(out, "frobenius", "trace_tower", {ctx->n()}, ok);
  return out;
}

inline std::vector<SuiteEntry> mackey_dimensions(const AlgebraPtr& alg, const Scalar& z,
                                                 const CyclotomicPoly& f, int max_n) {
  std::vector<SuiteEntry> out;
  auto dim_at = [&](int n) -> long long {
    long long dim = 1;
    for (int i = 1; i <= n; ++i) dim *= static_cast<long long>(f.d) * alg->dim() * i;
    return dim;
  };
  for (int n = 1; n <= max_n; ++n) {
    long long lhs = static_cast<long long>(f.d) * alg->dim() * dim_at(n) +
                    dim_at(n) * dim_at(n) / dim_at(n - 1);
    // dimensions verified against explicit basis enumeration
    auto big = CyclotomicContext::make(make_affine_context(alg, n + 1, z), f);
    bool enum_ok = static_cast<long long>(big->basis().size()) == dim_at(n + 1);
    push(out, "mackey", "dimension_identity", {n}, lhs == dim_at(n + 1) && enum_ok);
  }
  return out;
}

inline std::vector<SuiteEntry> level_one(const CyclotomicContextPtr& ctx) {
  std::vector<SuiteEntry> out;
  for (const auto& entry : level_one_check(ctx))
    push(out, "level_one", entry.name, {}, entry.pass);
  return out;
}

}  // namespace suites

struct SuiteConfig {
  AlgebraPtr algebra;
  int n = 2;
  Scalar z = Scalar(1);
  std::uint64_t seed = 0;
  int random_count = 40;
  bool has_f = false;
  CyclotomicPoly f;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  auto add = [&](std::vector<SuiteEntry> v) {
    for (auto& e : v) report.entries.push_back(std::move(e));
  };
  auto ctx = make_affine_context(cfg.algebra, cfg.n, cfg.z);
  add(suites::relations(ctx));
  add(suites::demazure(cfg.algebra, cfg.n, cfg.seed + 1, cfg.random_count));
  add(suites::basis_round_trip(ctx, cfg.seed + 2, cfg.random_count / 4 + 1));
  add(suites::center(ctx, cfg.seed + 3, cfg.random_count / 2 + 1));
  add(suites::jucys_murphy_suite(ctx, cfg.seed + 4, cfg.random_count / 2 + 1));
  if (cfg.has_f) {
    auto cctx = CyclotomicContext::make(ctx, cfg.f);
    add(suites::cyclotomic_dimension(cctx));
    add(suites::trace_form(cctx));
    if (cfg.n >= 2) add(suites::frobenius_tower(cctx));
    add(suites::mackey_dimensions(cfg.algebra, cfg.z, cfg.f, std::min(cfg.n, 2)));
    if (cfg.f.d == 1) add(suites::level_one(cctx));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const SuiteEntry& a, const SuiteEntry& b) {
              return std::tie(a.suite, a.name, a.indices) < std::tie(b.suite, b.name, b.indices);
            });
  return report;
}

}  // namespace qawa
