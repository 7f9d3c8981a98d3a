#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qawa/affine.hpp"
#include "qawa/linalg.hpp"

namespace qawa {

// Monic polynomial f = X^d + a_{(d-1)} X^{d-1} + ... + a_{(0)} with even
// central coefficients and invertible constant term.
struct CyclotomicPoly {
  int d = 0;
  std::vector<AVec> coeffs;  // a_{(0)}, ..., a_{(d-1)}
};

inline std::vector<std::string> validate_cyclotomic_poly(const AlgebraPtr& alg,
                                                         const CyclotomicPoly& f) {
  std::vector<std::string> bad;
  if (f.d < 1 || static_cast<int>(f.coeffs.size()) != f.d) return {"malformed"};
  for (const auto& c : f.coeffs)
    if (static_cast<int>(c.size()) != alg->dim()) return {"malformed"};
  for (const auto& c : f.coeffs)
    if (!alg->in_center_even(c)) {
      bad.push_back("coefficient-outside-even-center");
      break;
    }
  if (!alg->try_invert(f.coeffs[0])) bad.push_back("constant-term-not-invertible");
  return bad;
}

class CyclotomicContext;
using CyclotomicContextPtr = std::shared_ptr<const CyclotomicContext>;

class CyclotomicElement;

// Context for one quotient H_n^f(A,z): caches the f_i in normal form, the
// rewriting elements r_i = X_i^d - f_i, the inverses of the X_i, and (lazily)
// the free-module decomposition data over H_{n-1}^f.
class CyclotomicContext {
public:
  static CyclotomicContextPtr make(AffineContextPtr actx, CyclotomicPoly f) {
    auto bad = validate_cyclotomic_poly(actx->algebra(), f);
    if (!bad.empty())
      throw std::invalid_argument("cyclotomic polynomial rejected: " + bad.front());
    auto ctx = CyclotomicContextPtr(new CyclotomicContext(std::move(actx), std::move(f)));
    return ctx;
  }

  const AffineContextPtr& affine() const { return actx_; }
  const AlgebraPtr& algebra() const { return actx_->algebra(); }
  int n() const { return actx_->n(); }
  int d() const { return f_.d; }
  const CyclotomicPoly& poly() const { return f_; }

  // f_i = T_{i-1} ... T_1 f T_1 ... T_{i-1}, 1 <= i <= n.
  const AffineElement& f_element(int i) const { return f_elem_.at(i - 1); }
  // r_i = X_i^d - f_i; every exponent lies in [0, d).
  const AffineElement& rewriter(int i) const { return rewrite_.at(i - 1); }
  // X_i^{-1} in the quotient, as a reduced representative.
  const AffineElement& x_inverse(int i) const { return x_inv_.at(i - 1); }

  long long dimension() const {
    long long dim = 1;
    for (int i = 1; i <= n(); ++i) dim *= static_cast<long long>(f_.d) * algebra()->dim() * i;
    return dim;
  }

  const std::vector<AffineKey>& basis() const { return basis_; }
  int basis_index(const AffineKey& k) const {
    auto it = basis_index_.find(k);
    if (it == basis_index_.end())
      throw std::logic_error("basis_index: key is not a reduced basis element");
    return it->second;
  }

  std::vector<Scalar> coordinates(const AffineElement& reduced) const {
    std::vector<Scalar> v(basis_.size(), Scalar(0));
    for (const auto& [k, c] : reduced.terms()) v[basis_index(k)] = c;
    return v;
  }

  struct DecompLabel {
    int j;        // 1..n
    int r;        // 0..d-1
    int a;        // basis index
    friend bool operator<(const DecompLabel& x, const DecompLabel& y) {
      return std::tie(x.j, x.r, x.a) < std::tie(y.j, y.r, y.a);
    }
  };

  // Context for H_{n-1}^f (n >= 2).
  const CyclotomicContextPtr& sub_context() const {
    ensure_decomposition();
    return sub_;
  }
  const std::vector<DecompLabel>& decomposition_labels() const {
    ensure_decomposition();
    return labels_;
  }
  const Matrix& decomposition_inverse() const {
    ensure_decomposition();
    return decomp_inv_;
  }
  // the module generator X_j^r a_j T_j ... T_{n-1} as a reduced representative
  const AffineElement& decomposition_generator(const DecompLabel& l) const {
    ensure_decomposition();
    return gens_.at(label_index(l));
  }
  int label_index(const DecompLabel& l) const {
    int dm = f_.d * algebra()->dim();
    return (l.j - 1) * dm + l.r * algebra()->dim() + l.a;
  }

private:
  CyclotomicContext(AffineContextPtr actx, CyclotomicPoly f)
      : actx_(std::move(actx)), f_(std::move(f)) {
    build_f_elements();
    // r_i T_w products drive every substitution step; precompute them all
    for (int i = 1; i <= n(); ++i)
      for (const auto& w : all_permutations(n()))
        rw_products_.emplace(std::make_pair(i, w),
                             mul_affine(rewrite_[i - 1], AffineElement::basis_t(actx_, w)));
    build_x_inverses();
    build_basis();
  }

  LaurentElement f_as_laurent() const {
    const auto& alg = algebra();
    const int n = actx_->n();
    LaurentElement out = LaurentElement::monomial_x(alg, n, 1, f_.d);
    for (int m = 0; m < f_.d; ++m) {
      std::vector<int> lam(n, 0);
      lam[0] = m;
      out = out + LaurentElement::from_tensor_monomial(
                      TensorElement::atom(alg, n, 1, f_.coeffs[m]), lam);
    }
    return out;
  }

  void build_f_elements() {
    AffineElement fi = AffineElement::from_laurent(actx_, f_as_laurent());
    f_elem_.push_back(fi);
    for (int i = 2; i <= n(); ++i) {
      AffineElement t = AffineElement::generator_t(actx_, i - 1);
      fi = mul_affine(t, mul_affine(fi, t));
      f_elem_.push_back(fi);
    }
    for (int i = 1; i <= n(); ++i) {
      AffineElement r = AffineElement::generator_x(actx_, i, f_.d) - f_elem_[i - 1];
      for (const auto& [k, c] : r.terms())
        for (int e : k.lam)
          if (e < 0 || e >= f_.d)
            throw std::logic_error("rewriter exponent out of range");
      rewrite_.push_back(std::move(r));
    }
  }

  void build_x_inverses() {
    const auto& alg = algebra();
    const int nn = n();
    AVec a0inv = alg->invert_element(f_.coeffs[0]);
    for (auto& c : a0inv) c = -c;
    // X_1^{-1} = -a0^{-1} (X_1^{d-1} + a_{(d-1)} X_1^{d-2} + ... + a_{(1)})
    LaurentElement body = LaurentElement::monomial_x(alg, nn, 1, f_.d - 1);
    for (int m = 1; m < f_.d; ++m) {
      std::vector<int> lam(nn, 0);
      lam[0] = m - 1;
      body = body + LaurentElement::from_tensor_monomial(
                        TensorElement::atom(alg, nn, 1, f_.coeffs[m]), lam);
    }
    LaurentElement neg_a0 = LaurentElement::from_tensor(TensorElement::atom(alg, nn, 1, a0inv));
    AffineElement cur = reduce_affine(AffineElement::from_laurent(actx_, mul_poly(neg_a0, body)));
    x_inv_.push_back(cur);
    for (int i = 1; i < nn; ++i) {
      AffineElement tinv = AffineElement::generator_t_inv(actx_, i);
      cur = reduce_affine(mul_affine(tinv, mul_affine(cur, tinv)));
      x_inv_.push_back(cur);
    }
  }

  void build_basis() {
    const auto& alg = algebra();
    const int nn = n();
    std::vector<std::vector<int>> lams{{}};
    for (int i = 0; i < nn; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& l : lams)
        for (int e = 0; e < f_.d; ++e) {
          auto l2 = l;
          l2.push_back(e);
          next.push_back(std::move(l2));
        }
      lams = std::move(next);
    }
    std::vector<BasisTuple> tuples{BasisTuple{}};
    for (int i = 0; i < nn; ++i) {
      std::vector<BasisTuple> next;
      for (const auto& t : tuples)
        for (int k = 0; k < alg->dim(); ++k) {
          auto t2 = t;
          t2.push_back(static_cast<std::uint8_t>(k));
          next.push_back(std::move(t2));
        }
      tuples = std::move(next);
    }
    std::map<AffineKey, int> ordered;
    for (const auto& w : all_permutations(nn))
      for (const auto& l : lams)
        for (const auto& t : tuples) ordered.emplace(AffineKey{t, l, w}, 0);
    for (auto& [k, idx] : ordered) {
      idx = static_cast<int>(basis_.size());
      basis_.push_back(k);
      basis_index_.emplace(k, idx);
    }
  }

public:
  static constexpr long long kReduceBudget = 1000000;

  // Substitute X_i^d -> r_i on the lexicographically largest offending term
  // (position n most significant, largest index first) until every exponent
  // is < d. Each substitution is strictly decreasing in that order.
  AffineElement reduce_affine(const AffineElement& x) const {
    if (x.has_negative_exponent())
      throw std::invalid_argument("reduce: negative exponents; clear them with invert_X first");
    AffineElement cur = x;
    long long budget = kReduceBudget;
    for (;;) {
      const AffineKey* worst = nullptr;
      for (const auto& [k, c] : cur.terms()) {
        bool offending = false;
        for (int e : k.lam)
          if (e >= f_.d) offending = true;
        if (!offending) continue;
        if (!worst || exponent_less(worst->lam, k.lam)) worst = &k;
      }
      if (!worst) break;
      if (budget-- <= 0) throw std::runtime_error("reduce: step budget exceeded");
      AffineKey key = *worst;
      Scalar coeff = cur.terms().at(key);
      int i = 0;
      for (int s = n(); s >= 1; --s)
        if (key.lam[s - 1] >= f_.d) {
          i = s;
          break;
        }
      cur.add_term(key, -coeff);
      std::vector<int> rest = key.lam;
      rest[i - 1] -= f_.d;
      LaurentElement left = LaurentElement::from_tensor_monomial(
          TensorElement::from_tuple(algebra(), n(), key.a, coeff), rest);
      cur = cur + apply_laurent(left, rw_products_.at({i, key.w}));
    }
    return cur;
  }

private:
  AffineContextPtr actx_;
  CyclotomicPoly f_;
  std::vector<AffineElement> f_elem_;
  std::vector<AffineElement> rewrite_;
  std::vector<AffineElement> x_inv_;
  std::vector<AffineKey> basis_;
  std::map<AffineKey, int> basis_index_;
  std::map<std::pair<int, Permutation>, AffineElement> rw_products_;

  // free right-module data over H_{n-1}^f, built on first use
  void ensure_decomposition() const;
  mutable std::once_flag decomp_once_;
  mutable CyclotomicContextPtr sub_;
  mutable std::vector<DecompLabel> labels_;
  mutable std::vector<AffineElement> gens_;
  mutable Matrix decomp_inv_;
};

// Element of H_n^f(A,z): the unique representative with all exponents in
// [0, d), stored as an affine normal form plus its context.
class CyclotomicElement {
public:
  CyclotomicElement() = default;
  CyclotomicElement(CyclotomicContextPtr ctx, AffineElement rep)
      : ctx_(std::move(ctx)), rep_(std::move(rep)) {
    for (const auto& [k, c] : rep_.terms())
      for (int e : k.lam)
        if (e < 0 || e >= ctx_->d())
          throw std::invalid_argument("CyclotomicElement: exponent out of range");
  }

  static CyclotomicElement zero(const CyclotomicContextPtr& ctx) {
    return CyclotomicElement(ctx, AffineElement::zero(ctx->affine()));
  }
  static CyclotomicElement unit(const CyclotomicContextPtr& ctx) {
    return CyclotomicElement(ctx, AffineElement::unit(ctx->affine()));
  }
  static CyclotomicElement basis_element(const CyclotomicContextPtr& ctx, const AffineKey& k) {
    AffineElement rep(ctx->affine());
    rep.add_term(k, Scalar(1));
    return CyclotomicElement(ctx, rep);
  }

  const CyclotomicContextPtr& context() const { return ctx_; }
  const AffineElement& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_compatible(b);
    return CyclotomicElement(a.ctx_, a.rep_ + b.rep_);
  }
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.check_compatible(b);
    return CyclotomicElement(a.ctx_, a.rep_ - b.rep_);
  }
  friend CyclotomicElement operator*(const Scalar& c, const CyclotomicElement& a) {
    return CyclotomicElement(a.ctx_, c * a.rep_);
  }
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) {
    return !(a == b);
  }

private:
  void check_compatible(const CyclotomicElement& o) const {
    if (ctx_.get() != o.ctx_.get())
      throw std::invalid_argument("CyclotomicElement: incompatible contexts");
  }

  CyclotomicContextPtr ctx_;
  AffineElement rep_;
};

inline CyclotomicElement reduce(const CyclotomicContextPtr& ctx, const AffineElement& x) {
  return CyclotomicElement(ctx, ctx->reduce_affine(x));
}

inline CyclotomicElement mul_cyclo(const CyclotomicElement& x, const CyclotomicElement& y) {
  if (x.context().get() != y.context().get())
    throw std::invalid_argument("mul_cyclo: incompatible contexts");
  return reduce(x.context(), mul_affine(x.rep(), y.rep()));
}

inline CyclotomicElement invert_x(const CyclotomicContextPtr& ctx, int i) {
  if (i < 1 || i > ctx->n()) throw std::out_of_range("invert_x: index out of range");
  return CyclotomicElement(ctx, ctx->x_inverse(i));
}

// tr_f: picks the coefficient of terms with lambda = 0, w = 1 and applies the
// tensor trace.
inline Scalar trace_f(const CyclotomicElement& x) {
  Scalar s(0);
  const auto& alg = x.context()->algebra();
  for (const auto& [k, c] : x.rep().terms()) {
    if (!k.w.is_identity()) continue;
    bool zero_lam = true;
    for (int e : k.lam) zero_lam &= (e == 0);
    if (!zero_lam) continue;
    Scalar p = c;
    for (auto b : k.a) {
      p *= alg->trace_basis(b);
      if (p.is_zero()) break;
    }
    s += p;
  }
  return s;
}

struct GramData {
  std::vector<AffineKey> basis;
  Matrix gram;
  Matrix dual;  // inverse of gram
};

inline GramData gram(const CyclotomicContextPtr& ctx) {
  const auto& basis = ctx->basis();
  const std::size_t dim = basis.size();
  std::vector<CyclotomicElement> elems;
  elems.reserve(dim);
  for (const auto& k : basis) elems.push_back(CyclotomicElement::basis_element(ctx, k));
  Matrix g(dim, std::vector<Scalar>(dim, Scalar(0)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g[i][j] = trace_f(mul_cyclo(elems[i], elems[j]));
  auto inv = invert(g);
  if (!inv) throw std::runtime_error("gram: matrix is singular");
  return {basis, std::move(g), std::move(*inv)};
}

// Lift of one H_{n-1}^aff normal-form term into H_n^aff: unit in the new last
// slot, exponent 0, permutation fixing n.
inline AffineElement extend_term(const AffineContextPtr& big, const AffineKey& k,
                                 const Scalar& c) {
  const auto& alg = big->algebra();
  const int n = big->n();
  std::vector<int> lam = k.lam;
  lam.push_back(0);
  std::vector<int> img = k.w.images();
  img.push_back(n);
  Permutation w(img);
  BasisTuple base = k.a;
  base.push_back(0);
  TensorElement ext = mul_tensor(TensorElement::from_tuple(alg, n, base, c),
                                 TensorElement::atom(alg, n, n, alg->unit()));
  AffineElement out(big);
  for (const auto& [tup, c2] : ext.terms()) out.add_term({tup, lam, w}, c2);
  return out;
}

inline void CyclotomicContext::ensure_decomposition() const {
  std::call_once(decomp_once_, [this] {
    if (n() < 2) throw std::invalid_argument("decomposition requires n >= 2");
    const auto& alg = algebra();
    sub_ = CyclotomicContext::make(make_affine_context(alg, n() - 1, actx_->z()), f_);

    for (int j = 1; j <= n(); ++j)
      for (int r = 0; r < f_.d; ++r)
        for (int a = 0; a < alg->dim(); ++a) labels_.push_back({j, r, a});

    for (const auto& l : labels_) {
      AffineElement u = mul_affine(
          AffineElement::generator_x(actx_, l.j, l.r),
          AffineElement::from_tensor(actx_, TensorElement::basis_atom(alg, n(), l.j, l.a)));
      for (int t = l.j; t <= n() - 1; ++t)
        u = mul_affine(u, AffineElement::generator_t(actx_, t));
      gens_.push_back(reduce_affine(u));
    }

    // columns: X_j^r a_j T_j...T_{n-1} times each embedded H_{n-1}^f basis element
    const auto& sub_basis = sub_->basis();
    const std::size_t dim = basis_.size();
    Matrix m(dim, std::vector<Scalar>(dim, Scalar(0)));
    std::size_t col = 0;
    for (const auto& l : labels_) {
      const AffineElement& u = gens_[label_index(l)];
      for (const auto& bk : sub_basis) {
        AffineElement big = extend_term(actx_, bk, Scalar(1));
        std::vector<Scalar> coords = coordinates(reduce_affine(mul_affine(u, big)));
        for (std::size_t row = 0; row < dim; ++row) m[row][col] = coords[row];
        ++col;
      }
    }
    auto inv = invert(std::move(m));
    if (!inv) throw std::runtime_error("decomposition: change of basis is singular");
    decomp_inv_ = std::move(*inv);
  });
}

// Embeds an element of H_{n-1}^f into H_n^f (indices <= n-1 untouched).
inline CyclotomicElement embed_from_sub(const CyclotomicContextPtr& ctx,
                                        const CyclotomicElement& h) {
  AffineElement big(ctx->affine());
  for (const auto& [k, c] : h.rep().terms()) big = big + extend_term(ctx->affine(), k, c);
  return reduce(ctx, big);
}

// Unique coefficients h_{j,r,a} in H_{n-1}^f with
// x = sum X_j^r a_j T_j ... T_{n-1} h_{j,r,a}.
inline std::map<CyclotomicContext::DecompLabel, CyclotomicElement> right_module_decompose(
    const CyclotomicElement& x) {
  const auto& ctx = x.context();
  const auto& labels = ctx->decomposition_labels();
  const auto& sub = ctx->sub_context();
  const auto& sub_basis = sub->basis();
  std::vector<Scalar> sol = mat_vec(ctx->decomposition_inverse(), ctx->coordinates(x.rep()));
  std::map<CyclotomicContext::DecompLabel, CyclotomicElement> out;
  std::size_t col = 0;
  for (const auto& l : labels) {
    AffineElement rep(sub->affine());
    for (const auto& bk : sub_basis) {
      if (!sol[col].is_zero()) rep.add_term(bk, sol[col]);
      ++col;
    }
    if (!rep.is_zero()) out.emplace(l, CyclotomicElement(sub, std::move(rep)));
  }
  return out;
}

// Keep the (j = n, r = 0) block and contract a_n against the trace.
inline CyclotomicElement partial_trace(const CyclotomicElement& x) {
  const auto& ctx = x.context();
  const auto& alg = ctx->algebra();
  auto parts = right_module_decompose(x);
  CyclotomicElement out = CyclotomicElement::zero(ctx->sub_context());
  for (const auto& [l, h] : parts) {
    if (l.j != ctx->n() || l.r != 0) continue;
    Scalar t = alg->trace_basis(l.a);
    if (t.is_zero()) continue;
    out = out + (t * h);
  }
  return out;
}

struct LevelOneCheck {
  std::string name;
  bool pass;
};

// For d = 1 the quotient collapses onto H_n(A,z): the dimension matches and
// X_i reduces to the Jucys-Murphy image, up to the rescaling twist by the
// inverse of the constant coefficient.
inline std::vector<LevelOneCheck> level_one_check(const CyclotomicContextPtr& ctx) {
  std::vector<LevelOneCheck> out;
  if (ctx->d() != 1) {
    out.push_back({"level-one", false});
    return out;
  }
  const auto& alg = ctx->algebra();
  long long expect = 1;
  for (int i = 1; i <= ctx->n(); ++i) expect *= alg->dim() * i;
  out.push_back({"dimension-matches-finite-algebra",
                 ctx->dimension() == expect &&
                     static_cast<long long>(ctx->basis().size()) == expect});

  // scale = -a_{(0)}^{-1}; reduce(scale_i X_i) must equal J_i
  AVec scale = alg->invert_element(ctx->poly().coeffs[0]);
  for (auto& c : scale) c = -c;
  bool all = true;
  for (int i = 1; i <= ctx->n(); ++i) {
    AffineElement lhs_aff = apply_laurent(
        LaurentElement::from_tensor(TensorElement::atom(alg, ctx->n(), i, scale)),
        AffineElement::generator_x(ctx->affine(), i, 1));
    CyclotomicElement lhs = reduce(ctx, lhs_aff);
    AffineElement jm = jucys_murphy(ctx->affine(), i);
    CyclotomicElement rhs = reduce(ctx, jm);
    if (lhs != rhs) all = false;
  }
  out.push_back({"x-reduces-to-jucys-murphy", all});
  return out;
}

}  // namespace qawa
