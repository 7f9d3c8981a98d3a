#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qawa {

// Permutation of {1..n} in one-line notation: images[i-1] = w(i).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: images are not a bijection of {1..n}");
      seen[v - 1] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  // Simple transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("Permutation::simple: index out of range");
    Permutation w = identity(n);
    std::swap(w.img_[i - 1], w.img_[i]);
    return w;
  }

  static Permutation transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::out_of_range("Permutation::transposition: bad indices");
    Permutation w = identity(n);
    std::swap(w.img_[i - 1], w.img_[j - 1]);
    return w;
  }

  // Longest element w0(i) = n + 1 - i.
  static Permutation longest(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= n(); ++i) img[img_[i - 1] - 1] = i;
    Permutation w;
    w.img_ = std::move(img);
    return w;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

// (u ∘ v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(u.n());
  for (int i = 1; i <= u.n(); ++i) img[i - 1] = u(v(i));
  return Permutation(std::move(img));
}

// Coxeter length = number of inversions.
inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

// True iff l(s_i w) < l(w), equivalently w^{-1}(i) > w^{-1}(i+1).
inline bool left_descent(int i, const Permutation& w) {
  if (i < 1 || i >= w.n()) throw std::out_of_range("left_descent: index out of range");
  int pi = 0, pi1 = 0;
  for (int j = 1; j <= w.n(); ++j) {
    if (w(j) == i) pi = j;
    if (w(j) == i + 1) pi1 = j;
  }
  return pi > pi1;
}

// Deterministic reduced word: repeatedly move the largest misplaced value to
// its position by adjacent swaps. Returns [i_1..i_k] with w = s_{i_1}...s_{i_k}
// and k = length(w).
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> cur = w.images();
  const int n = static_cast<int>(cur.size());
  std::vector<int> swaps;
  for (int v = n; v >= 2; --v) {
    int p = 0;
    for (int j = 0; j < n; ++j)
      if (cur[j] == v) p = j + 1;
    while (p < v) {
      std::swap(cur[p - 1], cur[p]);
      swaps.push_back(p);
      ++p;
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

inline Permutation from_word(int n, const std::vector<int>& word) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = compose(w, Permutation::simple(n, i));
  return w;
}

// Position action on exponent vectors: result[w(i)-1] = lam[i-1].
inline std::vector<int> act_positions(const Permutation& w, const std::vector<int>& lam) {
  if (static_cast<int>(lam.size()) != w.n()) throw std::invalid_argument("act_positions: size mismatch");
  std::vector<int> out(lam.size());
  for (int i = 1; i <= w.n(); ++i) out[w(i) - 1] = lam[i - 1];
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace qawa
