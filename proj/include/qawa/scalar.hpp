#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qawa {

// Exact rational number. Always stored canonical: gcd(num, den) = 1, den > 0.
class Scalar {
public:
  Scalar() { mpq_init(q_); }

  Scalar(long long n) {
    mpq_init(q_);
    set_int(n);
  }

  Scalar(long long num, long long den) {
    mpq_init(q_);
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    mpz_set_sll(mpq_numref(q_), num);
    mpz_set_sll(mpq_denref(q_), den);
    mpq_canonicalize(q_);
  }

  Scalar(const Scalar& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Scalar(Scalar&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Scalar& operator=(const Scalar& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Scalar& operator=(Scalar&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }

  ~Scalar() { mpq_clear(q_); }

  // Accepts "p" or "p/q" with optional leading '-'. Rejects everything else,
  // including zero denominators.
  static Scalar parse(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("Scalar: cannot parse '" + s + "'"); };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_digits = [&](const std::string& t, bool sign_ok) {
      std::size_t i = 0;
      if (sign_ok && i < t.size() && t[i] == '-') ++i;
      if (i >= t.size()) bad();
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') bad();
    };
    check_digits(num, true);
    check_digits(den, false);
    Scalar r;
    if (mpz_set_str(mpq_numref(r.q_), num.c_str(), 10) != 0) bad();
    if (mpz_set_str(mpq_denref(r.q_), den.c_str(), 10) != 0) bad();
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
      throw std::invalid_argument("Scalar: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
  }

  std::string str() const {
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string out(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, out.size() + 1);
    return out;
  }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
  int sgn() const { return mpq_sgn(q_); }

  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  // Valid only when the value fits a signed long; fine at desk scale.
  long long to_int() const {
    if (!is_integer()) throw std::domain_error("Scalar: not an integer");
    if (!mpz_fits_slong_p(mpq_numref(q_))) throw std::domain_error("Scalar: integer overflow");
    return mpz_get_si(mpq_numref(q_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Scalar operator-() const {
    Scalar r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar r;
    mpq_inv(r.q_, q_);
    return r;
  }

  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base(*this);
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

private:
  static void mpz_set_sll(mpz_t z, long long v) {
    if (v >= 0) {
      mpz_import(z, 1, 1, sizeof(v), 0, 0, &v);
    } else {
      unsigned long long mag = 0ULL - static_cast<unsigned long long>(v);
      mpz_import(z, 1, 1, sizeof(mag), 0, 0, &mag);
      mpz_neg(z, z);
    }
  }

  void set_int(long long v) {
    mpz_set_sll(mpq_numref(q_), v);
    mpz_set_ui(mpq_denref(q_), 1);
  }

  mpq_t q_;
};

}  // namespace qawa
