#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "ppv/error.hpp"
#include "ppv/param_scalar.hpp"

namespace ppv {

// Unqualified so that coefficient types declared later are found by argument-dependent lookup.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}

// Dense univariate polynomial over a field T; coefficient i multiplies x^i.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(T c) {  // NOLINT(google-explicit-constructor)
    if (!coeff_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(T c, int k) {
    std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& lead() const { return c_.back(); }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }
  std::vector<T>& mutable_coeffs() { return c_; }
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const T& s) const {
    if (coeff_is_zero(s)) return {};
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(r));
  }

  template <class U>
  U eval(const U& at) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + U(c_[i]);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return {};
    T inv = T(1) / lead();
    return scaled(inv);
  }

  Poly pow(unsigned n) const {
    Poly r(T(1)), b = *this;
    while (n > 0) {
      if (n & 1U) r *= b;
      n >>= 1U;
      if (n > 0) b = b * b;
    }
    return r;
  }

  // Substitute x -> x + s.
  Poly taylor_shift(const T& s) const {
    Poly lin(std::vector<T>{s, T(1)});
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(c_[i]);
    return acc;
  }

  // x^deg * p(1/x) with deg = degree().
  Poly reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

 private:
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
  const auto& bc = b.coeffs();
  bool monic = bc.back() == T(1);
  T inv = monic ? T(1) : T(1) / bc.back();
  int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    T f = r[k + db];
    if (is_zero(f)) continue;
    if (!monic) f *= inv;
    for (int i = 0; i <= db; ++i) {
      if (!is_zero(bc[i])) r[k + i] -= f * bc[i];
    }
    q[k] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) raise(ErrorKind::Verification, "inexact univariate division");
  return q;
}

// Monic gcd by Euclid's algorithm.
template <class T>
Poly<T> euclid_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly<ParamScalar> gcd(const Poly<ParamScalar>& a, const Poly<ParamScalar>& b);
Poly<mpq_class> gcd(const Poly<mpq_class>& a, const Poly<mpq_class>& b);

template <class T>
struct ExtendedGcd {
  Poly<T> g, s, t;  // s*a + t*b = g, g monic
};

template <class T>
ExtendedGcd<T> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Inverse of a modulo m (gcd must be 1).
template <class T>
Poly<T> inverse_mod(const Poly<T>& a, const Poly<T>& m) {
  auto e = extended_gcd(a % m, m);
  if (e.g.degree() != 0) raise(ErrorKind::NonInvertible, "polynomial not invertible modulo");
  return e.s % m;
}

// Square-free decomposition: a = lc * prod f_i^i, returned as (f_i, i) with deg f_i > 0.
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_factorization(const Poly<T>& a) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (a.degree() <= 0) return out;
  Poly<T> f = a.monic();
  Poly<T> d = f.derivative();
  Poly<T> g = gcd(f, d);
  Poly<T> b = exact_div(f, g);
  Poly<T> c = exact_div(d, g);
  // Yun
  Poly<T> db = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<T> h = gcd(b, db);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = exact_div(b, h);
    c = exact_div(db, h);
    db = c - b.derivative();
    ++i;
  }
  return out;
}

template <class T>
Poly<T> squarefree_part(const Poly<T>& a) {
  if (a.degree() <= 0) return Poly<T>(T(1));
  return exact_div(a.monic(), gcd(a, a.derivative()));
}

template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero() || b.is_zero()) return T(0);
  T result(1);
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      T p(1);
      for (int i = 0; i < da; ++i) p *= b.lead();
      return result * p;
    }
    if (da < db) {
      if ((da * db) % 2 != 0) result = -result;
      std::swap(a, b);
      continue;
    }
    Poly<T> r = a % b;
    if (r.is_zero()) return T(0);
    int dr = r.degree();
    if ((da * db) % 2 != 0) result = -result;
    for (int i = 0; i < da - dr; ++i) result *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace ppv
