#pragma once

#include <string>
#include <vector>

#include "ppv/upoly.hpp"

namespace ppv {

using PPoly = Poly<ParamScalar>;  // F0[x]

// Derivation of K = Q(t1..tm)(x): d/dx, d/dt_j (with d/dt_j x = 0), or sum_j c_j d/dt_j.
class Derivation {
 public:
  enum class Kind { MainX, Param, Combo };

  static Derivation main_x() { return Derivation(Kind::MainX, -1, {}); }
  static Derivation param(int index) { return Derivation(Kind::Param, index, {}); }
  static Derivation combo(std::vector<ParamScalar> coeffs) {
    return Derivation(Kind::Combo, -1, std::move(coeffs));
  }

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  const std::vector<ParamScalar>& coeffs() const { return coeffs_; }

  ParamScalar apply(const ParamScalar& c) const;

 private:
  Derivation(Kind k, int i, std::vector<ParamScalar> c) : kind_(k), index_(i), coeffs_(std::move(c)) {}
  Kind kind_;
  int index_;
  std::vector<ParamScalar> coeffs_;
};

// Element of K in canonical form: coprime numerator and monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(ParamScalar(1)) {}
  RatFunc(long c) : num_(ParamScalar(c)), den_(ParamScalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const ParamScalar& c) : num_(c), den_(ParamScalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(PPoly p) : num_(std::move(p)), den_(ParamScalar(1)) {}  // NOLINT(google-explicit-constructor)

  static RatFunc make(PPoly num, PPoly den);
  static RatFunc x() { return RatFunc(PPoly::x()); }

  const PPoly& num() const { return num_; }
  const PPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  ParamScalar constant_value() const { return num_.coeff(0); }  // requires is_constant
  bool is_proper() const { return num_.degree() < den_.degree(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;
  RatFunc derive(const Derivation& d) const;
  RatFunc dx() const { return derive(Derivation::main_x()); }
  // Polynomial part and proper remainder.
  std::pair<PPoly, RatFunc> split_polynomial() const;

 private:
  PPoly num_;
  PPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

PPoly derive_coefficients(const PPoly& p, const Derivation& d);

// Differential operator sum_i c_i (d/dx)^i, coefficients indexed by order.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(std::vector<RatFunc> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(int i) const { return i >= 0 && i <= order() ? c_[i] : RatFunc(); }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.c_ == b.c_; }

 private:
  std::vector<RatFunc> c_;
};

DiffOperator op_compose(const DiffOperator& outer, const DiffOperator& inner);
RatFunc op_apply(const DiffOperator& op, const RatFunc& f);

}  // namespace ppv
