#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppv/mpoly.hpp"

namespace ppv {

// Element of Q(t1..tm): coprime numerator and denominator, denominator with leading coefficient 1.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static ParamScalar make(MPoly num, MPoly den);
  static ParamScalar param(int index) { return ParamScalar(MPoly::variable(index)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const { return num_.constant_value(); }  // requires is_constant
  bool is_polynomial() const { return den_.is_constant(); }
  int max_var() const { return std::max(num_.max_var(), den_.max_var()); }
  // Number of terms; a rough size measure for pivot selection.
  std::size_t size() const { return num_.terms().size() + den_.terms().size(); }

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const ParamScalar& a, const ParamScalar& b);

  ParamScalar inverse() const;
  ParamScalar pow(int n) const;
  ParamScalar derivative(int param) const;
  // nullopt when the denominator vanishes at the point
  std::optional<mpq_class> eval(std::span<const mpq_class> point) const;
  std::optional<ParamScalar> sqrt() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  MPoly num_;
  MPoly den_;
};

inline bool is_zero(const ParamScalar& a) { return a.is_zero(); }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

}  // namespace ppv
