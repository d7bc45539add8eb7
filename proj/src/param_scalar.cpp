#include "ppv/param_scalar.hpp"

#include "ppv/error.hpp"

namespace ppv {

ParamScalar ParamScalar::make(MPoly num, MPoly den) {
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero in Q(t)");
  ParamScalar r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  mpq_class lc = den.lead_coef();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    *this = make(num_ + o.num_, den_);
    return *this;
  }
  MPoly g = gcd(den_, o.den_);
  MPoly a = exact_quotient(den_, g), b = exact_quotient(o.den_, g);
  *this = make(num_ * b + o.num_ * a, a * o.den_);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  if (is_zero() || o.is_zero()) return *this = ParamScalar();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  MPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MPoly n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  MPoly d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  mpq_class lc = d.lead_coef();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero in Q(t)");
  ParamScalar r;
  mpq_class lc = num_.lead_coef();
  mpq_class inv = 1 / lc;
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  return r;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) { return *this *= o.inverse(); }

bool operator<(const ParamScalar& a, const ParamScalar& b) {
  if (!(a.num_ == b.num_)) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

ParamScalar ParamScalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  ParamScalar r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

ParamScalar ParamScalar::derivative(int param) const {
  if (den_.is_constant()) return ParamScalar(num_.derivative(param) * (1 / den_.constant_value()));
  MPoly n = num_.derivative(param) * den_ - num_ * den_.derivative(param);
  return make(std::move(n), den_ * den_);
}

std::optional<mpq_class> ParamScalar::eval(std::span<const mpq_class> point) const {
  mpq_class d = den_.eval(point);
  if (sgn(d) == 0) return std::nullopt;
  return mpq_class(num_.eval(point) / d);
}

std::optional<ParamScalar> ParamScalar::sqrt() const {
  auto n = exact_sqrt(num_);
  if (!n) return std::nullopt;
  auto d = exact_sqrt(den_);
  if (!d) return std::nullopt;
  return make(*n, *d);
}

std::string ParamScalar::to_string(std::span<const std::string> names) const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
  std::string n = num_.to_string(names), d = den_.to_string(names);
  bool simple_num = num_.terms().size() == 1 && (num_.is_constant() || num_.lead_coef() == 1 || num_.lead_coef() == -1);
  if (!simple_num || (num_.terms().size() == 1 && sgn(num_.lead_coef()) < 0)) n = "(" + n + ")";
  bool simple_den = den_.terms().size() == 1 && den_.lead_coef() == 1;
  if (!simple_den) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace ppv
