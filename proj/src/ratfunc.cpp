#include "ppv/ratfunc.hpp"

namespace ppv {

ParamScalar Derivation::apply(const ParamScalar& c) const {
  switch (kind_) {
    case Kind::MainX:
      return ParamScalar();
    case Kind::Param:
      return c.derivative(index_);
    case Kind::Combo: {
      ParamScalar s;
      for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) s += coeffs_[j] * c.derivative(static_cast<int>(j));
      return s;
    }
  }
  return ParamScalar();
}

PPoly derive_coefficients(const PPoly& p, const Derivation& d) {
  std::vector<ParamScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(d.apply(x));
  return PPoly(std::move(c));
}

RatFunc RatFunc::make(PPoly num, PPoly den) {
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) return r;
  if (den.degree() > 0 && num.degree() >= 0) {
    PPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  if (!den.lead().is_one()) {
    ParamScalar inv = den.lead().inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = make(num_ + o.num_, den_);
  PPoly g = gcd(den_, o.den_);
  if (g.degree() == 0) return *this = make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  PPoly a = exact_div(den_, g), b = exact_div(o.den_, g);
  return *this = make(num_ * b + o.num_ * a, a * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  PPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  PPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  PPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  if (!d.lead().is_one()) {
    ParamScalar inv = d.lead().inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero rational function");
  RatFunc r;
  ParamScalar inv = num_.lead().inverse();
  r.num_ = den_.scaled(inv);
  r.den_ = num_.scaled(inv);
  return r;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RatFunc RatFunc::derive(const Derivation& d) const {
  if (is_zero()) return {};
  bool main = d.kind() == Derivation::Kind::MainX;
  PPoly dn = main ? num_.derivative() : derive_coefficients(num_, d);
  PPoly dd = main ? den_.derivative() : derive_coefficients(den_, d);
  if (dd.is_zero()) return make(dn, den_);
  // With g = gcd(den, den') and s = den / g, both den' and the parametric derivative of den
  // are divisible by g, and the derivative has denominator dividing den * s.
  PPoly g = gcd(den_, den_.derivative());
  PPoly s = g.degree() > 0 ? exact_div(den_, g) : den_;
  PPoly e = g.degree() > 0 ? exact_div(dd, g) : dd;
  PPoly num = dn * s - num_ * e;
  if (main) {
    RatFunc r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = den_ * s;
    return r;
  }
  return make(std::move(num), den_ * s);
}

std::pair<PPoly, RatFunc> RatFunc::split_polynomial() const {
  auto [q, r] = divmod(num_, den_);
  RatFunc rest;
  if (!r.is_zero()) {
    rest.num_ = std::move(r);
    rest.den_ = den_;
  }
  return {q, rest};
}

DiffOperator::DiffOperator(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

DiffOperator op_compose(const DiffOperator& outer, const DiffOperator& inner) {
  // a d^i o b d^j = a sum_k C(i,k) b^(k) d^(i-k+j)
  int n = outer.order(), m = inner.order();
  if (n < 0 || m < 0) return {};
  std::vector<RatFunc> out(static_cast<std::size_t>(n + m) + 1);
  for (int j = 0; j <= m; ++j) {
    const RatFunc& b = inner.coeffs()[j];
    if (b.is_zero()) continue;
    std::vector<RatFunc> derivs{b};
    for (int k = 1; k <= n; ++k) derivs.push_back(derivs.back().dx());
    for (int i = 0; i <= n; ++i) {
      const RatFunc& a = outer.coeffs()[i];
      if (a.is_zero()) continue;
      for (int k = 0; k <= i; ++k) {
        if (derivs[k].is_zero()) continue;
        out[i - k + j] += a * derivs[k] * RatFunc(binomial(i, k));
      }
    }
  }
  return DiffOperator(std::move(out));
}

RatFunc op_apply(const DiffOperator& op, const RatFunc& f) {
  RatFunc result, d = f;
  for (int i = 0; i <= op.order(); ++i) {
    if (i > 0) d = d.dx();
    if (!op.coeffs()[i].is_zero()) result += op.coeffs()[i] * d;
  }
  return result;
}

}  // namespace ppv
