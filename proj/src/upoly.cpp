#include "ppv/upoly.hpp"

#include <algorithm>
#include <optional>

namespace ppv {

Poly<mpq_class> gcd(const Poly<mpq_class>& a, const Poly<mpq_class>& b) { return euclid_gcd(a, b); }

namespace {

bool rational_coefficients(const Poly<ParamScalar>& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_constant()) return false;
  return true;
}

Poly<mpq_class> to_rational(const Poly<ParamScalar>& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.constant_value());
  return Poly<mpq_class>(std::move(c));
}

Poly<ParamScalar> from_rational(const Poly<mpq_class>& p) {
  std::vector<ParamScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Poly<ParamScalar>(std::move(c));
}

// Multiply through by the lcm of coefficient denominators.
std::vector<MPoly> clear_denominators(const Poly<ParamScalar>& p) {
  MPoly l(1);
  for (const auto& c : p.coeffs()) {
    if (c.den().is_constant()) continue;
    MPoly g = gcd(l, c.den());
    l = exact_quotient(l, g) * c.den();
  }
  std::vector<MPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(exact_quotient(c.num() * l, c.den()));
  return out;
}

// Degree of gcd(a, b) at a point where both leading coefficients survive; an upper bound
// for the degree of the generic gcd.
std::optional<int> specialized_gcd_degree(const Poly<ParamScalar>& a, const Poly<ParamScalar>& b) {
  static const long values[][kMaxParams] = {{7, -11, 13, 17, -19, 23, 29, -31},
                                            {-41, 43, 47, -53, 59, 61, -67, 71},
                                            {83, 89, -97, 101, 103, -107, 109, 113}};
  for (const auto& row : values) {
    std::vector<mpq_class> pt(row, row + kMaxParams);
    auto specialize = [&](const Poly<ParamScalar>& p) -> std::optional<Poly<mpq_class>> {
      std::vector<mpq_class> c;
      for (const auto& x : p.coeffs()) {
        auto v = x.eval(pt);
        if (!v) return std::nullopt;
        c.push_back(*v);
      }
      Poly<mpq_class> r(std::move(c));
      if (r.degree() != p.degree()) return std::nullopt;
      return r;
    };
    auto sa = specialize(a), sb = specialize(b);
    if (!sa || !sb) continue;
    return euclid_gcd(*sa, *sb).degree();
  }
  return std::nullopt;
}

// p as a polynomial in Q[t, x] with x stored as parameter index `xv`.
MPoly as_multivariate(const std::vector<MPoly>& coeffs, int xv) { return MPoly::from_coeffs_in(xv, coeffs); }

}  // namespace

Poly<ParamScalar> gcd(const Poly<ParamScalar>& a, const Poly<ParamScalar>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly<ParamScalar>(ParamScalar(1));
  if (rational_coefficients(a) && rational_coefficients(b))
    return from_rational(euclid_gcd(to_rational(a), to_rational(b)));
  // If one side is over Q, every common factor is over Q: split the other side by t-monomials.
  if (rational_coefficients(a) || rational_coefficients(b)) {
    const Poly<ParamScalar>& r = rational_coefficients(a) ? a : b;
    const Poly<ParamScalar>& p = rational_coefficients(a) ? b : a;
    Poly<mpq_class> g = to_rational(r);
    std::vector<MPoly> cleared = clear_denominators(p);
    std::vector<std::pair<Monomial, std::vector<mpq_class>>> parts;
    for (std::size_t i = 0; i < cleared.size(); ++i) {
      for (const auto& t : cleared[i].terms()) {
        auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& e) { return e.first == t.mono; });
        if (it == parts.end()) {
          parts.emplace_back(t.mono, std::vector<mpq_class>(cleared.size(), mpq_class(0)));
          it = parts.end() - 1;
        }
        it->second[i] = t.coef;
      }
    }
    for (auto& [mono, coeffs] : parts) {
      if (g.degree() <= 0) break;
      g = euclid_gcd(g, Poly<mpq_class>(std::move(coeffs)));
    }
    return from_rational(g.monic());
  }
  if (auto k = specialized_gcd_degree(a, b)) {
    if (*k == 0) return Poly<ParamScalar>(ParamScalar(1));
    const Poly<ParamScalar>& small = a.degree() <= b.degree() ? a : b;
    const Poly<ParamScalar>& large = a.degree() <= b.degree() ? b : a;
    if (*k == small.degree() && (large % small).is_zero()) return small.monic();
  }
  int xv = 0;
  for (const Poly<ParamScalar>* p : {&a, &b})
    for (const auto& c : p->coeffs()) xv = std::max(xv, c.max_var() + 1);
  if (xv < kMaxParams) {
    // gcd in Q[t, x]; making it monic in x drops the content in Q[t].
    MPoly g = gcd(as_multivariate(clear_denominators(a), xv), as_multivariate(clear_denominators(b), xv));
    std::vector<ParamScalar> c;
    for (auto& x : g.coeffs_in(xv)) c.emplace_back(std::move(x));
    return Poly<ParamScalar>(std::move(c)).monic();
  }
  std::vector<MPoly> g = univariate_gcd(clear_denominators(a), clear_denominators(b));
  std::vector<ParamScalar> c;
  c.reserve(g.size());
  for (auto& x : g) c.emplace_back(std::move(x));
  return Poly<ParamScalar>(std::move(c)).monic();
}

}  // namespace ppv
