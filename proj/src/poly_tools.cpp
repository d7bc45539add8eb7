#include "ppv/poly_tools.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace ppv {

std::vector<mpq_class> sample_point(int attempt) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(attempt));
  std::uniform_int_distribution<long> num(-997, 997);
  std::uniform_int_distribution<long> den(1, 13);
  std::vector<mpq_class> p;
  for (int i = 0; i < kMaxParams; ++i) {
    mpq_class v(num(rng), den(rng));
    v.canonicalize();
    if (v == 0) v = 101 + i;
    p.push_back(v);
  }
  return p;
}

std::optional<QPoly> specialize(const PPoly& p, std::span<const mpq_class> point) {
  std::vector<mpq_class> c;
  for (const auto& x : p.coeffs()) {
    auto v = x.eval(point);
    if (!v) return std::nullopt;
    c.push_back(*v);
  }
  return QPoly(std::move(c));
}

PPoly to_ppoly(const QPoly& p) {
  std::vector<ParamScalar> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return PPoly(std::move(c));
}

Matrix<ParamScalar> coefficient_matrix(const std::vector<RatFunc>& v) {
  PPoly d(ParamScalar(1));
  for (const auto& f : v) {
    if (f.is_zero()) continue;
    PPoly g = gcd(d, f.den());
    d = d * exact_div(f.den(), g);
  }
  std::vector<PPoly> nums;
  int rows = 0;
  for (const auto& f : v) {
    PPoly n = f.is_zero() ? PPoly() : f.num() * exact_div(d, f.den());
    rows = std::max(rows, n.degree() + 1);
    nums.push_back(std::move(n));
  }
  Matrix<ParamScalar> m(static_cast<std::size_t>(rows), std::vector<ParamScalar>(v.size()));
  for (std::size_t i = 0; i < nums.size(); ++i)
    for (int r = 0; r <= nums[i].degree(); ++r) m[r][i] = nums[i].coeff(r);
  return m;
}

Matrix<mpq_class> expand_over_q(const Matrix<ParamScalar>& m) {
  Matrix<mpq_class> out;
  for (const auto& row : m) {
    MPoly l(1);
    for (const auto& e : row) {
      if (e.is_zero() || e.den().is_constant()) continue;
      l = l * exact_quotient(e.den(), gcd(l, e.den()));
    }
    std::map<std::vector<int>, std::vector<mpq_class>> by_mono;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      MPoly n = row[i].num() * exact_quotient(l, row[i].den());
      for (const auto& t : n.terms()) {
        std::vector<int> key(t.mono.exp.begin(), t.mono.exp.end());
        auto& r = by_mono[key];
        if (r.empty()) r.assign(row.size(), mpq_class(0));
        r[i] += t.coef;
      }
    }
    for (auto& [k, r] : by_mono) out.push_back(std::move(r));
  }
  return out;
}

Matrix<mpq_class> rational_coefficient_matrix(const std::vector<RatFunc>& v) {
  return expand_over_q(coefficient_matrix(v));
}

std::vector<PPoly> coprime_base(const std::vector<PPoly>& polys) {
  std::vector<PPoly> base;
  for (const auto& p : polys) {
    if (p.degree() <= 0) continue;
    std::vector<PPoly> pending{squarefree_part(p)};
    while (!pending.empty()) {
      PPoly a = std::move(pending.back());
      pending.pop_back();
      for (std::size_t i = 0; i < base.size() && a.degree() > 0; ++i) {
        PPoly g = gcd(a, base[i]);
        if (g.degree() <= 0) continue;
        PPoly rest = exact_div(base[i], g);
        base[i] = g;
        if (rest.degree() > 0) base.push_back(rest.monic());
        a = exact_div(a, g);
      }
      if (a.degree() > 0) base.push_back(a.monic());
    }
  }
  std::sort(base.begin(), base.end(), [](const PPoly& a, const PPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) == b.coeff(i)) continue;
      return a.coeff(i) < b.coeff(i);
    }
    return false;
  });
  return base;
}

int multiplicity(PPoly p, const PPoly& b) {
  int e = 0;
  while (p.degree() >= b.degree()) {
    auto [q, r] = divmod(p, b);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++e;
  }
  return e;
}

PPoly interpolate(const std::vector<ParamScalar>& xs, const std::vector<ParamScalar>& ys) {
  // Newton divided differences
  std::size_t n = xs.size();
  std::vector<ParamScalar> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  PPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * PPoly(std::vector<ParamScalar>{-xs[i], ParamScalar(1)}) + PPoly(c[i]);
  }
  return acc;
}

std::vector<mpz_class> integer_root_candidates(const PPoly& p) {
  if (p.is_zero()) raise(ErrorKind::Precondition, "integer roots of the zero polynomial");
  bool constant_coeffs = std::all_of(p.coeffs().begin(), p.coeffs().end(),
                                     [](const ParamScalar& c) { return c.is_constant(); });
  std::optional<std::vector<mpz_class>> result;
  int found = 0;
  for (int attempt = 0; found < (constant_coeffs ? 1 : 2) && attempt < 64; ++attempt) {
    auto pt = sample_point(attempt);
    auto lc = p.lead().eval(pt);
    if (!lc || *lc == 0) continue;
    auto sp = specialize(p, pt);
    if (!sp) continue;
    ++found;
    std::vector<mpz_class> roots;
    if (sp->degree() > 0) roots = integer_roots(primitive_integer(*sp));
    if (!result) {
      result = roots;
    } else {
      std::vector<mpz_class> both;
      std::set_intersection(result->begin(), result->end(), roots.begin(), roots.end(), std::back_inserter(both));
      result = both;
    }
  }
  if (!result) raise(ErrorKind::Verification, "no admissible specialization point found");
  return *result;
}

int param_count(const RatFunc& f) {
  int m = 0;
  for (const auto* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs()) m = std::max(m, c.max_var() + 1);
  return m;
}

int param_count(const std::vector<RatFunc>& fs) {
  int m = 0;
  for (const auto& f : fs) m = std::max(m, param_count(f));
  return m;
}

std::pair<PPoly, PPoly> integral_parts(const RatFunc& f) {
  MPoly l(1);
  for (const PPoly* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs())
      if (!c.den().is_constant()) l = exact_quotient(l, gcd(l, c.den())) * c.den();
  ParamScalar s(l);
  return {f.num().scaled(s), f.den().scaled(s)};
}

namespace {

// Horner evaluation of sum_i c[i] y^i, dropping terms of total degree above `cap` (cap < 0: exact).
MPoly horner(const std::vector<MPoly>& c, const MPoly& y, int cap) {
  MPoly acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * y + c[i];
    if (cap >= 0) acc = acc.truncated(cap);
  }
  return acc;
}

// Polynomial roots in Q[t] of the monic g (coefficients in Q[t], index = power of y).
std::vector<MPoly> polynomial_roots(const std::vector<MPoly>& g) {
  int bound = 0;
  for (const auto& c : g) bound = std::max(bound, c.total_degree());
  std::vector<MPoly> dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * mpq_class(static_cast<long>(i)));
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<mpq_class> pt = sample_point(attempt + 50);
    std::vector<mpq_class> neg;
    for (const auto& v : pt) neg.push_back(-v);
    std::vector<MPoly> gs, dgs;
    std::vector<mpq_class> g0;
    for (const auto& c : g) {
      gs.push_back(c.shifted(pt));
      g0.push_back(gs.back().eval(std::vector<mpq_class>(kMaxParams, mpq_class(0))));
    }
    for (const auto& c : dg) dgs.push_back(c.shifted(pt));
    QPoly q0(g0);
    if (euclid_gcd(q0, q0.derivative()).degree() > 0) continue;
    std::vector<MPoly> out;
    for (const mpq_class& y0 : rational_roots(q0)) {
      mpq_class inv_slope = 1 / q0.derivative().eval(y0);
      MPoly y(y0);
      for (int k = 1; k <= bound; ++k) {
        MPoly e = horner(gs, y, k).homogeneous_part(k);
        if (e.is_zero()) continue;
        y -= e * inv_slope;
      }
      if (!horner(gs, y, -1).is_zero()) continue;
      out.push_back(y.shifted(neg));
    }
    return out;
  }
  raise(ErrorKind::Unsupported, "no regular specialization point for root finding");
}

}  // namespace

std::vector<ParamScalar> roots_in_f0(const PPoly& p) {
  PPoly s = squarefree_part(p).monic();
  std::vector<ParamScalar> roots;
  if (s.degree() <= 0) return roots;
  bool rational = std::all_of(s.coeffs().begin(), s.coeffs().end(),
                              [](const ParamScalar& c) { return c.is_constant(); });
  if (rational) {
    std::vector<mpq_class> c;
    for (const auto& x : s.coeffs()) c.push_back(x.constant_value());
    for (const auto& r : rational_roots(QPoly(c))) roots.emplace_back(r);
  } else {
    MPoly l(1);
    for (const auto& c : s.coeffs()) {
      if (c.den().is_constant()) continue;
      l = exact_quotient(l, gcd(l, c.den())) * c.den();
    }
    std::vector<MPoly> c;
    for (const auto& x : s.coeffs()) c.push_back(exact_quotient(x.num() * l, x.den()));
    int n = s.degree();
    const MPoly lead = c[n];
    // y = lead * x turns the equation monic with roots in Q[t].
    std::vector<MPoly> g(static_cast<std::size_t>(n) + 1);
    g[n] = MPoly(1);
    for (int i = 0; i < n; ++i) g[i] = c[i] * lead.pow(static_cast<unsigned>(n - 1 - i));
    for (const auto& y : polynomial_roots(g)) roots.push_back(ParamScalar::make(y, lead));
  }
  for (const auto& r : roots) verify(s.eval(r).is_zero(), "root in F0");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ppv
