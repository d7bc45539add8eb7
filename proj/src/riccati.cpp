#include "ppv/riccati.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "ppv/linalg.hpp"
#include "ppv/poly_tools.hpp"
#include "ppv/rational_calculus.hpp"

namespace ppv {

void record(AssumptionLog* log, const ParamScalar& value, const std::string& condition) {
  if (log == nullptr) return;
  Assumption a{value, condition};
  if (std::find(log->begin(), log->end(), a) == log->end()) log->push_back(std::move(a));
}

const char* to_string(RiccatiCase c) {
  switch (c) {
    case RiccatiCase::I: return "I";
    case RiccatiCase::II: return "II";
    case RiccatiCase::III: return "III";
    case RiccatiCase::IV: return "IV";
  }
  return "?";
}

namespace {

// a = sign * s^2 * rest, with small square factors moved into s.
std::pair<mpz_class, mpz_class> split_square(const mpz_class& a) {
  mpz_class rest = abs(a), s = 1;
  for (unsigned long p = 2; p < 2000 && p * p <= rest; ++p) {
    mpz_class pp = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t()) != 0) {
      rest /= pp;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    s *= r;
    rest = 1;
  }
  if (sgn(a) < 0) rest = -rest;
  return {s, rest};
}

void erase_zeros(std::map<ParamScalar, ParamScalar>& m) {
  for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

}  // namespace

Surd Surd::sqrt_of(const ParamScalar& d) {
  Surd r;
  if (d.is_zero()) return r;
  if (auto s = d.sqrt()) {
    r.rational = *s;
    return r;
  }
  // d = num * den / den^2 and num * den = c * prim with prim integral and primitive.
  MPoly p = d.num() * d.den();
  mpq_class c = p.rational_content();
  MPoly prim = p * mpq_class(1 / c);
  auto [s, rest] = split_square(c.get_num() * c.get_den());
  mpq_class outside(s, c.get_den());
  outside.canonicalize();
  ParamScalar factor = ParamScalar::make(MPoly(outside), d.den());
  ParamScalar radicand;
  if (auto root = exact_sqrt(prim)) {
    factor *= ParamScalar(*root);
    radicand = ParamScalar(mpq_class(rest));
  } else {
    radicand = ParamScalar(prim * mpq_class(rest));
  }
  if (radicand.is_one()) {
    r.rational = factor;
  } else {
    r.radicals[radicand] = factor;
  }
  return r;
}

Surd& Surd::operator+=(const Surd& o) {
  rational += o.rational;
  for (const auto& [k, v] : o.radicals) radicals[k] += v;
  erase_zeros(radicals);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += o.scaled(ParamScalar(-1)); }

Surd Surd::scaled(const ParamScalar& s) const {
  Surd r;
  if (s.is_zero()) return r;
  r.rational = rational * s;
  for (const auto& [k, v] : radicals) r.radicals[k] = v * s;
  return r;
}

bool verify_riccati(const RatFunc& u, const RatFunc& q) {
  // With u = N/D and q = a/b: b (N' D - N D' + N^2) = a D^2, over Q[t][x].
  auto [n, d] = integral_parts(u);
  auto [a, b] = integral_parts(q);
  return b * (n.derivative() * d - n * d.derivative() + n * n) == a * d * d;
}

namespace {

const ParamScalar kHalf(mpq_class(1, 2));

RatFunc linear(const ParamScalar& c) { return RatFunc(PPoly(std::vector<ParamScalar>{-c, ParamScalar(1)})); }

// First n coefficients of a/b as a power series; b(0) != 0.
std::vector<ParamScalar> series_div(const PPoly& a, const PPoly& b, int n) {
  std::vector<ParamScalar> out(static_cast<std::size_t>(n));
  ParamScalar inv = b.coeff(0).inverse();
  for (int k = 0; k < n; ++k) {
    ParamScalar s = a.coeff(k);
    for (int i = 1; i <= k && i <= b.degree(); ++i) s -= b.coeff(i) * out[k - i];
    out[k] = s * inv;
  }
  return out;
}

// Square root of a series with constant term 1.
std::vector<ParamScalar> series_sqrt(const std::vector<ParamScalar>& s, int n) {
  std::vector<ParamScalar> t(static_cast<std::size_t>(n));
  t[0] = ParamScalar(1);
  for (int k = 1; k < n; ++k) {
    ParamScalar acc = k < static_cast<int>(s.size()) ? s[k] : ParamScalar(0);
    for (int i = 1; i < k; ++i) acc -= t[i] * t[k - i];
    t[k] = acc * kHalf;
  }
  return t;
}

int low_order(const PPoly& p) {
  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

PPoly drop_low(const PPoly& p, int k) {
  std::vector<ParamScalar> c(p.coeffs().begin() + k, p.coeffs().end());
  return PPoly(std::move(c));
}

// q(c + X) = sum_k coef[k] X^(val + k)
struct Laurent {
  int val = 0;
  std::vector<ParamScalar> coef;
};

Laurent laurent_at(const RatFunc& q, const ParamScalar& c, int n) {
  PPoly num = q.num().taylor_shift(c), den = q.den().taylor_shift(c);
  int on = low_order(num), od = low_order(den);
  return {on - od, series_div(drop_low(num, on), drop_low(den, od), n)};
}

// In z = 1/x: q(1/z) = sum_k coef[k] z^(val + k)
Laurent laurent_at_infinity(const RatFunc& q, int n) {
  return {q.den().degree() - q.num().degree(), series_div(q.num().reversed(), q.den().reversed(), n)};
}

struct Pole {
  ParamScalar c;
  int order;
};

std::vector<Pole> finite_poles(const RatFunc& q) {
  std::vector<Pole> out;
  const PPoly& d = q.den();
  if (d.degree() <= 0) return out;
  std::vector<ParamScalar> roots = roots_in_f0(d);
  if (static_cast<int>(roots.size()) != squarefree_part(d).degree())
    raise(ErrorKind::Unsupported, "singular points of the equation are not all defined over Q(t)");
  for (const auto& c : roots) out.push_back({c, multiplicity(d, linear(c).num())});
  return out;
}

constexpr int kZeroOrder = INT_MAX / 4;

int order_at_infinity(const RatFunc& q) {
  if (q.is_zero()) return kZeroOrder;
  return q.den().degree() - q.num().degree();
}

// ---- rational solutions ----

struct LocalChoice {
  Surd alpha;
  RatFunc term;
  bool term_rational = true;
};

Surd rational_surd(const ParamScalar& v) {
  Surd s;
  s.rational = v;
  return s;
}

std::vector<LocalChoice> order_two_choices(const ParamScalar& b) {
  Surd s = Surd::sqrt_of(ParamScalar(1) + ParamScalar(4) * b).scaled(kHalf);
  return {{rational_surd(kHalf) + s, RatFunc(), true}, {rational_surd(kHalf) - s, RatFunc(), true}};
}

std::vector<LocalChoice> finite_choices(const RatFunc& q, const Pole& p) {
  if (p.order == 1) return {{rational_surd(ParamScalar(1)), RatFunc(), true}};
  if (p.order == 2) return order_two_choices(laurent_at(q, p.c, 1).coef[0]);
  if (p.order % 2 != 0) return {};
  int nu = p.order / 2;
  Laurent l = laurent_at(q, p.c, nu);
  ParamScalar lead = l.coef[0];
  for (auto& x : l.coef) x /= lead;
  std::vector<ParamScalar> t = series_sqrt(l.coef, nu);
  Surd a = Surd::sqrt_of(lead);
  RatFunc base, inv = linear(p.c).inverse();
  for (int k = 0; k <= nu - 2; ++k) base += RatFunc(t[k]) * inv.pow(nu - k);
  Surd shift = a.scaled(t[nu - 1]);
  Surd mid = rational_surd(ParamScalar(mpq_class(nu, 2)));
  bool ok = a.is_rational();
  RatFunc term = ok ? RatFunc(a.rational) * base : RatFunc();
  return {{mid + shift, term, ok}, {mid - shift, -term, ok}};
}

std::vector<LocalChoice> infinity_choices(const RatFunc& q) {
  int o = order_at_infinity(q);
  if (o > 2) return {{rational_surd(ParamScalar(0)), RatFunc(), true}, {rational_surd(ParamScalar(1)), RatFunc(), true}};
  if (o == 2) return order_two_choices(laurent_at_infinity(q, 1).coef[0]);
  if (o % 2 != 0) return {};
  int nu = -o / 2;
  Laurent l = laurent_at_infinity(q, nu + 2);
  ParamScalar lead = l.coef[0];
  for (auto& x : l.coef) x /= lead;
  std::vector<ParamScalar> t = series_sqrt(l.coef, nu + 2);
  Surd a = Surd::sqrt_of(lead);
  RatFunc base;
  for (int k = 0; k <= nu; ++k) base += RatFunc(t[k]) * RatFunc::x().pow(nu - k);
  Surd shift = a.scaled(t[nu + 1]);
  Surd mid = rational_surd(ParamScalar(mpq_class(-nu, 2)));
  bool ok = a.is_rational();
  RatFunc term = ok ? RatFunc(a.rational) * base : RatFunc();
  return {{mid + shift, term, ok}, {mid - shift, -term, ok}};
}

// Images of 1, x, ..., x^d under sum_i ops[i] (d/dx)^i.
std::vector<RatFunc> monomial_images(const std::vector<RatFunc>& ops, int d) {
  std::vector<RatFunc> cols;
  for (int k = 0; k <= d; ++k) {
    RatFunc m = RatFunc::x().pow(k), acc;
    for (const auto& c : ops) {
      if (!c.is_zero()) acc += c * m;
      m = m.dx();
    }
    cols.push_back(acc);
  }
  return cols;
}

PPoly poly_from(const std::vector<ParamScalar>& v) { return PPoly(v); }

// Nonzero polynomial solutions of degree <= d: a basis.
std::vector<PPoly> polynomial_kernel(const std::vector<RatFunc>& ops, int d) {
  std::vector<PPoly> out;
  for (const auto& v : kernel_basis(coefficient_matrix(monomial_images(ops, d)), d + 1)) out.push_back(poly_from(v));
  return out;
}

// A monic solution of degree exactly d.
std::optional<PPoly> monic_solution(const std::vector<RatFunc>& ops, int d) {
  Matrix<ParamScalar> m = coefficient_matrix(monomial_images(ops, d));
  Matrix<ParamScalar> a;
  std::vector<ParamScalar> b;
  for (auto& row : m) {
    b.push_back(-row[d]);
    row.pop_back();
    a.push_back(std::move(row));
  }
  std::vector<ParamScalar> p;
  if (d > 0) {
    auto sol = solve_linear_system(a, b);
    if (!sol) return std::nullopt;
    p = sol->particular;
  } else if (std::any_of(b.begin(), b.end(), [](const ParamScalar& x) { return !x.is_zero(); })) {
    return std::nullopt;
  }
  p.emplace_back(1);
  return poly_from(p);
}

bool is_nonnegative_integer(const ParamScalar& v) {
  return v.is_constant() && v.constant_value().get_den() == 1 && sgn(v.constant_value()) >= 0;
}

template <class Choice>
void for_each_family(const std::vector<std::vector<Choice>>& sets, const std::function<void(const std::vector<const Choice*>&)>& f) {
  std::vector<const Choice*> cur(sets.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sets.size()) {
      f(cur);
      return;
    }
    for (const auto& c : sets[i]) {
      cur[i] = &c;
      rec(i + 1);
    }
  };
  rec(0);
}

void add_unique(std::vector<RatFunc>& v, const RatFunc& u) {
  if (std::find(v.begin(), v.end(), u) == v.end()) v.push_back(u);
}

bool case_one_possible(const std::vector<Pole>& poles, int o_inf) {
  for (const auto& p : poles)
    if (p.order != 1 && p.order % 2 != 0) return false;
  return o_inf > 2 || o_inf % 2 == 0;
}

bool case_two_possible(const std::vector<Pole>& poles) {
  return std::any_of(poles.begin(), poles.end(),
                     [](const Pole& p) { return p.order == 2 || (p.order > 2 && p.order % 2 != 0); });
}

bool case_three_possible(const std::vector<Pole>& poles, int o_inf) {
  return o_inf >= 2 && std::all_of(poles.begin(), poles.end(), [](const Pole& p) { return p.order <= 2; });
}

// Integers among e0 + m * s for the multipliers m; parametric values are assumed non-integral.
std::vector<long> integer_values(long e0, const Surd& s, const std::vector<mpq_class>& mults, AssumptionLog* log) {
  std::vector<long> out;
  auto add = [&](long v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& m : mults) {
    if (m == 0) {
      add(e0);
      continue;
    }
    if (!s.is_rational()) continue;
    ParamScalar v = ParamScalar(e0) + ParamScalar(m) * s.rational;
    if (!v.is_constant()) {
      record(log, v, "not an integer");
      continue;
    }
    mpq_class c = v.constant_value();
    if (c.get_den() == 1) add(c.get_num().get_si());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Surd order_two_root(const ParamScalar& b) { return Surd::sqrt_of(ParamScalar(1) + ParamScalar(4) * b); }

bool is_square_in_k(const RatFunc& f) {
  if (f.is_zero()) return true;
  PPoly p = f.num() * f.den();
  for (const auto& [fac, mult] : squarefree_factorization(p))
    if (fac.degree() > 0 && mult % 2 != 0) return false;
  return p.lead().sqrt().has_value();
}

}  // namespace

std::vector<RatFunc> riccati_rational_solutions(const RatFunc& q, AssumptionLog* log) {
  std::vector<RatFunc> sols;
  std::vector<Pole> poles = finite_poles(q);
  int o_inf = order_at_infinity(q);
  if (!case_one_possible(poles, o_inf)) return sols;
  std::vector<std::vector<LocalChoice>> sets;
  for (const auto& p : poles) sets.push_back(finite_choices(q, p));
  sets.push_back(infinity_choices(q));
  for_each_family<LocalChoice>(sets, [&](const std::vector<const LocalChoice*>& fam) {
    Surd d = fam.back()->alpha;
    for (std::size_t i = 0; i + 1 < fam.size(); ++i) d -= fam[i]->alpha;
    if (!d.is_rational()) return;
    if (!d.rational.is_constant()) {
      record(log, d.rational, "not a nonnegative integer");
      return;
    }
    if (!is_nonnegative_integer(d.rational)) return;
    for (const auto* c : fam)
      if (!c->alpha.is_rational() || !c->term_rational)
        raise(ErrorKind::Unsupported, "Riccati solution needs algebraic constants outside Q(t)");
    RatFunc omega = fam.back()->term;
    for (std::size_t i = 0; i + 1 < fam.size(); ++i)
      omega += fam[i]->term + RatFunc(fam[i]->alpha.rational) * linear(poles[i].c).inverse();
    int deg = static_cast<int>(d.rational.constant_value().get_num().get_si());
    std::vector<RatFunc> ops{omega.dx() + omega * omega - q, omega + omega, RatFunc(1)};
    for (const auto& p : polynomial_kernel(ops, deg)) {
      RatFunc u = omega + RatFunc::make(p.derivative(), p);
      verify(verify_riccati(u, q), "rational Riccati solution");
      add_unique(sols, u);
    }
  });
  std::sort(sols.begin(), sols.end(), [](const RatFunc& a, const RatFunc& b) {
    if (a.den().degree() != b.den().degree()) return a.den().degree() < b.den().degree();
    return a.num().degree() < b.num().degree();
  });
  return sols;
}

bool verify_quadratic(const QuadraticRiccati& r, const RatFunc& q) {
  if (r.w2.is_zero() || is_square_in_k(r.w2)) return false;
  if (!(r.v + r.phi).is_zero()) return false;
  if (!(r.w2.dx() - RatFunc(2) * r.v * r.w2).is_zero()) return false;
  RatFunc quarter(ParamScalar(mpq_class(1, 4)));
  return (RatFunc(kHalf) * r.phi.dx() + quarter * (r.phi * r.phi + r.w2) - q).is_zero();
}

std::optional<QuadraticRiccati> riccati_quadratic(const RatFunc& q, AssumptionLog* log) {
  std::vector<Pole> poles = finite_poles(q);
  if (!case_two_possible(poles)) return std::nullopt;
  int o_inf = order_at_infinity(q);
  std::vector<std::vector<long>> sets;
  std::vector<mpq_class> mults{0, 2, -2};
  for (const auto& p : poles) {
    if (p.order == 1) sets.push_back({4});
    else if (p.order == 2) sets.push_back(integer_values(2, order_two_root(laurent_at(q, p.c, 1).coef[0]), mults, log));
    else sets.push_back({p.order});
  }
  if (o_inf > 2) sets.push_back({0, 2, 4});
  else if (o_inf == 2) sets.push_back(integer_values(2, order_two_root(laurent_at_infinity(q, 1).coef[0]), mults, log));
  else sets.push_back({o_inf});
  std::optional<QuadraticRiccati> found;
  for_each_family<long>(sets, [&](const std::vector<const long*>& fam) {
    if (found) return;
    long sum = *fam.back();
    for (std::size_t i = 0; i + 1 < fam.size(); ++i) sum -= *fam[i];
    if (sum < 0 || sum % 2 != 0) return;
    RatFunc theta;
    for (std::size_t i = 0; i + 1 < fam.size(); ++i)
      theta += RatFunc(ParamScalar(mpq_class(*fam[i], 2))) * linear(poles[i].c).inverse();
    RatFunc t1 = theta.dx(), t2 = t1.dx(), r1 = q.dx();
    RatFunc three(3), four(4);
    std::vector<RatFunc> ops{t2 + three * theta * t1 + theta * theta * theta - four * q * theta - RatFunc(2) * r1,
                             three * theta * theta + three * t1 - four * q, three * theta, RatFunc(1)};
    auto p = monic_solution(ops, static_cast<int>(sum / 2));
    if (!p) return;
    QuadraticRiccati r;
    r.phi = theta + RatFunc::make(p->derivative(), *p);
    r.w2 = four * q - RatFunc(2) * r.phi.dx() - r.phi * r.phi;
    r.v = -r.phi;
    if (!verify_quadratic(r, q)) return;
    found = r;
  });
  return found;
}

bool verify_algebraic(const AlgebraicRiccati& r, const RatFunc& q) {
  using KPoly = Poly<RatFunc>;
  KPoly m(r.minimal_poly);
  if (m.degree() != r.degree || !(m.lead() == RatFunc(1))) return false;
  std::vector<RatFunc> dc;
  for (const auto& c : m.coeffs()) dc.push_back(c.dx());
  KPoly rhs(std::vector<RatFunc>{q, RatFunc(), RatFunc(-1)});
  KPoly expr = KPoly(dc) + m.derivative() * rhs;
  return (expr % m).is_zero();
}

std::optional<AlgebraicRiccati> riccati_algebraic(const RatFunc& q, AssumptionLog* log) {
  std::vector<Pole> poles = finite_poles(q);
  int o_inf = order_at_infinity(q);
  if (!case_three_possible(poles, o_inf)) return std::nullopt;
  PPoly s_poly(ParamScalar(1));
  for (const auto& p : poles) s_poly *= linear(p.c).num();
  RatFunc S(s_poly), dS = S.dx(), S2r = S * S * q;
  for (int n : {4, 6, 12}) {
    std::vector<mpq_class> mults;
    for (int k = -n / 2; k <= n / 2; ++k) mults.emplace_back(12 * k, n);
    for (auto& m : mults) m.canonicalize();
    std::vector<std::vector<long>> sets;
    for (const auto& p : poles) {
      if (p.order == 1) sets.push_back({12});
      else sets.push_back(integer_values(6, order_two_root(laurent_at(q, p.c, 1).coef[0]), mults, log));
    }
    ParamScalar b_inf = o_inf == 2 ? laurent_at_infinity(q, 1).coef[0] : ParamScalar(0);
    sets.push_back(integer_values(6, order_two_root(b_inf), mults, log));
    std::optional<AlgebraicRiccati> found;
    for_each_family<long>(sets, [&](const std::vector<const long*>& fam) {
      if (found) return;
      long sum = *fam.back();
      for (std::size_t i = 0; i + 1 < fam.size(); ++i) sum -= *fam[i];
      if (sum < 0 || (n * sum) % 12 != 0) return;
      int d = static_cast<int>(n * sum / 12);
      RatFunc theta;
      for (std::size_t i = 0; i + 1 < fam.size(); ++i)
        theta += RatFunc(ParamScalar(mpq_class(n * *fam[i], 12))) * linear(poles[i].c).inverse();
      RatFunc s_theta = S * theta;
      // P_{-1} as a function of P; linear in P.
      auto chain = [&](const RatFunc& p) {
        std::vector<RatFunc> pi(static_cast<std::size_t>(n) + 2);
        pi[n + 1] = RatFunc();
        pi[n] = -p;
        for (int i = n; i >= 1; --i) {
          RatFunc next = -(S * pi[i].dx()) + (RatFunc(n - i) * dS - s_theta) * pi[i];
          if (i < n) next -= RatFunc(static_cast<long>(n - i) * (i + 1)) * S2r * pi[i + 1];
          pi[i - 1] = next;
        }
        RatFunc last = -(S * pi[0].dx()) + (RatFunc(n) * dS - s_theta) * pi[0] - RatFunc(n) * S2r * pi[1];
        return std::make_pair(pi, last);
      };
      std::vector<RatFunc> images;
      for (int k = 0; k <= d; ++k) images.push_back(chain(RatFunc::x().pow(k)).second);
      Matrix<ParamScalar> m = coefficient_matrix(images);
      Matrix<ParamScalar> a;
      std::vector<ParamScalar> b;
      for (auto& row : m) {
        b.push_back(-row[d]);
        row.pop_back();
        a.push_back(std::move(row));
      }
      std::vector<ParamScalar> coeffs;
      if (d > 0) {
        auto sol = solve_linear_system(a, b);
        if (!sol) return;
        coeffs = sol->particular;
      } else if (std::any_of(b.begin(), b.end(), [](const ParamScalar& x) { return !x.is_zero(); })) {
        return;
      }
      coeffs.emplace_back(1);
      auto [pi, last] = chain(RatFunc(PPoly(coeffs)));
      verify(last.is_zero(), "terminating recurrence");
      std::vector<RatFunc> mp;
      std::vector<mpz_class> facts{1};
      for (int i = 1; i <= n; ++i) facts.push_back(facts.back() * i);
      for (int i = 0; i <= n; ++i)
        mp.push_back(S.pow(i) * pi[i] * RatFunc(ParamScalar(mpq_class(1, facts[n - i]))));
      RatFunc inv = mp[n].inverse();
      for (auto& c : mp) c *= inv;
      AlgebraicRiccati r{n, mp};
      if (verify_algebraic(r, q)) found = r;
    });
    if (found) return found;
  }
  return std::nullopt;
}

CaseTag classify_case(const RatFunc& q) {
  CaseTag tag;
  tag.solutions = riccati_rational_solutions(q, &tag.assumptions);
  if (!tag.solutions.empty()) {
    tag.kind = RiccatiCase::I;
    return tag;
  }
  tag.quadratic = riccati_quadratic(q, &tag.assumptions);
  if (tag.quadratic) {
    tag.kind = RiccatiCase::II;
    return tag;
  }
  tag.algebraic = riccati_algebraic(q, &tag.assumptions);
  tag.kind = tag.algebraic ? RiccatiCase::III : RiccatiCase::IV;
  return tag;
}

IsoconstancyDirections isoconstancy_directions(const RatFunc& q, int params) {
  IsoconstancyDirections out;
  if (params == 0) return out;
  DiffOperator L({RatFunc(-2) * q.dx(), RatFunc(-4) * q, RatFunc(), RatFunc(1)});
  std::vector<RatFunc> rhs;
  for (int j = 0; j < params; ++j) rhs.push_back(RatFunc(-2) * q.derive(Derivation::param(j)));
  for (const auto& sol : rational_solutions_parametric(L, rhs)) {
    if (std::all_of(sol.c.begin(), sol.c.end(), [](const ParamScalar& c) { return c.is_zero(); })) continue;
    RatFunc lhs = op_apply(L, sol.f), expect;
    for (int j = 0; j < params; ++j) expect += RatFunc(sol.c[j]) * rhs[j];
    verify(lhs == expect, "isoconstancy witness");
    out.basis.push_back(sol.c);
    out.witnesses.push_back(sol.f);
  }
  return out;
}

}  // namespace ppv
