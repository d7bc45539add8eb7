#include "ppv/rational_calculus.hpp"

#include <algorithm>
#include <limits>

namespace ppv {

namespace {

RatFunc integrate_polynomial(const PPoly& p) {
  if (p.is_zero()) return {};
  std::vector<ParamScalar> c(static_cast<std::size_t>(p.degree()) + 2);
  for (int i = 0; i <= p.degree(); ++i) c[i + 1] = p.coeff(i) / ParamScalar(static_cast<long>(i) + 1);
  return RatFunc(PPoly(std::move(c)));
}

bool is_squarefree(const PPoly& d) { return d.degree() <= 0 || gcd(d, d.derivative()).degree() == 0; }

PPoly lcm(const PPoly& a, const PPoly& b) { return (a * exact_div(b, gcd(a, b))).monic(); }

mpq_class falling_q(const mpq_class& v, int i) {
  mpq_class r = 1;
  for (int k = 0; k < i; ++k) r *= v - k;
  return r;
}

QPoly interpolate_q(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  std::size_t n = xs.size();
  std::vector<mpq_class> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  QPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * QPoly(std::vector<mpq_class>{-xs[i], mpq_class(1)}) + QPoly(c[i]);
  return acc;
}

std::vector<mpz_class> intersect(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

// Integer multiple of a rational row with coprime integer entries.
std::vector<mpz_class> integer_row(const std::vector<mpq_class>& row, std::size_t width) {
  mpz_class l = 1;
  for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out(width, 0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    mpq_class v = row[i] * l;
    out[i] = v.get_num();
  }
  return out;
}

// Superset of the integer residues of a/d (d squarefree), read off the Rothstein-Trager
// resultant at specialized parameter values.
std::vector<mpz_class> residue_integer_candidates(const PPoly& a, const PPoly& d) {
  std::optional<std::vector<mpz_class>> cands;
  bool parametric = param_count(RatFunc::make(a, d)) > 0;
  int used = 0;
  for (int attempt = 0; attempt < 64 && used < (parametric ? 2 : 1); ++attempt) {
    auto pt = sample_point(attempt);
    auto dq = specialize(d, pt);
    auto aq = specialize(a, pt);
    if (!dq || !aq || dq->degree() != d.degree() || gcd(*dq, dq->derivative()).degree() != 0) continue;
    QPoly dp = dq->derivative();
    std::vector<mpq_class> zs, vals;
    for (int k = 0; k <= d.degree(); ++k) {
      zs.emplace_back(k);
      vals.push_back(resultant(*dq, *aq - dp.scaled(mpq_class(k))));
    }
    QPoly res = interpolate_q(zs, vals);
    ++used;
    std::vector<mpz_class> roots;
    if (res.degree() > 0) roots = integer_roots(primitive_integer(res));
    cands = cands ? intersect(*cands, roots) : roots;
  }
  if (!cands) raise(ErrorKind::Verification, "no admissible specialization point for residues");
  return *cands;
}

}  // namespace

HermiteResult hermite_reduce(const RatFunc& g) {
  HermiteResult out;
  if (g.is_zero()) return out;
  auto [poly, rest] = g.split_polynomial();
  RatFunc rational = integrate_polynomial(poly);
  if (rest.is_zero()) {
    out.rational_part = rational;
    return out;
  }
  PPoly a = rest.num(), d = rest.den();
  for (const auto& [v, mult] : squarefree_factorization(d)) {
    if (mult < 2) continue;
    PPoly u = exact_div(d, v.pow(static_cast<unsigned>(mult)));
    PPoly uvp = u * v.derivative();
    PPoly inv = inverse_mod(uvp, v);
    for (int j = mult - 1; j >= 1; --j) {
      // b u v' + c v = -a / j
      PPoly rhs = a.scaled(ParamScalar(mpq_class(-1, j)));
      PPoly b = (rhs % v) * inv % v;
      PPoly c = exact_div(rhs - b * uvp, v);
      rational += RatFunc::make(b, v.pow(static_cast<unsigned>(j)));
      a = c.scaled(ParamScalar(-j)) - u * b.derivative();
    }
    d = u * v;
  }
  out.rational_part = rational;
  out.residual = RatFunc::make(a, d);
  verify(out.rational_part.dx() + out.residual == g, "Hermite reduction");
  return out;
}

std::vector<ResidueFactor> residue_data(const RatFunc& r) {
  if (r.is_zero()) return {};
  if (!r.is_proper() || !is_squarefree(r.den()))
    raise(ErrorKind::Precondition, "residue data needs a proper squarefree form; call hermite_reduce first");
  const PPoly& d = r.den();
  const PPoly& a = r.num();
  PPoly dp = d.derivative();
  std::vector<ParamScalar> zs, vals;
  for (int k = 0; k <= d.degree(); ++k) {
    ParamScalar z(k);
    zs.push_back(z);
    vals.push_back(resultant(d, a - dp.scaled(z)));
  }
  return {ResidueFactor{d, interpolate(zs, vals)}};
}

std::optional<RatFunc> is_exact(const RatFunc& g) {
  HermiteResult h = hermite_reduce(g);
  if (!h.residual.is_zero()) return std::nullopt;
  verify(h.rational_part.dx() == g, "exactness witness");
  return h.rational_part;
}

std::optional<RatFunc> is_log_derivative(const RatFunc& g) {
  if (g.is_zero()) return RatFunc(1);
  if (!g.is_proper() || !is_squarefree(g.den())) return std::nullopt;
  const PPoly& d = g.den();
  const PPoly& a = g.num();
  PPoly dp = d.derivative();
  RatFunc f(1);
  int total = 0;
  for (const auto& n : residue_integer_candidates(a, d)) {
    if (n == 0) continue;
    PPoly h = gcd(d, a - dp.scaled(ParamScalar(mpq_class(n))));
    if (h.degree() <= 0) continue;
    total += h.degree();
    f *= RatFunc(h).pow(static_cast<int>(n.get_si()));
  }
  if (total != d.degree()) return std::nullopt;
  verify(f.dx() / f == g, "logarithmic derivative witness");
  return f;
}

ExactnessRelationSpace exactness_relation_space(const std::vector<RatFunc>& gs) {
  int n = static_cast<int>(gs.size());
  std::vector<HermiteResult> hs;
  std::vector<RatFunc> residuals;
  for (const auto& g : gs) {
    hs.push_back(hermite_reduce(g));
    residuals.push_back(hs.back().residual);
  }
  Matrix<ParamScalar> m = coefficient_matrix(residuals);
  std::vector<std::vector<ParamScalar>> kernel;
  if (m.empty()) {
    for (int i = 0; i < n; ++i) {
      std::vector<ParamScalar> e(static_cast<std::size_t>(n));
      e[i] = ParamScalar(1);
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = kernel_basis(m, n);
  }
  ExactnessRelationSpace out;
  out.basis = canonical_basis(kernel, n);
  for (const auto& c : out.basis) {
    RatFunc w, sum;
    for (int i = 0; i < n; ++i) {
      if (c[i].is_zero()) continue;
      w += RatFunc(c[i]) * hs[i].rational_part;
      sum += RatFunc(c[i]) * gs[i];
    }
    verify(w.dx() == sum, "exactness relation witness");
    out.witnesses.push_back(w);
  }
  return out;
}

LogDerLattice log_derivative_lattice(const std::vector<RatFunc>& gs) {
  std::size_t n = gs.size();
  LogDerLattice out;
  if (n == 0) return out;
  std::vector<RatFunc> exact_parts, residuals;
  for (const auto& g : gs) {
    HermiteResult h = hermite_reduce(g);
    exact_parts.push_back(g - h.residual);
    residuals.push_back(h.residual);
  }
  Matrix<mpq_class> rows = rational_coefficient_matrix(exact_parts);

  PPoly dsf(ParamScalar(1));
  for (const auto& r : residuals)
    if (!r.is_zero()) dsf = lcm(dsf, r.den());

  std::vector<std::vector<mpq_class>> value_rows;  // integrality of residue values
  if (dsf.degree() > 0) {
    PPoly dp = dsf.derivative();
    PPoly inv = inverse_mod(dp, dsf);
    std::vector<PPoly> rho;
    for (const auto& r : residuals) {
      if (r.is_zero()) {
        rho.emplace_back();
        continue;
      }
      PPoly a = r.num() * exact_div(dsf, r.den());
      rho.push_back(a * inv % dsf);
    }
    // Residue values must not depend on the parameters.
    int m = param_count(gs);
    for (int j = 0; j < m; ++j) {
      Derivation dj = Derivation::param(j);
      PPoly corr = derive_coefficients(dsf, dj) * inv % dsf;
      std::vector<RatFunc> dr;
      for (const auto& p : rho) dr.emplace_back((derive_coefficients(p, dj) - p.derivative() * corr) % dsf);
      for (auto& row : rational_coefficient_matrix(dr)) rows.push_back(std::move(row));
    }
    // Specialize to read off the constant residue values on each irreducible factor over Q.
    std::optional<QPoly> dq;
    std::vector<QPoly> rq;
    for (int attempt = 0; attempt < 64 && !dq; ++attempt) {
      auto pt = sample_point(attempt);
      auto ds = specialize(dsf, pt);
      if (!ds || ds->degree() != dsf.degree() || gcd(*ds, ds->derivative()).degree() != 0) continue;
      std::vector<QPoly> vals;
      bool ok = true;
      for (const auto& p : rho) {
        auto s = specialize(p, pt);
        if (!s) {
          ok = false;
          break;
        }
        vals.push_back(*s);
      }
      if (!ok) continue;
      dq = ds;
      rq = std::move(vals);
    }
    if (!dq) raise(ErrorKind::Verification, "no admissible specialization point for residues");
    for (const auto& [factor, mult] : factor_over_q(*dq)) {
      (void)mult;
      std::vector<QPoly> red;
      for (const auto& r : rq) red.push_back(r % factor);
      for (int k = 1; k < factor.degree(); ++k) {
        std::vector<mpq_class> row;
        for (const auto& r : red) row.push_back(r.coeff(k));
        rows.push_back(std::move(row));
      }
      std::vector<mpq_class> vrow;
      for (const auto& r : red) vrow.push_back(r.coeff(0));
      value_rows.push_back(std::move(vrow));
    }
  }

  std::size_t width = n + value_rows.size();
  ZMatrix sys;
  for (const auto& r : rows)
    if (std::any_of(r.begin(), r.end(), [](const mpq_class& c) { return c != 0; }))
      sys.push_back(integer_row(r, width));
  for (std::size_t p = 0; p < value_rows.size(); ++p) {
    mpz_class l = 1;
    for (const auto& c : value_rows[p]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> row(width, 0);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class v = value_rows[p][i] * l;
      row[i] = v.get_num();
    }
    row[n + p] = -l;
    sys.push_back(std::move(row));
  }
  ZMatrix kernel = integer_kernel(sys, static_cast<int>(width));
  ZMatrix projected;
  for (const auto& k : kernel) projected.emplace_back(k.begin(), k.begin() + static_cast<long>(n));
  out.generators = hermite_basis(projected, static_cast<int>(n));
  for (const auto& k : out.generators) {
    RatFunc h;
    for (std::size_t i = 0; i < n; ++i)
      if (k[i] != 0) h += RatFunc(ParamScalar(mpq_class(k[i]))) * gs[i];
    auto f = is_log_derivative(h);
    verify(f.has_value(), "lattice generator is a logarithmic derivative");
    out.witnesses.push_back(*f);
  }
  return out;
}

namespace {

// Exponent bound for the pole of a solution along the squarefree factor b.
int pole_order_bound(const std::vector<PPoly>& p, const PPoly& b, int rhs_order) {
  int n = static_cast<int>(p.size()) - 1;
  std::vector<int> e(p.size(), -1);
  int s = std::numeric_limits<int>::max();
  for (int i = 0; i <= n; ++i) {
    if (p[i].is_zero()) continue;
    e[i] = multiplicity(p[i], b);
    s = std::min(s, e[i] - i);
  }
  // Indicial polynomial I(N, x) = sum_{e_i - i = s} Q_i b'^{e_i} ff(-N, i) mod b.
  std::vector<std::pair<int, PPoly>> terms;
  PPoly bp = b.derivative();
  for (int i = 0; i <= n; ++i) {
    if (e[i] < 0 || e[i] - i != s) continue;
    PPoly q = exact_div(p[i], b.pow(static_cast<unsigned>(e[i])));
    terms.emplace_back(i, q * bp.pow(static_cast<unsigned>(e[i])) % b);
  }
  int max_i = terms.back().first;
  int samples = max_i * b.degree() + 1;
  std::optional<std::vector<mpz_class>> cands;
  int used = 0;
  for (int attempt = 0; attempt < 64 && used < 2; ++attempt) {
    auto pt = sample_point(attempt);
    auto bq = specialize(b, pt);
    if (!bq || bq->degree() != b.degree() || gcd(*bq, bq->derivative()).degree() != 0) continue;
    std::vector<std::pair<int, QPoly>> tq;
    bool ok = true;
    for (const auto& [i, c] : terms) {
      auto s2 = specialize(c, pt);
      if (!s2) {
        ok = false;
        break;
      }
      tq.emplace_back(i, *s2);
    }
    if (!ok) continue;
    std::vector<mpq_class> xs, ys;
    for (int k = 0; k < samples; ++k) {
      mpq_class nval = k;
      QPoly ival;
      for (const auto& [i, c] : tq) ival += c.scaled(falling_q(-nval, i));
      xs.push_back(nval);
      ys.push_back(resultant(*bq, ival));
    }
    QPoly norm = interpolate_q(xs, ys);
    if (norm.is_zero()) continue;
    ++used;
    std::vector<mpz_class> roots;
    if (norm.degree() > 0) roots = integer_roots(primitive_integer(norm));
    cands = cands ? intersect(*cands, roots) : roots;
  }
  if (!cands) raise(ErrorKind::Verification, "no admissible specialization point for the indicial equation");
  int bound = 0;
  for (const auto& r : *cands)
    if (r > bound) bound = static_cast<int>(r.get_si());
  if (rhs_order != std::numeric_limits<int>::max()) bound = std::max(bound, s - rhs_order);
  return bound;
}

}  // namespace

std::vector<ParametricSolution> rational_solutions_parametric(const DiffOperator& L,
                                                              const std::vector<RatFunc>& rhs) {
  if (L.order() < 0) raise(ErrorKind::Precondition, "rational solutions of the zero operator");
  int n = L.order();
  std::size_t s = rhs.size();
  PPoly dc(ParamScalar(1));
  for (const auto& c : L.coeffs())
    if (!c.is_zero()) dc = lcm(dc, c.den());
  std::vector<PPoly> p;
  for (const auto& c : L.coeffs()) p.push_back(c.is_zero() ? PPoly() : c.num() * exact_div(dc, c.den()));
  std::vector<RatFunc> scaled_rhs;
  for (const auto& r : rhs) scaled_rhs.push_back(r * RatFunc(dc));

  std::vector<PPoly> inputs = p;
  for (const auto& r : scaled_rhs)
    if (!r.is_zero()) inputs.push_back(r.den());
  PPoly den(ParamScalar(1));
  for (const auto& b : coprime_base(inputs)) {
    bool singular = multiplicity(p[n], b) > 0;
    int rhs_order = std::numeric_limits<int>::max();
    for (const auto& r : scaled_rhs) {
      if (r.is_zero()) continue;
      int k = multiplicity(r.den(), b);
      if (k > 0) singular = true;
      rhs_order = std::min(rhs_order, -k);
    }
    if (!singular) continue;
    int e = pole_order_bound(p, b, rhs_order);
    if (e > 0) den = den * b.pow(static_cast<unsigned>(e));
  }

  // Degree bound for the numerator y in f = y / den.
  DiffOperator lt = op_compose(L, DiffOperator({RatFunc::make(PPoly(ParamScalar(1)), den)}));
  int s_inf = std::numeric_limits<int>::min();
  for (int l = 0; l <= lt.order(); ++l) {
    const RatFunc& c = lt.coeffs()[l];
    if (c.is_zero()) continue;
    s_inf = std::max(s_inf, c.num().degree() - c.den().degree() - l);
  }
  PPoly indicial;
  for (int l = 0; l <= lt.order(); ++l) {
    const RatFunc& c = lt.coeffs()[l];
    if (c.is_zero() || c.num().degree() - c.den().degree() - l != s_inf) continue;
    // lc(c) * d (d-1) ... (d-l+1)
    PPoly ff(ParamScalar(1));
    for (int k = 0; k < l; ++k) ff = ff * PPoly(std::vector<ParamScalar>{ParamScalar(-k), ParamScalar(1)});
    indicial += ff.scaled(c.num().lead());
  }
  int degree = -1;
  for (const auto& r : integer_root_candidates(indicial))
    if (r > degree) degree = static_cast<int>(r.get_si());
  for (const auto& r : rhs)
    if (!r.is_zero()) degree = std::max(degree, r.num().degree() - r.den().degree() - s_inf);

  std::vector<RatFunc> cols;
  for (const auto& r : rhs) cols.push_back(-r);
  PPoly xk(ParamScalar(1));
  for (int k = 0; k <= degree; ++k) {
    cols.push_back(op_apply(lt, RatFunc(xk)));
    xk = xk * PPoly::x();
  }
  int ncols = static_cast<int>(cols.size());
  Matrix<ParamScalar> m = coefficient_matrix(cols);
  std::vector<std::vector<ParamScalar>> kernel;
  if (m.empty()) {
    for (int i = 0; i < ncols; ++i) {
      std::vector<ParamScalar> e(static_cast<std::size_t>(ncols));
      e[i] = ParamScalar(1);
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = kernel_basis(m, ncols);
  }
  std::vector<ParametricSolution> out;
  for (auto& v : canonical_basis(kernel, ncols)) {
    ParametricSolution sol;
    sol.c.assign(v.begin(), v.begin() + static_cast<long>(s));
    std::vector<ParamScalar> y(v.begin() + static_cast<long>(s), v.end());
    sol.f = RatFunc::make(PPoly(std::move(y)), den);
    RatFunc target;
    for (std::size_t j = 0; j < s; ++j)
      if (!sol.c[j].is_zero()) target += RatFunc(sol.c[j]) * rhs[j];
    verify(op_apply(L, sol.f) == target, "rational solution witness");
    out.push_back(std::move(sol));
  }
  return out;
}

RationalSolutionSpace rational_solutions(const DiffOperator& L, const RatFunc& rhs) {
  RationalSolutionSpace out;
  if (rhs.is_zero()) {
    out.particular = RatFunc();
    for (auto& s : rational_solutions_parametric(L, {})) out.kernel.push_back(std::move(s.f));
    return out;
  }
  for (auto& s : rational_solutions_parametric(L, {rhs})) {
    if (s.c[0].is_zero()) {
      out.kernel.push_back(std::move(s.f));
    } else {
      out.particular = s.f / RatFunc(s.c[0]);
    }
  }
  return out;
}

}  // namespace ppv
