#include "ppv/lindiff.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ppv/error.hpp"
#include "ppv/linalg.hpp"
#include "ppv/rational_calculus.hpp"

namespace ppv {

ThetaMonomial::ThetaMonomial(std::vector<int> e) : exponents(std::move(e)) {
  while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
}

ThetaMonomial ThetaMonomial::unit(int index) {
  std::vector<int> e(static_cast<std::size_t>(index) + 1, 0);
  e[index] = 1;
  return ThetaMonomial(std::move(e));
}

int ThetaMonomial::order() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

ThetaMonomial ThetaMonomial::times(int j) const {
  std::vector<int> e = exponents;
  if (static_cast<int>(e.size()) <= j) e.resize(static_cast<std::size_t>(j) + 1, 0);
  ++e[j];
  return ThetaMonomial(std::move(e));
}

int ThetaMonomial::lowest_index() const {
  for (std::size_t j = 0; j < exponents.size(); ++j)
    if (exponents[j] > 0) return static_cast<int>(j);
  return -1;
}

bool operator==(const ThetaMonomial& a, const ThetaMonomial& b) { return a.exponents == b.exponents; }

// Same order: larger exponent at the first differing index comes first, so D1 < D2 and D1^2 < D1 D2.
bool operator<(const ThetaMonomial& a, const ThetaMonomial& b) {
  int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  std::size_t n = std::max(a.exponents.size(), b.exponents.size());
  for (std::size_t j = 0; j < n; ++j) {
    int ea = a.exponent(static_cast<int>(j)), eb = b.exponent(static_cast<int>(j));
    if (ea != eb) return ea > eb;
  }
  return false;
}

bool operator<(const LinTerm& a, const LinTerm& b) {
  if (!(a.theta == b.theta)) return a.theta < b.theta;
  return a.var < b.var;
}

std::vector<ThetaMonomial> theta_monomials(int params, int n) {
  std::vector<ThetaMonomial> out{ThetaMonomial()};
  std::vector<ThetaMonomial> layer{ThetaMonomial()};
  for (int k = 1; k <= n && params > 0; ++k) {
    std::vector<ThetaMonomial> next;
    for (const auto& t : layer)
      for (int j = 0; j < params; ++j) next.push_back(t.times(j));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

RatFunc apply_theta(const ThetaMonomial& t, const RatFunc& f) {
  RatFunc r = f;
  for (std::size_t j = 0; j < t.exponents.size(); ++j)
    for (int k = 0; k < t.exponents[j]; ++k) r = r.derive(Derivation::param(static_cast<int>(j)));
  return r;
}

LinDiffPoly LinDiffPoly::variable(int var, ParamScalar c) { return term(LinTerm{ThetaMonomial(), var}, std::move(c)); }

LinDiffPoly LinDiffPoly::term(LinTerm t, ParamScalar c) {
  LinDiffPoly p;
  p.add(t, c);
  return p;
}

int LinDiffPoly::order() const {
  int o = -1;
  for (const auto& [t, c] : terms_) o = std::max(o, t.theta.order());
  return o;
}

void LinDiffPoly::add(const LinTerm& t, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LinDiffPoly& LinDiffPoly::operator+=(const LinDiffPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

LinDiffPoly& LinDiffPoly::operator-=(const LinDiffPoly& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

LinDiffPoly LinDiffPoly::scaled(const ParamScalar& c) const {
  LinDiffPoly r;
  if (c.is_zero()) return r;
  for (const auto& [t, v] : terms_) r.add(t, v * c);
  return r;
}

namespace {

// theta Y_j as the monomial theta d_j, and back with the lowest index as the variable.
ThetaMonomial full_monomial(const LinTerm& t) { return t.theta.times(t.var); }

LinTerm from_full(const ThetaMonomial& mu) {
  int low = mu.lowest_index();
  std::vector<int> e = mu.exponents;
  --e[low];
  return LinTerm{ThetaMonomial(std::move(e)), low};
}

}  // namespace

LinDiffPoly LinDiffPoly::integrable_form() const {
  LinDiffPoly r;
  for (const auto& [t, c] : terms_) r.add(t.var == LinTerm::kSingleVar ? t : from_full(full_monomial(t)), c);
  return r;
}

LinDiffPoly LinDiffPoly::derive(int k) const {
  LinDiffPoly r;
  for (const auto& [t, c] : terms_) {
    r.add(t, c.derivative(k));
    r.add(LinTerm{t.theta.times(k), t.var}, c);
  }
  return r;
}

std::string LinDiffPoly::to_string(std::span<const std::string> params, std::span<const std::string> vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    std::string name;
    if (t.var == LinTerm::kSingleVar)
      name = vars.empty() ? "Y" : vars[0];
    else
      name = static_cast<std::size_t>(t.var) < vars.size() ? vars[t.var] : "Y" + std::to_string(t.var + 1);
    std::string theta;
    for (std::size_t j = 0; j < t.theta.exponents.size(); ++j) {
      int e = t.theta.exponents[j];
      if (e == 0) continue;
      if (!theta.empty()) theta += " ";
      theta += "D" + std::to_string(j + 1);
      if (e > 1) theta += "^" + std::to_string(e);
    }
    bool simple = std::all_of(name.begin(), name.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)); });
    std::string body = theta.empty() ? name : theta + (simple ? " " + name : "(" + name + ")");

    bool negative = c.is_constant() && sgn(c.constant_value()) < 0;
    ParamScalar mag = negative ? -c : c;
    std::string coef;
    if (!mag.is_one()) {
      coef = mag.to_string(params);
      bool atomic = mag.is_constant() || (mag.is_polynomial() && mag.num().terms().size() == 1);
      if (!atomic) coef = "(" + coef + ")";
      coef += "*";
    }
    if (out.empty())
      out = (negative ? "-" : "") + coef + body;
    else
      out += (negative ? " - " : " + ") + coef + body;
  }
  return out;
}

RatFunc apply_lindiff(const LinDiffPoly& p, const std::vector<RatFunc>& values) {
  RatFunc r;
  for (const auto& [t, c] : p.terms()) {
    std::size_t idx = t.var == LinTerm::kSingleVar ? 0 : static_cast<std::size_t>(t.var);
    if (idx >= values.size()) raise(ErrorKind::Precondition, "apply_lindiff: no value for variable " + std::to_string(t.var + 1));
    r += RatFunc(c) * apply_theta(t.theta, values[idx]);
  }
  return r;
}

std::vector<RatFunc> parameter_gradient(const RatFunc& w, int params) {
  std::vector<RatFunc> g;
  for (int j = 0; j < params; ++j) g.push_back(w.derive(Derivation::param(j)));
  return g;
}

const char* to_string(MultGroupDesc::Kind k) { return k == MultGroupDesc::Kind::Finite ? "finite" : "infinite"; }

const char* to_string(AddGroupDesc::Kind k) {
  switch (k) {
    case AddGroupDesc::Kind::Zero: return "zero";
    case AddGroupDesc::Kind::Full: return "full";
    case AddGroupDesc::Kind::Relations: return "relations";
    case AddGroupDesc::Kind::Unresolved: return "unresolved";
  }
  return "?";
}

namespace {

// Row vector over F0 together with a witness that follows every row operation.
struct WRow {
  std::vector<ParamScalar> v;
  RatFunc f;
};

bool zero_row(const WRow& r) {
  return std::all_of(r.v.begin(), r.v.end(), [](const ParamScalar& c) { return c.is_zero(); });
}

int pivot_of(const WRow& r) {
  for (std::size_t i = 0; i < r.v.size(); ++i)
    if (!r.v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void axpy(WRow& dst, const ParamScalar& a, const WRow& src) {
  for (std::size_t i = 0; i < dst.v.size(); ++i)
    if (!src.v[i].is_zero()) dst.v[i] -= a * src.v[i];
  if (!src.f.is_zero()) dst.f -= RatFunc(a) * src.f;
}

void scale(WRow& r, const ParamScalar& a) {
  for (auto& c : r.v)
    if (!c.is_zero()) c *= a;
  r.f *= RatFunc(a);
}

std::vector<WRow> rref_rows(std::vector<WRow> m) {
  std::vector<WRow> out;
  std::size_t ncols = m.empty() ? 0 : m[0].v.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r].v[col].is_zero()) continue;
      if (best == m.size() || m[r].v[col].size() < m[best].v[col].size()) best = r;
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    scale(m[row], m[row].v[col].inverse());
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r].v[col].is_zero()) continue;
      ParamScalar a = m[r].v[col];
      axpy(m[r], a, m[row]);
    }
    ++row;
  }
  m.resize(row);
  return m;
}

// Clears the pivot columns of a reduced echelon basis from r.
void reduce(WRow& r, const std::vector<WRow>& basis) {
  for (const auto& b : basis) {
    int p = pivot_of(b);
    if (!r.v[p].is_zero()) {
      ParamScalar a = r.v[p];
      axpy(r, a, b);
    }
  }
}

std::vector<WRow> relation_rows(const std::vector<RatFunc>& family) {
  ExactnessRelationSpace s = exactness_relation_space(family);
  std::vector<WRow> rows;
  for (std::size_t i = 0; i < s.basis.size(); ++i) rows.push_back(WRow{s.basis[i], s.witnesses[i]});
  return rows;
}

// Columns for the multi-variable case: all theta d_j with |theta| <= n, one per full monomial.
std::vector<LinTerm> multi_columns(int params, int n) {
  std::vector<LinTerm> cols;
  for (const auto& mu : theta_monomials(params, n + 1))
    if (mu.order() > 0) cols.push_back(from_full(mu));
  return cols;
}

std::vector<LinTerm> single_columns(int params, int n) {
  std::vector<LinTerm> cols;
  for (const auto& t : theta_monomials(params, n)) cols.push_back(LinTerm{t, LinTerm::kSingleVar});
  return cols;
}

// theta d_j w for every column, reusing lower derivatives.
std::vector<RatFunc> family_values(const RatFunc& w, const std::vector<LinTerm>& cols) {
  std::map<ThetaMonomial, RatFunc> memo;
  memo.emplace(ThetaMonomial(), w);
  auto value = [&](auto&& self, const ThetaMonomial& mu) -> RatFunc {
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    int low = mu.lowest_index();
    std::vector<int> e = mu.exponents;
    --e[low];
    RatFunc r = self(self, ThetaMonomial(std::move(e))).derive(Derivation::param(low));
    memo.emplace(mu, r);
    return r;
  };
  std::vector<RatFunc> out;
  for (const auto& c : cols)
    out.push_back(value(value, c.var == LinTerm::kSingleVar ? c.theta : full_monomial(c)));
  return out;
}

LinDiffPoly to_poly(const std::vector<ParamScalar>& v, const std::vector<LinTerm>& cols, std::size_t offset = 0) {
  LinDiffPoly p;
  for (std::size_t i = 0; i < cols.size(); ++i) p.add(cols[i], v[offset + i]);
  return p;
}

std::vector<ParamScalar> to_vector(const LinDiffPoly& p, const std::vector<LinTerm>& cols) {
  std::vector<ParamScalar> v(cols.size());
  for (const auto& [t, c] : p.terms()) {
    auto it = std::find(cols.begin(), cols.end(), t);
    if (it == cols.end()) raise(ErrorKind::Precondition, "linear differential polynomial exceeds the truncation order");
    v[static_cast<std::size_t>(it - cols.begin())] = c;
  }
  return v;
}

std::size_t rank_of(const std::vector<WRow>& rows) { return rref_rows(rows).size(); }

bool verify_relation(const LinDiffPoly& p, const RatFunc& witness, const std::vector<RatFunc>& values) {
  return apply_lindiff(p, values) == witness.dx();
}

// Pairs in the row space of s whose p-part (first np coordinates) lies outside `pspan`, reported
// modulo those whose p-part lies inside it.
std::vector<WRow> quotient_pairs(const std::vector<WRow>& s, const std::vector<WRow>& pspan, std::size_t np) {
  std::vector<WRow> preduced;
  for (const auto& r : s) {
    WRow p{std::vector<ParamScalar>(r.v.begin(), r.v.begin() + static_cast<long>(np)), RatFunc()};
    reduce(p, pspan);
    preduced.push_back(std::move(p));
  }
  // lambda with sum lambda_i preduced_i = 0 span the trivial part.
  std::vector<WRow> trivial;
  if (!s.empty()) {
    Matrix<ParamScalar> m(np, std::vector<ParamScalar>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t k = 0; k < np; ++k) m[k][i] = preduced[i].v[k];
    std::vector<std::vector<ParamScalar>> lambdas;
    if (np == 0) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<ParamScalar> e(s.size());
        e[i] = ParamScalar(1);
        lambdas.push_back(std::move(e));
      }
    } else {
      lambdas = kernel_basis(m, static_cast<int>(s.size()));
    }
    for (const auto& l : lambdas) {
      WRow t{std::vector<ParamScalar>(s[0].v.size()), RatFunc()};
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!l[i].is_zero()) axpy(t, -l[i], s[i]);
      trivial.push_back(std::move(t));
    }
  }
  std::vector<WRow> tb = rref_rows(trivial);
  std::vector<WRow> reps;
  for (auto r : s) {
    reduce(r, tb);
    if (!zero_row(r)) reps.push_back(std::move(r));
  }
  return rref_rows(reps);
}

std::vector<CouplingPair> to_pairs(const std::vector<WRow>& rows, const std::vector<LinTerm>& pcols,
                                   const std::vector<LinTerm>& qcols) {
  std::vector<CouplingPair> out;
  for (const auto& r : rows) out.push_back(CouplingPair{to_poly(r.v, pcols), to_poly(r.v, qcols, pcols.size()), r.f});
  return out;
}

}  // namespace

MultGroupDesc compute_mult_group(const RatFunc& w, int params, const MultGroupOptions& opts) {
  MultGroupDesc d;
  LogDerLattice lat = log_derivative_lattice({w});
  if (!lat.generators.empty()) {
    mpz_class l = abs(lat.generators[0][0]);
    RatFunc f = sgn(lat.generators[0][0]) > 0 ? lat.witnesses[0] : lat.witnesses[0].inverse();
    if (l <= opts.finite_order_bound) {
      d.kind = MultGroupDesc::Kind::Finite;
      d.order = l.get_si();
      d.witness = f;
      verify(RatFunc(d.order) * w == f.dx() / f, "finite order witness");
      return d;
    }
    d.order_bound_hit = true;
  }
  d.kind = MultGroupDesc::Kind::Infinite;
  d.witness = RatFunc(1);
  int n = std::max(0, opts.max_theta_order);
  d.truncation = n;
  if (params == 0) {
    d.dimensions.assign(static_cast<std::size_t>(n) + 1, 0);
    return d;
  }
  // Columns from the highest order down, so the rows with pivot of order <= k span the order-k space.
  std::vector<LinTerm> cols = multi_columns(params, n);
  std::reverse(cols.begin(), cols.end());
  std::vector<WRow> rows = relation_rows(family_values(w, cols));
  auto pivot_order = [&](const WRow& r) { return cols[static_cast<std::size_t>(pivot_of(r))].theta.order(); };

  std::vector<RatFunc> values = parameter_gradient(w, params);
  std::vector<WRow> generated;
  for (int k = 0; k <= n; ++k) {
    int dim = 0;
    for (const auto& r : rows)
      if (pivot_order(r) <= k) ++dim;
    d.dimensions.push_back(dim);
    for (const auto& r : rows) {
      if (pivot_order(r) != k) continue;
      std::vector<WRow> trial = generated;
      trial.push_back(r);
      if (rank_of(trial) == rank_of(generated)) continue;
      LinDiffPoly p = to_poly(r.v, cols);
      verify(verify_relation(p, r.f, values), "multiplicative relation witness");
      d.relations.push_back(Relation{p, r.f});
      // Every derivative of a relation is a relation.
      std::vector<LinDiffPoly> layer{p};
      generated.push_back(WRow{r.v, RatFunc()});
      for (int o = k + 1; o <= n; ++o) {
        std::vector<LinDiffPoly> next;
        for (const auto& q : layer)
          for (int j = 0; j < params; ++j) {
            LinDiffPoly dq = q.derive(j).integrable_form();
            generated.push_back(WRow{to_vector(dq, cols), RatFunc()});
            next.push_back(std::move(dq));
          }
        layer = std::move(next);
      }
      generated = rref_rows(generated);
    }
  }
  return d;
}

bool is_pi_constant(const MultGroupDesc& d, int params) {
  if (d.kind == MultGroupDesc::Kind::Finite) return true;
  return !d.dimensions.empty() && d.dimensions[0] == params;
}

std::vector<CouplingPair> coupling_relations(const RatFunc& u, const RatFunc& r1, int params, int max_theta_order) {
  if (params == 0) return {};
  int n = std::max(0, max_theta_order);
  std::vector<LinTerm> cols = multi_columns(params, n);
  std::vector<RatFunc> fu = family_values(u, cols);
  std::vector<RatFunc> family = fu;
  for (auto& g : family_values(r1, cols)) family.push_back(-g);
  std::vector<WRow> s = relation_rows(family);
  std::vector<WRow> a_span = relation_rows(fu);
  std::vector<CouplingPair> out = to_pairs(quotient_pairs(s, a_span, cols.size()), cols, cols);

  std::vector<RatFunc> vu = parameter_gradient(u, params), vr = parameter_gradient(r1, params);
  for (const auto& c : out) {
    verify(verify_pair(c, vu, vr), "coupling relation witness");
    WRow p{to_vector(c.p, cols), RatFunc()};
    reduce(p, a_span);
    verify(!zero_row(p), "coupling relation is nontrivial on A");
  }
  return out;
}

std::vector<CouplingPair> coupling_relations_additive(const RatFunc& eta2inv, const RatFunc& r1, const AddGroupDesc& b,
                                                      int params, int max_theta_order) {
  if (b.kind == AddGroupDesc::Kind::Zero) raise(ErrorKind::Precondition, "precondition: B ≠ 0");
  int n = std::max(0, max_theta_order);
  std::vector<LinTerm> pcols = single_columns(params, n);
  std::vector<LinTerm> qcols = multi_columns(params, n);
  std::vector<RatFunc> family = family_values(eta2inv, pcols);
  for (auto& g : family_values(r1, qcols)) family.push_back(-g);
  std::vector<WRow> s = relation_rows(family);

  // Differential closure of the known relations of B up to the truncation order.
  std::vector<WRow> bspan;
  if (b.kind == AddGroupDesc::Kind::Relations) {
    std::vector<LinDiffPoly> all;
    for (const auto& r : b.relations) {
      std::vector<LinDiffPoly> layer{r};
      for (int o = r.order(); o <= n && !layer.empty(); ++o) {
        all.insert(all.end(), layer.begin(), layer.end());
        std::vector<LinDiffPoly> next;
        for (const auto& q : layer)
          for (int j = 0; j < params; ++j) next.push_back(q.derive(j));
        layer = std::move(next);
      }
    }
    for (const auto& p : all) bspan.push_back(WRow{to_vector(p, pcols), RatFunc()});
    bspan = rref_rows(bspan);
  }
  std::vector<CouplingPair> out = to_pairs(quotient_pairs(s, bspan, pcols.size()), pcols, qcols);
  std::vector<RatFunc> vr = parameter_gradient(r1, params);
  for (const auto& c : out) {
    verify(verify_pair(c, {eta2inv}, vr), "additive coupling relation witness");
    verify(!c.p.is_zero(), "additive coupling relation is nontrivial on B");
  }
  return out;
}

std::vector<CouplingPair> canonicalize_basis(const std::vector<CouplingPair>& pairs) {
  std::vector<LinTerm> pcols, qcols;
  for (const auto& c : pairs) {
    for (const auto& [t, v] : c.p.terms()) pcols.push_back(t);
    for (const auto& [t, v] : c.q.terms()) qcols.push_back(t);
  }
  for (auto* cols : {&pcols, &qcols}) {
    std::sort(cols->begin(), cols->end());
    cols->erase(std::unique(cols->begin(), cols->end()), cols->end());
  }
  std::vector<WRow> rows;
  for (const auto& c : pairs) {
    WRow r{to_vector(c.p, pcols), c.witness};
    auto q = to_vector(c.q, qcols);
    r.v.insert(r.v.end(), q.begin(), q.end());
    rows.push_back(std::move(r));
  }
  return to_pairs(rref_rows(rows), pcols, qcols);
}

bool verify_pair(const CouplingPair& c, const std::vector<RatFunc>& values_p, const std::vector<RatFunc>& values_q) {
  return apply_lindiff(c.p, values_p) - apply_lindiff(c.q, values_q) == c.witness.dx();
}

}  // namespace ppv
