#include "ppv/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ppv/error.hpp"

namespace ppv {

int Monomial::total() const {
  int s = 0;
  for (auto e : exp) s += e;
  return s;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxParams; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxParams; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxParams; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int i = kMaxParams - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_greater(const MTerm& a, const MTerm& b) { return grlex_compare(a.mono, b.mono) > 0; }

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpq_class(c)});
}

// mpq_class(n, d) is not canonicalized by gmpxx.
MPoly::MPoly(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  if (sgn(v) != 0) terms_.push_back({Monomial{}, std::move(v)});
}

MPoly MPoly::variable(int index) {
  if (index < 0 || index >= kMaxParams) raise(ErrorKind::InvalidInput, "parameter index out of range");
  Monomial m;
  m.exp[index] = 1;
  return term(m, 1);
}

MPoly MPoly::term(const Monomial& m, const mpq_class& c) {
  MPoly p;
  mpq_class v = c;
  v.canonicalize();
  if (sgn(v) != 0) p.terms_.push_back({m, std::move(v)});
  return p;
}

MPoly MPoly::from_terms(std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

mpq_class MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_[0].coef;
}

int MPoly::degree(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[var]);
  return d;
}

int MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total(); }

int MPoly::max_var() const {
  int v = -1;
  for (const auto& t : terms_)
    for (int i = kMaxParams - 1; i > v; --i)
      if (t.mono.exp[i] != 0) {
        v = i;
        break;
      }
  return v;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<MTerm> merge(const std::vector<MTerm>& a, const std::vector<MTerm>& b, bool subtract) {
  std::vector<MTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coef = -out.back().coef;
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].coef - b[j].coef) : mpq_class(a[i].coef + b[j].coef);
      if (sgn(s) != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coef;
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coef;
  std::vector<MTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coef * t.coef});
  return MPoly::from_terms(std::move(prod));
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c < 0;
    if (a.terms_[i].coef != b.terms_[i].coef) return a.terms_[i].coef < b.terms_[i].coef;
  }
  return a.terms_.size() < b.terms_.size();
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(int var) const {
  std::vector<MTerm> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[var] == 0) continue;
    MTerm d = t;
    d.coef *= t.mono.exp[var];
    d.mono.exp[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

mpq_class MPoly::eval(std::span<const mpq_class> point) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coef;
    for (int i = 0; i < kMaxParams; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (i >= static_cast<int>(point.size())) raise(ErrorKind::InvalidInput, "evaluation point too short");
      for (int k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
  std::vector<std::vector<MTerm>> parts(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& t : terms_) {
    MTerm s = t;
    int e = s.mono.exp[var];
    s.mono.exp[var] = 0;
    parts[e].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(from_terms(std::move(p)));
  return out;
}

MPoly MPoly::from_coeffs_in(int var, const std::vector<MPoly>& coeffs) {
  std::vector<MTerm> all;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms_) {
      MTerm s = t;
      s.mono.exp[var] = static_cast<std::uint16_t>(s.mono.exp[var] + e);
      all.push_back(std::move(s));
    }
  }
  return from_terms(std::move(all));
}

MPoly MPoly::shifted(std::span<const mpq_class> shift) const {
  // One variable at a time, Horner in that variable.
  MPoly result = *this;
  for (int v = 0; v < kMaxParams && v < static_cast<int>(shift.size()); ++v) {
    if (sgn(shift[v]) == 0 || !result.involves(v)) continue;
    auto coeffs = result.coeffs_in(v);
    MPoly lin = variable(v) + MPoly(shift[v]);
    MPoly acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * lin + coeffs[k];
    result = acc;
  }
  return result;
}

MPoly MPoly::truncated(int max_total_degree) const {
  MPoly r;
  for (const auto& t : terms_)
    if (t.mono.total() <= max_total_degree) r.terms_.push_back(t);
  return r;
}

MPoly MPoly::homogeneous_part(int degree) const {
  MPoly r;
  for (const auto& t : terms_)
    if (t.mono.total() == degree) r.terms_.push_back(t);
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / lead_coef();
  return *this * inv;
}

mpq_class MPoly::rational_content() const {
  if (is_zero()) return 1;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpq_class c(g, l);
  c.canonicalize();
  if (sgn(lead_coef()) < 0) c = -c;
  return c;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
      if (!t.mono.is_one()) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kMaxParams; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (i < static_cast<int>(names.size()) ? names[i] : "t" + std::to_string(i + 1));
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a * (1 / b.constant_value());
  const MTerm& lb = b.lead();
  std::vector<MTerm> quotient;
  MPoly r = a;
  while (!r.is_zero()) {
    const MTerm& lr = r.lead();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    MTerm q{lr.mono / lb.mono, lr.coef / lb.coef};
    r -= b * MPoly::term(q.mono, q.coef);
    quotient.push_back(std::move(q));
  }
  return MPoly::from_terms(std::move(quotient));
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) raise(ErrorKind::Verification, "inexact polynomial division");
  return *q;
}

namespace {

using UCoeffs = std::vector<MPoly>;  // univariate with MPoly coefficients, index = degree

int udeg(const UCoeffs& p) { return static_cast<int>(p.size()) - 1; }

void utrim(UCoeffs& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UCoeffs pseudo_remainder(UCoeffs a, const UCoeffs& b) {
  int db = udeg(b);
  int e = udeg(a) - db + 1;
  const MPoly& lb = b.back();
  while (!a.empty() && udeg(a) >= db) {
    MPoly lr = a.back();
    int shift = udeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= lr * b[i];
    utrim(a);
    --e;
  }
  if (e > 0) {
    MPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

MPoly content(const UCoeffs& p) {
  MPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (!g.is_zero() && g.is_constant()) return MPoly(1);
  }
  return g;
}

UCoeffs primitive_part(const UCoeffs& p) {
  MPoly c = content(p);
  UCoeffs r;
  r.reserve(p.size());
  for (const auto& x : p) r.push_back(exact_quotient(x, c));
  return r;
}

bool all_constant(const UCoeffs& p) {
  return std::all_of(p.begin(), p.end(), [](const MPoly& c) { return c.is_constant(); });
}

// Euclid over Q for coefficient lists that carry no other variables.
UCoeffs rational_gcd(UCoeffs a, UCoeffs b) {
  auto to_q = [](const UCoeffs& p) {
    std::vector<mpq_class> q;
    for (const auto& c : p) q.push_back(c.constant_value());
    return q;
  };
  std::vector<mpq_class> x = to_q(a), y = to_q(b);
  auto trim = [](std::vector<mpq_class>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  };
  trim(x);
  trim(y);
  while (!y.empty()) {
    // x mod y
    mpq_class inv = 1 / y.back();
    while (x.size() >= y.size()) {
      mpq_class f = x.back() * inv;
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
      x.pop_back();
      trim(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  UCoeffs out;
  if (x.empty()) return out;
  mpq_class inv = 1 / x.back();
  for (auto& c : x) out.emplace_back(mpq_class(c * inv));
  return out;
}

// Primitive gcd of two primitive polynomials via the subresultant PRS.
UCoeffs subresultant_gcd(UCoeffs a, UCoeffs b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  if (all_constant(a) && all_constant(b)) return rational_gcd(a, b);
  MPoly g(1), h(1);
  while (true) {
    int d = udeg(a) - udeg(b);
    UCoeffs r = pseudo_remainder(a, b);
    if (r.empty()) return primitive_part(b);
    if (udeg(r) == 0) return UCoeffs{MPoly(1)};
    a = std::move(b);
    MPoly divisor = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) c = exact_quotient(c, divisor);
    b = std::move(r);
    g = a.back();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      h = exact_quotient(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
}


// ---- heuristic gcd: evaluate one variable at a large integer, recurse, interpolate x-adically ----

MPoly substitute(const MPoly& f, int v, const mpz_class& x) {
  std::vector<MTerm> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    MTerm s = t;
    unsigned e = s.mono.exp[v];
    s.mono.exp[v] = 0;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), e);
    s.coef *= p;
    out.push_back(std::move(s));
  }
  return MPoly::from_terms(std::move(out));
}

mpz_class integer_content(const MPoly& f) {
  mpz_class g = 0;
  for (const auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

mpz_class max_norm(const MPoly& f) {
  mpz_class m = 0;
  for (const auto& t : f.terms())
    if (mpz_cmpabs(t.coef.get_num_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coef.get_num());
  return m;
}

MPoly primitive_z(const MPoly& f) {
  if (f.is_zero()) return f;
  mpz_class c = integer_content(f);
  if (sgn(f.lead_coef()) < 0) c = -c;
  return f * mpq_class(1 / mpq_class(c));
}

MPoly interpolate_var(MPoly h, int v, const mpz_class& x) {
  std::vector<MTerm> out;
  mpz_class half = x / 2;
  mpq_class inv = 1 / mpq_class(x);
  for (int i = 0; !h.is_zero(); ++i) {
    std::vector<MTerm> low;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r == 0) continue;
      low.push_back({t.mono, mpq_class(r)});
      MTerm u{t.mono, mpq_class(r)};
      u.mono.exp[v] = static_cast<std::uint16_t>(u.mono.exp[v] + i);
      out.push_back(std::move(u));
    }
    h = (h - MPoly::from_terms(std::move(low))) * inv;
  }
  return MPoly::from_terms(std::move(out));
}

// gcd of nonzero polynomials with integer coefficients in t_0..t_v, up to sign.
std::optional<MPoly> heuristic_gcd(const MPoly& f, const MPoly& g, int v) {
  if (v < 0) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), f.constant_value().get_num_mpz_t(), g.constant_value().get_num_mpz_t());
    return MPoly(mpq_class(r));
  }
  if (!f.involves(v) && !g.involves(v)) return heuristic_gcd(f, g, v - 1);
  mpz_class cf = integer_content(f), cg = integer_content(g), c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  MPoly F = f * mpq_class(1 / mpq_class(cf)), G = g * mpq_class(1 / mpq_class(cg));
  mpz_class nf = max_norm(F), ng = max_norm(G);
  mpz_class b = 2 * (nf < ng ? nf : ng) + 29;
  mpz_class sb;
  mpz_sqrt(sb.get_mpz_t(), b.get_mpz_t());
  mpz_class x = b < 99 * sb ? b : mpz_class(99 * sb);
  mpz_class qf = nf / abs(F.lead_coef().get_num()), qg = ng / abs(G.lead_coef().get_num());
  mpz_class alt = 2 * (qf < qg ? qf : qg) + 4;
  if (alt > x) x = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ff = substitute(F, v, x), gg = substitute(G, v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto h = heuristic_gcd(ff, gg, v - 1)) {
        MPoly H = primitive_z(interpolate_var(*h, v, x));
        if (!H.is_zero() && divide_exact(F, H) && divide_exact(G, H)) return H * mpq_class(c);
      }
    }
    mpz_class r4;
    mpz_root(r4.get_mpz_t(), x.get_mpz_t(), 4);
    x = 73794 * x * r4 / 27011;
  }
  return std::nullopt;
}

MPoly normalize_lead(const MPoly& p) { return p.is_zero() ? p : p.monic(); }

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a.terms().size() == 1 && b.terms().size() == 1) {
    Monomial m;
    for (int i = 0; i < kMaxParams; ++i)
      m.exp[i] = std::min(a.lead().mono.exp[i], b.lead().mono.exp[i]);
    return MPoly::term(m, 1);
  }
  if (divide_exact(a, b)) return normalize_lead(b);
  if (divide_exact(b, a)) return normalize_lead(a);
  int v = std::max(a.max_var(), b.max_var());
  if (auto h = heuristic_gcd(a * mpq_class(1 / a.rational_content()), b * mpq_class(1 / b.rational_content()), v))
    return normalize_lead(*h);
  if (!a.involves(v)) return gcd(a, content(b.coeffs_in(v)));
  if (!b.involves(v)) return gcd(content(a.coeffs_in(v)), b);
  UCoeffs ca = a.coeffs_in(v), cb = b.coeffs_in(v);
  MPoly conta = content(ca), contb = content(cb);
  UCoeffs pa, pb;
  for (const auto& c : ca) pa.push_back(exact_quotient(c, conta));
  for (const auto& c : cb) pb.push_back(exact_quotient(c, contb));
  UCoeffs g = subresultant_gcd(std::move(pa), std::move(pb));
  MPoly result = gcd(conta, contb) * MPoly::from_coeffs_in(v, g);
  return normalize_lead(result);
}

std::vector<MPoly> univariate_gcd(std::vector<MPoly> a, std::vector<MPoly> b) {
  utrim(a);
  utrim(b);
  auto normalized = [](UCoeffs p) {
    if (p.empty()) return p;
    mpq_class inv = 1 / p.back().lead_coef();
    for (auto& c : p) c *= inv;
    return p;
  };
  if (a.empty()) return normalized(b);
  if (b.empty()) return normalized(a);
  MPoly conta = content(a), contb = content(b);
  UCoeffs pa, pb;
  for (const auto& c : a) pa.push_back(exact_quotient(c, conta));
  for (const auto& c : b) pb.push_back(exact_quotient(c, contb));
  UCoeffs g = subresultant_gcd(std::move(pa), std::move(pb));
  MPoly cg = gcd(conta, contb);
  for (auto& c : g) c *= cg;
  return normalized(g);
}

std::optional<MPoly> exact_sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly();
  const MTerm& lt = p.lead();
  if (sgn(lt.coef) < 0) return std::nullopt;
  Monomial half;
  for (int i = 0; i < kMaxParams; ++i) {
    if (lt.mono.exp[i] % 2 != 0) return std::nullopt;
    half.exp[i] = static_cast<std::uint16_t>(lt.mono.exp[i] / 2);
  }
  mpz_class n = lt.coef.get_num(), d = lt.coef.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  mpq_class c0(sn, sd);
  c0.canonicalize();
  MPoly root = MPoly::term(half, c0);
  MTerm lead_root{half, c0};
  MPoly rem = p - root * root;
  int guard = 0;
  while (!rem.is_zero()) {
    const MTerm& lr = rem.lead();
    // Next term: lr / (2 * lead_root); must stay below the leading term.
    if (!lead_root.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lead_root.mono;
    if (grlex_compare(m, lead_root.mono) >= 0) return std::nullopt;
    mpq_class c = lr.coef / (2 * lead_root.coef);
    MPoly t = MPoly::term(m, c);
    rem -= t * (root + root + t);
    root += t;
    if (++guard > 100000) return std::nullopt;
  }
  return root;
}

}  // namespace ppv
