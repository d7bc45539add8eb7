#include "ppv/integer_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace ppv {

namespace {

// ---------- arithmetic over Z/p, p < 2^31 ----------

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly mreduce(const ZPoly& f, const Fp& F) {
  ModPoly r(f.size());
  mpz_class pp(static_cast<unsigned long>(F.p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    r[i] = m.get_ui();
  }
  mtrim(r);
  return r;
}

ModPoly msub(ModPoly a, const ModPoly& b, const Fp& F) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  mtrim(a);
  return a;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const Fp& F) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
  mtrim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mdivmod(ModPoly a, const ModPoly& b, const Fp& F) {
  int db = mdeg(b);
  if (mdeg(a) < db) return {{}, a};
  ModPoly q(static_cast<std::size_t>(mdeg(a) - db) + 1, 0);
  u64 inv = F.inv(b.back());
  for (int k = mdeg(a) - db; k >= 0; --k) {
    u64 f = F.mul(a[k + db], inv);
    q[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) a[k + i] = F.sub(a[k + i], F.mul(f, b[i]));
  }
  a.resize(static_cast<std::size_t>(db));
  mtrim(a);
  mtrim(q);
  return {q, a};
}

ModPoly mmod(const ModPoly& a, const ModPoly& b, const Fp& F) { return mdivmod(a, b, F).second; }

ModPoly mmonic(ModPoly a, const Fp& F) {
  if (a.empty()) return a;
  u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, const Fp& F) {
  while (!b.empty()) {
    ModPoly r = mmod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, F);
}

ModPoly mderiv(const ModPoly& a, const Fp& F) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  mtrim(r);
  return r;
}

ModPoly mpowmod(ModPoly base, const mpz_class& e, const ModPoly& m, const Fp& F) {
  ModPoly r{1};
  base = mmod(base, m, F);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) r = mmod(mmul(r, base, F), m, F);
  }
  return r;
}

// s*a + t*b = 1 over F_p (a, b coprime).
void mxgcd(const ModPoly& a, const ModPoly& b, const Fp& F, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, F);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = msub(s0, mmul(q, s1, F), F), t2 = msub(t0, mmul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = F.inv(r0.back());
  s = s0;
  t = t0;
  for (auto& c : s) c = F.mul(c, inv);
  for (auto& c : t) c = F.mul(c, inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------- integer polynomial helpers ----------

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

mpz_class zeval(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

ZPoly zderiv(const ZPoly& f) {
  ZPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
  ztrim(r);
  return r;
}

Poly<mpq_class> to_q(const ZPoly& f) {
  std::vector<mpq_class> c;
  for (const auto& x : f) c.emplace_back(x);
  return Poly<mpq_class>(std::move(c));
}

mpz_class zcontent(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zprimitive(ZPoly f) {
  ztrim(f);
  if (f.empty()) return f;
  mpz_class g = zcontent(f);
  if (f.back() < 0) g = -g;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return f;
}

// Exact quotient over Z, or empty optional-like flag.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  auto [qq, r] = divmod(to_q(a), to_q(b));
  if (!r.is_zero()) return false;
  q.clear();
  for (const auto& c : qq.coeffs()) {
    if (c.get_den() != 1) return false;
    q.push_back(c.get_num());
  }
  return true;
}

mpz_class mod_sym(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Polynomials over Z/M.
ZPoly zm_reduce(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = mod_pos(c, m);
  ztrim(a);
  return a;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zm_reduce(std::move(r), m);
}

ZPoly zm_add(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zm_reduce(std::move(a), m);
}

ZPoly zm_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zm_reduce(std::move(a), m);
}

// Division by a monic polynomial over Z/M.
std::pair<ZPoly, ZPoly> zm_divmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  int db = zdeg(b);
  if (zdeg(a) < db) return {{}, a};
  ZPoly q(static_cast<std::size_t>(zdeg(a) - db) + 1, 0);
  for (int k = zdeg(a) - db; k >= 0; --k) {
    mpz_class f = mod_pos(a[k + db], m);
    q[k] = f;
    if (f == 0) continue;
    for (int i = 0; i <= db; ++i) a[k + i] -= f * b[i];
  }
  a.resize(static_cast<std::size_t>(db));
  return {zm_reduce(std::move(q), m), zm_reduce(std::move(a), m)};
}

ZPoly lift_mod(const ModPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  ztrim(r);
  return r;
}

// ---------- factorization mod p ----------

std::vector<ModPoly> equal_degree_split(const ModPoly& g, int d, const Fp& F, std::mt19937_64& rng) {
  if (mdeg(g) == d) return {g};
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  while (true) {
    ModPoly a(static_cast<std::size_t>(mdeg(g)));
    for (auto& c : a) c = dist(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    ModPoly b = mpowmod(a, e, g, F);
    b = msub(b, ModPoly{1}, F);
    ModPoly h = mgcd(g, b, F);
    if (mdeg(h) > 0 && mdeg(h) < mdeg(g)) {
      auto left = equal_degree_split(h, d, F, rng);
      auto right = equal_degree_split(mdivmod(g, h, F).first, d, F, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

// Monic irreducible factors of a monic square-free f over F_p (p odd).
std::vector<ModPoly> factor_mod_p(ModPoly f, const Fp& F) {
  std::mt19937_64 rng(0x5eed1234ULL);
  std::vector<ModPoly> out;
  ModPoly h{0, 1};
  ModPoly x{0, 1};
  for (int d = 1; 2 * d <= mdeg(f); ++d) {
    h = mpowmod(h, mpz_class(static_cast<unsigned long>(F.p)), f, F);
    ModPoly g = mgcd(f, msub(h, x, F), F);
    if (mdeg(g) > 0) {
      auto parts = equal_degree_split(g, d, F, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = mdivmod(f, g, F).first;
      h = mmod(h, f, F);
    }
  }
  if (mdeg(f) > 0) out.push_back(mmonic(f, F));
  return out;
}

// ---------- Hensel lifting ----------

// Lifts f = lc * prod(factors) mod p to mod m (= p^(2^j) >= target); factors monic.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ModPoly>& factors, const Fp& F,
                               const mpz_class& target, mpz_class& modulus) {
  mpz_class p(static_cast<unsigned long>(F.p));
  if (factors.size() == 1) {
    // f = lc * u with u monic: u = f / lc mod m
    mpz_class m = p;
    while (m < target) m *= m;
    modulus = m;
    mpz_class inv;
    mpz_class lc = mod_pos(f.back(), m);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
    ZPoly u;
    for (const auto& c : f) u.push_back(mod_pos(c * inv, m));
    return {u};
  }
  std::size_t half = factors.size() / 2;
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ModPoly gm = mreduce(ZPoly{f.back()}, F);
  for (const auto& l : left) gm = mmul(gm, l, F);
  ModPoly hm{1};
  for (const auto& r : right) hm = mmul(hm, r, F);
  ModPoly sm, tm;
  mxgcd(gm, hm, F, sm, tm);
  ZPoly g = lift_mod(gm), h = lift_mod(hm), s = lift_mod(sm), t = lift_mod(tm);
  mpz_class m = p;
  while (m < target) {
    mpz_class m2 = m * m;
    ZPoly e = zm_sub(zm_reduce(f, m2), zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZPoly g2 = zm_add(zm_add(g, zm_mul(t, e, m2), m2), zm_mul(q, g, m2), m2);
    ZPoly h2 = zm_add(h, r, m2);
    ZPoly b = zm_sub(zm_add(zm_mul(s, g2, m2), zm_mul(t, h2, m2), m2), ZPoly{1}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h2, m2);
    ZPoly s2 = zm_sub(s, d, m2);
    ZPoly t2 = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
  modulus = m;
  // g has leading coefficient lc(f) mod m; recurse with g as the product to split.
  ZPoly gsym;
  for (const auto& c : g) gsym.push_back(mod_sym(c, m));
  // the leading coefficient of g is exactly lc(f) up to the modulus
  gsym.back() = f.back();
  mpz_class m_left, m_right;
  std::vector<ZPoly> lf = hensel_lift(gsym, left, F, target, m_left);
  std::vector<ZPoly> rf = hensel_lift(h, right, F, target, m_right);
  lf.insert(lf.end(), rf.begin(), rf.end());
  return lf;
}

}  // namespace

ZPoly primitive_integer(const Poly<mpq_class>& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c * l;
    z.push_back(v.get_num());
  }
  return zprimitive(std::move(z));
}

std::vector<mpz_class> integer_roots(const ZPoly& input) {
  ZPoly f = input;
  ztrim(f);
  std::vector<mpz_class> roots;
  if (f.size() <= 1) return roots;
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k > 0) {
    roots.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  }
  if (f.size() <= 1) return roots;
  Poly<mpq_class> fq = to_q(f);
  f = primitive_integer(squarefree_part(fq));
  if (f.size() <= 1) return roots;
  // Cauchy bound
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    mpq_class r(abs(f[i]), abs(f.back()));
    r.canonicalize();
    if (r > bound) bound = r;
  }
  mpz_class B = bound.get_num() / bound.get_den() + 2;
  if (f.size() == 2) {
    // a1 x + a0
    mpq_class r(-f[0], f[1]);
    r.canonicalize();
    if (r.get_den() == 1) roots.push_back(r.get_num());
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  ZPoly df = zderiv(f);
  for (u64 p = 1009;; p += 2) {
    if (!is_prime(p)) continue;
    Fp F{p};
    ModPoly fm = mreduce(f, F);
    if (mdeg(fm) != zdeg(f)) continue;
    if (mdeg(mgcd(fm, mderiv(fm, F), F)) != 0) continue;
    mpz_class pp(static_cast<unsigned long>(p));
    for (u64 r0 = 0; r0 < p; ++r0) {
      // Horner mod p
      u64 acc = 0;
      for (std::size_t i = fm.size(); i-- > 0;) acc = (acc * r0 + fm[i]) % p;
      if (acc != 0) continue;
      mpz_class r(static_cast<unsigned long>(r0)), m = pp;
      while (m <= 2 * B) {
        mpz_class m2 = m * m;
        mpz_class fv = mod_pos(zeval(f, r), m2), dv = mod_pos(zeval(df, r), m2), inv;
        mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t());
        r = mod_pos(r - fv * inv, m2);
        m = m2;
      }
      mpz_class c = mod_sym(r, m);
      if (abs(c) <= B && zeval(f, c) == 0) roots.push_back(c);
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<mpq_class> rational_roots(const Poly<mpq_class>& f) {
  std::vector<mpq_class> out;
  if (f.degree() <= 0) return out;
  ZPoly z = primitive_integer(f);
  int n = zdeg(z);
  mpz_class a = z.back();
  // z_n^(n-1) f(y / z_n) is monic with integer coefficients.
  ZPoly monic(z.size());
  monic[n] = 1;
  mpz_class pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    monic[i] = z[i] * pw;
    pw *= a;
  }
  for (const auto& y : integer_roots(monic)) {
    mpq_class r(y, a);
    r.canonicalize();
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& input) {
  ZPoly f = zprimitive(input);
  if (zdeg(f) <= 1) return {f};
  std::vector<ZPoly> result;
  // strip x factor
  if (f[0] == 0) {
    result.push_back(ZPoly{0, 1});
    f.erase(f.begin());
    if (zdeg(f) == 0) return result;
    if (zdeg(f) == 1) {
      result.push_back(f);
      return result;
    }
  }
  // choose a prime: fewest modular factors among the first few admissible ones
  Fp best{0};
  std::vector<ModPoly> best_factors;
  int tried = 0;
  for (u64 p = 3; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    Fp F{p};
    ModPoly fm = mreduce(f, F);
    if (mdeg(fm) != zdeg(f)) continue;
    if (mdeg(mgcd(fm, mderiv(fm, F), F)) != 0) continue;
    ++tried;
    auto fac = factor_mod_p(mmonic(fm, F), F);
    if (best.p == 0 || fac.size() < best_factors.size()) {
      best = F;
      best_factors = fac;
    }
    if (fac.size() == 1) break;
  }
  if (best_factors.size() == 1) {
    result.push_back(f);
    return result;
  }
  // Mignotte-type bound for coefficients of lc * (factor)
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f)));
  mpz_class target = 2 * bound + 1;
  mpz_class m;
  std::vector<ZPoly> lifted = hensel_lift(f, best_factors, best, target, m);
  // recombination
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly g{f.back()};
      for (auto i : idx) g = zm_mul(g, lifted[i], m);
      ZPoly gs;
      for (const auto& c : g) gs.push_back(mod_sym(c, m));
      gs = zprimitive(gs);
      ZPoly q;
      if (zdeg(gs) > 0 && zdivides(f, gs, q)) {
        result.push_back(gs);
        f = zprimitive(q);
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
        lifted = std::move(rest);
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && idx[i] == lifted.size() - size + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (zdeg(f) > 0) result.push_back(f);
  return result;
}

std::vector<std::pair<Poly<mpq_class>, int>> factor_over_q(const Poly<mpq_class>& f) {
  std::vector<std::pair<Poly<mpq_class>, int>> out;
  for (const auto& [part, mult] : squarefree_factorization(f)) {
    for (const auto& z : factor_squarefree_z(primitive_integer(part))) out.emplace_back(to_q(z).monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

ZMatrix hermite_basis(const ZMatrix& input, int n) {
  ZMatrix rows;
  for (const auto& r : input)
    if (std::any_of(r.begin(), r.end(), [](const mpz_class& c) { return c != 0; })) rows.push_back(r);
  ZMatrix out;
  std::size_t top = 0;
  for (int col = 0; col < n && top < rows.size(); ++col) {
    // Euclid on column `col` among rows[top..]
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col])) piv = r;
      }
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (int c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        if (rows[top][col] < 0)
          for (int c = col; c < n; ++c) rows[top][c] = -rows[top][c];
        for (std::size_t r = 0; r < top; ++r) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
          if (q != 0)
            for (int c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

ZMatrix integer_kernel(const ZMatrix& a, int n) {
  // Column operations on [a; I] until a is in column echelon form.
  ZMatrix m = a;
  ZMatrix u(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  auto col_axpy = [&](int dst, int src, const mpz_class& q) {  // col_dst -= q * col_src
    for (auto& row : m) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](int x, int y) {
    for (auto& row : m) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  int c = 0;
  for (std::size_t i = 0; i < m.size() && c < n; ++i) {
    while (true) {
      int piv = -1;
      for (int j = c; j < n; ++j) {
        if (m[i][j] == 0) continue;
        if (piv < 0 || abs(m[i][j]) < abs(m[i][piv])) piv = j;
      }
      if (piv < 0) break;
      col_swap(c, piv);
      bool done = true;
      for (int j = c + 1; j < n; ++j) {
        if (m[i][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][c].get_mpz_t());
        col_axpy(j, c, q);
        if (m[i][j] != 0) done = false;
      }
      if (done) {
        ++c;
        break;
      }
    }
  }
  ZMatrix kernel;
  for (int j = c; j < n; ++j) {
    std::vector<mpz_class> v(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) v[r] = u[r][j];
    kernel.push_back(std::move(v));
  }
  return hermite_basis(kernel, n);
}

}  // namespace ppv
