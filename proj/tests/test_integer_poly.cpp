#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppv/integer_poly.hpp"

using namespace ppv;

namespace {

using QPoly = Poly<mpq_class>;

QPoly lin(long a, long b) { return QPoly(std::vector<mpq_class>{mpq_class(b), mpq_class(a)}); }  // a x + b

ZPoly to_z(const QPoly& p) {
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(c.get_num());
  return z;
}

}  // namespace

TEST_CASE("integer and rational roots") {
  QPoly f = lin(1, -3) * lin(1, 5) * lin(2, -1);
  auto r = integer_roots(to_z(f));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -5);
  CHECK(r[1] == 3);
  auto q = rational_roots(f);
  REQUIRE(q.size() == 3);
  CHECK(q[1] == mpq_class(1, 2));
  CHECK(integer_roots(to_z(lin(1, 0) * lin(1, 0) * lin(1, 7))) == std::vector<mpz_class>{-7, 0});
  CHECK(integer_roots(to_z(lin(1, 0) * lin(1, 0) + QPoly(mpq_class(1)))).empty());
  CHECK(rational_roots(lin(6, -4)) == std::vector<mpq_class>{mpq_class(2, 3)});
}

TEST_CASE("factorization over Q") {
  QPoly x2 = lin(1, 0) * lin(1, 0);
  QPoly a = x2 - QPoly(mpq_class(2)), b = x2 - QPoly(mpq_class(3));
  QPoly f = a * b * lin(1, 1) * lin(1, 1) * lin(3, 2);
  auto fac = factor_over_q(f);
  REQUIRE(fac.size() == 4);
  QPoly prod(mpq_class(1));
  for (const auto& [g, e] : fac) {
    CHECK(g.lead() == 1);
    prod = prod * g.pow(static_cast<unsigned>(e));
  }
  CHECK(prod.scaled(f.lead()) == f);
  CHECK(fac[0].second + fac[1].second == 3);

  // Swinnerton-Dyer x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
  QPoly sd = x2 * x2 - x2.scaled(mpq_class(10)) + QPoly(mpq_class(1));
  CHECK(factor_over_q(sd).size() == 1);
  CHECK(factor_over_q(sd * lin(1, -1)).size() == 2);
}

TEST_CASE("random products factor back") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly f(mpq_class(1));
    int nf = 2 + trial % 3;
    for (int k = 0; k < nf; ++k) {
      std::vector<mpq_class> c;
      int deg = 1 + (trial + k) % 3;
      for (int i = 0; i < deg; ++i) c.emplace_back(d(rng));
      c.emplace_back(1 + std::abs(d(rng)));
      f = f * QPoly(c);
    }
    QPoly prod(mpq_class(1));
    for (const auto& [g, e] : factor_over_q(f)) prod = prod * g.pow(static_cast<unsigned>(e));
    CHECK(prod.scaled(f.lead()) == f);
  }
}

TEST_CASE("integer kernel and Hermite basis") {
  ZMatrix a{{2, 4, 6}, {1, 1, 1}};
  ZMatrix k = integer_kernel(a, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpz_class>{1, -2, 1});

  ZMatrix b{{3, 0}, {0, 0}};
  k = integer_kernel(b, 2);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<mpz_class>{0, 1});

  ZMatrix h = hermite_basis({{4, 6}, {6, 9}, {0, 0}}, 2);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::vector<mpz_class>{2, 3});
  h = hermite_basis({{2, 0}, {1, 3}}, 2);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == std::vector<mpz_class>{1, 3});
  CHECK(h[1] == std::vector<mpz_class>{0, 6});
}
