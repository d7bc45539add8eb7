#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppv/rational_calculus.hpp"
#include "test_support.hpp"

using namespace ppv;
using namespace ppv::testing;

namespace {

RatFunc worked_u() { return R(t(1)) / X() + R(t(1) - t(2)) / (X() - Q(1)); }

}  // namespace

TEST_CASE("Hermite reduction") {
  auto h = hermite_reduce(Q(1) / X().pow(2));
  CHECK(h.rational_part == Q(-1) / X());
  CHECK(h.residual.is_zero());
  h = hermite_reduce(Q(1) / X());
  CHECK(h.rational_part.is_zero());
  CHECK(h.residual == Q(1) / X());
  h = hermite_reduce(R(t(1)) / (X() - Q(1)).pow(2) + Q(1) / X());
  CHECK(h.rational_part == -R(t(1)) / (X() - Q(1)));
  CHECK(h.residual == Q(1) / X());
  h = hermite_reduce(Q(3) * X().pow(2) + Q(1));
  CHECK(h.rational_part == X().pow(3) + X());

  RandomRatFunc gen(11, 2);
  for (int i = 0; i < 30; ++i) {
    RatFunc a = gen.ratfunc(), b = gen.ratfunc();
    auto ha = hermite_reduce(a), hb = hermite_reduce(b), hab = hermite_reduce(a + b);
    CHECK(hab.residual == ha.residual + hb.residual);
  }
}

TEST_CASE("residue resultants") {
  // 1/(x^2-1) = (1/2)/(x-1) - (1/2)/(x+1): residues +-1/2
  auto rd = residue_data(Q(1) / (X().pow(2) - Q(1)));
  REQUIRE(rd.size() == 1);
  const PPoly& r = rd[0].resultant;
  CHECK(r.eval(ParamScalar(mpq_class(1, 2))).is_zero());
  CHECK(r.eval(ParamScalar(mpq_class(-1, 2))).is_zero());
  CHECK(r.degree() == 2);
  // residue t1(k1-k2)+t2 k2 with k1 = 3, k2 = 2
  ParamScalar rho = t(1) * ParamScalar(1) + t(2) * ParamScalar(2);
  rd = residue_data(R(rho) / X());
  CHECK(rd[0].resultant.degree() == 1);
  CHECK(rd[0].resultant.eval(rho).is_zero());
  CHECK_THROWS_AS(residue_data(Q(1) / X().pow(2)), Error);
}

TEST_CASE("exactness and logarithmic derivatives") {
  CHECK_FALSE(is_exact(Q(1) / X()).has_value());
  auto w = is_exact(worked_u().derive(Derivation::param(0)).dx());
  REQUIRE(w.has_value());
  CHECK(w->dx() == worked_u().derive(Derivation::param(0)).dx());
  auto f = is_log_derivative(Q(2) / X());
  REQUIRE(f.has_value());
  CHECK(*f == X().pow(2));
  CHECK_FALSE(is_log_derivative(R(t(1)) / X()).has_value());
  CHECK_FALSE(is_log_derivative(Q(1, 2) / X()).has_value());
  CHECK_FALSE(is_log_derivative(X()).has_value());

  RandomRatFunc gen(5, 2);
  for (int i = 0; i < 25; ++i) {
    RatFunc g = gen.ratfunc();
    auto e = is_exact(g.dx());
    REQUIRE(e.has_value());
    CHECK(e->dx() == g.dx());
    auto l = is_log_derivative(g.dx() / g);
    REQUIRE(l.has_value());
    CHECK(l->dx() / *l == g.dx() / g);
  }
}

TEST_CASE("logarithmic derivative lattice") {
  // (1/x, 1/(2x)): k1 + k2/2 integral
  auto lat = log_derivative_lattice({Q(1) / X(), Q(1, 2) / X()});
  REQUIRE(lat.generators.size() == 2);
  CHECK(lat.generators[0] == std::vector<mpz_class>{1, 0});
  CHECK(lat.generators[1] == std::vector<mpz_class>{0, 2});

  RatFunc u = worked_u();
  RatFunc r1 = R(t(1) - t(2)) / X() + R(t(2)) / (X() - Q(1));
  CHECK(log_derivative_lattice({u, -r1}).generators.empty());
  lat = log_derivative_lattice({u, -u});
  REQUIRE(lat.generators.size() == 1);
  CHECK(lat.generators[0] == std::vector<mpz_class>{1, 1});

  // residues sqrt-conjugate: 1/(x^2-2) has residues +-1/(2 sqrt 2)
  lat = log_derivative_lattice({Q(1) / (X().pow(2) - Q(2))});
  CHECK(lat.generators.empty());
  // x/(x^2+1) = (1/2) log'(x^2+1)
  lat = log_derivative_lattice({X() / (X().pow(2) + Q(1)), Q(1) / X().pow(2)});
  REQUIRE(lat.generators.size() == 1);
  CHECK(lat.generators[0] == std::vector<mpz_class>{2, 0});
}

TEST_CASE("exactness relation space") {
  RatFunc u = worked_u();
  RatFunc r1 = R(t(1) - t(2)) / X() + R(t(2)) / (X() - Q(1));
  std::vector<RatFunc> gs{u.derive(Derivation::param(0)), u.derive(Derivation::param(1)),
                          r1.derive(Derivation::param(0)), r1.derive(Derivation::param(1))};
  auto sp = exactness_relation_space(gs);
  CHECK(sp.basis.size() == 2);
  for (const auto& rel : {std::vector<long>{1, 1, -1, 0}, std::vector<long>{0, 1, 1, 1}}) {
    RatFunc s;
    for (int i = 0; i < 4; ++i) s += Q(rel[i]) * gs[i];
    CHECK(s.is_zero());
  }
  // the two relations lie in the span: rank stays 2 after appending them
  auto rows = sp.basis;
  rows.push_back({ParamScalar(1), ParamScalar(1), ParamScalar(-1), ParamScalar(0)});
  rows.push_back({ParamScalar(0), ParamScalar(1), ParamScalar(1), ParamScalar(1)});
  CHECK(canonical_basis(rows, 4).size() == 2);

  CHECK(exactness_relation_space({Q(1) / X(), Q(1) / (X() - R(t(1)))}).basis.empty());
  auto full = exactness_relation_space({(X().pow(2) + Q(1)).inverse().dx()});
  CHECK(full.basis.size() == 1);
}

TEST_CASE("rational solutions") {
  DiffOperator dx({Q(0), Q(1)});
  auto s = rational_solutions(dx, Q(2) * X());
  REQUIRE(s.particular.has_value());
  CHECK(s.particular->dx() == Q(2) * X());
  CHECK(s.kernel.size() == 1);

  // f''' - 4 q f' - 2 q' f = -2 x with q = t1 x
  RatFunc q = R(t(1)) * X();
  DiffOperator l3({Q(-2) * q.dx(), Q(-4) * q, Q(0), Q(1)});
  s = rational_solutions(l3, Q(-2) * X());
  REQUIRE(s.particular.has_value());
  CHECK(*s.particular == X() / R(ParamScalar(3) * t(1)));

  // x^{t1}-type solutions only
  RatFunc qw = R(t(1) * (t(1) - ParamScalar(1))) / X().pow(2);
  DiffOperator l2({-qw, Q(0), Q(1)});
  s = rational_solutions(l2, RatFunc());
  CHECK(s.kernel.empty());

  // f'' - 2/x^2 f = 0 has x^2 and 1/x
  DiffOperator l22({Q(-2) / X().pow(2), Q(0), Q(1)});
  s = rational_solutions(l22, RatFunc());
  CHECK(s.kernel.size() == 2);

  // x f' + f = 1/x^2 -> f = -1/x^2 + c/x
  DiffOperator le({Q(1), X()});
  s = rational_solutions(le, Q(1) / X().pow(2));
  REQUIRE(s.particular.has_value());
  CHECK(op_apply(le, *s.particular) == Q(1) / X().pow(2));
  CHECK(s.kernel.size() == 1);
  // no solution: f' = 1/x
  CHECK_FALSE(rational_solutions(dx, Q(1) / X()).particular.has_value());
}
