#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppv/engine.hpp"
#include "ppv/error.hpp"
#include "test_support.hpp"

using namespace ppv;
using namespace ppv::testing;

namespace {

RatFunc worked_u() { return R(t(1)) / X() + R(t(1) - t(2)) / (X() - Q(1)); }
RatFunc worked_r1() { return R(t(1) - t(2)) / X() + R(t(2)) / (X() - Q(1)); }

EngineOptions two_params() {
  EngineOptions o;
  o.params = {"t1", "t2"};
  return o;
}

// Equation with the given r1 whose unimodular part has coefficient q.
std::pair<RatFunc, RatFunc> equation_for(const RatFunc& r1, const RatFunc& q) {
  return {RatFunc(-2) * r1, r1 * r1 - r1.dx() - q};
}

LinDiffPoly Y(int j, long c = 1) { return LinDiffPoly::variable(j - 1, ParamScalar(c)); }

}  // namespace

TEST_CASE("normalization") {
  RatFunc q0 = X().pow(3) - Q(1) / X();
  Normalized n = normalize_equation(RatFunc(), -q0);
  CHECK(n.r1.is_zero());
  CHECK(n.r0 == -q0);
  CHECK(n.q == q0);

  RatFunc u = worked_u();
  n = normalize_equation(RatFunc(-2) * u, u * u + u.dx());
  CHECK(n.r1 == u);
  CHECK(n.q == RatFunc(-2) * u.dx());
}

TEST_CASE("third-order operator") {
  RatFunc r1 = worked_r1(), q = worked_u().dx() + worked_u() * worked_u();
  RatFunc r0 = r1 * r1 - r1.dx() - q;
  DiffOperator op = third_order_operator(r1, r0, q);
  CHECK(op.order() == 3);
  CHECK(op.coeff(2) == -(RatFunc(3) * r1 + q.dx() / q));

  RatFunc airy = X();
  op = third_order_operator(RatFunc(), -airy, airy);
  CHECK(op.coeff(2) == -(Q(1) / X()));
  CHECK_THROWS_AS(third_order_operator(r1, r0, RatFunc()), Error);

  RandomRatFunc gen(5);
  for (int i = 0; i < 10; ++i) {
    RatFunc a = gen.ratfunc(2, 2), b = gen.ratfunc(2, 2), c = gen.ratfunc(2, 2);
    if (c.is_zero()) continue;
    CHECK_NOTHROW(third_order_operator(a, b, c));
  }
}

TEST_CASE("unimodular groups") {
  EngineOptions o = two_params();
  HDesc h = compute_unimodular_group(Q(2) / X().pow(2), o);
  CHECK(h.tag.kind == RiccatiCase::I);
  CHECK(h.tag.solutions.size() == 2);
  CHECK(h.B->kind == AddGroupDesc::Kind::Zero);

  h = compute_unimodular_group(X(), o);
  CHECK(h.tag.kind == RiccatiCase::IV);
  CHECK(h.pi_prime.basis.size() == 2);

  RatFunc q = worked_u().dx() + worked_u() * worked_u();
  h = compute_unimodular_group(q, o);
  REQUIRE(h.tag.kind == RiccatiCase::I);
  CHECK(h.u == worked_u());
  CHECK(h.A->kind == MultGroupDesc::Kind::Infinite);
  CHECK(h.B->kind == AddGroupDesc::Kind::Full);

  // d/dt1 u - d/dt2 u = 0 is exact, so only B' is known.
  RatFunc u = R(t(1) + t(2)) / X() + R(t(1) + t(2)) / (X() - Q(1));
  h = compute_unimodular_group(u.dx() + u * u, o);
  REQUIRE(h.tag.kind == RiccatiCase::I);
  CHECK(h.B->kind == AddGroupDesc::Kind::Unresolved);
  CHECK(!h.B->known_facts.empty());
}

TEST_CASE("determinant group") {
  EngineOptions o = two_params();
  MultGroupDesc d = compute_D(worked_r1(), o);
  MultGroupDesc a = compute_mult_group(worked_u(), 2);
  REQUIRE(d.relations.size() == a.relations.size());
  for (std::size_t i = 0; i < d.relations.size(); ++i) CHECK(d.relations[i].p == a.relations[i].p);
  CHECK(compute_D(Q(1, 2) / X(), o).order == 2);
  CHECK(compute_D(RatFunc(), o).order == 1);
}

TEST_CASE("worked example end to end") {
  EngineOptions o = two_params();
  RatFunc q = worked_u().dx() + worked_u() * worked_u();
  auto [a1, a0] = equation_for(worked_r1(), q);
  PPVReport rep = run_pipeline(a1, a0, o);
  CHECK(rep.normalized.q == q);
  CHECK(rep.H.tag.kind == RiccatiCase::I);
  CHECK(rep.H.u == worked_u());
  CHECK(rep.H.B->kind == AddGroupDesc::Kind::Full);
  REQUIRE(rep.coupling.kind == CouplingDesc::Kind::MultMult);
  std::vector<CouplingPair> expected{{Y(1) + Y(2), Y(1), RatFunc()}, {Y(2, -1), Y(1) + Y(2), RatFunc()}};
  auto got = rep.coupling.basis;
  for (auto& c : got) c.witness = RatFunc();
  auto cg = canonicalize_basis(got), ce = canonicalize_basis(expected);
  REQUIRE(cg.size() == ce.size());
  for (std::size_t i = 0; i < cg.size(); ++i) {
    CHECK(cg[i].p == ce[i].p);
    CHECK(cg[i].q == ce[i].q);
  }
  CHECK(rep.G.shape == "(e*a, e*b; 0, e*a^-1)");
  CHECK(rep.G.relations.size() == 2);
  CHECK(rep.complete());
}

TEST_CASE("case I coupling branches") {
  EngineOptions o = two_params();
  RatFunc u = worked_u(), q = u.dx() + u * u;

  auto [a1, a0] = equation_for(u, q);
  PPVReport rep = run_pipeline(a1, a0, o);
  REQUIRE(rep.coupling.kind == CouplingDesc::Kind::Power);
  CHECK(rep.coupling.k1 == 1);
  CHECK(rep.coupling.k2 == 1);
  CHECK(rep.coupling.witness == RatFunc(1));
  CHECK(rep.G.relations == std::vector<std::string>{"a^1 = e^1"});

  // Parameter-free data: A and D are Pi-constant.
  EngineOptions none;
  RatFunc w = X();
  auto eq = equation_for(Q(1, 3) / X(), w.dx() + w * w);
  rep = run_pipeline(eq.first, eq.second, none);
  REQUIRE(rep.H.tag.kind == RiccatiCase::I);
  CHECK(rep.H.B->kind == AddGroupDesc::Kind::Full);
  CHECK(rep.coupling.kind == CouplingDesc::Kind::Trivial);

  // A = {1, -1} with eta^2 = x; d/dt1 r1 = 1/x = eta^-2.
  EngineOptions one;
  one.params = {"t1"};
  RatFunc half = Q(1, 2) / X();
  eq = equation_for(R(t(1)) / X(), half.dx() + half * half);
  rep = run_pipeline(eq.first, eq.second, one);
  REQUIRE(rep.H.tag.kind == RiccatiCase::I);
  CHECK(rep.H.A->order == 2);
  REQUIRE(rep.coupling.kind == CouplingDesc::Kind::AddMult);
  CHECK(rep.coupling.witness == Q(1) / X());
  CHECK(!rep.complete());
}

TEST_CASE("power coupling on a rank-2 lattice") {
  RatFunc q = -Q(3, 16) / X().pow(2), r1 = Q(1, 6) / X();
  auto eq = equation_for(r1, q);
  PPVReport rep = run_pipeline(eq.first, eq.second, EngineOptions{});
  REQUIRE(rep.coupling.kind == CouplingDesc::Kind::Power);
  CHECK(rep.H.A->order == 4);
  CHECK(rep.D.order == 6);
  CHECK(rep.coupling.k1 % 4 != 0);
  RatFunc f = rep.coupling.witness;
  CHECK(RatFunc(rep.coupling.k1) * rep.H.u - RatFunc(rep.coupling.k2) * r1 == f.dx() / f);
  CHECK(mpz_class(gcd(mpz_class(rep.coupling.k1), mpz_class(rep.coupling.k2))) == 1);
}

TEST_CASE("dihedral coupling") {
  RatFunc q = Q(1, 4) / X() - Q(3, 16) / X().pow(2);
  EngineOptions one;
  one.params = {"t1"};
  auto eq = equation_for(-Q(1, 2) / X(), q);
  PPVReport rep = run_pipeline(eq.first, eq.second, one);
  REQUIRE(rep.H.tag.kind == RiccatiCase::II);
  REQUIRE(rep.coupling.kind == CouplingDesc::Kind::Dihedral);
  CHECK(rep.coupling.k1 == 1);
  CHECK(rep.coupling.witness == RatFunc(1));

  MultGroupDesc inf = compute_mult_group(R(t(1)) / X(), 1);
  CHECK(lambda_coupling_case2(-Q(1, 2) / X(), R(t(1)) / X(), inf).kind == CouplingDesc::Kind::Trivial);
  MultGroupDesc three = compute_mult_group(Q(1, 3) / X(), 1);
  CHECK(lambda_coupling_case2(-Q(1, 2) / X(), Q(1, 3) / X(), three).kind == CouplingDesc::Kind::Trivial);
}

TEST_CASE("finite unimodular group") {
  RatFunc q = -Q(3, 16) / X().pow(2) - Q(2, 9) / (X() - Q(1)).pow(2) + Q(3, 16) / (X() * (X() - Q(1)));
  EngineOptions one;
  one.params = {"t1"};
  auto eq = equation_for(R(t(1)) / X(), q);
  PPVReport rep = run_pipeline(eq.first, eq.second, one);
  REQUIRE(rep.H.tag.kind == RiccatiCase::III);
  CHECK(rep.H.finite_group == "A4");
  CHECK(rep.coupling.kind == CouplingDesc::Kind::Trivial);
  CHECK(rep.complete());

  RatFunc r1 = Q(1, 4) / X();
  MultGroupDesc d = compute_mult_group(r1, 1);
  REQUIRE(d.order == 4);
  CouplingDesc c = lambda_coupling_case3(d, r1, {SemiInvariant{"chi", 2, r1}});
  CHECK(c.kind == CouplingDesc::Kind::Finite);
  CHECK(c.k1 == 1);
  CHECK(c.k2 == 1);
  CHECK(c.witness == RatFunc(1));
  c = lambda_coupling_case3(d, r1, {});
  CHECK(c.kind == CouplingDesc::Kind::Trivial);
  CHECK(c.incomplete.has_value());
}

TEST_CASE("Airy and unimodular degeneration") {
  EngineOptions o = two_params();
  PPVReport rep = run_pipeline(RatFunc(), -X(), o);
  CHECK(rep.H.tag.kind == RiccatiCase::IV);
  CHECK(rep.D.kind == MultGroupDesc::Kind::Finite);
  CHECK(rep.D.order == 1);
  CHECK(rep.coupling.kind == CouplingDesc::Kind::Trivial);
  CHECK(rep.G == rep.H_text);

  RatFunc u = worked_u();
  rep = run_pipeline(RatFunc(), -(u.dx() + u * u), o);
  CHECK(rep.coupling.kind == CouplingDesc::Kind::Trivial);
  CHECK(rep.G == rep.H_text);
}

TEST_CASE("inconsistent coupling is rejected") {
  HDesc h = compute_unimodular_group(Q(2) / X().pow(2), EngineOptions{});
  CouplingDesc c;
  c.kind = CouplingDesc::Kind::Dihedral;
  CHECK_THROWS_AS(assemble_G(h, MultGroupDesc{}, c, {}), Error);
}
