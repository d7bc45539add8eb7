#include "ppv/engine.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "ppv/error.hpp"
#include "ppv/rational_calculus.hpp"

namespace ppv {

Normalized normalize_equation(const RatFunc& a1, const RatFunc& a0) {
  Normalized n;
  n.r1 = -a1 / RatFunc(2);
  n.r0 = a0;
  n.q = n.r1 * n.r1 - n.r1.dx() - n.r0;
  return n;
}

DiffOperator third_order_operator(const RatFunc& r1, const RatFunc& r0, const RatFunc& q) {
  if (q.is_zero()) raise(ErrorKind::Precondition, "third_order_operator: q = 0");
  RatFunc lq = q.dx() / q;
  DiffOperator op = op_compose(DiffOperator({-r1 - lq, RatFunc(1)}), DiffOperator({r0, RatFunc(-2) * r1, RatFunc(1)}));
  DiffOperator expanded({r0.dx() - r1 * r0 - r0 * lq, RatFunc(2) * r1 * r1 - RatFunc(2) * r1.dx() + r0 + RatFunc(2) * r1 * lq,
                         -(RatFunc(3) * r1 + lq), RatFunc(1)});
  verify(op == expanded, "third-order operator factorization");
  return op;
}

const char* to_string(CouplingDesc::Kind k) {
  switch (k) {
    case CouplingDesc::Kind::Power: return "power";
    case CouplingDesc::Kind::MultMult: return "mult-mult";
    case CouplingDesc::Kind::AddMult: return "add-mult";
    case CouplingDesc::Kind::Dihedral: return "dihedral";
    case CouplingDesc::Kind::Finite: return "finite";
    case CouplingDesc::Kind::Trivial: return "trivial";
  }
  return "?";
}

namespace {

int param_total(const EngineOptions& opts) { return static_cast<int>(opts.params.size()); }

MultGroupOptions mult_options(const EngineOptions& opts) { return MultGroupOptions{opts.max_theta_order, opts.finite_order_bound}; }

std::string render_vector(const std::vector<ParamScalar>& c, const std::vector<std::string>& params) {
  LinDiffPoly p;
  for (std::size_t j = 0; j < c.size(); ++j) p.add(LinTerm{ThetaMonomial(), static_cast<int>(j)}, c[j]);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < c.size(); ++j) names.push_back("D" + std::to_string(j + 1));
  return p.to_string(params, names);
}

std::vector<std::string> log_names(const std::string& v, std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < m; ++j) out.push_back("D" + std::to_string(j + 1) + "(" + v + ")/" + v);
  return out;
}

bool same_relations(const MultGroupDesc& a, const MultGroupDesc& b) {
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (!(a.relations[i].p == b.relations[i].p)) return false;
  return true;
}

bool trivial_group(const MultGroupDesc& d) { return d.kind == MultGroupDesc::Kind::Finite && d.order == 1; }

}  // namespace

HDesc compute_unimodular_group(const RatFunc& q, const EngineOptions& opts) {
  HDesc h;
  int m = param_total(opts);
  h.tag = classify_case(q);
  switch (h.tag.kind) {
    case RiccatiCase::I:
      h.u = h.tag.solutions.front();
      h.A = compute_mult_group(h.u, m, mult_options(opts));
      h.B = compute_B(h.tag, h.u, *h.A, opts.params);
      break;
    case RiccatiCase::II:
      h.A = compute_mult_group(h.tag.quadratic->v, m, mult_options(opts));
      break;
    case RiccatiCase::III:
      h.finite_group = h.tag.algebraic->degree == 4 ? "A4" : h.tag.algebraic->degree == 6 ? "S4" : "A5";
      break;
    case RiccatiCase::IV:
      h.pi_prime = isoconstancy_directions(q, m);
      break;
  }
  return h;
}

AddGroupDesc compute_B(const CaseTag& tag, const RatFunc& u, const MultGroupDesc& a, const std::vector<std::string>& params) {
  AddGroupDesc b;
  if (tag.solutions.size() >= 2) {
    b.kind = AddGroupDesc::Kind::Zero;
    return b;
  }
  int m = static_cast<int>(params.size());
  ExactnessRelationSpace s = exactness_relation_space(parameter_gradient(u, m));
  if (s.basis.empty()) {
    b.kind = AddGroupDesc::Kind::Full;
    return b;
  }
  b.kind = AddGroupDesc::Kind::Unresolved;
  b.known_facts.push_back("B' = Ga");
  for (const auto& c : s.basis) b.known_facts.push_back("derivation with exact image of u: " + render_vector(c, params));
  b.known_facts.push_back(is_pi_constant(a, m) ? "A is Pi-constant" : "A is not Pi-constant");
  return b;
}

MultGroupDesc compute_D(const RatFunc& r1, const EngineOptions& opts) {
  return compute_mult_group(r1, param_total(opts), mult_options(opts));
}

CouplingDesc lambda_coupling_case1(const RatFunc& u, const MultGroupDesc& a, const AddGroupDesc& b, const RatFunc& r1,
                                   const MultGroupDesc& d, const EngineOptions& opts) {
  int m = param_total(opts);
  CouplingDesc c;

  // (i) k1 u - k2 r1 a logarithmic derivative with a^k1 nontrivial on A; smallest gcd(k1, k2) wins.
  LogDerLattice lat = log_derivative_lattice({u, -r1});
  auto valid = [&](const mpz_class& k1) { return k1 != 0 && (a.kind == MultGroupDesc::Kind::Infinite || k1 % a.order != 0); };
  auto power = [](const RatFunc& f, long e) { return e < 0 ? f.inverse().pow(static_cast<int>(-e)) : f.pow(static_cast<int>(e)); };
  std::optional<std::array<mpz_class, 2>> best;
  std::array<long, 2> best_mult{0, 0};
  if (lat.generators.size() == 1) {
    // Every element is a multiple of the generator; the generator itself is optimal.
    if (valid(lat.generators[0][0])) {
      best = std::array<mpz_class, 2>{lat.generators[0][0], lat.generators[0][1]};
      best_mult = {1, 0};
    }
  } else if (lat.generators.size() == 2) {
    long n = opts.lattice_search_bound;
    c.notes.push_back("rank-2 lattice searched with multipliers up to " + std::to_string(n));
    for (long m1 = -n; m1 <= n; ++m1)
      for (long m2 = -n; m2 <= n; ++m2) {
        std::array<mpz_class, 2> k;
        for (int j = 0; j < 2; ++j) k[j] = m1 * lat.generators[0][j] + m2 * lat.generators[1][j];
        if (!valid(k[0]) || k[0] < 0) continue;
        auto key = [](const std::array<mpz_class, 2>& v) { return std::make_tuple(mpz_class(gcd(v[0], v[1])), v[0], v[1]); };
        if (!best || key(k) < key(*best)) {
          best = k;
          best_mult = {m1, m2};
        }
      }
  }
  if (best) {
    c.kind = CouplingDesc::Kind::Power;
    bool negate = (*best)[0] < 0;
    c.k1 = negate ? -(*best)[0].get_si() : (*best)[0].get_si();
    c.k2 = negate ? -(*best)[1].get_si() : (*best)[1].get_si();
    RatFunc f(1);
    for (std::size_t i = 0; i < lat.generators.size(); ++i) f = f * power(lat.witnesses[i], best_mult[i]);
    c.witness = negate ? f.inverse() : f;
    verify(RatFunc(c.k1) * u - RatFunc(c.k2) * r1 == c.witness.dx() / c.witness, "power coupling witness");
    bool both_finite = a.kind == MultGroupDesc::Kind::Finite && d.kind == MultGroupDesc::Kind::Finite;
    verify(both_finite || same_relations(a, d), "power coupling: A and D finite or equal");
    return c;
  }
  c.notes.push_back("no power relation between u and r1");

  bool small = a.kind == MultGroupDesc::Kind::Finite && a.order <= 2;
  if (!small) {
    if (is_pi_constant(a, m) || is_pi_constant(d, m)) {
      c.notes.push_back("mult-mult test skipped: A or D is Pi-constant");
    } else {
      c.basis = coupling_relations(u, r1, m, opts.max_theta_order);
      if (!c.basis.empty()) {
        c.kind = CouplingDesc::Kind::MultMult;
        c.witness = RatFunc(1);
        return c;
      }
      c.notes.push_back("no differential relation between u and r1");
    }
  } else if (b.kind == AddGroupDesc::Kind::Zero) {
    c.notes.push_back("add-mult test skipped: B = 0");
  } else if (is_pi_constant(d, m)) {
    c.notes.push_back("add-mult test skipped: D is Pi-constant");
  } else {
    auto f = is_log_derivative(RatFunc(2) * u);
    verify(f.has_value(), "eta^2 lies in K when A is contained in {1, -1}");
    RatFunc eta2inv = f->inverse();
    c.basis = coupling_relations_additive(eta2inv, r1, b, m, opts.max_theta_order);
    if (!c.basis.empty()) {
      c.kind = CouplingDesc::Kind::AddMult;
      c.witness = eta2inv;
      return c;
    }
    c.notes.push_back("no differential relation between eta^-2 and r1");
  }
  c.kind = CouplingDesc::Kind::Trivial;
  return c;
}

CouplingDesc lambda_coupling_case2(const RatFunc& v, const RatFunc& r1, const MultGroupDesc& d) {
  CouplingDesc c;
  if (d.kind == MultGroupDesc::Kind::Infinite) {
    c.notes.push_back("D infinite");
  } else if (d.order % 2 != 0) {
    c.notes.push_back("D finite of odd order");
  } else {
    long k = d.order / 2;
    if (auto f = is_log_derivative(v - RatFunc(k) * r1)) {
      c.kind = CouplingDesc::Kind::Dihedral;
      c.k1 = k;
      c.witness = *f;
      return c;
    }
    c.notes.push_back("v - k r1 is not a logarithmic derivative");
  }
  c.kind = CouplingDesc::Kind::Trivial;
  return c;
}

CouplingDesc lambda_coupling_case3(const MultGroupDesc& d, const RatFunc& r1, const std::vector<SemiInvariant>& chis) {
  CouplingDesc c;
  if (d.kind == MultGroupDesc::Kind::Infinite) {
    c.notes.push_back("D infinite");
    return c;
  }
  if (d.order == 1) {
    c.notes.push_back("D trivial");
    return c;
  }
  if (chis.empty()) {
    c.notes.push_back("no semi-invariants supplied");
    c.incomplete = "finite case with D of order " + std::to_string(d.order) + " needs semi-invariants";
    return c;
  }
  for (const auto& chi : chis)
    for (long k1 = 1; k1 < chi.order; ++k1)
      for (long k2 = 1; k2 < d.order; ++k2)
        if (auto f = is_log_derivative(RatFunc(k1) * chi.v - RatFunc(k2) * r1)) {
          c.kind = CouplingDesc::Kind::Finite;
          c.chi = chi.label;
          c.k1 = k1;
          c.k2 = k2;
          c.witness = *f;
          return c;
        }
  c.notes.push_back("no semi-invariant relation");
  return c;
}

namespace {

std::vector<std::string> mult_membership(const MultGroupDesc& g, const std::string& v, const std::vector<std::string>& params) {
  if (g.kind == MultGroupDesc::Kind::Finite)
    return {g.order == 1 ? v + " = 1" : v + "^" + std::to_string(g.order) + " = 1"};
  if (g.relations.empty()) return {v + " in Gm"};
  std::vector<std::string> out;
  auto names = log_names(v, params.size());
  for (const auto& r : g.relations) out.push_back(r.p.to_string(params, names) + " = 0");
  return out;
}

std::vector<std::string> add_membership(const AddGroupDesc& b, const std::vector<std::string>& params) {
  switch (b.kind) {
    case AddGroupDesc::Kind::Zero: return {"b = 0"};
    case AddGroupDesc::Kind::Full: return {"b in Ga"};
    case AddGroupDesc::Kind::Unresolved: return {"b in B (unresolved)"};
    case AddGroupDesc::Kind::Relations: break;
  }
  std::vector<std::string> out;
  std::vector<std::string> names{"b"};
  for (const auto& p : b.relations) out.push_back(p.to_string(params, names) + " = 0");
  return out;
}

}  // namespace

GroupText assemble_G(const HDesc& h, const std::optional<MultGroupDesc>& d, const CouplingDesc& c,
                     const std::vector<std::string>& params) {
  using K = CouplingDesc::Kind;
  RiccatiCase kind = h.tag.kind;
  bool consistent = c.kind == K::Trivial || (kind == RiccatiCase::I && (c.kind == K::Power || c.kind == K::MultMult || c.kind == K::AddMult)) ||
                    (kind == RiccatiCase::II && c.kind == K::Dihedral) || (kind == RiccatiCase::III && c.kind == K::Finite);
  if (!consistent)
    raise(ErrorKind::InvalidInput, std::string("coupling ") + to_string(c.kind) + " does not apply to case " + to_string(kind));
  if (!d && c.kind != K::Trivial) raise(ErrorKind::InvalidInput, "coupling without a determinant group");

  bool with_e = d && !trivial_group(*d);
  std::string e = with_e ? "e*" : "";
  GroupText g;
  switch (kind) {
    case RiccatiCase::I:
      g.shape = "(" + e + "a, " + e + "b; 0, " + e + "a^-1)";
      g.membership = mult_membership(*h.A, "a", params);
      for (auto& s : add_membership(*h.B, params)) g.membership.push_back(std::move(s));
      break;
    case RiccatiCase::II:
      g.shape = "{" + e + "(a, 0; 0, a^-1)} u {" + e + "(0, a; -a^-1, 0)}";
      g.membership = mult_membership(*h.A, "a", params);
      break;
    case RiccatiCase::III:
      g.shape = e + "h";
      g.membership = {"h in " + h.finite_group + "^SL2"};
      break;
    case RiccatiCase::IV: {
      g.shape = e + "M";
      g.membership = {"M in SL2(F^Pi')"};
      std::string span;
      for (const auto& v : h.pi_prime.basis) span += (span.empty() ? "" : ", ") + render_vector(v, params);
      g.membership.push_back("Pi' = span{" + span + "}");
      break;
    }
  }
  if (with_e)
    for (auto& s : mult_membership(*d, "e", params)) g.membership.push_back(std::move(s));

  auto a_names = log_names("a", params.size()), e_names = log_names("e", params.size());
  std::vector<std::string> b_names{"b"};
  switch (c.kind) {
    case K::Power:
      g.relations.push_back("a^" + std::to_string(c.k1) + " = e^" + std::to_string(c.k2));
      break;
    case K::MultMult:
      for (const auto& p : c.basis) g.relations.push_back(p.p.to_string(params, a_names) + " = " + p.q.to_string(params, e_names));
      break;
    case K::AddMult:
      for (const auto& p : c.basis) g.relations.push_back(p.p.to_string(params, b_names) + " = " + p.q.to_string(params, e_names));
      break;
    case K::Dihedral:
      g.relations.push_back("e^" + std::to_string(c.k1) + " = 1 on the diagonal component");
      g.relations.push_back("e^" + std::to_string(c.k1) + " = -1 on the antidiagonal component");
      break;
    case K::Finite:
      g.relations.push_back(c.chi + "(h)^" + std::to_string(c.k1) + " = e^" + std::to_string(c.k2));
      break;
    case K::Trivial:
      break;
  }
  return g;
}

namespace {

void check_truncation(const MultGroupDesc& g, const std::string& name, std::vector<std::string>& reasons) {
  if (g.order_bound_hit) reasons.push_back(name + ": finite order exceeds the bound");
  if (g.kind != MultGroupDesc::Kind::Infinite) return;
  for (const auto& r : g.relations)
    if (r.p.order() >= g.truncation) {
      reasons.push_back(name + ": new relations at the truncation order " + std::to_string(g.truncation));
      return;
    }
}

}  // namespace

PPVReport run_pipeline(const RatFunc& a1, const RatFunc& a0, const EngineOptions& opts) {
  PPVReport rep;
  rep.a1 = a1;
  rep.a0 = a0;
  rep.extra_assumptions = opts.extra_assumptions;
  rep.normalized = normalize_equation(a1, a0);
  const Normalized& n = rep.normalized;
  if (!n.q.is_zero()) third_order_operator(n.r1, n.r0, n.q);

  rep.H = compute_unimodular_group(n.q, opts);
  rep.assumptions = rep.H.tag.assumptions;
  for (const auto& u : rep.H.tag.solutions) verify(verify_riccati(u, n.q), "Riccati solution");
  if (rep.H.tag.quadratic) verify(verify_quadratic(*rep.H.tag.quadratic, n.q), "quadratic Riccati solution");
  if (rep.H.tag.algebraic) verify(verify_algebraic(*rep.H.tag.algebraic, n.q), "algebraic Riccati solution");
  rep.D = compute_D(n.r1, opts);

  switch (rep.H.tag.kind) {
    case RiccatiCase::I:
      rep.coupling = lambda_coupling_case1(rep.H.u, *rep.H.A, *rep.H.B, n.r1, rep.D, opts);
      break;
    case RiccatiCase::II:
      rep.coupling = lambda_coupling_case2(rep.H.tag.quadratic->v, n.r1, rep.D);
      break;
    case RiccatiCase::III:
      rep.coupling = lambda_coupling_case3(rep.D, n.r1, opts.semi_invariants);
      break;
    case RiccatiCase::IV:
      rep.coupling.kind = CouplingDesc::Kind::Trivial;
      rep.coupling.notes.push_back("SL2 has no nontrivial abelian quotient");
      break;
  }

  rep.H_text = assemble_G(rep.H, std::nullopt, CouplingDesc{}, opts.params);
  rep.G = assemble_G(rep.H, rep.D, rep.coupling, opts.params);

  auto& why = rep.partial_reasons;
  if (rep.H.A) check_truncation(*rep.H.A, "A", why);
  check_truncation(rep.D, "D", why);
  if (rep.H.B && rep.H.B->kind == AddGroupDesc::Kind::Unresolved) why.push_back("B unresolved");
  if (rep.coupling.incomplete) why.push_back(*rep.coupling.incomplete);
  for (const auto& p : rep.coupling.basis)
    if (std::max(p.p.order(), p.q.order()) >= opts.max_theta_order) {
      why.push_back("coupling relations at the truncation order " + std::to_string(opts.max_theta_order));
      break;
    }
  return rep;
}

}  // namespace ppv
