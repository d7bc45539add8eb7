#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppv/lindiff.hpp"
#include "ppv/riccati.hpp"

namespace ppv {

struct Normalized {
  RatFunc r1;
  RatFunc r0;
  RatFunc q;
};

// r1 = -a1/2, r0 = a0, q = r1^2 - dx(r1) - r0.
Normalized normalize_equation(const RatFunc& a1, const RatFunc& a0);

// (dx - r1 - dx(q)/q) o (dx^2 - 2 r1 dx + r0), checked against its expanded coefficients.
DiffOperator third_order_operator(const RatFunc& r1, const RatFunc& r0, const RatFunc& q);

// Character of the finite unimodular group together with its logarithmic-derivative datum.
struct SemiInvariant {
  std::string label;
  long order = 1;  // order of the character
  RatFunc v;
};

struct EngineOptions {
  std::vector<std::string> params;  // names of t1..tm; their count is m
  int max_theta_order = 3;
  long finite_order_bound = 64;
  int lattice_search_bound = 25;
  std::vector<SemiInvariant> semi_invariants;
  std::vector<std::string> extra_assumptions;
};

struct HDesc {
  CaseTag tag;
  RatFunc u;                      // case I: the Riccati solution used
  std::optional<MultGroupDesc> A;  // cases I and II
  std::optional<AddGroupDesc> B;   // case I
  std::string finite_group;       // case III: A4, S4 or A5 (central extensions in SL2)
  IsoconstancyDirections pi_prime;  // case IV
};

HDesc compute_unimodular_group(const RatFunc& q, const EngineOptions& opts);
AddGroupDesc compute_B(const CaseTag& tag, const RatFunc& u, const MultGroupDesc& a, const std::vector<std::string>& params);
MultGroupDesc compute_D(const RatFunc& r1, const EngineOptions& opts);

struct CouplingDesc {
  enum class Kind { Power, MultMult, AddMult, Dihedral, Finite, Trivial };
  Kind kind = Kind::Trivial;
  long k1 = 0, k2 = 0;  // Power, Finite; Dihedral uses k1
  RatFunc witness = RatFunc(1);
  std::vector<CouplingPair> basis;  // MultMult, AddMult
  std::string chi;                  // Finite
  std::vector<std::string> notes;   // tests skipped and why
  std::optional<std::string> incomplete;  // the test could not be decided
};

const char* to_string(CouplingDesc::Kind k);

CouplingDesc lambda_coupling_case1(const RatFunc& u, const MultGroupDesc& a, const AddGroupDesc& b, const RatFunc& r1,
                                   const MultGroupDesc& d, const EngineOptions& opts);
CouplingDesc lambda_coupling_case2(const RatFunc& v, const RatFunc& r1, const MultGroupDesc& d);
CouplingDesc lambda_coupling_case3(const MultGroupDesc& d, const RatFunc& r1, const std::vector<SemiInvariant>& chis);

struct GroupText {
  std::string shape;
  std::vector<std::string> membership;
  std::vector<std::string> relations;
  friend bool operator==(const GroupText&, const GroupText&) = default;
};

// D == nullopt renders H itself.
GroupText assemble_G(const HDesc& h, const std::optional<MultGroupDesc>& d, const CouplingDesc& c,
                     const std::vector<std::string>& params);

struct PPVReport {
  RatFunc a1, a0;
  Normalized normalized;
  HDesc H;
  MultGroupDesc D;
  CouplingDesc coupling;
  GroupText G;
  GroupText H_text;
  AssumptionLog assumptions;
  std::vector<std::string> extra_assumptions;
  std::vector<std::string> partial_reasons;  // empty when complete
  bool complete() const { return partial_reasons.empty(); }
};

PPVReport run_pipeline(const RatFunc& a1, const RatFunc& a0, const EngineOptions& opts);

}  // namespace ppv
