#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppv/ratfunc.hpp"

namespace ppv {

// d/dt_1^{e_1} ... d/dt_m^{e_m}; graded lexicographic order.
struct ThetaMonomial {
  std::vector<int> exponents;

  ThetaMonomial() = default;
  explicit ThetaMonomial(std::vector<int> e);
  static ThetaMonomial unit(int index);

  int order() const;
  int exponent(int j) const { return j < static_cast<int>(exponents.size()) ? exponents[j] : 0; }
  ThetaMonomial times(int j) const;
  // First index with a positive exponent, -1 for the identity.
  int lowest_index() const;

  friend bool operator==(const ThetaMonomial& a, const ThetaMonomial& b);
  friend bool operator<(const ThetaMonomial& a, const ThetaMonomial& b);
};

// All monomials in `params` derivations with order <= n, in increasing order.
std::vector<ThetaMonomial> theta_monomials(int params, int n);

RatFunc apply_theta(const ThetaMonomial& t, const RatFunc& f);

// theta applied to the variable Y_var; var == kSingleVar marks the one-variable case Y.
struct LinTerm {
  static constexpr int kSingleVar = -1;
  ThetaMonomial theta;
  int var = kSingleVar;

  friend bool operator==(const LinTerm& a, const LinTerm& b) = default;
  friend bool operator<(const LinTerm& a, const LinTerm& b);
};

class LinDiffPoly {
 public:
  LinDiffPoly() = default;
  static LinDiffPoly variable(int var, ParamScalar c = ParamScalar(1));
  static LinDiffPoly term(LinTerm t, ParamScalar c = ParamScalar(1));

  const std::map<LinTerm, ParamScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add(const LinTerm& t, const ParamScalar& c);
  LinDiffPoly& operator+=(const LinDiffPoly& o);
  LinDiffPoly& operator-=(const LinDiffPoly& o);
  LinDiffPoly scaled(const ParamScalar& c) const;
  friend LinDiffPoly operator+(LinDiffPoly a, const LinDiffPoly& b) { return a += b; }
  friend LinDiffPoly operator-(LinDiffPoly a, const LinDiffPoly& b) { return a -= b; }
  friend bool operator==(const LinDiffPoly& a, const LinDiffPoly& b) = default;

  // Rewrites theta Y_j as theta' Y_i with i the lowest derivation index in theta d_j; the two agree
  // whenever Y_j = d_j w for a common w.
  LinDiffPoly integrable_form() const;
  // Applies d/dt_k to the polynomial viewed as an operator on Y (coefficients are differentiated).
  LinDiffPoly derive(int k) const;

  // e.g. "D1^2 D2 Y1 - 1/2*t1 Y2". `vars` replaces the names Y1..Ym (or Y); compound names are
  // parenthesized after a theta prefix.
  std::string to_string(std::span<const std::string> params, std::span<const std::string> vars = {}) const;

 private:
  std::map<LinTerm, ParamScalar> terms_;
};

// sum c * theta(values[var]); for the single variable values[0] is used.
RatFunc apply_lindiff(const LinDiffPoly& p, const std::vector<RatFunc>& values);

// Partial derivatives d/dt_j of w for j < params.
std::vector<RatFunc> parameter_gradient(const RatFunc& w, int params);

struct Relation {
  LinDiffPoly p;
  RatFunc witness;  // p(values) = dx(witness)
};

struct MultGroupDesc {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  long order = 1;                  // Finite: minimal l with l w = dx(witness)/witness
  RatFunc witness = RatFunc(1);
  std::vector<Relation> relations;  // Infinite: differential generators of the relation space
  int truncation = 0;               // theta order used for the relation search
  std::vector<int> dimensions;      // relation-space dimension for each order 0..truncation
  bool order_bound_hit = false;     // the lattice generator exceeded the finite order bound
};

struct MultGroupOptions {
  int max_theta_order = 3;
  long finite_order_bound = 64;
};

MultGroupDesc compute_mult_group(const RatFunc& w, int params, const MultGroupOptions& opts = {});
bool is_pi_constant(const MultGroupDesc& d, int params);

struct AddGroupDesc {
  enum class Kind { Zero, Full, Relations, Unresolved };
  Kind kind = Kind::Zero;
  std::vector<LinDiffPoly> relations;
  std::vector<std::string> known_facts;
};

const char* to_string(MultGroupDesc::Kind k);
const char* to_string(AddGroupDesc::Kind k);

struct CouplingPair {
  LinDiffPoly p;
  LinDiffPoly q;
  RatFunc witness;  // p(values_p) - q(values_q) = dx(witness)
};

// Pairs with p(d u) - q(d r1) exact, modulo pairs of an A-relation and a D-relation.
std::vector<CouplingPair> coupling_relations(const RatFunc& u, const RatFunc& r1, int params, int max_theta_order);

// Pairs with p(eta2inv) - q(d r1) exact, p a single-variable polynomial nontrivial on B.
std::vector<CouplingPair> coupling_relations_additive(const RatFunc& eta2inv, const RatFunc& r1, const AddGroupDesc& b,
                                                      int params, int max_theta_order);

// Reduced row echelon form over the term order (p terms before q terms); witnesses follow the
// row operations.
std::vector<CouplingPair> canonicalize_basis(const std::vector<CouplingPair>& pairs);

// Exact check of p(values_p) - q(values_q) = dx(witness).
bool verify_pair(const CouplingPair& c, const std::vector<RatFunc>& values_p, const std::vector<RatFunc>& values_q);

}  // namespace ppv
