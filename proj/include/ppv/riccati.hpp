#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppv/ratfunc.hpp"

namespace ppv {

// Genericity hypothesis on the parameters that a result depends on.
struct Assumption {
  ParamScalar value;
  std::string condition;  // e.g. "not a nonnegative integer"
  friend bool operator==(const Assumption&, const Assumption&) = default;
};
using AssumptionLog = std::vector<Assumption>;

void record(AssumptionLog* log, const ParamScalar& value, const std::string& condition);

// r + sum_k c_k sqrt(D_k) over F0, radicands normalized and square-free up to detectable squares.
struct Surd {
  ParamScalar rational;
  std::map<ParamScalar, ParamScalar> radicals;

  static Surd sqrt_of(const ParamScalar& d);
  bool is_rational() const { return radicals.empty(); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd scaled(const ParamScalar& s) const;
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
};

// dx(u) + u^2 = q.
bool verify_riccati(const RatFunc& u, const RatFunc& q);

// All solutions of dx(u) + u^2 = q in K up to the one-parameter families, which are represented
// by two members each. Empty when there is none.
std::vector<RatFunc> riccati_rational_solutions(const RatFunc& q, AssumptionLog* log = nullptr);

// u = (phi + w)/2 with w^2 = w2, dx(w) = v w; w2 is not a square in K.
struct QuadraticRiccati {
  RatFunc phi;
  RatFunc w2;
  RatFunc v;
};

bool verify_quadratic(const QuadraticRiccati& r, const RatFunc& q);
std::optional<QuadraticRiccati> riccati_quadratic(const RatFunc& q, AssumptionLog* log = nullptr);

// Monic polynomial in U (index = power) whose roots solve the Riccati equation.
struct AlgebraicRiccati {
  int degree = 0;
  std::vector<RatFunc> minimal_poly;
};

bool verify_algebraic(const AlgebraicRiccati& r, const RatFunc& q);
std::optional<AlgebraicRiccati> riccati_algebraic(const RatFunc& q, AssumptionLog* log = nullptr);

enum class RiccatiCase { I, II, III, IV };
const char* to_string(RiccatiCase c);

struct CaseTag {
  RiccatiCase kind = RiccatiCase::IV;
  std::vector<RatFunc> solutions;             // case I
  std::optional<QuadraticRiccati> quadratic;  // case II
  std::optional<AlgebraicRiccati> algebraic;  // case III
  AssumptionLog assumptions;
};

CaseTag classify_case(const RatFunc& q);

// Vectors c over F0 such that f''' - 4 q f' - 2 q' f = -2 sum_j c_j d/dt_j q has a solution f in K;
// `basis` is in reduced echelon form and witnesses[i] is such an f for basis[i].
struct IsoconstancyDirections {
  std::vector<std::vector<ParamScalar>> basis;
  std::vector<RatFunc> witnesses;
};

IsoconstancyDirections isoconstancy_directions(const RatFunc& q, int params);

}  // namespace ppv
