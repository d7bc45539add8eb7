#pragma once

#include <optional>
#include <vector>

#include "ppv/integer_poly.hpp"
#include "ppv/poly_tools.hpp"
#include "ppv/ratfunc.hpp"

namespace ppv {

// g = dx(rational_part) + residual, residual proper with squarefree denominator.
struct HermiteResult {
  RatFunc rational_part;
  RatFunc residual;
};

HermiteResult hermite_reduce(const RatFunc& g);

struct ResidueFactor {
  PPoly factor;     // squarefree factor d of the denominator
  PPoly resultant;  // res_x(d, a - z d') as a polynomial in z
};

// Requires a proper function with squarefree denominator.
std::vector<ResidueFactor> residue_data(const RatFunc& r);

// f with dx(f) = g, if any.
std::optional<RatFunc> is_exact(const RatFunc& g);
// f with dx(f)/f = g, if any.
std::optional<RatFunc> is_log_derivative(const RatFunc& g);

struct LogDerLattice {
  ZMatrix generators;             // Hermite basis of the lattice
  std::vector<RatFunc> witnesses;  // sum_i k_i g_i = dx(f)/f for each generator k
};

LogDerLattice log_derivative_lattice(const std::vector<RatFunc>& gs);

struct ExactnessRelationSpace {
  std::vector<std::vector<ParamScalar>> basis;  // reduced echelon form
  std::vector<RatFunc> witnesses;               // sum_i c_i g_i = dx(f)
};

ExactnessRelationSpace exactness_relation_space(const std::vector<RatFunc>& gs);

struct RationalSolutionSpace {
  std::optional<RatFunc> particular;  // absent when L f = rhs has no solution in K
  std::vector<RatFunc> kernel;        // basis of rational solutions of L f = 0
};

RationalSolutionSpace rational_solutions(const DiffOperator& L, const RatFunc& rhs);

// Solutions (c, f) of L f = sum_j c_j rhs[j] with c over F0; a basis in reduced echelon form
// with the c-coordinates first.
struct ParametricSolution {
  std::vector<ParamScalar> c;
  RatFunc f;
};

std::vector<ParametricSolution> rational_solutions_parametric(const DiffOperator& L,
                                                              const std::vector<RatFunc>& rhs);

}  // namespace ppv
