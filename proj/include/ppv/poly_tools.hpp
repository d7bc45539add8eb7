#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ppv/integer_poly.hpp"
#include "ppv/linalg.hpp"
#include "ppv/ratfunc.hpp"

namespace ppv {

using QPoly = Poly<mpq_class>;

// Deterministic pseudo-random parameter values (one per possible parameter).
std::vector<mpq_class> sample_point(int attempt);

// Coefficientwise evaluation of the parameters; nullopt if a coefficient is undefined.
std::optional<QPoly> specialize(const PPoly& p, std::span<const mpq_class> point);
PPoly to_ppoly(const QPoly& p);

// Column i holds the x-coefficients of v[i] over a common denominator, so that
// sum_i c_i v[i] = 0 (c over F0) iff the matrix annihilates c.
Matrix<ParamScalar> coefficient_matrix(const std::vector<RatFunc>& v);
// Same, but for combinations with rational coefficients: every entry is expanded over t-monomials.
Matrix<mpq_class> rational_coefficient_matrix(const std::vector<RatFunc>& v);
// Expands each row of an F0 matrix into rows over Q (one per t-monomial).
Matrix<mpq_class> expand_over_q(const Matrix<ParamScalar>& m);

// Pairwise coprime squarefree monic polynomials b_k with every input a product of powers of
// the b_k (times a constant); constants are ignored.
std::vector<PPoly> coprime_base(const std::vector<PPoly>& polys);
// Largest e with b^e dividing p (p nonzero, deg b > 0).
int multiplicity(PPoly p, const PPoly& b);

// Polynomial through (xs[i], ys[i]); xs distinct.
PPoly interpolate(const std::vector<ParamScalar>& xs, const std::vector<ParamScalar>& ys);

// Integers n with p(n) = 0 identically are among the returned candidates (p nonzero).
std::vector<mpz_class> integer_root_candidates(const PPoly& p);

// Numerator and denominator of f scaled by a common factor so that every coefficient lies in Q[t].
std::pair<PPoly, PPoly> integral_parts(const RatFunc& f);

// Distinct roots of p (nonzero) that lie in F0, sorted.
std::vector<ParamScalar> roots_in_f0(const PPoly& p);

// 1 + largest parameter index occurring (0 when parameter-free).
int param_count(const RatFunc& f);
int param_count(const std::vector<RatFunc>& fs);

}  // namespace ppv
