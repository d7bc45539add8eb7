#pragma once

#include <gmpxx.h>

#include <vector>

#include "ppv/upoly.hpp"

namespace ppv {

using ZPoly = std::vector<mpz_class>;  // index = degree, no trailing zeros

// Distinct integer roots, ascending.
std::vector<mpz_class> integer_roots(const ZPoly& f);
// Distinct rational roots, ascending.
std::vector<mpq_class> rational_roots(const Poly<mpq_class>& f);
// Monic irreducible factors over Q of a nonconstant polynomial, with multiplicities.
std::vector<std::pair<Poly<mpq_class>, int>> factor_over_q(const Poly<mpq_class>& f);
// Irreducible factors over Z of a primitive square-free polynomial with positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

// Primitive integer polynomial with positive leading coefficient proportional to f.
ZPoly primitive_integer(const Poly<mpq_class>& f);

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Basis of the lattice {k in Z^n : a k = 0}, in Hermite normal form.
ZMatrix integer_kernel(const ZMatrix& a, int n);
// Row Hermite normal form of the lattice spanned by the rows (zero rows dropped).
ZMatrix hermite_basis(const ZMatrix& rows, int n);

}  // namespace ppv
