#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ppv {

inline constexpr int kMaxParams = 8;

// Exponent vector over t1..t8. Ordered graded-lexicographically with t1 < t2 < ... < t8.
struct Monomial {
  std::array<std::uint16_t, kMaxParams> exp{};

  int total() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// -1, 0, 1 in graded-lex order.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MTerm {
  Monomial mono;
  mpq_class coef;
};

// Sparse polynomial in Q[t1..tm]; terms kept sorted by decreasing monomial.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static MPoly variable(int index);
  static MPoly term(const Monomial& m, const mpq_class& c);
  static MPoly from_terms(std::vector<MTerm> terms);  // sorts and combines

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  mpq_class constant_value() const;  // requires is_constant
  const std::vector<MTerm>& terms() const { return terms_; }
  const MTerm& lead() const { return terms_.front(); }
  const mpq_class& lead_coef() const { return terms_.front().coef; }

  int degree(int var) const;
  int total_degree() const;
  int max_var() const;  // -1 for constants
  bool involves(int var) const { return degree(var) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const mpq_class& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned n) const;
  MPoly derivative(int var) const;
  mpq_class eval(std::span<const mpq_class> point) const;
  // Coefficients as a polynomial in `var`; index = power.
  std::vector<MPoly> coeffs_in(int var) const;
  static MPoly from_coeffs_in(int var, const std::vector<MPoly>& coeffs);
  // p(t + shift)
  MPoly shifted(std::span<const mpq_class> shift) const;
  MPoly truncated(int max_total_degree) const;
  MPoly homogeneous_part(int degree) const;

  // Divides by the leading coefficient.
  MPoly monic() const;
  // Positive rational c with this/c having coprime integer coefficients and positive leading coefficient.
  mpq_class rational_content() const;

  std::string to_string(std::span<const std::string> names) const;
  // Strict weak order used for deterministic containers.
  friend bool operator<(const MPoly& a, const MPoly& b);

 private:
  std::vector<MTerm> terms_;
};

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
MPoly exact_quotient(const MPoly& a, const MPoly& b);  // throws when b does not divide a
// Greatest common divisor normalized to leading coefficient 1 (0 when both are 0).
MPoly gcd(const MPoly& a, const MPoly& b);
std::optional<MPoly> exact_sqrt(const MPoly& p);

// gcd of polynomials in an auxiliary variable with coefficients in Q[t] (index = degree),
// normalized so the leading coefficient's leading term has coefficient 1.
std::vector<MPoly> univariate_gcd(std::vector<MPoly> a, std::vector<MPoly> b);

}  // namespace ppv
