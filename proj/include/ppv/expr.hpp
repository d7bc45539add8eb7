#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ppv/lindiff.hpp"
#include "ppv/ratfunc.hpp"

namespace ppv {

struct ExprNode;
using Expr = std::unique_ptr<ExprNode>;

struct ExprNode {
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  mpq_class number;     // Number
  std::string name;     // Var
  long exponent = 0;    // Pow
  std::size_t position = 0;
  Expr lhs, rhs;        // Neg and Pow use lhs only
};

// Variables are x and the names in `params`; errors carry the byte offset.
Expr parse_expr(const std::string& text, const std::vector<std::string>& params);
RatFunc eval_expr(const ExprNode& e, const std::vector<std::string>& params);
RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& params);

// Exact text that parse_ratfunc reads back to the same value.
std::string render(const RatFunc& f, std::span<const std::string> params);
std::string render(const ParamScalar& c, std::span<const std::string> params);
std::string render(const LinDiffPoly& p, std::span<const std::string> params);

// Structural rendering of the tree, e.g. Sub(Pow(x,2),1).
std::string dump(const ExprNode& e);

}  // namespace ppv
