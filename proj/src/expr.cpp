#include "ppv/expr.hpp"

#include <algorithm>
#include <cctype>

#include "ppv/error.hpp"

namespace ppv {

namespace {

constexpr long kMaxExponent = 4096;
constexpr int kMaxDepth = 512;

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& params) : s_(text), params_(params) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  struct Nesting {
    explicit Nesting(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw ParseError(parser.pos_, "nesting too deep");
    }
    ~Nesting() { --parser.depth_; }
    Parser& parser;
  };

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr node(ExprNode::Kind k, std::size_t pos, Expr l = nullptr, Expr r = nullptr) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->position = pos;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  Expr expr() {
    Nesting guard(*this);
    Expr e = term();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (accept('+'))
        e = node(ExprNode::Kind::Add, at, std::move(e), term());
      else if (accept('-'))
        e = node(ExprNode::Kind::Sub, at, std::move(e), term());
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      skip();
      std::size_t at = pos_;
      if (accept('*'))
        e = node(ExprNode::Kind::Mul, at, std::move(e), unary());
      else if (accept('/'))
        e = node(ExprNode::Kind::Div, at, std::move(e), unary());
      else
        return e;
    }
  }

  Expr unary() {
    skip();
    std::size_t at = pos_;
    if (accept('-')) {
      Nesting guard(*this);
      return node(ExprNode::Kind::Neg, at, unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    skip();
    std::size_t epos = pos_;
    std::size_t end = epos;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == epos) throw ParseError(epos, "non-integer exponent");
    std::string digits = s_.substr(epos, end - epos);
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) throw ParseError(epos, "exponent too large");
    pos_ = end;
    Expr p = node(ExprNode::Kind::Pow, at, std::move(base));
    p->exponent = std::stol(digits);
    return p;
  }

  Expr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      Expr n = node(ExprNode::Kind::Number, at);
      n->number = mpq_class(mpz_class(s_.substr(pos_, end - pos_), 10));
      pos_ = end;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
      std::string name = s_.substr(pos_, end - pos_);
      if (name != "x" && std::find(params_.begin(), params_.end(), name) == params_.end())
        throw ParseError(at, "unknown identifier '" + name + "'");
      Expr v = node(ExprNode::Kind::Var, at);
      v->name = std::move(name);
      pos_ = end;
      return v;
    }
    if (accept('(')) {
      Expr e = expr();
      skip();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void check_params(const std::vector<std::string>& params) {
  if (params.size() > static_cast<std::size_t>(kMaxParams))
    raise(ErrorKind::InvalidInput, "at most " + std::to_string(kMaxParams) + " parameters are supported");
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string& p = params[i];
    bool ident = !p.empty() && (std::isalpha(static_cast<unsigned char>(p[0])) || p[0] == '_') &&
                 std::all_of(p.begin(), p.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    if (!ident || p == "x") raise(ErrorKind::InvalidInput, "invalid parameter name '" + p + "'");
    if (std::find(params.begin(), params.begin() + static_cast<long>(i), p) != params.begin() + static_cast<long>(i))
      raise(ErrorKind::InvalidInput, "duplicate parameter name '" + p + "'");
  }
}

// Coefficient with its sign split off, parenthesized unless it is a monomial in the parameters.
struct Signed {
  bool negative = false;
  std::string magnitude;
};

Signed signed_scalar(const ParamScalar& c, std::span<const std::string> params) {
  if (c.is_constant()) {
    mpq_class v = c.constant_value();
    return {sgn(v) < 0, mpq_class(abs(v)).get_str()};
  }
  if (c.is_polynomial() && c.num().terms().size() == 1) {
    bool neg = sgn(c.num().lead_coef()) < 0;
    return {neg, (neg ? -c : c).to_string(params)};
  }
  return {false, "(" + c.to_string(params) + ")"};
}

std::string render_poly(const PPoly& p, std::span<const std::string> params) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const ParamScalar& c = p.coeff(k);
    if (c.is_zero()) continue;
    Signed s = signed_scalar(c, params);
    std::string body;
    if (k == 0) {
      body = s.magnitude;
    } else {
      if (s.magnitude != "1") body = s.magnitude + "*";
      body += "x";
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (s.negative ? "-" : "") + body;
    else
      out += (s.negative ? " - " : " + ") + body;
  }
  return out;
}

int term_count(const PPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) ++n;
  return n;
}

}  // namespace

Expr parse_expr(const std::string& text, const std::vector<std::string>& params) {
  check_params(params);
  return Parser(text, params).parse();
}

RatFunc eval_expr(const ExprNode& e, const std::vector<std::string>& params) {
  switch (e.kind) {
    case ExprNode::Kind::Number: return RatFunc(ParamScalar(e.number));
    case ExprNode::Kind::Var: {
      if (e.name == "x") return RatFunc::x();
      auto it = std::find(params.begin(), params.end(), e.name);
      if (it == params.end()) throw ParseError(e.position, "unknown identifier '" + e.name + "'");
      return RatFunc(ParamScalar::param(static_cast<int>(it - params.begin())));
    }
    case ExprNode::Kind::Neg: return -eval_expr(*e.lhs, params);
    case ExprNode::Kind::Add: return eval_expr(*e.lhs, params) + eval_expr(*e.rhs, params);
    case ExprNode::Kind::Sub: return eval_expr(*e.lhs, params) - eval_expr(*e.rhs, params);
    case ExprNode::Kind::Mul: return eval_expr(*e.lhs, params) * eval_expr(*e.rhs, params);
    case ExprNode::Kind::Div: {
      RatFunc d = eval_expr(*e.rhs, params);
      if (d.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(e.position));
      return eval_expr(*e.lhs, params) / d;
    }
    case ExprNode::Kind::Pow: return eval_expr(*e.lhs, params).pow(static_cast<int>(e.exponent));
  }
  return RatFunc();
}

RatFunc parse_ratfunc(const std::string& text, const std::vector<std::string>& params) {
  Expr e = parse_expr(text, params);
  return eval_expr(*e, params);
}

std::string render(const ParamScalar& c, std::span<const std::string> params) { return c.to_string(params); }

std::string render(const LinDiffPoly& p, std::span<const std::string> params) { return p.to_string(params); }

std::string render(const RatFunc& f, std::span<const std::string> params) {
  std::string n = render_poly(f.num(), params);
  if (f.is_polynomial()) return n;
  if (term_count(f.num()) > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  std::string d = render_poly(f.den(), params);
  if (term_count(f.den()) > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string dump(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Number: return e.number.get_str();
    case ExprNode::Kind::Var: return e.name;
    case ExprNode::Kind::Neg: return "Neg(" + dump(*e.lhs) + ")";
    case ExprNode::Kind::Add: return "Add(" + dump(*e.lhs) + "," + dump(*e.rhs) + ")";
    case ExprNode::Kind::Sub: return "Sub(" + dump(*e.lhs) + "," + dump(*e.rhs) + ")";
    case ExprNode::Kind::Mul: return "Mul(" + dump(*e.lhs) + "," + dump(*e.rhs) + ")";
    case ExprNode::Kind::Div: return "Div(" + dump(*e.lhs) + "," + dump(*e.rhs) + ")";
    case ExprNode::Kind::Pow: return "Pow(" + dump(*e.lhs) + "," + std::to_string(e.exponent) + ")";
  }
  return "?";
}

}  // namespace ppv
