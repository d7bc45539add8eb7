#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ppv/engine.hpp"
#include "ppv/error.hpp"
#include "ppv/expr.hpp"
#include "ppv/rational_calculus.hpp"
#include "ppv/report_io.hpp"

using namespace ppv;

namespace {

struct Config {
  std::string input;
  std::string output;
  std::string a1, a0;
  std::vector<std::string> params;
  std::optional<int> max_theta_order;
  std::optional<long> finite_order_bound;
  std::optional<int> lattice_bound;
  std::vector<std::string> assume;
  std::string format = "json";
  std::string example = "worked";
  unsigned long long seed = 1;
  int cases = 50;
  bool inject_fault = false;
};

const char* kWorkedA1 = "-2*((t1-t2)/x + t2/(x-1))";
const char* kWorkedA0 = "((t1-2*t2)*(t2-1)+2*(t1-t2)^2*x)/x^2 + (t1*(2*t2-t1+1)-2*(t1-t2)^2*(x-1))/(x-1)^2";

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) raise(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) raise(ErrorKind::InvalidInput, "cannot write " + c.output);
  f << text;
}

InputDocument load(const Config& c) {
  InputDocument in;
  if (!c.input.empty()) {
    in = read_input_document(read_file(c.input));
  } else {
    if (c.a1.empty() && c.a0.empty()) raise(ErrorKind::InvalidInput, "give --input or --a1/--a0");
    in.options.params = c.params;
    in.a1_text = c.a1.empty() ? "0" : c.a1;
    in.a0_text = c.a0.empty() ? "0" : c.a0;
  }
  if (c.max_theta_order) in.options.max_theta_order = *c.max_theta_order;
  if (c.finite_order_bound) in.options.finite_order_bound = *c.finite_order_bound;
  if (c.lattice_bound) in.options.lattice_search_bound = *c.lattice_bound;
  for (const auto& a : c.assume) in.options.extra_assumptions.push_back(a);
  validate_options(in.options);
  if (c.input.empty()) {
    in.a1 = parse_ratfunc(in.a1_text, in.options.params);
    in.a0 = parse_ratfunc(in.a0_text, in.options.params);
  }
  return in;
}

int cmd_compute(const Config& c) {
  InputDocument in = load(c);
  PPVReport rep = run_pipeline(in.a1, in.a0, in.options);
  write_output(c, c.format == "text" ? report_text(rep, in.options) : report_json(rep, in.options));
  return rep.complete() ? 0 : 2;
}

int cmd_classify(const Config& c) {
  InputDocument in = load(c);
  Normalized n = normalize_equation(in.a1, in.a0);
  HDesc h;
  h.tag = classify_case(n.q);
  if (h.tag.kind == RiccatiCase::I) h.u = h.tag.solutions.front();
  write_output(c, classify_text(h, in.options));
  return 0;
}

int cmd_example(const Config& c) {
  std::string a1 = kWorkedA1, a0 = kWorkedA0, params = R"(["t1", "t2"])";
  if (c.example == "airy") {
    a1 = "0";
    a0 = "-x";
  } else if (c.example == "dihedral") {
    a1 = "1/x";
    a0 = "1/(4*x^2) - 1/(2*x^2) - (1/(4*x) - 3/(16*x^2))";
    params = R"(["t1"])";
  } else if (c.example != "worked") {
    raise(ErrorKind::InvalidInput, "unknown example '" + c.example + "' (worked, airy, dihedral)");
  }
  std::string doc = "{\n  \"parameters\": " + params + ",\n  \"equation\": {\n    \"a1\": \"" + a1 + "\",\n    \"a0\": \"" + a0 +
                    "\"\n  },\n  \"options\": {\"max_theta_order\": 3, \"finite_order_bound\": 64, \"lattice_search_bound\": 25}\n}\n";
  write_output(c, doc);
  return 0;
}

// Random element of Q(t1, t2)(x) with small coefficients.
RatFunc random_ratfunc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2), root(-3, 3);
  auto scalar = [&]() {
    ParamScalar s(coef(rng));
    if (coef(rng) > 1) s += ParamScalar(coef(rng)) * ParamScalar::param(0);
    if (coef(rng) > 2) s += ParamScalar(coef(rng)) * ParamScalar::param(1);
    return s;
  };
  std::vector<ParamScalar> n;
  for (int i = 0, d = deg(rng); i <= d; ++i) n.push_back(scalar());
  if (n.back().is_zero()) n.back() = ParamScalar(1);
  PPoly den(ParamScalar(1));
  for (int i = 0, k = deg(rng); i < k; ++i) den = den * PPoly(std::vector<ParamScalar>{ParamScalar(root(rng)), ParamScalar(1)});
  return RatFunc::make(PPoly(std::move(n)), den);
}

int cmd_selfcheck(const Config& c) {
  std::mt19937_64 rng(c.seed);
  const std::vector<std::string> params{"t1", "t2"};
  int pass = 0, fail = 0;
  auto check = [&](bool ok, const std::string& what) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      std::cout << "FAIL " << what << "\n";
    }
  };
  for (int i = 0; i < c.cases; ++i) {
    RatFunc r1 = random_ratfunc(rng), r0 = random_ratfunc(rng), u = random_ratfunc(rng), f = random_ratfunc(rng);
    RatFunc q = r1 * r1 - r1.dx() - r0;
    if (!q.is_zero()) {
      DiffOperator big = op_compose(DiffOperator({-r1 - q.dx() / q, RatFunc(1)}), DiffOperator({r0, RatFunc(-2) * r1, RatFunc(1)}));
      check(big == third_order_operator(r1, r0, q), "third-order factorization");
    }
    DiffOperator fac = op_compose(DiffOperator({u, RatFunc(1)}), DiffOperator({-u, RatFunc(1)}));
    check(fac == DiffOperator({-(u.dx() + u * u), RatFunc(), RatFunc(1)}), "Riccati factorization");
    std::string s = render(f, params);
    check(parse_ratfunc(s, params) == f, "render round trip " + s);
    auto e = is_exact(f.dx());
    check(e && e->dx() == f.dx(), "exactness witness");
    if (!f.is_zero()) {
      RatFunc ld = f.dx() / f;
      auto l = is_log_derivative(ld);
      check(l && l->dx() / *l == ld, "logarithmic derivative witness");
    }
  }
  check(!is_exact(RatFunc(1) / RatFunc::x()), "1/x is not exact");
  check(!is_log_derivative(RatFunc(ParamScalar::param(0)) / RatFunc::x()), "t1/x is not a logarithmic derivative");
  if (c.inject_fault) check(false, "injected fault");
  std::cout << "selfcheck: " << pass << " passed, " << fail << " failed\n";
  return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized Picard-Vessiot groups of second-order linear differential equations"};
  app.require_subcommand(1, 1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", c.input, "input JSON document");
    sub->add_option("--output,-o", c.output, "output path (default stdout)");
    sub->add_option("--a1", c.a1, "coefficient a1 (inline)");
    sub->add_option("--a0", c.a0, "coefficient a0 (inline)");
    sub->add_option("--params", c.params, "parameter names for inline expressions")->delimiter(',');
    sub->add_option("--max-theta-order", c.max_theta_order, "truncation order for relation searches");
    sub->add_option("--finite-order-bound", c.finite_order_bound, "largest order detected as a finite group");
    sub->add_option("--lattice-bound", c.lattice_bound, "lattice search bound (reported)");
    sub->add_option("--assume", c.assume, "extra genericity assumption recorded in the report");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* compute = app.add_subcommand("compute", "compute the group and write the report");
  add_common(compute);
  CLI::App* classify = app.add_subcommand("classify", "print the case and Riccati data");
  add_common(classify);
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in invariant checks");
  selfcheck->add_option("--seed", c.seed, "random seed");
  selfcheck->add_option("--cases", c.cases, "number of random instances")->check(CLI::Range(1, 100000));
  selfcheck->add_flag("--inject-fault", c.inject_fault, "make one check fail (tests the exit status)")->group("");
  CLI::App* example = app.add_subcommand("example", "print a sample input document");
  example->add_option("--name", c.example, "worked, airy or dihedral");
  example->add_option("--output,-o", c.output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return cmd_compute(c);
    if (classify->parsed()) return cmd_classify(c);
    if (selfcheck->parsed()) return cmd_selfcheck(c);
    return cmd_example(c);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
