#include "ppv/report_io.hpp"

#include <json.hpp>

#include <sstream>

#include "ppv/error.hpp"
#include "ppv/expr.hpp"

namespace ppv {

using Json = nlohmann::ordered_json;

namespace {

RatFunc field_expr(const std::string& text, const std::string& field, const std::vector<std::string>& params) {
  try {
    return parse_ratfunc(text, params);
  } catch (const ParseError& e) {
    throw ParseError(e.position(), field + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")));
  }
}

long int_option(const Json& opts, const char* key, long fallback) {
  if (!opts.contains(key)) return fallback;
  const Json& v = opts.at(key);
  if (!v.is_number_integer()) raise(ErrorKind::InvalidInput, std::string("options.") + key + " must be an integer");
  return v.get<long>();
}

std::vector<std::string> param_names(const EngineOptions& o) { return o.params; }

Json mult_json(const MultGroupDesc& g, const std::string& var, const EngineOptions& o) {
  Json j;
  j["kind"] = to_string(g.kind);
  if (g.kind == MultGroupDesc::Kind::Finite) {
    j["order"] = g.order;
    j["witness"] = render(g.witness, o.params);
    return j;
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < o.params.size(); ++k) names.push_back("D" + std::to_string(k + 1) + "(" + var + ")/" + var);
  Json rels = Json::array();
  for (const auto& r : g.relations)
    rels.push_back({{"p", r.p.to_string(o.params)}, {"equation", r.p.to_string(o.params, names) + " = 0"},
                    {"witness", render(r.witness, o.params)}});
  j["relations"] = rels;
  j["truncation"] = g.truncation;
  j["dimensions"] = g.dimensions;
  if (g.order_bound_hit) j["finite_order_bound_exceeded"] = true;
  return j;
}

Json add_json(const AddGroupDesc& b, const EngineOptions& o) {
  Json j;
  j["kind"] = to_string(b.kind);
  if (b.kind == AddGroupDesc::Kind::Relations) {
    Json rels = Json::array();
    for (const auto& p : b.relations) rels.push_back(p.to_string(o.params));
    j["relations"] = rels;
  }
  if (b.kind == AddGroupDesc::Kind::Unresolved) j["known_facts"] = b.known_facts;
  return j;
}

Json riccati_json(const HDesc& h, const EngineOptions& o) {
  Json j;
  const CaseTag& t = h.tag;
  switch (t.kind) {
    case RiccatiCase::I: {
      Json sols = Json::array();
      for (const auto& u : t.solutions) sols.push_back(render(u, o.params));
      j["solutions"] = sols;
      j["u"] = render(h.u, o.params);
      break;
    }
    case RiccatiCase::II:
      j["phi"] = render(t.quadratic->phi, o.params);
      j["w2"] = render(t.quadratic->w2, o.params);
      j["v"] = render(t.quadratic->v, o.params);
      break;
    case RiccatiCase::III: {
      j["degree"] = t.algebraic->degree;
      Json coeffs = Json::array();
      for (const auto& c : t.algebraic->minimal_poly) coeffs.push_back(render(c, o.params));
      j["minimal_poly"] = coeffs;
      break;
    }
    case RiccatiCase::IV:
      break;
  }
  return j;
}

Json group_json(const GroupText& g) {
  return Json{{"shape", g.shape}, {"membership", g.membership}, {"relations", g.relations}};
}

Json pairs_json(const std::vector<CouplingPair>& basis, const EngineOptions& o) {
  Json a = Json::array();
  for (const auto& c : basis)
    a.push_back({{"p", c.p.to_string(o.params)}, {"q", c.q.to_string(o.params)}, {"f", render(c.witness, o.params)}});
  return a;
}

Json coupling_json(const CouplingDesc& c, const EngineOptions& o) {
  Json j;
  j["kind"] = to_string(c.kind);
  Json data = Json::object();
  Json witnesses = Json::array();
  switch (c.kind) {
    case CouplingDesc::Kind::Power:
      data = {{"k1", c.k1}, {"k2", c.k2}};
      witnesses.push_back(render(c.witness, o.params));
      break;
    case CouplingDesc::Kind::MultMult:
      data["basis"] = pairs_json(c.basis, o);
      for (const auto& p : c.basis) witnesses.push_back(render(p.witness, o.params));
      break;
    case CouplingDesc::Kind::AddMult:
      data["eta^-2"] = render(c.witness, o.params);
      data["basis"] = pairs_json(c.basis, o);
      for (const auto& p : c.basis) witnesses.push_back(render(p.witness, o.params));
      break;
    case CouplingDesc::Kind::Dihedral:
      data = {{"k", c.k1}};
      witnesses.push_back(render(c.witness, o.params));
      break;
    case CouplingDesc::Kind::Finite:
      data = {{"chi", c.chi}, {"k1", c.k1}, {"k2", c.k2}};
      witnesses.push_back(render(c.witness, o.params));
      break;
    case CouplingDesc::Kind::Trivial:
      break;
  }
  j["data"] = data;
  j["witnesses"] = witnesses;
  j["notes"] = c.notes;
  return j;
}

std::vector<std::string> assumption_lines(const PPVReport& r, const EngineOptions& o) {
  std::vector<std::string> out;
  for (const auto& a : r.assumptions) out.push_back(render(a.value, o.params) + ": " + a.condition);
  for (const auto& a : r.extra_assumptions) out.push_back(a);
  return out;
}

}  // namespace

void validate_options(const EngineOptions& o) {
  if (o.max_theta_order < 0 || o.max_theta_order > 8) raise(ErrorKind::InvalidInput, "max_theta_order must lie in [0, 8]");
  if (o.finite_order_bound < 1) raise(ErrorKind::InvalidInput, "finite_order_bound must be positive");
  if (o.lattice_search_bound < 1) raise(ErrorKind::InvalidInput, "lattice_search_bound must be positive");
  if (o.params.size() > static_cast<std::size_t>(kMaxParams))
    raise(ErrorKind::InvalidInput, "at most " + std::to_string(kMaxParams) + " parameters are supported");
}

InputDocument read_input_document(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON document");
  }
  if (!doc.is_object()) raise(ErrorKind::InvalidInput, "input document must be a JSON object");
  InputDocument in;
  if (doc.contains("parameters")) {
    const Json& ps = doc.at("parameters");
    if (!ps.is_array()) raise(ErrorKind::InvalidInput, "parameters must be an array of names");
    for (const auto& p : ps) {
      if (!p.is_string()) raise(ErrorKind::InvalidInput, "parameters must be an array of names");
      in.options.params.push_back(p.get<std::string>());
    }
  }
  if (!doc.contains("equation") || !doc.at("equation").is_object()) raise(ErrorKind::InvalidInput, "missing equation object");
  const Json& eq = doc.at("equation");
  auto text = [&](const char* key) -> std::string {
    if (!eq.contains(key)) return "0";
    if (!eq.at(key).is_string()) raise(ErrorKind::InvalidInput, std::string("equation.") + key + " must be a string");
    return eq.at(key).get<std::string>();
  };
  in.a1_text = text("a1");
  in.a0_text = text("a0");
  if (doc.contains("options")) {
    const Json& opts = doc.at("options");
    if (!opts.is_object()) raise(ErrorKind::InvalidInput, "options must be an object");
    in.options.max_theta_order = static_cast<int>(int_option(opts, "max_theta_order", in.options.max_theta_order));
    in.options.finite_order_bound = int_option(opts, "finite_order_bound", in.options.finite_order_bound);
    in.options.lattice_search_bound = static_cast<int>(int_option(opts, "lattice_search_bound", in.options.lattice_search_bound));
  }
  validate_options(in.options);
  in.a1 = field_expr(in.a1_text, "equation.a1", in.options.params);
  in.a0 = field_expr(in.a0_text, "equation.a0", in.options.params);
  return in;
}

std::string report_json(const PPVReport& r, const EngineOptions& o) {
  Json j;
  j["schema"] = kReportSchema;
  j["parameters"] = param_names(o);
  j["equation"] = {{"a1", render(r.a1, o.params)}, {"a0", render(r.a0, o.params)}};
  j["normalized"] = {{"r1", render(r.normalized.r1, o.params)}, {"r0", render(r.normalized.r0, o.params)},
                     {"q", render(r.normalized.q, o.params)}};
  j["case"] = to_string(r.H.tag.kind);
  Json h;
  h["riccati"] = riccati_json(r.H, o);
  if (r.H.A) h["A"] = mult_json(*r.H.A, "a", o);
  if (r.H.B) h["B"] = add_json(*r.H.B, o);
  if (r.H.tag.kind == RiccatiCase::III) h["finite_group"] = r.H.finite_group;
  if (r.H.tag.kind == RiccatiCase::IV) {
    Json basis = Json::array(), wit = Json::array();
    for (std::size_t i = 0; i < r.H.pi_prime.basis.size(); ++i) {
      Json v = Json::array();
      for (const auto& c : r.H.pi_prime.basis[i]) v.push_back(render(c, o.params));
      basis.push_back(v);
      wit.push_back(render(r.H.pi_prime.witnesses[i], o.params));
    }
    h["pi_prime"] = {{"basis", basis}, {"witnesses", wit}};
  }
  h["group"] = group_json(r.H_text);
  j["H"] = h;
  j["D"] = mult_json(r.D, "e", o);
  j["coupling"] = coupling_json(r.coupling, o);
  j["G"] = group_json(r.G);
  j["assumptions"] = assumption_lines(r, o);
  j["completeness"] = r.complete() ? "complete" : "partial";
  j["partial_reasons"] = r.partial_reasons;
  j["truncation"] = {{"max_theta_order", o.max_theta_order},
                     {"finite_order_bound", o.finite_order_bound},
                     {"lattice_search_bound", o.lattice_search_bound}};
  return j.dump(2) + "\n";
}

std::string report_text(const PPVReport& r, const EngineOptions& o) {
  std::ostringstream os;
  os << "r1 = " << render(r.normalized.r1, o.params) << "\n";
  os << "r0 = " << render(r.normalized.r0, o.params) << "\n";
  os << "q = " << render(r.normalized.q, o.params) << "\n";
  os << classify_text(r.H, o);
  os << "D: " << to_string(r.D.kind);
  if (r.D.kind == MultGroupDesc::Kind::Finite) os << " of order " << r.D.order;
  os << "\n";
  os << "coupling: " << to_string(r.coupling.kind) << "\n";
  os << "G = {" << r.G.shape << "}\n";
  for (const auto& m : r.G.membership) os << "  " << m << "\n";
  for (const auto& rel : r.G.relations) os << "  " << rel << "\n";
  for (const auto& a : assumption_lines(r, o)) os << "assume " << a << "\n";
  os << "completeness: " << (r.complete() ? "complete" : "partial") << "\n";
  for (const auto& why : r.partial_reasons) os << "  " << why << "\n";
  return os.str();
}

std::string classify_text(const HDesc& h, const EngineOptions& o) {
  std::ostringstream os;
  os << "Case " << to_string(h.tag.kind) << "\n";
  const CaseTag& t = h.tag;
  switch (t.kind) {
    case RiccatiCase::I:
      os << "u = " << render(h.u, o.params) << "\n";
      for (const auto& s : t.solutions) os << "solution " << render(s, o.params) << "\n";
      break;
    case RiccatiCase::II:
      os << "phi = " << render(t.quadratic->phi, o.params) << "\n";
      os << "w^2 = " << render(t.quadratic->w2, o.params) << "\n";
      break;
    case RiccatiCase::III:
      os << "minimal polynomial of degree " << t.algebraic->degree << "\n";
      break;
    case RiccatiCase::IV:
      break;
  }
  return os.str();
}

}  // namespace ppv
