// lieco: command-line front end.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 bad input.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lieco/contact.hpp"
#include "lieco/expr.hpp"
#include "lieco/lie_json.hpp"
#include "lieco/liealg.hpp"
#include "lieco/prequant.hpp"
#include "lieco/verify.hpp"

using nlohmann::json;
using namespace lieco;

namespace {

// Raised when the computation ran but an identity it checks does not hold.
struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  bool as_json = false;
  json doc = json::object();
  std::vector<std::string> lines;

  void put(const std::string& key, const json& value, const std::string& text) {
    doc[key] = value;
    lines.push_back(text);
  }
  void flush() const {
    if (as_json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

std::string cochain_to_string(const LieAlgebra& g, const Cochain& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, v] : c.components()) {
    if (!out.empty()) out += " + ";
    std::string tuple;
    for (int i : idx) tuple += (tuple.empty() ? "" : "^") + g.names()[i] + "*";
    if (tuple.empty()) tuple = "1";
    out += tuple + " -> " + vec_to_string(v);
  }
  return out;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

// ------------------------------------------------------------- contact

struct ContactArgs {
  int n = 1;
  std::string op;
  std::vector<std::string> operands;
};

int run_contact(const ContactArgs& a, Output& out) {
  const ContactSpace m(a.n);
  auto need = [&](std::size_t k) {
    if (a.operands.size() != k) {
      throw std::invalid_argument("'" + a.op + "' takes " + std::to_string(k) +
                                  " argument(s)");
    }
  };
  auto poly = [&](std::size_t i) { return parse_poly(a.operands[i], a.n); };
  auto put_value = [&](const Value& v) {
    out.put("result", format(v), format(v));
  };

  if (a.op == "poisson") {
    need(2);
    put_value(poisson(m, poly(0), poly(1)));
  } else if (a.op == "ham") {
    need(1);
    put_value(ham(m, poly(0)));
  } else if (a.op == "hat") {
    need(1);
    put_value(hat(m, poly(0)));
  } else if (a.op == "class") {
    need(1);
    const ContactClass c = contact_class(m, parse_multivec(a.operands[0], a.n));
    switch (c.kind) {
      case ContactClass::Kind::automorphism:
        out.put("class", "automorphism", "automorphism");
        break;
      case ContactClass::Kind::transformation:
        out.put("class", "transformation", "transformation");
        out.put("multiplier", c.multiplier->str(), "multiplier: " + c.multiplier->str());
        break;
      case ContactClass::Kind::none:
        out.put("class", "none", "none");
        break;
    }
  } else if (a.op == "deltamu") {
    need(1);
    const BasicClass c = basic_normal_form(m, parse_multivec(a.operands[0], a.n));
    put_value(delta_mu(m, c).rep());
  } else if (a.op == "iso") {
    need(1);
    const BasicClass c = basic_normal_form(m, parse_multivec(a.operands[0], a.n));
    put_value(iso_to_basic_forms(m, c));
  } else if (a.op == "jacobiator") {
    need(3);
    const Poly j = jacobiator(m, poly(0), poly(1), poly(2));
    const Poly b = jacobiator_from_bivector(m, poly(0), poly(1), poly(2));
    out.put("result", j.str(), j.str());
    out.put("from_bivector", b.str(), "-(1/2)(df^dg^dh)([mu,mu]) = " + b.str());
    if (j != b) throw IdentityFailure("jacobiator differs from the bivector formula");
  } else {
    throw std::invalid_argument("unknown contact operation '" + a.op + "'");
  }
  return 0;
}

// ------------------------------------------------------------------ lie

struct LieArgs {
  std::string file;
  std::string op;
  std::string ideal;
  int k = 0;
  std::string module = "trivial";
  std::string projection;
};

Ideal make_ideal(const LieAlgebra& lie, const std::string& spec) {
  if (spec.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < lie.dim(); ++i) all.push_back(unit_vector(lie.dim(), i));
    return Ideal(lie, all);
  }
  return Ideal(lie, parse_vector_list(spec, lie.dim()));
}

int run_lie(const LieArgs& a, Output& out) {
  if (a.op == "validate") {
    try {
      const LieAlgebra lie = lie_from_json_file(a.file);
      out.put("valid", true, "ok: Jacobi identity holds (dim " + std::to_string(lie.dim()) + ")");
    } catch (const JacobiError& e) {
      out.put("valid", false, e.what());
      out.doc["triple"] = e.triple();
      throw IdentityFailure(e.what());
    }
    return 0;
  }
  const LieAlgebra lie = lie_from_json_file(a.file);
  if (a.op == "homology") {
    const Ideal v = make_ideal(lie, a.ideal);
    const HomologyResult h = homology(v.as_algebra(), a.k);
    out.put("dimension", h.dimension, "dim H_" + std::to_string(a.k) + " = " +
                                          std::to_string(h.dimension));
    json reps = json::array();
    for (const auto& c : h.representatives) {
      const std::string s = to_string(lie, embed_chain(v, c));
      reps.push_back(s);
      out.lines.push_back("  class of " + s);
    }
    out.doc["representatives"] = reps;
  } else if (a.op == "cohomology") {
    LieModule mod = a.module == "adjoint" ? LieModule::adjoint(lie)
                    : a.module == "trivial"
                        ? LieModule::trivial(lie)
                        : throw std::invalid_argument("unknown module '" + a.module + "'");
    const CohomologyResult h = cohomology(mod, a.k);
    out.put("dimension", h.dimension, "dim H^" + std::to_string(a.k) + " = " +
                                          std::to_string(h.dimension));
    json basis = json::array();
    for (const auto& c : h.basis) {
      const std::string s = cochain_to_string(lie, c);
      basis.push_back(s);
      out.lines.push_back("  " + s);
    }
    out.doc["basis"] = basis;
  } else if (a.op == "charclass") {
    const Ideal v = make_ideal(lie, a.ideal);
    const CharClass c = char_class(v);
    const H1Module h = h1_module(v);
    out.put("h2_dimension", c.h2_dimension,
            "dim H^2(L/V; H_1(V)) = " + std::to_string(c.h2_dimension));
    out.put("zero", c.is_zero(), c.is_zero() ? "class: zero" : "class: nonzero");
    out.put("coordinates", vec_json(c.coordinates), "coordinates: " + vec_to_string(c.coordinates));
    out.put("representative", cochain_to_string(h.quotient, c.representative),
            "representative: " + cochain_to_string(h.quotient, c.representative));
  } else if (a.op == "curvature") {
    const Ideal v = make_ideal(lie, a.ideal);
    const Projection p = a.projection.empty()
                             ? default_projection(v)
                             : projection_from_parent_rows(
                                   v, projection_rows_from_json_file(a.projection, lie.dim()));
    const Cochain r = curvature(v, p);
    json values = json::object();
    for (const auto& [idx, val] : r.components()) {
      const std::string key = "R(" + lie.names()[idx[0]] + "," + lie.names()[idx[1]] + ")";
      const Vec x = v.embed(val);
      values[key] = vec_json(x);
      out.lines.push_back(key + " = " + vec_to_string(x));
    }
    out.doc["values"] = values;
    const bool sub = kernel_is_subalgebra(v, p);
    out.put("zero", r.is_zero(), r.is_zero() ? "curvature: zero" : "curvature: nonzero");
    out.put("kernel_is_subalgebra", sub,
            std::string("kernel of the projection is a subalgebra: ") + (sub ? "yes" : "no"));
    if (r.is_zero() != sub) throw IdentityFailure("curvature/splitting criterion disagree");
  } else {
    throw std::invalid_argument("unknown lie operation '" + a.op + "'");
  }
  return 0;
}

// ---------------------------------------------------------------- preq

struct PreqArgs {
  int n = 1;
  std::string h = "1";
  std::string normalization = "inverse-ih";
  std::string op;
  std::vector<std::string> operands;
};

int run_preq(const PreqArgs& a, Output& out) {
  const ContactSpace m(a.n);
  const Rational h = Rational::parse(a.h);
  const Normalization norm = parse_normalization(a.normalization);
  out.doc["normalization"] = to_string(norm);
  if (a.op == "lift") {
    if (a.operands.size() != 1) throw std::invalid_argument("'lift' takes 1 argument");
    const PreqOp o = lift(m, parse_poly(a.operands[0], a.n), h, norm);
    out.put("operator", to_string(o), "o(f) = " + to_string(o));
    const PreqOp w = on_weight(o, h);
    out.put("on_weight", to_string(w), "on weight " + h.str() + ": " + to_string(w));
  } else if (a.op == "defect") {
    if (a.operands.size() != 2) throw std::invalid_argument("'defect' takes 2 arguments");
    const PreqOp dft = homomorphism_defect(m, parse_poly(a.operands[0], a.n),
                                           parse_poly(a.operands[1], a.n), h, norm);
    out.put("defect", to_string(dft), "defect: " + to_string(dft));
    if (!dft.is_zero()) throw IdentityFailure("homomorphism defect is nonzero");
  } else {
    throw std::invalid_argument("unknown preq operation '" + a.op + "'");
  }
  return 0;
}

// -------------------------------------------------------------- verify

int run_verify_cmd(const std::string& suite, const VerifyOptions& opts, Output& out) {
  const VerifyReport rep = run_verify(suite, opts);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j = {{"suite", c.suite}, {"check", c.name}, {"samples", c.samples},
              {"failures", c.failures}, {"ok", c.ok()}};
    std::string line = std::string(c.ok() ? "PASS " : "FAIL ") + c.suite + ": " + c.name +
                       " (" + std::to_string(c.samples) + " samples";
    if (!c.ok()) {
      j["counterexample"] = c.counterexample;
      line += ", " + std::to_string(c.failures) + " failed; counterexample: " + c.counterexample;
    }
    out.lines.push_back(line + ")");
    checks.push_back(j);
  }
  out.doc["checks"] = checks;
  out.put("ok", rep.ok(), rep.ok() ? "all identities hold" : "some identities FAILED");
  out.doc["roundtrips"] = rep.roundtrips;
  out.doc["seed"] = opts.seed;
  if (!rep.ok()) throw IdentityFailure("verification failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact contact-geometric and Lie-algebraic calculus"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Machine-readable output");

  ContactArgs ca;
  auto* contact = app.add_subcommand("contact", "Computations on the standard contact space");
  contact->add_option("--n", ca.n, "Half dimension (coordinates x0..x2n)")->check(CLI::PositiveNumber);
  contact->add_option("op", ca.op, "poisson | ham | hat | class | deltamu | iso | jacobiator")
      ->required();
  contact->add_option("operands", ca.operands, "Expressions");

  LieArgs la;
  auto* lie = app.add_subcommand("lie", "Lie algebra (co)homology and ideal invariants");
  lie->add_option("--file", la.file, "Lie algebra JSON file")->required();
  lie->add_option("op", la.op, "validate | homology | cohomology | charclass | curvature")->required();
  lie->add_option("--ideal", la.ideal, "Comma-separated basis vectors of the ideal");
  lie->add_option("--k", la.k, "Degree");
  lie->add_option("--module", la.module, "trivial | adjoint");
  lie->add_option("--projection", la.projection, "JSON file with rows alpha(e_i)");

  PreqArgs pa;
  auto* preq = app.add_subcommand("preq", "Prequantization operators");
  preq->add_option("--n", pa.n, "Half dimension")->check(CLI::PositiveNumber);
  preq->set_help_flag("--help", "Print this help message and exit");
  preq->add_option("--h", pa.h, "Nonzero rational weight")->required();
  preq->add_option("--normalization", pa.normalization, "times-ih | inverse-ih");
  preq->add_option("op", pa.op, "lift | defect")->required();
  preq->add_option("operands", pa.operands, "Basic functions");

  std::string suite = "all";
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Seeded identity suites");
  verify->add_option("--suite", suite, "coeff | exterior | contact | liealg | preq | all");
  verify->add_option("--seed", vo.seed, "Random seed");
  verify->add_option("--n", vo.n, "Half dimension")->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", vo.max_degree, "Maximal monomial degree");
  verify->add_option("--samples", vo.samples, "Samples per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*contact) run_contact(ca, out);
    if (*lie) run_lie(la, out);
    if (*preq) run_preq(pa, out);
    if (*verify) run_verify_cmd(suite, vo, out);
  } catch (const IdentityFailure& e) {
    out.doc["error"] = e.what();
    out.flush();
    if (!out.as_json) std::cerr << "identity failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (out.as_json) {
      std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  out.flush();
  return 0;
}
