// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact equality. Usage: lieco_acceptance [criterion...]

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "lieco/contact.hpp"
#include "lieco/expr.hpp"
#include "lieco/liealg.hpp"
#include "lieco/prequant.hpp"
#include "lieco/sampling.hpp"
#include "lieco/verify.hpp"

using namespace lieco;

namespace {

constexpr int kSamples = 100;
constexpr int kDegree = 3;

class Criterion {
 public:
  void expect(const std::string& what, bool ok) {
    if (!ok && failed_.size() < 8) failed_.push_back(what);
    if (!ok) ++failures_;
    ++checks_;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  // Runs a sampled check and records it once.
  void sampled(const std::string& what, int count, const std::function<bool(int)>& f) {
    bool ok = true;
    for (int k = 0; k < count && ok; ++k) ok = f(k);
    expect(what, ok);
  }
  bool ok() const { return failures_ == 0; }
  const std::vector<std::string>& failed() const { return failed_; }
  const std::vector<std::string>& notes() const { return notes_; }
  int checks() const { return checks_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

Poly var(int n, int i) { return Poly::variable(n, i); }
Poly num(int n, long p, long q = 1) { return Poly(n, GaussRational(Rational(p, q))); }

std::vector<Vec> units(std::size_t dim, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> out;
  for (std::size_t i : idx) out.push_back(unit_vector(dim, i));
  return out;
}

// ------------------------------------------------------------------ 1
void canonical_structure(Criterion& c) {
  for (int n = 1; n <= 2; ++n) {
    const ContactSpace m(n);
    std::string alpha = "dx0", omega, mu, mm;
    for (int i = 1; i <= n; ++i) {
      const std::string a = std::to_string(2 * i - 1), b = std::to_string(2 * i);
      alpha += " + x" + a + "*dx" + b;
      omega += (i > 1 ? " + " : "") + ("dx" + a + "^dx" + b);
      mu += (i > 1 ? " + " : "") + ("Dx" + a + "^(Dx" + b + " - x" + a + "*Dx0)");
      mm += (i > 1 ? " + " : "") + ("Dx" + b + "^Dx" + a + "^Dx0");
    }
    const std::string tag = " (n=" + std::to_string(n) + ")";
    c.expect("alpha" + tag, m.alpha() == parse_form(alpha, n));
    c.expect("omega" + tag, m.omega() == parse_form(omega, n) && m.omega() == d(m.alpha()));
    c.expect("eta" + tag, m.eta() == parse_multivec("Dx0", n));
    c.expect("mu" + tag, m.mu() == parse_multivec(mu, n));
    c.expect("flat(omega, mu) = omega" + tag, flat(m.omega(), m.mu()) == m.omega());
    const MultiVec eta[1] = {m.eta()};
    c.expect("i_eta alpha = 1" + tag, evaluate(m.alpha(), eta) == num(n, 1));
    c.expect("i_eta omega = 0" + tag, interior(m.eta(), m.omega()).is_zero());
    const MultiVec bracket = schouten(m.mu(), m.mu());
    const MultiVec stated = parse_multivec(mm, n);
    c.expect("schouten(mu,mu) = sum Dx_{2i}^Dx_{2i-1}^Dx0" + tag, bracket == stated);
    c.expect("contract_tilde([mu,mu], omega) = -eta" + tag,
             contract_tilde(bracket, m.omega()) == -m.eta());
    c.note("schouten(mu,mu) = " + to_string(bracket) + tag);
    c.note("contract_tilde([mu,mu], omega) = " + to_string(contract_tilde(bracket, m.omega())) +
           tag);
    c.note("contract_tilde(sum Dx_{2i}^Dx_{2i-1}^Dx0, omega) = " +
           to_string(contract_tilde(stated, m.omega())) + tag);
  }
}

// ------------------------------------------------------------------ 2
void poisson_suite(Criterion& c) {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(1200 + static_cast<unsigned>(n));
    const ContactSpace m(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    c.sampled("antisymmetry, Leibniz, Jacobi, closure" + tag, kSamples, [&](int) {
      const Poly f = s.basic_poly(n, kDegree), g = s.basic_poly(n, kDegree),
                 h = s.basic_poly(n, kDegree);
      const Poly fg = poisson(m, f, g);
      return fg == -poisson(m, g, f) &&
             poisson(m, f, g * h) == g * poisson(m, f, h) + fg * h &&
             jacobiator(m, f, g, h).is_zero() && fg.is_basic();
    });
    c.sampled("{f,g} = omega(ham f, ham g)" + tag, kSamples, [&](int) {
      const Poly f = s.basic_poly(n, kDegree), g = s.basic_poly(n, kDegree);
      const MultiVec hv[2] = {ham(m, f), ham(m, g)};
      return poisson(m, f, g) == evaluate(m.omega(), hv);
    });
    c.sampled("{f,g} alpha^omega^n = n df^dg^alpha^omega^(n-1)" + tag, kSamples, [&](int) {
      const Poly f = s.basic_poly(n, kDegree), g = s.basic_poly(n, kDegree);
      const Form rhs = num(n, n) * wedge(wedge(wedge(d(Form::scalar(f)), d(Form::scalar(g))),
                                               m.alpha()),
                                         wedge_power(m.omega(), static_cast<unsigned>(n - 1)));
      return poisson(m, f, g) * m.volume() == rhs;
    });
    const MultiVec mm = schouten(m.mu(), m.mu());
    auto triple_pair = [&](const Poly& f, const Poly& g, const Poly& h) {
      return pair(wedge(wedge(d(Form::scalar(f)), d(Form::scalar(g))), d(Form::scalar(h))), mm);
    };
    c.sampled("jacobiator = (1/2)(df^dg^dh)([mu,mu]) on non-basic triples" + tag, kSamples,
              [&](int) {
                const Poly f = s.nonbasic_poly(n, kDegree), g = s.nonbasic_poly(n, kDegree),
                           h = s.nonbasic_poly(n, kDegree);
                return jacobiator(m, f, g, h) == num(n, 1, 2) * triple_pair(f, g, h);
              });
    Sampler t(1300 + static_cast<unsigned>(n));
    bool minus_half = true;
    for (int k = 0; k < kSamples; ++k) {
      const Poly f = t.nonbasic_poly(n, kDegree), g = t.nonbasic_poly(n, kDegree),
                 h = t.nonbasic_poly(n, kDegree);
      minus_half = minus_half && jacobiator(m, f, g, h) == num(n, -1, 2) * triple_pair(f, g, h);
    }
    if (minus_half) {
      c.note("jacobiator = -(1/2)(df^dg^dh)([mu,mu]) holds on all sampled triples" + tag);
    }
  }
}

// ------------------------------------------------------------------ 3
void contact_lift_suite(Criterion& c) {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(1400 + static_cast<unsigned>(n));
    const ContactSpace m(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    c.sampled("L_hat(f) alpha = eta(f) alpha" + tag, kSamples, [&](int k) {
      const Poly f = k % 2 == 0 ? s.poly(n, kDegree) : s.nonbasic_poly(n, kDegree);
      return lie_form(hat(m, f), m.alpha()) == f.partial(0) * m.alpha();
    });
    c.sampled("contact_class(hat f) is automorphism iff f basic" + tag, kSamples, [&](int k) {
      const Poly f = k % 2 == 0 ? s.basic_poly(n, kDegree) : s.nonbasic_poly(n, kDegree);
      const ContactClass cl = contact_class(m, hat(m, f));
      return cl.kind != ContactClass::Kind::none &&
             (cl.kind == ContactClass::Kind::automorphism) == f.is_basic();
    });
    c.sampled("schouten(hat f, hat g) = hat({f,g})" + tag, kSamples, [&](int) {
      const Poly f = s.basic_poly(n, kDegree), g = s.basic_poly(n, kDegree);
      return schouten(hat(m, f), hat(m, g)) == hat(m, poisson(m, f, g));
    });
    c.sampled("alpha([X,Y]) = (d alpha)(X,Y) on automorphisms" + tag, kSamples, [&](int) {
      const MultiVec X = hat(m, s.basic_poly(n, kDegree)), Y = hat(m, s.basic_poly(n, kDegree));
      const MultiVec xy[1] = {schouten(X, Y)};
      const MultiVec both[2] = {X, Y};
      return evaluate(m.alpha(), xy) == evaluate(d(m.alpha()), both);
    });
  }
}

// ------------------------------------------------------------------ 4
void basic_complex_suite(Criterion& c) {
  for (int n = 1; n <= 2; ++n) {
    Sampler s(1500 + static_cast<unsigned>(n));
    const ContactSpace m(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    c.sampled("delta_mu^2 = 0" + tag, kSamples, [&](int k) {
      const BasicClass cl = basic_normal_form(m, s.basic_multivec(n, k % (2 * n + 1), kDegree));
      return delta_mu(m, delta_mu(m, cl)).rep().is_zero();
    });
    c.sampled("d o iso = iso o delta_mu, degrees 0..2n" + tag, kSamples, [&](int k) {
      const BasicClass cl =
          basic_normal_form(m, s.invariant_multivec(n, k % (2 * n + 1), kDegree));
      return d(iso_to_basic_forms(m, cl)) == iso_to_basic_forms(m, delta_mu(m, cl));
    });
    c.expect("iso(class(mu)) = omega" + tag,
             iso_to_basic_forms(m, basic_normal_form(m, m.mu())) == m.omega());
    MultiVec primitive(n, 1);
    for (int i = 1; i <= n; ++i) primitive += var(n, 2 * i - 1) * MultiVec::basis(n, 2 * i - 1);
    c.expect("delta_mu(class(sum x_{2i-1} Dx_{2i-1})) = class(mu)" + tag,
             delta_mu(m, basic_normal_form(m, primitive)) == basic_normal_form(m, m.mu()));
  }
}

// ------------------------------------------------------------------ 5
void ce_suite(Criterion& c) {
  Sampler s(1600);
  std::vector<std::pair<std::string, LieAlgebra>> algs{{"heis3", algebras::heisenberg3()},
                                                       {"sl2", algebras::sl2()}};
  for (int k = 0; k < 20; ++k) {
    LieAlgebra g = s.solvable4();
    validate(g);
    algs.emplace_back("solvable4#" + std::to_string(k), std::move(g));
  }
  for (const auto& [name, g] : algs) {
    const LieModule triv = LieModule::trivial(g), ad = LieModule::adjoint(g);
    const int dim = static_cast<int>(g.dim());
    c.sampled("ce_d^2 = 0 on " + name, 10, [&](int k) {
      const int deg = k % dim;
      const Cochain a = s.cochain(g.dim(), deg, 1), b = s.cochain(g.dim(), deg, g.dim());
      return ce_d(triv, ce_d(triv, a)).is_zero() && ce_d(ad, ce_d(ad, b)).is_zero();
    });
    c.sampled("boundary^2 = 0 on " + name, 10, [&](int k) {
      const Chain u = s.chain(g.dim(), k % (dim + 1));
      return boundary(g, boundary(g, u)).is_zero();
    });
    c.sampled("bracket on degree 1 is the Lie bracket on " + name, 10, [&](int) {
      const Vec a = s.vec(g.dim()), b = s.vec(g.dim());
      return schouten_chain(g, Chain::vector(a), Chain::vector(b)) ==
             Chain::vector(g.bracket(a, b));
    });
    c.sampled("[u,v] = -delta(u^v) for closed u, v on " + name, 10, [&](int k) {
      const int du = 1 + k % 2, dv = 1 + (k / 2) % 2;
      auto cycle = [&](int deg) {
        const auto basis = nullspace(boundary_matrix(g, deg));
        const auto tuples = combinations(g.dim(), deg);
        Chain out(deg);
        for (const Vec& v : basis) {
          const Rational w = s.coefficient();
          for (std::size_t i = 0; i < v.size(); ++i) out.add(tuples[i], w * v[i]);
        }
        return out;
      };
      const Chain u = cycle(du), v = cycle(dv);
      return schouten_chain(g, u, v) == Rational(-1) * boundary(g, wedge(u, v));
    });
  }
}

// ------------------------------------------------------------------ 6
void cohomology_dims(Criterion& c) {
  auto dims_match = [&](const LieModule& s, int k, std::size_t want) {
    return cohomology(s, k).dimension == want && cohomology_dimension_bareiss(s, k) == want;
  };
  const LieModule sl = LieModule::trivial(algebras::sl2());
  const std::size_t sl_dims[4] = {1, 0, 0, 1};
  for (int k = 0; k <= 3; ++k) {
    c.expect("sl2 H^" + std::to_string(k), dims_match(sl, k, sl_dims[k]));
  }
  const LieModule heis = LieModule::trivial(algebras::heisenberg3());
  c.expect("heis3 H^0 = 1", dims_match(heis, 0, 1));
  c.expect("heis3 H^1 = 2", dims_match(heis, 1, 2));
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    const LieModule ab = LieModule::trivial(algebras::abelian(dim));
    std::size_t binom = 1;
    for (std::size_t k = 0; k <= dim; ++k) {
      c.expect("abelian Q^" + std::to_string(dim) + " H^" + std::to_string(k),
               dims_match(ab, static_cast<int>(k), binom));
      binom = binom * (dim - k) / (k + 1);
    }
  }
}

// ------------------------------------------------------------------ 7
void characteristic_class(Criterion& c) {
  const LieAlgebra heis = algebras::heisenberg3();
  const Ideal center(heis, units(3, {2}));
  const CharClass cc = char_class(center);
  const bool unit = cc.coordinates.size() == 1 &&
                    (cc.coordinates[0] == Rational(1) || cc.coordinates[0] == Rational(-1));
  c.expect("heis3/center: nonzero class of magnitude 1", !cc.is_zero() && unit);
  std::mt19937_64 rng(1700);
  bool invariant = true;
  for (int k = 0; k < 20; ++k) {
    invariant = invariant &&
                char_class(center, random_projection(center, rng)).coordinates == cc.coordinates;
  }
  c.expect("heis3/center: invariant under 20 random projections", invariant);

  const LieAlgebra prod = algebras::direct_sum(algebras::affine2(), algebras::abelian(1));
  const Ideal factor(prod, units(3, {2}));
  const LieAlgebra prod2 = algebras::direct_sum(algebras::sl2(), algebras::abelian(2));
  const Ideal factor2(prod2, units(5, {3, 4}));
  bool zero = char_class(factor).is_zero() && char_class(factor2).is_zero();
  for (int k = 0; k < 20; ++k) {
    zero = zero && char_class(factor, random_projection(factor, rng)).is_zero() &&
           char_class(factor2, random_projection(factor2, rng)).is_zero();
  }
  c.expect("direct-product ideals: class 0", zero);

  auto iff = [&](const std::string& what, const Ideal& v, const Projection& p, bool flat) {
    const bool r0 = curvature(v, p).is_zero(), sub = kernel_is_subalgebra(v, p);
    c.expect("curvature: " + what, r0 == flat && sub == flat);
  };
  iff("heis3/center, canonical alpha (nonzero)", center, default_projection(center), false);
  iff("affine2 + Q, projection onto the factor (zero)", factor, default_projection(factor), true);
  iff("sl2, V = L, alpha = id (zero)", Ideal(algebras::sl2(), units(3, {0, 1, 2})),
      Matrix::identity(3), true);
  c.expect("heis3/center: R(e1,e2) = -e3",
           curvature(center, default_projection(center)).value({0, 1}) == Vec{-1});
}

// ------------------------------------------------------------------ 8
void prequantization(Criterion& c) {
  const Rational hs[3] = {Rational(1), Rational(1, 2), Rational(2)};
  for (int n = 1; n <= 2; ++n) {
    Sampler s(1800 + static_cast<unsigned>(n));
    const ContactSpace m(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    c.sampled("homomorphism defect = 0, both normalizations" + tag, kSamples, [&](int k) {
      const Poly f = s.basic_poly(n, kDegree), g = s.basic_poly(n, kDegree);
      return homomorphism_defect(m, f, g, hs[k % 3], Normalization::inverse_ih).is_zero() &&
             homomorphism_defect(m, f, g, hs[k % 3], Normalization::times_ih).is_zero();
    });
    c.sampled("volume identities for X = hat(basic)" + tag, kSamples, [&](int) {
      const auto [lie_v, exact] =
          volume_identities(m, s.basic_poly(n, kDegree), hat(m, s.basic_poly(n, kDegree)));
      return lie_v.is_zero() && exact.is_zero();
    });
    for (const Rational& h : hs) {
      const GaussRational ih(Rational(0), h);
      const PreqOp lhs = ih * commutator(lift(m, var(n, 1), h), lift(m, var(n, 2), h));
      c.expect("ih [o(x1), o(x2)] = o(1) = identity, h=" + h.str() + tag,
               lhs == lift(m, num(n, 1), h) && on_weight(lhs, h) == PreqOp::identity(n));
    }
  }
}

// ------------------------------------------------------------------ 9
struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("\"") + LIECO_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

void cli(Criterion& c) {
  const std::string data = LIECO_DATA_DIR;
  const Run poisson_run = run_cli("contact --n 1 poisson \"x1\" \"x2\"");
  c.expect("contact --n 1 poisson x1 x2 prints 1",
           poisson_run.status == 0 && trim(poisson_run.out) == "1");

  const Run cc = run_cli("lie --file \"" + data + "/heis3.json\" charclass --ideal \"0,0,1\"");
  const bool nonzero = cc.out.find("class: nonzero") != std::string::npos;
  const bool unit = std::regex_search(cc.out, std::regex(R"(coordinates: \(-?1\))"));
  c.expect("lie charclass on heis3 reports a nonzero class with coordinate +-1",
           cc.status == 0 && nonzero && unit);

  const Run v = run_cli("verify --suite all --seed 42 --n 1 --max-degree 3");
  c.expect("verify --suite all --seed 42 exits 0", v.status == 0);

  const Run bad = run_cli("contact --n 1 poisson \"dx1 ^ Dx2\" \"x1\"");
  c.expect("input errors exit 2", bad.status == 2);

  VerifyOptions opts;
  opts.seed = 42;
  const VerifyReport report = run_verify("all", opts);
  bool roundtrip = report.roundtrips > 0;
  int roundtrip_checks = 0;
  // The liealg suite prints chains and vectors, not expressions, so it has no
  // round-trip check of its own.
  for (const auto& check : report.checks) {
    if (check.name == "parser round-trip") {
      ++roundtrip_checks;
      roundtrip = roundtrip && check.ok();
    }
  }
  c.expect("parser round-trip on every printed suite value",
           roundtrip && roundtrip_checks == static_cast<int>(suite_names().size()) - 1);
  c.note(std::to_string(report.roundtrips) + " values sent through format/parse");
}

const std::map<int, std::pair<std::string, std::function<void(Criterion&)>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<void(Criterion&)>>> all{
      {1, {"canonical structure", canonical_structure}},
      {2, {"Poisson algebra", poisson_suite}},
      {3, {"contact lifts", contact_lift_suite}},
      {4, {"basic complex", basic_complex_suite}},
      {5, {"Chevalley-Eilenberg complexes", ce_suite}},
      {6, {"cohomology dimensions", cohomology_dims}},
      {7, {"characteristic class and curvature", characteristic_class}},
      {8, {"prequantization", prequantization}},
      {9, {"command line", cli}},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
  if (which.empty()) {
    for (const auto& [id, entry] : criteria()) which.push_back(id);
  }
  bool all_ok = true;
  for (int id : which) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    Criterion c;
    try {
      it->second.second(c);
    } catch (const std::exception& e) {
      c.expect(std::string("unexpected exception: ") + e.what(), false);
    }
    std::cout << "criterion " << id << " (" << it->second.first << "): "
              << (c.ok() ? "PASS" : "FAIL") << " [" << c.checks() << " checks]\n";
    for (const auto& f : c.failed()) std::cout << "  failed: " << f << "\n";
    for (const auto& n : c.notes()) std::cout << "  note: " << n << "\n";
    all_ok = all_ok && c.ok();
  }
  return all_ok ? 0 : 1;
}
