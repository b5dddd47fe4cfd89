#include "lieco/verify.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "lieco/contact.hpp"
#include "lieco/expr.hpp"
#include "lieco/liealg.hpp"
#include "lieco/prequant.hpp"
#include "lieco/sampling.hpp"

namespace lieco {

namespace {

using Outcome = std::optional<std::string>;

class Runner {
 public:
  Runner(VerifyReport& report, std::string suite, const VerifyOptions& opts)
      : report_(report), suite_(std::move(suite)), opts_(opts),
        sampler_(opts.seed ^ std::hash<std::string>{}(suite_)) {}

  Sampler& s() { return sampler_; }
  const VerifyOptions& opts() const { return opts_; }
  int n() const { return opts_.n; }
  int deg() const { return opts_.max_degree; }

  // body(k) returns a counterexample description on failure.
  void check(const std::string& name, int samples,
             const std::function<Outcome(int)>& body) {
    CheckResult r{suite_, name, samples, 0, ""};
    for (int k = 0; k < samples; ++k) {
      Outcome bad;
      try {
        bad = body(k);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        if (r.failures == 0) r.counterexample = *bad;
        ++r.failures;
      }
    }
    report_.checks.push_back(std::move(r));
  }
  void check(const std::string& name, const std::function<Outcome(int)>& body) {
    check(name, opts_.samples, body);
  }

  // Every value that shows up in a report must reparse to itself.
  template <class T>
  const T& rt(const T& v) {
    ++report_.roundtrips;
    ++rt_total_;
    const Value value(v);
    const std::string text = format(value);
    bool same = false;
    try {
      same = values_equal(parse(text, n_of(v)), value);
    } catch (const std::exception&) {
      same = false;
    }
    if (!same) {
      if (rt_failures_ == 0) rt_example_ = text;
      ++rt_failures_;
    }
    return v;
  }

  void finish() {
    if (rt_total_ == 0) return;
    report_.checks.push_back(CheckResult{suite_, "parser round-trip",
                                         rt_total_, rt_failures_, rt_example_});
  }

 private:
  template <class T>
  static int n_of(const T& v) { return v.half_dim(); }

  VerifyReport& report_;
  std::string suite_;
  VerifyOptions opts_;
  Sampler sampler_;
  int rt_total_ = 0;
  int rt_failures_ = 0;
  std::string rt_example_;
};

std::string show(const Poly& p) { return p.str(); }
std::string show(const Form& f) { return to_string(f); }
std::string show(const MultiVec& w) { return to_string(w); }

template <class... Ts>
std::string args(const Ts&... xs) {
  std::string out;
  ((out += (out.empty() ? "" : " | ") + show(xs)), ...);
  return out;
}

Outcome fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

Poly sign_poly(int n, int s) { return Poly(n, GaussRational(s)); }
int parity_sign(int e) { return e % 2 == 0 ? 1 : -1; }

// ------------------------------------------------------------------ coeff

void coeff_suite(Runner& r) {
  const int n = r.n(), D = r.deg();
  Sampler& s = r.s();
  r.check("ring axioms", [&](int) -> Outcome {
    const Poly a = r.rt(s.poly(n, D)), b = r.rt(s.poly(n, D)), c = r.rt(s.poly(n, D));
    const bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                    a * b == b * a && (a + b) + c == a + (b + c) && a - a == Poly(n);
    return fail_if(!ok, args(a, b, c));
  });
  r.check("Leibniz rule for partial derivatives", [&](int) -> Outcome {
    const Poly a = s.poly(n, D), b = s.poly(n, D);
    for (int i = 0; i <= 2 * n; ++i) {
      if ((a * b).partial(i) != a.partial(i) * b + a * b.partial(i)) {
        return args(a, b) + " at x" + std::to_string(i);
      }
    }
    return std::nullopt;
  });
  r.check("partial derivatives commute", [&](int) -> Outcome {
    const Poly a = s.poly(n, D);
    for (int i = 0; i <= 2 * n; ++i) {
      for (int j = 0; j <= 2 * n; ++j) {
        if (a.partial(i).partial(j) != a.partial(j).partial(i)) return args(a);
      }
    }
    return std::nullopt;
  });
  r.check("basic functions form a subalgebra", [&](int) -> Outcome {
    const Poly a = s.basic_poly(n, D), b = s.basic_poly(n, D);
    return fail_if(!a.is_basic() || !(a + b).is_basic() || !(a * b).is_basic(),
                   args(a, b));
  });
  r.check("evaluation is a ring map", [&](int) -> Outcome {
    const Poly a = s.poly(n, D), b = s.poly(n, D);
    const Vec pt = s.vec(static_cast<std::size_t>(2 * n + 1));
    const bool ok = (a * b).eval(pt) == a.eval(pt) * b.eval(pt) &&
                    (a + b).eval(pt) == a.eval(pt) + b.eval(pt);
    return fail_if(!ok, args(a, b));
  });
}

// --------------------------------------------------------------- exterior

void exterior_suite(Runner& r) {
  const int n = r.n(), D = r.deg(), top = 2 * n + 1;
  Sampler& s = r.s();
  const int Dv = std::min(D, 2);  // coefficient degree for vector fields

  r.check("d o d = 0", [&](int k) -> Outcome {
    const Form f = r.rt(s.form(n, k % (top + 1), D));
    return fail_if(!d(d(f)).is_zero(), args(f));
  });
  r.check("wedge is graded commutative", [&](int k) -> Outcome {
    const Form a = s.form(n, k % 3, D), b = s.form(n, (k / 3) % 3, D);
    const int sg = parity_sign(a.degree() * b.degree());
    return fail_if(wedge(a, b) != sign_poly(n, sg) * wedge(b, a), args(a, b));
  });
  r.check("Koszul expansion of d is tensorial", [&](int) -> Outcome {
    const Form w = s.form(n, 1, D);
    const MultiVec X = s.multivec(n, 1, Dv), Y = s.multivec(n, 1, Dv);
    const Poly f = s.poly(n, Dv);
    auto koszul = [&](const MultiVec& A, const MultiVec& B) {
      return apply_vector(A, pair(w, B)) - apply_vector(B, pair(w, A)) -
             pair(w, schouten(A, B));
    };
    const MultiVec fX = f * X;
    const MultiVec args2[2] = {X, Y};
    const bool ok = koszul(fX, Y) == f * koszul(X, Y) &&
                    koszul(X, Y) == evaluate(d(w), args2);
    return fail_if(!ok, args(w, X, Y, f));
  });
  r.check("i_X is an antiderivation", [&](int k) -> Outcome {
    const MultiVec X = s.multivec(n, 1, Dv);
    const Form a = s.form(n, k % 3, D), b = s.form(n, (k / 3) % 3, D);
    const Form lhs = interior(X, wedge(a, b));
    const Form rhs = wedge(interior(X, a), b) +
                     sign_poly(n, parity_sign(a.degree())) * wedge(a, interior(X, b));
    return fail_if(lhs != rhs || !interior(X, interior(X, a)).is_zero(),
                   args(X, a, b));
  });
  r.check("[L_X, i_Y] = i_[X,Y] and [L_X, L_Y] = L_[X,Y]", [&](int k) -> Outcome {
    const MultiVec X = s.multivec(n, 1, Dv), Y = s.multivec(n, 1, Dv);
    const Form t = s.form(n, 1 + k % 2, D);
    const MultiVec XY = schouten(X, Y);
    const bool ok =
        lie_form(X, interior(Y, t)) - interior(Y, lie_form(X, t)) == interior(XY, t) &&
        lie_form(X, lie_form(Y, t)) - lie_form(Y, lie_form(X, t)) == lie_form(XY, t) &&
        lie_form(X, d(t)) == d(lie_form(X, t));
    return fail_if(!ok, args(X, Y, t));
  });
  r.check("Schouten graded antisymmetry", [&](int k) -> Outcome {
    const MultiVec u = r.rt(s.multivec(n, k % 3, Dv)), v = r.rt(s.multivec(n, (k / 3) % 3, Dv));
    const int sg = -parity_sign((u.degree() - 1) * (v.degree() - 1));
    return fail_if(schouten(u, v) != sign_poly(n, sg) * schouten(v, u), args(u, v));
  });
  r.check("Schouten graded Jacobi identity", [&](int k) -> Outcome {
    const MultiVec u = s.multivec(n, 1 + k % 2, Dv, 2),
                   v = s.multivec(n, 1 + (k / 2) % 2, Dv, 2),
                   w = s.multivec(n, 1 + (k / 4) % 2, Dv, 2);
    const int a = u.degree() - 1, b = v.degree() - 1, c = w.degree() - 1;
    const MultiVec sum = sign_poly(n, parity_sign(a * c)) * schouten(u, schouten(v, w)) +
                         sign_poly(n, parity_sign(b * a)) * schouten(v, schouten(w, u)) +
                         sign_poly(n, parity_sign(c * b)) * schouten(w, schouten(u, v));
    return fail_if(!sum.is_zero(), args(u, v, w));
  });
  r.check("Schouten graded Leibniz rule", [&](int k) -> Outcome {
    const MultiVec u = s.multivec(n, k % 3, Dv), v = s.multivec(n, (k / 3) % 3, Dv),
                   w = s.multivec(n, 1, Dv);
    const MultiVec lhs = schouten(u, wedge(v, w));
    const MultiVec rhs =
        wedge(schouten(u, v), w) +
        sign_poly(n, parity_sign((u.degree() + 1) * v.degree())) * wedge(v, schouten(u, w));
    return fail_if(lhs != rhs, args(u, v, w));
  });
  r.check("[X, f] = X(f)", [&](int) -> Outcome {
    const MultiVec X = s.multivec(n, 1, Dv);
    const Poly f = s.poly(n, D);
    return fail_if(schouten(X, MultiVec::scalar(f)) != MultiVec::scalar(apply_vector(X, f)),
                   args(X, f));
  });
  const ContactSpace m(n);
  r.check("flat and sharp are algebra maps", [&](int k) -> Outcome {
    const MultiVec a = s.multivec(n, k % 3, Dv), b = s.multivec(n, (k / 3) % 3, Dv);
    const Form p = s.form(n, k % 3, Dv), q = s.form(n, (k / 3) % 3, Dv);
    const bool ok = flat(m.omega(), wedge(a, b)) == wedge(flat(m.omega(), a), flat(m.omega(), b)) &&
                    sharp(m.mu(), wedge(p, q)) == wedge(sharp(m.mu(), p), sharp(m.mu(), q));
    return fail_if(!ok, args(a, b, p, q));
  });
  r.check("contract_tilde defining relation", [&](int k) -> Outcome {
    const int mdeg = 1 + k % 3;
    const MultiVec w = s.multivec(n, mdeg, Dv);
    const Form beta = s.form(n, k % (mdeg + 1), Dv);
    const Form lambda = s.form(n, mdeg - beta.degree(), Dv);
    return fail_if(pair(lambda, contract_tilde(w, beta)) != pair(wedge(beta, lambda), w),
                   args(w, beta, lambda));
  });
}

// ---------------------------------------------------------------- contact

void contact_suite(Runner& r) {
  const int n = r.n(), D = r.deg();
  Sampler& s = r.s();
  const ContactSpace m(n);
  r.rt(m.alpha());
  r.rt(m.omega());
  r.rt(m.mu());

  r.check("Poisson bracket on basic functions", [&](int) -> Outcome {
    const Poly f = r.rt(s.basic_poly(n, D)), g = r.rt(s.basic_poly(n, D)),
               h = r.rt(s.basic_poly(n, D));
    const Poly fg = r.rt(poisson(m, f, g));
    const bool ok = fg == -poisson(m, g, f) &&
                    poisson(m, f, g * h) == g * poisson(m, f, h) + fg * h &&
                    jacobiator(m, f, g, h).is_zero() && fg.is_basic();
    return fail_if(!ok, args(f, g, h));
  });
  r.check("{f,g} = omega(ham f, ham g)", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), g = s.basic_poly(n, D);
    const MultiVec hv[2] = {r.rt(ham(m, f)), r.rt(ham(m, g))};
    return fail_if(poisson(m, f, g) != evaluate(m.omega(), hv), args(f, g));
  });
  r.check("{f,g} alpha^omega^n = n df^dg^alpha^omega^(n-1)", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), g = s.basic_poly(n, D);
    const Form df = d(Form::scalar(f)), dg = d(Form::scalar(g));
    const Form rhs = Poly(n, GaussRational(n)) *
                     wedge(wedge(wedge(df, dg), m.alpha()),
                           wedge_power(m.omega(), static_cast<unsigned>(n - 1)));
    return fail_if(poisson(m, f, g) * m.volume() != rhs, args(f, g));
  });
  r.check("jacobiator = -(1/2)(df^dg^dh)([mu,mu])", [&](int) -> Outcome {
    const Poly f = s.nonbasic_poly(n, D), g = s.poly(n, D), h = s.poly(n, D);
    return fail_if(jacobiator(m, f, g, h) != jacobiator_from_bivector(m, f, g, h),
                   args(f, g, h));
  });
  r.check("ham(f) is horizontal; flat(ham f) = -df for basic f", [&](int) -> Outcome {
    const Poly f = s.poly(n, D), b = s.basic_poly(n, D);
    const bool ok = interior(ham(m, f), m.alpha()).is_zero() &&
                    flat(m.omega(), ham(m, b)) == -d(Form::scalar(b));
    return fail_if(!ok, args(f, b));
  });
  r.check("L_hat(f) alpha = eta(f) alpha", [&](int) -> Outcome {
    const Poly f = s.poly(n, D);
    const MultiVec X = r.rt(hat(m, f));
    return fail_if(lie_form(X, m.alpha()) != f.partial(0) * m.alpha(), args(f));
  });
  r.check("contact_class(hat f) is automorphism iff f is basic", [&](int k) -> Outcome {
    const Poly f = k % 2 == 0 ? s.basic_poly(n, D) : s.nonbasic_poly(n, D);
    const ContactClass c = contact_class(m, hat(m, f));
    const bool ok = (c.kind == ContactClass::Kind::automorphism) == f.is_basic() &&
                    c.kind != ContactClass::Kind::none &&
                    c.multiplier && *c.multiplier == f.partial(0);
    return fail_if(!ok, args(f));
  });
  r.check("hat is a Lie homomorphism on basic functions", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), g = s.basic_poly(n, D);
    return fail_if(schouten(hat(m, f), hat(m, g)) != hat(m, poisson(m, f, g)), args(f, g));
  });
  r.check("hat is injective: alpha(hat f) = f", [&](int) -> Outcome {
    const Poly f = s.poly(n, D);
    const MultiVec X = hat(m, f);
    const MultiVec one[1] = {X};
    return fail_if(evaluate(m.alpha(), one) != f || (X.is_zero() != f.is_zero()), args(f));
  });
  r.check("alpha([X,Y]) = (d alpha)(X,Y) on automorphisms", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), g = s.basic_poly(n, D);
    const MultiVec X = hat(m, f), Y = hat(m, g);
    const MultiVec xy[1] = {schouten(X, Y)};
    const MultiVec pair_xy[2] = {X, Y};
    return fail_if(evaluate(m.alpha(), xy) != evaluate(m.omega(), pair_xy), args(f, g));
  });
  r.check("[ker alpha, cont0] stays in ker alpha", [&](int) -> Outcome {
    // In cont0 the kernel of alpha is hat(constants killed by alpha) = 0, so
    // the statement reduces to alpha(hat 0) = 0 together with closure of
    // alpha(hat f) = f under brackets.
    const Poly f = s.basic_poly(n, D), g = s.basic_poly(n, D);
    const MultiVec xy[1] = {schouten(hat(m, f), hat(m, g))};
    const MultiVec zero[1] = {hat(m, Poly(n))};
    const bool ok = evaluate(m.alpha(), xy) == poisson(m, f, g) &&
                    evaluate(m.alpha(), zero).is_zero();
    return fail_if(!ok, args(f, g));
  });
  r.check("delta_mu o delta_mu = 0", [&](int k) -> Outcome {
    const MultiVec w = r.rt(s.basic_multivec(n, k % (2 * n + 1), D));
    const BasicClass c = basic_normal_form(m, w);
    return fail_if(!delta_mu(m, delta_mu(m, c)).rep().is_zero(), args(w));
  });
  r.check("d o iso = iso o delta_mu", [&](int k) -> Outcome {
    const MultiVec w = r.rt(s.invariant_multivec(n, k % (2 * n + 1), D));
    const BasicClass c = basic_normal_form(m, w);
    const Form img = r.rt(iso_to_basic_forms(m, c));
    const bool ok = d(img) == iso_to_basic_forms(m, delta_mu(m, c)) &&
                    is_basic_form(m, img) && iso_from_basic_forms(m, img) == c;
    return fail_if(!ok, args(w));
  });
  r.check("volume identities for automorphisms", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), p = s.basic_poly(n, 2), q = s.basic_poly(n, 2);
    const auto [lie_v, exact] = volume_identities(m, p * q, hat(m, f));
    return fail_if(!lie_v.is_zero() || !exact.is_zero(), args(f, p, q));
  });
  r.check("splitting primitive: delta_mu(sum x_{2i-1} Dx_{2i-1}) = [mu]", 1, [&](int) -> Outcome {
    MultiVec w(n, 1);
    for (int i = 1; i <= n; ++i) w += m.x(2 * i - 1) * MultiVec::basis(n, 2 * i - 1);
    return fail_if(delta_mu(m, basic_normal_form(m, w)) != basic_normal_form(m, m.mu()),
                   args(w));
  });
}

// ---------------------------------------------------------------- liealg

struct TestAlgebra {
  std::string label;
  LieAlgebra lie;
  std::vector<Vec> ideal;  // spanned by standard basis vectors
};

std::vector<TestAlgebra> test_algebras(Sampler& s, int random_count) {
  std::vector<TestAlgebra> out;
  out.push_back({"heis3", algebras::heisenberg3(), {{0, 0, 1}}});
  out.push_back({"sl2", algebras::sl2(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  for (int k = 0; k < random_count; ++k) {
    out.push_back({"solvable4 #" + std::to_string(k), s.solvable4(),
                   {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  }
  return out;
}

void liealg_suite(Runner& r) {
  Sampler& s = r.s();
  const auto algs = test_algebras(s, 20);
  const int per = std::max(1, r.opts().samples / static_cast<int>(algs.size()));

  r.check("ce_d o ce_d = 0", static_cast<int>(algs.size()) * per, [&](int k) -> Outcome {
    const auto& t = algs[static_cast<std::size_t>(k / per)];
    const LieModule mod = k % 2 == 0 ? LieModule::adjoint(t.lie) : LieModule::trivial(t.lie);
    const int deg = k % static_cast<int>(t.lie.dim());
    const Cochain w = s.cochain(t.lie.dim(), deg, mod.rank());
    return fail_if(!ce_d(mod, ce_d(mod, w)).is_zero(), t.label);
  });
  r.check("boundary o boundary = 0", static_cast<int>(algs.size()) * per, [&](int k) -> Outcome {
    const auto& t = algs[static_cast<std::size_t>(k / per)];
    const Chain u = s.chain(t.lie.dim(), 2 + k % (static_cast<int>(t.lie.dim()) - 1));
    return fail_if(!boundary(t.lie, boundary(t.lie, u)).is_zero(), t.label);
  });
  r.check("chain bracket on degree 1 is the Lie bracket", static_cast<int>(algs.size()) * per,
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k / per)];
            const Vec x = s.vec(t.lie.dim()), y = s.vec(t.lie.dim());
            return fail_if(schouten_chain(t.lie, Chain::vector(x), Chain::vector(y)) !=
                               Chain::vector(t.lie.bracket(x, y)),
                           t.label);
          });
  // Swapping the arguments of the defining formula gives
  // [v,u] = (-1)^{|u||v|} [u,v] directly.
  r.check("chain bracket graded symmetry", static_cast<int>(algs.size()) * per,
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k / per)];
            const Chain u = s.chain(t.lie.dim(), 1 + k % 2),
                        v = s.chain(t.lie.dim(), 1 + (k / 2) % 2);
            const int sg = parity_sign(u.degree() * v.degree());
            return fail_if(schouten_chain(t.lie, u, v) !=
                               Rational(sg) * schouten_chain(t.lie, v, u),
                           t.label);
          });
  r.check("closed chains: [u,v] = -delta(u^v)", static_cast<int>(algs.size()) * per,
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k / per)];
            const int dim = static_cast<int>(t.lie.dim());
            // Closed chains: boundaries of random chains, or cycles from the kernel.
            auto closed = [&](int deg) {
              const auto z = nullspace(boundary_matrix(t.lie, deg));
              Chain c(deg);
              const auto tuples = combinations(t.lie.dim(), deg);
              for (const auto& v : z) {
                const Rational w = s.coefficient();
                for (std::size_t i = 0; i < tuples.size(); ++i) c.add(tuples[i], w * v[i]);
              }
              return c;
            };
            const Chain u = closed(1 + k % std::max(1, dim - 1)), v = closed(1 + (k / 2) % 2);
            return fail_if(schouten_chain(t.lie, u, v) !=
                               Rational(-1) * boundary(t.lie, wedge(u, v)),
                           t.label);
          });
  r.check("i_v w = 0 for v in V implies i_v(dw) = 0", static_cast<int>(algs.size()) * per,
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k / per)];
            const Ideal v(t.lie, t.ideal);
            const H1Module h = h1_module(v);
            const LieModule& mod = h.parent_module;
            const auto& comp = v.complement();
            const int deg = static_cast<int>(comp.size()) == 0 ? 0 : k % (static_cast<int>(comp.size()) + 1);
            Cochain w(deg, mod.rank());
            for (const auto& sub : combinations(comp.size(), deg)) {
              IndexTuple idx;
              for (int a : sub) idx.push_back(static_cast<int>(comp[a]));
              w.add(idx, s.vec(mod.rank()));
            }
            const Cochain dw = ce_d(mod, w);
            for (const auto& b : v.basis()) {
              if (!interior(b, dw).is_zero()) return t.label;
            }
            return std::nullopt;
          });
  r.check("H_1 action maps boundaries to boundaries", static_cast<int>(algs.size()), [&](int k) -> Outcome {
    const auto& t = algs[static_cast<std::size_t>(k)];
    const Ideal v(t.lie, t.ideal);
    const LieAlgebra va = v.as_algebra();
    const HomologyResult h1 = homology(va, 1);
    if (va.dim() < 2) return std::nullopt;
    const Chain b = boundary(va, s.chain(va.dim(), 2));
    Vec bv(va.dim());
    for (const auto& [idx, c] : b.components()) bv[idx[0]] = c;
    for (std::size_t i = 0; i < t.lie.dim(); ++i) {
      const Vec moved = t.lie.bracket(unit_vector(t.lie.dim(), i), v.embed(bv));
      if (!h1.is_boundary(Chain::vector(*v.coordinates(moved)))) return t.label;
    }
    return std::nullopt;
  });
  r.check("cohomology: rref and Bareiss ranks agree", static_cast<int>(algs.size()), [&](int k) -> Outcome {
    const auto& t = algs[static_cast<std::size_t>(k)];
    for (const auto& mod : {LieModule::trivial(t.lie), LieModule::adjoint(t.lie)}) {
      for (int deg = 0; deg <= static_cast<int>(t.lie.dim()); ++deg) {
        if (cohomology(mod, deg).dimension != cohomology_dimension_bareiss(mod, deg)) {
          return t.label + " k=" + std::to_string(deg);
        }
      }
    }
    return std::nullopt;
  });
  r.check("characteristic class is projection independent", static_cast<int>(algs.size()),
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k)];
            const Ideal v(t.lie, t.ideal);
            const CharClass base = char_class(v);
            for (int trial = 0; trial < 20; ++trial) {
              const Projection p = random_projection(v, s.rng());
              if (char_class(v, p).coordinates != base.coordinates) return t.label;
            }
            return std::nullopt;
          });
  r.check("curvature vanishes iff ker(alpha) is a subalgebra", static_cast<int>(algs.size()),
          [&](int k) -> Outcome {
            const auto& t = algs[static_cast<std::size_t>(k)];
            const Ideal v(t.lie, t.ideal);
            for (int trial = 0; trial < 5; ++trial) {
              const Projection p = trial == 0 ? default_projection(v) : random_projection(v, s.rng());
              if (curvature(v, p).is_zero() != kernel_is_subalgebra(v, p)) return t.label;
            }
            return std::nullopt;
          });
}

// ---------------------------------------------------------------- prequant

void preq_suite(Runner& r) {
  const int n = r.n(), D = r.deg();
  Sampler& s = r.s();
  const ContactSpace m(n);
  const Rational hs[3] = {Rational(1), Rational(1, 2), Rational(2)};
  r.check("homomorphism defect vanishes", [&](int k) -> Outcome {
    const Poly f = r.rt(s.basic_poly(n, D)), g = r.rt(s.basic_poly(n, D));
    const Rational& h = hs[k % 3];
    for (auto norm : {Normalization::inverse_ih, Normalization::times_ih}) {
      if (!homomorphism_defect(m, f, g, h, norm).is_zero()) {
        return args(f, g) + " h=" + h.str() + " " + to_string(norm);
      }
    }
    return std::nullopt;
  });
  r.check("inverse-ih lift acts as f - (i/h) ham(f) on weight h", [&](int k) -> Outcome {
    const Poly f = s.basic_poly(n, D), p = s.basic_poly(n, D);
    const Rational& h = hs[k % 3];
    const WaveFn out = apply(lift(m, f, h), WaveFn(h, p));
    // ham(f) applied to p E_h: d/dx0 contributes ih p.
    const MultiVec X = ham(m, f);
    MultiVec spatial = X;
    spatial -= X.coefficient({0}) * MultiVec::basis(n, 0);
    const GaussRational i_over_h(Rational(0), Rational(1) / h);
    const Poly ham_p = apply_vector(spatial, p) +
                       GaussRational(Rational(0), h) * X.coefficient({0}) * p;
    const Poly expect = f * p - i_over_h * ham_p;
    return fail_if(out.p != expect, args(f, p));
  });
  r.check("volume identity X(pq)V = d(i_X(pq V))", [&](int) -> Outcome {
    const Poly f = s.basic_poly(n, D), p = s.basic_poly(n, 2), q = s.basic_poly(n, 2);
    const auto [lie_v, exact] = volume_identities(m, p * q, hat(m, f));
    return fail_if(!lie_v.is_zero() || !exact.is_zero(), args(f, p, q));
  });
  r.check("hat(f) vanishes on basic functions iff f is constant", [&](int k) -> Outcome {
    const Poly f = k % 4 == 0 ? Poly(n, GaussRational(s.coefficient())) : s.basic_poly(n, D);
    const MultiVec X = ham(m, f);
    bool kills = true;
    for (int i = 1; i <= 2 * n; ++i) {
      if (!apply_vector(X, m.x(i)).is_zero()) kills = false;
    }
    return fail_if(kills != d(Form::scalar(f)).is_zero(), args(f));
  });
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coeff", "exterior", "contact",
                                              "liealg", "preq"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (opts.max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");
  if (opts.samples < 1) throw std::invalid_argument("--samples must be positive");
  VerifyReport report;
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == suite;
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    todo = {suite};
  }
  for (const auto& name : todo) {
    Runner r(report, name, opts);
    if (name == "coeff") coeff_suite(r);
    if (name == "exterior") exterior_suite(r);
    if (name == "contact") contact_suite(r);
    if (name == "liealg") liealg_suite(r);
    if (name == "preq") preq_suite(r);
    r.finish();
  }
  return report;
}

}  // namespace lieco
