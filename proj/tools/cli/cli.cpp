#include "cli.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "euler_pencil/euler_pencil.hpp"
#include "report.hpp"

namespace ep::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& flag, const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": expected a number, got '" + s + "'");
}

long parse_long(const std::string& flag, const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": expected an integer, got '" + s + "'");
}

Rational parse_rational(const std::string& flag, const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational such as 3, -7/4 or 20.35, got '" + s + "'");
  }
}

/// "a", "a+bi", "a-bi", "bi" or "a,b".
Cx parse_cx(const std::string& flag, const std::string& s) {
  if (s.find(',') != std::string::npos) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError(flag + ": expected re,im, got '" + s + "'");
    return {parse_double(flag, parts[0]), parse_double(flag, parts[1])};
  }
  if (!s.empty() && s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        cut = k;
        break;
      }
    }
    if (cut == std::string::npos) {
      if (body.empty() || body == "+") return {0, 1};
      if (body == "-") return {0, -1};
      return {0, parse_double(flag, body)};
    }
    std::string im = body.substr(cut);
    double imv = (im == "+") ? 1.0 : (im == "-") ? -1.0 : parse_double(flag, im);
    return {parse_double(flag, body.substr(0, cut)), imv};
  }
  return {parse_double(flag, s), 0};
}

struct Options {
  std::string format = "table";
  std::string tol;
  unsigned threads = 1;

  std::string curve, model, pencil, tau, delta, Delta, E, c;
  std::string ap, p, branch = "plus", w, lambda, u, coeffs, eps1 = "1", eps2 = "-1", tau_sq;
  std::string K = "10", dispersion = "both", z = "2", s = "1", t = "0", n, X = "10000", X_list = "1000,10000";
  std::string eps = "0.3", max_p, label, tau_var = "0.5", criterion;
  bool canonical = false, zco = false;

  double tol_or(double d) const { return tol.empty() ? d : parse_double("--tol", tol); }
};

WeierstrassCurve curve_from(const Options& o, const std::string& fallback = "") {
  if (!o.model.empty()) {
    auto parts = split(o.model, ',');
    if (parts.size() != 5) throw UsageError("--model: expected a1,a2,a3,a4,a6");
    std::array<long, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) a[i] = parse_long("--model", parts[i]);
    try {
      return WeierstrassCurve::from_model(a);
    } catch (const Error& e) {
      throw UsageError(std::string("--model: ") + e.what());
    }
  }
  std::string label = o.curve.empty() ? fallback : o.curve;
  if (label.empty()) throw UsageError("--curve or --model is required");
  auto cat = Catalogue::load_default();
  const auto* entry = cat.find(label);
  if (!entry) throw UsageError("--curve: no catalogue entry '" + label + "'");
  if (!entry->has_model()) throw UsageError("--curve: catalogue entry '" + label + "' has no Weierstrass model");
  return entry->curve();
}

bool has_curve(const Options& o) { return !o.curve.empty() || !o.model.empty(); }

PencilParams pencil_params_from(const Options& o) {
  if (!o.pencil.empty()) {
    try {
      return PencilParams::parse(o.pencil);
    } catch (const std::exception&) {
      throw UsageError("--pencil: expected tau,delta,Delta, got '" + o.pencil + "'");
    }
  }
  if (!o.tau.empty() || !o.delta.empty() || !o.Delta.empty()) {
    if (o.tau.empty() || o.delta.empty() || o.Delta.empty())
      throw UsageError("--tau, --delta and --Delta must be given together");
    return {parse_rational("--tau", o.tau), parse_rational("--delta", o.delta), parse_rational("--Delta", o.Delta)};
  }
  return PencilParams::canonical();
}

Pencil2 pencil_from(const Options& o) {
  Rational E = o.E.empty() ? Rational(1) : parse_rational("--E", o.E);
  if (o.zco) return zco_pencil(E);
  return pencil_from_params(pencil_params_from(o), E);
}

long need_long(const std::string& flag, const std::string& v) {
  if (v.empty()) throw UsageError(flag + " is required");
  return parse_long(flag, v);
}

long prime_flag(const Options& o) {
  long p = need_long("--p", o.p);
  if (!is_prime(p)) throw UsageError("--p: " + o.p + " is not prime");
  return p;
}

Status pass_fail(bool ok) { return ok ? Status::pass : Status::fail; }

std::string lambda_poly_str(const LambdaPoly& lp) {
  std::string out;
  for (const auto& [k, c] : lp) {
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k != 0) out += "*lambda^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string model_str(const std::array<long, 5>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "]";
}

std::string poly_terms(const std::array<long, 3>& e) {
  return std::to_string(e[0]) + " + (" + std::to_string(e[1]) + ")T + " + std::to_string(e[2]) + "T^2";
}

// Command handlers.

Report cmd_ap(const Options& o) {
  Report r{"ap"};
  auto curve = curve_from(o);
  long max_p = o.max_p.empty() ? 50 : parse_long("--max-p", o.max_p);
  r.param("curve", curve.name()).param("max_p", max_p);
  auto t = ap_table(curve, max_p, o.threads);
  r.columns = {"p", "a_p", "good"};
  for (const auto& e : t.entries) r.rows.push_back({e.p, e.a_p, e.good});
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_good_primes(const Options& o) {
  Report r{"good-primes"};
  auto curve = curve_from(o);
  long max_p = o.max_p.empty() ? 100 : parse_long("--max-p", o.max_p);
  r.param("curve", curve.name()).param("max_p", max_p);
  auto g = good_primes(curve, max_p);
  r.field("count", static_cast<long>(g.size()));
  r.columns = {"p"};
  for (long p : g) r.rows.push_back({p});
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_hasse(const Options& o) {
  Report r{"hasse"};
  long a = need_long("--ap", o.ap), p = prime_flag(o);
  r.param("ap", a).param("p", p);
  bool ok = hasse_check(a, p);
  r.field("bound", 2 * std::sqrt(static_cast<double>(p))).field("holds", ok);
  r.status = pass_fail(ok);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_cornacchia(const Options& o) {
  Report r{"cornacchia"};
  long p = prime_flag(o);
  r.param("p", p);
  auto c = cornacchia_candidates(p);
  r.field("a", c.a).field("b", c.b);
  r.columns = {"candidate"};
  for (long v : c.candidates) r.rows.push_back({v});
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_quartic(const Options& o) {
  Report r{"quartic"};
  if (o.coeffs.empty()) throw UsageError("--coeffs is required");
  auto parts = split(o.coeffs, ',');
  if (parts.size() != 5) throw UsageError("--coeffs: expected a,b,c,d,e");
  std::vector<Rational> q;
  for (const auto& s : parts) q.push_back(parse_rational("--coeffs", s));
  r.param("coeffs", o.coeffs);
  auto red = quartic_to_weierstrass(q[0], q[1], q[2], q[3], q[4]);
  r.field("I", red.I.str()).field("J", red.J.str()).field("A", red.A.str()).field("B", red.B.str());
  auto [A, B] = minimise_short(red.A, red.B);
  r.field("A_min", A.str()).field("B_min", B.str()).field("j", red.j.str());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_legendre_j(const Options& o) {
  Report r{"legendre-j"};
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  Rational l = parse_rational("--lambda", o.lambda);
  r.param("lambda", l.str());
  r.field("j", legendre_j(l).str());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_curve_j(const Options& o) {
  Report r{"curve-j"};
  auto curve = curve_from(o);
  r.param("curve", curve.name());
  const auto& inv = curve.invariants();
  r.field("equation", curve.equation()).field("c4", inv.c4.str()).field("c6", inv.c6.str());
  r.field("disc", inv.disc.str()).field("j", inv.j.str());
  auto cm = curve.cm_discriminant_from_j();
  r.field("cm_discriminant", cm ? Value(*cm) : Value(std::string("none")));
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_pencil(const Options& o) {
  Report r{"pencil"};
  auto pen = pencil_from(o);
  r.param("pencil", pen.params().str());
  r.field("E1", pen.E1.str()).field("E2", pen.E2.str());
  r.field("a", pen.a.str()).field("d", pen.d.str()).field("b_sq", pen.b_sq.str()).field("b", pen.b().str());
  r.field("mu", pen.mu().str()).field("complex_coupling", pen.complex_coupling());
  auto A = pencil_matrix(pen);
  r.field("A11", A.e11.str()).field("A12", A.e12.str()).field("A21", A.e21.str()).field("A22", A.e22.str());
  if (!o.u.empty() && !o.lambda.empty()) {
    Cx u = parse_cx("--u", o.u), l = parse_cx("--lambda", o.lambda);
    auto td = resolvent_tr_det(pen, u, l);
    r.param("u", u).param("lambda", l);
    r.field("P", td.P).field("tr_R", td.tr).field("det_R", td.det);
  }
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_spectral_poly(const Options& o) {
  Report r{"spectral-poly"};
  auto pen = pencil_from(o);
  r.param("pencil", pen.params().str());
  auto P = spectral_poly(pen);
  r.field("P", P.str());
  r.columns = {"u_exp", "lambda_exp", "coeff"};
  for (auto it = P.terms().rbegin(); it != P.terms().rend(); ++it)
    r.rows.push_back({static_cast<long>(it->first.first), static_cast<long>(it->first.second), it->second.str()});
  r.tolerance = o.tol_or(0);
  return r;
}

EtaGram gram_from(const Options& o, Report& r) {
  auto pen = pencil_from(o);
  Rational c = o.c.empty() ? Rational(1) : parse_rational("--c", o.c);
  r.param("pencil", pen.params().str()).param("E", pen.E1.str()).param("c", c.str());
  return eta_gram(pen, c);
}

Report cmd_eta_gram(const Options& o) {
  Report r{"eta-gram"};
  auto g = gram_from(o, r);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.field("G" + std::to_string(i + 1) + std::to_string(j + 1),
              lambda_poly_str(g.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  r.field("diagonal", g.is_diagonal()).field("lambda_independent", g.is_lambda_independent());
  r.field("lambda_degree", static_cast<long>(g.lambda_degree()));
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_evenness(const Options& o) {
  Report r{"evenness"};
  auto g = gram_from(o, r);
  bool ok = lambda_evenness_check(g);
  r.field("even", ok);
  r.status = pass_fail(ok);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_pontryagin(const Options& o) {
  Report r{"pontryagin"};
  auto g = gram_from(o, r);
  r.field("G11_at_0", g.at_zero(0, 0).str()).field("G22_at_0", g.at_zero(1, 1).str());
  r.field("index", static_cast<long>(pontryagin_index(g)));
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_monomial_gram(const Options& o) {
  Report r{"monomial-gram"};
  int e1 = static_cast<int>(parse_long("--eps1", o.eps1)), e2 = static_cast<int>(parse_long("--eps2", o.eps2));
  r.param("eps1", static_cast<long>(e1)).param("eps2", static_cast<long>(e2));
  auto g = monomial_gram8(e1, e2);
  r.field("rank", static_cast<long>(g.rank)).field("charpoly", g.charpoly.str("x"));
  std::string ev;
  for (const auto& e : g.eigenvalues) ev += (ev.empty() ? "" : ",") + e.str();
  r.field("eigenvalues", ev);
  r.columns = {"basis", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"};
  const char* names[8] = {"e1/u", "e2/u", "e1", "e2", "e1*u", "e2*u", "e1*u^2", "e2*u^2"};
  for (std::size_t k = 0; k < 8; ++k) {
    std::vector<Value> row{std::string(names[k])};
    for (std::size_t l = 0; l < 8; ++l) row.emplace_back(g.gram[k][l].str());
    r.rows.push_back(row);
  }
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_j(const Options& o) {
  Report r{"j"};
  Rational d = parse_rational("--delta", o.delta.empty() ? throw UsageError("--delta is required") : o.delta);
  Rational D = parse_rational("--Delta", o.Delta.empty() ? throw UsageError("--Delta is required") : o.Delta);
  Rational t2;
  if (!o.tau_sq.empty()) {
    t2 = parse_rational("--tau-sq", o.tau_sq);
    r.param("tau_sq", t2.str());
  } else {
    Rational t = parse_rational("--tau", o.tau.empty() ? throw UsageError("--tau or --tau-sq is required") : o.tau);
    t2 = t * t;
    r.param("tau", t.str());
  }
  r.param("delta", d.str()).param("Delta", D.str());
  r.field("mu", ((t2 - d * d) / Rational(4) - D).str());
  r.field("j", j_formula_tau_sq(t2, d, D).str());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_j1728_q(const Options& o) {
  Report r{"j1728-q"};
  if (o.tau_sq.empty() || o.delta.empty() || o.Delta.empty())
    throw UsageError("--tau-sq, --delta and --Delta are required");
  Rational t2 = parse_rational("--tau-sq", o.tau_sq), d = parse_rational("--delta", o.delta),
           D = parse_rational("--Delta", o.Delta);
  r.param("tau_sq", t2.str()).param("delta", d.str()).param("Delta", D.str());
  Rational Q = j1728_locus_Q(t2, d, D);
  r.field("Q", Q.str()).field("on_component", Q.is_zero());
  try {
    r.field("j", j_formula_tau_sq(t2, d, D).str());
  } catch (const Error& e) {
    r.field("j", std::string(e.what()));
  }
  r.tolerance = o.tol_or(0);
  return r;
}

void basepoint_fields(Report& r, const Basepoint& b) {
  if (b.w_exact) r.field("w_exact", b.w_exact->str());
  r.field("w", b.w).field("u", b.u).field("lambda", b.lambda);
  r.field("sheet", std::string(sheet_name(b.sheet))).field("linear", b.linear);
}

Report cmd_basepoint(const Options& o) {
  Report r{"basepoint"};
  long a = need_long("--ap", o.ap), p = prime_flag(o);
  Branch br = parse_branch(o.branch);
  r.param("ap", a).param("p", p).param("branch", std::string(branch_name(br)));
  Basepoint b;
  if (o.canonical) {
    r.param("pencil", std::string("canonical"));
    b = canonical_basepoint(a, p, br);
    r.field("Delta_p", 4 * p * (p + 1) - a * a);
  } else {
    auto q = pencil_params_from(o);
    r.param("pencil", q.str());
    auto m = master_quadratic(q.tau, q.delta, q.Delta, a, p);
    r.field("A", m.A.str()).field("B", m.B.str()).field("C", m.C.str());
    b = basepoint_solve(q, a, p, br);
  }
  basepoint_fields(r, b);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_match(const Options& o) {
  Report r{"match"};
  double tol = o.tol_or(1e-10);
  r.tolerance = tol;
  Branch br = parse_branch(o.branch);
  auto q = pencil_params_from(o);
  bool canonical = q.tau == Rational(2) && q.delta.is_zero() && q.Delta == Rational(2);
  r.param("pencil", q.str()).param("branch", std::string(branch_name(br)));
  auto run = [&](long a, long p) {
    return canonical ? euler_match_verify_canonical(a, p, br, tol) : euler_match_verify(q, a, p, br, tol);
  };
  if (!o.p.empty()) {
    long p = prime_flag(o);
    long a = 0;
    if (!o.ap.empty()) {
      a = parse_long("--ap", o.ap);
    } else if (has_curve(o)) {
      a = ap_count(curve_from(o), p);
    } else {
      throw UsageError("--ap or --curve is required with --p");
    }
    r.param("ap", a).param("p", p);
    auto m = run(a, p);
    basepoint_fields(r, m.basepoint);
    r.field("tr", m.tr).field("det", m.det).field("P", m.P);
    if (canonical) {
      auto e = euler_match_exact_canonical(a, p, br);
      r.field("tr_exact", e.tr.str()).field("det_exact", e.det.str()).field("P_exact", e.P.str());
    }
    r.field("residual_tr", m.residual_tr).field("residual_det", m.residual_det).field("residual_P", m.residual_P);
    r.field("offshell_distance", m.offshell_distance).field("euler_factor", poly_terms(m.euler_poly));
    r.status = pass_fail(m.pass);
    return r;
  }
  auto curve = curve_from(o);
  long max_p = o.max_p.empty() ? 50 : parse_long("--max-p", o.max_p);
  r.param("curve", curve.name()).param("max_p", max_p);
  r.columns = {"p", "a_p", "u2", "u", "lambda", "tr", "det", "P", "residual_tr", "residual_det", "residual_P", "pass"};
  bool all = true;
  for (long p : good_primes(curve, max_p)) {
    long a = ap_count(curve, p);
    auto m = run(a, p);
    all = all && m.pass;
    r.rows.push_back({p, a, m.basepoint.w, m.basepoint.u, m.basepoint.lambda, m.tr, m.det, m.P, m.residual_tr,
                      m.residual_det, m.residual_P, m.pass});
  }
  r.status = pass_fail(all);
  return r;
}

Report cmd_reduce_check(const Options& o) {
  Report r{"reduce-check"};
  auto q = pencil_params_from(o);
  long a = need_long("--ap", o.ap), p = prime_flag(o);
  r.param("pencil", q.str()).param("ap", a).param("p", p);
  auto d = symbolic_reduction_detail(q, a, p);
  r.field("reduced", d.reduced.str()).field("quadratic", d.quadratic.str());
  r.field("quotient", d.quotient.str()).field("remainder", d.remainder.str()).field("holds", d.holds);
  r.status = pass_fail(d.holds);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_disc_identity(const Options& o) {
  Report r{"disc-identity"};
  r.tolerance = o.tol_or(0);
  if (has_curve(o)) {
    auto curve = curve_from(o);
    long max_p = o.max_p.empty() ? 1000 : parse_long("--max-p", o.max_p);
    r.param("curve", curve.name()).param("max_p", max_p);
    r.columns = {"p", "a_p", "Delta_p", "D_p", "sum", "holds"};
    bool all = true;
    for (const auto& e : ap_table(curve, max_p, o.threads).entries) {
      if (!e.good) continue;
      auto d = discriminant_identity(e.a_p, e.p);
      all = all && d.holds;
      r.rows.push_back({e.p, e.a_p, d.Delta_p, d.D_p, d.sum, d.holds});
    }
    r.status = pass_fail(all);
    return r;
  }
  long a = need_long("--ap", o.ap), p = prime_flag(o);
  r.param("ap", a).param("p", p);
  auto d = discriminant_identity(a, p);
  r.field("Delta_p", d.Delta_p).field("D_p", d.D_p).field("sum", d.sum).field("four_p_sq", 4 * p * p);
  r.field("holds", d.holds);
  r.status = pass_fail(d.holds);
  return r;
}

Report cmd_d_off(const Options& o) {
  Report r{"d-off"};
  long p = prime_flag(o);
  r.param("p", p);
  if (o.canonical) {
    long a = need_long("--ap", o.ap);
    Branch br = parse_branch(o.branch);
    r.param("ap", a).param("branch", std::string(branch_name(br)));
    auto w = *canonical_basepoint(a, p, br).w_exact;
    auto d = offshell_distance(w, p);
    r.field("w", w.str()).field("d_off_exact", d.str()).field("d_off", d.to_double());
  } else {
    if (o.w.empty()) throw UsageError("--w or --canonical is required");
    Rational w = parse_rational("--w", o.w);
    r.param("w", w.str());
    auto d = offshell_distance(w, p);
    r.field("d_off_exact", d.str()).field("d_off", d.to_double());
  }
  r.field("asymptote", 1.0 / (2.0 * static_cast<double>(p)));
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_cd_ratio(const Options& o) {
  Report r{"cd-ratio"};
  long a = need_long("--ap", o.ap), p = prime_flag(o);
  r.param("ap", a).param("p", p);
  auto c = cd_matching_ratio(a, p);
  r.field("R_A", c.R_A.str()).field("Delta_CD", c.Delta_CD.str()).field("Delta_CD_value", c.Delta_CD.to_double());
  r.field("negative", c.Delta_CD.sign() < 0);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_tco(const Options& o) {
  Report r{"tco"};
  r.tolerance = o.tol_or(0);
  if (!o.ap.empty() || !o.p.empty()) {
    long a = need_long("--ap", o.ap), p = prime_flag(o);
    r.param("ap", a).param("p", p);
    auto t = tco_basepoint(a, p);
    r.field("Y", t.Y.str()).field("lambda_sq", t.lambda_sq.str()).field("hasse_ok", t.hasse_ok);
    return r;
  }
  auto curve = curve_from(o, "48a1");
  long max_p = o.max_p.empty() ? 47 : parse_long("--max-p", o.max_p);
  r.param("curve", curve.name()).param("max_p", max_p);
  r.columns = {"p", "a_p", "Y", "lambda_sq", "hasse_ok"};
  for (long p : good_primes(curve, max_p)) {
    long a = ap_count(curve, p);
    auto t = tco_basepoint(a, p);
    r.rows.push_back({p, a, t.Y.str(), t.lambda_sq.str(), t.hasse_ok});
  }
  return r;
}

Report cmd_zco(const Options& o) {
  Report r{"zco"};
  Cx tv = parse_cx("--tau-var", o.tau_var);
  r.param("tau_var", tv);
  auto z = zco_basepoint();
  r.field("u", z.u).field("lambda", z.lambda).field("det", z.det).field("tr", z.tr);
  r.field("pinv_trace", z.pinv_trace).field("penrose_residual", z.penrose_residual);
  r.field("group_inverse_trace", z.group_inverse_trace);
  r.field("euler_factor", zco_euler_factor(tv)).field("one_minus_tau", 1.0 - tv);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_zco_c(const Options& o) {
  Report r{"zco-c"};
  double tol = o.tol_or(1e-12);
  r.tolerance = tol;
  Rational c = o.c.empty() ? Rational(1) : parse_rational("--c", o.c);
  Cx u = parse_cx("--u", o.u.empty() ? "1" : o.u);
  Cx l = o.lambda.empty() ? Cx(0) : parse_cx("--lambda", o.lambda);
  r.param("c", c.str()).param("u", u).param("lambda", l);
  auto A = zco_c_matrix(c, u, l);
  r.field("trace", A.trace()).field("two_u_sq", 2.0 * u * u);
  bool ok = zco_c_trace_invariance(c, u, tol);
  r.field("invariant", ok);
  r.status = pass_fail(ok);
  return r;
}

Report cmd_golden(const Options& o) {
  Report r{"golden"};
  auto g = golden_ratio_spectrum();
  r.field("plus", g.plus.str()).field("minus", g.minus.str()).field("charpoly", g.charpoly.str("x"));
  r.field("sum", (g.plus + g.minus).str()).field("product", (g.plus * g.minus).str());
  r.field("plus_value", g.plus.to_double()).field("minus_value", g.minus.to_double());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_obstruction(const Options& o) {
  Report r{"obstruction"};
  auto curve = curve_from(o);
  long K = parse_long("--K", o.K);
  r.param("curve", curve.name()).param("K", K);
  auto w = interpolation_obstruction(curve, static_cast<int>(K));
  r.field("found", w.found);
  if (w.found) {
    r.field("p", w.p).field("q", w.q).field("a_p", w.a_p).field("a_q", w.a_q);
    r.field("slope_p", w.slope_p).field("slope_q", w.slope_q);
  }
  r.status = pass_fail(w.found);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_universality(const Options& o) {
  Report r{"universality"};
  double tol = o.tol_or(1e-12);
  r.tolerance = tol;
  Cx z = parse_cx("--z", o.z);
  r.param("z", z).param("dispersion", o.dispersion);
  std::vector<Dispersion> ds;
  if (o.dispersion == "both") {
    ds = {Dispersion::parse("tanh"), Dispersion::parse("algebraic")};
  } else {
    try {
      ds = {Dispersion::parse(o.dispersion)};
    } catch (const Error&) {
      throw UsageError("--dispersion: expected tanh, algebraic or both");
    }
  }
  Cx closed = arcsine_closed_form(z);
  r.field("closed_form", closed);
  r.columns = {"dispersion", "value", "gap_to_closed_form", "estimated_error", "evaluations"};
  std::vector<Cx> values;
  for (const auto& d : ds) {
    auto q = universality_integral(d, z, tol);
    values.push_back(q.value);
    r.rows.push_back({d.name(), q.value, std::abs(q.value - closed), q.estimated_error, q.evaluations});
  }
  if (values.size() == 2) r.field("dispersion_gap", std::abs(values[0] - values[1]));
  return r;
}

Report cmd_arcsine(const Options& o) {
  Report r{"arcsine"};
  double t = parse_double("--t", o.t);
  r.param("t", t);
  if (std::abs(t) < 1.0) r.field("pdf", arcsine_pdf(t));
  r.field("cdf", arcsine_cdf(t)).field("mass", arcsine_pdf_mass());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_chi4_L(const Options& o) {
  Report r{"chi4-L"};
  double tol = o.tol_or(1e-13);
  r.tolerance = tol;
  double s = parse_double("--s", o.s);
  r.param("s", s);
  if (!o.n.empty()) {
    long n = parse_long("--n", o.n);
    r.param("n", n);
    r.field("chi4_n", static_cast<long>(chi4(n)));
  }
  auto L = dirichlet_L_chi4(s, tol);
  r.field("L", L.value).field("eta", L.eta).field("terms", L.terms).field("lower", L.lower).field("upper", L.upper);
  return r;
}

Report cmd_eta_feq(const Options& o) {
  Report r{"eta-feq"};
  double tol = o.tol_or(1e-6);
  r.tolerance = tol;
  double s = parse_double("--s", o.s == "1" ? "0.5" : o.s);
  r.param("s", s);
  double res = eta_functional_equation_residual(s);
  r.field("residual", res).field("completed_residual", eta_functional_equation_residual_completed(s));
  r.status = pass_fail(res <= tol);
  return r;
}

PrimeSeries series_from(const Options& o, Report& r) {
  auto curve = curve_from(o);
  long X = parse_long("--X", o.X);
  r.param("curve", curve.name()).param("X", X);
  return delta_p_series(curve, X, o.threads);
}

Report cmd_delta_series(const Options& o) {
  Report r{"delta-series"};
  auto s = series_from(o, r);
  r.field("rows", static_cast<long>(s.rows.size())).field("prime_count", s.prime_count);
  r.field("epsilon_bound_holds", s.all_epsilon_ok());
  r.columns = {"p", "a_p", "w_plus", "u", "lambda", "delta", "class"};
  for (const auto& row : s.rows)
    r.rows.push_back({row.p, row.a_p, row.w_plus, row.u, row.lambda, row.delta, std::string(prime_class_name(row.cls))});
  r.status = pass_fail(s.all_epsilon_ok());
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_sato_tate(const Options& o) {
  Report r{"sato-tate"};
  auto s = series_from(o, r);
  auto st = sato_tate_report(s);
  r.field("good", st.good).field("inert", st.inert).field("split", st.split);
  r.field("inert_fraction", st.inert_fraction).field("split_ks_distance", st.split_ks_distance);
  if (st.warning) r.notes.push_back(*st.warning);
  r.columns = {"lo", "hi", "count"};
  for (const auto& b : st.histogram) r.rows.push_back({b.lo, b.hi, b.count});
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_bulk(const Options& o) {
  Report r{"bulk"};
  auto s = series_from(o, r);
  double eps = parse_double("--eps", o.eps);
  if (!(eps > 0 && eps < 1)) throw UsageError("--eps: must lie in (0, 1)");
  r.param("eps", eps);
  auto b = bulk_count(s, eps);
  r.field("N_delta", b.N_delta).field("prime_count", s.prime_count).field("ratio", b.ratio).field("expected", b.expected);
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_accumulate(const Options& o) {
  Report r{"accumulate"};
  auto curve = curve_from(o);
  std::vector<long> xs;
  for (const auto& s : split(o.X_list, ',')) xs.push_back(parse_long("--X-list", s));
  if (xs.empty()) throw UsageError("--X-list: at least one cutoff is required");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1]) throw UsageError("--X-list: cutoffs must ascend");
  r.param("curve", curve.name()).param("X_list", o.X_list);
  auto pts = accumulation_means(curve, xs, o.threads);
  r.columns = {"X", "u_bar", "lambda_bar", "dev"};
  for (const auto& p : pts) r.rows.push_back({p.X, p.u_bar, p.lambda_bar, p.dev});
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_catalogue(const Options& o) {
  Report r{"catalogue"};
  auto cat = Catalogue::load_default();
  r.param("path", Catalogue::default_path());
  auto row_of = [](const CatalogueEntry& e) -> std::vector<Value> {
    std::string j = e.j_infinite ? "inf" : (e.j ? e.j->str() : "");
    return {e.label, e.model ? model_str(*e.model) : std::string(""), j,
            e.cm_discriminant ? Value(*e.cm_discriminant) : Value(std::string("")),
            e.pencil_params ? e.pencil_params->str() : std::string(""), e.source};
  };
  std::vector<std::string> cols{"label", "model", "j", "cm_discriminant", "pencil", "source"};
  if (!o.label.empty()) {
    const auto* e = cat.find(o.label);
    if (!e) throw UsageError("--label: no catalogue entry '" + o.label + "'");
    auto row = row_of(*e);
    for (std::size_t i = 0; i < cols.size(); ++i) r.field(cols[i], row[i]);
  } else {
    r.columns = cols;
    for (const auto& e : cat.entries()) r.rows.push_back(row_of(e));
  }
  r.tolerance = o.tol_or(0);
  return r;
}

Report cmd_verify_all(const Options& o) {
  Report r{"verify-all"};
  std::vector<verify::CriterionResult> results;
  if (!o.criterion.empty()) {
    long id = parse_long("--criterion", o.criterion);
    if (id < 1 || id > verify::criterion_count) throw UsageError("--criterion: expected 1.." + std::to_string(verify::criterion_count));
    r.param("criterion", id);
    results.push_back(verify::run_criterion(static_cast<int>(id), o.threads));
  } else {
    results = verify::run_acceptance(o.threads);
  }
  r.columns = {"id", "criterion", "status", "detail"};
  long passed = 0;
  for (const auto& c : results) {
    if (c.pass) ++passed;
    r.rows.push_back({static_cast<long>(c.id), c.name, std::string(c.pass ? "PASS" : "FAIL"), c.detail});
  }
  r.field("passed", passed).field("total", static_cast<long>(results.size()));
  r.status = pass_fail(passed == static_cast<long>(results.size()));
  r.tolerance = o.tol_or(0);
  return r;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> flags;
  Report (*run)(const Options&);
};

const std::vector<Command>& commands() {
  static const std::vector<Command> cmds{
      {"ap", "Frobenius traces by point counting", {"curve", "max-p"}, cmd_ap},
      {"good-primes", "primes of good reduction", {"curve", "max-p"}, cmd_good_primes},
      {"hasse", "Hasse bound check", {"ap", "p"}, cmd_hasse},
      {"cornacchia", "split-prime a_p candidates from p = a^2 + b^2", {"p"}, cmd_cornacchia},
      {"quartic", "quartic to Weierstrass reduction", {"coeffs"}, cmd_quartic},
      {"legendre-j", "j of the Legendre curve", {"lambda"}, cmd_legendre_j},
      {"curve-j", "Weierstrass invariants and j", {"curve"}, cmd_curve_j},
      {"pencil", "pencil parameters and matrix", {"pencil", "u", "lambda"}, cmd_pencil},
      {"spectral-poly", "spectral polynomial", {"pencil"}, cmd_spectral_poly},
      {"eta-gram", "eta-Gram matrix", {"pencil", "c"}, cmd_eta_gram},
      {"evenness", "lambda-evenness of the eta-Gram", {"pencil", "c"}, cmd_evenness},
      {"pontryagin", "Pontryagin index of the eta-Gram", {"pencil", "c"}, cmd_pontryagin},
      {"monomial-gram", "8x8 monomial Gram and reduced spectrum", {"eps"}, cmd_monomial_gram},
      {"j", "j-invariant of the pencil moduli", {"tdd", "tau-sq"}, cmd_j},
      {"j1728-q", "third j = 1728 component polynomial", {"tdd", "tau-sq"}, cmd_j1728_q},
      {"basepoint", "basepoint from the master quadratic", {"pencil", "ap", "p", "branch", "canonical"}, cmd_basepoint},
      {"match", "Euler factor matching", {"pencil", "ap", "p", "branch", "curve", "max-p"}, cmd_match},
      {"reduce-check", "symbolic reduction to the master quadratic", {"pencil", "ap", "p"}, cmd_reduce_check},
      {"disc-identity", "Delta_p + D_p = 4p^2", {"ap", "p", "curve", "max-p"}, cmd_disc_identity},
      {"d-off", "off-shell distance", {"w", "p", "ap", "branch", "canonical"}, cmd_d_off},
      {"cd-ratio", "CD matching ratio and discriminant", {"ap", "p"}, cmd_cd_ratio},
      {"tco", "TCO basepoint data", {"ap", "p", "curve", "max-p"}, cmd_tco},
      {"zco", "ZCO basepoint and Euler factor", {"tau-var"}, cmd_zco},
      {"zco-c", "ZCO_c trace invariance", {"c", "u", "lambda"}, cmd_zco_c},
      {"golden", "golden-ratio spectrum", {}, cmd_golden},
      {"obstruction", "interpolation obstruction witness", {"curve", "K"}, cmd_obstruction},
      {"universality", "dispersion-universal arcsine integral", {"z", "dispersion"}, cmd_universality},
      {"arcsine", "arcsine density and distribution", {"t"}, cmd_arcsine},
      {"chi4-L", "L(s, chi_-4) and eta", {"s", "n"}, cmd_chi4_L},
      {"eta-feq", "eta functional-equation residual", {"s"}, cmd_eta_feq},
      {"delta-series", "basepoint observables over good primes", {"curve", "X"}, cmd_delta_series},
      {"sato-tate", "inert fraction and split KS distance", {"curve", "X"}, cmd_sato_tate},
      {"bulk", "bulk count |delta_p| < eps", {"curve", "X", "eps"}, cmd_bulk},
      {"accumulate", "log-weighted basepoint means", {"curve", "X-list"}, cmd_accumulate},
      {"catalogue", "list the curve catalogue", {"label"}, cmd_catalogue},
      {"verify-all", "run every acceptance criterion", {"criterion"}, cmd_verify_all},
  };
  return cmds;
}

void add_flags(CLI::App* sub, const std::vector<std::string>& flags, Options& o) {
  sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--tol", o.tol, "tolerance");
  sub->add_option("--threads", o.threads, "worker threads for prime sweeps")->check(CLI::Range(1u, 256u));
  for (const auto& f : flags) {
    if (f == "curve") {
      sub->add_option("--curve", o.curve, "catalogue label");
      sub->add_option("--model", o.model, "a1,a2,a3,a4,a6");
    } else if (f == "pencil") {
      sub->add_option("--pencil", o.pencil, "tau,delta,Delta");
      sub->add_option("--tau", o.tau);
      sub->add_option("--delta", o.delta);
      sub->add_option("--Delta", o.Delta);
      sub->add_option("--E", o.E, "background scale E in diag(E, -E)");
      sub->add_flag("--zco", o.zco, "use the ZCO pencil a = 1, b = 1, d = -1");
    } else if (f == "tdd") {
      sub->add_option("--tau", o.tau);
      sub->add_option("--delta", o.delta);
      sub->add_option("--Delta", o.Delta);
    } else if (f == "eps") {
      sub->add_option("--eps1", o.eps1);
      sub->add_option("--eps2", o.eps2);
    } else if (f == "canonical") {
      sub->add_flag("--canonical", o.canonical, "use the closed-form canonical basepoint");
    } else {
      std::string* target = nullptr;
      static const std::map<std::string, std::string Options::*> fields{
          {"max-p", &Options::max_p}, {"ap", &Options::ap},         {"p", &Options::p},
          {"branch", &Options::branch}, {"w", &Options::w},         {"u", &Options::u},
          {"lambda", &Options::lambda}, {"coeffs", &Options::coeffs}, {"tau-sq", &Options::tau_sq},
          {"c", &Options::c},           {"K", &Options::K},         {"z", &Options::z},
          {"dispersion", &Options::dispersion}, {"s", &Options::s}, {"t", &Options::t},
          {"n", &Options::n},           {"X", &Options::X},         {"X-list", &Options::X_list},
          {"label", &Options::label},   {"tau-var", &Options::tau_var}, {"criterion", &Options::criterion},
      };
      target = &(o.*(fields.at(f)));
      sub->add_option("--" + f, *target);
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler pencil toolkit", "euler-pencil"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_flags(sub, c.flags, o);
    subs.emplace_back(sub, &c);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    try {
      Format f = parse_format(o.format);
      Report r = cmd->run(o);
      render(r, f, out);
      return r.status == Status::fail ? 1 : 0;
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}

}  // namespace ep::cli
