#include "kdvspec/cli.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "kdvspec/error.hpp"
#include "kdvspec/param_solve.hpp"
#include "kdvspec/parse.hpp"
#include "kdvspec/presets.hpp"
#include "kdvspec/text.hpp"

namespace kdvspec::cli {

using nlohmann::json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"hierarchy", "level",      "curve",  "factor",
                                          "parametrize", "solve", "specialize", "verify"};
  return c;
}

std::string ResultDoc::json(bool with_timings) const {
  nlohmann::json d;
  d["input"] = input;
  d["stages"] = stages;
  d["checks"] = checks;
  d["warnings"] = warnings;
  if (!error.empty()) d["error"] = error;
  d["exit_code"] = exit_code;
  if (with_timings) d["timings"] = timings;
  return d.dump(2) + "\n";
}

namespace {

void text_value(std::ostringstream& os, const std::string& key, const nlohmann::json& v, int depth) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) text_value(os, it.key(), it.value(), depth + 1);
  } else if (v.is_array() && !v.empty() && !v.front().is_primitive()) {
    os << pad << key << ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) text_value(os, "[" + std::to_string(i) + "]", v[i], depth + 1);
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (const auto& e : v) os << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
  } else {
    os << pad << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string ResultDoc::text() const {
  std::ostringstream os;
  static const char* order[] = {"potential", "hierarchy", "level", "curve", "factor", "parametrize", "solve", "specialize"};
  for (const char* k : order)
    if (stages.contains(k)) text_value(os, k, stages[k], 0);
  for (auto it = checks.begin(); it != checks.end(); ++it)
    os << (it.value().get<bool>() ? "ok    " : "FAIL  ") << it.key() << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  if (!error.empty()) os << "error: " << error << "\n";
  return os.str();
}

namespace {

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownSymbol:
    case ErrorCode::InvalidArgument:
    case ErrorCode::BasisMismatch:
    case ErrorCode::NotOnCurve:
    case ErrorCode::NonConstantPotential:
      return ParseFailed;
    default:
      return Unsupported;
  }
}

// Raised by the pipeline after the error has been recorded.
struct Halt {};

json strs(const std::vector<Elem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

json strs(const std::vector<RatFun>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

template <class C>
json op_coeffs(const DiffOp<C>& op) {
  json a = json::array();
  for (const auto& c : op.coeffs()) a.push_back(c.str());
  return a;
}

RatFun parse_constant(const std::string& name, const std::string& text, bool allow_invariants) {
  RatFun r;
  try {
    r = parse_ratfun(text);
  } catch (const Error& e) {
    raise(e.code(), "--" + name + ": " + e.what());
  }
  for (Var v : r.variables()) {
    bool ok = allow_invariants && (v == sym::g2() || v == sym::g3());
    if (!ok) raise(ErrorCode::InvalidArgument, "--" + name + " must be a constant, found " + sym::name(v));
  }
  return r;
}

Rat parse_number(const std::string& name, const std::string& text) {
  RatFun r = parse_constant(name, text, false);
  return r.constant_value();
}

const GoldenRow* find_row(Family f, unsigned s) {
  for (const auto& r : golden_rows())
    if (r.family == f && r.s == s) return &r;
  return nullptr;
}

class Pipeline {
public:
  Pipeline(const JobSpec& job, ResultDoc& doc) : job_(job), doc_(doc) {}

  void run();

private:
  template <class F>
  auto stage(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    current_ = name;
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      doc_.timings[name] = seconds_since(t0);
    } else {
      auto r = f();
      doc_.timings[name] = seconds_since(t0);
      return r;
    }
  }

  static double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  void check(const std::string& name, bool ok) { doc_.checks[name] = ok; }
  void warn(const std::string& w) {
    for (const auto& o : doc_.warnings)
      if (o == w) return;
    doc_.warnings.push_back(w);
  }

  void setup();
  void do_hierarchy(unsigned n);
  void do_level();
  void do_curve();
  void do_factor();
  void do_parametrize();
  void do_solve();
  void do_specialize();
  void do_verify();
  void golden_checks();
  void golden_warnings();
  SpecializedFactor specialize_point(const std::string& prefix, const RatFun& l0, const RatFun& m0, const Potential& pot,
                        const LevelResult& level, const CurvePoly& curve, const Factorization& fac);

  const JobSpec& job_;
  ResultDoc& doc_;
  std::string current_;

  std::optional<Family> family_;
  bool symbolic_preset_ = false;
  std::optional<Rat> g2_, g3_;
  std::optional<Potential> pot_;
  std::optional<LevelResult> level_;
  std::optional<CurvePoly> curve_;
  std::optional<Factorization> fac_;
  std::optional<Parametrization> par_;
  std::optional<Elem> phit_;
  std::optional<HyperexpSolution> sol_;

  friend ResultDoc kdvspec::cli::run_command(const JobSpec&);
};

void Pipeline::setup() {
  current_ = "input";
  json& in = doc_.input;
  in["command"] = job_.command;
  in["sign"] = job_.sign;
  in["s_max"] = job_.s_max;
  if (job_.s) in["s"] = *job_.s;
  if (!job_.family.empty()) in["family"] = job_.family;
  if (!job_.potential.empty()) in["potential"] = job_.potential;
  if (!job_.tower.empty()) in["tower"] = job_.tower;
  auto echo = [&](const char* k, const std::optional<std::string>& v) {
    if (v) in["assignments"][k] = *v;
  };
  echo("g2", job_.g2);
  echo("g3", job_.g3);
  echo("lambda0", job_.lambda0);
  echo("mu0", job_.mu0);
  echo("tau0", job_.tau0);

  if (std::find(commands().begin(), commands().end(), job_.command) == commands().end())
    raise(ErrorCode::InvalidArgument, "unknown command '" + job_.command + "'");
  if (job_.sign != 1 && job_.sign != -1) raise(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  if (job_.format != "text" && job_.format != "json")
    raise(ErrorCode::InvalidArgument, "format must be text or json");
  if (job_.lambda0.has_value() != job_.mu0.has_value())
    raise(ErrorCode::InvalidArgument, "--lambda0 and --mu0 go together");
  if (job_.tau0 && job_.lambda0) raise(ErrorCode::InvalidArgument, "--tau0 excludes --lambda0/--mu0");
  if ((job_.lambda0 || job_.tau0) && job_.command != "specialize")
    raise(ErrorCode::InvalidArgument, "point assignments only apply to specialize");
  if (job_.g2.has_value() != job_.g3.has_value()) raise(ErrorCode::InvalidArgument, "--g2 and --g3 go together");
  if (job_.g2) {
    g2_ = parse_number("g2", *job_.g2);
    g3_ = parse_number("g3", *job_.g3);
  }

  if (job_.command == "hierarchy") {
    if (!job_.potential.empty() || !job_.family.empty())
      raise(ErrorCode::InvalidArgument, "hierarchy takes no potential");
    return;
  }

  const bool custom = job_.family.empty() || job_.family == "custom";
  if (custom) {
    if (job_.potential.empty()) raise(ErrorCode::InvalidArgument, "need --family with --s, or --potential");
    if (job_.s) raise(ErrorCode::InvalidArgument, "--s selects a family member; the level of --potential is computed");
    const std::string tname = job_.tower.empty() ? "rational" : job_.tower;
    FieldContext::Ptr ctx = tower_by_name(tname);
    if (g2_) {
      if (ctx->kind() != TowerKind::Weierstrass)
        raise(ErrorCode::InvalidArgument, "--g2/--g3 need the weierstrass tower");
      ctx = FieldContext::weierstrass(*g2_, *g3_);
    }
    current_ = "parse";
    Elem u = parse_potential(job_.potential, ctx);
    pot_ = make_potential(u, "custom");
  } else {
    family_ = parse_family(job_.family);
    if (!family_) raise(ErrorCode::InvalidArgument, "unknown family '" + job_.family + "'");
    if (!job_.potential.empty() || !job_.tower.empty())
      raise(ErrorCode::InvalidArgument, "a family preset fixes the potential and tower");
    if (!job_.s || *job_.s == 0) raise(ErrorCode::InvalidArgument, "--family needs --s >= 1");
    if (g2_ && *family_ != Family::Elliptic) raise(ErrorCode::InvalidArgument, "--g2/--g3 only apply to elliptic");
    if (*family_ == Family::Elliptic && !g2_ && job_.command == "specialize") {
      auto [a, b] = specialization_invariants();
      g2_ = a;
      g3_ = b;
      warn("elliptic specialization uses g2 = " + a.get_str() + ", g3 = " + b.get_str());
    }
    if (g2_)
      pot_ = elliptic_potential(*job_.s, *g2_, *g3_);
    else
      pot_ = family_potential(*family_, *job_.s);
    symbolic_preset_ = !g2_;
  }
  doc_.stages["potential"] = {{"u", pot_->u.str()}, {"tower", pot_->u.context()->name()}, {"label", pot_->label}};
}

void Pipeline::do_hierarchy(unsigned n) {
  stage("hierarchy", [&] {
    Hierarchy& h = Hierarchy::shared();
    json kdv = json::array(), v = json::array(), p = json::array();
    for (unsigned i = 0; i <= n; ++i) {
      kdv.push_back(h.kdv(i).str());
      v.push_back(h.v(i).str());
      p.push_back(op_coeffs(h.p_odd(i)));
    }
    doc_.stages["hierarchy"] = {
        {"n", n}, {"kdv", kdv}, {"v", v}, {"P", p}, {"KdV", h.kdv_ext(n).str()}, {"P_hat", op_coeffs(h.p_hat(n))}};
    for (unsigned i = 0; i <= n; ++i) {
      check("hierarchy.lax_" + std::to_string(i), h.lax_check(i));
      check("hierarchy.lax_ext_" + std::to_string(i), h.lax_check_ext(i));
      check("hierarchy.v_derivative_" + std::to_string(i), dp_derive(h.v(i + 1)).scaled(Rat(2)) == h.kdv(i));
    }
  });
}

void Pipeline::do_level() {
  if (level_) return;
  stage("level", [&] {
    level_ = kdv_level(*pot_, job_.s_max);
    doc_.stages["level"] = {{"s", level_->s}, {"cbar", strs(level_->cbar)}, {"k", strs(level_->k)}};
    check("level.kdv_vanishes", kdv_ext_value(*pot_, level_->cbar).is_zero());
    check("level.centralizer", centralizer_check(*pot_, *level_));
    FlagSpaces fs = flag_spaces(*pot_, *level_, level_->s + 1);
    json basis = json::array();
    for (const auto& b : fs.basis) basis.push_back(strs(b));
    doc_.stages["level"]["flag"] = {{"n", fs.n}, {"basis", basis}, {"representative", strs(fs.representative)}};
    check("level.flag_spaces", fs.verified);
    if (family_ && job_.s) check("level.matches_family", level_->s == *job_.s);
  });
}

void Pipeline::do_curve() {
  if (curve_) return;
  do_level();
  stage("curve", [&] {
    curve_ = spectral_curve(*pot_, *level_);
    MPoly mu = MPoly::var(sym::mu(), 2);
    doc_.stages["curve"] = {{"f", curve_->f.str()}, {"R", curve_->R.str()}, {"genus", hyperelliptic_genus(*curve_)}};
    // spectral_curve raises unless every coefficient is constant
    check("curve.constant_coefficients", true);
    check("curve.shape", curve_->f == -mu - curve_->R && curve_->R.degree(sym::lambda()) == 2 * curve_->s + 1);
  });
}

void Pipeline::do_factor() {
  if (fac_) return;
  do_curve();
  stage("factor", [&] {
    fac_ = factor_on_curve(*pot_, *level_, *curve_);
    doc_.stages["factor"] = {{"phi_plus", fac_->phi_plus.str()},
                             {"phi_minus", fac_->phi_minus.str()},
                             {"alpha", fac_->alpha.str()},
                             {"phi2", fac_->phi2.str()}};
    check("factor.riccati_plus", riccati_check(fac_->phi_plus, *pot_, *curve_));
    check("factor.riccati_minus", riccati_check(fac_->phi_minus, *pot_, *curve_));
    IdentityReport id = solution_identities(*fac_, *curve_, *pot_);
    check("factor.difference_identity", id.difference);
    check("factor.fundamental_identity", id.fundamental);
  });
}

void Pipeline::do_parametrize() {
  if (par_) return;
  do_factor();
  stage("parametrize", [&] {
    par_ = parametrize_curve(*curve_, job_.sign);
    phit_ = substitute_param(fac_->phi_plus, *par_);
    check("parametrize.identity", par_->verified && parametrization_identity(*curve_, *par_));
    doc_.stages["parametrize"] = {{"kind", std::string(param_kind_name(par_->kind))},
                                  {"chi1", par_->chi1.str()},
                                  {"chi2", par_->chi2.str()},
                                  {"sign", par_->sign},
                                  {"phit", phit_->str()},
                                  {"tower", phit_->context()->name()}};
    check("parametrize.riccati", riccati_check_param(*phit_, *pot_, *par_));
    check("parametrize.factorization", param_factorization_check(*phit_, *pot_, *par_));
    check("parametrize.wronskian", wronskian_check(*fac_, *par_));
  });
}

json solution_json(const HyperexpSolution& sol) {
  json factors = json::array();
  for (const auto& f : sol.rational_factor) factors.push_back({{"p", f.p.str()}, {"n", f.n.str()}});
  json j = {{"classification", std::string(exponent_class_name(sol.classification))},
            {"generator", sym::name(sol.t)},
            {"exp_rate", sol.exp_rate.str()},
            {"t_exponent", sol.t_exponent.str()},
            {"factors", factors},
            {"residual_exponent", sol.residual_exponent.str()},
            {"upsilon_display", sol.str()}};
  if (sol.classification == ExponentClass::Integer) j["rational_part"] = sol.rational_part().str();
  return j;
}

void Pipeline::do_solve() {
  if (sol_) return;
  do_parametrize();
  stage("solve", [&] {
    sol_ = hyperexponential_solve(*phit_);
    doc_.stages["solve"] = solution_json(*sol_);
    check("solve.verified", verify_solution(*sol_, *phit_));
  });
}

SpecializedFactor Pipeline::specialize_point(const std::string& prefix, const RatFun& l0, const RatFun& m0, const Potential& pot,
                                const LevelResult& level, const CurvePoly& curve, const Factorization& fac) {
  SpecializedFactor sf = specialize_at_point(pot, level, curve, fac, l0, m0);
  json j = {{"lambda0", sf.lambda0.str()}, {"mu0", sf.mu0.str()}, {"phi0", sf.phi0.str()}, {"in_Z", sf.in_Z}};
  check(prefix + ".factorization", sf.factorization_verified);
  check(prefix + ".gcd_order_one", sf.gcd_order_one);
  if (prefix == "specialize") {
    doc_.stages["specialize"] = j;
  } else {
    doc_.stages["specialize"]["points"].push_back(j);
  }
  return sf;
}

void Pipeline::do_specialize() {
  do_factor();
  stage("specialize", [&] {
    if (job_.tau0) {
      do_parametrize();
      current_ = "specialize";
      if (par_->kind != ParamKind::Rational)
        raise(ErrorCode::UnsupportedShape, "--tau0 needs a rational parametrization");
      RatFun t0 = parse_constant("tau0", *job_.tau0, false);
      RatFun l0 = par_->chi1.substitute(sym::tau(), t0);
      RatFun m0 = par_->chi2.substitute(sym::tau(), t0);
      SpecializedFactor sf = specialize_point("specialize", l0, m0, *pot_, *level_, *curve_, *fac_);
      Elem phit0 = phit_->substitute(sym::tau(), t0);
      check("specialize.phit_matches_phi0", param_lift(sf.phi0, *par_, phit0) == phit0);
      try {
        HyperexpSolution sol = hyperexponential_solve(*phit_);
        HyperexpSolution psi = specialize_solution(sol, sym::tau(), t0);
        doc_.stages["specialize"]["psi"] = solution_json(psi);
        check("specialize.solution_verified", verify_solution(psi, phit0));
      } catch (const Error& e) {
        warn(std::string("no specialized solution: ") + e.what());
      }
      return;
    }
    if (!job_.lambda0) raise(ErrorCode::InvalidArgument, "specialize needs --lambda0/--mu0 or --tau0");
    const bool inv = pot_->u.context()->kind() == TowerKind::Weierstrass;
    RatFun l0 = parse_constant("lambda0", *job_.lambda0, inv);
    RatFun m0 = parse_constant("mu0", *job_.mu0, inv);
    specialize_point("specialize", l0, m0, *pot_, *level_, *curve_, *fac_);
  });
}

void Pipeline::golden_checks() {
  if (!family_ || !symbolic_preset_) return;
  const GoldenRow* row = find_row(*family_, *job_.s);
  if (!row) {
    warn("no golden row for this family member");
    return;
  }
  current_ = "golden";
  bool cb = level_->cbar.size() == row->cbar.size();
  for (std::size_t i = 0; cb && i < row->cbar.size(); ++i) cb = level_->cbar[i] == parse_ratfun(row->cbar[i]);
  check("golden.cbar", cb);
  if (!row->cbar_printed.empty()) {
    std::vector<RatFun> printed;
    for (const auto& c : row->cbar_printed) printed.push_back(parse_ratfun(c));
    check("golden.cbar_printed_rejected", !kdv_ext_value(*pot_, printed).is_zero());
    warn("printed constants differ from the computed ones: " + row->note);
  }
  check("golden.curve", curve_->f == parse_poly(row->curve));
  if (!row->curve_printed.empty()) {
    check("golden.curve_printed_rejected", curve_->f != parse_poly(row->curve_printed));
    warn("printed curve differs from the computed one: " + row->note);
  }
  Elem phi = parse_element(row->phi(), curve_->field);
  check("golden.phi", phi == fac_->phi_plus && riccati_check(phi, *pot_, *curve_));
  if (!row->phi_corrected.empty()) {
    check("golden.phi_printed_rejected",
          !riccati_check(parse_element(row->phi_printed, curve_->field), *pot_, *curve_));
    warn("printed factor fails the Riccati equation: " + row->note);
  }
  // the tables are written on the default sheet
  if (row->chi1.empty() || !par_ || job_.sign != -1) return;
  check("golden.chi", par_->chi1 == parse_element(row->chi1, par_->field).value() &&
                          par_->chi2 == parse_element(row->chi2, par_->field).value());
  Elem pt = parse_element(row->phit(), phit_->context());
  check("golden.phit", pt == *phit_ && riccati_check_param(pt, *pot_, *par_));
  if (!row->phit_corrected.empty()) {
    check("golden.phit_printed_rejected",
          !riccati_check_param(parse_element(row->phit_printed, phit_->context()), *pot_, *par_));
    warn("printed one-parameter factor fails the Riccati equation: " + row->note);
  }
  if (row->upsilon.empty() || !sol_) return;
  RatFun ups = parse_element(row->upsilon, phit_->context()).value();
  check("golden.upsilon", sol_->classification == ExponentClass::Integer &&
                              sol_->rational_part() == normalized_in(ups, sol_->t));
  check("golden.upsilon_rate", sol_->exp_rate == parse_ratfun(row->upsilon_rate));
}

// Discrepancy annotations for the stages a single command computed.
void Pipeline::golden_warnings() {
  if (!family_ || !symbolic_preset_) return;
  const GoldenRow* row = find_row(*family_, *job_.s);
  if (!row) return;
  if (level_ && !row->cbar_printed.empty()) warn("printed constants differ from the computed ones: " + row->note);
  if (curve_ && !row->curve_printed.empty()) warn("printed curve differs from the computed one: " + row->note);
  if (fac_ && !row->phi_corrected.empty()) warn("printed factor fails the Riccati equation: " + row->note);
  if (par_ && !row->phit_corrected.empty())
    warn("printed one-parameter factor fails the Riccati equation: " + row->note);
}

void Pipeline::do_verify() {
  do_hierarchy(std::max(1u, *job_.s));
  do_factor();
  bool param = true;
  try {
    do_parametrize();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedShape) throw;
    param = false;
    check("parametrize.unsupported_genus", hyperelliptic_genus(*curve_) >= 2);
    warn(std::string("parametrize: ") + e.what());
  }
  if (param) {
    try {
      do_solve();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedTower) throw;
      check("solve.unsupported_tower", pot_->u.context()->kind() == TowerKind::Weierstrass);
      warn(std::string("solve: ") + e.what());
    }
  }
  golden_checks();
  if (!family_) return;
  stage("specialize", [&] {
    std::vector<CurvePoint> pts = specialization_points(*family_, *job_.s);
    if (pts.empty()) {
      warn("no specialization points for this family member");
      return;
    }
    std::optional<Potential> pot;
    std::optional<LevelResult> lev;
    std::optional<CurvePoly> cur;
    std::optional<Factorization> fac;
    if (*family_ == Family::Elliptic && symbolic_preset_) {
      auto [a, b] = specialization_invariants();
      pot = elliptic_potential(*job_.s, a, b);
      lev = kdv_level(*pot, job_.s_max);
      cur = spectral_curve(*pot, *lev);
      fac = factor_on_curve(*pot, *lev, *cur);
      warn("elliptic specialization uses g2 = " + a.get_str() + ", g3 = " + b.get_str());
    } else {
      pot = *pot_;
      lev = *level_;
      cur = *curve_;
      fac = *fac_;
    }
    bool z = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      RatFun l0 = parse_ratfun(pts[i].lambda0), m0 = parse_ratfun(pts[i].mu0);
      z = z || m0.is_zero();
      specialize_point("specialize.p" + std::to_string(i), l0, m0, *pot, *lev, *cur, *fac);
    }
    check("specialize.has_Z_point", z);
  });
}

void Pipeline::run() {
  setup();
  const std::string& c = job_.command;
  if (c == "hierarchy") {
    do_hierarchy(job_.s.value_or(2));
  } else if (c == "level") {
    do_level();
  } else if (c == "curve") {
    do_curve();
  } else if (c == "factor") {
    do_factor();
  } else if (c == "parametrize") {
    do_parametrize();
  } else if (c == "solve") {
    do_solve();
  } else if (c == "specialize") {
    do_specialize();
  } else {
    do_verify();
  }
  if (c != "verify") golden_warnings();
}

}  // namespace

ResultDoc run_command(const JobSpec& job) {
  ResultDoc doc;
  Pipeline p(job, doc);
  try {
    p.run();
  } catch (const Error& e) {
    doc.error = p.current_ + ": " + e.what();
    doc.exit_code = exit_for(e.code());
    return doc;
  }
  settle_exit_code(doc);
  return doc;
}

void settle_exit_code(ResultDoc& doc) {
  if (!doc.error.empty()) return;
  doc.exit_code = Ok;
  for (auto it = doc.checks.begin(); it != doc.checks.end(); ++it)
    if (!it.value().get<bool>()) doc.exit_code = CheckFailed;
}

}  // namespace kdvspec::cli
