// ajf: evaluate the functions, walk ladder chains, run verification suites,
// and expand samples on a fixed (m, q) channel.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ajf/analytic.hpp"
#include "ajf/indices.hpp"
#include "ajf/jacobi.hpp"
#include "ajf/operators.hpp"
#include "ajf/quadrature.hpp"
#include "ajf/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Exit 2 with the validation report when a triple is rejected.
bool demand_valid(const ajf::IndexTriple& t) {
  const ajf::ValidationReport r = ajf::validate(t);
  if (r.valid) return true;
  std::cerr << "invalid index triple " << ajf::to_string(t) << "\n";
  for (const auto& v : r.violations) std::cerr << "  " << v << "\n";
  return false;
}

nlohmann::json triple_json(const ajf::IndexTriple& t) {
  return {{"l2", t.l.twice}, {"m2", t.m.twice}, {"q2", t.q.twice}};
}

int cmd_eval(const ajf::IndexTriple& t, const std::vector<double>& xs,
             const std::string& format, bool breakdown) {
  if (!demand_valid(t)) return kExitUsage;
  for (double x : xs) {
    if (!(std::abs(x) < 1.0)) {
      std::cerr << "x must satisfy |x| < 1, got " << fmt17(x) << "\n";
      return kExitUsage;
    }
  }

  if (format == "json") {
    nlohmann::json j;
    j["command"] = "eval";
    j["state"] = triple_json(t);
    nlohmann::json pts = nlohmann::json::array();
    for (double x : xs) {
      const ajf::AjfValue v = ajf::ajf_eval(t, ajf::EvalPoint(x));
      pts.push_back({{"x", x}, {"value", v.value}, {"condition_hint", v.condition_hint}});
    }
    j["points"] = pts;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (format == "csv") {
    std::cout << "x,value\n";
    for (double x : xs)
      std::cout << fmt17(x) << "," << fmt17(ajf::ajf(t, x)) << "\n";
    return 0;
  }

  for (double x : xs) {
    std::cout << "J" << ajf::to_string(t) << " at x=" << fmt17(x) << " = "
              << fmt17(ajf::ajf(t, x)) << "\n";
    if (breakdown) {
      const ajf::CanonicalForm cf = ajf::canonical_reduce(t, ajf::EvalPoint(x));
      const ajf::ClassicalIndex ci = ajf::to_classical(cf.triple);
      std::cout << "  canonical state " << ajf::to_string(cf.triple) << " at x="
                << fmt17(cf.x) << ", sign " << (cf.sign < 0 ? "-1" : "+1") << "\n";
      std::cout << "  classical n=" << ci.n << " alpha=" << ci.alpha
                << " beta=" << ci.beta << "\n";
      std::cout << "  prefactor = "
                << fmt17(ajf::ajf_prefactor(cf.triple, ajf::EvalPoint(cf.x))) << ", jacobi = "
                << fmt17(ajf::jacobi_poly(ci.n, ci.alpha, ci.beta, cf.x)) << "\n";
    }
  }
  return 0;
}

int cmd_ladder(const std::string& op_name, ajf::IndexTriple t, int steps,
               const std::string& format) {
  const std::optional<ajf::GeneratorId> parsed = ajf::parse_generator(op_name);
  if (!parsed) {
    std::cerr << "unknown generator " << op_name << "\n";
    return kExitUsage;
  }
  const ajf::GeneratorId g = *parsed;
  if (!ajf::is_ladder(g)) {
    std::cerr << "generator " << op_name << " is diagonal; ladder chains need a raising or "
              << "lowering generator\n";
    return kExitUsage;
  }
  if (!demand_valid(t)) return kExitUsage;

  struct Row {
    ajf::IndexTriple from, to;
    double coefficient, cumulative;
    bool annihilated;
  };
  std::vector<Row> rows;
  double cumulative = 1.0;
  for (int s = 0; s < steps; ++s) {
    const ajf::LadderAction act = ajf::ladder_coefficient(g, t);
    cumulative *= act.coefficient;
    rows.push_back({t, act.target, act.coefficient, cumulative, act.coefficient == 0.0});
    if (act.coefficient == 0.0) break;
    t = act.target;
  }

  if (format == "json") {
    nlohmann::json j;
    j["command"] = "ladder";
    j["op"] = ajf::name(g);
    nlohmann::json steps_json = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row;
      row["from"] = triple_json(r.from);
      if (!r.annihilated) row["to"] = triple_json(r.to);
      row["coefficient"] = r.coefficient;
      row["cumulative"] = r.cumulative;
      row["annihilated"] = r.annihilated;
      steps_json.push_back(row);
    }
    j["steps"] = steps_json;
    j["annihilated"] = !rows.empty() && rows.back().annihilated;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (format == "csv") {
    std::cout << "step,l2_from,m2_from,q2_from,l2_to,m2_to,q2_to,coefficient,cumulative\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::cout << i + 1 << "," << r.from.l.twice << "," << r.from.m.twice << ","
                << r.from.q.twice << ",";
      if (r.annihilated)
        std::cout << ",,";
      else
        std::cout << r.to.l.twice << "," << r.to.m.twice << "," << r.to.q.twice;
      std::cout << "," << fmt17(r.coefficient) << "," << fmt17(r.cumulative) << "\n";
    }
    return 0;
  }

  std::cout << "chain " << ajf::name(g) << " from " << ajf::to_string(rows.front().from)
            << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::cout << "  step " << i + 1 << ": " << ajf::to_string(r.from) << " -> ";
    if (r.annihilated)
      std::cout << "annihilated (coefficient 0)";
    else
      std::cout << ajf::to_string(r.to) << "  coefficient " << fmt17(r.coefficient)
                << "  cumulative " << fmt17(r.cumulative);
    std::cout << "\n";
  }
  return 0;
}

int cmd_multiplet(ajf::HalfInt l, const std::string& format) {
  if (l.twice < 0) {
    std::cerr << "l must be nonnegative\n";
    return kExitUsage;
  }
  const auto states = ajf::enumerate_multiplet(l);

  if (format == "json") {
    nlohmann::json j;
    j["command"] = "multiplet";
    j["l2"] = l.twice;
    j["dimension"] = states.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : states) arr.push_back(triple_json(t));
    j["states"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (format == "csv") {
    std::cout << "l2,m2,q2\n";
    for (const auto& t : states)
      std::cout << t.l.twice << "," << t.m.twice << "," << t.q.twice << "\n";
    return 0;
  }

  std::cout << "multiplet l=" << ajf::to_string(l) << ", dimension " << states.size()
            << "\n";
  for (const auto& t : states) {
    std::cout << "  " << ajf::to_string(t) << "  C3=" <<
        ajf::to_string(ajf::cartan_eigenvalue(ajf::GeneratorId::C3, t)) << "  D3=" <<
        ajf::to_string(ajf::cartan_eigenvalue(ajf::GeneratorId::D3, t)) << "  E3=" <<
        ajf::to_string(ajf::cartan_eigenvalue(ajf::GeneratorId::E3, t)) << "  F3=" <<
        ajf::to_string(ajf::cartan_eigenvalue(ajf::GeneratorId::F3, t)) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, int l2max, double tol, bool tol_set,
               std::uint64_t seed, int nodes, int grid, bool channel_set, int m2, int q2,
               const std::string& format, const std::string& out_path) {
  using namespace ajf::verify;
  const ajf::HalfInt l_max = ajf::HalfInt::from_twice(l2max);
  const auto pick = [&](double dflt) { return tol_set ? tol : dflt; };

  std::vector<SuiteReport> reports;
  const auto start = std::chrono::steady_clock::now();
  if (suite == "algebra") {
    reports.push_back(run_algebra(l_max, pick(kAlgebraTol)));
  } else if (suite == "casimir") {
    reports.push_back(run_casimir(l_max, pick(kAlgebraTol), seed));
  } else if (suite == "ortho") {
    if (channel_set)
      reports.push_back(run_ortho_channel(ajf::HalfInt::from_twice(m2),
                                          ajf::HalfInt::from_twice(q2), l_max,
                                          pick(kAlgebraTol), nodes));
    else
      reports.push_back(run_ortho(l_max, 6, pick(kAlgebraTol), nodes));
  } else if (suite == "ode") {
    reports.push_back(run_ode(l_max, pick(kOdeTol), grid));
  } else if (suite == "symmetry") {
    reports.push_back(run_symmetry(l_max, pick(1e-12), grid));
  } else if (suite == "weyl") {
    reports.push_back(run_weyl(l_max, pick(1e-12), grid));
  } else if (suite == "hermiticity") {
    reports.push_back(run_hermiticity(l_max, pick(1e-12)));
  } else if (suite == "factorization") {
    reports.push_back(run_factorization(l_max, pick(kAlgebraTol)));
  } else if (suite == "all") {
    reports = run_all(l_max, pick(kAlgebraTol));
  } else {
    std::cerr << "unknown suite " << suite << "\n";
    return kExitUsage;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::string echo = "verify " + suite + " --l2max " + std::to_string(l2max);
  if (channel_set)
    echo += " --m2 " + std::to_string(m2) + " --q2 " + std::to_string(q2);

  // JSON reports carry no timing so identical arguments give identical bytes.
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << render_json(reports, echo);
  }
  if (format == "json") {
    std::cout << render_json(reports, echo);
  } else {
    for (const auto& r : reports) std::cout << render_text(r);
    std::cout << "elapsed_ms=" << elapsed.count() << "\n";
  }

  bool clean = true;
  for (const auto& r : reports) clean = clean && r.clean();
  return clean ? 0 : kExitVerification;
}

int cmd_expand(const std::string& function, int m2, int q2, int l2max, int nodes,
               const std::string& convention, int member_l2, bool member_set,
               const std::string& format) {
  const ajf::Channel ch{ajf::HalfInt::from_twice(m2), ajf::HalfInt::from_twice(q2)};
  if (!ajf::channel_valid(ch)) {
    std::cerr << "channel (m2=" << m2 << ", q2=" << q2
              << ") is invalid: m+q and m-q must be integers\n";
    return kExitUsage;
  }
  const ajf::HalfInt l_max = ajf::HalfInt::from_twice(l2max);
  if (l_max < ajf::channel_l_min(ch)) {
    std::cerr << "l2max " << l2max << " is below the channel minimum "
              << ajf::channel_l_min(ch).twice << "\n";
    return kExitUsage;
  }

  std::function<double(double)> f;
  if (function == "exp") {
    f = [](double x) { return std::exp(x); };
  } else if (function == "x") {
    f = [](double x) { return x; };
  } else if (function == "runge") {
    f = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
  } else if (function == "member") {
    if (!member_set) {
      std::cerr << "--member-l2 is required with the member function\n";
      return kExitUsage;
    }
    const ajf::IndexTriple member{ajf::HalfInt::from_twice(member_l2), ch.m, ch.q};
    if (!demand_valid(member)) return kExitUsage;
    f = [member](double x) { return ajf::ajf(member, x); };
  } else {
    std::cerr << "unknown function " << function << "\n";
    return kExitUsage;
  }

  const ajf::WeightConvention conv = convention == "unweighted"
                                         ? ajf::WeightConvention::Unweighted
                                         : ajf::WeightConvention::Weighted;
  const ajf::QuadratureRule rule = ajf::gauss_legendre(nodes);
  const ajf::Expansion e = ajf::expand(f, ch, l_max, rule, conv);
  const ajf::ParsevalResult pr = ajf::parseval_check(f, ch, l_max, rule);

  if (format == "json") {
    nlohmann::json j;
    j["command"] = "expand";
    j["function"] = function;
    j["channel"] = {{"m2", m2}, {"q2", q2}};
    j["l2max"] = l2max;
    j["nodes"] = nodes;
    j["convention"] = convention;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [l, c] : e.coeffs) coeffs.push_back({{"l2", l.twice}, {"c", c}});
    j["coefficients"] = coeffs;
    j["norm2"] = pr.norm2;
    j["sum"] = pr.sum;
    j["tail"] = pr.tail;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (format == "text") {
    std::cout << "expansion of " << function << " on channel (m=" << ajf::to_string(ch.m)
              << ", q=" << ajf::to_string(ch.q) << "), " << convention << " convention\n";
    for (const auto& [l, c] : e.coeffs)
      std::cout << "  l=" << ajf::to_string(l) << "  c=" << fmt17(c) << "\n";
    std::cout << "norm2=" << fmt17(pr.norm2) << " sum=" << fmt17(pr.sum)
              << " tail=" << fmt17(pr.tail) << "\n";
    return 0;
  }

  std::cout << "l2,coefficient\n";
  for (const auto& [l, c] : e.coeffs) std::cout << l.twice << "," << fmt17(c) << "\n";
  std::cout << "# norm2=" << fmt17(pr.norm2) << " sum=" << fmt17(pr.sum)
            << " tail=" << fmt17(pr.tail) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic Jacobi functions: evaluation, ladder operators, verification"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate J at points in (-1,1)");
  int e_l2 = 0, e_m2 = 0, e_q2 = 0;
  std::vector<double> e_xs;
  std::string e_format = "text";
  bool e_breakdown = false;
  eval->add_option("--l2", e_l2, "doubled l")->required();
  eval->add_option("--m2", e_m2, "doubled m")->required();
  eval->add_option("--q2", e_q2, "doubled q")->required();
  eval->add_option("--x", e_xs, "evaluation points, repeatable")
      ->required()
      ->delimiter(',');
  eval->add_option("--format", e_format)->check(CLI::IsMember({"text", "json", "csv"}));
  eval->add_flag("--breakdown", e_breakdown, "print canonical form, classical indices, prefactor");

  // ladder
  auto* ladder = app.add_subcommand("ladder", "apply a ladder generator repeatedly");
  std::string d_op;
  int d_l2 = 0, d_m2 = 0, d_q2 = 0, d_steps = 1;
  std::string d_format = "text";
  ladder->add_option("--op", d_op, "generator name, e.g. A+ or C-")->required();
  ladder->add_option("--l2", d_l2, "doubled l")->required();
  ladder->add_option("--m2", d_m2, "doubled m")->required();
  ladder->add_option("--q2", d_q2, "doubled q")->required();
  ladder->add_option("--steps", d_steps, "chain length")->check(CLI::PositiveNumber);
  ladder->add_option("--format", d_format)->check(CLI::IsMember({"text", "json", "csv"}));

  // multiplet
  auto* multiplet = app.add_subcommand("multiplet", "list the states with a given l");
  int p_l2 = 0;
  std::string p_format = "text";
  multiplet->add_option("--l2", p_l2, "doubled l")->required();
  multiplet->add_option("--format", p_format)->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  int v_l2max = 6, v_nodes = 64, v_grid = 20, v_m2 = 0, v_q2 = 0;
  double v_tol = 0.0;
  std::uint64_t v_seed = 20250814u;
  std::string v_format = "text", v_out;
  verify->add_option("suite", v_suite, "algebra|casimir|ortho|ode|symmetry|weyl|hermiticity|factorization|all")
      ->required()
      ->check(CLI::IsMember({"algebra", "casimir", "ortho", "ode", "symmetry", "weyl",
                             "hermiticity", "factorization", "all"}));
  verify->add_option("--l2max", v_l2max, "doubled level cap")->check(CLI::NonNegativeNumber);
  auto* tol_opt = verify->add_option("--tol", v_tol, "override the suite tolerance");
  verify->add_option("--seed", v_seed, "seed for the random-state checks");
  verify->add_option("--nodes", v_nodes, "quadrature nodes")->check(CLI::PositiveNumber);
  verify->add_option("--grid", v_grid, "interior grid points")->check(CLI::PositiveNumber);
  auto* m2_opt = verify->add_option("--m2", v_m2, "restrict ortho to one channel: doubled m");
  auto* q2_opt = verify->add_option("--q2", v_q2, "restrict ortho to one channel: doubled q");
  verify->add_option("--format", v_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", v_out, "also write the JSON report to this file");

  // expand
  auto* expand = app.add_subcommand("expand", "expand a sample function on a channel");
  std::string x_function;
  int x_m2 = 0, x_q2 = 0, x_l2max = 32, x_nodes = 96, x_member_l2 = 0;
  std::string x_convention = "weighted", x_format = "csv";
  expand->add_option("function", x_function, "exp|x|runge|member")->required();
  expand->add_option("--m2", x_m2, "doubled m of the channel");
  expand->add_option("--q2", x_q2, "doubled q of the channel");
  expand->add_option("--l2max", x_l2max, "doubled level cap")->check(CLI::NonNegativeNumber);
  expand->add_option("--nodes", x_nodes, "quadrature nodes")->check(CLI::PositiveNumber);
  auto* member_opt = expand->add_option("--member-l2", x_member_l2,
                                        "doubled l of the channel member to expand");
  expand->add_option("--convention", x_convention)
      ->check(CLI::IsMember({"weighted", "unweighted"}));
  expand->add_option("--format", x_format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed())
      return cmd_eval({ajf::HalfInt::from_twice(e_l2), ajf::HalfInt::from_twice(e_m2),
                       ajf::HalfInt::from_twice(e_q2)},
                      e_xs, e_format, e_breakdown);
    if (ladder->parsed())
      return cmd_ladder(d_op,
                        {ajf::HalfInt::from_twice(d_l2), ajf::HalfInt::from_twice(d_m2),
                         ajf::HalfInt::from_twice(d_q2)},
                        d_steps, d_format);
    if (multiplet->parsed()) return cmd_multiplet(ajf::HalfInt::from_twice(p_l2), p_format);
    if (verify->parsed()) {
      const bool channel_set = m2_opt->count() > 0 || q2_opt->count() > 0;
      return cmd_verify(v_suite, v_l2max, v_tol, tol_opt->count() > 0, v_seed, v_nodes,
                        v_grid, channel_set, v_m2, v_q2, v_format, v_out);
    }
    if (expand->parsed())
      return cmd_expand(x_function, x_m2, x_q2, x_l2max, x_nodes, x_convention,
                        x_member_l2, member_opt->count() > 0, x_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
