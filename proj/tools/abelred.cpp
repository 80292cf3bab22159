// abelred: reduce y' = M/N to an Abel-type equation by y -> A/B.
//
// Exit codes: 0 found / PASS, 1 parse or input error, 2 invalid flags,
// 3 nothing found / FAIL, 4 timeout.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "abelred/cancel_solver.hpp"
#include "abelred/factor.hpp"
#include "abelred/forward.hpp"
#include "abelred/parser.hpp"
#include "abelred/poly_algebra.hpp"
#include "abelred/reducer.hpp"

using namespace abelred;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kFlags = 2, kNotFound = 3, kTimeout = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, const std::string& inline_text) {
  if (!inline_text.empty()) return inline_text;
  if (path.empty()) throw InputError("no input: give a file, '-' for stdin, or --expr");
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

json reduced_json(const ReducedODE& r) {
  json coeffs = json::array();
  for (const auto& c : r.coeffs) coeffs.push_back(c.to_string());
  return {{"t", r.t.to_string()}, {"coeffs", coeffs}, {"text", r.to_string()}};
}

json solution_json(const ReductionSolution& s) {
  return {{"n", s.n},
          {"A", s.A.to_string()},
          {"B", s.B.to_string()},
          {"c", s.c.to_string()},
          {"t", s.t.to_string()},
          {"reduced", reduced_json(s.reduced)},
          {"power_case", s.power_case}};
}

json iif_json(const IIFResult& r) {
  json darboux = json::array();
  for (const auto& [p, a] : r.darboux) darboux.push_back({{"p", p.to_string()}, {"alpha", a}});
  return {{"mu", r.to_string()}, {"g", r.exp_part.to_string()}, {"exponent", r.exponent().to_string()},
          {"darboux", darboux}};
}

struct ReduceArgs {
  std::string path, expr;
  int bound = 0;
  bool all = false, as_json = false, verbose = false, n2 = false;
  double timeout_sec = 0;
};

int cmd_reduce(const ReduceArgs& a) {
  const InputODE ode = parse_ode(read_input(a.path, a.expr));
  ReduceOptions opts;
  opts.all = a.all;
  opts.n2 = a.n2;
  opts.timeout_sec = a.timeout_sec;
  if (a.verbose) {
    std::ostream* out = a.as_json ? &std::cerr : &std::cout;
    opts.trace = [out](const std::string& line) { *out << line << '\n' << std::flush; };
  }
  const ReduceResult r = reduce(ode, a.bound, opts);
  const bool found = !r.solutions.empty() || !r.iif.empty();
  const std::string status = r.timed_out ? "timeout" : found ? "found" : "not_found";
  const int code = r.timed_out ? kTimeout : found ? kOk : kNotFound;

  if (a.as_json) {
    json j{{"status", status},
           {"inconclusive", r.inconclusive},
           {"stats",
            {{"cany_iterations", r.stats.cany_iterations},
             {"profiles", r.stats.profiles},
             {"candidates", r.stats.candidates},
             {"wall_ms", r.stats.wall_ms}}}};
    json sols = json::array();
    for (const auto& s : r.solutions) sols.push_back(solution_json(s));
    if (!r.solutions.empty()) j.update(solution_json(r.solutions.front()));
    j["solutions"] = sols;
    if (!r.iif.empty()) {
      j["n"] = 2;
      j["iif"] = iif_json(r.iif.front());
    }
    std::cout << j.dump(2) << '\n';
    return code;
  }
  for (const auto& s : r.solutions) {
    std::cout << "n = " << s.n << (s.power_case ? " (power case)" : "") << '\n'
              << "A = " << s.A.to_string() << '\n'
              << "B = " << s.B.to_string() << '\n'
              << "c = " << s.c.to_string() << '\n'
              << "t = " << s.t.to_string() << '\n'
              << "reduced: " << s.reduced.to_string() << "\n\n";
  }
  if (!r.iif.empty()) std::cout << "n = 2\ninverse integrating factor: " << r.iif.front().to_string() << "\n\n";
  std::cout << "status: " << status << (r.inconclusive ? " (some cases inconclusive)" : "") << '\n'
            << "canceled-degree iterations: " << r.stats.cany_iterations << ", profiles: " << r.stats.profiles
            << ", candidates: " << r.stats.candidates << ", wall: " << r.stats.wall_ms << " ms\n";
  return code;
}

struct ForwardArgs {
  std::string base, A, B, out;
};

int cmd_forward(const ForwardArgs& a) {
  const ReducedODE base = parse_reduced(a.base);
  Fixture f;
  try {
    f = forward_transform(base, parse_poly(a.A), parse_poly(a.B));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::string text = fixture_to_text(f) + "# canceled factor in y: " + f.expected_c.to_string() +
                           "\n# canceled factor in x: " + f.canceled_x.to_string() + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(a.out);
    if (!o) throw InputError("cannot write " + a.out);
    o << text;
  }
  return kOk;
}

struct VerifyArgs {
  std::string path, expr, A, B, c, t = "1";
  int n = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const InputODE ode = parse_ode(read_input(a.path, a.expr));
  ReductionSolution s;
  s.A = parse_poly(a.A);
  s.B = parse_poly(a.B);
  s.c = parse_poly(a.c);
  s.t = parse_poly(a.t);
  if (s.t.depends_on(Var::Y)) throw InputError("t must not depend on y");

  const bool coprime = gcd(s.A, s.B).is_constant();
  const bool divides = !s.c.is_zero() && exact_div(s.A, s.c).has_value();
  // Without --n, the first n whose coefficients exist.
  const int lo = a.n > 0 ? a.n : 2, hi = a.n > 0 ? a.n : std::max(ode.M.deg_y(), ode.N.deg_y()) + 2;
  bool cancel_ok = false, transform_ok = false;
  for (int n = lo; n <= hi && !transform_ok; ++n) {
    s.n = n;
    if (!cancel_identity_holds(ode.N, s.A, s.c, s.B, s.t, n)) continue;
    cancel_ok = true;
    if (auto f = solve_f(ode.M, s.A, s.B, s.c, s.t, n)) {
      s.reduced = reduced_from_rational(*f);
      transform_ok = s.reduced.n() == n && verify_solution(ode, s);
    }
  }
  auto line = [](bool ok, const std::string& what) { std::cout << (ok ? "PASS " : "FAIL ") << what << '\n'; };
  line(coprime, "gcd(A, B) = 1");
  line(divides, "c divides A");
  line(cancel_ok, "N*c = t*(B*A_y - A*B_y)*B^(n-2)");
  line(transform_ok, "M*c = sum f_i*t*A^i*B^(n-i) - t*(B*A_x - A*B_x)*B^(n-2)");
  if (transform_ok) std::cout << "n = " << s.n << "\nreduced: " << s.reduced.to_string() << '\n';
  return coprime && divides && cancel_ok && transform_ok ? kOk : kNotFound;
}

int cmd_factor(const std::string& expr, bool as_json) {
  const BiPoly p = parse_poly(expr);
  if (p.is_zero()) throw InputError("cannot factor zero");
  const FactorSet fs = factorize(p);
  if (as_json) {
    auto list = [](const std::vector<Factor>& v) {
      json a = json::array();
      for (const auto& f : v) a.push_back({{"factor", f.poly.to_string()}, {"multiplicity", f.multiplicity}});
      return a;
    };
    std::cout << json{{"content", fs.content.get_str()}, {"x_factors", list(fs.units_x)},
                      {"y_factors", list(fs.factors_y)}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "content: " << fs.content.get_str() << '\n';
  for (const auto& f : fs.units_x) std::cout << "x-factor: " << f.poly.to_string() << "  ^" << f.multiplicity << '\n';
  for (const auto& f : fs.factors_y) std::cout << "y-factor: " << f.poly.to_string() << "  ^" << f.multiplicity << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reduction of rational first-order ODEs to Abel-type equations"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "search for y -> A/B reducing y' = M/N");
  reduce_cmd->add_option("input", ra.path, "ODE file ('M = ...' and 'N = ...' lines, or M/N), '-' for stdin");
  reduce_cmd->add_option("--expr", ra.expr, "ODE given inline instead of a file");
  reduce_cmd->add_option("--bound", ra.bound, "degree bound for A")->required()->check(CLI::PositiveNumber);
  reduce_cmd->add_flag("--all", ra.all, "keep searching after the first profile with a solution");
  reduce_cmd->add_flag("--json", ra.as_json, "machine-readable report on stdout");
  reduce_cmd->add_flag("--verbose", ra.verbose, "step-by-step trace");
  reduce_cmd->add_flag("--n2", ra.n2, "fall back to a Liouvillian inverse integrating factor");
  reduce_cmd->add_option("--timeout-sec", ra.timeout_sec, "wall-clock limit, 0 for none")
      ->check(CLI::NonNegativeNumber);

  ForwardArgs fa;
  auto* forward_cmd = app.add_subcommand("forward", "apply y -> A/B to a base equation and print the ODE");
  forward_cmd->add_option("--base", fa.base, "base equation, e.g. \"x*y' = x*y^3 + (-x-1)*y^2\"")->required();
  forward_cmd->add_option("--A", fa.A, "numerator of the transformation")->required();
  forward_cmd->add_option("--B", fa.B, "denominator of the transformation")->required();
  forward_cmd->add_option("-o,--out", fa.out, "write the fixture here instead of stdout");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check a tuple (A, c, B, t) against an ODE");
  verify_cmd->add_option("input", va.path, "ODE file, '-' for stdin");
  verify_cmd->add_option("--expr", va.expr, "ODE given inline instead of a file");
  verify_cmd->add_option("--A", va.A)->required();
  verify_cmd->add_option("--B", va.B)->required();
  verify_cmd->add_option("--c", va.c)->required();
  verify_cmd->add_option("--t", va.t, "x-only factor, default 1");
  verify_cmd->add_option("--n", va.n, "degree of the reduced equation; tried in turn when omitted")
      ->check(CLI::Range(2, 64));

  std::string factor_expr;
  bool factor_json = false;
  auto* factor_cmd = app.add_subcommand("factor", "irreducible factorization over Q");
  factor_cmd->add_option("expr", factor_expr, "polynomial in x, y")->required();
  factor_cmd->add_flag("--json", factor_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFlags;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(ra);
    if (*forward_cmd) return cmd_forward(fa);
    if (*verify_cmd) return cmd_verify(va);
    if (*factor_cmd) return cmd_factor(factor_expr, factor_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kFlags;
}
