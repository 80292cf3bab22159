#include "abelred/reducer.hpp"

#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "abelred/cancel_solver.hpp"
#include "abelred/factor.hpp"
#include "abelred/linalg.hpp"
#include "abelred/poly_algebra.hpp"

namespace abelred {

std::optional<std::vector<RatFunc>> solve_f(const BiPoly& M, const BiPoly& A, const BiPoly& B, const BiPoly& c,
                                            const BiPoly& t, int n) {
  const BiPoly Bn2 = B.pow(static_cast<unsigned>(n - 2));
  const BiPoly R = M * c + t * (B * A.derive(Var::X) - A * B.derive(Var::X)) * Bn2;
  std::vector<BiPoly> terms;  // A^i B^(n-i)
  std::vector<BiPoly> Apow{BiPoly(1)}, Bpow{BiPoly(1)};
  for (int i = 1; i <= n; ++i) {
    Apow.push_back(Apow.back() * A);
    Bpow.push_back(Bpow.back() * B);
  }
  for (int i = 0; i <= n; ++i) terms.push_back(Apow[static_cast<std::size_t>(i)] * Bpow[static_cast<std::size_t>(n - i)]);
  std::vector<std::vector<UPoly>> columns;
  std::size_t rows = static_cast<std::size_t>(std::max(R.deg_y(), 0) + 1);
  for (const auto& p : terms) rows = std::max(rows, static_cast<std::size_t>(p.deg_y() + 1));
  for (const auto& p : terms) {
    auto col = p.y_coeffs();
    col.resize(rows);
    columns.push_back(std::move(col));
  }
  auto target = R.y_coeffs();
  target.resize(rows);
  auto g = solve_over_rf(columns, target);
  if (!g) return std::nullopt;
  // Independent check with denominators cleared.
  UPoly L(1);
  for (const auto& gi : *g) L = lcm(L, gi.den());
  BiPoly lhs;
  for (int i = 0; i <= n; ++i) {
    const auto& gi = (*g)[static_cast<std::size_t>(i)];
    lhs += BiPoly::from_upoly(gi.num() * (L / gi.den()), Var::X) * terms[static_cast<std::size_t>(i)];
  }
  if (lhs != BiPoly::from_upoly(L, Var::X) * R) return std::nullopt;
  const RatFunc tf(t.as_upoly(Var::X));
  std::vector<RatFunc> f;
  for (const auto& gi : *g) f.push_back(gi / tf);
  return f;
}

bool verify_solution(const InputODE& ode, const ReductionSolution& s) {
  const int n = s.n;
  if (n < 2 || s.reduced.n() != n) return false;
  if (s.A.is_zero() || s.B.is_zero() || s.c.is_zero() || s.t.is_zero()) return false;
  if (s.t.depends_on(Var::Y) || s.reduced.t.depends_on(Var::Y)) return false;
  for (const auto& f : s.reduced.coeffs)
    if (f.depends_on(Var::Y)) return false;
  if (s.reduced.coeffs.back().is_zero()) return false;
  if (!gcd(s.A, s.B).is_constant()) return false;
  if (!exact_div(s.A, s.c)) return false;
  const BiPoly Bn2 = s.B.pow(static_cast<unsigned>(n - 2));
  const BiPoly W = s.B * s.A.derive(Var::Y) - s.A * s.B.derive(Var::Y);
  if (ode.N * s.c != s.t * W * Bn2) return false;
  // M*c = sum (t * r_i / T) A^i B^(n-i) - t*(B*A_x - A*B_x)*B^(n-2), times T.
  const BiPoly& T = s.reduced.t;
  BiPoly sum;
  BiPoly Ai(1);
  for (int i = 0; i <= n; ++i) {
    const auto& ri = s.reduced.coeffs[static_cast<std::size_t>(i)];
    if (!ri.is_zero()) sum += ri * Ai * s.B.pow(static_cast<unsigned>(n - i));
    Ai *= s.A;
  }
  const BiPoly V = s.B * s.A.derive(Var::X) - s.A * s.B.derive(Var::X);
  return T * ode.M * s.c == s.t * sum - T * s.t * V * Bn2;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string key_of(int n, const BiPoly& B, const BiPoly& t, int cany) {
  return std::to_string(n) + "|" + B.to_string() + "|" + t.to_string() + "|" + std::to_string(cany);
}

std::string wrap(const BiPoly& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); }

std::string tuple_list(const std::vector<ReductionSolution>& sols) {
  std::string out = "[";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) out += ", ";
    out += "[" + sols[i].A.to_string() + ", " + sols[i].c.to_string() + ", " + sols[i].B.to_string() + ", " +
           sols[i].t.to_string() + "]";
  }
  return out + "]";
}

class Search {
 public:
  Search(const InputODE& ode, int degreeA, const ReduceOptions& opts)
      : ode_(ode), degreeA_(degreeA), opts_(opts), start_(Clock::now()) {}

  ReduceResult run() {
    const FactorSet fs = factorize(ode_.N);
    t0_ = fs.x_part();
    const int dM = std::max(ode_.M.deg_y(), 0), dN = std::max(ode_.N.deg_y(), 0);
    const int mm = fs.max_y_multiplicity();
    for (int cany = 0; cany < degreeA_ && !stop_; ++cany) {
      ++res_.stats.cany_iterations;
      log("canceled factor's degree in y is " + std::to_string(cany));
      for (const auto& p : degree_profiles(dM, dN, cany, degreeA_, mm)) {
        if (stop_) break;
        ++res_.stats.profiles;
        run_profile(fs, p);
        if (!res_.solutions.empty() && !opts_.all) stop_ = true;
      }
    }
    if (res_.solutions.empty() && opts_.n2 && !res_.timed_out) {
      log("Computing inverse integrating factor when n = 2: handling cases factors being canceled...");
      IIFSearch s = iif_search_n2(ode_.M, ode_.N, opts_.iif_bounds);
      if (s.inconclusive) res_.inconclusive = true;
      res_.iif = std::move(s.results);
      if (!res_.iif.empty()) {
        log("Inverse integrating factor n=2 successful");
        log("[2, " + res_.iif.front().to_string() + "]");
      }
    }
    res_.stats.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    return std::move(res_);
  }

 private:
  void log(const std::string& s) const {
    if (opts_.trace) opts_.trace(s);
  }

  bool out_of_time() {
    if (opts_.timeout_sec <= 0) return false;
    const double el = std::chrono::duration<double>(Clock::now() - start_).count();
    if (el > opts_.timeout_sec) {
      res_.timed_out = true;
      stop_ = true;
    }
    return stop_;
  }

  const std::vector<BiPoly>& t_candidates(const BiPoly& B) {
    auto it = t_cache_.find(B.to_string());
    if (it != t_cache_.end()) return it->second;
    return t_cache_.emplace(B.to_string(), build_t_candidates(t0_, B, ode_.M)).first->second;
  }

  // Completes (A, c, B, t) with the reduced ODE; nullopt if no f exists.
  std::optional<ReductionSolution> complete(const BiPoly& A, const BiPoly& c, const BiPoly& B, const BiPoly& t,
                                            const DegreeProfile& p, bool power) {
    auto f = solve_f(ode_.M, A, B, c, t, p.n);
    if (!f) return std::nullopt;
    ReductionSolution s{A, B, c, t, p.n, reduced_from_rational(*f), power, p};
    if (s.reduced.n() != p.n) return std::nullopt;
    if (!verify_solution(ode_, s)) return std::nullopt;
    return s;
  }

  void add(ReductionSolution s) {
    for (const auto& o : res_.solutions)
      if (o.A == s.A && o.B == s.B && o.t == s.t && o.n == s.n) return;
    res_.solutions.push_back(std::move(s));
  }

  void report(const ReductionSolution& s) {
    const std::string ode = s.reduced.to_string();
    log(ode);
    log("[" + std::to_string(s.n) + ", [" + wrap(s.A) + "/" + wrap(s.B) + ", " + ode + "]]");
  }

  void run_profile(const FactorSet& fs, const DegreeProfile& p) {
    log("the value of n is " + std::to_string(p.n));
    log("the degree of A in y is " + std::to_string(p.a_y));
    log("the degree of B in y is " + std::to_string(p.b_y));
    const auto Bs = build_B_candidates(fs, p);
    for (int k : power_case_exponents(p)) {
      log("Try to find power case solutions...");
      for (const auto& cb : Bs)
        for (const auto& t : t_candidates(cb.poly)) {
          if (out_of_time()) return;
          const std::string key = key_of(p.n, cb.poly, t, p.cany) + "|k" + std::to_string(k);
          if (!tried_power_.insert(key).second) continue;
          ++res_.stats.candidates;
          auto cs = power_case_solve(ode_.N, cb.poly, t, p.n, k, degreeA_);
          if (!cs || cs->c.deg_y() != p.cany) continue;
          auto s = complete(cs->A, cs->c, cb.poly, t, p, true);
          if (!s) continue;
          log("Power case successful. The reduced ODE is:");
          report(*s);
          add(std::move(*s));
          if (!opts_.all) return;
        }
    }
    log("Solving for A");
    std::vector<ReductionSolution> found;
    for (const auto& cb : Bs)
      for (const auto& t : t_candidates(cb.poly)) {
        if (out_of_time()) return;
        const std::string key = key_of(p.n, cb.poly, t, p.cany);
        auto it = cancel_cache_.find(key);
        if (it == cancel_cache_.end()) {
          ++res_.stats.candidates;
          const CancelFamily fam = solve_cancel_family(ode_.N, cb.poly, t, p.n, degreeA_, p.cany);
          const bool reducing = fam.dimension() >= 2 || (fam.dimension() >= 1 && !fam.free_A.empty());
          if (reducing) log("Try to reduce parameters in candidates of A and canceled factors...");
          ReduceOutcome r = reduce_parameters(fam, cb.poly, p.cany);
          if (r.inconclusive) res_.inconclusive = true;
          if (reducing && !r.solutions.empty()) {
            log("Successfully reduce parameters,the reduced candidates are");
            for (const auto& s : r.solutions)
              log("[" + s.A.to_string() + ", " + s.c.to_string() + ", " + cb.poly.to_string() + "]");
          }
          std::vector<ReductionSolution> sols;
          for (const auto& cs : r.solutions)
            if (auto s = complete(cs.A, cs.c, cb.poly, t, p, false)) sols.push_back(std::move(*s));
          it = cancel_cache_.emplace(key, std::move(sols)).first;
        }
        for (const auto& s : it->second) {
          ReductionSolution copy = s;
          copy.profile = p;
          found.push_back(std::move(copy));
        }
        if (!found.empty() && !opts_.all) break;
      }
    log("Solutions for A,canceled factor B and t found are:");
    log(tuple_list(found));
    if (found.empty()) return;
    log("Reduction transformation successful. The reduced ODE is:");
    report(found.front());
    for (auto& s : found) add(std::move(s));
  }

  const InputODE& ode_;
  const int degreeA_;
  const ReduceOptions& opts_;
  const Clock::time_point start_;
  BiPoly t0_;
  bool stop_ = false;
  ReduceResult res_;
  std::map<std::string, std::vector<BiPoly>> t_cache_;
  std::map<std::string, std::vector<ReductionSolution>> cancel_cache_;
  std::set<std::string> tried_power_;
};

}  // namespace

ReduceResult reduce(const InputODE& ode, int degreeA, const ReduceOptions& opts) {
  if (degreeA < 1) throw std::invalid_argument("degree bound for A must be at least 1");
  return Search(ode, degreeA, opts).run();
}

}  // namespace abelred
