#include "abelred/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "modp.hpp"

namespace abelred {

std::size_t LinSystem::add_unknown(std::string name) {
  unknowns_.push_back(std::move(name));
  return unknowns_.size() - 1;
}

void LinSystem::add_row(Row row, const Rat& rhs) {
  for (const auto& [col, coef] : row)
    if (col >= unknowns_.size()) throw std::out_of_range("LinSystem row references an undeclared unknown");
  for (auto& e : row) e.second.canonicalize();
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Repeated columns are summed.
  Row merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
    else merged.push_back(std::move(e));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
               merged.end());
  rows_.push_back(std::move(merged));
  rhs_.push_back(rhs);
  rhs_.back().canonicalize();
  if (rhs != 0) homogeneous_ = false;
}

bool satisfies(const LinSystem& sys, const std::vector<Rat>& v) {
  for (std::size_t r = 0; r < sys.rows().size(); ++r) {
    Rat acc = 0;
    for (const auto& [col, coef] : sys.rows()[r]) acc += coef * v[col];
    if (acc != sys.rhs()[r]) return false;
  }
  return true;
}

namespace {

using Matrix = std::vector<std::vector<Int>>;

constexpr std::uint64_t kPrime = 4611686018427387847ULL;  // 2^62 - 57

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1U;
  }
  return r;
}

// Indices of rows forming a basis of the row space modulo kPrime, chosen
// greedily in row order.
std::vector<std::size_t> independent_rows_modp(const Matrix& m, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows
  std::vector<std::size_t> pivot_of;               // pivot column of each basis row
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.size() && basis.size() < cols; ++r) {
    std::vector<std::uint64_t> v(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      v[j] = mpz_fdiv_ui(m[r][j].get_mpz_t(), kPrime);
      nonzero = nonzero || v[j] != 0;
    }
    if (!nonzero) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = v[pivot_of[b]];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (basis[b][j]) v[j] = (v[j] + kPrime - mulmod(f, basis[b][j])) % kPrime;
    }
    std::size_t piv = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv == cols) continue;
    const std::uint64_t inv = powmod(v[piv], kPrime - 2);
    for (auto& e : v) e = mulmod(e, inv);
    // Keep the basis fully reduced on pivot columns.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = basis[b][piv];
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (v[j]) basis[b][j] = (basis[b][j] + kPrime - mulmod(f, v[j])) % kPrime;
    }
    basis.push_back(std::move(v));
    pivot_of.push_back(piv);
    chosen.push_back(r);
  }
  return chosen;
}

// Fraction-free elimination; returns nullspace basis in the canonical form
// described on SolutionSpace and the pivot columns.
std::vector<std::vector<Rat>> bareiss_nullspace(Matrix a, std::size_t cols, std::vector<std::size_t>* pivots_out) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = k; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    std::swap(a[k], a[best]);
    const Int& p = a[k][col];
    Int tmp;
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Int f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // a[i][j] = (p * a[i][j] - f * a[k][j]) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    pivots.push_back(col);
    ++k;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      Rat acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (v[j] != 0 && a[r][j] != 0) acc += Rat(a[r][j]) * v[j];
      v[pc] = -acc / Rat(a[r][pc]);
    }
    Int num = 0, den = 1;
    for (const auto& e : v) {
      num = gcd(num, e.get_num());
      den = lcm(den, e.get_den());
    }
    Rat s(den, num);
    s.canonicalize();
    for (auto& e : v) e *= s;
    if (v[f] < 0)
      for (auto& e : v) e = -e;
    basis.push_back(std::move(v));
  }
  if (pivots_out) *pivots_out = std::move(pivots);
  return basis;
}

bool satisfies_matrix(const Matrix& m, const std::vector<Rat>& v) {
  for (const auto& row : m) {
    Rat acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0 && v[j] != 0) acc += Rat(row[j]) * v[j];
    if (acc != 0) return false;
  }
  return true;
}

// Nullspace of the integer matrix m with the given column count.
std::vector<std::vector<Rat>> integer_nullspace(const Matrix& m, std::size_t cols, std::vector<std::size_t>* pivots) {
  const std::vector<std::size_t> sel = independent_rows_modp(m, cols);
  if (sel.size() == cols) {
    // Full column rank modulo p implies full column rank over Q.
    if (pivots) {
      pivots->clear();
      for (std::size_t c = 0; c < cols; ++c) pivots->push_back(c);
    }
    return {};
  }
  Matrix sub;
  sub.reserve(sel.size());
  for (auto r : sel) sub.push_back(m[r]);
  auto basis = bareiss_nullspace(std::move(sub), cols, pivots);
  bool ok = true;
  for (const auto& v : basis)
    if (!satisfies_matrix(m, v)) {
      ok = false;
      break;
    }
  if (ok) return basis;
  return bareiss_nullspace(m, cols, pivots);
}

Matrix to_integer_matrix(const LinSystem& sys, bool with_rhs) {
  const std::size_t cols = sys.num_unknowns() + (with_rhs ? 1 : 0);
  Matrix m;
  m.reserve(sys.rows().size());
  for (std::size_t r = 0; r < sys.rows().size(); ++r) {
    const auto& row = sys.rows()[r];
    Int den = 1;
    for (const auto& e : row) den = lcm(den, e.second.get_den());
    if (with_rhs) den = lcm(den, sys.rhs()[r].get_den());
    std::vector<Int> dense(cols);
    bool nonzero = false;
    for (const auto& [col, coef] : row) {
      dense[col] = coef.get_num() * (den / coef.get_den());
      nonzero = true;
    }
    if (with_rhs && sys.rhs()[r] != 0) {
      const Rat& b = sys.rhs()[r];
      dense[cols - 1] = -b.get_num() * (den / b.get_den());
      nonzero = true;
    }
    if (nonzero) m.push_back(std::move(dense));
  }
  return m;
}

}  // namespace

SolutionSpace nullspace(const LinSystem& sys) {
  SolutionSpace out;
  out.basis = integer_nullspace(to_integer_matrix(sys, false), sys.num_unknowns(), nullptr);
  return out;
}

SolutionSpace solve_linear(const LinSystem& sys) {
  if (sys.homogeneous()) {
    SolutionSpace out = nullspace(sys);
    out.particular = std::vector<Rat>(sys.num_unknowns());
    return out;
  }
  const std::size_t n = sys.num_unknowns();
  std::vector<std::size_t> pivots;
  auto ext = integer_nullspace(to_integer_matrix(sys, true), n + 1, &pivots);
  SolutionSpace out;
  if (std::find(pivots.begin(), pivots.end(), n) != pivots.end()) {
    out.consistent = false;
    return out;
  }
  for (auto& v : ext) {
    const Rat last = v[n];
    v.pop_back();
    if (last == 0) {
      out.basis.push_back(std::move(v));
    } else {
      for (auto& e : v) e /= last;
      out.particular = std::move(v);
    }
  }
  return out;
}

std::optional<std::vector<RatFunc>> solve_over_rf(const std::vector<std::vector<UPoly>>& columns,
                                                  const std::vector<UPoly>& target) {
  const std::size_t ncols = columns.size();
  const std::size_t nrows = target.size();
  for (const auto& c : columns)
    if (c.size() != nrows) throw std::invalid_argument("solve_over_rf: column length mismatch");
  // Augmented matrix over Q(x), eliminated with polynomial entries kept
  // fraction-free in the style of Bareiss (division by the previous pivot
  // is exact in Q[x]).
  std::vector<std::vector<UPoly>> a(nrows, std::vector<UPoly>(ncols + 1));
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) a[i][j] = columns[j][i];
    a[i][ncols] = target[i];
  }
  std::vector<std::size_t> pivots;
  UPoly prev(1);
  std::size_t k = 0;
  for (std::size_t col = 0; col < ncols && k < nrows; ++col) {
    std::size_t best = nrows;
    for (std::size_t i = k; i < nrows; ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == nrows || a[i][col].degree() < a[best][col].degree()) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[k], a[best]);
    const UPoly p = a[k][col];
    for (std::size_t i = k + 1; i < nrows; ++i) {
      const UPoly f = a[i][col];
      for (std::size_t j = col + 1; j <= ncols; ++j) {
        UPoly v = p * a[i][j];
        if (!f.is_zero() && !a[k][j].is_zero()) v -= f * a[k][j];
        a[i][j] = v / prev;
      }
      a[i][col] = UPoly();
    }
    prev = p;
    pivots.push_back(col);
    ++k;
  }
  for (std::size_t i = k; i < nrows; ++i)
    if (!a[i][ncols].is_zero()) return std::nullopt;
  std::vector<RatFunc> sol(ncols);
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    RatFunc acc(a[r][ncols]);
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (!a[r][j].is_zero() && !sol[j].is_zero()) acc = acc - RatFunc(a[r][j]) * sol[j];
    sol[pc] = acc / RatFunc(a[r][pc]);
  }
  return sol;
}

}  // namespace abelred
