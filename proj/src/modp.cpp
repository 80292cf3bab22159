#include "modp.hpp"

#include <algorithm>

namespace abelred::detail {

u64 ModP::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p_;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

u64 ModP::reduce(const Int& v) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PolyP ModP::trim(PolyP a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PolyP ModP::add(const PolyP& a, const PolyP& b) const {
  PolyP c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = add(c[i], b[i]);
  return trim(std::move(c));
}

PolyP ModP::sub(const PolyP& a, const PolyP& b) const {
  PolyP c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub(c[i], b[i]);
  return trim(std::move(c));
}

PolyP ModP::mul(const PolyP& a, const PolyP& b) const {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  }
  return trim(std::move(c));
}

PolyP ModP::scale(const PolyP& a, u64 s) const {
  PolyP c(a);
  for (auto& v : c) v = mul(v, s);
  return trim(std::move(c));
}

void ModP::divmod(const PolyP& a, const PolyP& b, PolyP* q, PolyP* r) const {
  PolyP rr = a;
  const int db = degree(b);
  PolyP qq(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const u64 inv_lc = inv(b.back());
  for (int k = degree(a) - db; k >= 0; --k) {
    u64 f = mul(rr[static_cast<std::size_t>(k + db)], inv_lc);
    qq[static_cast<std::size_t>(k)] = f;
    if (!f) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rr[static_cast<std::size_t>(k + j)];
      slot = sub(slot, mul(f, b[static_cast<std::size_t>(j)]));
    }
  }
  if (db >= 0 && rr.size() > static_cast<std::size_t>(db)) rr.resize(static_cast<std::size_t>(db));
  if (q) *q = trim(std::move(qq));
  if (r) *r = trim(std::move(rr));
}

PolyP ModP::rem(const PolyP& a, const PolyP& b) const {
  PolyP r;
  divmod(a, b, nullptr, &r);
  return r;
}

PolyP ModP::quo(const PolyP& a, const PolyP& b) const {
  PolyP q;
  divmod(a, b, &q, nullptr);
  return q;
}

PolyP ModP::monic(const PolyP& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

PolyP ModP::gcd(PolyP a, PolyP b) const {
  while (!b.empty()) {
    PolyP r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

PolyP ModP::ext_gcd(const PolyP& a, const PolyP& b, PolyP* s, PolyP* t) const {
  PolyP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    PolyP q, r;
    divmod(r0, r1, &q, &r);
    PolyP sn = sub(s0, mul(q, s1));
    PolyP tn = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(sn);
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  u64 inv_lc = inv(r0.back());
  if (s) *s = scale(s0, inv_lc);
  if (t) *t = scale(t0, inv_lc);
  return scale(r0, inv_lc);
}

PolyP ModP::derivative(const PolyP& a) const {
  if (a.size() <= 1) return {};
  PolyP d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p_);
  return trim(std::move(d));
}

PolyP ModP::powmod(const PolyP& base, const Int& e, const PolyP& m) const {
  PolyP result{1};
  PolyP b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

std::vector<PolyP> ModP::equal_degree(const PolyP& f, int d, std::mt19937_64& rng) const {
  const int n = degree(f);
  if (n == d) return {f};
  Int pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p_, static_cast<unsigned long>(d));
  const Int e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p_ - 1);
  while (true) {
    PolyP a(static_cast<std::size_t>(n));
    for (auto& v : a) v = dist(rng);
    a = trim(std::move(a));
    if (degree(a) < 1) continue;
    PolyP g = gcd(f, a);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(quo(f, g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    PolyP b = sub(powmod(a, e, f), PolyP{1});
    g = gcd(f, b);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(quo(f, g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<PolyP> ModP::factor_squarefree(const PolyP& f_in, std::mt19937_64& rng) const {
  std::vector<PolyP> out;
  PolyP f = monic(f_in);
  if (degree(f) <= 0) return out;
  // Distinct-degree split.
  PolyP h{0, 1};
  const PolyP x{0, 1};
  int i = 0;
  while (degree(f) >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, Int(static_cast<unsigned long>(p_)), f);
    PolyP g = gcd(f, sub(h, x));
    if (degree(g) > 0) {
      auto parts = equal_degree(g, i, rng);
      out.insert(out.end(), parts.begin(), parts.end());
      f = quo(f, g);
      h = rem(h, f);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PolyP& a, const PolyP& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace abelred::detail
