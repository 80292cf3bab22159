#include "abelred/upoly.hpp"

#include "heugcd.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abelred {

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(int degree, const Rat& coef) {
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coef;
  return UPoly(std::move(c));
}

UPoly UPoly::linear_root(const Rat& a) { return UPoly({-a, Rat(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat UPoly::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::scaled(const Rat& s) const {
  if (s == 0) return {};
  UPoly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

UPoly UPoly::taylor_shift(const Rat& shift) const {
  // Horner in the shifted variable.
  UPoly acc;
  const UPoly lin({shift, Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

UPoly UPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Rat> c(static_cast<std::size_t>(k), Rat(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return UPoly(std::move(c));
}

UPoly UPoly::truncated(int n) const {
  if (n <= 0) return {};
  if (degree() < n) return *this;
  return UPoly(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat inv = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat f = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

Rat content(const UPoly& p) {
  if (p.is_zero()) return 0;
  Int num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rat out(num, den);
  out.canonicalize();
  if (p.leading() < 0) out = -out;
  return out;
}

UPoly primitive(const UPoly& p) {
  if (p.is_zero()) return {};
  return p.scaled(1 / content(p));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly(1);
  if (auto h = detail::heu_gcd_uni(detail::to_int_poly(a).first, detail::to_int_poly(b).first))
    return detail::to_upoly(*h).monic();
  // Euclid on primitive parts keeps coefficient growth moderate.
  UPoly r0 = primitive(a), r1 = primitive(b);
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    UPoly r = primitive(r0 % r1);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return r0.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * (b / gcd(a, b))).monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    UPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
  Rat inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  ExtGcd e = ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw std::domain_error("polynomial not invertible modulo modulus");
  return e.s % m;
}

UPoly series_inverse(const UPoly& a, int n) {
  if (a.coeff(0) == 0) throw std::domain_error("series_inverse: zero constant term");
  // Newton iteration b <- b(2 - a b).
  UPoly b(1 / a.coeff(0));
  int prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    UPoly ab = (a.truncated(prec) * b).truncated(prec);
    b = (b * (UPoly(2) - ab)).truncated(prec);
  }
  return b;
}

RatFunc::RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  Rat lc = den_.leading();
  num_ = num_.scaled(1 / lc);
  den_ = den_.scaled(1 / lc);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace abelred

namespace abelred {
std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }
}  // namespace abelred
