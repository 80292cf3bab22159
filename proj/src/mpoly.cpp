#include "abelred/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelred {

MPoly::MPoly(std::size_t nvars, const Rat& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exponent(nvars, 0), c);
}

MPoly MPoly::var(std::size_t nvars, std::size_t i) {
  MPoly out(nvars);
  Exponent e(nvars, 0);
  e[i] = 1;
  out.terms_.emplace(std::move(e), 1);
  return out;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(std::size_t v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::vector<std::size_t> MPoly::variables() const {
  std::vector<bool> seen(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::scaled(const Rat& s) const {
  MPoly out(nvars_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * s);
  return out;
}

MPoly MPoly::monic() const { return is_zero() ? *this : scaled(1 / leading_coeff()); }

MPoly MPoly::mul_term(const Exponent& m, const Rat& k) const {
  MPoly out(nvars_);
  if (k == 0) return out;
  for (const auto& [e, c] : terms_) {
    Exponent s(e);
    for (std::size_t i = 0; i < nvars_; ++i) s[i] += m[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(s), c * k);
  }
  return out;
}

MPoly MPoly::subs(std::size_t v, const Rat& value) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent s(e);
    Rat k = c;
    for (int i = 0; i < e[v]; ++i) k *= value;
    s[v] = 0;
    out.add_term(s, k);
  }
  return out;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat k = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int j = 0; j < e[i]; ++j) k *= point[i];
    acc += k;
  }
  return acc;
}

UPoly MPoly::as_univariate(std::size_t v) const {
  std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_in(v), 0)) + 1);
  for (const auto& [e, k] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != v && e[i] != 0) throw std::invalid_argument("MPoly::as_univariate: other variables present");
    c[static_cast<std::size_t>(e[v])] += k;
  }
  return UPoly(std::move(c));
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [e, c] : b.terms_) out += a.mul_term(e, c);
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rat a = abs(c);
    std::string term = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace abelred
