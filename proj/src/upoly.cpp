#include "psikit/upoly.hpp"

#include <algorithm>

namespace psikit {

UPoly UPoly::operator-() const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return UPoly(std::move(r));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& s) const {
  if (s.is_zero()) return UPoly();
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return UPoly(std::move(r));
}

Rat UPoly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return UPoly();
  return *this * lc().inverse();
}

UPoly UPoly::mod(const UPoly& div, UPoly* quotient) const {
  if (div.is_zero()) throw Error(ErrorKind::invalid_input, "division by zero polynomial");
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo;
  const int dd = div.degree();
  if (quotient && degree() >= dd) quo.assign(degree() - dd + 1, Rat(0));
  Rat inv = div.lc().inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rat f = rem[i] * inv;
    if (quotient) quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * div.c_[j];
  }
  if (quotient) *quotient = UPoly(std::move(quo));
  return UPoly(std::move(rem));
}

UPoly UPoly::divide_exact(const UPoly& div) const {
  UPoly q;
  UPoly r = mod(div, &q);
  if (!r.is_zero()) throw Error(ErrorKind::invalid_input, "inexact polynomial division");
  return q;
}

UPoly UPoly::deflate(const Rat& root) const {
  UPoly lin({-root, Rat(1)});
  return divide_exact(lin);
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.mod(y);
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.is_zero() ? a : UPoly::constant(Rat(1));
  UPoly g = upoly_gcd(a, a.derivative());
  if (g.degree() <= 0) return a.monic();
  return a.divide_exact(g).monic();
}

std::vector<std::pair<UPoly, int>> yun_squarefree(const UPoly& a) {
  std::vector<std::pair<UPoly, int>> out;
  if (a.degree() <= 0) return out;
  UPoly f = a.monic();
  UPoly fp = f.derivative();
  UPoly g = upoly_gcd(f, fp);
  UPoly w = f.divide_exact(g);
  UPoly y = fp.divide_exact(g);
  int i = 1;
  while (w.degree() > 0) {
    UPoly z = y - w.derivative();
    UPoly s = upoly_gcd(w, z);
    if (s.degree() > 0) out.emplace_back(s, i);
    w = w.divide_exact(s);
    y = z.divide_exact(s);
    ++i;
  }
  return out;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> divs;
  if (n == 0) return divs;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

// Rational roots of a squarefree polynomial via the rational root theorem.
std::vector<Rat> rational_roots_squarefree(const UPoly& f) {
  std::vector<Rat> roots;
  if (f.degree() <= 0) return roots;
  UPoly g = f;
  // Clear denominators and content.
  Int den = 1;
  for (const auto& c : f.coeffs()) den = boost::multiprecision::lcm(den, c.den());
  std::vector<Int> ic(f.coeffs().size());
  Int content = 0;
  for (size_t i = 0; i < ic.size(); ++i) {
    ic[i] = f.coeffs()[i].num() * (den / f.coeffs()[i].den());
    content = boost::multiprecision::gcd(content, ic[i]);
  }
  if (content > 1)
    for (auto& c : ic) c /= content;
  // Strip t = 0 root.
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= ic.size()) return roots;
  Int a0 = ic[low];
  Int an = ic.back();
  for (const Int& p : positive_divisors(a0)) {
    for (const Int& q : positive_divisors(an)) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        if (f.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

RootReport rational_roots(const UPoly& a) {
  RootReport rep;
  if (a.degree() <= 0) return rep;
  for (const auto& [factor, mult] : yun_squarefree(a)) {
    UPoly residue = factor;
    for (const Rat& r : rational_roots_squarefree(factor)) {
      rep.rational[r] = mult;
      residue = residue.deflate(r);
    }
    if (residue.degree() > 0) rep.irrational.emplace_back(mult, residue.degree());
  }
  return rep;
}

Rat resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  if (a.degree() == 0) {
    Rat r(1);
    for (int i = 0; i < b.degree(); ++i) r *= a.lc();
    return r;
  }
  if (b.degree() == 0) {
    Rat r(1);
    for (int i = 0; i < a.degree(); ++i) r *= b.lc();
    return r;
  }
  UPoly r = a.mod(b);
  if (r.is_zero()) return Rat(0);
  Rat sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rat(-1) : Rat(1);
  Rat lead(1);
  for (int i = 0; i < a.degree() - r.degree(); ++i) lead *= b.lc();
  return sign * lead * resultant(b, r);
}

}  // namespace psikit
