#ifndef PSIKIT_MPOLY_HPP
#define PSIKIT_MPOLY_HPP

#include <array>
#include <map>
#include <sstream>
#include <string>

#include "psikit/upoly.hpp"

namespace psikit {

// Sparse multivariate polynomial over the rationals.
template <int N>
class SparsePoly {
public:
  using Key = std::array<int, N>;

  SparsePoly() = default;
  static SparsePoly constant(const Rat& c) {
    SparsePoly p;
    p.add_term(Key{}, c);
    return p;
  }
  static SparsePoly variable(int v, int e = 1) {
    Key k{};
    k[v] = e;
    SparsePoly p;
    p.add_term(k, Rat(1));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }
  Rat coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Key& k, const Rat& c) {
    if (c.is_zero()) return;
    for (int e : k)
      if (e < 0) throw Error(ErrorKind::invalid_input, "negative exponent");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k;
        for (int i = 0; i < N; ++i) k[i] = ka[i] + kb[i];
        r.add_term(k, ca * cb);
      }
    return r;
  }
  SparsePoly operator*(const Rat& s) const {
    SparsePoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  SparsePoly pow(int n) const {
    if (n < 0) throw Error(ErrorKind::invalid_input, "negative power");
    SparsePoly r = constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int s = 0;
      for (int e : k) s += e;
      d = std::max(d, s);
    }
    return d;
  }

  // Multiplicity at the origin: minimal total degree of a term (-1 for 0).
  int order_at_origin() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int s = 0;
      for (int e : k) s += e;
      if (d < 0 || s < d) d = s;
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int s = 0;
      for (int e : k) s += e;
      if (d < 0) d = s;
      if (s != d) return false;
    }
    return true;
  }

  SparsePoly derivative(int v) const {
    SparsePoly r;
    for (const auto& [k, c] : terms_) {
      if (k[v] == 0) continue;
      Key kk = k;
      kk[v] -= 1;
      r.add_term(kk, c * Rat(Int(k[v])));
    }
    return r;
  }

  Rat eval(const std::array<Rat, N>& x) const {
    Rat out(0);
    for (const auto& [k, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < N; ++i)
        for (int e = 0; e < k[i]; ++e) t *= x[i];
      out += t;
    }
    return out;
  }

  std::string str(const std::array<const char*, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      Rat a = c;
      if (first) {
        if (a < Rat(0)) { os << "-"; a = -a; }
      } else {
        os << (a < Rat(0) ? " - " : " + ");
        if (a < Rat(0)) a = -a;
      }
      first = false;
      bool has_var = false;
      for (int e : k) has_var = has_var || e > 0;
      bool unit = (a == Rat(1)) && has_var;
      if (!unit) os << a.str();
      bool lead = unit;
      for (int i = 0; i < N; ++i) {
        if (k[i] == 0) continue;
        if (!lead) os << "*";
        lead = false;
        os << names[i];
        if (k[i] > 1) os << "^" << k[i];
      }
    }
    return os.str();
  }

private:
  std::map<Key, Rat> terms_;
};

using Poly2 = SparsePoly<2>;  // variables (x, y)
using Poly3 = SparsePoly<3>;  // variables (x, y, z)

// Chart substitutions for a point blow-up at the origin, with the exceptional
// factor x^m (chart A: (x,y) -> (x, x y)) or y^m (chart B: (x,y) -> (x y, y))
// divided out.  Requires every term to have total degree >= m.
Poly2 blowup_chart_a(const Poly2& f, int m);
Poly2 blowup_chart_b(const Poly2& f, int m);

// Translation (x, y) -> (x + a, y + b).
Poly2 shift(const Poly2& f, const Rat& a, const Rat& b);

// Shear x -> x + s*y (rational coordinate change, invertible).
Poly2 shear_x(const Poly2& f, const Rat& s);

// Restriction to a coordinate axis as a univariate polynomial.
UPoly restrict_x0(const Poly2& f);  // f(0, t)
UPoly restrict_y0(const Poly2& f);  // f(t, 0)

UPoly upoly_at(const Poly2& f, const Rat& x0);  // f(x0, t) in t

// Bivariate gcd over Q (primitive PRS).
Poly2 poly2_gcd(const Poly2& a, const Poly2& b);

// True iff f has no repeated factor (char 0: gcd(f, f_x, f_y) constant).
bool is_squarefree(const Poly2& f);

// Homogenize a bivariate polynomial with respect to z up to degree d.
Poly3 homogenize(const Poly2& f, int d);

enum class Chart { x = 0, y = 1, z = 2 };

// Set the chart variable to 1; remaining variables keep their cyclic order:
// chart z -> (x, y); chart y -> (x, z); chart x -> (y, z).
Poly2 dehomogenize(const Poly3& f, Chart chart);

// Parse an expression over the given variable names with integer/rational
// literals, + - * ^ and parentheses; anything else is rejected.
Poly3 parse_poly(const std::string& text, const std::vector<std::string>& vars);

}  // namespace psikit

#endif
