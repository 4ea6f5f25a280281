#include "psikit/mpoly.hpp"

#include <cctype>
#include <vector>

namespace psikit {

Poly2 blowup_chart_a(const Poly2& f, int m) {
  Poly2 r;
  for (const auto& [k, c] : f.terms()) {
    int i = k[0] + k[1] - m;
    if (i < 0) throw Error(ErrorKind::invalid_input, "blowup_chart_a: order below m");
    r.add_term({i, k[1]}, c);
  }
  return r;
}

Poly2 blowup_chart_b(const Poly2& f, int m) {
  Poly2 r;
  for (const auto& [k, c] : f.terms()) {
    int j = k[0] + k[1] - m;
    if (j < 0) throw Error(ErrorKind::invalid_input, "blowup_chart_b: order below m");
    r.add_term({k[0], j}, c);
  }
  return r;
}

namespace {

// Rows of Pascal's triangle as rationals, cached per call site scale.
std::vector<Rat> binomial_row(int n) {
  std::vector<Rat> row(n + 1, Rat(1));
  for (int k = 1; k < n; ++k) row[k] = row[k - 1] * Rat(Int(n - k + 1), Int(k));
  return row;
}

}  // namespace

Poly2 shift(const Poly2& f, const Rat& a, const Rat& b) {
  Poly2 r;
  for (const auto& [k, c] : f.terms()) {
    auto bi = binomial_row(k[0]);
    auto bj = binomial_row(k[1]);
    Rat apow(1);
    for (int s = 0; s <= k[0]; ++s) {  // (x+a)^i = sum C(i,s) a^{i-s} x^s, from s=i down
      Rat bpow(1);
      for (int t = 0; t <= k[1]; ++t) {
        Rat coef = c * bi[s] * bj[t];
        // a^{i-s} and b^{j-t} factors
        Rat av(1), bv(1);
        for (int q = 0; q < k[0] - s; ++q) av *= a;
        for (int q = 0; q < k[1] - t; ++q) bv *= b;
        r.add_term({s, t}, coef * av * bv);
      }
    }
  }
  return r;
}

Poly2 shear_x(const Poly2& f, const Rat& s) {
  Poly2 r;
  for (const auto& [k, c] : f.terms()) {
    auto bi = binomial_row(k[0]);
    for (int t = 0; t <= k[0]; ++t) {  // x^i -> sum C(i,t) x^t (s y)^{i-t}
      Rat sv(1);
      for (int q = 0; q < k[0] - t; ++q) sv *= s;
      r.add_term({t, k[1] + k[0] - t}, c * bi[t] * sv);
    }
  }
  return r;
}

UPoly restrict_x0(const Poly2& f) {
  std::vector<Rat> c;
  for (const auto& [k, v] : f.terms()) {
    if (k[0] != 0) continue;
    if (static_cast<int>(c.size()) <= k[1]) c.resize(k[1] + 1, Rat(0));
    c[k[1]] = v;
  }
  return UPoly(std::move(c));
}

UPoly restrict_y0(const Poly2& f) {
  std::vector<Rat> c;
  for (const auto& [k, v] : f.terms()) {
    if (k[1] != 0) continue;
    if (static_cast<int>(c.size()) <= k[0]) c.resize(k[0] + 1, Rat(0));
    c[k[0]] = v;
  }
  return UPoly(std::move(c));
}

UPoly upoly_at(const Poly2& f, const Rat& x0) {
  std::vector<Rat> c;
  for (const auto& [k, v] : f.terms()) {
    Rat xv(1);
    for (int q = 0; q < k[0]; ++q) xv *= x0;
    if (static_cast<int>(c.size()) <= k[1]) c.resize(k[1] + 1, Rat(0));
    c[k[1]] += v * xv;
  }
  return UPoly(std::move(c));
}

namespace {

// View a bivariate polynomial as a polynomial in y with UPoly-in-x coefficients.
std::vector<UPoly> as_y_poly(const Poly2& f) {
  std::vector<UPoly> out;
  int dy = 0;
  for (const auto& [k, c] : f.terms()) dy = std::max(dy, k[1]);
  std::vector<std::vector<Rat>> rows(dy + 1);
  for (const auto& [k, c] : f.terms()) {
    auto& row = rows[k[1]];
    if (static_cast<int>(row.size()) <= k[0]) row.resize(k[0] + 1, Rat(0));
    row[k[0]] = c;
  }
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Poly2 from_y_poly(const std::vector<UPoly>& ys) {
  Poly2 out;
  for (size_t j = 0; j < ys.size(); ++j)
    for (int i = 0; i <= ys[j].degree(); ++i)
      out.add_term({i, static_cast<int>(j)}, ys[j].coeff(i));
  return out;
}

UPoly content_y(const std::vector<UPoly>& ys) {
  UPoly g;
  for (const auto& c : ys) g = upoly_gcd(g, c);
  return g;
}

std::vector<UPoly> divide_coeffs(const std::vector<UPoly>& ys, const UPoly& d) {
  std::vector<UPoly> out;
  out.reserve(ys.size());
  for (const auto& c : ys) out.push_back(c.is_zero() ? c : c.divide_exact(d));
  return out;
}

// Pseudo-remainder of a by b in (Q[x])[y].
std::vector<UPoly> pseudo_rem(std::vector<UPoly> a, const std::vector<UPoly>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  auto deg = [](const std::vector<UPoly>& p) { return static_cast<int>(p.size()) - 1; };
  while (deg(a) >= db && !a.empty()) {
    int da = deg(a);
    UPoly la = a.back();
    // a = lb * a - la * y^{da-db} * b
    std::vector<UPoly> next(a.size());
    for (int i = 0; i <= da; ++i) next[i] = a[i] * lb;
    for (int i = 0; i <= db; ++i) next[i + da - db] = next[i + da - db] - b[i] * la;
    next.pop_back();
    while (!next.empty() && next.back().is_zero()) next.pop_back();
    a = std::move(next);
  }
  return a;
}

}  // namespace

Poly2 poly2_gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto ya = as_y_poly(a);
  auto yb = as_y_poly(b);
  UPoly ca = content_y(ya), cb = content_y(yb);
  UPoly cont = upoly_gcd(ca, cb);
  std::vector<UPoly> pa = divide_coeffs(ya, ca);
  std::vector<UPoly> pb = divide_coeffs(yb, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    auto r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
      break;
    }
    UPoly cr = content_y(r);
    pb = divide_coeffs(r, cr);
  }
  std::vector<UPoly> g;
  if (pb.empty()) {
    g = pa;  // pa is the primitive gcd
  } else {
    g = {UPoly::constant(Rat(1))};  // coprime in y
  }
  // Multiply by the content gcd and normalize the leading coefficient.
  Poly2 result = from_y_poly(g);
  Poly2 contp;
  for (int i = 0; i <= cont.degree(); ++i) contp.add_term({i, 0}, cont.coeff(i));
  result = result * contp;
  if (!result.is_zero()) {
    // Make the leading term (in lex order) have coefficient 1.
    result = result * result.terms().rbegin()->second.inverse();
  }
  return result;
}

bool is_squarefree(const Poly2& f) {
  if (f.is_zero()) return false;
  Poly2 g = poly2_gcd(f, f.derivative(0));
  g = poly2_gcd(g, f.derivative(1));
  return g.total_degree() == 0;
}

Poly3 homogenize(const Poly2& f, int d) {
  Poly3 r;
  for (const auto& [k, c] : f.terms()) {
    int rem = d - k[0] - k[1];
    if (rem < 0) throw Error(ErrorKind::invalid_input, "homogenize: degree too small");
    r.add_term({k[0], k[1], rem}, c);
  }
  return r;
}

Poly2 dehomogenize(const Poly3& f, Chart chart) {
  Poly2 r;
  for (const auto& [k, c] : f.terms()) {
    switch (chart) {
      case Chart::z: r.add_term({k[0], k[1]}, c); break;
      case Chart::y: r.add_term({k[0], k[2]}, c); break;
      case Chart::x: r.add_term({k[1], k[2]}, c); break;
    }
  }
  return r;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::invalid_input,
                "polynomial parse error at position " + std::to_string(pos) + ": " + msg);
  }

  Int read_nat() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }

  Poly3 parse_expr() {
    Poly3 v = parse_term();
    while (true) {
      if (eat('+'))
        v += parse_term();
      else if (eat('-'))
        v -= parse_term();
      else
        return v;
    }
  }

  Poly3 parse_term() {
    Poly3 v = parse_factor();
    while (eat('*')) v = v * parse_factor();
    return v;
  }

  Poly3 parse_factor() {
    Poly3 base = parse_atom();
    while (eat('^')) {
      Int e = read_nat();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Poly3 parse_atom() {
    skip_ws();
    if (eat('-')) return -parse_factor();
    if (eat('(')) {
      Poly3 v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = read_nat();
      // A '/' right after a literal makes a rational literal.
      if (eat('/')) {
        Int den = read_nat();
        if (den == 0) fail("zero denominator");
        return Poly3::constant(Rat(num, den));
      }
      return Poly3::constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string name = s.substr(start, pos - start);
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Poly3::variable(static_cast<int>(i));
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

Poly3 parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  Parser p{text, 0, vars};
  Poly3 v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace psikit
