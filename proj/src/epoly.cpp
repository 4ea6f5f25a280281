#include "psikit/epoly.hpp"

#include <array>
#include <ostream>
#include <sstream>

namespace psikit {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

EPoly EPoly::monomial(int i, int j, const Int& c) {
  EPoly p;
  p.add_term(i, j, c);
  return p;
}

Int EPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Int(0) : it->second;
}

void EPoly::add_term(int i, int j, const Int& c) {
  if (c == 0) return;
  if (i < 0 || j < 0)
    throw Error(ErrorKind::invalid_input, "EPoly exponents must be nonnegative");
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(Key{i, j}, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EPoly EPoly::operator-() const {
  EPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

EPoly EPoly::operator*(const Int& c) const {
  EPoly r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

EPoly EPoly::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::invalid_input, "negative power");
  EPoly r(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool EPoly::is_symmetric() const {
  for (const auto& [k, c] : terms_)
    if (coeff(k.second, k.first) != c) return false;
  return true;
}

std::string EPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && (k.first != 0 || k.second != 0);
    if (!unit) os << a.str();
    auto var = [&os, &unit](const char* name, int e) {
      if (e == 0) return;
      if (!unit) os << "*";
      unit = false;
      os << name;
      if (e > 1) os << "^" << e;
    };
    var("u", k.first);
    var("v", k.second);
  }
  return os.str();
}

std::vector<std::array<Int, 3>> EPoly::triples() const {
  std::vector<std::array<Int, 3>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({Int(k.first), Int(k.second), c});
  return out;
}

EPoly EPoly::from_triples(const std::vector<std::array<Int, 3>>& ts) {
  EPoly p;
  for (const auto& t : ts) {
    if (t[0] < 0 || t[0] > 1'000'000 || t[1] < 0 || t[1] > 1'000'000)
      throw Error(ErrorKind::invalid_input, "EPoly exponent out of range");
    p.add_term(static_cast<int>(t[0]), static_cast<int>(t[1]), t[2]);
  }
  return p;
}

void MTClass::add_term(int k, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MTClass MTClass::operator-() const {
  MTClass r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

MTClass& MTClass::operator+=(const MTClass& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MTClass& MTClass::operator-=(const MTClass& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MTClass operator*(const MTClass& a, const MTClass& b) {
  MTClass r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

MTClass MTClass::operator*(const Int& c) const {
  MTClass r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

Int MTClass::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool MTClass::is_symmetric() const {
  for (const auto& [k, c] : terms_) {
    auto it = terms_.find(-k);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string MTClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || k == 0) os << a.str();
    if (k != 0) {
      if (a != 1) os << "*";
      os << "u";
      if (k != 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::array<Int, 2>> MTClass::pairs() const {
  std::vector<std::array<Int, 2>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back({Int(k), c});
  return out;
}

MTClass MTClass::from_pairs(const std::vector<std::array<Int, 2>>& ps) {
  MTClass m;
  for (const auto& p : ps) {
    if (p[0] < -1'000'000 || p[0] > 1'000'000)
      throw Error(ErrorKind::invalid_input, "MTClass exponent out of range");
    m.add_term(static_cast<int>(p[0]), p[1]);
  }
  return m;
}

EPoly std_class(StdKind kind, long long param) {
  if (param < 0 && kind != StdKind::point)
    throw Error(ErrorKind::invalid_input, "std_class parameter must be nonnegative");
  const EPoly L = EPoly::lefschetz();
  switch (kind) {
    case StdKind::affine:
      return L.pow(static_cast<int>(param));
    case StdKind::torus:
      return EPoly::torus_class().pow(static_cast<int>(param));
    case StdKind::proj: {
      EPoly s;
      for (long long i = 0; i <= param; ++i) s += L.pow(static_cast<int>(i));
      return s;
    }
    case StdKind::curve: {
      EPoly c(1);
      c.add_term(1, 0, Int(-param));
      c.add_term(0, 1, Int(-param));
      c.add_term(1, 1, Int(1));
      return c;
    }
    case StdKind::point:
      return EPoly(1);
  }
  throw Error(ErrorKind::invalid_input, "unknown std_class kind");
}

Int euler(const EPoly& a) {
  Int s = 0;
  for (const auto& [k, c] : a.terms()) s += c;
  return s;
}

MTClass mod_torus(const EPoly& a) {
  MTClass m;
  for (const auto& [k, c] : a.terms()) m.add_term(k.first - k.second, c);
  return m;
}

}  // namespace psikit
