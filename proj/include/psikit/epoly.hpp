#ifndef PSIKIT_EPOLY_HPP
#define PSIKIT_EPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "psikit/rat.hpp"

namespace psikit {

class MTClass;

// Two-variable E-polynomial: the computable homomorphic image of a
// Grothendieck-ring class used throughout.  Exponents are nonnegative; no
// zero coefficient is ever stored.  Classes with equal E-polynomials are
// indistinguishable here.
class EPoly {
public:
  using Key = std::pair<int, int>;  // (exponent of u, exponent of v)

  EPoly() = default;
  EPoly(long long c) { add_term(0, 0, Int(c)); }  // NOLINT: constants are classes
  EPoly(const Int& c) { add_term(0, 0, c); }

  static EPoly monomial(int i, int j, const Int& c);
  // The Lefschetz class L = [A^1] = uv and the torus class T = L - 1.
  static EPoly lefschetz() { return monomial(1, 1, 1); }
  static EPoly torus_class() { return monomial(1, 1, 1) - EPoly(1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coeff(int i, int j) const;

  void add_term(int i, int j, const Int& c);

  EPoly operator-() const;
  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  EPoly& operator*=(const EPoly& o) { return *this = *this * o; }
  EPoly operator*(const Int& c) const;
  EPoly pow(int n) const;

  friend bool operator==(const EPoly& a, const EPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }
  friend bool operator<(const EPoly& a, const EPoly& b) { return a.terms_ < b.terms_; }

  // Coefficient symmetry c_ij = c_ji; holds for every standard class.
  bool is_symmetric() const;

  std::string str() const;

  // Serialized form: [i, j, c] triples sorted lexicographically by (i, j).
  std::vector<std::array<Int, 3>> triples() const;
  static EPoly from_triples(const std::vector<std::array<Int, 3>>& ts);

private:
  std::map<Key, Int> terms_;
};

// Image of an E-polynomial under v = u^{-1}: Laurent polynomial in u.
// Represents classes in the mod-torus quotient; the torus class maps to 0.
class MTClass {
public:
  MTClass() = default;
  MTClass(long long c) { add_term(0, Int(c)); }  // NOLINT
  MTClass(const Int& c) { add_term(0, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  const std::map<int, Int>& terms() const { return terms_; }

  void add_term(int k, const Int& c);

  MTClass operator-() const;
  MTClass& operator+=(const MTClass& o);
  MTClass& operator-=(const MTClass& o);
  friend MTClass operator+(MTClass a, const MTClass& b) { return a += b; }
  friend MTClass operator-(MTClass a, const MTClass& b) { return a -= b; }
  friend MTClass operator*(const MTClass& a, const MTClass& b);
  MTClass operator*(const Int& c) const;

  friend bool operator==(const MTClass& a, const MTClass& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MTClass& a, const MTClass& b) { return !(a == b); }

  // Evaluation at u = 1; agrees with euler() of any preimage.
  Int evaluate_at_one() const;
  // Invariance under k -> -k; holds for images of standard classes.
  bool is_symmetric() const;

  std::string str() const;

  // Serialized form: [k, c] pairs sorted by k.
  std::vector<std::array<Int, 2>> pairs() const;
  static MTClass from_pairs(const std::vector<std::array<Int, 2>>& ps);

private:
  std::map<int, Int> terms_;
};

enum class StdKind { affine, torus, proj, curve, point };

// Standard classes: affine n -> (uv)^n, torus k -> (uv-1)^k,
// proj n -> sum (uv)^i, curve of genus g -> 1 - gu - gv + uv, point -> 1.
EPoly std_class(StdKind kind, long long param = 0);

// Topological Euler characteristic: evaluation at u = v = 1.
Int euler(const EPoly& a);

// Substitute v = u^{-1} and collect; a ring homomorphism killing the torus.
MTClass mod_torus(const EPoly& a);

}  // namespace psikit

#endif
