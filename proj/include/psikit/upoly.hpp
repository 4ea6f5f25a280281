#ifndef PSIKIT_UPOLY_HPP
#define PSIKIT_UPOLY_HPP

#include <map>
#include <vector>

#include "psikit/rat.hpp"

namespace psikit {

// Dense univariate polynomial over the rationals; coeffs[i] is the
// coefficient of t^i, leading coefficient nonzero (empty vector = 0).
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rat& r) { return UPoly({r}); }
  static UPoly variable() { return UPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& lc() const { return c_.back(); }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const Rat& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  // Euclidean division; remainder returned, quotient optional out-param.
  UPoly mod(const UPoly& div, UPoly* quotient = nullptr) const;
  // Exact division; throws if not divisible.
  UPoly divide_exact(const UPoly& div) const;
  // Divide out (t - root) once; throws if root is not a root.
  UPoly deflate(const Rat& root) const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);

// Squarefree part (product of distinct irreducible factors).
UPoly squarefree_part(const UPoly& a);

// Yun decomposition: a = lc * prod of s_i^i with s_i squarefree, pairwise
// coprime; returns the list of (s_i, i) with deg s_i > 0.
std::vector<std::pair<UPoly, int>> yun_squarefree(const UPoly& a);

// All rational roots with multiplicities, plus the residual factor degrees:
// for each squarefree-power level i whose factor retains roots outside Q,
// (i, remaining degree) is reported.
struct RootReport {
  std::map<Rat, int> rational;                     // root -> multiplicity
  std::vector<std::pair<int, int>> irrational;     // (multiplicity, degree)
};
RootReport rational_roots(const UPoly& a);

// Resultant of two rational univariate polynomials.
Rat resultant(const UPoly& a, const UPoly& b);

}  // namespace psikit

#endif
