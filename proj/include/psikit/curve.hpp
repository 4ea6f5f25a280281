#ifndef PSIKIT_CURVE_HPP
#define PSIKIT_CURVE_HPP

#include <string>
#include <vector>

#include "psikit/mpoly.hpp"

namespace psikit {

// A plane curve over Q: affine input is stored alongside its homogenization.
struct PlaneCurve {
  Poly3 proj;        // homogeneous in (x, y, z)
  int degree = 0;
  bool affine_input = false;
  bool squarefree = false;

  Poly2 affine() const { return dehomogenize(proj, Chart::z); }

  static PlaneCurve from_affine(const Poly2& f);
  static PlaneCurve from_projective(const Poly3& F);
};

// Parse "y^2 - x^3" (affine, variables x,y) or a homogeneous expression in
// x,y,z (projective).
PlaneCurve parse_curve_affine(const std::string& text);
PlaneCurve parse_curve_projective(const std::string& text);

// A point of P^2 with integer homogeneous coordinates, gcd 1, first nonzero
// coordinate positive.
struct ProjPoint {
  Int x, y, z;
  std::string str() const;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b);
};

ProjPoint make_proj_point(const Rat& x, const Rat& y, const Rat& z);

}  // namespace psikit

#endif
