#include "psikit/curve.hpp"

#include <sstream>

namespace psikit {

PlaneCurve PlaneCurve::from_affine(const Poly2& f) {
  if (f.is_zero()) throw Error(ErrorKind::invalid_input, "zero polynomial");
  PlaneCurve c;
  c.degree = f.total_degree();
  c.proj = homogenize(f, c.degree);
  c.affine_input = true;
  c.squarefree = is_squarefree(f);
  return c;
}

PlaneCurve PlaneCurve::from_projective(const Poly3& F) {
  if (F.is_zero()) throw Error(ErrorKind::invalid_input, "zero polynomial");
  if (!F.is_homogeneous())
    throw Error(ErrorKind::invalid_input, "projective input must be homogeneous");
  PlaneCurve c;
  c.proj = F;
  c.degree = F.total_degree();
  c.affine_input = false;
  // Squarefree test in a chart where the curve keeps its full degree; the
  // line at infinity may be a component, so check a chart that sees it.
  Poly2 fz = dehomogenize(F, Chart::z);
  Poly2 fy = dehomogenize(F, Chart::y);
  Poly2 fx = dehomogenize(F, Chart::x);
  c.squarefree = (fz.is_zero() || is_squarefree(fz)) && (fy.is_zero() || is_squarefree(fy)) &&
                 (fx.is_zero() || is_squarefree(fx));
  return c;
}

PlaneCurve parse_curve_affine(const std::string& text) {
  Poly3 p = parse_poly(text, {"x", "y"});
  return PlaneCurve::from_affine(dehomogenize(p, Chart::z));
}

PlaneCurve parse_curve_projective(const std::string& text) {
  Poly3 p = parse_poly(text, {"x", "y", "z"});
  return PlaneCurve::from_projective(p);
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "(" << x.str() << ":" << y.str() << ":" << z.str() << ")";
  return os.str();
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

ProjPoint make_proj_point(const Rat& x, const Rat& y, const Rat& z) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (x.is_zero() && y.is_zero() && z.is_zero())
    throw Error(ErrorKind::invalid_input, "(0:0:0) is not a projective point");
  Int den = lcm(lcm(x.den(), y.den()), z.den());
  Int a = x.num() * (den / x.den());
  Int b = y.num() * (den / y.den());
  Int c = z.num() * (den / z.den());
  Int g = gcd(gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  Int lead = (a != 0) ? a : (b != 0) ? b : c;
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return ProjPoint{a, b, c};
}

}  // namespace psikit
