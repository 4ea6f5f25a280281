#ifndef PSIKIT_CHOW_HPP
#define PSIKIT_CHOW_HPP

#include <string>
#include <vector>

#include "psikit/resolve.hpp"

namespace psikit {

// An iterated blow-up of P^2 at k (possibly infinitely near) points, with the
// orthogonal basis H, e_1..e_k: intersection form diag(1, -1, ..., -1),
// c_1 = 3H - sum(e_i), c_2 = 3 + k.
struct SurfaceModel {
  int k = 0;
  int rank() const { return k + 1; }
};

// Integer divisor class in the basis (H, e_1..e_k).
using DivisorClass = std::vector<Int>;

// Chow class on the surface: multiples of [W], a divisor class, and a point
// part (rational so that weighted combinations stay exact).
struct ChowClass {
  Int top = 0;
  DivisorClass div;
  Rat pts = 0;
  friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

ChowClass zero_class(const SurfaceModel& s);
DivisorClass h_class(const SurfaceModel& s, const Int& mult = 1);

Int intersection_number(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

// c(TW) / prod(1 + D_k) `cap` [W], truncated to the surface.
ChowClass csm_complement(const SurfaceModel& s, const std::vector<DivisorClass>& divisors);

// sum_l w_l * [ c(TW)/prod(1+D_k) `cap` [D_l] ]; with multiplicity weights this
// is the CSM class of the specialization function on the resolution.
ChowClass csm_strata_class(const SurfaceModel& s, const std::vector<DivisorClass>& divisors,
                           const std::vector<Rat>& weights);

// Restriction to a Cartier divisor X: dimension drops, the point part of the
// input is discarded.
ChowClass gysin_restrict(const SurfaceModel& s, const ChowClass& c, const DivisorClass& X);

// Projection to P^2: exceptional classes push to zero.
ChowClass pushforward_to_plane(const SurfaceModel& s, const ChowClass& c);

struct PointReport {
  ProjPoint point;
  Int psi;
  Int mu;
};

struct TheoremReport {
  ChowClass lhs;  // on P^2
  ChowClass rhs;  // on P^2
  bool equal = false;
  Rat degree_lhs;
  Rat degree_rhs;
  Int chi_curve;
  Int chi_general_fiber;  // 3d - d^2
  bool degree_matches_fiber = false;
  bool degree_matches_chi = false;
  std::vector<PointReport> per_point;
};

// Both sides of the Chern-class specialization identity for a reduced plane
// curve with rational singular points, plus the degree checks.
TheoremReport theorem_one_check(const PlaneCurve& curve);

struct WmaReport {
  std::vector<PointReport> per_point;  // mu recorded per singular point
  Int total;                           // sum of Milnor numbers
  ChowClass cls;                       // point class on P^2
};

// (-1)^{dim V} (c_SM(1_X) - c_SM(psi)): a sum of Milnor-number point masses
// when the singularities are isolated.
WmaReport wma_standin(const PlaneCurve& curve);

}  // namespace psikit

#endif
