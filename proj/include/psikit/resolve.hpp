#ifndef PSIKIT_RESOLVE_HPP
#define PSIKIT_RESOLVE_HPP

#include <vector>

#include "psikit/curve.hpp"
#include "psikit/ncmodel.hpp"

namespace psikit {

// One exceptional divisor of an embedded plane-curve resolution.
struct ResNode {
  int id = 0;                   // creation index, 0-based
  long long mult = 0;           // multiplicity in the total transform
  long long discrepancy = 0;    // coefficient in the relative canonical divisor
  int contacts = 0;             // points where it meets the rest of the total transform
  std::vector<int> parents;     // nodes whose divisors passed through its center
};

// A point of the final normal-crossings configuration, by what meets there.
struct Crossing {
  std::vector<int> nodes;  // exceptional nodes through the point
  bool strict = false;     // whether the strict transform passes through it
};

// Resolution data of one singular (or smooth) point of a plane curve.
struct LocalResolution {
  std::vector<ResNode> nodes;               // creation order
  int branch_count = 0;                     // points of the final strict transform over p
  std::vector<long long> mult_sequence;     // strict-transform multiplicity at each center
  int blowup_count = 0;
  std::vector<std::vector<int>> children;   // per node: later centers lying on it
  std::vector<Crossing> final_crossings;
};

// Iterated point blow-ups in two charts until the total transform has normal
// crossings over the origin.  All infinitely-near points the resolution must
// track (centers and final contact points) are required to be rational.
LocalResolution resolve_local(const Poly2& f, int max_blowups = 64);

// sum_i m_i (2 - r_i); a smooth point (no nodes) yields 1.
Int psi_at(const LocalResolution& res);

// 1 - psi for curves on surfaces.
Int milnor_from_psi(const LocalResolution& res);

// Export the resolution as an NC model with one marked point "p": node
// singletons carry [P^1] minus their contact points, pairwise contacts carry
// one point per crossing, the strict transform carries its points over p.
NCModel to_ncmodel(const LocalResolution& res);

// Milnor number as dim_Q Q[x,y]/(f_x, f_y, x^K, y^K), K doubling from 4 until
// two consecutive values agree; independent of the resolution path.
Int milnor_oracle(const Poly2& f, int max_k = 64);

// All singular points of a squarefree projective curve, found by exact
// elimination; a singular point outside Q(=residue degree > 1) is an error.
std::vector<ProjPoint> find_singular_points(const PlaneCurve& curve);

// Resolution of every singular point plus the divisor-class bookkeeping on
// the resulting iterated blow-up of P^2 (total-transform basis H, e_1..e_k).
struct GlobalSingularPoint {
  ProjPoint point;
  LocalResolution res;
  int node_offset = 0;  // index of its first node among e_1..e_k
};

struct GlobalResolution {
  int degree = 0;
  int k = 0;  // total number of point blow-ups
  std::vector<GlobalSingularPoint> points;
  // Divisor classes in the basis (H, e_1..e_k), as integer coefficient vectors.
  std::vector<Int> strict_class;                // dH - sum mhat_j e_j
  std::vector<std::vector<Int>> node_classes;   // final class of each node divisor
  std::vector<long long> node_mults;
};

GlobalResolution resolve_global(const PlaneCurve& curve);

struct CurveTopology {
  Int genus;         // (d-1)(d-2)/2 - sum delta_p (can be negative for reducible curves)
  Int chi;           // topological Euler characteristic of the curve
  std::vector<std::pair<ProjPoint, int>> branch_counts;
};

CurveTopology curve_topology(const GlobalResolution& res);

}  // namespace psikit

#endif
