#ifndef PSIKIT_NCMODEL_HPP
#define PSIKIT_NCMODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psikit/alpha.hpp"
#include "psikit/epoly.hpp"

namespace psikit {

using IdSet = std::set<std::string>;

struct Component {
  std::string id;
  long long mult = 1;                       // multiplicity m in the pullback divisor
  std::optional<long long> discrepancy;     // coefficient in the relative canonical divisor
  bool operator==(const Component&) const = default;
};

// A normal-crossings divisor model: components with multiplicities (and
// optionally discrepancies), marked base points, and for each stratum
// D_I^o = (cap_{k in I} D_k) \ (cup_{l not in I} D_l) the class of its slice
// over each marked point (strata_fiber) and, optionally, its absolute class
// (strata_total).  Fiber and total maps are independent data; no consistency
// between them is enforced.
struct NCModel {
  int ambient_dim = 2;
  std::vector<Component> components;
  std::vector<std::string> points;
  std::map<std::pair<IdSet, std::string>, EPoly> strata_fiber;
  std::optional<std::map<IdSet, EPoly>> strata_total;

  const Component* find_component(const std::string& id) const;
  bool operator==(const NCModel&) const = default;
};

// Integer weights on strata; singleton keys mean open parts of components.
using StratumFunction = std::map<IdSet, Int>;

// Values of a constructible function at the marked points of a model.
using BucketFunction = std::map<std::string, Rat>;

// A blow-up center: codimension, the components containing it, and the
// classes of its pieces Z `cap` D^o_{C `cup` J} over each marked fiber (or away
// from all of them).
struct CenterPiece {
  IdSet extra;                       // the J of the stratum C `cup` J
  std::optional<std::string> at;     // marked point, or nullopt for "away"
  EPoly cls;
};

struct CenterSpec {
  int codim = 2;                     // codim of Z in W; the fiber of E is P^{codim-1}
  IdSet contains;                    // C: components with Z contained in D_l exactly for l in C
  std::vector<CenterPiece> pieces;
};

// Empty result iff all model invariants hold; violations returned as data.
std::vector<std::string> validate(const NCModel& model);

// alpha(m_l) on open parts of components, 0 on all deeper strata.
StratumFunction psi_strata(const NCModel& model, const AlphaFn& alpha);

// Euler-characteristic-weighted pushforward to the marked points:
// value at p = sum_I f(I) * euler(strata_fiber(I, p)), missing strata read as 0.
BucketFunction pushforward(const NCModel& model, const StratumFunction& f);

// Rational-weight extension of the same pushforward (used by the mu formula).
BucketFunction pushforward_rational(const NCModel& model, const std::map<IdSet, Rat>& f);

// The specialization function: pushforward of psi_strata.
BucketFunction psi(const NCModel& model, const AlphaFn& alpha = AlphaFn::identity());

// Scope of a motivic computation: a marked fiber, or the absolute classes.
struct Scope {
  static Scope total() { return Scope{}; }
  static Scope fiber(std::string p) { return Scope{std::move(p)}; }
  std::optional<std::string> point;  // nullopt = total
};

// sum_l alpha(m_l) [D_l^o] reduced mod the torus class, over the given scope.
MTClass motivic_psi(const NCModel& model, const AlphaFn& alpha, const Scope& scope);

// sum_{|I|>0} (-T)^{|I|-1} [D_I^o] evaluated in two variables, no reduction.
EPoly naive_lift(const NCModel& model, const Scope& scope);

// Class of the locus in P^r lying on exactly k of e normal-crossings
// hyperplanes: (uv)^{r+1-e} (uv-1)^{e-1-k} for k < e, [P^{r-e}] for k = e <= r,
// and 0 for k = e = r+1.
EPoly arrangement_stratum_class(int r, int e, int k);

// The blow-up rewrite: proper transforms keep multiplicity and discrepancy;
// the new component gets mult = sum of mults over C and discrepancy
// (codim-1) + sum of discrepancies over C.  Each center piece with class z is
// subtracted from stratum C `cup` J and redistributed over {E} `cup` K `cup` J for
// every K subset of C, weighted by arrangement_stratum_class(r, |C|, |K|).
NCModel blow_up(const NCModel& model, const CenterSpec& center, const std::string& new_id);

// Resolution formula for the Milnor/Behrend function:
// (-1)^{dim X} d_*( sum_l (m_l - 1/(1+mu_l)) 1_{D_l^o}
//                   - sum_{|K|>=2} 1/prod_{k in K}(1+mu_k) 1_{D_K^o} ).
BucketFunction behrend_mu(const NCModel& model, std::optional<int> dim_x = std::nullopt);

// d_* of sum_{|K|>=1} 1/prod_{k in K}(1+mu_k) 1_{D_K^o}; identically 1 on
// models coming from genuine resolutions.
BucketFunction unit_reconstruction(const NCModel& model);

// Canonical form: components/points sorted, stratum keys normalized.
void canonicalize(NCModel& model);

}  // namespace psikit

#endif
