#include "psikit/chow.hpp"

namespace psikit {

ChowClass zero_class(const SurfaceModel& s) {
  ChowClass c;
  c.div.assign(s.rank(), Int(0));
  return c;
}

DivisorClass h_class(const SurfaceModel& s, const Int& mult) {
  DivisorClass d(s.rank(), Int(0));
  d[0] = mult;
  return d;
}

namespace {

DivisorClass c1_class(const SurfaceModel& s) {
  DivisorClass c(s.rank(), Int(-1));
  c[0] = 3;
  return c;
}

DivisorClass sum_divisors(const SurfaceModel& s, const std::vector<DivisorClass>& ds) {
  DivisorClass t(s.rank(), Int(0));
  for (const auto& d : ds) {
    if (static_cast<int>(d.size()) != s.rank())
      throw Error(ErrorKind::invalid_input, "divisor class length mismatch");
    for (int i = 0; i < s.rank(); ++i) t[i] += d[i];
  }
  return t;
}

}  // namespace

Int intersection_number(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
  if (static_cast<int>(a.size()) != s.rank() || static_cast<int>(b.size()) != s.rank())
    throw Error(ErrorKind::invalid_input, "divisor class length mismatch");
  Int v = a[0] * b[0];
  for (int i = 1; i < s.rank(); ++i) v -= a[i] * b[i];
  return v;
}

ChowClass csm_complement(const SurfaceModel& s, const std::vector<DivisorClass>& divisors) {
  const DivisorClass c1 = c1_class(s);
  const Int c2 = 3 + s.k;
  const DivisorClass sum = sum_divisors(s, divisors);
  ChowClass out = zero_class(s);
  out.top = 1;
  for (int i = 0; i < s.rank(); ++i) out.div[i] = c1[i] - sum[i];
  // degree-2 part of (1 + c1 + c2) * prod (1 - D_k + D_k^2)
  Int pts = c2 - intersection_number(s, c1, sum);
  for (size_t i = 0; i < divisors.size(); ++i)
    pts += intersection_number(s, divisors[i], divisors[i]);
  for (size_t i = 0; i < divisors.size(); ++i)
    for (size_t j = i + 1; j < divisors.size(); ++j)
      pts += intersection_number(s, divisors[i], divisors[j]);
  out.pts = Rat(pts);
  return out;
}

ChowClass csm_strata_class(const SurfaceModel& s, const std::vector<DivisorClass>& divisors,
                           const std::vector<Rat>& weights) {
  if (divisors.size() != weights.size())
    throw Error(ErrorKind::invalid_input, "weights misaligned with divisors");
  const DivisorClass c1 = c1_class(s);
  const DivisorClass sum = sum_divisors(s, divisors);
  DivisorClass c1_minus_sum(s.rank());
  for (int i = 0; i < s.rank(); ++i) c1_minus_sum[i] = c1[i] - sum[i];
  ChowClass out = zero_class(s);
  // numerators are rational only through the weights; the class itself is
  //   sum_l w_l ( [D_l] + (c1 - sum D_k) . D_l [pt] )
  std::vector<Rat> div(s.rank(), Rat(0));
  for (size_t l = 0; l < divisors.size(); ++l) {
    for (int i = 0; i < s.rank(); ++i) div[i] += weights[l] * Rat(divisors[l][i]);
    out.pts += weights[l] * Rat(intersection_number(s, c1_minus_sum, divisors[l]));
  }
  for (int i = 0; i < s.rank(); ++i) {
    if (!div[i].is_integral())
      throw Error(ErrorKind::invalid_input, "non-integral divisor part in strata class");
    out.div[i] = div[i].to_int();
  }
  return out;
}

ChowClass gysin_restrict(const SurfaceModel& s, const ChowClass& c, const DivisorClass& X) {
  ChowClass out = zero_class(s);
  for (int i = 0; i < s.rank(); ++i) out.div[i] = c.top * X[i];
  out.pts = Rat(intersection_number(s, c.div, X));
  return out;
}

ChowClass pushforward_to_plane(const SurfaceModel& s, const ChowClass& c) {
  ChowClass out;
  out.top = c.top;
  out.div = {static_cast<int>(c.div.size()) > 0 ? c.div[0] : Int(0)};
  out.pts = c.pts;
  return out;
}

namespace {

struct CurveData {
  GlobalResolution res;
  SurfaceModel surface;
  std::vector<DivisorClass> divisors;  // strict transform first, then nodes
  std::vector<Rat> mult_weights;
};

CurveData prepare(const PlaneCurve& curve) {
  CurveData cd;
  cd.res = resolve_global(curve);
  cd.surface.k = cd.res.k;
  cd.divisors.push_back(cd.res.strict_class);
  cd.mult_weights.push_back(Rat(1));
  for (size_t i = 0; i < cd.res.node_classes.size(); ++i) {
    cd.divisors.push_back(cd.res.node_classes[i]);
    cd.mult_weights.push_back(Rat(Int(cd.res.node_mults[i])));
  }
  return cd;
}

}  // namespace

TheoremReport theorem_one_check(const PlaneCurve& curve) {
  CurveData cd = prepare(curve);
  const Int d(curve.degree);
  TheoremReport rep;

  ChowClass upstairs = csm_strata_class(cd.surface, cd.divisors, cd.mult_weights);
  rep.lhs = pushforward_to_plane(cd.surface, upstairs);

  SurfaceModel plane;  // P^2 itself
  ChowClass complement = csm_complement(plane, {h_class(plane, d)});
  rep.rhs = gysin_restrict(plane, complement, h_class(plane, d));

  rep.equal = (rep.lhs == rep.rhs);
  rep.degree_lhs = rep.lhs.pts;
  rep.degree_rhs = rep.rhs.pts;
  rep.chi_general_fiber = 3 * d - d * d;

  CurveTopology top = curve_topology(cd.res);
  rep.chi_curve = top.chi;
  Int correction = 0;  // sum over singular points of (1 - psi(p))
  for (const auto& gp : cd.res.points) {
    Int psi_p = psi_at(gp.res);
    rep.per_point.push_back({gp.point, psi_p, milnor_from_psi(gp.res)});
    correction += 1 - psi_p;
  }
  rep.degree_matches_fiber = (rep.degree_lhs == Rat(rep.chi_general_fiber));
  rep.degree_matches_chi = (rep.degree_lhs == Rat(top.chi - correction));
  return rep;
}

WmaReport wma_standin(const PlaneCurve& curve) {
  CurveData cd = prepare(curve);
  WmaReport rep;
  rep.total = 0;
  for (const auto& gp : cd.res.points) {
    Int mu = milnor_from_psi(gp.res);
    rep.per_point.push_back({gp.point, psi_at(gp.res), mu});
    rep.total += mu;
  }
  SurfaceModel plane;
  rep.cls = zero_class(plane);
  rep.cls.pts = Rat(rep.total);
  return rep;
}

}  // namespace psikit
