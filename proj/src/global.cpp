#include "psikit/resolve.hpp"

namespace psikit {

namespace {

// Move a singular point to the origin of a suitable affine chart.
Poly2 local_equation(const PlaneCurve& curve, const ProjPoint& pt) {
  if (pt.z != 0) {
    Poly2 f = dehomogenize(curve.proj, Chart::z);
    return shift(f, Rat(pt.x, pt.z), Rat(pt.y, pt.z));
  }
  if (pt.y != 0) {
    Poly2 f = dehomogenize(curve.proj, Chart::y);  // coords (x/y, z/y)
    return shift(f, Rat(pt.x, pt.y), Rat(0));
  }
  Poly2 f = dehomogenize(curve.proj, Chart::x);  // coords (y/x, z/x)
  return shift(f, Rat(0), Rat(0));
}

}  // namespace

GlobalResolution resolve_global(const PlaneCurve& curve) {
  if (!curve.squarefree)
    throw Error(ErrorKind::invalid_input, "resolve_global requires a squarefree curve");
  GlobalResolution out;
  out.degree = curve.degree;
  for (const ProjPoint& pt : find_singular_points(curve)) {
    GlobalSingularPoint gp;
    gp.point = pt;
    gp.res = resolve_local(local_equation(curve, pt));
    gp.node_offset = out.k;
    out.k += gp.res.blowup_count;
    out.points.push_back(std::move(gp));
  }

  const int n = out.k + 1;
  out.strict_class.assign(n, Int(0));
  out.strict_class[0] = out.degree;
  for (const auto& gp : out.points) {
    for (int j = 0; j < gp.res.blowup_count; ++j)
      out.strict_class[1 + gp.node_offset + j] = -Int(gp.res.mult_sequence[j]);
    for (const auto& node : gp.res.nodes) {
      std::vector<Int> cls(n, Int(0));
      cls[1 + gp.node_offset + node.id] = 1;
      for (int child : gp.res.children[node.id]) cls[1 + gp.node_offset + child] = -1;
      out.node_classes.push_back(std::move(cls));
      out.node_mults.push_back(node.mult);
    }
  }
  return out;
}

CurveTopology curve_topology(const GlobalResolution& res) {
  CurveTopology top;
  const Int d(res.degree);
  Int delta_sum = 0;
  Int extra_branches = 0;
  for (const auto& gp : res.points) {
    Int mu = milnor_from_psi(gp.res);
    Int b(gp.res.branch_count);
    Int twice_delta = mu + b - 1;
    if (twice_delta % 2 != 0)
      throw Error(ErrorKind::non_integral_delta,
                  "delta invariant not integral at " + gp.point.str());
    delta_sum += twice_delta / 2;
    extra_branches += b - 1;
    top.branch_counts.emplace_back(gp.point, gp.res.branch_count);
  }
  top.genus = (d - 1) * (d - 2) / 2 - delta_sum;
  top.chi = 2 - 2 * top.genus - extra_branches;
  return top;
}

}  // namespace psikit
