#include "psikit/resolve.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace psikit {

namespace {

// A point on the current blown-up surface lying over the origin.  Exceptional
// germs are smooth; the first entry created at a site is a coordinate axis.
struct Site {
  std::vector<int> exc;       // node indices through this point
  std::vector<Poly2> exc_eq;  // their local equations
  Poly2 strict;               // strict transform germ (unit if it misses the point)
};

bool passes(const Poly2& g) { return g.coeff({0, 0}).is_zero(); }

// Intersection multiplicity of the strict germ with a coordinate axis germ.
int axis_contact_order(const Poly2& strict, const Poly2& axis) {
  if (axis == Poly2::variable(0)) {
    UPoly u = restrict_x0(strict);
    for (int i = 0; i <= u.degree(); ++i)
      if (!u.coeff(i).is_zero()) return i;
    return 1 << 20;  // strict contains the axis; never normal crossings
  }
  if (axis == Poly2::variable(1)) {
    UPoly u = restrict_y0(strict);
    for (int i = 0; i <= u.degree(); ++i)
      if (!u.coeff(i).is_zero()) return i;
    return 1 << 20;
  }
  throw Error(ErrorKind::invalid_input, "exceptional germ is not a coordinate axis");
}

bool site_is_nc(const Site& site, bool initial) {
  int m0 = passes(site.strict) ? site.strict.order_at_origin() : 0;
  if (m0 == 0) return true;  // only exceptional components, at most two, transverse
  if (m0 > 1) return false;
  if (site.exc.empty()) return initial;  // smooth input point
  if (site.exc.size() >= 2) return false;
  return axis_contact_order(site.strict, site.exc_eq[0]) == 1;
}

}  // namespace

LocalResolution resolve_local(const Poly2& f, int max_blowups) {
  if (f.is_zero() || !passes(f))
    throw Error(ErrorKind::invalid_input, "curve must vanish at the origin");
  if (!is_squarefree(f))
    throw Error(ErrorKind::invalid_input, "curve must be squarefree (reduced)");

  LocalResolution out;
  std::vector<Site> final_sites;
  std::deque<Site> work;
  work.push_back(Site{{}, {}, f});
  bool initial = true;

  while (!work.empty()) {
    Site site = std::move(work.front());
    work.pop_front();
    if (site_is_nc(site, initial && out.nodes.empty())) {
      final_sites.push_back(std::move(site));
      continue;
    }
    initial = false;
    if (static_cast<int>(out.nodes.size()) >= max_blowups)
      throw Error(ErrorKind::max_iterations,
                  "resolution exceeded " + std::to_string(max_blowups) + " blow-ups");

    // Blow up the origin of this site.
    const int m0 = passes(site.strict) ? site.strict.order_at_origin() : 0;
    ResNode node;
    node.id = static_cast<int>(out.nodes.size());
    node.mult = m0;
    node.discrepancy = 1;
    for (int c : site.exc) {
      node.mult += out.nodes[c].mult;
      node.discrepancy += out.nodes[c].discrepancy;
      out.children[c].push_back(node.id);
    }
    node.parents = site.exc;
    out.nodes.push_back(node);
    out.children.emplace_back();
    out.mult_sequence.push_back(m0);

    // Chart A: (x, y) -> (x, x y); the new exceptional divisor is {x = 0}.
    // Old exceptional germs have restriction a*y + b on {x = 0}; those with
    // a = 0 are the axis {x = 0} itself and reappear at the chart B origin.
    std::map<Rat, Site> at;  // location y = t0 on the new P^1 -> site parts
    std::vector<int> to_chart_b;
    std::vector<Poly2> to_chart_b_eq;
    for (size_t i = 0; i < site.exc.size(); ++i) {
      const Poly2& g = site.exc_eq[i];
      Rat a = g.coeff({0, 1});
      Rat b = g.coeff({1, 0});
      if (a.is_zero()) {
        to_chart_b.push_back(site.exc[i]);
        to_chart_b_eq.push_back(g);
      } else {
        Rat t0 = -b / a;
        Poly2 moved = shift(blowup_chart_a(g, 1), Rat(0), t0);
        at[t0].exc.push_back(site.exc[i]);
        at[t0].exc_eq.push_back(moved);
      }
    }
    Poly2 strict_a;
    if (m0 > 0) {
      strict_a = blowup_chart_a(site.strict, m0);
      RootReport roots = rational_roots(restrict_x0(strict_a));
      if (!roots.irrational.empty())
        throw Error(ErrorKind::irrational_infinitely_near_point,
                    "the strict transform meets an exceptional divisor at a point "
                    "with irrational coordinates");
      for (const auto& [t0, mult] : roots.rational) at[t0];  // ensure the site exists
    }
    for (auto& [t0, ns] : at) {
      ns.exc.insert(ns.exc.begin(), node.id);
      ns.exc_eq.insert(ns.exc_eq.begin(), Poly2::variable(0));
      ns.strict = (m0 > 0) ? shift(strict_a, Rat(0), t0) : Poly2::constant(Rat(1));
      work.push_back(std::move(ns));
    }

    // Chart B origin: the single point of the new P^1 not seen in chart A.
    Poly2 strict_b =
        (m0 > 0) ? blowup_chart_b(site.strict, m0) : Poly2::constant(Rat(1));
    if (!to_chart_b.empty() || (m0 > 0 && passes(strict_b))) {
      Site nb;
      nb.exc.push_back(node.id);
      nb.exc_eq.push_back(Poly2::variable(1));
      for (size_t i = 0; i < to_chart_b.size(); ++i) {
        nb.exc.push_back(to_chart_b[i]);
        nb.exc_eq.push_back(blowup_chart_b(to_chart_b_eq[i], 1));
      }
      nb.strict = strict_b;
      work.push_back(std::move(nb));
    }
  }

  out.blowup_count = static_cast<int>(out.nodes.size());
  out.branch_count = 0;
  for (const Site& site : final_sites) {
    bool strict_here = passes(site.strict);
    if (strict_here) ++out.branch_count;
    int comps = static_cast<int>(site.exc.size()) + (strict_here ? 1 : 0);
    if (comps >= 2)
      for (int c : site.exc) ++out.nodes[c].contacts;
  }

  // Bridge data for to_ncmodel: remember the final crossing points.
  out.final_crossings.clear();
  for (const Site& site : final_sites) {
    Crossing x;
    x.nodes = site.exc;
    x.strict = passes(site.strict);
    out.final_crossings.push_back(std::move(x));
  }
  return out;
}

Int psi_at(const LocalResolution& res) {
  if (res.nodes.empty()) return 1;
  Int s = 0;
  for (const auto& n : res.nodes) s += Int(n.mult) * Int(2 - n.contacts);
  return s;
}

Int milnor_from_psi(const LocalResolution& res) { return 1 - psi_at(res); }

NCModel to_ncmodel(const LocalResolution& res) {
  NCModel m;
  m.ambient_dim = 2;
  m.points = {"p"};
  auto node_id = [](int i) { return "E" + std::to_string(i + 1); };
  for (const auto& n : res.nodes)
    m.components.push_back({node_id(n.id), n.mult, n.discrepancy});
  m.components.push_back({"X", 1, 0});
  for (const auto& n : res.nodes) {
    EPoly cls = std_class(StdKind::proj, 1) - EPoly(Int(n.contacts));
    if (!cls.is_zero()) m.strata_fiber[{{node_id(n.id)}, "p"}] = cls;
  }
  for (const auto& x : res.final_crossings) {
    IdSet on;
    for (int c : x.nodes) on.insert(node_id(c));
    if (x.strict) on.insert("X");
    if (on.size() < 2 && !(x.strict && x.nodes.empty())) continue;
    auto key = std::make_pair(on, std::string("p"));
    auto it = m.strata_fiber.find(key);
    if (it == m.strata_fiber.end())
      m.strata_fiber[key] = EPoly(1);
    else
      it->second += EPoly(1);
  }
  canonicalize(m);
  return m;
}

}  // namespace psikit
