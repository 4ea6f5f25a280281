#include "psikit/ncmodel.hpp"

#include <algorithm>
#include <sstream>

namespace psikit {

namespace {

std::string join_ids(const IdSet& ids) {
  std::ostringstream os;
  bool first = true;
  for (const auto& id : ids) {
    if (!first) os << ",";
    os << id;
    first = false;
  }
  return os.str();
}

}  // namespace

const Component* NCModel::find_component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> validate(const NCModel& model) {
  std::vector<std::string> bad;
  if (model.ambient_dim < 1) bad.push_back("ambient_dim must be positive");
  std::set<std::string> ids;
  for (const auto& c : model.components) {
    if (c.id.empty()) bad.push_back("empty component id");
    if (!ids.insert(c.id).second) bad.push_back("duplicate component id: " + c.id);
    if (c.mult < 1) bad.push_back("multiplicity must be >= 1 on component " + c.id);
    if (c.discrepancy && *c.discrepancy < 0)
      bad.push_back("discrepancy must be >= 0 on component " + c.id);
  }
  std::set<std::string> pts;
  for (const auto& p : model.points) {
    if (p.empty()) bad.push_back("empty point id");
    if (!pts.insert(p).second) bad.push_back("duplicate point id: " + p);
  }
  auto check_key = [&](const IdSet& on) {
    if (on.empty()) bad.push_back("empty stratum key");
    for (const auto& id : on)
      if (!ids.count(id)) bad.push_back("unknown component: " + id);
  };
  for (const auto& [key, cls] : model.strata_fiber) {
    check_key(key.first);
    if (!pts.count(key.second)) bad.push_back("unknown point: " + key.second);
    if (cls.is_zero())
      bad.push_back("zero class stored for stratum {" + join_ids(key.first) + "} at " +
                    key.second);
  }
  if (model.strata_total) {
    for (const auto& [key, cls] : *model.strata_total) {
      check_key(key);
      if (cls.is_zero())
        bad.push_back("zero class stored for total stratum {" + join_ids(key) + "}");
    }
  }
  return bad;
}

StratumFunction psi_strata(const NCModel& model, const AlphaFn& alpha) {
  StratumFunction f;
  for (const auto& c : model.components) {
    Int v(alpha(c.mult));
    if (v != 0) f[{c.id}] = v;
  }
  // Deeper strata carry 0 and are omitted; pushforward reads absences as 0.
  return f;
}

BucketFunction pushforward(const NCModel& model, const StratumFunction& f) {
  BucketFunction out;
  for (const auto& p : model.points) {
    Int v = 0;
    for (const auto& [key, w] : f) {
      auto it = model.strata_fiber.find({key, p});
      if (it != model.strata_fiber.end()) v += w * euler(it->second);
    }
    out[p] = Rat(v);
  }
  return out;
}

BucketFunction pushforward_rational(const NCModel& model, const std::map<IdSet, Rat>& f) {
  BucketFunction out;
  for (const auto& p : model.points) {
    Rat v = 0;
    for (const auto& [key, w] : f) {
      auto it = model.strata_fiber.find({key, p});
      if (it != model.strata_fiber.end()) v += w * Rat(euler(it->second));
    }
    out[p] = v;
  }
  return out;
}

BucketFunction psi(const NCModel& model, const AlphaFn& alpha) {
  return pushforward(model, psi_strata(model, alpha));
}

MTClass motivic_psi(const NCModel& model, const AlphaFn& alpha, const Scope& scope) {
  EPoly sum;
  for (const auto& c : model.components) {
    Int w(alpha(c.mult));
    if (w == 0) continue;
    if (scope.point) {
      auto it = model.strata_fiber.find({IdSet{c.id}, *scope.point});
      if (it != model.strata_fiber.end()) sum += it->second * w;
    } else {
      if (!model.strata_total)
        throw Error(ErrorKind::missing_strata, "motivic_psi: strata_total not present");
      auto it = model.strata_total->find(IdSet{c.id});
      if (it != model.strata_total->end()) sum += it->second * w;
    }
  }
  return mod_torus(sum);
}

EPoly naive_lift(const NCModel& model, const Scope& scope) {
  const EPoly minus_t = -EPoly::torus_class();
  EPoly sum;
  auto add = [&](const IdSet& key, const EPoly& cls) {
    sum += cls * minus_t.pow(static_cast<int>(key.size()) - 1);
  };
  if (scope.point) {
    for (const auto& [key, cls] : model.strata_fiber)
      if (key.second == *scope.point) add(key.first, cls);
  } else {
    if (!model.strata_total)
      throw Error(ErrorKind::missing_strata, "naive_lift: strata_total not present");
    for (const auto& [key, cls] : *model.strata_total) add(key, cls);
  }
  return sum;
}

EPoly arrangement_stratum_class(int r, int e, int k) {
  if (r < 0 || k < 0 || k > e || e > r + 1)
    throw Error(ErrorKind::invalid_input, "arrangement_stratum_class: need 0 <= k <= e <= r+1");
  if (k < e)
    return std_class(StdKind::affine, r + 1 - e) * std_class(StdKind::torus, e - 1 - k);
  if (e <= r) return std_class(StdKind::proj, r - e);
  return EPoly();  // e = k = r+1: empty intersection
}

namespace {

// Subtract/add with removal of zero entries.
template <typename Map, typename Key>
void adjust(Map& m, const Key& key, const EPoly& delta, bool subtract) {
  auto it = m.find(key);
  EPoly v = (it == m.end()) ? EPoly() : it->second;
  if (subtract)
    v -= delta;
  else
    v += delta;
  if (v.is_zero()) {
    if (it != m.end()) m.erase(it);
  } else if (it == m.end()) {
    m.emplace(key, std::move(v));
  } else {
    it->second = std::move(v);
  }
}

std::vector<IdSet> subsets_of(const IdSet& s) {
  std::vector<std::string> v(s.begin(), s.end());
  std::vector<IdSet> out;
  const size_t n = v.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    IdSet sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) sub.insert(v[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

NCModel blow_up(const NCModel& model, const CenterSpec& center, const std::string& new_id) {
  if (!validate(model).empty())
    throw Error(ErrorKind::invalid_input, "blow_up: model fails validation");
  if (center.codim < 2)
    throw Error(ErrorKind::invalid_input, "blow_up: center codimension must be >= 2");
  if (center.codim > model.ambient_dim)
    throw Error(ErrorKind::invalid_input, "blow_up: center codimension exceeds ambient_dim");
  if (center.contains.empty())
    throw Error(ErrorKind::invalid_input, "blow_up: center must lie on some component");
  const int r = center.codim - 1;
  const int e = static_cast<int>(center.contains.size());
  if (e > r + 1)
    throw Error(ErrorKind::invalid_input,
                "blow_up: |C| components cannot all contain a center of this codimension");
  if (model.find_component(new_id))
    throw Error(ErrorKind::invalid_input, "blow_up: id not fresh: " + new_id);

  long long new_mult = 0;
  long long new_disc = center.codim - 1;
  bool have_disc = true;
  for (const auto& id : center.contains) {
    const Component* c = model.find_component(id);
    if (!c) throw Error(ErrorKind::invalid_input, "blow_up: unknown component " + id);
    new_mult += c->mult;
    if (c->discrepancy)
      new_disc += *c->discrepancy;
    else
      have_disc = false;
  }

  std::set<std::string> pts(model.points.begin(), model.points.end());
  for (const auto& piece : center.pieces) {
    for (const auto& id : piece.extra) {
      if (center.contains.count(id))
        throw Error(ErrorKind::invalid_input, "blow_up: piece extra overlaps center");
      if (!model.find_component(id))
        throw Error(ErrorKind::invalid_input, "blow_up: unknown component " + id);
    }
    IdSet on = center.contains;
    on.insert(piece.extra.begin(), piece.extra.end());
    if (piece.at) {
      if (!pts.count(*piece.at))
        throw Error(ErrorKind::invalid_input, "blow_up: unknown point " + *piece.at);
      if (!model.strata_fiber.count({on, *piece.at}))
        throw Error(ErrorKind::invalid_input, "blow_up: piece references missing stratum {" +
                                                  join_ids(on) + "} at " + *piece.at);
    } else {
      if (!model.strata_total || !model.strata_total->count(on))
        throw Error(ErrorKind::invalid_input,
                    "blow_up: away piece references missing total stratum {" + join_ids(on) + "}");
    }
  }

  NCModel out = model;
  Component exc;
  exc.id = new_id;
  exc.mult = new_mult;
  if (have_disc) exc.discrepancy = new_disc;
  out.components.push_back(exc);
  std::sort(out.components.begin(), out.components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });

  const auto ks = subsets_of(center.contains);
  for (const auto& piece : center.pieces) {
    IdSet old_key = center.contains;
    old_key.insert(piece.extra.begin(), piece.extra.end());
    if (piece.at) adjust(out.strata_fiber, std::make_pair(old_key, *piece.at), piece.cls, true);
    if (out.strata_total) adjust(*out.strata_total, old_key, piece.cls, true);
    for (const auto& K : ks) {
      EPoly w = arrangement_stratum_class(r, e, static_cast<int>(K.size()));
      if (w.is_zero()) continue;
      IdSet new_key = K;
      new_key.insert(new_id);
      new_key.insert(piece.extra.begin(), piece.extra.end());
      EPoly delta = piece.cls * w;
      if (piece.at) adjust(out.strata_fiber, std::make_pair(new_key, *piece.at), delta, false);
      if (out.strata_total) adjust(*out.strata_total, new_key, delta, false);
    }
  }
  return out;
}

namespace {

Rat inv_one_plus_disc(const NCModel& model, const std::string& id) {
  const Component* c = model.find_component(id);
  if (!c || !c->discrepancy)
    throw Error(ErrorKind::missing_discrepancy, "component " + id + " has no discrepancy");
  return Rat(Int(1), Int(1 + *c->discrepancy));
}

}  // namespace

BucketFunction behrend_mu(const NCModel& model, std::optional<int> dim_x) {
  const int dx = dim_x.value_or(model.ambient_dim - 1);
  std::map<IdSet, Rat> weights;
  for (const auto& c : model.components)
    weights[{c.id}] = Rat(Int(c.mult)) - inv_one_plus_disc(model, c.id);
  std::set<IdSet> deep;
  for (const auto& [key, cls] : model.strata_fiber)
    if (key.first.size() >= 2) deep.insert(key.first);
  for (const auto& K : deep) {
    Rat w(1);
    for (const auto& id : K) w *= inv_one_plus_disc(model, id);
    weights[K] = -w;
  }
  BucketFunction out = pushforward_rational(model, weights);
  if (dx % 2 != 0)
    for (auto& [p, v] : out) v = -v;
  return out;
}

BucketFunction unit_reconstruction(const NCModel& model) {
  std::map<IdSet, Rat> weights;
  for (const auto& c : model.components) weights[{c.id}] = inv_one_plus_disc(model, c.id);
  std::set<IdSet> deep;
  for (const auto& [key, cls] : model.strata_fiber)
    if (key.first.size() >= 2) deep.insert(key.first);
  for (const auto& K : deep) {
    Rat w(1);
    for (const auto& id : K) w *= inv_one_plus_disc(model, id);
    weights[K] = w;
  }
  return pushforward_rational(model, weights);
}

void canonicalize(NCModel& model) {
  std::sort(model.components.begin(), model.components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  std::sort(model.points.begin(), model.points.end());
  // Map keys are already canonically ordered; nothing else to do.
}

}  // namespace psikit
