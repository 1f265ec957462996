#include "synlab/instances.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "synlab/errors.hpp"
#include "synlab/galois.hpp"

namespace synlab {

namespace {

std::string hex(Mask m) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", m);
  return buf;
}

std::string join_hex(const std::vector<Mask>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '-';
    s += hex(v[i]);
  }
  return s;
}

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string map_digits(const std::vector<int>& map, int cod_size) {
  std::string s;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i && cod_size > 10) s += '.';
    s += std::to_string(map[i]);
  }
  return s;
}

// Calls fn for every map {0..nx-1} -> {0..ny-1}, in lexicographic order.
template <typename Fn>
void for_each_map(int nx, int ny, bool pointed, Fn&& fn) {
  if (nx > 0 && ny == 0) return;
  std::vector<int> map(static_cast<std::size_t>(nx), 0);
  while (true) {
    if (!pointed || nx == 0 || map[0] == 0) fn(map);
    int i = nx - 1;
    while (i >= 0 && map[static_cast<std::size_t>(i)] == ny - 1) map[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++map[static_cast<std::size_t>(i)];
  }
}

bool injective(const std::vector<int>& map) {
  std::set<int> s(map.begin(), map.end());
  return s.size() == map.size();
}

FinObject object_for(const std::string& id, int n) { return FinObject{id, labels(n)}; }

template <typename Space, typename Accept, typename Initial>
CategoryPtr build_concrete(std::string id, const std::vector<Space>& objs, bool pointed, Accept&& accept,
                           Initial&& initial) {
  std::vector<FinObject> objects;
  for (const auto& s : objs) {
    if (pointed && s.n == 0) throw InputError("pointed category needs nonempty carriers");
    objects.push_back(object_for(s.id, s.n));
  }
  std::vector<FinMorphism> morphisms;
  for (int x = 0; x < static_cast<int>(objs.size()); ++x)
    for (int y = 0; y < static_cast<int>(objs.size()); ++y) {
      const auto& sx = objs[static_cast<std::size_t>(x)];
      const auto& sy = objs[static_cast<std::size_t>(y)];
      for_each_map(sx.n, sy.n, pointed, [&](const std::vector<int>& map) {
        if (!accept(map, sx, sy)) return;
        FinMorphism f;
        f.id = sx.id + ">" + sy.id + ":" + map_digits(map, sy.n);
        f.dom = x;
        f.cod = y;
        f.map = map;
        f.in_m = injective(map) && initial(map, sx, sy);
        morphisms.push_back(std::move(f));
      });
    }
  return std::make_shared<const FinCategory>(std::move(id), std::move(objects), std::move(morphisms));
}

void require_unique_ids(const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw InputError("duplicate object " + id);
}

std::vector<int> identity_map(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return m;
}

int require_map(const FinCategory& c, int dom, int cod, const std::vector<int>& map, const std::string& what) {
  auto f = c.find_map(dom, cod, map);
  if (!f) throw InputError(what + ": category " + c.id() + " lacks the map " + c.object(dom).id + " -> " + c.object(cod).id);
  return *f;
}

NatTransData nat(std::string id, FunctorData source, FunctorData target, std::vector<int> components) {
  return NatTransData{std::move(id), std::move(source), std::move(target), std::move(components)};
}

}  // namespace

bool FinTopSpace::is_open(Mask m) const { return std::binary_search(opens.begin(), opens.end(), m); }

Mask FinTopSpace::interior(Mask m) const {
  Mask out = 0;
  for (Mask o : opens)
    if (is_subset(o, m)) out |= o;
  return out;
}

Mask FinTopSpace::closure(Mask m) const {
  const Mask full = full_mask(n);
  return full & ~interior(full & ~m);
}

Mask FinTopSpace::saturation(Mask m) const {
  Mask out = full_mask(n);
  for (Mask o : opens)
    if (is_subset(m, o)) out &= o;
  return out;
}

FinTopSpace make_space(int n, std::vector<Mask> opens, std::string id) {
  if (n < 0 || n > kMaxCarrier) throw InputError("space carrier " + std::to_string(n) + " outside the cap");
  const Mask full = full_mask(n);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (Mask o : opens)
    if (!is_subset(o, full)) throw InputError("open set " + format_subset(o) + " outside the carrier");
  FinTopSpace s{std::move(id), n, std::move(opens)};
  if (!s.is_open(0) || !s.is_open(full)) throw InputError("topology must contain the empty set and the carrier");
  for (Mask a : s.opens)
    for (Mask b : s.opens)
      if (!s.is_open(a | b) || !s.is_open(a & b))
        throw InputError("family is not closed under union and intersection at " + format_subset(a) + ", " +
                         format_subset(b));
  if (s.id.empty()) s.id = "top" + std::to_string(n) + "_" + join_hex(s.opens);
  return s;
}

FinTopSpace sierpinski_space() { return make_space(2, {0b00, 0b10, 0b11}); }
FinTopSpace three_point_space() { return make_space(3, {0b000, 0b011, 0b111}); }
FinTopSpace indiscrete_space(int n) { return make_space(n, {0, full_mask(n)}); }

FinTopSpace discrete_space(int n) {
  std::vector<Mask> opens;
  for (Mask m = 0; m <= full_mask(n); ++m) opens.push_back(m);
  return make_space(n, std::move(opens));
}

Mask FinPreorder::image(Mask a) const {
  Mask out = 0;
  for (int x = 0; x < n; ++x)
    if ((a >> x) & 1u) out |= up[static_cast<std::size_t>(x)];
  return out;
}

FinPreorder make_preorder(int n, std::vector<Mask> up, std::string id) {
  if (n < 0 || n > kMaxCarrier) throw InputError("preorder carrier " + std::to_string(n) + " outside the cap");
  if (static_cast<int>(up.size()) != n) throw InputError("preorder needs one row per element");
  FinPreorder p{std::move(id), n, std::move(up)};
  for (int x = 0; x < n; ++x) {
    if (!is_subset(p.up[static_cast<std::size_t>(x)], full_mask(n))) throw InputError("preorder row outside carrier");
    if (!p.related(x, x)) throw InputError("preorder is not reflexive at " + std::to_string(x));
    if (p.image(p.up[static_cast<std::size_t>(x)]) != p.up[static_cast<std::size_t>(x)])
      throw InputError("preorder is not transitive at " + std::to_string(x));
  }
  if (p.id.empty()) p.id = "pre" + std::to_string(n) + "_" + join_hex(p.up);
  return p;
}

std::vector<FinPreorder> enumerate_preorders(int n) {
  if (n < 0 || n > 5) throw InputError("preorder enumeration is limited to 5 points");
  std::vector<std::pair<int, int>> off;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) off.emplace_back(x, y);
  std::vector<FinPreorder> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << off.size()); ++bits) {
    std::vector<Mask> up(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) up[static_cast<std::size_t>(x)] = Mask{1} << x;
    for (std::size_t i = 0; i < off.size(); ++i)
      if ((bits >> i) & 1u) up[static_cast<std::size_t>(off[i].first)] |= Mask{1} << off[i].second;
    FinPreorder p{{}, n, up};
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      transitive = p.image(up[static_cast<std::size_t>(x)]) == up[static_cast<std::size_t>(x)];
    if (transitive) out.push_back(make_preorder(n, std::move(up)));
  }
  return out;
}

std::vector<FinTopSpace> enumerate_topologies(int n) {
  std::vector<FinTopSpace> out;
  for (const auto& p : enumerate_preorders(n)) out.push_back(alexandrov_topology(p));
  return out;
}

std::size_t count_topologies_direct(int n) {
  if (n < 0 || n > 4) throw InputError("direct topology count is limited to 4 points");
  const Mask full = full_mask(n);
  std::vector<Mask> middle;
  for (Mask m = 1; m < full; ++m) middle.push_back(m);
  if (n == 0) return 1;
  std::size_t count = 0;
  for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << middle.size()); ++fam) {
    std::vector<bool> open(powerset_size(n), false);
    open[0] = open[full] = true;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((fam >> i) & 1u) open[middle[i]] = true;
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a)
      for (Mask b = 0; b <= full && ok; ++b)
        if (open[a] && open[b]) ok = open[a | b] && open[a & b];
    if (ok) ++count;
  }
  return count;
}

FinPreorder specialization(const FinTopSpace& s) {
  std::vector<Mask> up;
  for (int x = 0; x < s.n; ++x) up.push_back(s.saturation(Mask{1} << x));
  return make_preorder(s.n, std::move(up));
}

FinTopSpace alexandrov_topology(const FinPreorder& p) {
  std::vector<Mask> opens;
  for (Mask a = 0; a <= full_mask(p.n); ++a)
    if (p.image(a) == a) opens.push_back(a);
  return make_space(p.n, std::move(opens));
}

FinTopSpace t0_quotient(const FinTopSpace& s, std::vector<int>* class_of) {
  std::vector<int> cls(static_cast<std::size_t>(s.n), -1);
  std::vector<Mask> reps;
  int classes = 0;
  for (int x = 0; x < s.n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    const Mask sx = s.saturation(Mask{1} << x);
    for (int y = x; y < s.n; ++y)
      if (s.saturation(Mask{1} << y) == sx) cls[static_cast<std::size_t>(y)] = classes;
    ++classes;
  }
  std::vector<Mask> opens;
  for (Mask o : s.opens) opens.push_back(image_of(cls, o));
  if (class_of) *class_of = cls;
  return make_space(classes, std::move(opens));
}

bool is_t0(const FinTopSpace& s) { return t0_quotient(s).n == s.n; }

FinPreorder symmetric_part(const FinPreorder& p) {
  std::vector<Mask> up(static_cast<std::size_t>(p.n), 0);
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.related(x, y) && p.related(y, x)) up[static_cast<std::size_t>(x)] |= Mask{1} << y;
  return make_preorder(p.n, std::move(up));
}

bool is_continuous(std::span<const int> map, const FinTopSpace& x, const FinTopSpace& y) {
  for (Mask o : y.opens)
    if (!x.is_open(preimage_of(map, y.n, o))) return false;
  return true;
}

bool is_monotone_map(std::span<const int> map, const FinPreorder& x, const FinPreorder& y) {
  for (int a = 0; a < x.n; ++a)
    for (int b = 0; b < x.n; ++b)
      if (x.related(a, b) && !y.related(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

int SpaceCategory::index_of(const FinTopSpace& s) const {
  for (std::size_t i = 0; i < spaces.size(); ++i)
    if (spaces[i] == s) return static_cast<int>(i);
  return -1;
}

int PreorderCategory::index_of(const FinPreorder& p) const {
  for (std::size_t i = 0; i < preorders.size(); ++i)
    if (preorders[i] == p) return static_cast<int>(i);
  return -1;
}

SpaceCategory build_fintop_category(std::string id, std::vector<FinTopSpace> spaces, bool pointed) {
  if (pointed)
    for (auto& s : spaces)
      if (s.id.rfind("p", 0) != 0) s.id = "p" + s.id;
  std::vector<std::string> ids;
  for (const auto& s : spaces) ids.push_back(s.id);
  require_unique_ids(ids);
  auto c = build_concrete(
      std::move(id), spaces, pointed,
      [](const std::vector<int>& map, const FinTopSpace& x, const FinTopSpace& y) { return is_continuous(map, x, y); },
      [](const std::vector<int>& map, const FinTopSpace& x, const FinTopSpace& y) {
        for (Mask o : x.opens) {
          bool traced = false;
          for (Mask p : y.opens) traced = traced || preimage_of(map, y.n, p) == o;
          if (!traced) return false;
        }
        return true;
      });
  return SpaceCategory{c, std::move(spaces)};
}

PreorderCategory build_finqunif_category(std::string id, std::vector<FinPreorder> preorders, bool pointed) {
  if (pointed)
    for (auto& p : preorders)
      if (p.id.rfind("p", 0) != 0 || p.id.rfind("pre", 0) == 0) p.id = "p" + p.id;
  std::vector<std::string> ids;
  for (const auto& p : preorders) ids.push_back(p.id);
  require_unique_ids(ids);
  auto c = build_concrete(
      std::move(id), preorders, pointed,
      [](const std::vector<int>& map, const FinPreorder& x, const FinPreorder& y) { return is_monotone_map(map, x, y); },
      [](const std::vector<int>& map, const FinPreorder& x, const FinPreorder& y) {
        for (int a = 0; a < x.n; ++a)
          for (int b = 0; b < x.n; ++b)
            if (y.related(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) && !x.related(a, b))
              return false;
        return true;
      });
  return PreorderCategory{c, std::move(preorders)};
}

CategoryPtr build_finset_category(std::string id, std::vector<int> carriers, bool pointed) {
  struct Plain {
    std::string id;
    int n;
  };
  std::vector<Plain> objs;
  std::vector<std::string> ids;
  for (int n : carriers) {
    objs.push_back(Plain{(pointed ? "pset" : "set") + std::to_string(n), n});
    ids.push_back(objs.back().id);
  }
  require_unique_ids(ids);
  return build_concrete(
      std::move(id), objs, pointed, [](const std::vector<int>&, const Plain&, const Plain&) { return true; },
      [](const std::vector<int>&, const Plain&, const Plain&) { return true; });
}

std::vector<FinTopSpace> with_t0_quotients(std::vector<FinTopSpace> spaces) {
  const std::size_t original = spaces.size();
  for (std::size_t i = 0; i < original; ++i) {
    auto q = t0_quotient(spaces[i]);
    if (std::find(spaces.begin(), spaces.end(), q) == spaces.end()) spaces.push_back(q);
  }
  return spaces;
}

std::vector<FinPreorder> with_symmetric_parts(std::vector<FinPreorder> preorders) {
  const std::size_t original = preorders.size();
  for (std::size_t i = 0; i < original; ++i) {
    auto s = symmetric_part(preorders[i]);
    if (std::find(preorders.begin(), preorders.end(), s) == preorders.end()) preorders.push_back(s);
  }
  return preorders;
}

CategoryPtr full_subcategory(const FinCategory& c, const std::vector<int>& objects, std::string id) {
  std::vector<int> index(static_cast<std::size_t>(c.object_count()), -1);
  std::vector<FinObject> objs;
  for (int x : objects) {
    index[static_cast<std::size_t>(x)] = static_cast<int>(objs.size());
    objs.push_back(c.object(x));
  }
  std::vector<FinMorphism> mors;
  for (const auto& f : c.morphisms()) {
    const int d = index[static_cast<std::size_t>(f.dom)], e = index[static_cast<std::size_t>(f.cod)];
    if (d < 0 || e < 0) continue;
    FinMorphism g = f;
    g.dom = d;
    g.cod = e;
    mors.push_back(std::move(g));
  }
  return std::make_shared<const FinCategory>(std::move(id), std::move(objs), std::move(mors));
}

EndoMap kuratowski_closure(const FinTopSpace& s) {
  require_powerset_carrier(s.n);
  std::vector<Mask> t(powerset_size(s.n));
  for (Mask m = 0; m < t.size(); ++m) t[m] = s.closure(m);
  return EndoMap(s.n, std::move(t));
}

ClosureOp kuratowski_closure(const SpaceCategory& sc) {
  ClosureOp c{"kuratowski", sc.category, {}};
  for (const auto& s : sc.spaces) c.tables.push_back(kuratowski_closure(s));
  return c;
}

EndoMap endomap_from_preorder(const FinPreorder& p) {
  require_powerset_carrier(p.n);
  std::vector<Mask> t(powerset_size(p.n));
  for (Mask m = 0; m < t.size(); ++m) t[m] = p.image(m);
  return EndoMap(p.n, std::move(t));
}

ClosureOp preorder_closure(const PreorderCategory& pc) {
  ClosureOp c{"entourage", pc.category, {}};
  for (const auto& p : pc.preorders) c.tables.push_back(endomap_from_preorder(p));
  return c;
}

QUBase preorder_base(const PreorderCategory& pc) {
  QUBase b{"entourage", pc.category, {}};
  for (const auto& p : pc.preorders) b.maps.push_back({endomap_from_preorder(p)});
  return b;
}

QUBase principal_base(const ClosureOp& c) {
  QUBase b{c.id, c.category, {}};
  for (const auto& t : c.tables) b.maps.push_back({t});
  return b;
}

Syntop simple_syntop(const ClosureOp& c) {
  Syntop s{c.id, c.category, {}};
  for (const auto& t : c.tables) s.members.push_back({Relation::from_endomap(t)});
  return s;
}

PointedEndo t0_reflection(const SpaceCategory& sc) {
  const auto& C = *sc.category;
  FunctorData F;
  F.id = "T0";
  F.source = F.target = sc.category;
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < C.object_count(); ++x) {
    std::vector<int> cls;
    const int q = sc.index_of(t0_quotient(sc.spaces[static_cast<std::size_t>(x)], &cls));
    if (q < 0) throw InputError("category " + C.id() + " lacks the T0 quotient of " + C.object(x).id);
    F.object_map.push_back(q);
    classes.push_back(std::move(cls));
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    const auto& cx = classes[static_cast<std::size_t>(mf.dom)];
    const auto& cy = classes[static_cast<std::size_t>(mf.cod)];
    std::vector<int> map(static_cast<std::size_t>(C.carrier_size(F.object(mf.dom))), 0);
    for (int a = 0; a < C.carrier_size(mf.dom); ++a)
      map[static_cast<std::size_t>(cx[static_cast<std::size_t>(a)])] =
          cy[static_cast<std::size_t>(mf.map[static_cast<std::size_t>(a)])];
    F.morphism_map.push_back(require_map(C, F.object(mf.dom), F.object(mf.cod), map, "T0 reflection"));
  }
  std::vector<int> eta;
  for (int x = 0; x < C.object_count(); ++x)
    eta.push_back(require_map(C, x, F.object(x), classes[static_cast<std::size_t>(x)], "T0 reflection unit"));
  PointedEndo p;
  p.id = "t0";
  p.functor = F;
  p.unit = nat("eta", FunctorData::identity(sc.category), F, std::move(eta));
  return p;
}

AdjunctionData t0_adjunction(const SpaceCategory& sc) {
  const auto& A = *sc.category;
  std::vector<int> t0_objects;
  for (int x = 0; x < A.object_count(); ++x)
    if (is_t0(sc.spaces[static_cast<std::size_t>(x)])) t0_objects.push_back(x);
  auto sub = full_subcategory(A, t0_objects, A.id() + "0");
  const auto p = t0_reflection(sc);

  FunctorData F;
  F.id = "Q";
  F.source = sc.category;
  F.target = sub;
  for (int x = 0; x < A.object_count(); ++x) {
    F.object_map.push_back(sub->object_index(A.object(p.functor.object(x)).id));
    std::vector<int> cls;
    t0_quotient(sc.spaces[static_cast<std::size_t>(x)], &cls);
    F.carrier_maps.push_back(cls);
  }
  for (int f = 0; f < A.morphism_count(); ++f)
    F.morphism_map.push_back(sub->morphism_index(A.morphism(p.functor.morphism(f)).id));

  FunctorData G;
  G.id = "I";
  G.source = sub;
  G.target = sc.category;
  for (int y = 0; y < sub->object_count(); ++y) {
    G.object_map.push_back(A.object_index(sub->object(y).id));
    G.carrier_maps.push_back(identity_map(sub->carrier_size(y)));
  }
  for (int g = 0; g < sub->morphism_count(); ++g) G.morphism_map.push_back(A.morphism_index(sub->morphism(g).id));

  std::vector<int> eps;
  for (int y = 0; y < sub->object_count(); ++y) eps.push_back(*sub->identity(y));

  AdjunctionData ad;
  ad.id = "t0-reflection";
  ad.left = F;
  ad.right = G;
  ad.unit = nat("eta", FunctorData::identity(sc.category), compose(G, F), p.unit.components);
  ad.counit = nat("eps", compose(F, G), FunctorData::identity(sub), std::move(eps));
  return ad;
}

CopointedEndo symmetrization(const PreorderCategory& pc) {
  const auto& C = *pc.category;
  FunctorData G;
  G.id = "Sym";
  G.source = G.target = pc.category;
  for (int x = 0; x < C.object_count(); ++x) {
    const int s = pc.index_of(symmetric_part(pc.preorders[static_cast<std::size_t>(x)]));
    if (s < 0) throw InputError("category " + C.id() + " lacks the symmetric part of " + C.object(x).id);
    G.object_map.push_back(s);
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    G.morphism_map.push_back(require_map(C, G.object(mf.dom), G.object(mf.cod), mf.map, "symmetrization"));
  }
  std::vector<int> eps;
  for (int x = 0; x < C.object_count(); ++x)
    eps.push_back(require_map(C, G.object(x), x, identity_map(C.carrier_size(x)), "symmetrization counit"));
  CopointedEndo q;
  q.id = "sym";
  q.functor = G;
  q.counit = nat("eps", G, FunctorData::identity(pc.category), std::move(eps));
  return q;
}

AdjunctionData alexandrov_adjunction(const SpaceCategory& spaces, const PreorderCategory& preorders) {
  const auto& A = *spaces.category;
  const auto& C = *preorders.category;
  FunctorData F;
  F.id = "Spec";
  F.source = spaces.category;
  F.target = preorders.category;
  for (int x = 0; x < A.object_count(); ++x) {
    const int y = preorders.index_of(specialization(spaces.spaces[static_cast<std::size_t>(x)]));
    if (y < 0) throw InputError("preorder category lacks the specialization of " + A.object(x).id);
    F.object_map.push_back(y);
    F.carrier_maps.push_back(identity_map(A.carrier_size(x)));
  }
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    F.morphism_map.push_back(require_map(C, F.object(mf.dom), F.object(mf.cod), mf.map, "specialization functor"));
  }
  FunctorData G;
  G.id = "Alex";
  G.source = preorders.category;
  G.target = spaces.category;
  for (int y = 0; y < C.object_count(); ++y) {
    const int x = spaces.index_of(alexandrov_topology(preorders.preorders[static_cast<std::size_t>(y)]));
    if (x < 0) throw InputError("space category lacks the Alexandrov space of " + C.object(y).id);
    G.object_map.push_back(x);
    G.carrier_maps.push_back(identity_map(C.carrier_size(y)));
  }
  for (int g = 0; g < C.morphism_count(); ++g) {
    const auto& mg = C.morphism(g);
    G.morphism_map.push_back(require_map(A, G.object(mg.dom), G.object(mg.cod), mg.map, "Alexandrov functor"));
  }
  std::vector<int> eta, eps;
  for (int x = 0; x < A.object_count(); ++x)
    eta.push_back(require_map(A, x, G.object(F.object(x)), identity_map(A.carrier_size(x)), "unit"));
  for (int y = 0; y < C.object_count(); ++y)
    eps.push_back(require_map(C, F.object(G.object(y)), y, identity_map(C.carrier_size(y)), "counit"));
  AdjunctionData ad;
  ad.id = "alexandrov";
  ad.left = F;
  ad.right = G;
  ad.unit = nat("eta", FunctorData::identity(spaces.category), compose(G, F), std::move(eta));
  ad.counit = nat("eps", compose(F, G), FunctorData::identity(preorders.category), std::move(eps));
  return ad;
}

FibrationData forgetful_fibration(const SpaceCategory& spaces, CategoryPtr sets) {
  const auto& A = *spaces.category;
  const auto& C = *sets;
  FibrationData fd;
  fd.id = "forget";
  fd.functor.id = "U";
  fd.functor.source = spaces.category;
  fd.functor.target = sets;
  for (int x = 0; x < A.object_count(); ++x) {
    int target = -1;
    for (int y = 0; y < C.object_count() && target < 0; ++y)
      if (C.carrier_size(y) == A.carrier_size(x)) target = y;
    if (target < 0) throw InputError("set category lacks a carrier of size " + std::to_string(A.carrier_size(x)));
    fd.functor.object_map.push_back(target);
    fd.functor.carrier_maps.push_back(identity_map(A.carrier_size(x)));
    const auto ident = EndoMap::identity(A.carrier_size(x));
    const auto id = ident.table();
    fd.gamma.emplace_back(id.begin(), id.end());
    fd.delta.push_back(fd.gamma.back());
  }
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    fd.functor.morphism_map.push_back(
        require_map(C, fd.functor.object(mf.dom), fd.functor.object(mf.cod), mf.map, "forgetful functor"));
    if (mf.in_m) fd.initial.push_back(f);
  }
  return fd;
}

std::vector<std::string> bundle_names() { return {"t0", "sym", "alexandrov", "forgetful", "sierpinski", "ind3"}; }

namespace {

void add_closure_family(Document& d, const ClosureOp& c) {
  d.closures.push_back(c);
  d.topogenous.push_back(topogenous_of_closure(c));
  d.topogenous.back().id = c.id;
  d.qubases.push_back(principal_base(c));
  d.syntops.push_back(simple_syntop(c));
}

void add_pointed(Document& d, const PointedEndo& p) {
  d.functors.push_back(p.functor);
  d.nats.push_back(p.unit);
  d.pointed.push_back(p);
}

void add_adjunction(Document& d, const AdjunctionData& ad) {
  d.functors.push_back(ad.left);
  d.functors.push_back(ad.right);
  d.nats.push_back(ad.unit);
  if (ad.counit) d.nats.push_back(*ad.counit);
  d.adjunctions.push_back(ad);
}

Document t0_bundle(const FinTopSpace& space) {
  Document d;
  const auto sc = build_fintop_category("Top", with_t0_quotients({space}));
  d.categories.push_back(sc.category);
  const auto p = t0_reflection(sc);
  add_pointed(d, p);
  const auto ad = t0_adjunction(sc);
  d.categories.push_back(ad.left.target);
  add_adjunction(d, ad);
  add_closure_family(d, kuratowski_closure(sc));
  // the same closure on the T0 subcategory, for the reflective-adjunction lift
  SpaceCategory sub{ad.left.target, {}};
  for (int y = 0; y < sub.category->object_count(); ++y)
    sub.spaces.push_back(sc.spaces[static_cast<std::size_t>(sc.category->object_index(sub.category->object(y).id))]);
  add_closure_family(d, kuratowski_closure(sub));
  return d;
}

Document alexandrov_bundle(std::vector<FinTopSpace> spaces) {
  Document d;
  std::vector<FinPreorder> pres;
  for (const auto& s : spaces) pres.push_back(specialization(s));
  const auto sc = build_fintop_category("Top", spaces);
  const auto pc = build_finqunif_category("QUnif", pres);
  d.categories = {sc.category, pc.category};
  add_adjunction(d, alexandrov_adjunction(sc, pc));
  add_closure_family(d, preorder_closure(pc));
  add_closure_family(d, kuratowski_closure(sc));
  return d;
}

}  // namespace

Document bundle(std::string_view name) {
  if (name == "t0") return t0_bundle(three_point_space());
  if (name == "ind3") return t0_bundle(indiscrete_space(3));
  if (name == "sierpinski") return alexandrov_bundle({sierpinski_space()});
  if (name == "alexandrov")
    return alexandrov_bundle({sierpinski_space(), three_point_space(), discrete_space(2), indiscrete_space(2)});
  if (name == "sym") {
    Document d;
    const auto chain3 = make_preorder(3, {0b111, 0b110, 0b100});
    const auto pc = build_finqunif_category(
        "QUnif", with_symmetric_parts({specialization(sierpinski_space()), chain3, specialization(three_point_space())}));
    d.categories.push_back(pc.category);
    const auto q = symmetrization(pc);
    d.functors.push_back(q.functor);
    d.nats.push_back(q.counit);
    d.copointed.push_back(q);
    add_closure_family(d, preorder_closure(pc));
    return d;
  }
  if (name == "forgetful") {
    Document d;
    std::vector<FinTopSpace> spaces;
    for (int n = 1; n <= 2; ++n)
      for (auto& s : enumerate_topologies(n)) spaces.push_back(s);
    const auto sc = build_fintop_category("Top", spaces);
    const auto sets = build_finset_category("Set", {1, 2});
    d.categories = {sc.category, sets};
    auto fd = forgetful_fibration(sc, sets);
    d.functors.push_back(fd.functor);
    d.fibrations.push_back(fd);

    const auto psc = build_fintop_category("pTop", spaces, true);
    const auto psets = build_finset_category("pSet", {1, 2}, true);
    d.categories.push_back(psc.category);
    d.categories.push_back(psets);
    auto pfd = forgetful_fibration(psc, psets);
    pfd.id = "forget-pointed";
    pfd.functor.id = "pU";
    d.functors.push_back(pfd.functor);
    d.fibrations.push_back(pfd);

    // m ⊏ n iff m = ∅ or n = X
    ClosureOp coarse{"coarse", sets, {}};
    for (int x = 0; x < sets->object_count(); ++x) {
      const int n = sets->carrier_size(x);
      std::vector<Mask> t(powerset_size(n), full_mask(n));
      t[0] = 0;
      coarse.tables.emplace_back(n, std::move(t));
    }
    add_closure_family(d, coarse);
    add_closure_family(d, identity_closure(sets));
    ClosureOp plus0{"plus0", psets, {}};
    for (int x = 0; x < psets->object_count(); ++x) {
      const int n = psets->carrier_size(x);
      std::vector<Mask> t(powerset_size(n));
      for (Mask m = 0; m < t.size(); ++m) t[m] = m | 1u;
      plus0.tables.emplace_back(n, std::move(t));
    }
    add_closure_family(d, plus0);
    return d;
  }
  throw InputError("unknown bundle " + std::string(name));
}

}  // namespace synlab
