#include "synlab/fincat.hpp"

#include <algorithm>
#include <set>

#include "synlab/errors.hpp"

namespace synlab {

namespace {

std::string describe_map(std::span<const int> map) {
  std::string s = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(map[i]);
  }
  return s + "]";
}

std::vector<int> compose_maps(std::span<const int> g, std::span<const int> f) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

bool same_functor(const FunctorData& a, const FunctorData& b) {
  return a.source == b.source && a.target == b.target && a.object_map == b.object_map &&
         a.morphism_map == b.morphism_map;
}

}  // namespace

bool FinMorphism::injective() const {
  std::set<int> seen(map.begin(), map.end());
  return seen.size() == map.size();
}

bool FinMorphism::surjective(int cod_size) const {
  std::set<int> seen(map.begin(), map.end());
  return static_cast<int>(seen.size()) == cod_size;
}

std::uint64_t FinCategory::pack_map(std::span<const int> map) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < map.size(); ++i) key |= static_cast<std::uint64_t>(map[i]) << (4 * i);
  return key;
}

FinCategory::FinCategory(std::string id, std::vector<FinObject> objects,
                         std::vector<FinMorphism> morphisms,
                         std::vector<CompositionEntry> composition)
    : id_(std::move(id)), objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
  const int n_obj = object_count();
  for (int x = 0; x < n_obj; ++x) {
    const auto& o = objects_[static_cast<std::size_t>(x)];
    if (o.size() > kMaxCarrier)
      throw InputError("object " + o.id + " has carrier " + std::to_string(o.size()) +
                       " above the cap " + std::to_string(kMaxCarrier));
    std::set<std::string> labels(o.carrier.begin(), o.carrier.end());
    if (labels.size() != o.carrier.size()) throw InputError("object " + o.id + " has duplicate labels");
    if (!object_ids_.emplace(o.id, x).second) throw InputError("duplicate object id " + o.id);
  }
  hom_.assign(static_cast<std::size_t>(n_obj) * static_cast<std::size_t>(n_obj), {});
  by_map_.assign(static_cast<std::size_t>(n_obj) * static_cast<std::size_t>(n_obj), {});
  identity_.assign(static_cast<std::size_t>(n_obj), std::nullopt);
  powerset_ready_ = max_carrier() <= kMaxPowersetCarrier;
  for (int f = 0; f < morphism_count(); ++f) {
    const auto& m = morphisms_[static_cast<std::size_t>(f)];
    if (m.dom < 0 || m.dom >= n_obj || m.cod < 0 || m.cod >= n_obj)
      throw InputError("morphism " + m.id + " has dom/cod outside the category");
    if (static_cast<int>(m.map.size()) != carrier_size(m.dom))
      throw InputError("morphism " + m.id + " table is not total on its domain");
    for (int v : m.map)
      if (v < 0 || v >= carrier_size(m.cod))
        throw InputError("morphism " + m.id + " maps outside its codomain");
    if (!morphism_ids_.emplace(m.id, f).second) throw InputError("duplicate morphism id " + m.id);
    by_map_[static_cast<std::size_t>(m.dom * n_obj + m.cod)].emplace(pack_map(m.map), f);
    hom_[static_cast<std::size_t>(m.dom * n_obj + m.cod)].push_back(f);
    if (m.dom == m.cod && !identity_[static_cast<std::size_t>(m.dom)]) {
      bool is_id = true;
      for (std::size_t i = 0; i < m.map.size(); ++i) is_id = is_id && m.map[i] == static_cast<int>(i);
      if (is_id) identity_[static_cast<std::size_t>(m.dom)] = f;
    }
    if (powerset_ready_) transports_.push_back(transport_of_map(m.map, carrier_size(m.cod)));
  }
  for (const auto& e : composition) {
    if (e.g < 0 || e.g >= morphism_count() || e.f < 0 || e.f >= morphism_count() || e.h < 0 ||
        e.h >= morphism_count())
      throw InputError("composition entry references an unknown morphism");
    const long long key = static_cast<long long>(e.g) * morphism_count() + e.f;
    if (!table_.emplace(key, e.h).second)
      throw InputError("composition table defines " + morphisms_[static_cast<std::size_t>(e.g)].id +
                       " o " + morphisms_[static_cast<std::size_t>(e.f)].id + " twice");
    table_entries_.push_back(e);
  }
}

std::optional<int> FinCategory::find_object(std::string_view id) const {
  auto it = object_ids_.find(std::string(id));
  if (it == object_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_morphism(std::string_view id) const {
  auto it = morphism_ids_.find(std::string(id));
  if (it == morphism_ids_.end()) return std::nullopt;
  return it->second;
}

int FinCategory::object_index(std::string_view id) const {
  auto x = find_object(id);
  if (!x) throw InputError("unknown object " + std::string(id) + " in category " + id_);
  return *x;
}

int FinCategory::morphism_index(std::string_view id) const {
  auto f = find_morphism(id);
  if (!f) throw InputError("unknown morphism " + std::string(id) + " in category " + id_);
  return *f;
}

std::optional<int> FinCategory::find_map(int dom, int cod, std::span<const int> map) const {
  if (dom < 0 || dom >= object_count() || cod < 0 || cod >= object_count()) return std::nullopt;
  if (static_cast<int>(map.size()) != carrier_size(dom)) return std::nullopt;
  for (int v : map)
    if (v < 0 || v >= carrier_size(cod)) return std::nullopt;
  const auto& index = by_map_[static_cast<std::size_t>(dom * object_count() + cod)];
  auto it = index.find(pack_map(map));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::span<const int> FinCategory::hom(int x, int y) const {
  return hom_.at(static_cast<std::size_t>(x * object_count() + y));
}

std::optional<int> FinCategory::identity(int x) const { return identity_.at(static_cast<std::size_t>(x)); }

std::optional<int> FinCategory::compose(int g, int f) const {
  const auto& mg = morphism(g);
  const auto& mf = morphism(f);
  if (mf.cod != mg.dom)
    throw InputError("compose: " + mg.id + " o " + mf.id + " is not composable");
  if (!table_.empty()) {
    auto it = table_.find(static_cast<long long>(g) * morphism_count() + f);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < mf.map.size(); ++i)
    key |= static_cast<std::uint64_t>(mg.map[static_cast<std::size_t>(mf.map[i])]) << (4 * i);
  const auto& index = by_map_[static_cast<std::size_t>(mf.dom * object_count() + mg.cod)];
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const SubsetTransport& FinCategory::transport(int f) const {
  if (!powerset_ready_)
    throw InputError("category " + id_ + " has carriers above the powerset-table cap");
  return transports_.at(static_cast<std::size_t>(f));
}

int FinCategory::max_carrier() const {
  int m = 0;
  for (const auto& o : objects_) m = std::max(m, o.size());
  return m;
}

Subset image(const FinCategory& c, int f, Subset m) {
  const auto& mf = c.morphism(f);
  if (m.object != mf.dom) throw InputError("image: subset does not live on dom(" + mf.id + ")");
  if (!is_subset(m.bits, c.object(mf.dom).full())) throw InputError("image: subset outside carrier");
  return Subset{mf.cod, image_of(mf.map, m.bits)};
}

Subset preimage(const FinCategory& c, int f, Subset n) {
  const auto& mf = c.morphism(f);
  if (n.object != mf.cod) throw InputError("preimage: subset does not live on cod(" + mf.id + ")");
  if (!is_subset(n.bits, c.object(mf.cod).full())) throw InputError("preimage: subset outside carrier");
  return Subset{mf.dom, preimage_of(mf.map, c.carrier_size(mf.cod), n.bits)};
}

Factorization factorize(const FinCategory& c, int f) {
  const auto& mf = c.morphism(f);
  const auto& cod = c.object(mf.cod);
  std::vector<int> used(static_cast<std::size_t>(cod.size()), -1);
  for (int v : mf.map) used[static_cast<std::size_t>(v)] = 0;
  Factorization out;
  out.image.id = mf.id + "/image";
  for (int y = 0; y < cod.size(); ++y) {
    if (used[static_cast<std::size_t>(y)] < 0) continue;
    used[static_cast<std::size_t>(y)] = static_cast<int>(out.injection.size());
    out.injection.push_back(y);
    out.image.carrier.push_back(cod.carrier[static_cast<std::size_t>(y)]);
  }
  for (int v : mf.map) out.surjection.push_back(used[static_cast<std::size_t>(v)]);
  return out;
}

Report check_adjunction_laws(const FinCategory& c, int f) {
  const auto& mf = c.morphism(f);
  Report r("image/preimage adjunction for " + mf.id);
  const Mask dom_full = c.object(mf.dom).full();
  const Mask cod_full = c.object(mf.cod).full();
  const int cod_size = c.carrier_size(mf.cod);
  const bool surj = mf.surjective(cod_size);
  const bool inj = mf.injective();
  r.pass("f(f^-1(n)) <= n");
  r.pass("m <= f^-1(f(m))");
  if (surj) r.pass("f(f^-1(n)) = n for surjective f");
  if (inj) r.pass("f^-1(f(m)) = m for injective f");
  for (Mask n = 0;; ++n) {
    const Mask back = image_of(mf.map, preimage_of(mf.map, cod_size, n));
    if (!is_subset(back, n)) r.fail("f(f^-1(n)) <= n", "n=" + format_subset(n));
    if (surj && back != n)
      r.fail("f(f^-1(n)) = n for surjective f", "n=" + format_subset(n) + " gives " + format_subset(back));
    if (n == cod_full) break;
  }
  for (Mask m = 0;; ++m) {
    const Mask round = preimage_of(mf.map, cod_size, image_of(mf.map, m));
    if (!is_subset(m, round)) r.fail("m <= f^-1(f(m))", "m=" + format_subset(m));
    if (inj && round != m)
      r.fail("f^-1(f(m)) = m for injective f", "m=" + format_subset(m) + " gives " + format_subset(round));
    if (m == dom_full) break;
  }
  return r;
}

Report check_lemma22(const FinCategory& c, int f, int f_prime, int p, int p_prime) {
  const auto& mf = c.morphism(f);
  const auto& mfp = c.morphism(f_prime);
  const auto& mp = c.morphism(p);
  const auto& mpp = c.morphism(p_prime);
  if (mfp.dom != mpp.dom || mfp.cod != mp.dom || mpp.cod != mf.dom || mp.cod != mf.cod)
    throw InputError("lemma 2.2 square: morphisms do not form a square");
  if (compose_maps(mp.map, mfp.map) != compose_maps(mf.map, mpp.map))
    throw InputError("lemma 2.2 square does not commute: " + mp.id + " o " + mfp.id + " != " + mf.id +
                     " o " + mpp.id);
  Report r("p'(f'^-1(n)) <= f^-1(p(n)) on square (" + mf.id + "," + mfp.id + "," + mp.id + "," +
           mpp.id + ")");
  const std::string law = "p'(f'^-1(n)) <= f^-1(p(n))";
  r.pass(law);
  const Mask full = c.object(mfp.cod).full();
  for (Mask n = 0;; ++n) {
    const Mask lhs = image_of(mpp.map, preimage_of(mfp.map, c.carrier_size(mfp.cod), n));
    const Mask rhs = preimage_of(mf.map, c.carrier_size(mf.cod), image_of(mp.map, n));
    if (!is_subset(lhs, rhs))
      r.fail(law, "n=" + format_subset(n) + ": " + format_subset(lhs) + " not within " + format_subset(rhs));
    if (n == full) break;
  }
  return r;
}

Report validate_category(const FinCategory& c) {
  Report r("category " + c.id());
  const int n_mor = c.morphism_count();
  const std::string ids = "identities", closed = "composition closed", assoc = "associativity",
                    neutral = "identity neutral", concrete = "composition concrete",
                    faithful = "faithful (distinct tables per hom-set)",
                    estable = "E stable under pullback along M", fact = "(E,M) factorization";
  for (auto name : {ids, closed, assoc, neutral, concrete, faithful, estable, fact}) r.pass(name);

  for (int x = 0; x < c.object_count(); ++x)
    if (!c.identity(x)) r.fail(ids, "object " + c.object(x).id + " has no identity morphism");

  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y) {
      auto h = c.hom(x, y);
      std::set<std::vector<int>> seen;
      for (int f : h)
        if (!seen.insert(c.morphism(f).map).second)
          r.fail(faithful, "two morphisms " + c.object(x).id + " -> " + c.object(y).id + " share table " +
                               describe_map(c.morphism(f).map));
    }

  // closure, concreteness, neutrality
  for (int f = 0; f < n_mor; ++f) {
    const auto& mf = c.morphism(f);
    for (int y = 0; y < c.object_count(); ++y)
      for (int g : c.hom(mf.cod, y)) {
        const auto& mg = c.morphism(g);
        auto h = c.compose(g, f);
        if (!h) {
          r.fail(closed, mg.id + " o " + mf.id + " is not in the category");
          continue;
        }
        const auto& mh = c.morphism(*h);
        if (mh.dom != mf.dom || mh.cod != mg.cod || mh.map != compose_maps(mg.map, mf.map))
          r.fail(concrete, mg.id + " o " + mf.id + " = " + mh.id + " disagrees with function composition");
      }
    if (auto id_dom = c.identity(mf.dom); id_dom) {
      auto h = c.compose(f, *id_dom);
      if (h != f) r.fail(neutral, mf.id + " o id != " + mf.id);
    }
    if (auto id_cod = c.identity(mf.cod); id_cod) {
      auto h = c.compose(*id_cod, f);
      if (h != f) r.fail(neutral, "id o " + mf.id + " != " + mf.id);
    }
  }

  // associativity; function composition is associative, so only a declared
  // table needs the triple scan
  if (c.explicit_composition()) {
    for (int f = 0; f < n_mor; ++f)
      for (int y = 0; y < c.object_count(); ++y)
        for (int g : c.hom(c.morphism(f).cod, y))
          for (int z = 0; z < c.object_count(); ++z)
            for (int h : c.hom(y, z)) {
              auto gf = c.compose(g, f);
              auto hg = c.compose(h, g);
              if (!gf || !hg) continue;
              auto left = c.compose(h, *gf);
              auto right = c.compose(*hg, f);
              if (left != right)
                r.fail(assoc, "(" + c.morphism(h).id + ", " + c.morphism(g).id + ", " + c.morphism(f).id +
                                  "): h o (g o f) != (h o g) o f");
            }
  }

  for (int f = 0; f < n_mor; ++f) {
    const auto& mf = c.morphism(f);
    const int cod_size = c.carrier_size(mf.cod);
    auto fz = factorize(c, f);
    bool ok = compose_maps(fz.injection, fz.surjection) == mf.map;
    std::set<int> hit(fz.surjection.begin(), fz.surjection.end());
    ok = ok && static_cast<int>(hit.size()) == fz.image.size();
    std::set<int> inj(fz.injection.begin(), fz.injection.end());
    ok = ok && inj.size() == fz.injection.size();
    if (!ok) r.fail(fact, "factorization of " + mf.id + " does not recompose");
    if (mf.surjective(cod_size) && cod_size <= kMaxCarrier) {
      // pulling a surjection back along the inclusion of n stays surjective
      const Mask full = full_mask(cod_size);
      for (Mask n = 0;; ++n) {
        if (image_of(mf.map, preimage_of(mf.map, cod_size, n)) != n) {
          r.fail(estable, "restriction of " + mf.id + " over " + format_subset(n) + " is not onto");
          break;
        }
        if (n == full) break;
      }
    }
  }
  return r;
}

FunctorData FunctorData::identity(CategoryPtr c) {
  FunctorData f;
  f.id = "id:" + c->id();
  f.source = c;
  f.target = c;
  for (int x = 0; x < c->object_count(); ++x) {
    f.object_map.push_back(x);
    std::vector<int> cm(static_cast<std::size_t>(c->carrier_size(x)));
    for (std::size_t i = 0; i < cm.size(); ++i) cm[i] = static_cast<int>(i);
    f.carrier_maps.push_back(std::move(cm));
  }
  for (int m = 0; m < c->morphism_count(); ++m) f.morphism_map.push_back(m);
  return f;
}

Mask FunctorData::apply(int x, Mask m) const {
  if (!has_carrier_maps()) throw InputError("functor " + id + " has no action on subsets");
  return image_of(carrier_maps.at(static_cast<std::size_t>(x)), m);
}

SubsetTransport FunctorData::transport(int x) const {
  if (!has_carrier_maps()) throw InputError("functor " + id + " has no action on subsets");
  return transport_of_map(carrier_maps.at(static_cast<std::size_t>(x)), target->carrier_size(object(x)));
}

bool FunctorData::is_identity() const {
  if (source != target) return false;
  for (std::size_t x = 0; x < object_map.size(); ++x)
    if (object_map[x] != static_cast<int>(x)) return false;
  for (std::size_t f = 0; f < morphism_map.size(); ++f)
    if (morphism_map[f] != static_cast<int>(f)) return false;
  return true;
}

FunctorData compose(const FunctorData& second, const FunctorData& first) {
  if (first.target != second.source) throw InputError("functors " + second.id + " o " + first.id + " do not compose");
  FunctorData out;
  out.id = second.id + "o" + first.id;
  out.source = first.source;
  out.target = second.target;
  for (int y : first.object_map) out.object_map.push_back(second.object(y));
  for (int g : first.morphism_map) out.morphism_map.push_back(second.morphism(g));
  if (first.has_carrier_maps() && second.has_carrier_maps()) {
    for (std::size_t x = 0; x < first.object_map.size(); ++x) {
      const auto& inner = first.carrier_maps[x];
      const auto& outer = second.carrier_maps[static_cast<std::size_t>(first.object_map[x])];
      out.carrier_maps.push_back(compose_maps(outer, inner));
    }
  }
  return out;
}

Report validate_functor(const FunctorData& F) {
  Report r("functor " + F.id);
  const auto& A = *F.source;
  const auto& C = *F.target;
  const std::string total = "maps total", ends = "preserves dom/cod", ids = "preserves identities",
                    comp = "preserves composition", nat = "carrier maps natural";
  for (auto name : {total, ends, ids, comp}) r.pass(name);
  if (static_cast<int>(F.object_map.size()) != A.object_count() ||
      static_cast<int>(F.morphism_map.size()) != A.morphism_count()) {
    r.fail(total, "object or morphism map does not cover the source category");
    return r;
  }
  for (int y : F.object_map)
    if (y < 0 || y >= C.object_count()) {
      r.fail(total, "object map leaves the target category");
      return r;
    }
  for (int g : F.morphism_map)
    if (g < 0 || g >= C.morphism_count()) {
      r.fail(total, "morphism map leaves the target category");
      return r;
    }
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    const auto& mg = C.morphism(F.morphism(f));
    if (mg.dom != F.object(mf.dom) || mg.cod != F.object(mf.cod))
      r.fail(ends, "F(" + mf.id + ") = " + mg.id + " has the wrong ends");
  }
  for (int x = 0; x < A.object_count(); ++x) {
    auto ia = A.identity(x);
    auto ic = C.identity(F.object(x));
    if (ia && (!ic || F.morphism(*ia) != *ic)) r.fail(ids, "F(id_" + A.object(x).id + ") is not an identity");
  }
  if (r.passed(ends)) {
    for (int f = 0; f < A.morphism_count(); ++f)
      for (int y = 0; y < A.object_count(); ++y)
        for (int g : A.hom(A.morphism(f).cod, y)) {
          auto gf = A.compose(g, f);
          if (!gf) continue;
          auto image_comp = C.compose(F.morphism(g), F.morphism(f));
          if (image_comp != F.morphism(*gf))
            r.fail(comp, "F(" + A.morphism(g).id + " o " + A.morphism(f).id + ") != F(" + A.morphism(g).id +
                             ") o F(" + A.morphism(f).id + ")");
        }
  }
  if (F.has_carrier_maps()) {
    r.pass(nat);
    if (static_cast<int>(F.carrier_maps.size()) != A.object_count()) {
      r.fail(nat, "carrier maps do not cover every object");
      return r;
    }
    for (int x = 0; x < A.object_count(); ++x) {
      const auto& phi = F.carrier_maps[static_cast<std::size_t>(x)];
      bool shape = static_cast<int>(phi.size()) == A.carrier_size(x);
      for (int v : phi) shape = shape && v >= 0 && v < C.carrier_size(F.object(x));
      if (!shape) r.fail(nat, "carrier map of " + A.object(x).id + " is malformed");
    }
    if (!r.passed(nat)) return r;
    for (int f = 0; f < A.morphism_count(); ++f) {
      const auto& mf = A.morphism(f);
      const auto& mg = C.morphism(F.morphism(f));
      const auto& phi_x = F.carrier_maps[static_cast<std::size_t>(mf.dom)];
      const auto& phi_y = F.carrier_maps[static_cast<std::size_t>(mf.cod)];
      if (compose_maps(phi_y, mf.map) != compose_maps(mg.map, phi_x))
        r.fail(nat, "carrier square of " + mf.id + " does not commute");
    }
  }
  return r;
}

std::string subobject_preservation_witness(const FunctorData& F) {
  const auto& A = *F.source;
  const auto& C = *F.target;
  if (!F.has_carrier_maps()) return "functor " + F.id + " has no action on subsets";
  auto rep = validate_functor(F);
  if (!rep.ok()) return rep.first_failure()->name + ": " + rep.first_failure()->witness;
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    if (!mf.in_m) continue;
    const auto& mg = C.morphism(F.morphism(f));
    if (!mg.in_m) return "F(" + mf.id + ") = " + mg.id + " is not an M-morphism";
  }
  return {};
}

Report validate_nat(const NatTransData& n) {
  Report r("natural transformation " + n.id);
  const std::string shape = "components typed", nat = "naturality";
  r.pass(shape);
  r.pass(nat);
  if (n.source.source != n.target.source || n.source.target != n.target.target) {
    r.fail(shape, "source and target functors have different ends");
    return r;
  }
  const auto& A = *n.source.source;
  const auto& C = *n.source.target;
  if (static_cast<int>(n.components.size()) != A.object_count()) {
    r.fail(shape, "components do not cover every object");
    return r;
  }
  for (int x = 0; x < A.object_count(); ++x) {
    const int c = n.component(x);
    if (c < 0 || c >= C.morphism_count()) {
      r.fail(shape, "component at " + A.object(x).id + " is not a morphism of " + C.id());
      return r;
    }
    const auto& mc = C.morphism(c);
    if (mc.dom != n.source.object(x) || mc.cod != n.target.object(x))
      r.fail(shape, "component " + mc.id + " at " + A.object(x).id + " has the wrong ends");
  }
  if (!r.passed(shape)) return r;
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    auto left = C.compose(n.target.morphism(f), n.component(mf.dom));
    auto right = C.compose(n.component(mf.cod), n.source.morphism(f));
    if (!left || left != right) r.fail(nat, "square at " + mf.id + " does not commute");
  }
  return r;
}

bool PointedEndo::e_pointed() const {
  const auto& C = *functor.target;
  for (int c : unit.components)
    if (!C.morphism(c).surjective(C.carrier_size(C.morphism(c).cod))) return false;
  return true;
}

bool CopointedEndo::m_copointed() const {
  const auto& C = *functor.target;
  for (int c : counit.components)
    if (!C.morphism(c).injective()) return false;
  return true;
}

Report validate_pointed(const PointedEndo& p) {
  Report r("pointed endofunctor " + p.id);
  r.note("endofunctor", p.functor.source == p.functor.target, "source and target categories differ");
  r.merge(validate_functor(p.functor), "functor: ");
  r.note("unit from identity", p.unit.source.is_identity(), "unit source is not the identity functor");
  r.note("unit into F", same_functor(p.unit.target, p.functor), "unit target is not F");
  r.merge(validate_nat(p.unit), "unit: ");
  return r;
}

Report validate_copointed(const CopointedEndo& q) {
  Report r("copointed endofunctor " + q.id);
  r.note("endofunctor", q.functor.source == q.functor.target, "source and target categories differ");
  r.merge(validate_functor(q.functor), "functor: ");
  r.note("counit into identity", q.counit.target.is_identity(), "counit target is not the identity functor");
  r.note("counit from G", same_functor(q.counit.source, q.functor), "counit source is not G");
  r.merge(validate_nat(q.counit), "counit: ");
  return r;
}

Report validate_fibration(const FibrationData& fd) {
  Report r("fibration " + fd.id);
  const auto& F = fd.functor;
  r.merge(validate_functor(F), "functor: ");
  if (!r.ok()) return r;
  const auto& A = *F.source;
  const auto& C = *F.target;
  const std::string faithful = "faithful", shape = "gamma/delta tables", inverse = "gamma, delta inverse",
                    mono = "gamma, delta monotone", l1 = "gamma(f(m)) = Ff(gamma(m))",
                    l2 = "f(delta(n)) = delta(Ff(n))", l3 = "f^-1(delta(m')) = delta((Ff)^-1(m'))",
                    l4 = "gamma(f^-1(n')) = (Ff)^-1(gamma(n'))", agree = "gamma agrees with F on subsets",
                    ini = "initial morphisms known";
  for (auto name : {faithful, shape, inverse, mono, l1, l2, l3, l4, ini}) r.pass(name);
  for (int x = 0; x < A.object_count(); ++x)
    for (int y = 0; y < A.object_count(); ++y) {
      std::set<int> images;
      for (int f : A.hom(x, y))
        if (!images.insert(F.morphism(f)).second)
          r.fail(faithful, "two morphisms " + A.object(x).id + " -> " + A.object(y).id + " have the same image");
    }
  if (static_cast<int>(fd.gamma.size()) != A.object_count() || static_cast<int>(fd.delta.size()) != A.object_count()) {
    r.fail(shape, "tables do not cover every object");
    return r;
  }
  for (int x = 0; x < A.object_count(); ++x) {
    const int nx = A.carrier_size(x), nfx = C.carrier_size(F.object(x));
    if (nx > kMaxPowersetCarrier || nfx > kMaxPowersetCarrier ||
        fd.gamma[static_cast<std::size_t>(x)].size() != powerset_size(nx) ||
        fd.delta[static_cast<std::size_t>(x)].size() != powerset_size(nfx)) {
      r.fail(shape, "tables of " + A.object(x).id + " have the wrong size");
      continue;
    }
    for (Mask v : fd.gamma[static_cast<std::size_t>(x)])
      if (!is_subset(v, full_mask(nfx))) r.fail(shape, "gamma value outside F" + A.object(x).id);
    for (Mask v : fd.delta[static_cast<std::size_t>(x)])
      if (!is_subset(v, full_mask(nx))) r.fail(shape, "delta value outside " + A.object(x).id);
  }
  if (!r.passed(shape)) return r;
  for (int x = 0; x < A.object_count(); ++x) {
    const int nx = A.carrier_size(x), nfx = C.carrier_size(F.object(x));
    for (Mask m = 0; m < powerset_size(nx); ++m) {
      if (fd.down(x, fd.up(x, m)) != m) r.fail(inverse, "delta(gamma(" + format_subset(m) + ")) != m at " + A.object(x).id);
      for (Mask k = 0; k < powerset_size(nx); ++k)
        if (is_subset(m, k) && !is_subset(fd.up(x, m), fd.up(x, k)))
          r.fail(mono, "gamma not monotone at " + A.object(x).id);
      if (F.has_carrier_maps() && F.apply(x, m) != fd.up(x, m)) {
        r.pass(agree);
        r.fail(agree, "F" + format_subset(m) + " != gamma at " + A.object(x).id);
      }
    }
    for (Mask n = 0; n < powerset_size(nfx); ++n) {
      if (fd.up(x, fd.down(x, n)) != n) r.fail(inverse, "gamma(delta(" + format_subset(n) + ")) != n at " + A.object(x).id);
      for (Mask k = 0; k < powerset_size(nfx); ++k)
        if (is_subset(n, k) && !is_subset(fd.down(x, n), fd.down(x, k)))
          r.fail(mono, "delta not monotone at " + A.object(x).id);
    }
  }
  if (F.has_carrier_maps() && r.passed(agree)) r.pass(agree);
  for (int f = 0; f < A.morphism_count(); ++f) {
    const auto& mf = A.morphism(f);
    const auto& mg = C.morphism(F.morphism(f));
    const int x = mf.dom, y = mf.cod;
    const int nfx = C.carrier_size(mg.dom), nfy = C.carrier_size(mg.cod);
    const int ny = A.carrier_size(y);
    for (Mask m = 0; m < powerset_size(A.carrier_size(x)); ++m)
      if (fd.up(y, image_of(mf.map, m)) != image_of(mg.map, fd.up(x, m)))
        r.fail(l1, mf.id + ", m=" + format_subset(m));
    for (Mask n = 0; n < powerset_size(nfx); ++n)
      if (image_of(mf.map, fd.down(x, n)) != fd.down(y, image_of(mg.map, n)))
        r.fail(l2, mf.id + ", n=" + format_subset(n));
    for (Mask mp = 0; mp < powerset_size(nfy); ++mp)
      if (preimage_of(mf.map, ny, fd.down(y, mp)) != fd.down(x, preimage_of(mg.map, nfy, mp)))
        r.fail(l3, mf.id + ", m'=" + format_subset(mp));
    for (Mask np = 0; np < powerset_size(ny); ++np)
      if (fd.up(x, preimage_of(mf.map, ny, np)) != preimage_of(mg.map, nfy, fd.up(y, np)))
        r.fail(l4, mf.id + ", n'=" + format_subset(np));
  }
  for (int f : fd.initial)
    if (f < 0 || f >= A.morphism_count()) r.fail(ini, "initial morphism index out of range");
  return r;
}

Report validate_adjunction(const AdjunctionData& ad) {
  Report r("adjunction " + ad.id);
  const auto& F = ad.left;
  const auto& G = ad.right;
  r.merge(validate_functor(F), "F: ");
  r.merge(validate_functor(G), "G: ");
  r.note("F and G opposite", F.source == G.target && F.target == G.source, "F: A->C and G: C->A mismatch");
  if (!r.ok()) return r;
  const auto GF = compose(G, F);
  r.note("unit from identity", ad.unit.source.is_identity() && ad.unit.source.source == F.source,
         "unit source is not the identity of A");
  r.note("unit into GF", same_functor(ad.unit.target, GF), "unit target is not GF");
  r.merge(validate_nat(ad.unit), "unit: ");
  const auto& A = *F.source;
  const auto& C = *F.target;
  if (ad.counit) {
    const auto FG = compose(F, G);
    r.note("counit from FG", same_functor(ad.counit->source, FG), "counit source is not FG");
    r.note("counit into identity", ad.counit->target.is_identity() && ad.counit->target.source == F.target,
           "counit target is not the identity of C");
    r.merge(validate_nat(*ad.counit), "counit: ");
    if (r.ok()) {
      const std::string t1 = "triangle eps_F o F(eta) = id", t2 = "triangle G(eps) o eta_G = id";
      r.pass(t1);
      r.pass(t2);
      for (int x = 0; x < A.object_count(); ++x) {
        auto v = C.compose(ad.counit->component(F.object(x)), F.morphism(ad.unit.component(x)));
        if (v != C.identity(F.object(x))) r.fail(t1, "at " + A.object(x).id);
      }
      for (int y = 0; y < C.object_count(); ++y) {
        auto v = A.compose(G.morphism(ad.counit->component(y)), ad.unit.component(G.object(y)));
        if (v != A.identity(G.object(y))) r.fail(t2, "at " + C.object(y).id);
      }
    }
  }
  auto wf = subobject_preservation_witness(F);
  r.note("F preserves subobjects", wf.empty(), wf);
  auto wg = subobject_preservation_witness(G);
  r.note("G preserves subobjects", wg.empty(), wg);
  return r;
}

}  // namespace synlab
