#include "synlab/io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "synlab/errors.hpp"

namespace synlab {

using nlohmann::json;

CategoryPtr Document::category(std::string_view id) const {
  for (const auto& c : categories)
    if (c->id() == id) return c;
  throw InputError("unknown category " + std::string(id));
}

const FunctorData* Document::functor(std::string_view id) const {
  for (const auto& f : functors)
    if (f.id == id) return &f;
  return nullptr;
}

namespace {

const json& field(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) throw InputError(ctx + ": missing field '" + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* key, const std::string& ctx) {
  const auto& v = field(j, key, ctx);
  if (!v.is_string()) throw InputError(ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

Mask mask_of(const json& v, const std::string& ctx) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(ctx + ": subsets are non-negative integer bitmasks");
  const auto x = v.get<unsigned long long>();
  if (x > 0xffffffffull) throw InputError(ctx + ": bitmask too large");
  return static_cast<Mask>(x);
}

std::vector<Mask> masks_of(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw InputError(ctx + ": expected a list of bitmasks");
  std::vector<Mask> out;
  for (const auto& e : v) out.push_back(mask_of(e, ctx));
  return out;
}

Relation relation_of(const json& v, int carrier, const std::string& ctx) {
  if (!v.is_array()) throw InputError(ctx + ": expected a list of [m, n] pairs");
  std::vector<std::pair<Mask, Mask>> pairs;
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) throw InputError(ctx + ": relation entries are [m, n] pairs");
    pairs.emplace_back(mask_of(p[0], ctx), mask_of(p[1], ctx));
  }
  require_powerset_carrier(carrier);
  return Relation::from_pairs(carrier, pairs);
}

json relation_json(const Relation& r) {
  json out = json::array();
  for (auto [m, n] : r.pairs()) out.push_back({m, n});
  return out;
}

json table_json(const EndoMap& u) { return json(std::vector<Mask>(u.table().begin(), u.table().end())); }

struct RawMorphism {
  FinMorphism m;
  std::string dom, cod;
};

struct Loader {
  std::vector<FinObject> objects;
  std::map<std::string, std::size_t> object_pos;
  std::vector<RawMorphism> morphisms;
  std::map<std::string, std::size_t> morphism_pos;
  std::vector<std::array<std::string, 3>> composition;
  Document doc;

  CategoryPtr build(const std::string& id, const std::vector<std::string>& obj_ids) {
    std::map<std::string, int> index;
    std::vector<FinObject> objs;
    for (const auto& o : obj_ids) {
      auto it = object_pos.find(o);
      if (it == object_pos.end()) throw InputError("category " + id + " lists unknown object " + o);
      if (!index.emplace(o, static_cast<int>(objs.size())).second)
        throw InputError("category " + id + " lists " + o + " twice");
      objs.push_back(objects[it->second]);
    }
    std::vector<FinMorphism> mors;
    std::map<std::string, int> mindex;
    for (const auto& raw : morphisms) {
      auto d = index.find(raw.dom), c = index.find(raw.cod);
      if (d == index.end() || c == index.end()) continue;
      FinMorphism m = raw.m;
      m.dom = d->second;
      m.cod = c->second;
      mindex.emplace(m.id, static_cast<int>(mors.size()));
      mors.push_back(std::move(m));
    }
    std::vector<CompositionEntry> table;
    for (const auto& e : composition) {
      auto g = mindex.find(e[0]), f = mindex.find(e[1]), h = mindex.find(e[2]);
      if (g == mindex.end() || f == mindex.end() || h == mindex.end()) continue;
      table.push_back(CompositionEntry{g->second, f->second, h->second});
    }
    return std::make_shared<const FinCategory>(id, std::move(objs), std::move(mors), std::move(table));
  }

  FunctorData resolve(const json& ref, const std::string& ctx) {
    if (ref.is_string()) {
      const auto s = ref.get<std::string>();
      if (s.rfind("id:", 0) == 0) return FunctorData::identity(doc.category(s.substr(3)));
      if (const auto* f = doc.functor(s); f) return *f;
      throw InputError(ctx + ": unknown functor " + s);
    }
    if (ref.is_array() && ref.size() >= 2) {
      FunctorData acc = resolve(ref.back(), ctx);
      for (std::size_t i = ref.size() - 1; i-- > 0;) acc = compose(resolve(ref[i], ctx), acc);
      return acc;
    }
    throw InputError(ctx + ": a functor reference is an id, \"id:<category>\" or a list [G, F] meaning G after F");
  }

  const NatTransData& nat(const std::string& id, const std::string& ctx) {
    for (const auto& n : doc.nats)
      if (n.id == id) return n;
    throw InputError(ctx + ": unknown natural transformation " + id);
  }

  // Per-object table keyed by object id, in category order.
  template <typename Fn>
  void per_object(const json& table, const FinCategory& c, const std::string& ctx, Fn&& fn) {
    if (!table.is_object()) throw InputError(ctx + ": expected an object keyed by object id");
    for (auto it = table.begin(); it != table.end(); ++it)
      if (!c.find_object(it.key())) throw InputError(ctx + ": " + it.key() + " is not an object of " + c.id());
    for (int x = 0; x < c.object_count(); ++x) {
      const auto& id = c.object(x).id;
      if (!table.contains(id)) throw InputError(ctx + ": no entry for object " + id);
      fn(x, table.at(id));
    }
  }
};

Document load_impl(const json& j) {
  if (!j.is_object()) throw InputError("instance document must be a JSON object");
  Loader L;
  for (const auto& o : field(j, "objects", "document")) {
    FinObject obj{str(o, "id", "object"), {}};
    const auto& carrier = field(o, "carrier", "object " + obj.id);
    if (!carrier.is_array()) throw InputError("object " + obj.id + ": carrier must be a list of labels");
    for (const auto& e : carrier) obj.carrier.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    if (!L.object_pos.emplace(obj.id, L.objects.size()).second) throw InputError("duplicate object id " + obj.id);
    L.objects.push_back(std::move(obj));
  }
  if (j.contains("morphisms"))
    for (const auto& m : j.at("morphisms")) {
      RawMorphism raw;
      raw.m.id = str(m, "id", "morphism");
      const std::string ctx = "morphism " + raw.m.id;
      raw.dom = str(m, "dom", ctx);
      raw.cod = str(m, "cod", ctx);
      if (!L.object_pos.count(raw.dom) || !L.object_pos.count(raw.cod))
        throw InputError(ctx + ": unknown dom or cod");
      const auto& map = field(m, "map", ctx);
      if (!map.is_array()) throw InputError(ctx + ": map must be a list of element indices");
      for (const auto& v : map) {
        if (!v.is_number_integer()) throw InputError(ctx + ": map entries must be integers");
        raw.m.map.push_back(v.get<int>());
      }
      const int cod_size = L.objects[L.object_pos[raw.cod]].size();
      for (int v : raw.m.map)
        if (v < 0 || v >= cod_size) throw InputError(ctx + ": map leaves the codomain");
      raw.m.in_m = m.contains("in_m") ? m.at("in_m").get<bool>() : raw.m.injective();
      if (!L.morphism_pos.emplace(raw.m.id, L.morphisms.size()).second)
        throw InputError("duplicate morphism id " + raw.m.id);
      L.morphisms.push_back(std::move(raw));
    }
  if (j.contains("composition"))
    for (const auto& e : j.at("composition")) {
      if (!e.is_array() || e.size() != 3) throw InputError("composition entries are [g, f, g o f] triples");
      std::array<std::string, 3> t{e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()};
      for (const auto& id : t)
        if (!L.morphism_pos.count(id)) throw InputError("composition entry names unknown morphism " + id);
      L.composition.push_back(t);
    }
  if (j.contains("categories")) {
    for (const auto& c : j.at("categories")) {
      const auto id = str(c, "id", "category");
      std::vector<std::string> objs;
      for (const auto& o : field(c, "objects", "category " + id)) objs.push_back(o.get<std::string>());
      for (const auto& existing : L.doc.categories)
        if (existing->id() == id) throw InputError("duplicate category id " + id);
      L.doc.categories.push_back(L.build(id, objs));
    }
  } else {
    std::vector<std::string> all;
    for (const auto& o : L.objects) all.push_back(o.id);
    L.doc.categories.push_back(L.build("C", all));
  }

  if (j.contains("functors"))
    for (const auto& f : j.at("functors")) {
      FunctorData F;
      F.id = str(f, "id", "functor");
      const std::string ctx = "functor " + F.id;
      F.source = L.doc.category(str(f, "source", ctx));
      F.target = L.doc.category(str(f, "target", ctx));
      L.per_object(field(f, "objects", ctx), *F.source, ctx, [&](int, const json& v) {
        F.object_map.push_back(F.target->object_index(v.get<std::string>()));
      });
      const auto& mm = field(f, "morphisms", ctx);
      for (int g = 0; g < F.source->morphism_count(); ++g) {
        const auto& gid = F.source->morphism(g).id;
        if (!mm.contains(gid)) throw InputError(ctx + ": no image for morphism " + gid);
        F.morphism_map.push_back(F.target->morphism_index(mm.at(gid).get<std::string>()));
      }
      if (f.contains("carrier_maps"))
        L.per_object(f.at("carrier_maps"), *F.source, ctx + " carrier maps",
                     [&](int, const json& v) { F.carrier_maps.push_back(v.get<std::vector<int>>()); });
      if (L.doc.functor(F.id)) throw InputError("duplicate functor id " + F.id);
      L.doc.functors.push_back(std::move(F));
    }

  if (j.contains("nats"))
    for (const auto& n : j.at("nats")) {
      NatTransData N;
      N.id = str(n, "id", "natural transformation");
      const std::string ctx = "natural transformation " + N.id;
      N.source = L.resolve(field(n, "source", ctx), ctx);
      N.target = L.resolve(field(n, "target", ctx), ctx);
      const auto& target_cat = *N.source.target;
      L.per_object(field(n, "components", ctx), *N.source.source, ctx, [&](int, const json& v) {
        N.components.push_back(target_cat.morphism_index(v.get<std::string>()));
      });
      L.doc.nats.push_back(std::move(N));
    }

  if (j.contains("pointed"))
    for (const auto& p : j.at("pointed")) {
      PointedEndo P;
      P.id = str(p, "id", "pointed endofunctor");
      const std::string ctx = "pointed endofunctor " + P.id;
      P.functor = L.resolve(field(p, "functor", ctx), ctx);
      P.unit = L.nat(str(p, "unit", ctx), ctx);
      L.doc.pointed.push_back(std::move(P));
    }
  if (j.contains("copointed"))
    for (const auto& q : j.at("copointed")) {
      CopointedEndo Q;
      Q.id = str(q, "id", "copointed endofunctor");
      const std::string ctx = "copointed endofunctor " + Q.id;
      Q.functor = L.resolve(field(q, "functor", ctx), ctx);
      Q.counit = L.nat(str(q, "counit", ctx), ctx);
      L.doc.copointed.push_back(std::move(Q));
    }
  if (j.contains("adjunctions"))
    for (const auto& a : j.at("adjunctions")) {
      AdjunctionData A;
      A.id = str(a, "id", "adjunction");
      const std::string ctx = "adjunction " + A.id;
      A.left = L.resolve(field(a, "left", ctx), ctx);
      A.right = L.resolve(field(a, "right", ctx), ctx);
      A.unit = L.nat(str(a, "unit", ctx), ctx);
      if (a.contains("counit")) A.counit = L.nat(str(a, "counit", ctx), ctx);
      L.doc.adjunctions.push_back(std::move(A));
    }
  if (j.contains("fibrations"))
    for (const auto& f : j.at("fibrations")) {
      FibrationData fd;
      fd.id = str(f, "id", "fibration");
      const std::string ctx = "fibration " + fd.id;
      fd.functor = L.resolve(field(f, "functor", ctx), ctx);
      const auto& A = *fd.functor.source;
      L.per_object(field(f, "gamma", ctx), A, ctx + " gamma",
                   [&](int, const json& v) { fd.gamma.push_back(masks_of(v, ctx)); });
      L.per_object(field(f, "delta", ctx), A, ctx + " delta",
                   [&](int, const json& v) { fd.delta.push_back(masks_of(v, ctx)); });
      if (f.contains("initial"))
        for (const auto& m : f.at("initial")) fd.initial.push_back(A.morphism_index(m.get<std::string>()));
      L.doc.fibrations.push_back(std::move(fd));
    }

  if (j.contains("closures"))
    for (const auto& c : j.at("closures")) {
      ClosureOp op{str(c, "id", "closure"), L.doc.category(str(c, "category", "closure")), {}};
      const std::string ctx = "closure " + op.id;
      L.per_object(field(c, "tables", ctx), *op.category, ctx, [&](int x, const json& v) {
        op.tables.emplace_back(op.category->carrier_size(x), masks_of(v, ctx));
      });
      L.doc.closures.push_back(std::move(op));
    }
  if (j.contains("topogenous"))
    for (const auto& t : j.at("topogenous")) {
      TopogenousOrder op{str(t, "id", "topogenous order"), L.doc.category(str(t, "category", "topogenous order")), {}};
      const std::string ctx = "topogenous order " + op.id;
      L.per_object(field(t, "relations", ctx), *op.category, ctx, [&](int x, const json& v) {
        op.relations.push_back(relation_of(v, op.category->carrier_size(x), ctx));
      });
      L.doc.topogenous.push_back(std::move(op));
    }
  if (j.contains("qubases"))
    for (const auto& b : j.at("qubases")) {
      QUBase op{str(b, "id", "base"), L.doc.category(str(b, "category", "base")), {}};
      const std::string ctx = "base " + op.id;
      L.per_object(field(b, "maps", ctx), *op.category, ctx, [&](int x, const json& v) {
        std::vector<EndoMap> maps;
        for (const auto& t : v) maps.emplace_back(op.category->carrier_size(x), masks_of(t, ctx));
        op.maps.push_back(std::move(maps));
      });
      L.doc.qubases.push_back(std::move(op));
    }
  if (j.contains("syntops"))
    for (const auto& s : j.at("syntops")) {
      Syntop op{str(s, "id", "syntopogenous structure"), L.doc.category(str(s, "category", "syntopogenous structure")), {}};
      const std::string ctx = "syntopogenous structure " + op.id;
      L.per_object(field(s, "members", ctx), *op.category, ctx, [&](int x, const json& v) {
        std::vector<Relation> rels;
        for (const auto& r : v) rels.push_back(relation_of(r, op.category->carrier_size(x), ctx));
        op.members.push_back(std::move(rels));
      });
      L.doc.syntops.push_back(std::move(op));
    }
  return std::move(L.doc);
}

bool same_functor(const FunctorData& a, const FunctorData& b) {
  return a.source == b.source && a.target == b.target && a.object_map == b.object_map &&
         a.morphism_map == b.morphism_map;
}

json functor_ref(const Document& d, const FunctorData& f) {
  if (f.is_identity()) return "id:" + f.source->id();
  for (const auto& g : d.functors)
    if (same_functor(g, f)) return g.id;
  for (const auto& second : d.functors)
    for (const auto& first : d.functors)
      if (first.target == second.source && second.source && same_functor(compose(second, first), f))
        return json::array({second.id, first.id});
  throw InputError("functor " + f.id + " cannot be expressed through the document's functors");
}

template <typename Fn>
json keyed(const FinCategory& c, Fn&& fn) {
  json out = json::object();
  for (int x = 0; x < c.object_count(); ++x) out[c.object(x).id] = fn(x);
  return out;
}

}  // namespace

Document load_document(const json& j) {
  try {
    return load_impl(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance document: ") + e.what());
  }
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return load_document(j);
}

json to_json(const Structure& s) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        const auto& C = *v.category;
        json out{{"id", v.id}, {"category", C.id()}};
        if constexpr (std::is_same_v<T, ClosureOp>) {
          out["tables"] = keyed(C, [&](int x) { return table_json(v.at(x)); });
        } else if constexpr (std::is_same_v<T, TopogenousOrder>) {
          out["relations"] = keyed(C, [&](int x) { return relation_json(v.at(x)); });
        } else if constexpr (std::is_same_v<T, QUBase>) {
          out["maps"] = keyed(C, [&](int x) {
            json a = json::array();
            for (const auto& u : v.at(x)) a.push_back(table_json(u));
            return a;
          });
        } else {
          out["members"] = keyed(C, [&](int x) {
            json a = json::array();
            for (const auto& r : v.at(x)) a.push_back(relation_json(r));
            return a;
          });
        }
        return out;
      },
      s);
}

void add_structure(Document& d, const Structure& s) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClosureOp>) d.closures.push_back(v);
        else if constexpr (std::is_same_v<T, TopogenousOrder>) d.topogenous.push_back(v);
        else if constexpr (std::is_same_v<T, QUBase>) d.qubases.push_back(v);
        else d.syntops.push_back(v);
      },
      s);
}

json to_json(const Document& d) {
  std::map<std::string, json> objects, morphisms;
  std::set<std::array<std::string, 3>> composition;
  json categories = json::array();
  for (const auto& c : d.categories) {
    json ids = json::array();
    for (const auto& o : c->objects()) {
      json oj{{"id", o.id}, {"carrier", o.carrier}};
      auto [it, fresh] = objects.emplace(o.id, oj);
      if (!fresh && it->second != oj) throw InputError("object " + o.id + " differs between categories");
      ids.push_back(o.id);
    }
    for (const auto& m : c->morphisms()) {
      json mj{{"id", m.id}, {"dom", c->object(m.dom).id}, {"cod", c->object(m.cod).id}, {"map", m.map},
              {"in_m", m.in_m}};
      auto [it, fresh] = morphisms.emplace(m.id, mj);
      if (!fresh && it->second != mj) throw InputError("morphism " + m.id + " differs between categories");
    }
    for (const auto& e : c->composition_table())
      composition.insert({c->morphism(e.g).id, c->morphism(e.f).id, c->morphism(e.h).id});
    categories.push_back({{"id", c->id()}, {"objects", ids}});
  }
  json out;
  out["objects"] = json::array();
  for (auto& [id, o] : objects) out["objects"].push_back(o);
  out["morphisms"] = json::array();
  for (auto& [id, m] : morphisms) out["morphisms"].push_back(m);
  if (!composition.empty()) {
    out["composition"] = json::array();
    for (const auto& e : composition) out["composition"].push_back(e);
  }
  out["categories"] = categories;

  auto functors = json::array();
  for (const auto& f : d.functors) {
    json fj{{"id", f.id}, {"source", f.source->id()}, {"target", f.target->id()}};
    fj["objects"] = keyed(*f.source, [&](int x) { return f.target->object(f.object(x)).id; });
    json mm = json::object();
    for (int g = 0; g < f.source->morphism_count(); ++g)
      mm[f.source->morphism(g).id] = f.target->morphism(f.morphism(g)).id;
    fj["morphisms"] = mm;
    if (f.has_carrier_maps())
      fj["carrier_maps"] = keyed(*f.source, [&](int x) { return f.carrier_maps[static_cast<std::size_t>(x)]; });
    functors.push_back(fj);
  }
  if (!functors.empty()) out["functors"] = functors;

  auto nats = json::array();
  for (const auto& n : d.nats) {
    json nj{{"id", n.id}, {"source", functor_ref(d, n.source)}, {"target", functor_ref(d, n.target)}};
    nj["components"] = keyed(*n.source.source, [&](int x) { return n.source.target->morphism(n.component(x)).id; });
    nats.push_back(nj);
  }
  if (!nats.empty()) out["nats"] = nats;

  if (!d.pointed.empty()) {
    out["pointed"] = json::array();
    for (const auto& p : d.pointed)
      out["pointed"].push_back({{"id", p.id}, {"functor", functor_ref(d, p.functor)}, {"unit", p.unit.id}});
  }
  if (!d.copointed.empty()) {
    out["copointed"] = json::array();
    for (const auto& q : d.copointed)
      out["copointed"].push_back({{"id", q.id}, {"functor", functor_ref(d, q.functor)}, {"counit", q.counit.id}});
  }
  if (!d.adjunctions.empty()) {
    out["adjunctions"] = json::array();
    for (const auto& a : d.adjunctions) {
      json aj{{"id", a.id}, {"left", functor_ref(d, a.left)}, {"right", functor_ref(d, a.right)}, {"unit", a.unit.id}};
      if (a.counit) aj["counit"] = a.counit->id;
      out["adjunctions"].push_back(aj);
    }
  }
  if (!d.fibrations.empty()) {
    out["fibrations"] = json::array();
    for (const auto& f : d.fibrations) {
      const auto& A = *f.functor.source;
      json fj{{"id", f.id}, {"functor", functor_ref(d, f.functor)}};
      fj["gamma"] = keyed(A, [&](int x) { return f.gamma[static_cast<std::size_t>(x)]; });
      fj["delta"] = keyed(A, [&](int x) { return f.delta[static_cast<std::size_t>(x)]; });
      json ini = json::array();
      for (int m : f.initial) ini.push_back(A.morphism(m).id);
      fj["initial"] = ini;
      out["fibrations"].push_back(fj);
    }
  }
  auto list = [&](const char* key, const auto& items) {
    if (items.empty()) return;
    out[key] = json::array();
    for (const auto& s : items) out[key].push_back(to_json(Structure(s)));
  };
  list("closures", d.closures);
  list("topogenous", d.topogenous);
  list("qubases", d.qubases);
  list("syntops", d.syntops);
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace synlab
