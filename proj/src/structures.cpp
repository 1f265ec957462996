#include "synlab/structures.hpp"

#include "synlab/errors.hpp"

namespace synlab {

namespace {

std::string at_object(const FinCategory& c, int x) { return "object " + c.object(x).id; }

void require_category(const CategoryPtr& c, const std::string& id) {
  if (!c) throw InputError("structure " + id + " is not bound to a category");
  if (!c->powerset_ready())
    throw InputError("structure " + id + ": category " + c->id() + " exceeds the powerset-table cap");
}

void check_shape(const ClosureOp& c) {
  require_category(c.category, c.id);
  if (static_cast<int>(c.tables.size()) != c.category->object_count())
    throw InputError("closure " + c.id + " does not cover every object");
  for (int x = 0; x < c.category->object_count(); ++x)
    if (c.at(x).carrier() != c.category->carrier_size(x) || c.at(x).size() != powerset_size(c.at(x).carrier()))
      throw InputError("closure " + c.id + ": table of " + c.category->object(x).id + " has the wrong size");
}

void check_shape(const TopogenousOrder& t) {
  require_category(t.category, t.id);
  if (static_cast<int>(t.relations.size()) != t.category->object_count())
    throw InputError("topogenous order " + t.id + " does not cover every object");
  for (int x = 0; x < t.category->object_count(); ++x)
    if (t.at(x).carrier() != t.category->carrier_size(x) || t.at(x).words_per_row() == 0)
      throw InputError("topogenous order " + t.id + ": relation of " + t.category->object(x).id +
                       " has the wrong carrier");
}

void check_shape(const QUBase& b) {
  require_category(b.category, b.id);
  if (static_cast<int>(b.maps.size()) != b.category->object_count())
    throw InputError("base " + b.id + " does not cover every object");
  for (int x = 0; x < b.category->object_count(); ++x)
    for (const auto& u : b.at(x))
      if (u.carrier() != b.category->carrier_size(x) || u.size() != powerset_size(u.carrier()))
        throw InputError("base " + b.id + ": a map at " + b.category->object(x).id + " has the wrong carrier");
}

void check_shape(const Syntop& s) {
  require_category(s.category, s.id);
  if (static_cast<int>(s.members.size()) != s.category->object_count())
    throw InputError("syntopogenous structure " + s.id + " does not cover every object");
  for (int x = 0; x < s.category->object_count(); ++x)
    for (const auto& r : s.at(x))
      if (r.carrier() != s.category->carrier_size(x) || r.words_per_row() == 0)
        throw InputError("syntopogenous structure " + s.id + ": a relation at " + s.category->object(x).id +
                         " has the wrong carrier");
}

void require_same_category(const CategoryPtr& a, const CategoryPtr& b) {
  if (a != b) throw InputError("structures are bound to different categories");
}

std::string pair_text(Mask m, Mask n) { return "(" + format_subset(m) + ", " + format_subset(n) + ")"; }

// First pair violating T1, or empty.
std::string t1_witness(const Relation& r) {
  const Mask full = full_mask(r.carrier());
  for (Mask m = 0; m <= full; ++m)
    for (Mask n = 0; n <= full; ++n)
      if (r.test(m, n) && !is_subset(m, n)) return pair_text(m, n) + " related but m not within n";
  return {};
}

std::string t2_witness(const Relation& r) {
  Relation sat = r;
  sat.saturate();
  if (sat == r) return {};
  const Mask full = full_mask(r.carrier());
  for (Mask m = 0; m <= full; ++m)
    for (Mask n = 0; n <= full; ++n)
      if (sat.test(m, n) && !r.test(m, n)) return pair_text(m, n) + " forced by squeezing but missing";
  return {};
}

// m ⊏_Y n ⇒ f⁻¹(m) ⊏_X f⁻¹(n)
std::string t3_witness(const Relation& rx, const Relation& ry, const SubsetTransport& t) {
  const Mask full = full_mask(ry.carrier());
  for (Mask m = 0; m <= full; ++m)
    for (Mask n = 0; n <= full; ++n)
      if (ry.test(m, n) && !rx.test(t.preimage(m), t.preimage(n))) return pair_text(m, n);
  return {};
}

std::string interpolation_witness(const Relation& r) {
  const Mask full = full_mask(r.carrier());
  std::vector<std::uint64_t> acc(r.words_per_row());
  for (Mask m = 0; m <= full; ++m) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Mask p = 0; p <= full; ++p)
      if (r.test(m, p)) {
        auto row = r.row(p);
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= row[w];
      }
    auto row = r.row(m);
    for (std::size_t w = 0; w < acc.size(); ++w)
      if (row[w] & ~acc[w]) {
        for (Mask n = 0; n <= full; ++n)
          if (r.test(m, n) && !((acc[n >> 6] >> (n & 63)) & 1u)) return pair_text(m, n) + " has no interpolant";
      }
  }
  return {};
}

std::string meet_witness(const Relation& r) {
  const Mask full = full_mask(r.carrier());
  for (Mask m = 0; m <= full; ++m)
    if (!r.test(m, r.meet_of_row(m)))
      return format_subset(m) + " not related to the meet " + format_subset(r.meet_of_row(m)) + " of its row";
  return {};
}

bool dominated(const EndoMap& low, const EndoMap& high) { return pointwise_leq(low, high); }

Ordering from_leq(bool ab, bool ba) {
  if (ab && ba) return Ordering::equal;
  if (ab) return Ordering::less;
  if (ba) return Ordering::greater;
  return Ordering::incomparable;
}

// Relation on the source carrier that a continuous ⊏ must contain:
// f(m) ⊏' n  ⇒  m ⊏ f⁻¹(n).
Relation required_relation(const Relation& target, const SubsetTransport& t) {
  Relation req(t.from);
  const Mask full_from = full_mask(t.from);
  const Mask full_to = full_mask(t.to);
  for (Mask m = 0; m <= full_from; ++m) {
    const Mask fm = t.image(m);
    for (Mask n = 0; n <= full_to; ++n)
      if (target.test(fm, n)) req.set(m, t.preimage(n));
  }
  return req;
}

std::string leg_label(const FinCategory& src, const Leg& leg) {
  return leg.label.empty() ? "at " + src.object(leg.from).id : leg.label;
}

}  // namespace

Relation Syntop::union_at(int x) const {
  Relation u(category->carrier_size(x));
  for (const auto& r : at(x)) u |= r;
  return u;
}

const char* kind_name(const Structure& s) {
  switch (s.index()) {
    case 0: return "closure";
    case 1: return "topogenous";
    case 2: return "qubase";
    default: return "syntop";
  }
}

const std::string& structure_id(const Structure& s) {
  return std::visit([](const auto& v) -> const std::string& { return v.id; }, s);
}

const CategoryPtr& structure_category(const Structure& s) {
  return std::visit([](const auto& v) -> const CategoryPtr& { return v.category; }, s);
}

ClosureOp identity_closure(CategoryPtr c) {
  ClosureOp out{"identity", c, {}};
  for (int x = 0; x < c->object_count(); ++x) out.tables.push_back(EndoMap::identity(c->carrier_size(x)));
  return out;
}

ClosureOp top_closure(CategoryPtr c) {
  ClosureOp out{"top", c, {}};
  for (int x = 0; x < c->object_count(); ++x) out.tables.push_back(EndoMap::top(c->carrier_size(x)));
  return out;
}

TopogenousOrder discrete_topogenous(CategoryPtr c) {
  TopogenousOrder out{"discrete", c, {}};
  for (int x = 0; x < c->object_count(); ++x) out.relations.push_back(Relation::discrete(c->carrier_size(x)));
  return out;
}

QUBase identity_base(CategoryPtr c) {
  QUBase out{"identity", c, {}};
  for (int x = 0; x < c->object_count(); ++x) out.maps.push_back({EndoMap::identity(c->carrier_size(x))});
  return out;
}

Syntop discrete_syntop(CategoryPtr c) {
  Syntop out{"discrete", c, {}};
  for (int x = 0; x < c->object_count(); ++x) out.members.push_back({Relation::discrete(c->carrier_size(x))});
  return out;
}

Report validate_closure(const ClosureOp& c) {
  check_shape(c);
  const auto& C = *c.category;
  Report r("closure " + c.id);
  const std::string c1 = "C1 extensive", c2 = "C2 monotone", c3 = "C3 morphisms continuous";
  for (auto name : {c1, c2, c3}) r.pass(name);
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = c.at(x);
    for (Mask m = 0; m < t.size(); ++m)
      if (!is_subset(m, t(m))) r.fail(c1, at_object(C, x) + ", m=" + format_subset(m));
    if (!t.is_monotone()) {
      for (Mask m = 0; m < t.size(); ++m)
        for (Mask k = 0; k < t.size(); ++k)
          if (is_subset(m, k) && !is_subset(t(m), t(k)))
            r.fail(c2, at_object(C, x) + ", " + format_subset(m) + " within " + format_subset(k));
    }
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    const auto& tr = C.transport(f);
    for (Mask m = 0; m < c.at(mf.dom).size(); ++m)
      if (!is_subset(tr.image(c.at(mf.dom)(m)), c.at(mf.cod)(tr.image(m))))
        r.fail(c3, "morphism " + mf.id + ", m=" + format_subset(m));
  }
  return r;
}

Report validate_topogenous(const TopogenousOrder& t) {
  check_shape(t);
  const auto& C = *t.category;
  Report r("topogenous order " + t.id);
  const std::string t1 = "T1 m related to n implies m within n", t2 = "T2 squeeze stable",
                    t3 = "T3 morphisms continuous";
  for (auto name : {t1, t2, t3}) r.pass(name);
  for (int x = 0; x < C.object_count(); ++x) {
    if (auto w = t1_witness(t.at(x)); !w.empty()) r.fail(t1, at_object(C, x) + ": " + w);
    if (auto w = t2_witness(t.at(x)); !w.empty()) r.fail(t2, at_object(C, x) + ": " + w);
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    if (auto w = t3_witness(t.at(mf.dom), t.at(mf.cod), C.transport(f)); !w.empty())
      r.fail(t3, "morphism " + mf.id + ", pair " + w);
  }
  return r;
}

Report validate_qubase(const QUBase& b) {
  check_shape(b);
  const auto& C = *b.category;
  Report r("base " + b.id);
  const std::string ne = "nonempty", u1 = "U1 inflationary", mono = "members monotone",
                    u2 = "U2 square refinement", u4 = "U4 meets dominated", u5 = "U5 morphisms continuous";
  for (auto name : {ne, u1, mono, u2, u4, u5}) r.pass(name);
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& B = b.at(x);
    if (B.empty()) r.fail(ne, at_object(C, x) + " has no base member");
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (!B[i].is_inflationary()) r.fail(u1, at_object(C, x) + ", member " + std::to_string(i));
      if (!B[i].is_monotone()) r.fail(mono, at_object(C, x) + ", member " + std::to_string(i));
      bool refined = false;
      for (const auto& v : B) refined = refined || dominated(compose(v, v), B[i]);
      if (!refined) r.fail(u2, at_object(C, x) + ", member " + std::to_string(i) + " has no square refiner");
      for (std::size_t j = i + 1; j < B.size(); ++j) {
        const auto both = meet(B[i], B[j]);
        bool below = false;
        for (const auto& w : B) below = below || dominated(w, both);
        if (!below)
          r.fail(u4, at_object(C, x) + ", members " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    auto legs = morphism_legs(C, f);
    if (auto w = continuity_witness(b, b, legs); !w.empty()) r.fail(u5, w);
  }
  return r;
}

Report validate_syntop(const Syntop& s) {
  check_shape(s);
  const auto& C = *s.category;
  Report r("syntopogenous structure " + s.id);
  const std::string ne = "nonempty", t1 = "S1 members satisfy T1", t2 = "S1 members satisfy T2",
                    s2 = "S2 directed", s3t = "S3 union satisfies T3", s3i = "S3 union interpolative",
                    cont = "morphisms continuous";
  for (auto name : {ne, t1, t2, s2, s3t, s3i, cont}) r.pass(name);
  std::vector<Relation> unions;
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& S = s.at(x);
    if (S.empty()) r.fail(ne, at_object(C, x) + " has no member");
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (auto w = t1_witness(S[i]); !w.empty())
        r.fail(t1, at_object(C, x) + ", member " + std::to_string(i) + ": " + w);
      if (auto w = t2_witness(S[i]); !w.empty())
        r.fail(t2, at_object(C, x) + ", member " + std::to_string(i) + ": " + w);
      for (std::size_t j = i + 1; j < S.size(); ++j) {
        bool bound = false;
        for (const auto& k : S) bound = bound || (S[i].subset_of(k) && S[j].subset_of(k));
        if (!bound)
          r.fail(s2, at_object(C, x) + ", members " + std::to_string(i) + " and " + std::to_string(j) +
                         " have no common upper member");
      }
    }
    unions.push_back(s.union_at(x));
    if (auto w = interpolation_witness(unions.back()); !w.empty()) r.fail(s3i, at_object(C, x) + ": " + w);
  }
  for (int f = 0; f < C.morphism_count(); ++f) {
    const auto& mf = C.morphism(f);
    if (auto w = t3_witness(unions[static_cast<std::size_t>(mf.dom)], unions[static_cast<std::size_t>(mf.cod)],
                            C.transport(f));
        !w.empty())
      r.fail(s3t, "morphism " + mf.id + ", pair " + w);
    auto legs = morphism_legs(C, f);
    if (auto w = continuity_witness(s, s, legs); !w.empty()) r.fail(cont, w);
  }
  return r;
}

Report validate(const Structure& s) {
  return std::visit(
      [](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClosureOp>) return validate_closure(v);
        else if constexpr (std::is_same_v<T, TopogenousOrder>) return validate_topogenous(v);
        else if constexpr (std::is_same_v<T, QUBase>) return validate_qubase(v);
        else return validate_syntop(v);
      },
      s);
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    default: return "incomparable";
  }
}

bool leq(const ClosureOp& a, const ClosureOp& b) {
  require_same_category(a.category, b.category);
  for (int x = 0; x < a.category->object_count(); ++x)
    if (!pointwise_leq(a.at(x), b.at(x))) return false;
  return true;
}

bool leq(const TopogenousOrder& a, const TopogenousOrder& b) {
  require_same_category(a.category, b.category);
  for (int x = 0; x < a.category->object_count(); ++x)
    if (!a.at(x).subset_of(b.at(x))) return false;
  return true;
}

bool leq(const QUBase& a, const QUBase& b) {
  require_same_category(a.category, b.category);
  for (int x = 0; x < a.category->object_count(); ++x)
    for (const auto& u : a.at(x)) {
      bool found = false;
      for (const auto& v : b.at(x)) found = found || dominated(v, u);
      if (!found) return false;
    }
  return true;
}

bool leq(const Syntop& a, const Syntop& b) {
  require_same_category(a.category, b.category);
  for (int x = 0; x < a.category->object_count(); ++x)
    for (const auto& r : a.at(x)) {
      bool found = false;
      for (const auto& r2 : b.at(x)) found = found || r.subset_of(r2);
      if (!found) return false;
    }
  return true;
}

Ordering compare(const ClosureOp& a, const ClosureOp& b) { return from_leq(leq(a, b), leq(b, a)); }
Ordering compare(const TopogenousOrder& a, const TopogenousOrder& b) { return from_leq(leq(a, b), leq(b, a)); }
Ordering compare(const QUBase& a, const QUBase& b) { return from_leq(leq(a, b), leq(b, a)); }
Ordering compare(const Syntop& a, const Syntop& b) { return from_leq(leq(a, b), leq(b, a)); }

Ordering compare(const Structure& a, const Structure& b) {
  if (a.index() != b.index())
    throw InputError(std::string("cannot compare a ") + kind_name(a) + " with a " + kind_name(b));
  return std::visit(
      [&](const auto& va) -> Ordering {
        using T = std::decay_t<decltype(va)>;
        return compare(va, std::get<T>(b));
      },
      a);
}

bool satisfies_t1(const Relation& r) { return t1_witness(r).empty(); }
bool satisfies_t2(const Relation& r) { return t2_witness(r).empty(); }
bool is_meet_preserving(const Relation& r) { return meet_witness(r).empty(); }
bool is_interpolative(const Relation& r) { return interpolation_witness(r).empty(); }

bool is_idempotent(const ClosureOp& c) {
  for (const auto& t : c.tables)
    if (!t.is_idempotent()) return false;
  return true;
}

bool is_meet_preserving(const TopogenousOrder& t) {
  for (const auto& r : t.relations)
    if (!is_meet_preserving(r)) return false;
  return true;
}

bool is_interpolative(const TopogenousOrder& t) {
  for (const auto& r : t.relations)
    if (!is_interpolative(r)) return false;
  return true;
}

bool is_interpolative(const Syntop& s) {
  for (const auto& fam : s.members)
    for (const auto& r : fam)
      if (!is_interpolative(r)) return false;
  return true;
}

bool is_coperfect(const Syntop& s) {
  for (const auto& fam : s.members)
    for (const auto& r : fam)
      if (!is_meet_preserving(r)) return false;
  return true;
}

bool is_simple(const Syntop& s) {
  for (const auto& fam : s.members)
    if (fam.size() != 1 || !is_interpolative(fam.front())) return false;
  return true;
}

bool is_transitive_base(const QUBase& b) {
  for (const auto& fam : b.maps)
    for (const auto& u : fam)
      if (!u.is_idempotent()) return false;
  return true;
}

std::vector<Leg> morphism_legs(const FinCategory& c, int f) {
  const auto& mf = c.morphism(f);
  return {Leg{mf.dom, mf.cod, c.transport(f), "morphism " + mf.id}};
}

std::vector<Leg> functor_legs(const FunctorData& f) {
  std::vector<Leg> legs;
  for (int x = 0; x < f.source->object_count(); ++x)
    legs.push_back(Leg{x, f.object(x), f.transport(x), f.id + " at " + f.source->object(x).id});
  return legs;
}

std::vector<Leg> fibration_legs(const FibrationData& fd) {
  std::vector<Leg> legs;
  const auto& F = fd.functor;
  for (int x = 0; x < F.source->object_count(); ++x) {
    SubsetTransport t;
    t.from = F.source->carrier_size(x);
    t.to = F.target->carrier_size(F.object(x));
    t.forward = fd.gamma.at(static_cast<std::size_t>(x));
    t.backward = fd.delta.at(static_cast<std::size_t>(x));
    legs.push_back(Leg{x, F.object(x), std::move(t), fd.id + " at " + F.source->object(x).id});
  }
  return legs;
}

std::vector<Leg> component_legs(const NatTransData& n) {
  std::vector<Leg> legs;
  const auto& C = *n.source.target;
  for (int x = 0; x < n.source.source->object_count(); ++x) {
    const int c = n.component(x);
    legs.push_back(Leg{C.morphism(c).dom, C.morphism(c).cod, C.transport(c),
                       n.id + " at " + n.source.source->object(x).id});
  }
  return legs;
}

std::string continuity_witness(const Syntop& a, const Syntop& b, std::span<const Leg> legs) {
  for (const auto& leg : legs) {
    const auto& targets = b.at(leg.to);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const Relation req = required_relation(targets[j], leg.transport);
      bool found = false;
      for (const auto& r : a.at(leg.from)) found = found || req.subset_of(r);
      if (!found)
        return leg_label(*a.category, leg) + ": target member " + std::to_string(j) + " has no source member";
    }
  }
  return {};
}

std::string continuity_witness(const TopogenousOrder& a, const TopogenousOrder& b, std::span<const Leg> legs) {
  for (const auto& leg : legs) {
    const Relation req = required_relation(b.at(leg.to), leg.transport);
    if (!req.subset_of(a.at(leg.from))) {
      const Mask full_from = full_mask(leg.transport.from);
      const Mask full_to = full_mask(leg.transport.to);
      for (Mask m = 0; m <= full_from; ++m)
        for (Mask n = 0; n <= full_to; ++n)
          if (b.at(leg.to).test(leg.transport.image(m), n) && !a.at(leg.from).test(m, leg.transport.preimage(n)))
            return leg_label(*a.category, leg) + ": f(m) related to n but m not related to f^-1(n) for (m,n) = " +
                   pair_text(m, n);
    }
  }
  return {};
}

std::string continuity_witness(const QUBase& a, const QUBase& b, std::span<const Leg> legs) {
  for (const auto& leg : legs) {
    const auto& t = leg.transport;
    const auto& targets = b.at(leg.to);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const auto& v = targets[j];
      bool found = false;
      for (const auto& u : a.at(leg.from)) {
        bool ok = true;
        for (Mask m = 0; ok && m < u.size(); ++m) ok = is_subset(t.image(u(m)), v(t.image(m)));
        found = found || ok;
        if (found) break;
      }
      if (!found)
        return leg_label(*a.category, leg) + ": target member " + std::to_string(j) + " has no source member";
    }
  }
  return {};
}

std::string continuity_witness(const ClosureOp& a, const ClosureOp& b, std::span<const Leg> legs) {
  for (const auto& leg : legs) {
    const auto& t = leg.transport;
    const auto& ca = a.at(leg.from);
    const auto& cb = b.at(leg.to);
    for (Mask m = 0; m < ca.size(); ++m)
      if (!is_subset(t.image(ca(m)), cb(t.image(m))))
        return leg_label(*a.category, leg) + ": f(c(m)) not within c'(f(m)) for m=" + format_subset(m);
  }
  return {};
}

bool morphism_continuity(int f, const Structure& a, const Structure& b) {
  if (a.index() != b.index())
    throw InputError(std::string("continuity needs two structures of one kind, got ") + kind_name(a) + " and " +
                     kind_name(b));
  require_same_category(structure_category(a), structure_category(b));
  const auto legs = morphism_legs(*structure_category(a), f);
  return std::visit(
      [&](const auto& va) -> bool {
        using T = std::decay_t<decltype(va)>;
        return continuity_witness(va, std::get<T>(b), legs).empty();
      },
      a);
}

bool is_initial(const Syntop& s, int f) {
  const auto& C = *s.category;
  const auto& mf = C.morphism(f);
  const auto& t = C.transport(f);
  const Mask full_x = full_mask(t.from), full_y = full_mask(t.to);
  for (const auto& rx : s.at(mf.dom)) {
    bool some = false;
    for (const auto& ry : s.at(mf.cod)) {
      bool ok = true;
      for (Mask m = 0; ok && m <= full_x; ++m) {
        std::vector<Mask> reach;
        for (Mask np = 0; np <= full_y; ++np)
          if (ry.test(t.image(m), np)) reach.push_back(t.preimage(np));
        for (Mask n = 0; ok && n <= full_x; ++n) {
          if (!rx.test(m, n)) continue;
          bool hit = false;
          for (Mask p : reach) hit = hit || is_subset(p, n);
          ok = hit;
        }
      }
      if (ok) {
        some = true;
        break;
      }
    }
    if (!some) return false;
  }
  return true;
}

bool is_initial(const QUBase& b, int f) {
  const auto& C = *b.category;
  const auto& mf = C.morphism(f);
  const auto& t = C.transport(f);
  for (const auto& u : b.at(mf.dom)) {
    bool some = false;
    for (const auto& v : b.at(mf.cod)) {
      bool ok = true;
      for (Mask m = 0; ok && m < u.size(); ++m) ok = is_subset(t.preimage(v(t.image(m))), u(m));
      if (ok) {
        some = true;
        break;
      }
    }
    if (!some) return false;
  }
  return true;
}

}  // namespace synlab
