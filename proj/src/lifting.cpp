#include "synlab/lifting.hpp"

#include "synlab/errors.hpp"
#include "synlab/galois.hpp"

namespace synlab {

namespace {

void require_valid(const Report& r) {
  if (const Check* c = r.first_failure(); c) throw Refused(r.subject() + " is invalid: " + c->name + ": " + c->witness);
}

void require_on(const CategoryPtr& structure_cat, const CategoryPtr& expected, const std::string& what) {
  if (structure_cat != expected) throw InputError(what + " is not bound to the expected category");
}

template <typename Fn>
EndoMap endomap(int carrier, Fn&& fn) {
  std::vector<Mask> t(powerset_size(carrier));
  for (Mask m = 0; m < t.size(); ++m) t[m] = fn(m);
  return EndoMap(carrier, std::move(t));
}

// Subset transports of the unit / counit components.
std::vector<const SubsetTransport*> component_transports(const NatTransData& n) {
  std::vector<const SubsetTransport*> out;
  const auto& C = *n.source.target;
  for (int x = 0; x < n.source.source->object_count(); ++x) out.push_back(&C.transport(n.component(x)));
  return out;
}

void require_pointed(const PointedEndo& p) {
  require_valid(validate_pointed(p));
  if (!p.category().powerset_ready()) throw InputError("pointed endofunctor category exceeds the powerset-table cap");
}

void require_copointed(const CopointedEndo& q) {
  require_valid(validate_copointed(q));
  if (!q.m_copointed()) {
    const auto& C = q.category();
    for (int x = 0; x < C.object_count(); ++x)
      if (!C.morphism(q.counit.component(x)).injective())
        throw Refused("copointed endofunctor " + q.id + " is not M-copointed: counit at " + C.object(x).id +
                      " is not injective");
  }
}

void require_adjunction(const AdjunctionData& ad) {
  if (!ad.left.has_carrier_maps() || !ad.right.has_carrier_maps())
    throw Refused("adjunction " + ad.id + ": F and G need carrier maps to act on subobjects");
  require_valid(validate_adjunction(ad));
}

}  // namespace

Syntop lift_pointed_syntop(const Syntop& s, const PointedEndo& p) {
  require_pointed(p);
  require_on(s.category, p.functor.source, "syntopogenous structure " + s.id);
  require_valid(validate_syntop(s));
  if (!p.e_pointed()) {
    if (!is_coperfect(s))
      throw Refused("pointed endofunctor " + p.id + " is not E-pointed and " + s.id + " is not co-perfect");
    auto lifted = syntop_of_qubase(lift_pointed_qubase(qubase_of_syntop(s), p));
    lifted.id = s.id + "^(" + p.id + ")";
    return lifted;
  }
  const auto& C = p.category();
  const auto eta = component_transports(p.unit);
  Syntop out{s.id + "^(" + p.id + ")", s.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eta[static_cast<std::size_t>(x)];
    const int fx = p.functor.object(x);
    const Mask full_x = full_mask(t.from);
    const Mask full_fx = full_mask(t.to);
    std::vector<Relation> members;
    for (const auto& r : s.at(fx)) {
      Relation lifted(t.from);
      for (Mask m = 0; m <= full_x; ++m) {
        const Mask em = t.image(m);
        for (Mask q = 0; q <= full_fx; ++q)
          if (r.test(em, q)) lifted.set(m, t.preimage(q));
      }
      lifted.saturate();
      members.push_back(std::move(lifted));
    }
    out.members.push_back(std::move(members));
  }
  return out;
}

QUBase lift_pointed_qubase(const QUBase& b, const PointedEndo& p) {
  require_pointed(p);
  require_on(b.category, p.functor.source, "base " + b.id);
  require_valid(validate_qubase(b));
  const auto& C = p.category();
  const auto eta = component_transports(p.unit);
  QUBase out{b.id + "^(" + p.id + ")", b.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eta[static_cast<std::size_t>(x)];
    std::vector<EndoMap> maps;
    for (const auto& u : b.at(p.functor.object(x)))
      maps.push_back(endomap(t.from, [&](Mask m) { return t.preimage(u(t.image(m))); }));
    out.maps.push_back(std::move(maps));
  }
  return out;
}

ClosureOp lift_pointed_closure(const ClosureOp& c, const PointedEndo& p) {
  require_pointed(p);
  require_on(c.category, p.functor.source, "closure " + c.id);
  require_valid(validate_closure(c));
  const auto& C = p.category();
  const auto eta = component_transports(p.unit);
  ClosureOp out{c.id + "^(" + p.id + ")", c.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eta[static_cast<std::size_t>(x)];
    const auto& cf = c.at(p.functor.object(x));
    out.tables.push_back(endomap(t.from, [&](Mask m) { return t.preimage(cf(t.image(m))); }));
  }
  return out;
}

Syntop lift_copointed_syntop(const Syntop& s, const CopointedEndo& q) {
  require_copointed(q);
  require_on(s.category, q.functor.source, "syntopogenous structure " + s.id);
  require_valid(validate_syntop(s));
  const auto& C = q.category();
  const auto eps = component_transports(q.counit);
  Syntop out{s.id + "^(" + q.id + ")", s.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eps[static_cast<std::size_t>(x)];  // GX -> X
    const Mask full = full_mask(t.to);
    std::vector<Relation> members;
    for (const auto& r : s.at(q.functor.object(x))) {
      Relation lifted(t.to);
      for (Mask m = 0; m <= full; ++m)
        for (Mask n = 0; n <= full; ++n)
          if (is_subset(m, n) && r.test(t.preimage(m), t.preimage(n))) lifted.set(m, n);
      members.push_back(std::move(lifted));
    }
    out.members.push_back(std::move(members));
  }
  return out;
}

QUBase lift_copointed_qubase(const QUBase& b, const CopointedEndo& q) {
  require_copointed(q);
  require_on(b.category, q.functor.source, "base " + b.id);
  require_valid(validate_qubase(b));
  const auto& C = q.category();
  const auto eps = component_transports(q.counit);
  QUBase out{b.id + "^(" + q.id + ")", b.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eps[static_cast<std::size_t>(x)];
    std::vector<EndoMap> maps;
    for (const auto& v : b.at(q.functor.object(x)))
      maps.push_back(endomap(t.to, [&](Mask m) { return m | t.image(v(t.preimage(m))); }));
    out.maps.push_back(std::move(maps));
  }
  return out;
}

ClosureOp lift_copointed_closure(const ClosureOp& c, const CopointedEndo& q) {
  require_copointed(q);
  require_on(c.category, q.functor.source, "closure " + c.id);
  require_valid(validate_closure(c));
  const auto& C = q.category();
  const auto eps = component_transports(q.counit);
  ClosureOp out{c.id + "^(" + q.id + ")", c.category, {}};
  for (int x = 0; x < C.object_count(); ++x) {
    const auto& t = *eps[static_cast<std::size_t>(x)];
    const auto& cg = c.at(q.functor.object(x));
    out.tables.push_back(endomap(t.to, [&](Mask m) { return m | t.image(cg(t.preimage(m))); }));
  }
  return out;
}

Syntop lift_fibration_syntop(const Syntop& s, const FibrationData& fd) {
  require_valid(validate_fibration(fd));
  require_on(s.category, fd.functor.target, "syntopogenous structure " + s.id);
  require_valid(validate_syntop(s));
  const auto& A = *fd.functor.source;
  Syntop out{s.id + "^(" + fd.id + ")", fd.functor.source, {}};
  for (int x = 0; x < A.object_count(); ++x) {
    const Mask full = full_mask(A.carrier_size(x));
    std::vector<Relation> members;
    for (const auto& r : s.at(fd.functor.object(x))) {
      Relation lifted(A.carrier_size(x));
      for (Mask m = 0; m <= full; ++m)
        for (Mask n = 0; n <= full; ++n)
          if (r.test(fd.up(x, m), fd.up(x, n))) lifted.set(m, n);
      members.push_back(std::move(lifted));
    }
    out.members.push_back(std::move(members));
  }
  return out;
}

QUBase lift_fibration_qubase(const QUBase& b, const FibrationData& fd) {
  require_valid(validate_fibration(fd));
  require_on(b.category, fd.functor.target, "base " + b.id);
  require_valid(validate_qubase(b));
  const auto& A = *fd.functor.source;
  QUBase out{b.id + "^(" + fd.id + ")", fd.functor.source, {}};
  for (int x = 0; x < A.object_count(); ++x) {
    std::vector<EndoMap> maps;
    for (const auto& u : b.at(fd.functor.object(x)))
      maps.push_back(endomap(A.carrier_size(x), [&](Mask m) { return fd.down(x, u(fd.up(x, m))); }));
    out.maps.push_back(std::move(maps));
  }
  return out;
}

ClosureOp lift_fibration_closure(const ClosureOp& c, const FibrationData& fd) {
  require_valid(validate_fibration(fd));
  require_on(c.category, fd.functor.target, "closure " + c.id);
  require_valid(validate_closure(c));
  const auto& A = *fd.functor.source;
  ClosureOp out{c.id + "^(" + fd.id + ")", fd.functor.source, {}};
  for (int x = 0; x < A.object_count(); ++x) {
    const auto& cf = c.at(fd.functor.object(x));
    out.tables.push_back(endomap(A.carrier_size(x), [&](Mask m) { return fd.down(x, cf(fd.up(x, m))); }));
  }
  return out;
}

namespace {

// η_X⁻¹(G u(F m)) for an endomap u on FX.
template <typename U>
EndoMap adjoint_pullback(const AdjunctionData& ad, int x, const U& u) {
  const auto& A = ad.domain();
  const int fx = ad.left.object(x);
  const auto& eta = A.transport(ad.unit.component(x));
  return endomap(A.carrier_size(x),
                 [&](Mask m) { return eta.preimage(ad.right.apply(fx, u(ad.left.apply(x, m)))); });
}

}  // namespace

QUBase lift_adjoint_qubase(const QUBase& b, const AdjunctionData& ad) {
  require_adjunction(ad);
  require_on(b.category, ad.left.target, "base " + b.id);
  require_valid(validate_qubase(b));
  const auto& A = ad.domain();
  QUBase out{b.id + "^(" + ad.id + ")", ad.left.source, {}};
  for (int x = 0; x < A.object_count(); ++x) {
    std::vector<EndoMap> maps;
    for (const auto& u : b.at(ad.left.object(x))) maps.push_back(adjoint_pullback(ad, x, u));
    out.maps.push_back(std::move(maps));
  }
  return out;
}

Syntop lift_adjoint_syntop(const Syntop& s, const AdjunctionData& ad) {
  require_adjunction(ad);
  require_on(s.category, ad.left.target, "syntopogenous structure " + s.id);
  if (!is_coperfect(s)) {
    require_valid(validate_syntop(s));
    throw Refused("syntopogenous structure " + s.id + " is not co-perfect");
  }
  const QUBase lifted = lift_adjoint_qubase(qubase_of_syntop(s), ad);
  Syntop out{s.id + "^(" + ad.id + ")", ad.left.source, {}};
  for (const auto& fam : lifted.maps) {
    std::vector<Relation> members;
    for (const auto& u : fam) members.push_back(Relation::from_endomap(u));
    out.members.push_back(std::move(members));
  }
  return out;
}

ClosureOp lift_adjoint_closure(const ClosureOp& c, const AdjunctionData& ad) {
  require_adjunction(ad);
  require_on(c.category, ad.left.target, "closure " + c.id);
  require_valid(validate_closure(c));
  const auto& A = ad.domain();
  ClosureOp out{c.id + "^(" + ad.id + ")", ad.left.source, {}};
  for (int x = 0; x < A.object_count(); ++x) out.tables.push_back(adjoint_pullback(ad, x, c.at(ad.left.object(x))));
  return out;
}

const char* family_name(const Transformation& t) {
  static constexpr const char* names[] = {"pointed", "copointed", "fibration", "adjoint"};
  return names[t.index()];
}

const std::string& transformation_id(const Transformation& t) {
  return std::visit([](const auto& v) -> const std::string& { return v.id; }, t);
}

CategoryPtr lift_input_category(const Transformation& t) {
  return std::visit(
      [](const auto& v) -> CategoryPtr {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AdjunctionData>) return v.left.target;
        else if constexpr (std::is_same_v<T, FibrationData>) return v.functor.target;
        else return v.functor.source;
      },
      t);
}

CategoryPtr lift_output_category(const Transformation& t) {
  return std::visit(
      [](const auto& v) -> CategoryPtr {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, AdjunctionData>) return v.left.source;
        else return v.functor.source;
      },
      t);
}

Structure lift(const Structure& s, const Transformation& t) {
  if (std::holds_alternative<TopogenousOrder>(s))
    throw InputError("topogenous orders are lifted through their closure or syntopogenous form");
  return std::visit(
      [&](const auto& tr) -> Structure {
        using T = std::decay_t<decltype(tr)>;
        if constexpr (std::is_same_v<T, PointedEndo>) {
          if (auto* v = std::get_if<Syntop>(&s)) return lift_pointed_syntop(*v, tr);
          if (auto* v = std::get_if<QUBase>(&s)) return lift_pointed_qubase(*v, tr);
          return lift_pointed_closure(std::get<ClosureOp>(s), tr);
        } else if constexpr (std::is_same_v<T, CopointedEndo>) {
          if (auto* v = std::get_if<Syntop>(&s)) return lift_copointed_syntop(*v, tr);
          if (auto* v = std::get_if<QUBase>(&s)) return lift_copointed_qubase(*v, tr);
          return lift_copointed_closure(std::get<ClosureOp>(s), tr);
        } else if constexpr (std::is_same_v<T, FibrationData>) {
          if (auto* v = std::get_if<Syntop>(&s)) return lift_fibration_syntop(*v, tr);
          if (auto* v = std::get_if<QUBase>(&s)) return lift_fibration_qubase(*v, tr);
          return lift_fibration_closure(std::get<ClosureOp>(s), tr);
        } else {
          if (auto* v = std::get_if<Syntop>(&s)) return lift_adjoint_syntop(*v, tr);
          if (auto* v = std::get_if<QUBase>(&s)) return lift_adjoint_qubase(*v, tr);
          return lift_adjoint_closure(std::get<ClosureOp>(s), tr);
        }
      },
      t);
}

const char* extremal_name(Extremal e) {
  switch (e) {
    case Extremal::coarsest: return "coarsest";
    case Extremal::finest: return "finest";
    case Extremal::least: return "least";
    default: return "largest";
  }
}

Extremal parse_extremal(std::string_view name) {
  for (auto e : {Extremal::coarsest, Extremal::finest, Extremal::least, Extremal::largest})
    if (name == extremal_name(e)) return e;
  throw InputError("unknown direction " + std::string(name) + " (coarsest, finest, least, largest)");
}

bool lifted_below(Extremal e) { return e == Extremal::coarsest || e == Extremal::least; }

Extremal claimed_extremal(const Transformation& t, const Structure& input) {
  const bool closure = std::holds_alternative<ClosureOp>(input);
  if (std::holds_alternative<CopointedEndo>(t)) return closure ? Extremal::least : Extremal::finest;
  return closure ? Extremal::largest : Extremal::coarsest;
}

std::string lift_formula(const Transformation& t, const Structure& input) {
  static constexpr const char* table[4][3] = {
      {"m <^{F,eta} n iff exists p in sub FX: eta(m) <_FX p and eta^-1(p) within n",
       "U^{F,eta}(m) = eta^-1(U_FX(eta(m)))", "c^{F,eta}(m) = eta^-1(c_FX(eta(m)))"},
      {"m <^{G,eps} n iff m within n and eps^-1(m) <_GX eps^-1(n)", "V^{G,eps}(m) = m | eps(V_GX(eps^-1(m)))",
       "c^{G,eps}(m) = m | eps(c_GX(eps^-1(m)))"},
      {"m <^F n iff gamma(m) <_FX gamma(n)", "U^F(m) = delta(U_FX(gamma(m)))", "c^F(m) = delta(c_FX(gamma(m)))"},
      {"m <^eta n iff eta^-1(G U^<(F m)) within n", "U^eta(m) = eta^-1(G U_FX(F m))",
       "c^eta(m) = eta^-1(G c_FX(F m))"},
  };
  int col = 0;
  if (std::holds_alternative<QUBase>(input)) col = 1;
  else if (std::holds_alternative<ClosureOp>(input)) col = 2;
  else if (std::holds_alternative<TopogenousOrder>(input)) return "no direct lift for topogenous orders";
  return table[t.index()][col];
}

std::string designated_continuity_witness(const Transformation& t, const Structure& input,
                                          const Structure& candidate) {
  if (input.index() != candidate.index())
    throw InputError(std::string("candidate is a ") + kind_name(candidate) + ", expected a " + kind_name(input));
  return std::visit(
      [&](const auto& tr) -> std::string {
        using T = std::decay_t<decltype(tr)>;
        std::vector<Leg> legs;
        if constexpr (std::is_same_v<T, PointedEndo>) legs = component_legs(tr.unit);
        else if constexpr (std::is_same_v<T, CopointedEndo>) legs = component_legs(tr.counit);
        else if constexpr (std::is_same_v<T, FibrationData>) legs = fibration_legs(tr);
        else legs = functor_legs(tr.left);
        return std::visit(
            [&](const auto& in) -> std::string {
              using S = std::decay_t<decltype(in)>;
              const auto& cand = std::get<S>(candidate);
              if constexpr (std::is_same_v<T, CopointedEndo>) return continuity_witness(in, cand, legs);
              else return continuity_witness(cand, in, legs);
            },
            input);
      },
      t);
}

}  // namespace synlab

