#include "synlab/galois.hpp"

#include "synlab/errors.hpp"

namespace synlab {

namespace {

void require_valid(const Report& r) {
  if (const Check* c = r.first_failure(); c) throw Refused(r.subject() + " is invalid: " + c->name + ": " + c->witness);
}

}  // namespace

EndoMap endomap_of_relation(const Relation& r) {
  std::vector<Mask> t(powerset_size(r.carrier()));
  for (Mask m = 0; m < t.size(); ++m) t[m] = r.meet_of_row(m);
  return EndoMap(r.carrier(), std::move(t));
}

ClosureOp closure_of_topogenous(const TopogenousOrder& t) {
  require_valid(validate_topogenous(t));
  ClosureOp out{"c(" + t.id + ")", t.category, {}};
  for (int x = 0; x < t.category->object_count(); ++x) {
    const auto& r = t.at(x);
    if (!is_meet_preserving(r)) {
      for (Mask m = 0; m < powerset_size(r.carrier()); ++m)
        if (!r.test(m, r.meet_of_row(m)))
          throw Refused("topogenous order " + t.id + " is not meet-preserving at " + t.category->object(x).id +
                        ": " + format_subset(m) + " is not related to " + format_subset(r.meet_of_row(m)));
    }
    out.tables.push_back(endomap_of_relation(r));
  }
  return out;
}

TopogenousOrder topogenous_of_closure(const ClosureOp& c) {
  require_valid(validate_closure(c));
  TopogenousOrder out{"t(" + c.id + ")", c.category, {}};
  for (const auto& table : c.tables) out.relations.push_back(Relation::from_endomap(table));
  return out;
}

Syntop syntop_of_qubase(const QUBase& b) {
  require_valid(validate_qubase(b));
  Syntop out{"S(" + b.id + ")", b.category, {}};
  for (const auto& fam : b.maps) {
    std::vector<Relation> members;
    for (const auto& u : fam) members.push_back(Relation::from_endomap(u));
    out.members.push_back(std::move(members));
  }
  return out;
}

QUBase qubase_of_syntop(const Syntop& s) {
  require_valid(validate_syntop(s));
  QUBase out{"B(" + s.id + ")", s.category, {}};
  for (int x = 0; x < s.category->object_count(); ++x) {
    std::vector<EndoMap> maps;
    const auto& fam = s.at(x);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (!is_meet_preserving(fam[i]))
        throw Refused("syntopogenous structure " + s.id + " is not co-perfect: member " + std::to_string(i) +
                      " at " + s.category->object(x).id + " does not preserve meets");
      maps.push_back(endomap_of_relation(fam[i]));
    }
    out.maps.push_back(std::move(maps));
  }
  return out;
}

}  // namespace synlab
