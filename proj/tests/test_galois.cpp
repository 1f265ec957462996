#include "doctest.h"
#include "support.hpp"
#include "synlab/errors.hpp"
#include "synlab/galois.hpp"
#include "synlab/oracle.hpp"

using namespace synlab;

namespace {

EndoMap table_of(int n, auto fn) {
  std::vector<Mask> t(powerset_size(n));
  for (Mask m = 0; m < t.size(); ++m) t[m] = fn(m);
  return EndoMap(n, std::move(t));
}

// ⊏_{m ∪ {0}} ∪ ⊏_{m ∪ {1}}: interpolative but not meet-preserving.
Relation non_meet_preserving() {
  auto r = Relation::from_endomap(table_of(2, [](Mask m) { return m | 1u; }));
  r |= Relation::from_endomap(table_of(2, [](Mask m) { return m | 2u; }));
  return r;
}

std::vector<CategoryPtr> small_categories() {
  std::vector<CategoryPtr> out{test::one_object(0), test::one_object(1), test::one_object(2),
                               test::one_object(2, true), build_finset_category("Set", {1, 2})};
  std::vector<FinTopSpace> spaces;
  for (int n = 1; n <= 2; ++n)
    for (auto& s : enumerate_topologies(n)) spaces.push_back(s);
  out.push_back(build_fintop_category("Top", spaces).category);
  return out;
}

}  // namespace

TEST_CASE("closure of topogenous") {
  const auto one2 = test::one_object(2);
  CHECK(closure_of_topogenous(discrete_topogenous(one2)).tables == identity_closure(one2).tables);

  Relation coarse(2);
  for (Mask m = 0; m < 4; ++m)
    for (Mask n = 0; n < 4; ++n)
      if (m == 0 || n == 0b11) coarse.set(m, n);
  const auto c = closure_of_topogenous(TopogenousOrder{"coarse", one2, {coarse}});
  CHECK(c.at(0)(0) == 0u);
  for (Mask m = 1; m < 4; ++m) CHECK(c.at(0)(m) == 0b11u);

  const auto sc = build_fintop_category("Top", {sierpinski_space()});
  const auto k = kuratowski_closure(sc);
  CHECK(closure_of_topogenous(topogenous_of_closure(k)).tables == k.tables);

  CHECK_THROWS_AS(closure_of_topogenous(TopogenousOrder{"nmp", one2, {non_meet_preserving()}}), Refused);
  auto bad = Relation::discrete(2);
  bad.set(0b01, 0);
  CHECK_THROWS_AS(closure_of_topogenous(TopogenousOrder{"bad", one2, {bad}}), Refused);
}

TEST_CASE("topogenous of closure") {
  const auto one2 = test::one_object(2);
  CHECK(topogenous_of_closure(identity_closure(one2)).relations == discrete_topogenous(one2).relations);
  const auto top = topogenous_of_closure(top_closure(one2));
  for (Mask m = 0; m < 4; ++m)
    for (Mask n = 0; n < 4; ++n) CHECK(top.at(0).test(m, n) == (n == 0b11));

  const auto sc = build_fintop_category("Top", {sierpinski_space()});
  const auto t = topogenous_of_closure(kuratowski_closure(sc));
  for (Mask n = 0; n < 4; ++n) CHECK(t.at(0).test(0b10, n) == (n == 0b11));
  CHECK(is_meet_preserving(t));
  CHECK(validate_topogenous(t).ok());

  const ClosureOp shrink{"bad", one2, {table_of(2, [](Mask m) { return m & 1u; })}};
  CHECK_THROWS_AS(topogenous_of_closure(shrink), Refused);
}

TEST_CASE("syntop of base and back") {
  const auto one2 = test::one_object(2);
  CHECK(syntop_of_qubase(identity_base(one2)).members == discrete_syntop(one2).members);
  CHECK(qubase_of_syntop(discrete_syntop(one2)).maps == identity_base(one2).maps);

  // R = Δ ∪ {(0,1)}
  const auto R = make_preorder(2, {0b11, 0b10});
  const QUBase b{"UR", one2, {{endomap_from_preorder(R)}}};
  const auto s = syntop_of_qubase(b);
  REQUIRE(s.at(0).size() == 1u);
  for (Mask m = 0; m < 4; ++m)
    for (Mask n = 0; n < 4; ++n) CHECK(s.at(0)[0].test(m, n) == is_subset(R.image(m), n));
  CHECK(validate_syntop(s).ok());
  CHECK(is_coperfect(s));
  const auto back = qubase_of_syntop(s);
  CHECK(back.maps == b.maps);

  const QUBase two{"two", one2, {{endomap_from_preorder(R), EndoMap::top(2)}}};
  REQUIRE(validate_qubase(two).ok());
  const auto s2 = syntop_of_qubase(two);
  CHECK(s2.at(0).size() == 2u);
  CHECK(validate_syntop(s2).ok());

  const auto k = kuratowski_closure(build_fintop_category("Top", {three_point_space()}));
  const auto tb = qubase_of_syntop(simple_syntop(k));
  CHECK(is_transitive_base(tb));
  CHECK(tb.at(0).size() == 1u);

  CHECK_THROWS_AS(qubase_of_syntop(Syntop{"nc", one2, {{non_meet_preserving()}}}), Refused);
}

TEST_CASE("round trips on enumerated structures") {
  for (const auto& c : small_categories()) {
    CAPTURE(c->id());
    const auto closures = enumerate_closures(c);
    for (const auto& cl : closures) {
      const auto t = topogenous_of_closure(cl);
      CHECK(is_meet_preserving(t));
      CHECK(closure_of_topogenous(t).tables == cl.tables);
      if (is_idempotent(cl)) CHECK(is_interpolative(t));
    }
    std::size_t meet_preserving = 0;
    for (const auto& t : enumerate_topogenous(c)) {
      if (!is_meet_preserving(t)) continue;
      ++meet_preserving;
      const auto cl = closure_of_topogenous(t);
      CHECK(topogenous_of_closure(cl).relations == t.relations);
      if (is_interpolative(t)) CHECK(is_idempotent(cl));
    }
    CHECK(meet_preserving == closures.size());

    for (const auto& b : enumerate_principal_qubases(c)) {
      const auto s = syntop_of_qubase(b);
      CHECK(compare(qubase_of_syntop(s), b) == Ordering::equal);
      const auto s2 = syntop_of_qubase(qubase_of_syntop(s));
      for (int x = 0; x < c->object_count(); ++x) CHECK(s2.union_at(x) == s.union_at(x));
    }
  }
}

TEST_CASE("translations are monotone") {
  const auto c = test::one_object(2, true);
  const auto closures = enumerate_closures(c);
  for (const auto& a : closures)
    for (const auto& b : closures)
      CHECK(leq(a, b) == leq(topogenous_of_closure(b), topogenous_of_closure(a)));
}

TEST_CASE("all bases at carrier 2 round trip") {
  const auto one2 = test::one_object(2);
  for (const auto& b : enumerate_all_qubases(one2)) {
    const auto s = syntop_of_qubase(b);
    CHECK(validate_syntop(s).ok());
    CHECK(compare(qubase_of_syntop(s), b) == Ordering::equal);
  }
}
