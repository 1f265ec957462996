#include "doctest.h"
#include "support.hpp"
#include "synlab/errors.hpp"
#include "synlab/galois.hpp"
#include "synlab/lifting.hpp"
#include "synlab/oracle.hpp"

using namespace synlab;

namespace {

EndoMap table_of(int n, auto fn) {
  std::vector<Mask> t(powerset_size(n));
  for (Mask m = 0; m < t.size(); ++m) t[m] = fn(m);
  return EndoMap(n, std::move(t));
}

std::vector<FinTopSpace> spaces_upto(int n) {
  std::vector<FinTopSpace> out;
  for (int k = 1; k <= n; ++k)
    for (auto& s : enumerate_topologies(k)) out.push_back(s);
  return out;
}

// One object {0,1} with id and k = constant 0.
CategoryPtr with_constant() {
  std::vector<FinObject> objs{{"X", {"0", "1"}}};
  std::vector<FinMorphism> ms{{"id", 0, 0, {0, 1}, true}, {"k", 0, 0, {0, 0}, false}};
  return std::make_shared<const FinCategory>("K", objs, ms);
}

// F(X) = X, F(k) = id, with the constant k as unit / counit component.
FunctorData collapse_k(const CategoryPtr& c) {
  auto F = FunctorData::identity(c);
  F.id = "Fk";
  F.morphism_map = {0, 0};
  F.carrier_maps.clear();
  return F;
}

// {⊏_{m∪{0}} ∪ ⊏_{m∪{1}}, discrete}: valid but not co-perfect.
Syntop non_coperfect(const CategoryPtr& c) {
  auto r = Relation::from_endomap(table_of(2, [](Mask m) { return m | 1u; }));
  r |= Relation::from_endomap(table_of(2, [](Mask m) { return m | 2u; }));
  return Syntop{"nc", c, {{r, Relation::discrete(2)}}};
}

}  // namespace

TEST_CASE("identity lifts return the input") {
  const auto sc = build_fintop_category("Top", spaces_upto(2));
  const auto c = sc.category;
  const auto k = kuratowski_closure(sc);
  const Structure inputs[] = {k, principal_base(k), simple_syntop(k)};
  const Transformation ts[] = {test::identity_pointed(c), test::identity_copointed(c), test::identity_fibration(c),
                               test::identity_adjunction(c)};
  for (const auto& t : ts)
    for (const auto& s : inputs) {
      CAPTURE(family_name(t));
      CAPTURE(kind_name(s));
      const auto lifted = lift(s, t);
      CHECK(compare(lifted, s) == Ordering::equal);
      CHECK(designated_continuity_witness(t, s, lifted).empty());
    }
  for (const auto& cl : enumerate_closures(c))
    for (const auto& t : ts) CHECK(compare(lift(Structure{cl}, t), Structure{cl}) == Ordering::equal);
  CHECK_THROWS_AS(lift(Structure{topogenous_of_closure(k)}, ts[0]), InputError);
}

TEST_CASE("pointed lift along the T0 reflection") {
  const auto sc = build_fintop_category("Top", with_t0_quotients({three_point_space()}));
  const auto p = t0_reflection(sc);
  const auto k = kuratowski_closure(sc);
  const int x = sc.index_of(three_point_space());
  const auto eta = sc.category->morphism(p.unit.component(x));
  const auto fx = sc.spaces[static_cast<std::size_t>(p.functor.object(x))];
  const auto formula = [&](Mask m) {
    return preimage_of(eta.map, fx.n, test::ref_closure(fx, image_of(eta.map, m)));
  };

  const auto lc = lift_pointed_closure(k, p);
  CHECK(lc.at(x)(0b001) == 0b111u);
  for (Mask m = 0; m < 8; ++m) {
    CHECK(lc.at(x)(m) == formula(m));
    CHECK(lc.at(x)(m) == test::ref_closure(three_point_space(), m));
  }
  CHECK(is_idempotent(lc));
  CHECK(designated_continuity_witness(p, k, lc).empty());

  const auto ls = lift_pointed_syntop(simple_syntop(k), p);
  REQUIRE(ls.at(x).size() == 1u);
  for (Mask n = 0; n < 8; ++n) CHECK(ls.at(x)[0].test(0b001, n) == (n == 0b111));
  for (Mask m = 0; m < 8; ++m)
    for (Mask n = 0; n < 8; ++n) CHECK(ls.at(x)[0].test(m, n) == is_subset(formula(m), n));
  CHECK(is_interpolative(ls));
  CHECK(is_coperfect(ls));

  const auto lb = lift_pointed_qubase(principal_base(k), p);
  CHECK(lb.at(x)[0](0b001) == 0b111u);
  CHECK(is_transitive_base(lb));

  const auto ld = lift_pointed_qubase(identity_base(sc.category), p);
  for (Mask m = 0; m < 8; ++m)
    CHECK(ld.at(x)[0](m) == preimage_of(eta.map, fx.n, image_of(eta.map, m)));
}

TEST_CASE("pointed lift collapsing to a point") {
  const auto sc = build_fintop_category("Top", with_t0_quotients({indiscrete_space(2)}));
  const auto p = t0_reflection(sc);
  const auto lc = lift_pointed_closure(kuratowski_closure(sc), p);
  const int x = sc.index_of(indiscrete_space(2));
  CHECK(lc.at(x)(0) == 0u);
  for (Mask m = 1; m < 4; ++m) CHECK(lc.at(x)(m) == 0b11u);
}

TEST_CASE("pointed lift without E-pointedness") {
  const auto c = with_constant();
  const auto F = collapse_k(c);
  PointedEndo p{"pk", F, NatTransData{"eta", FunctorData::identity(c), F, {1}}};
  REQUIRE(validate_pointed(p).ok());
  REQUIRE_FALSE(p.e_pointed());
  const auto s = non_coperfect(c);
  REQUIRE(validate_syntop(s).ok());
  CHECK_THROWS_AS(lift_pointed_syntop(s, p), Refused);
  const auto lifted = lift_pointed_syntop(discrete_syntop(c), p);
  CHECK(validate_syntop(lifted).ok());
}

TEST_CASE("copointed lift along symmetrization") {
  const auto chain = make_preorder(2, {0b11, 0b10});
  const auto eq = make_preorder(2, {0b11, 0b11});
  const auto pc = build_finqunif_category("QUnif", with_symmetric_parts({chain, eq}));
  const auto q = symmetrization(pc);
  const auto base = preorder_base(pc);
  const auto lb = lift_copointed_qubase(base, q);
  const int xc = pc.index_of(chain), xe = pc.index_of(eq);
  for (Mask m = 0; m < 4; ++m) {
    CHECK(lb.at(xc)[0](m) == m);
    CHECK(lb.at(xe)[0](m) == eq.image(m));
  }
  CHECK(designated_continuity_witness(q, base, lb).empty());

  const auto ls = lift_copointed_syntop(syntop_of_qubase(base), q);
  for (Mask m = 0; m < 4; ++m)
    for (Mask n = 0; n < 4; ++n) CHECK(ls.at(xc)[0].test(m, n) == is_subset(m, n));

  const auto cl = preorder_closure(pc);
  const auto lc = lift_copointed_closure(cl, q);
  for (int x = 0; x < pc.category->object_count(); ++x) {
    const auto sym = symmetric_part(pc.preorders[static_cast<std::size_t>(x)]);
    for (Mask m = 0; m < 4; ++m) CHECK(lc.at(x)(m) == sym.image(m));
  }
  CHECK(is_idempotent(lc));

  // GX discrete gives c(m) = m
  const auto lid = lift_copointed_closure(identity_closure(pc.category), q);
  CHECK(lid.tables == identity_closure(pc.category).tables);
}

TEST_CASE("copointed lift refuses a non-injective counit") {
  const auto c = with_constant();
  const auto G = collapse_k(c);
  CopointedEndo q{"qk", G, NatTransData{"eps", G, FunctorData::identity(c), {1}}};
  REQUIRE(validate_copointed(q).ok());
  REQUIRE_FALSE(q.m_copointed());
  CHECK_THROWS_AS(lift_copointed_syntop(discrete_syntop(c), q), Refused);
}

TEST_CASE("fibration lift along the forgetful functor") {
  const auto d = bundle("forgetful");
  const auto& fd = d.fibrations[0];
  const auto& A = *fd.functor.source;
  const auto& C = fd.functor.target;
  SUBCASE("discrete lifts to discrete") {
    const auto ls = lift_fibration_syntop(discrete_syntop(C), fd);
    CHECK(ls.members == discrete_syntop(fd.functor.source).members);
    const auto lb = lift_fibration_qubase(identity_base(C), fd);
    CHECK(lb.maps == identity_base(fd.functor.source).maps);
  }
  SUBCASE("named closures lift to the same subset formula") {
    for (const auto& cl : d.closures) {
      if (cl.category != C) continue;
      const auto lc = lift_fibration_closure(cl, fd);
      CHECK(validate_closure(lc).ok());
      for (int x = 0; x < A.object_count(); ++x) CHECK(lc.at(x) == cl.at(fd.functor.object(x)));
      CHECK(designated_continuity_witness(fd, cl, lc).empty());
    }
    CHECK(lift_fibration_closure(top_closure(C), fd).tables == top_closure(fd.functor.source).tables);
  }
  SUBCASE("pointed-set variant with m | {0}") {
    const auto& pfd = d.fibrations[1];
    const ClosureOp* plus0 = nullptr;
    for (const auto& cl : d.closures)
      if (cl.id == "plus0") plus0 = &cl;
    REQUIRE(plus0 != nullptr);
    const auto lc = lift_fibration_closure(*plus0, pfd);
    for (int x = 0; x < pfd.functor.source->object_count(); ++x)
      for (Mask m = 0; m < lc.at(x).size(); ++m) CHECK(lc.at(x)(m) == (m | 1u));
  }
  SUBCASE("preorder base lifts to the same map on every space over it") {
    const auto b = principal_base(d.closures[0]);
    const auto lb = lift_fibration_qubase(b, fd);
    for (int x = 0; x < A.object_count(); ++x) CHECK(lb.at(x)[0] == b.at(fd.functor.object(x))[0]);
    CHECK(is_transitive_base(lb));
  }
  SUBCASE("initial morphisms transfer") {
    for (const auto& s : d.syntops) {
      if (s.category != C) continue;
      const auto ls = lift_fibration_syntop(s, fd);
      for (int f : fd.initial)
        if (is_initial(s, fd.functor.morphism(f))) CHECK(is_initial(ls, f));
    }
  }
}

TEST_CASE("adjoint lift along Alexandrov") {
  const auto spaces = spaces_upto(3);
  std::vector<FinPreorder> pres;
  for (const auto& s : spaces) pres.push_back(specialization(s));
  const auto sc = build_fintop_category("Top", spaces);
  const auto pc = build_finqunif_category("QUnif", pres);
  const auto ad = alexandrov_adjunction(sc, pc);
  const auto base = preorder_base(pc);
  const auto lb = lift_adjoint_qubase(base, ad);
  const auto ls = lift_adjoint_syntop(syntop_of_qubase(base), ad);
  const auto lc = lift_adjoint_closure(preorder_closure(pc), ad);
  for (int x = 0; x < sc.category->object_count(); ++x) {
    const auto& s = sc.spaces[static_cast<std::size_t>(x)];
    for (Mask a = 0; a < powerset_size(s.n); ++a) {
      CHECK(lb.at(x)[0](a) == test::ref_smallest_open(s, a));
      CHECK(lc.at(x)(a) == test::ref_smallest_open(s, a));
      for (Mask b = 0; b < powerset_size(s.n); ++b) {
        bool between = false;
        for (Mask o : s.opens) between |= is_subset(a, o) && is_subset(o, b);
        CHECK(ls.at(x)[0].test(a, b) == between);
      }
    }
  }
  const int si = sc.index_of(sierpinski_space());
  CHECK(lb.at(si)[0](0b01) == 0b11u);
  CHECK(lb.at(si)[0](0b10) == 0b10u);
  const int ti = sc.index_of(three_point_space());
  for (Mask b = 0; b < 8; ++b) CHECK(ls.at(ti)[0].test(0b001, b) == is_subset(0b011, b));
  CHECK(designated_continuity_witness(ad, base, lb).empty());
  CHECK(is_idempotent(lc));
  CHECK(is_coperfect(ls));
}

TEST_CASE("adjoint lift refuses non-co-perfect input") {
  const auto c = with_constant();
  CHECK_THROWS_AS(lift_adjoint_syntop(non_coperfect(c), test::identity_adjunction(c)), Refused);
}

TEST_CASE("reflective coherence on the T0 instance") {
  const auto d = bundle("t0");
  const auto& p = d.pointed[0];
  const auto& ad = d.adjunctions[0];
  const auto on = [&](const CategoryPtr& c, auto& list) -> decltype(&list[0]) {
    for (auto& s : list)
      if (s.category == c) return &s;
    return nullptr;
  };
  const auto* ktop = on(p.functor.source, d.closures);
  const auto* ksub = on(ad.left.target, d.closures);
  REQUIRE(ktop);
  REQUIRE(ksub);
  const auto pointed = lift_pointed_closure(*ktop, p);
  const auto adjoint = lift_adjoint_closure(*ksub, ad);
  CHECK(compare(pointed, adjoint) == Ordering::equal);
  const auto pb = lift_pointed_qubase(principal_base(*ktop), p);
  const auto ab = lift_adjoint_qubase(principal_base(*ksub), ad);
  CHECK(compare(pb, ab) == Ordering::equal);
  CHECK(compare(pb, principal_base(pointed)) == Ordering::equal);
  const auto ps = lift_pointed_syntop(simple_syntop(*ktop), p);
  const auto as = lift_adjoint_syntop(simple_syntop(*ksub), ad);
  CHECK(compare(ps, as) == Ordering::equal);
  CHECK(compare(closure_of_topogenous(TopogenousOrder{"u", ps.category, {ps.union_at(0), ps.union_at(1)}}),
                pointed) == Ordering::equal);
}

TEST_CASE("lifts depend monotonically on the input") {
  SUBCASE("pointed") {
    const auto sc = build_fintop_category("Top", spaces_upto(2));
    const auto p = t0_reflection(sc);
    const auto all = enumerate_closures(sc.category);
    for (const auto& a : all)
      for (const auto& b : all)
        if (leq(a, b)) CHECK(leq(lift_pointed_closure(a, p), lift_pointed_closure(b, p)));
  }
  SUBCASE("copointed") {
    const auto pc = build_finqunif_category("QUnif", enumerate_preorders(2));
    const auto q = symmetrization(pc);
    const auto all = enumerate_closures(pc.category);
    for (const auto& a : all)
      for (const auto& b : all)
        if (leq(a, b)) CHECK(leq(lift_copointed_closure(a, q), lift_copointed_closure(b, q)));
    const auto bases = enumerate_principal_qubases(pc.category);
    for (const auto& a : bases)
      for (const auto& b : bases)
        if (leq(a, b)) CHECK(leq(lift_copointed_qubase(a, q), lift_copointed_qubase(b, q)));
  }
  SUBCASE("fibration") {
    const auto d = bundle("forgetful");
    const auto& fd = d.fibrations[0];
    const auto all = enumerate_simple_syntops(fd.functor.target);
    for (const auto& a : all)
      for (const auto& b : all)
        if (leq(a, b)) CHECK(leq(lift_fibration_syntop(a, fd), lift_fibration_syntop(b, fd)));
  }
  SUBCASE("adjoint") {
    const auto spaces = spaces_upto(2);
    std::vector<FinPreorder> pres;
    for (const auto& s : spaces) pres.push_back(specialization(s));
    const auto sc = build_fintop_category("Top", spaces);
    const auto pc = build_finqunif_category("QUnif", pres);
    const auto ad = alexandrov_adjunction(sc, pc);
    const auto all = enumerate_principal_qubases(pc.category);
    for (const auto& a : all)
      for (const auto& b : all)
        if (leq(a, b)) CHECK(leq(lift_adjoint_qubase(a, ad), lift_adjoint_qubase(b, ad)));
  }
}

TEST_CASE("formula table and extremal claims") {
  const auto c = test::one_object(1);
  const Transformation p = test::identity_pointed(c), q = test::identity_copointed(c);
  CHECK(std::string(family_name(p)) == "pointed");
  CHECK(claimed_extremal(p, identity_closure(c)) == Extremal::largest);
  CHECK(claimed_extremal(p, identity_base(c)) == Extremal::coarsest);
  CHECK(claimed_extremal(q, identity_closure(c)) == Extremal::least);
  CHECK(claimed_extremal(q, discrete_syntop(c)) == Extremal::finest);
  CHECK(lifted_below(Extremal::coarsest));
  CHECK_FALSE(lifted_below(Extremal::finest));
  CHECK(parse_extremal("least") == Extremal::least);
  CHECK_THROWS_AS(parse_extremal("tightest"), InputError);
  CHECK(lift_formula(p, identity_closure(c)).find("eta^-1") != std::string::npos);
}
