#include "doctest.h"
#include "support.hpp"
#include "synlab/errors.hpp"
#include "synlab/io.hpp"

using namespace synlab;

TEST_CASE("space and preorder constructors") {
  CHECK_THROWS_AS(make_space(2, {0b01, 0b11}), InputError);        // no empty set
  CHECK_THROWS_AS(make_space(2, {0, 0b01}), InputError);               // no full set
  CHECK_THROWS_AS(make_space(2, {0, 0b01, 0b10}), InputError);     // union missing
  CHECK_THROWS_AS(make_preorder(2, {0b10, 0b10}), InputError);     // not reflexive
  CHECK_THROWS_AS(make_preorder(3, {0b011, 0b110, 0b100}), InputError);  // not transitive
  const auto s = sierpinski_space();
  CHECK(s.is_open(0b10));
  CHECK_FALSE(s.is_open(0b01));
  CHECK(s.interior(0b01) == 0u);
  CHECK(s.closure(0b10) == 0b11u);
  CHECK(s.saturation(0b01) == 0b11u);
}

TEST_CASE("category builders") {
  SUBCASE("one-point space") {
    const auto sc = build_fintop_category("Top", {discrete_space(1)});
    CHECK(sc.category->object_count() == 1);
    CHECK(sc.category->morphism_count() == 1);
  }
  SUBCASE("Sierpinski and one point: hom sizes by brute force") {
    const std::vector<FinTopSpace> spaces{sierpinski_space(), discrete_space(1)};
    const auto sc = build_fintop_category("Top", spaces);
    CHECK(validate_category(*sc.category).ok());
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const auto& sx = sc.spaces[static_cast<std::size_t>(x)];
        const auto& sy = sc.spaces[static_cast<std::size_t>(y)];
        std::size_t expected = 0;
        std::size_t total = 1;
        for (int i = 0; i < sx.n; ++i) total *= static_cast<std::size_t>(sy.n);
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<int> map;
          for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(sx.n); ++i, c /= static_cast<std::size_t>(sy.n))
            map.push_back(static_cast<int>(c % static_cast<std::size_t>(sy.n)));
          bool cont = true;
          for (Mask o : sy.opens) cont &= sx.is_open(preimage_of(map, sy.n, o));
          expected += cont;
        }
        CHECK(sc.category->hom(x, y).size() == expected);
      }
  }
  SUBCASE("preorders and sets") {
    const auto pc = build_finqunif_category("QUnif", enumerate_preorders(2));
    CHECK(validate_category(*pc.category).ok());
    for (int f = 0; f < pc.category->morphism_count(); ++f) {
      const auto& mf = pc.category->morphism(f);
      CHECK(is_monotone_map(mf.map, pc.preorders[static_cast<std::size_t>(mf.dom)],
                            pc.preorders[static_cast<std::size_t>(mf.cod)]));
    }
    const auto sets = build_finset_category("Set", {1, 2, 3});
    CHECK(sets->morphism_count() == 1 + 2 + 3 + 1 + 4 + 9 + 1 + 8 + 27);
    const auto psets = build_finset_category("pSet", {1, 2}, true);
    CHECK(psets->morphism_count() == 1 + 1 + 1 + 2);
    CHECK(validate_category(*psets).ok());
  }
}

TEST_CASE("topology counts") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    CHECK(count_topologies_direct(n) == expected[n]);
    CHECK(enumerate_topologies(n).size() == expected[n]);
  }
  for (int n = 0; n <= 3; ++n) {
    const auto ref = test::ref_topologies(n);
    const auto got = enumerate_topologies(n);
    REQUIRE(ref.size() == got.size());
    for (const auto& opens : ref) {
      bool present = false;
      for (const auto& s : got) present |= s.opens == opens;
      CHECK(present);
    }
  }
  CHECK(enumerate_preorders(3).size() == 29u);
}

TEST_CASE("Kuratowski closure") {
  for (Mask m = 0; m < 8; ++m) CHECK(kuratowski_closure(discrete_space(3))(m) == m);
  const auto ind = kuratowski_closure(indiscrete_space(3));
  CHECK(ind(0) == 0u);
  for (Mask m = 1; m < 8; ++m) CHECK(ind(m) == 0b111u);
  CHECK(kuratowski_closure(sierpinski_space())(0b10) == 0b11u);
  for (const auto& s : enumerate_topologies(3))
    for (Mask m = 0; m < 8; ++m) {
      CHECK(s.closure(m) == test::ref_closure(s, m));
      CHECK(s.saturation(m) == test::ref_smallest_open(s, m));
    }
}

TEST_CASE("preorder maps") {
  for (Mask m = 0; m < 4; ++m) CHECK(endomap_from_preorder(make_preorder(2, {0b01, 0b10}))(m) == m);
  const auto total = endomap_from_preorder(make_preorder(3, {0b111, 0b111, 0b111}));
  for (Mask m = 1; m < 8; ++m) CHECK(total(m) == 0b111u);
  CHECK(endomap_from_preorder(make_preorder(2, {0b11, 0b10}))(0b01) == 0b11u);
}

TEST_CASE("specialization and Alexandrov") {
  CHECK(specialization(discrete_space(2)).up == std::vector<Mask>{0b01, 0b10});
  const auto r = specialization(sierpinski_space());
  CHECK(r.up == std::vector<Mask>{0b11, 0b10});
  for (int n = 0; n <= 3; ++n)
    for (const auto& s : enumerate_topologies(n)) {
      CHECK(alexandrov_topology(specialization(s)) == s);
      const auto p = specialization(s);
      for (Mask a = 0; a < powerset_size(n); ++a) CHECK(p.image(a) == test::ref_smallest_open(s, a));
    }
}

TEST_CASE("T0 quotient and reflection") {
  std::vector<int> cls;
  const auto q = t0_quotient(three_point_space(), &cls);
  CHECK(q.n == 2);
  CHECK(cls[0] == cls[1]);
  CHECK(cls[0] != cls[2]);
  CHECK(is_t0(q));
  CHECK(t0_quotient(indiscrete_space(2)).n == 1);
  CHECK(t0_quotient(sierpinski_space()).n == 2);

  const auto sc = build_fintop_category("Top", with_t0_quotients({three_point_space(), sierpinski_space(), indiscrete_space(2)}));
  const auto p = t0_reflection(sc);
  CHECK(validate_pointed(p).ok());
  CHECK(p.e_pointed());
  for (int x = 0; x < sc.category->object_count(); ++x) {
    const auto& sx = sc.spaces[static_cast<std::size_t>(x)];
    const auto& eta = sc.category->morphism(p.unit.component(x));
    if (is_t0(sx)) {
      CHECK(eta.injective());
      CHECK(eta.surjective(sx.n));
    }
    CHECK(is_t0(sc.spaces[static_cast<std::size_t>(p.functor.object(x))]));
  }
  const auto ad = t0_adjunction(sc);
  CHECK(validate_adjunction(ad).ok());
}

TEST_CASE("symmetrization") {
  const auto chain = make_preorder(2, {0b11, 0b10});
  CHECK(symmetric_part(chain).up == std::vector<Mask>{0b01, 0b10});
  const auto eq = make_preorder(2, {0b11, 0b11});
  CHECK(symmetric_part(eq) == eq);

  const auto pc = build_finqunif_category("QUnif", with_symmetric_parts(enumerate_preorders(3)));
  const auto q = symmetrization(pc);
  CHECK(validate_copointed(q).ok());
  CHECK(q.m_copointed());
  for (int x = 0; x < pc.category->object_count(); ++x) {
    const auto& px = pc.preorders[static_cast<std::size_t>(x)];
    CHECK(pc.preorders[static_cast<std::size_t>(q.functor.object(x))] == symmetric_part(px));
    const auto& eps = pc.category->morphism(q.counit.component(x));
    for (int i = 0; i < px.n; ++i) CHECK(eps.map[static_cast<std::size_t>(i)] == i);
  }
}

TEST_CASE("Alexandrov adjunction") {
  std::vector<FinTopSpace> spaces;
  for (int n = 1; n <= 3; ++n)
    for (auto& s : enumerate_topologies(n)) spaces.push_back(s);
  std::vector<FinPreorder> pres;
  for (const auto& s : spaces) pres.push_back(specialization(s));
  const auto sc = build_fintop_category("Top", spaces);
  const auto pc = build_finqunif_category("QUnif", pres);
  const auto ad = alexandrov_adjunction(sc, pc);
  CHECK(validate_adjunction(ad).ok());
  for (int x = 0; x < sc.category->object_count(); ++x) {
    const int gfx = ad.right.object(ad.left.object(x));
    CHECK(sc.spaces[static_cast<std::size_t>(gfx)] == sc.spaces[static_cast<std::size_t>(x)]);
  }
}

TEST_CASE("forgetful fibration") {
  std::vector<FinTopSpace> spaces{sierpinski_space(), discrete_space(1), indiscrete_space(2), discrete_space(2)};
  const auto sc = build_fintop_category("Top", spaces);
  const auto sets = build_finset_category("Set", {1, 2});
  const auto fd = forgetful_fibration(sc, sets);
  CHECK(validate_fibration(fd).ok());
  for (int x = 0; x < sc.category->object_count(); ++x) {
    const Mask full = sc.category->object(x).full();
    CHECK(fd.down(x, full) == full);
    CHECK(fd.up(x, full) == full);
  }
  // every designated initial morphism is an embedding
  for (int f : fd.initial) {
    const auto& mf = sc.category->morphism(f);
    CHECK(mf.injective());
    const auto& sx = sc.spaces[static_cast<std::size_t>(mf.dom)];
    const auto& sy = sc.spaces[static_cast<std::size_t>(mf.cod)];
    for (Mask o : sx.opens) {
      bool traced = false;
      for (Mask p : sy.opens) traced |= preimage_of(mf.map, sy.n, p) == o;
      CHECK(traced);
    }
  }
  // the one-point subspace {1} of Sierpinski
  const int s = sc.index_of(sierpinski_space()), pt = sc.index_of(discrete_space(1));
  CHECK(sc.category->find_map(pt, s, std::vector<int>{1}).has_value());
}

TEST_CASE("bundles") {
  for (const auto& name : bundle_names()) {
    CAPTURE(name);
    const auto d = bundle(name);
    for (const auto& c : d.categories) CHECK(validate_category(*c).ok());
    for (const auto& f : d.functors) CHECK(validate_functor(f).ok());
    for (const auto& n : d.nats) CHECK(validate_nat(n).ok());
    for (const auto& p : d.pointed) CHECK(validate_pointed(p).ok());
    for (const auto& q : d.copointed) CHECK(validate_copointed(q).ok());
    for (const auto& a : d.adjunctions) CHECK(validate_adjunction(a).ok());
    for (const auto& f : d.fibrations) CHECK(validate_fibration(f).ok());
    for (const auto& c : d.closures) CHECK(validate_closure(c).ok());
    for (const auto& t : d.topogenous) CHECK(validate_topogenous(t).ok());
    for (const auto& b : d.qubases) CHECK(validate_qubase(b).ok());
    for (const auto& s : d.syntops) CHECK(validate_syntop(s).ok());
  }
  CHECK_THROWS_AS(bundle("nope"), InputError);
}
