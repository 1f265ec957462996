#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "synlab/errors.hpp"

using namespace synlab;

namespace {

// Objects A = {0}, B = {0,1}, C = {0,1,2} and the maps used by the examples.
CategoryPtr example_category() {
  std::vector<FinObject> objs{{"A", {"0"}}, {"B", {"0", "1"}}, {"C", {"0", "1", "2"}}};
  std::vector<FinMorphism> ms{
      {"idA", 0, 0, {0}, true},       {"idB", 1, 1, {0, 1}, true}, {"idC", 2, 2, {0, 1, 2}, true},
      {"const", 1, 0, {0, 0}, false}, {"incl", 0, 1, {0}, true},   {"collapse", 1, 1, {0, 0}, false},
      {"f", 2, 1, {0, 0, 1}, false}};
  // close under composition so the category is well formed
  const auto add = [&](int dom, int cod, std::vector<int> map) {
    for (const auto& m : ms)
      if (m.dom == dom && m.cod == cod && m.map == map) return false;
    ms.push_back({"m" + std::to_string(ms.size()), dom, cod, std::move(map), false});
    return true;
  };
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = ms;
    for (const auto& g : snapshot)
      for (const auto& f : snapshot) {
        if (f.cod != g.dom) continue;
        std::vector<int> h;
        for (int v : f.map) h.push_back(g.map[static_cast<std::size_t>(v)]);
        grew |= add(f.dom, g.cod, h);
      }
  }
  return std::make_shared<const FinCategory>("Ex", objs, ms);
}

}  // namespace

TEST_CASE("factorize") {
  const auto c = example_category();
  SUBCASE("identity") {
    const auto fx = factorize(*c, c->morphism_index("idB"));
    CHECK(fx.image.size() == 2);
    CHECK(fx.surjection == std::vector<int>{0, 1});
    CHECK(fx.injection == std::vector<int>{0, 1});
  }
  SUBCASE("constant onto a point") {
    const auto fx = factorize(*c, c->morphism_index("const"));
    CHECK(fx.image.size() == 1);
    CHECK(fx.surjection == std::vector<int>{0, 0});
    CHECK(fx.injection == std::vector<int>{0});
  }
  SUBCASE("0,1 -> 0 and 2 -> 1") {
    const auto fx = factorize(*c, c->morphism_index("f"));
    CHECK(fx.image.size() == 2);
    CHECK(fx.surjection == std::vector<int>{0, 0, 1});
    CHECK(fx.injection == std::vector<int>{0, 1});
  }
  SUBCASE("every morphism recomposes") {
    for (int f = 0; f < c->morphism_count(); ++f) {
      const auto fx = factorize(*c, f);
      const auto& mf = c->morphism(f);
      for (std::size_t i = 0; i < mf.map.size(); ++i)
        CHECK(fx.injection[static_cast<std::size_t>(fx.surjection[i])] == mf.map[i]);
      std::vector<int> sorted = fx.injection;
      CHECK(std::is_sorted(sorted.begin(), sorted.end()));
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
}

TEST_CASE("image and preimage") {
  const auto c = example_category();
  const int idB = c->morphism_index("idB"), cst = c->morphism_index("const"), f = c->morphism_index("f");
  CHECK(image(*c, idB, {1, 0b01}).bits == 0b01u);
  CHECK(image(*c, cst, {1, 0b11}) == Subset{0, 0b1});
  CHECK(image(*c, f, {2, 0b110}) == Subset{1, 0b11});
  for (Mask n = 0; n < 4; ++n) CHECK(preimage(*c, idB, {1, n}).bits == n);
  CHECK(preimage(*c, f, {1, 0b01}) == Subset{2, 0b011});
  for (int g = 0; g < c->morphism_count(); ++g) CHECK(preimage(*c, g, {c->morphism(g).cod, 0}).bits == 0u);
  CHECK_THROWS_AS(image(*c, f, {0, 0b1}), InputError);
}

TEST_CASE("image/preimage adjunction laws") {
  const auto c = example_category();
  for (int f = 0; f < c->morphism_count(); ++f) CHECK(check_adjunction_laws(*c, f).ok());
  const int incl = c->morphism_index("incl"), collapse = c->morphism_index("collapse");
  const auto r = check_adjunction_laws(*c, incl);
  CHECK(r.passed("f^-1(f(m)) = m for injective f"));
  CHECK(preimage(*c, incl, image(*c, incl, {0, 0b1})).bits == 0b1u);
  // not injective: the round trip grows {0} to {0,1}
  CHECK(preimage(*c, collapse, image(*c, collapse, {1, 0b01})).bits == 0b11u);
  CHECK(image(*c, c->morphism_index("const"), preimage(*c, c->morphism_index("const"), {0, 0b1})).bits == 0b1u);
}

TEST_CASE("image and preimage squares") {
  const auto c = example_category();
  SUBCASE("all identities") {
    const int id = c->morphism_index("idC");
    const auto r = check_lemma22(*c, id, id, id, id);
    CHECK(r.ok());
  }
  SUBCASE("p and p' identities, f = f'") {
    const int f = c->morphism_index("f");
    CHECK(check_lemma22(*c, f, f, c->morphism_index("idB"), c->morphism_index("idC")).ok());
  }
  SUBCASE("non-commuting square is rejected") {
    const int collapse = c->morphism_index("collapse"), idB = c->morphism_index("idB");
    CHECK_THROWS_AS(check_lemma22(*c, collapse, idB, idB, idB), InputError);
  }
  SUBCASE("naturality squares of the T0 reflection") {
    const auto sc = build_fintop_category("Top", with_t0_quotients({three_point_space()}));
    const auto p = t0_reflection(sc);
    const int x = sc.index_of(three_point_space());
    REQUIRE(x >= 0);
    const int eta = p.unit.component(x);
    int squares = 0;
    for (int g : sc.category->hom(x, x)) {
      // eta o g = F(g) o eta, read as p o f' = f o p'
      const auto r = check_lemma22(*sc.category, p.functor.morphism(g), g, eta, eta);
      CHECK(r.ok());
      ++squares;
    }
    CHECK(squares > 1);
  }
}

TEST_CASE("validate_category") {
  SUBCASE("two-object set category") {
    const auto c = build_finset_category("Set", {1, 2});
    CHECK(c->morphism_count() == 8);
    CHECK(validate_category(*c).ok());
  }
  SUBCASE("example category") { CHECK(validate_category(*example_category()).ok()); }
  SUBCASE("non-associative composition table names the triple") {
    // on {0,1}: id, s (swap), a (const 0), b (const 1), with s o s wrongly set to s
    std::vector<FinObject> objs{{"X", {"0", "1"}}};
    std::vector<FinMorphism> ms{{"id", 0, 0, {0, 1}, true},
                                {"s", 0, 0, {1, 0}, true},
                                {"a", 0, 0, {0, 0}, false},
                                {"b", 0, 0, {1, 1}, false}};
    std::vector<CompositionEntry> table;
    for (int g = 0; g < 4; ++g)
      for (int f = 0; f < 4; ++f) {
        std::vector<int> h;
        for (int v : ms[static_cast<std::size_t>(f)].map) h.push_back(ms[static_cast<std::size_t>(g)].map[static_cast<std::size_t>(v)]);
        int hi = 0;
        while (ms[static_cast<std::size_t>(hi)].map != h) ++hi;
        if (g == 1 && f == 1) hi = 1;
        table.push_back({g, f, hi});
      }
    const FinCategory c("Broken", objs, ms, table);
    const auto r = validate_category(c);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("associativity"));
    const auto* fail = r.first_failure();
    REQUIRE(fail != nullptr);
    bool found = false;
    for (const auto& chk : r.checks())
      if (chk.name == "associativity") found = chk.witness.find('(') != std::string::npos;
    CHECK(found);
  }
  SUBCASE("missing identity") {
    std::vector<FinObject> objs{{"X", {"0", "1"}}};
    std::vector<FinMorphism> ms{{"a", 0, 0, {0, 0}, false}};
    const FinCategory c("NoId", objs, ms);
    CHECK_FALSE(validate_category(c).passed("identities"));
  }
  SUBCASE("malformed tables are input errors") {
    std::vector<FinObject> objs{{"X", {"0", "1"}}};
    CHECK_THROWS_AS(FinCategory("Bad", objs, {{"f", 0, 0, {0}, false}}), InputError);
    CHECK_THROWS_AS(FinCategory("Bad", objs, {{"f", 0, 0, {0, 2}, false}}), InputError);
    CHECK_THROWS_AS(FinCategory("Bad", objs, {{"f", 0, 3, {0, 1}, false}}), InputError);
  }
}

TEST_CASE("validate_functor and natural transformations") {
  const auto c = build_finset_category("Set", {1, 2});
  SUBCASE("identity functor") { CHECK(validate_functor(FunctorData::identity(c)).ok()); }
  SUBCASE("broken composition image names the pair") {
    auto F = FunctorData::identity(c);
    F.id = "broken";
    F.carrier_maps.clear();
    int two = -1;
    for (int x = 0; x < c->object_count(); ++x)
      if (c->carrier_size(x) == 2) two = x;
    const std::vector<int> swap{1, 0}, const0{0, 0};
    const auto s = c->find_map(two, two, swap);
    const auto k = c->find_map(two, two, const0);
    REQUIRE(s);
    REQUIRE(k);
    F.morphism_map[static_cast<std::size_t>(*s)] = *k;
    const auto r = validate_functor(F);
    CHECK_FALSE(r.passed("preserves composition"));
    for (const auto& chk : r.checks())
      if (chk.name == "preserves composition") CHECK(chk.witness.find(c->morphism(*s).id) != std::string::npos);
  }
  SUBCASE("identity pointed endofunctor") {
    const auto p = test::identity_pointed(c);
    CHECK(validate_nat(p.unit).ok());
    CHECK(validate_pointed(p).ok());
    CHECK(p.e_pointed());
  }
  SUBCASE("identity copointed, fibration and adjunction") {
    const auto q = test::identity_copointed(c);
    CHECK(validate_copointed(q).ok());
    CHECK(q.m_copointed());
    CHECK(validate_fibration(test::identity_fibration(c)).ok());
    CHECK(validate_adjunction(test::identity_adjunction(c)).ok());
  }
  SUBCASE("non-natural components are reported") {
    auto n = test::identity_nat(c, "bad");
    int two = -1;
    for (int x = 0; x < c->object_count(); ++x)
      if (c->carrier_size(x) == 2) two = x;
    n.components[static_cast<std::size_t>(two)] = *c->find_map(two, two, std::vector<int>{1, 0});
    CHECK_FALSE(validate_nat(n).ok());
  }
  SUBCASE("composite functor id") {
    const auto F = FunctorData::identity(c);
    const auto GF = compose(F, F);
    CHECK(GF.id == F.id + "o" + F.id);
    CHECK(GF.is_identity());
  }
}

TEST_CASE("fibration validation catches broken tables") {
  const auto c = build_finset_category("Set", {1, 2});
  auto fd = test::identity_fibration(c);
  int two = -1;
  for (int x = 0; x < c->object_count(); ++x)
    if (c->carrier_size(x) == 2) two = x;
  fd.delta[static_cast<std::size_t>(two)][0b01] = 0b10;
  CHECK_FALSE(validate_fibration(fd).ok());
}
