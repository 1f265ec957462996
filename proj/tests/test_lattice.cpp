#include "doctest.h"
#include "synlab/errors.hpp"
#include "synlab/lattice.hpp"

using namespace synlab;

TEST_CASE("subset helpers") {
  CHECK(full_mask(0) == 0u);
  CHECK(full_mask(3) == 0b111u);
  CHECK(is_subset(0b001, 0b011));
  CHECK_FALSE(is_subset(0b100, 0b011));
  CHECK(powerset_size(4) == 16u);
  CHECK(format_subset(0) == "{}");
  CHECK(format_subset(0b101) == "{0,2}");
}

TEST_CASE("powerset cap is enforced") {
  CHECK_NOTHROW(require_powerset_carrier(kMaxPowersetCarrier));
  CHECK_THROWS_AS(require_powerset_carrier(kMaxPowersetCarrier + 1), InputError);
}

TEST_CASE("endomap predicates") {
  const auto id = EndoMap::identity(2);
  CHECK(id.is_inflationary());
  CHECK(id.is_monotone());
  CHECK(id.is_idempotent());
  const auto top = EndoMap::top(2);
  CHECK(top(0) == 0b11u);
  CHECK(pointwise_leq(id, top));
  CHECK_FALSE(pointwise_leq(top, id));
  CHECK(meet(id, top) == id);
  CHECK(compose(top, id) == top);

  // m -> m ∪ {0} once, but {1} -> {0,1} and {0} -> {0}: monotone, idempotent
  const EndoMap plus0(2, {0b01, 0b01, 0b11, 0b11});
  CHECK(plus0.is_inflationary());
  CHECK(plus0.is_idempotent());

  // not monotone: {0} goes above {0,1}'s image
  const EndoMap bad(2, {0b00, 0b11, 0b10, 0b10});
  CHECK_FALSE(bad.is_monotone());
  CHECK_FALSE(bad.is_inflationary());
}

TEST_CASE("relation basics") {
  auto d = Relation::discrete(2);
  CHECK(d.test(0b01, 0b11));
  CHECK_FALSE(d.test(0b11, 0b01));
  CHECK(d.meet_of_row(0b01) == 0b01u);

  const auto r = Relation::from_endomap(EndoMap::top(2));
  CHECK(r.test(0, 0b11));
  CHECK_FALSE(r.test(0, 0));
  CHECK_FALSE(r.test(0b01, 0b01));
  CHECK(r.subset_of(d));
  CHECK(r.meet_of_row(0b01) == 0b11u);

  Relation e(2);
  CHECK(e.row_empty(0));
  e.set(0b01, 0b01);
  e.saturate();
  CHECK(e.test(0, 0b11));
  CHECK(e.test(0b01, 0b11));
  CHECK_FALSE(e.test(0b10, 0b11));

  const auto t = transpose(e);
  CHECK(t.test(0b11, 0));
  CHECK(t.count() == e.count());

  const std::pair<Mask, Mask> pairs[] = {{0b01, 0b11}, {0, 0}};
  const auto p = Relation::from_pairs(2, pairs);
  CHECK(p.pairs().size() == 2u);
  CHECK(p.pairs().front() == std::pair<Mask, Mask>{0, 0});
}

TEST_CASE("image and preimage of a carrier map") {
  // f: {0,1,2} -> {0,1}, 0,1 -> 0, 2 -> 1
  const int f[] = {0, 0, 1};
  CHECK(image_of(f, 0b011) == 0b01u);
  CHECK(image_of(f, 0b100) == 0b10u);
  CHECK(preimage_of(f, 2, 0b01) == 0b011u);
  CHECK(preimage_of(f, 2, 0b10) == 0b100u);
  const auto t = transport_of_map(f, 2);
  for (Mask n = 0; n < 4; ++n) CHECK(is_subset(t.image(t.preimage(n)), n));
  for (Mask m = 0; m < 8; ++m) CHECK(is_subset(m, t.preimage(t.image(m))));
}
