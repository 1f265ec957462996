#pragma once

// Small fixtures and independent reference computations shared by the unit
// tests. The reference functions deliberately avoid the library's own
// algorithms (e.g. closures come from a complement scan, not from opens).

#include <memory>
#include <string>
#include <vector>

#include "synlab/fincat.hpp"
#include "synlab/instances.hpp"
#include "synlab/structures.hpp"

namespace test {

using namespace synlab;

/// One object "X" of size n with its identity, plus the swap when `twist`.
inline CategoryPtr one_object(int n, bool twist = false) {
  FinObject x{"X", {}};
  for (int i = 0; i < n; ++i) x.carrier.push_back(std::to_string(i));
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<FinMorphism> ms{{"id", 0, 0, id, true}};
  if (twist) ms.push_back({"twist", 0, 0, {1, 0}, true});
  return std::make_shared<const FinCategory>(twist ? "Twist" : "One" + std::to_string(n), std::vector{x}, ms);
}

inline NatTransData identity_nat(const CategoryPtr& c, std::string id) {
  NatTransData n{std::move(id), FunctorData::identity(c), FunctorData::identity(c), {}};
  for (int x = 0; x < c->object_count(); ++x) n.components.push_back(*c->identity(x));
  return n;
}

inline PointedEndo identity_pointed(const CategoryPtr& c) {
  return PointedEndo{"id-pointed", FunctorData::identity(c), identity_nat(c, "unit")};
}

inline CopointedEndo identity_copointed(const CategoryPtr& c) {
  return CopointedEndo{"id-copointed", FunctorData::identity(c), identity_nat(c, "counit")};
}

inline FibrationData identity_fibration(const CategoryPtr& c) {
  FibrationData fd{"id-fibration", FunctorData::identity(c), {}, {}, {}};
  for (int x = 0; x < c->object_count(); ++x) {
    const auto ident = EndoMap::identity(c->carrier_size(x));
    fd.gamma.emplace_back(ident.table().begin(), ident.table().end());
    fd.delta.push_back(fd.gamma.back());
  }
  for (int f = 0; f < c->morphism_count(); ++f) fd.initial.push_back(f);
  return fd;
}

inline AdjunctionData identity_adjunction(const CategoryPtr& c) {
  return AdjunctionData{"id-adjunction", FunctorData::identity(c), FunctorData::identity(c),
                        identity_nat(c, "unit"), identity_nat(c, "counit")};
}

/// Smallest closed superset by scanning complements of opens.
inline Mask ref_closure(const FinTopSpace& s, Mask a) {
  const Mask full = full_mask(s.n);
  Mask best = full;
  for (Mask o : s.opens) {
    const Mask closed = full & ~o;
    if (is_subset(a, closed)) best &= closed;
  }
  return best;
}

/// Smallest open superset by scanning the opens.
inline Mask ref_smallest_open(const FinTopSpace& s, Mask a) {
  Mask best = full_mask(s.n);
  for (Mask o : s.opens)
    if (is_subset(a, o)) best &= o;
  return best;
}

/// R[A] from an explicit pair list.
inline Mask ref_image(const std::vector<std::pair<int, int>>& pairs, Mask a) {
  Mask out = 0;
  for (auto [x, y] : pairs)
    if ((a >> x) & 1u) out |= Mask{1} << y;
  return out;
}

/// Every topology on n points as a family of opens, found by brute force
/// over families of subsets (n ≤ 3).
inline std::vector<std::vector<Mask>> ref_topologies(int n) {
  const Mask full = full_mask(n);
  const std::size_t subsets = powerset_size(n);
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    auto in = [&](Mask m) { return (fam >> m) & 1u; };
    if (!in(0) || !in(full)) continue;
    bool ok = true;
    for (Mask a = 0; ok && a < subsets; ++a)
      for (Mask b = 0; ok && b < subsets; ++b)
        if (in(a) && in(b) && (!in(a | b) || !in(a & b))) ok = false;
    if (!ok) continue;
    std::vector<Mask> opens;
    for (Mask a = 0; a < subsets; ++a)
      if (in(a)) opens.push_back(a);
    out.push_back(opens);
  }
  return out;
}

}  // namespace test
