#pragma once

// Finite spaces and preorders, the categories they form, and the bundled
// reflections, coreflections, adjunctions and fibrations between them.

#include <string>
#include <string_view>
#include <vector>

#include "synlab/document.hpp"

namespace synlab {

struct FinTopSpace {
  std::string id;
  int n = 0;
  std::vector<Mask> opens;  // ascending

  bool is_open(Mask m) const;
  Mask interior(Mask m) const;
  /// Smallest closed superset.
  Mask closure(Mask m) const;
  /// Smallest open superset.
  Mask saturation(Mask m) const;
  friend bool operator==(const FinTopSpace& a, const FinTopSpace& b) { return a.n == b.n && a.opens == b.opens; }
};

/// Validates (∅ and X open, closed under union and intersection), sorts and
/// names the space. Throws InputError.
FinTopSpace make_space(int n, std::vector<Mask> opens, std::string id = {});
FinTopSpace sierpinski_space();        // opens ∅, {1}, X
FinTopSpace three_point_space();       // opens ∅, {0,1}, X
FinTopSpace indiscrete_space(int n);
FinTopSpace discrete_space(int n);

struct FinPreorder {
  std::string id;
  int n = 0;
  std::vector<Mask> up;  // up[x] = R[{x}] = {y : x R y}

  bool related(int x, int y) const { return (up[static_cast<std::size_t>(x)] >> y) & 1u; }
  /// R[A]
  Mask image(Mask a) const;
  friend bool operator==(const FinPreorder& a, const FinPreorder& b) { return a.n == b.n && a.up == b.up; }
};

/// Validates reflexivity and transitivity. Throws InputError.
FinPreorder make_preorder(int n, std::vector<Mask> up, std::string id = {});

std::vector<FinPreorder> enumerate_preorders(int n);
/// Via the preorder bijection.
std::vector<FinTopSpace> enumerate_topologies(int n);
/// Direct scan over families of subsets; n ≤ 4.
std::size_t count_topologies_direct(int n);

/// x R y iff y lies in every open containing x, so R[A] is the smallest open superset.
FinPreorder specialization(const FinTopSpace& s);
/// Opens are the up-sets of R.
FinTopSpace alexandrov_topology(const FinPreorder& p);
/// Quotient by indistinguishability; classes numbered by least member.
FinTopSpace t0_quotient(const FinTopSpace& s, std::vector<int>* class_of = nullptr);
bool is_t0(const FinTopSpace& s);
/// R ∩ R⁻¹
FinPreorder symmetric_part(const FinPreorder& p);

bool is_continuous(std::span<const int> map, const FinTopSpace& x, const FinTopSpace& y);
bool is_monotone_map(std::span<const int> map, const FinPreorder& x, const FinPreorder& y);

struct SpaceCategory {
  CategoryPtr category;
  std::vector<FinTopSpace> spaces;  // by object index
  int index_of(const FinTopSpace& s) const;  // -1 when absent
};

struct PreorderCategory {
  CategoryPtr category;
  std::vector<FinPreorder> preorders;
  int index_of(const FinPreorder& p) const;
};

// Morphisms are all continuous / monotone / arbitrary maps; with `pointed`
// only maps fixing element 0. M-morphisms are the embeddings (injective and
// initial) or, for sets, the injections.
SpaceCategory build_fintop_category(std::string id, std::vector<FinTopSpace> spaces, bool pointed = false);
PreorderCategory build_finqunif_category(std::string id, std::vector<FinPreorder> preorders, bool pointed = false);
CategoryPtr build_finset_category(std::string id, std::vector<int> carriers, bool pointed = false);

/// Adds missing T0 quotients / symmetric parts.
std::vector<FinTopSpace> with_t0_quotients(std::vector<FinTopSpace> spaces);
std::vector<FinPreorder> with_symmetric_parts(std::vector<FinPreorder> preorders);

CategoryPtr full_subcategory(const FinCategory& c, const std::vector<int>& objects, std::string id);

EndoMap kuratowski_closure(const FinTopSpace& s);
ClosureOp kuratowski_closure(const SpaceCategory& sc);
/// U_R(A) = R[A]
EndoMap endomap_from_preorder(const FinPreorder& p);
ClosureOp preorder_closure(const PreorderCategory& pc);
QUBase preorder_base(const PreorderCategory& pc);
/// {c} as a one-member base, and {⊏^c} as a simple family.
QUBase principal_base(const ClosureOp& c);
Syntop simple_syntop(const ClosureOp& c);

PointedEndo t0_reflection(const SpaceCategory& sc);
/// Reflector onto the full subcategory of T0 spaces, left adjoint to the inclusion.
AdjunctionData t0_adjunction(const SpaceCategory& sc);
CopointedEndo symmetrization(const PreorderCategory& pc);
/// F: spaces -> preorders (specialization), G: preorders -> spaces (Alexandrov).
AdjunctionData alexandrov_adjunction(const SpaceCategory& spaces, const PreorderCategory& preorders);
/// Underlying-set functor; gamma and delta are identities, initial = embeddings.
FibrationData forgetful_fibration(const SpaceCategory& spaces, CategoryPtr sets);

std::vector<std::string> bundle_names();
/// Throws InputError for an unknown name.
Document bundle(std::string_view name);

}  // namespace synlab
