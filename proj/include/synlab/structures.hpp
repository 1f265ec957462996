#pragma once

// Closure operators, topogenous orders, quasi-uniformity bases and
// syntopogenous structures on a finite category: axiom validators, the
// structure orderings, property predicates and continuity checkers.

#include <string>
#include <variant>
#include <vector>

#include "synlab/fincat.hpp"
#include "synlab/lattice.hpp"
#include "synlab/report.hpp"

namespace synlab {

struct ClosureOp {
  std::string id;
  CategoryPtr category;
  std::vector<EndoMap> tables;  // per object

  const EndoMap& at(int x) const { return tables.at(static_cast<std::size_t>(x)); }
};

struct TopogenousOrder {
  std::string id;
  CategoryPtr category;
  std::vector<Relation> relations;  // per object

  const Relation& at(int x) const { return relations.at(static_cast<std::size_t>(x)); }
};

struct QUBase {
  std::string id;
  CategoryPtr category;
  std::vector<std::vector<EndoMap>> maps;  // per object, the base members

  const std::vector<EndoMap>& at(int x) const { return maps.at(static_cast<std::size_t>(x)); }
};

struct Syntop {
  std::string id;
  CategoryPtr category;
  std::vector<std::vector<Relation>> members;  // per object

  const std::vector<Relation>& at(int x) const { return members.at(static_cast<std::size_t>(x)); }
  Relation union_at(int x) const;
};

using Structure = std::variant<ClosureOp, TopogenousOrder, QUBase, Syntop>;

const char* kind_name(const Structure& s);
const std::string& structure_id(const Structure& s);
const CategoryPtr& structure_category(const Structure& s);

ClosureOp identity_closure(CategoryPtr c);
ClosureOp top_closure(CategoryPtr c);
TopogenousOrder discrete_topogenous(CategoryPtr c);
QUBase identity_base(CategoryPtr c);
Syntop discrete_syntop(CategoryPtr c);

// Validators throw InputError when tables do not cover the category; axiom
// failures are itemized in the report.
Report validate_closure(const ClosureOp& c);
Report validate_topogenous(const TopogenousOrder& t);
Report validate_qubase(const QUBase& b);
Report validate_syntop(const Syntop& s);
Report validate(const Structure& s);

enum class Ordering { less, equal, greater, incomparable };
const char* ordering_name(Ordering o);

// c ≤ c' pointwise; ⊏ ⊆ ⊏'; U ≤ V when every U is above some V; S ≤ S' when
// every member of S is contained in some member of S'.
bool leq(const ClosureOp& a, const ClosureOp& b);
bool leq(const TopogenousOrder& a, const TopogenousOrder& b);
bool leq(const QUBase& a, const QUBase& b);
bool leq(const Syntop& a, const Syntop& b);
Ordering compare(const ClosureOp& a, const ClosureOp& b);
Ordering compare(const TopogenousOrder& a, const TopogenousOrder& b);
Ordering compare(const QUBase& a, const QUBase& b);
Ordering compare(const Syntop& a, const Syntop& b);
/// Throws InputError on kind or category mismatch.
Ordering compare(const Structure& a, const Structure& b);

// Per-object predicates.
bool satisfies_t1(const Relation& r);
bool satisfies_t2(const Relation& r);
bool is_meet_preserving(const Relation& r);
bool is_interpolative(const Relation& r);

bool is_idempotent(const ClosureOp& c);
bool is_meet_preserving(const TopogenousOrder& t);
bool is_interpolative(const TopogenousOrder& t);
bool is_interpolative(const Syntop& s);
bool is_coperfect(const Syntop& s);
bool is_simple(const Syntop& s);
bool is_transitive_base(const QUBase& b);

/// A map from object `from` (source structure) to object `to` (target
/// structure) acting on subsets through `transport`.
struct Leg {
  int from = 0;
  int to = 0;
  SubsetTransport transport;
  std::string label;
};

std::vector<Leg> morphism_legs(const FinCategory& c, int f);
std::vector<Leg> functor_legs(const FunctorData& f);
/// Legs through gamma (forward) and delta (backward).
std::vector<Leg> fibration_legs(const FibrationData& fd);
std::vector<Leg> component_legs(const NatTransData& n);

// Continuity of every leg; empty string when continuous, else a witness.
//   syntop:  ∀⊏'∈S'_to ∃⊏∈S_from: f(m) ⊏' n ⇒ m ⊏ f⁻¹(n)
//   qubase:  ∀U'∈B'_to ∃U∈B_from: f(U(m)) ⊆ U'(f(m))
//   closure: f(c(m)) ⊆ c'(f(m))
std::string continuity_witness(const Syntop& a, const Syntop& b, std::span<const Leg> legs);
std::string continuity_witness(const TopogenousOrder& a, const TopogenousOrder& b, std::span<const Leg> legs);
std::string continuity_witness(const QUBase& a, const QUBase& b, std::span<const Leg> legs);
std::string continuity_witness(const ClosureOp& a, const ClosureOp& b, std::span<const Leg> legs);

/// (A,B)-continuity of a morphism of the common category. Throws InputError on
/// kind mismatch.
bool morphism_continuity(int f, const Structure& a, const Structure& b);

// Initial morphisms.
//   syntop: ∀⊏∈S_X ∃⊏'∈S_Y: m ⊏ n ⇒ ∃n': f(m) ⊏' n' and f⁻¹(n') ⊆ n
//   qubase: ∀U∈B_X ∃U'∈B_Y: f⁻¹(U'(f(m))) ⊆ U(m)
bool is_initial(const Syntop& s, int f);
bool is_initial(const QUBase& b, int f);

}  // namespace synlab
