#pragma once

// Finite concrete categories: carriers, morphisms as total function tables,
// the (surjection, injection) factorization, image/preimage of subsets, and
// the functor / natural-transformation data that lifts are built from.

#include <memory>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synlab/lattice.hpp"
#include "synlab/report.hpp"

namespace synlab {

struct FinObject {
  std::string id;
  std::vector<std::string> carrier;

  int size() const { return static_cast<int>(carrier.size()); }
  Mask full() const { return full_mask(size()); }
};

/// A morphism whose `dom` and `cod` index objects of the owning category.
struct FinMorphism {
  std::string id;
  int dom = 0;
  int cod = 0;
  std::vector<int> map;
  /// Member of the class M of the factorization system. Builders for spaces
  /// mark embeddings; loaded categories default to injectivity.
  bool in_m = false;

  bool injective() const;
  bool surjective(int cod_size) const;
};

/// g ∘ f = h, by morphism index.
struct CompositionEntry {
  int g = 0;
  int f = 0;
  int h = 0;
};

/// A subobject m ∈ sub X.
struct Subset {
  int object = 0;
  Mask bits = 0;
  friend bool operator==(const Subset&, const Subset&) = default;
};

class FinCategory {
 public:
  /// Checks structural well-formedness (ids, table shapes, caps) and throws
  /// InputError on violation. Category laws are checked by validate_category.
  /// Without an explicit table, composition is function composition.
  FinCategory(std::string id, std::vector<FinObject> objects, std::vector<FinMorphism> morphisms,
              std::vector<CompositionEntry> composition = {});

  const std::string& id() const { return id_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const FinObject& object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
  const FinMorphism& morphism(int f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  std::span<const FinObject> objects() const { return objects_; }
  std::span<const FinMorphism> morphisms() const { return morphisms_; }
  int carrier_size(int x) const { return object(x).size(); }

  std::optional<int> find_object(std::string_view id) const;
  std::optional<int> find_morphism(std::string_view id) const;
  int object_index(std::string_view id) const;
  int morphism_index(std::string_view id) const;
  /// The morphism dom -> cod with this table, if present.
  std::optional<int> find_map(int dom, int cod, std::span<const int> map) const;

  std::span<const int> hom(int x, int y) const;
  std::optional<int> identity(int x) const;
  /// g ∘ f; nullopt when the composite is not in the category.
  std::optional<int> compose(int g, int f) const;
  bool explicit_composition() const { return !table_.empty(); }
  std::span<const CompositionEntry> composition_table() const { return table_entries_; }

  /// Image/preimage tables; present when both carriers fit the powerset cap.
  const SubsetTransport& transport(int f) const;
  bool powerset_ready() const { return powerset_ready_; }
  int max_carrier() const;

 private:
  // Packs a map into 4 bits per point; carriers never exceed 16 points.
  static std::uint64_t pack_map(std::span<const int> map);

  std::string id_;
  std::vector<FinObject> objects_;
  std::vector<FinMorphism> morphisms_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::optional<int>> identity_;
  std::unordered_map<std::string, int> object_ids_;
  std::unordered_map<std::string, int> morphism_ids_;
  std::vector<std::unordered_map<std::uint64_t, int>> by_map_;  // per hom set
  std::unordered_map<long long, int> table_;
  std::vector<CompositionEntry> table_entries_;
  std::vector<SubsetTransport> transports_;
  bool powerset_ready_ = false;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

Subset image(const FinCategory& c, int f, Subset m);
Subset preimage(const FinCategory& c, int f, Subset n);

/// f = mono ∘ epi with epi surjective onto the image carrier (labels in
/// ascending codomain order) and mono the inclusion of the image.
struct Factorization {
  FinObject image;
  std::vector<int> surjection;  // dom(f) -> image
  std::vector<int> injection;   // image -> cod(f)
};
Factorization factorize(const FinCategory& c, int f);

/// f(f⁻¹(n)) ⊆ n (= when f surjective) and m ⊆ f⁻¹(f(m)) (= when f injective).
Report check_adjunction_laws(const FinCategory& c, int f);

/// For the commuting square p ∘ f' = f ∘ p' (f': X'→Y', p': X'→X, p: Y'→Y,
/// f: X→Y) checks p'(f'⁻¹(n)) ⊆ f⁻¹(p(n)) for every n ⊆ Y'. Throws InputError
/// when the square does not commute.
Report check_lemma22(const FinCategory& c, int f, int f_prime, int p, int p_prime);

/// Identities, closure and associativity of composition, concreteness,
/// faithfulness, and E-stability under pullback along M.
Report validate_category(const FinCategory& c);

struct FunctorData {
  std::string id;
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
  /// Optional element maps |X| -> |FX|; F acts on subsets by direct image.
  std::vector<std::vector<int>> carrier_maps;

  static FunctorData identity(CategoryPtr c);

  int object(int x) const { return object_map.at(static_cast<std::size_t>(x)); }
  int morphism(int f) const { return morphism_map.at(static_cast<std::size_t>(f)); }
  bool has_carrier_maps() const { return !carrier_maps.empty(); }
  /// F m for m ⊆ X. Throws InputError without carrier maps.
  Mask apply(int x, Mask m) const;
  SubsetTransport transport(int x) const;
  bool is_identity() const;
};

/// second ∘ first
FunctorData compose(const FunctorData& second, const FunctorData& first);

Report validate_functor(const FunctorData& f);
/// M-morphisms go to M-morphisms and carrier maps are natural. Empty string
/// when preserved, else a witness.
std::string subobject_preservation_witness(const FunctorData& f);

struct NatTransData {
  std::string id;
  FunctorData source;
  FunctorData target;
  /// Per source-category object, a morphism of the target category.
  std::vector<int> components;

  int component(int x) const { return components.at(static_cast<std::size_t>(x)); }
};

Report validate_nat(const NatTransData& n);

struct PointedEndo {
  std::string id;
  FunctorData functor;
  NatTransData unit;  // 1_C -> F

  const FinCategory& category() const { return *functor.source; }
  /// Every unit component is surjective.
  bool e_pointed() const;
};

struct CopointedEndo {
  std::string id;
  FunctorData functor;
  NatTransData counit;  // G -> 1_C

  const FinCategory& category() const { return *functor.source; }
  /// Every counit component is injective.
  bool m_copointed() const;
};

Report validate_pointed(const PointedEndo& p);
Report validate_copointed(const CopointedEndo& q);

/// A faithful functor F: A -> C with the order equivalences sub X ≅ sub FX.
struct FibrationData {
  std::string id;
  FunctorData functor;
  std::vector<std::vector<Mask>> gamma;  // per A-object: sub X -> sub FX
  std::vector<std::vector<Mask>> delta;  // per A-object: sub FX -> sub X
  std::vector<int> initial;              // designated F-initial morphisms of A

  Mask up(int x, Mask m) const { return gamma[static_cast<std::size_t>(x)][m]; }
  Mask down(int x, Mask n) const { return delta[static_cast<std::size_t>(x)][n]; }
};

Report validate_fibration(const FibrationData& fd);

/// F ⊣ G with F: A -> C, G: C -> A.
struct AdjunctionData {
  std::string id;
  FunctorData left;
  FunctorData right;
  NatTransData unit;                   // 1_A -> GF, components in A
  std::optional<NatTransData> counit;  // FG -> 1_C, components in C

  const FinCategory& domain() const { return *left.source; }
  const FinCategory& codomain() const { return *left.target; }
};

Report validate_adjunction(const AdjunctionData& ad);

}  // namespace synlab
