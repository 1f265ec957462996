#pragma once

// Brute-force enumeration of structures on micro instances, seeded
// adversarial candidates at carrier 3, and certificates for the extremal
// claims of the lifts.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "synlab/lifting.hpp"
#include "synlab/structures.hpp"

namespace synlab {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr std::size_t kDefaultCandidates = 200;

struct EnumOptions {
  int cap = 2;         // largest carrier enumerated
  bool force = false;  // required for cap 3
};

/// Throws InputError when a carrier exceeds the cap, or the cap itself is
/// not allowed (3 needs force, above 3 never).
void require_enumerable(const FinCategory& c, const EnumOptions& opts);

// Per-object building blocks, in ascending table order.
std::vector<EndoMap> extensive_monotone_maps(int carrier);
/// Relations satisfying T1 and T2.
std::vector<Relation> squeeze_stable_relations(int carrier);

// Exhaustive, duplicate-free, deterministic.
std::vector<ClosureOp> enumerate_closures(const CategoryPtr& c, const EnumOptions& opts = {});
std::vector<TopogenousOrder> enumerate_topogenous(const CategoryPtr& c, const EnumOptions& opts = {});
/// Single-member bases {U}; exactly the idempotent closures read as bases.
std::vector<QUBase> enumerate_principal_qubases(const CategoryPtr& c, const EnumOptions& opts = {});
/// Single-member families {⊏} with ⊏ an interpolative topogenous order.
std::vector<Syntop> enumerate_simple_syntops(const CategoryPtr& c, const EnumOptions& opts = {});
/// Every valid base, members drawn from the extensive monotone maps. Only for
/// one-object categories.
std::vector<QUBase> enumerate_all_qubases(const CategoryPtr& c, const EnumOptions& opts = {});
/// Dispatch on a kind name: closure, topogenous, qubase, syntop.
std::vector<Structure> enumerate_kind(const CategoryPtr& c, std::string_view kind, const EnumOptions& opts = {});

struct AdversarialOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = kDefaultCandidates;
};

/// Valid structures obtained by perturbing members of `pool` (all on one
/// category) and repairing the axioms upward. Deterministic given the seed.
std::vector<Structure> adversarial_candidates(std::span<const Structure> pool, const AdversarialOptions& opts);

struct CandidateVerdict {
  std::string id;
  bool continuous = false;
  std::string continuity_witness;
  Ordering ordering = Ordering::incomparable;  // lifted vs candidate
  bool on_required_side = true;
};

struct Certificate {
  std::string subject;
  Extremal direction = Extremal::coarsest;
  std::string lifted_id;
  std::string regime;  // exhaustive or adversarial
  bool lifted_valid = false;
  std::string lifted_validity_witness;
  std::string lifted_continuity_witness;
  std::vector<CandidateVerdict> candidates;
  bool pass = false;
  std::string counterexample;

  std::size_t continuous_count() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

using ContinuityFn = std::function<std::string(const Structure&)>;

/// PASS iff the lifted structure is valid and continuous and every continuous
/// candidate sits on the side `direction` requires.
Certificate certify_extremal(const Structure& lifted, std::span<const Structure> candidates,
                             const ContinuityFn& continuity, Extremal direction, std::string regime = "given");

struct CertifyOptions {
  EnumOptions enumeration;
  AdversarialOptions adversarial;
  /// Extra candidates (e.g. bundled structures) of the lifted kind.
  std::vector<Structure> extra;
};

/// Candidates on `c` of the kind of `like`: the full enumeration when every
/// carrier is within the cap, otherwise seeded perturbations of `pool`.
/// Reports the regime used.
std::vector<Structure> candidate_family(const CategoryPtr& c, const Structure& like, std::vector<Structure> pool,
                                        const CertifyOptions& opts, std::string* regime = nullptr);

/// Lifts `input` along `t` and certifies the claimed (or given) extremal
/// property against candidate_family.
Certificate certify_lift(const Structure& input, const Transformation& t, const CertifyOptions& opts,
                         std::optional<Extremal> direction = std::nullopt);

/// Along a fibration F: A -> C: among bases V on C for which F is
/// (B^F, V)-continuous, the input base B is the finest.
Certificate certify_finest_on_target(const QUBase& input, const FibrationData& fd, const CertifyOptions& opts);

/// Per object: the pointwise meet of the members is itself a member, is
/// idempotent, and the one-member base it forms is filter-equal to `b`.
Report principality_check(const QUBase& b);
/// {minimum} per object. Refused when `b` is invalid.
QUBase principal_reduction(const QUBase& b);

}  // namespace synlab
