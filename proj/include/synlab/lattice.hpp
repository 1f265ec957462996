#pragma once

// Powerset-lattice primitives: subsets as bitmasks, self-maps of the powerset
// as full tables, and binary relations on the powerset as bit matrices.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace synlab {

/// A subset of a finite carrier; bit i is the i-th carrier element.
using Mask = std::uint32_t;

inline constexpr int kMaxCarrier = 16;
inline constexpr int kMaxPowersetCarrier = 8;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr std::size_t powerset_size(int n) { return std::size_t{1} << n; }

/// "{0,2}" style rendering using element indices.
std::string format_subset(Mask m);

/// Throws InputError when a powerset table for `n` elements would exceed the cap.
void require_powerset_carrier(int n);

/// A self-map of the powerset of an `n`-element carrier, stored as a table.
class EndoMap {
 public:
  EndoMap() = default;
  EndoMap(int carrier, std::vector<Mask> table);

  static EndoMap identity(int carrier);
  /// m -> X for every m (the largest inflationary map).
  static EndoMap top(int carrier);

  int carrier() const { return n_; }
  std::size_t size() const { return table_.size(); }
  Mask operator()(Mask m) const { return table_[m]; }
  void set(Mask m, Mask value) { table_[m] = value; }
  std::span<const Mask> table() const { return table_; }

  bool is_inflationary() const;
  bool is_monotone() const;
  bool is_idempotent() const;

  friend bool operator==(const EndoMap&, const EndoMap&) = default;

 private:
  int n_ = 0;
  std::vector<Mask> table_;
};

/// outer ∘ inner
EndoMap compose(const EndoMap& outer, const EndoMap& inner);
/// Pointwise intersection.
EndoMap meet(const EndoMap& a, const EndoMap& b);
/// a(m) ⊆ b(m) for all m.
bool pointwise_leq(const EndoMap& a, const EndoMap& b);

/// A relation on the powerset of an `n`-element carrier as a 2^n x 2^n bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int carrier);

  /// m ⊏ k iff m ⊆ k.
  static Relation discrete(int carrier);
  /// m ⊏ k iff u(m) ⊆ k.
  static Relation from_endomap(const EndoMap& u);
  static Relation from_pairs(int carrier, std::span<const std::pair<Mask, Mask>> pairs);

  int carrier() const { return n_; }
  bool test(Mask m, Mask k) const {
    return (bits_[m * words_ + (k >> 6)] >> (k & 63)) & 1u;
  }
  void set(Mask m, Mask k, bool value = true);

  /// Closes the relation under m' ⊆ m ⊏ k ⊆ k' ⇒ m' ⊏ k'.
  void saturate();
  /// Drops pairs with m ⊄ k.
  void restrict_to_inclusion();

  /// ⋂{k : m ⊏ k}; the full carrier when no k is related.
  Mask meet_of_row(Mask m) const;
  bool row_empty(Mask m) const;
  std::size_t count() const;

  bool subset_of(const Relation& other) const;
  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);

  /// All pairs in ascending (m, k) order.
  std::vector<std::pair<Mask, Mask>> pairs() const;

  /// Raw row words, used by interpolation checks.
  std::span<const std::uint64_t> row(Mask m) const {
    return {bits_.data() + m * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Transposed relation: result.test(k, m) == r.test(m, k).
Relation transpose(const Relation& r);

/// Image and preimage tables of a carrier map, or of any Galois pair of
/// subset maps (forward ⊣ backward).
struct SubsetTransport {
  int from = 0;
  int to = 0;
  std::vector<Mask> forward;   // indexed by subsets of the source
  std::vector<Mask> backward;  // indexed by subsets of the target

  Mask image(Mask m) const { return forward[m]; }
  Mask preimage(Mask n) const { return backward[n]; }
};

Mask image_of(std::span<const int> map, Mask m);
Mask preimage_of(std::span<const int> map, int cod_size, Mask n);
SubsetTransport transport_of_map(std::span<const int> map, int cod_size);

}  // namespace synlab
